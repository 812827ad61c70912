#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "strig/catalog.hpp"
#include "strig/report.hpp"

namespace {

using nlohmann::ordered_json;

// Unreadable input is an invocation problem, not a domain one.
struct FileError : std::runtime_error {
  explicit FileError(const std::string& path)
      : std::runtime_error("cannot read " + path) {}
};

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw FileError(path);
  return buf.str();
}

strig::Algebra loadAlgebra(const std::string& path) {
  return strig::parseAlgebra(readFile(path));
}

int domainFailure(const std::string& line) {
  std::cerr << "error: " << line << "\n";
  return 1;
}

ordered_json presentationJson(const strig::Algebra& a) {
  ordered_json doc;
  doc["name"] = a.name();
  doc["vertices"] = ordered_json::array();
  for (int v = 0; v < a.vertexCount(); ++v) doc["vertices"].push_back(a.vertexName(v));
  doc["arrows"] = ordered_json::array();
  for (const strig::Arrow& arr : a.arrows()) {
    ordered_json entry;
    entry["name"] = arr.name;
    entry["source"] = a.vertexName(arr.source);
    entry["target"] = a.vertexName(arr.target);
    doc["arrows"].push_back(std::move(entry));
  }
  doc["relations"] = ordered_json::array();
  for (const auto& rel : a.relations()) {
    ordered_json names = ordered_json::array();
    for (int arrow : rel) names.push_back(a.arrow(arrow).name);
    doc["relations"].push_back(std::move(names));
  }
  return doc;
}

int cmdValidate(const std::string& file, bool jsonMode) {
  strig::Algebra a = strig::Algebra::fromJson(readFile(file));
  const strig::ValidationReport& report = a.validation();
  if (jsonMode) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["ok"] = report.ok();
    doc["issues"] = ordered_json::array();
    for (const strig::ValidationIssue& issue : report.issues) {
      ordered_json entry;
      entry["code"] = issue.code;
      entry["detail"] = issue.detail;
      doc["issues"].push_back(std::move(entry));
    }
    if (report.ok()) doc["dimension"] = a.dimension();
    std::cout << doc.dump(1) << "\n";
  } else if (report.ok()) {
    std::cout << "ok: " << a.name() << ": " << a.vertexCount() << " vertices, "
              << a.arrows().size() << " arrows, dimension " << a.dimension() << "\n";
  } else {
    for (const strig::ValidationIssue& issue : report.issues)
      std::cout << "issue: " << issue.code << ": " << issue.detail << "\n";
  }
  if (report.ok()) return 0;
  const strig::ValidationIssue& first = report.issues.front();
  return domainFailure(first.code + ": " + first.detail);
}

int cmdStrings(const std::string& file, int maxLen, bool jsonMode) {
  strig::Algebra a = loadAlgebra(file);
  std::vector<strig::StringWord> words = strig::enumerateStrings(a, maxLen);
  if (jsonMode) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["maxLen"] = maxLen;
    doc["count"] = words.size();
    doc["strings"] = ordered_json::array();
    for (const strig::StringWord& w : words) {
      ordered_json entry;
      entry["length"] = w.length();
      entry["word"] = strig::renderWord(a, w);
      doc["strings"].push_back(std::move(entry));
    }
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << a.name() << ": " << words.size() << " strings of length <= " << maxLen
              << "\n";
    for (const strig::StringWord& w : words)
      std::cout << "  len " << w.length() << ": " << strig::renderWord(a, w) << "\n";
  }
  return 0;
}

int cmdRigid(const std::string& file, int maxLen, bool jsonMode) {
  strig::Algebra a = loadAlgebra(file);
  std::vector<strig::RigidObject> universe = strig::rigidObjects(a, maxLen);
  if (jsonMode) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["maxLen"] = maxLen;
    doc["count"] = universe.size();
    doc["objects"] = ordered_json::array();
    for (const strig::RigidObject& obj : universe) {
      ordered_json entry;
      entry["label"] = obj.label;
      entry["kind"] = obj.kind == strig::ObjectKind::String ? "string" : "shifted";
      entry["g"] = obj.g;
      if (obj.kind == strig::ObjectKind::String) {
        entry["display"] = strig::renderWord(a, obj.minimalRep);
        entry["hook"] = strig::renderWord(a, obj.closure);
      } else {
        entry["vertex"] = a.vertexName(obj.shiftVertex);
      }
      ordered_json supp = ordered_json::array();
      for (int v = 0; v < a.vertexCount(); ++v)
        if (obj.support[v]) supp.push_back(a.vertexName(v));
      entry["support"] = std::move(supp);
      doc["objects"].push_back(std::move(entry));
    }
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << a.name() << ": " << universe.size()
              << " rigid objects from strings of length <= " << maxLen << "\n";
    for (const strig::RigidObject& obj : universe) {
      std::cout << "  " << obj.label << "  g=[";
      for (size_t i = 0; i < obj.g.size(); ++i)
        std::cout << (i ? "," : "") << obj.g[i];
      std::cout << "]";
      if (obj.kind == strig::ObjectKind::String)
        std::cout << "  " << strig::renderWord(a, obj.minimalRep);
      std::cout << "\n";
    }
  }
  return 0;
}

int cmdTautilt(const std::string& file, int maxLen, bool jsonMode) {
  strig::Algebra a = loadAlgebra(file);
  if (maxLen < 0) {
    strig::HassePoset h = strig::buildHasse(a);
    if (jsonMode)
      std::cout << strig::reportJson(a, h);
    else
      std::cout << strig::reportText(a, h);
    return 0;
  }
  std::vector<strig::RigidObject> universe = strig::rigidObjects(a, maxLen);
  std::vector<strig::SupportTauTiltingPair> pairs =
      strig::supportTauTiltingPairs(a, universe);
  if (jsonMode) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["maxLen"] = maxLen;
    doc["pairCount"] = pairs.size();
    doc["pairs"] = ordered_json::array();
    for (const strig::SupportTauTiltingPair& p : pairs) {
      ordered_json members = ordered_json::array();
      for (int m : p.members) members.push_back(universe[m].label);
      doc["pairs"].push_back(std::move(members));
    }
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << a.name() << ": " << pairs.size() << " pairs from strings of length <= "
              << maxLen << " (completeness not certified)\n";
    for (const strig::SupportTauTiltingPair& p : pairs) {
      std::cout << "  {";
      for (size_t k = 0; k < p.members.size(); ++k)
        std::cout << (k ? ", " : "") << universe[p.members[k]].label;
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmdHasse(const std::string& file, const std::string& format, int cap) {
  strig::Algebra a = loadAlgebra(file);
  strig::HassePoset h = strig::buildHasse(a, -1, cap);
  if (format == "dot")
    std::cout << strig::renderDot(a, h);
  else
    std::cout << strig::reportJson(a, h);
  return 0;
}

int cmdOracleCheck(const std::string& file, int maxLen, bool jsonMode) {
  strig::Algebra a = loadAlgebra(file);
  strig::CrossCheckReport r = strig::oracleCrossCheck(a, maxLen);
  if (jsonMode) {
    ordered_json doc;
    doc["algebra"] = a.name();
    doc["maxLen"] = maxLen;
    doc["classCount"] = r.classCount;
    doc["pairChecks"] = r.pairChecks;
    doc["supportChecks"] = r.supportChecks;
    doc["matrixCount"] = r.matrixCount;
    doc["discrepancies"] = r.discrepancies;
    doc["rankDisagreements"] = r.rankDisagreements;
    doc["ok"] = r.ok();
    std::cout << doc.dump(1) << "\n";
  } else {
    std::cout << a.name() << ": " << r.classCount << " classes, " << r.pairChecks
              << " pair checks, " << r.supportChecks << " support checks, "
              << r.matrixCount << " matrices\n";
    for (const std::string& line : r.discrepancies)
      std::cout << "  disagreement: " << line << "\n";
    for (const std::string& line : r.rankDisagreements)
      std::cout << "  rank mismatch: " << line << "\n";
    if (r.ok()) std::cout << "  combinatorics and linear algebra agree\n";
  }
  if (r.ok()) return 0;
  return domainFailure("OracleMismatch: " +
                       std::to_string(r.discrepancies.size() + r.rankDisagreements.size()) +
                       " disagreements at maxLen " + std::to_string(maxLen));
}

int goldenDiff(const std::string& name, bool jsonMode) {
  std::vector<std::string> issues = strig::compareWithGolden(name);
  int pairCount = strig::goldenResults(name).pairCount;
  if (jsonMode) {
    ordered_json doc;
    doc["algebra"] = name;
    doc["pairCount"] = pairCount;
    doc["ok"] = issues.empty();
    doc["issues"] = issues;
    std::cout << doc.dump(1) << "\n";
  } else if (issues.empty()) {
    std::cout << "ok: " << name << ": " << pairCount << " pairs match published results\n";
  } else {
    for (const std::string& line : issues)
      std::cout << "diff: " << name << ": " << line << "\n";
  }
  if (issues.empty()) return 0;
  return domainFailure("GoldenMismatch: " + name + ": " + std::to_string(issues.size()) +
                       " disagreements");
}

int cmdCatalog(const std::string& name, bool golden, bool jsonMode) {
  if (name.empty()) {
    if (golden) {
      int rc = 0;
      for (const std::string& entry : strig::catalogNames())
        rc = std::max(rc, goldenDiff(entry, jsonMode));
      return rc;
    }
    if (jsonMode) {
      ordered_json doc = strig::catalogNames();
      std::cout << doc.dump(1) << "\n";
    } else {
      for (const std::string& entry : strig::catalogNames()) std::cout << entry << "\n";
    }
    return 0;
  }
  if (golden) return goldenDiff(name, jsonMode);
  strig::Algebra a = strig::catalogAlgebra(name);
  if (jsonMode) {
    std::cout << presentationJson(a).dump(1) << "\n";
  } else {
    std::cout << a.name() << ": " << a.vertexCount() << " vertices, " << a.arrows().size()
              << " arrows, " << a.relations().size() << " relations, dimension "
              << a.dimension() << "\n";
    for (const strig::Arrow& arr : a.arrows())
      std::cout << "  " << arr.name << ": " << a.vertexName(arr.source) << " -> "
                << a.vertexName(arr.target) << "\n";
    for (const auto& rel : a.relations()) {
      std::cout << "  relation:";
      for (int arrow : rel) std::cout << " " << a.arrow(arrow).name;
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"support tau-tilting enumeration for string algebras"};
  app.require_subcommand(1);
  app.fallthrough();

  bool jsonMode = false;
  int threads = 1;
  app.add_flag("--json", jsonMode, "structured output");
  app.add_option("--threads", threads, "worker threads (output is identical for any value)")
      ->check(CLI::PositiveNumber);

  std::string file;
  int maxLen = -1;
  int cap = 64;
  std::string format;
  std::string name;
  bool golden = false;

  CLI::App* validate = app.add_subcommand("validate", "check the string-algebra axioms");
  validate->add_option("file", file, "algebra presentation (json)")->required();

  CLI::App* strings = app.add_subcommand("strings", "list strings up to a length bound");
  strings->add_option("file", file, "algebra presentation (json)")->required();
  strings->add_option("--max-len", maxLen, "length bound")->required();

  CLI::App* rigid = app.add_subcommand("rigid", "list rigid objects up to a length bound");
  rigid->add_option("file", file, "algebra presentation (json)")->required();
  rigid->add_option("--max-len", maxLen, "length bound")->required();

  CLI::App* tautilt =
      app.add_subcommand("tautilt", "enumerate support tau-tilting pairs");
  tautilt->add_option("file", file, "algebra presentation (json)")->required();
  tautilt->add_option("--max-len", maxLen,
                      "explicit length bound (default: grow until certified complete)");

  CLI::App* hasse = app.add_subcommand("hasse", "emit the exchange quiver");
  hasse->add_option("file", file, "algebra presentation (json)")->required();
  hasse->add_option("--format", format, "dot or json")
      ->required()
      ->check(CLI::IsMember({"dot", "json"}));
  hasse->add_option("--cap", cap, "length cap for the deepening search");

  CLI::App* oracle =
      app.add_subcommand("oracle-check", "audit combinatorics against exact linear algebra");
  oracle->add_option("file", file, "algebra presentation (json)")->required();
  oracle->add_option("--max-len", maxLen, "length bound")->required();

  CLI::App* catalog = app.add_subcommand("catalog", "list or load the built-in algebras");
  catalog->add_option("name", name, "built-in algebra name");
  catalog->add_flag("--golden", golden, "recompute and diff against published results");

  try {
    app.parse(argc, argv);
    if (*validate) return cmdValidate(file, jsonMode);
    if (*strings) return cmdStrings(file, maxLen, jsonMode);
    if (*rigid) return cmdRigid(file, maxLen, jsonMode);
    if (*tautilt) return cmdTautilt(file, maxLen, jsonMode);
    if (*hasse) return cmdHasse(file, format, cap);
    if (*oracle) return cmdOracleCheck(file, maxLen, jsonMode);
    if (*catalog) return cmdCatalog(name, golden, jsonMode);
    return 2;
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const FileError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
