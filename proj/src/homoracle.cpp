#include "strig/homoracle.hpp"

#include <map>
#include <stdexcept>
#include <tuple>

#include <gmpxx.h>

namespace strig {

TwoTermComplex presentationComplex(const Algebra& a, const ClosureShape& shape) {
  TwoTermComplex t;
  std::vector<int> upperSlot(shape.points.size(), -1);
  std::vector<int> lowerSlot(shape.points.size(), -1);
  for (const IntermediatePoint& p : shape.points) {
    if (p.kind == PointKind::Upper) {
      upperSlot[p.index] = static_cast<int>(t.deg0.size());
      t.deg0.push_back(p.vertex);
    } else {
      lowerSlot[p.index] = static_cast<int>(t.degMinus1.size());
      t.degMinus1.push_back(p.vertex);
    }
  }
  for (std::size_t fi = 0; fi < shape.factors.size(); ++fi) {
    const DirectedFactor& f = shape.factors[fi];
    int upIdx = f.inverse ? static_cast<int>(fi) + 1 : static_cast<int>(fi);
    int lowIdx = f.inverse ? static_cast<int>(fi) : static_cast<int>(fi) + 1;
    if (upperSlot[upIdx] < 0 || lowerSlot[lowIdx] < 0)
      throw std::logic_error("factor endpoints do not alternate");
    DiffEntry e;
    e.to0 = upperSlot[upIdx];
    e.fromM = lowerSlot[lowIdx];
    e.path = f.direct;
    t.diff.push_back(std::move(e));
  }
  return t;
}

TwoTermComplex stalkZero(int vertex) {
  TwoTermComplex t;
  t.deg0.push_back(vertex);
  return t;
}

TwoTermComplex stalkMinusOne(int vertex) {
  TwoTermComplex t;
  t.degMinus1.push_back(vertex);
  return t;
}

std::vector<std::vector<int>> vanishingMatrix(const Algebra& a, const TwoTermComplex& c,
                                              const TwoTermComplex& d) {
  // Row basis: Hom(c^{-1}, d^0) componentwise, one row per nonzero path
  // from a deg0 summand of d to a degMinus1 summand of c.
  std::map<std::tuple<int, int, std::vector<int>>, int> rowId;
  int rows = 0;
  for (int i = 0; i < static_cast<int>(c.degMinus1.size()); ++i) {
    for (int k = 0; k < static_cast<int>(d.deg0.size()); ++k) {
      for (const Path& p : a.paths(d.deg0[k], c.degMinus1[i]))
        rowId[{i, k, p.arrows}] = rows++;
    }
  }

  std::size_t cols = 0;
  for (int i = 0; i < static_cast<int>(c.degMinus1.size()); ++i)
    for (int j = 0; j < static_cast<int>(d.degMinus1.size()); ++j)
      cols += a.paths(d.degMinus1[j], c.degMinus1[i]).size();
  for (int u = 0; u < static_cast<int>(c.deg0.size()); ++u)
    for (int k = 0; k < static_cast<int>(d.deg0.size()); ++k)
      cols += a.paths(d.deg0[k], c.deg0[u]).size();

  std::vector<std::vector<int>> m(rows, std::vector<int>(cols, 0));
  int col = 0;

  auto addEntry = [&](int i, int k, std::vector<int> arrows, int value) {
    if (a.inIdeal(arrows)) return;
    auto it = rowId.find(std::make_tuple(i, k, std::move(arrows)));
    if (it == rowId.end()) throw std::logic_error("composite path missing from row basis");
    m[it->second][col] += value;
  };

  // X columns: components of Hom(c^{-1}, d^{-1}), pushed forward along the
  // differential of d.
  for (int i = 0; i < static_cast<int>(c.degMinus1.size()); ++i) {
    for (int j = 0; j < static_cast<int>(d.degMinus1.size()); ++j) {
      for (const Path& x : a.paths(d.degMinus1[j], c.degMinus1[i])) {
        for (const DiffEntry& e : d.diff) {
          if (e.fromM != j) continue;
          std::vector<int> arrows = e.path.arrows;
          arrows.insert(arrows.end(), x.arrows.begin(), x.arrows.end());
          addEntry(i, e.to0, std::move(arrows), -1);
        }
        ++col;
      }
    }
  }
  // Y columns: components of Hom(c^0, d^0), pulled back along the
  // differential of c.
  for (int u = 0; u < static_cast<int>(c.deg0.size()); ++u) {
    for (int k = 0; k < static_cast<int>(d.deg0.size()); ++k) {
      for (const Path& y : a.paths(d.deg0[k], c.deg0[u])) {
        for (const DiffEntry& e : c.diff) {
          if (e.to0 != u) continue;
          std::vector<int> arrows = y.arrows;
          arrows.insert(arrows.end(), e.path.arrows.begin(), e.path.arrows.end());
          addEntry(e.fromM, k, std::move(arrows), 1);
        }
        ++col;
      }
    }
  }
  return m;
}

int rankExact(const std::vector<std::vector<int>>& m) {
  if (m.empty() || m.front().empty()) return 0;
  std::size_t rows = m.size();
  std::size_t cols = m.front().size();
  std::vector<std::vector<mpz_class>> w(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = m[i][j];

  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && w[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(w[r], w[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class num = w[r][c] * w[i][j] - w[i][c] * w[r][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        w[i][j] = q;
      }
      w[i][c] = 0;
    }
    prev = w[r][c];
    ++r;
  }
  return static_cast<int>(r);
}

int rankMod(const std::vector<std::vector<int>>& m, int p) {
  if (m.empty() || m.front().empty()) return 0;
  std::size_t rows = m.size();
  std::size_t cols = m.front().size();
  std::vector<std::vector<int>> w(rows, std::vector<int>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) w[i][j] = ((m[i][j] % p) + p) % p;

  auto invMod = [p](int x) {
    int result = 1;
    int base = x % p;
    for (int e = p - 2; e > 0; e >>= 1) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
    }
    return result;
  };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && w[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(w[r], w[piv]);
    int inv = invMod(w[r][c]);
    for (std::size_t j = c; j < cols; ++j) w[r][j] = w[r][j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || w[i][c] == 0) continue;
      int f = w[i][c];
      for (std::size_t j = c; j < cols; ++j) w[i][j] = ((w[i][j] - f * w[r][j]) % p + p) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

long long detExact(const std::vector<std::vector<int>>& m) {
  std::size_t n = m.size();
  if (n == 0) return 1;
  if (m.front().size() != n) throw std::logic_error("determinant of non-square matrix");
  std::vector<std::vector<mpz_class>> w(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i][j] = m[i][j];

  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t r = 0; r + 1 < n; ++r) {
    std::size_t piv = r;
    while (piv < n && w[piv][r] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != r) {
      std::swap(w[r], w[piv]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = r + 1; j < n; ++j) {
        mpz_class num = w[r][r] * w[i][j] - w[i][r] * w[r][j];
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        w[i][j] = q;
      }
      w[i][r] = 0;
    }
    prev = w[r][r];
  }
  mpz_class det = sign * w[n - 1][n - 1];
  if (!det.fits_slong_p()) throw std::overflow_error("determinant exceeds long long");
  return det.get_si();
}

bool homShiftVanishes(const Algebra& a, const TwoTermComplex& c, const TwoTermComplex& d) {
  std::vector<std::vector<int>> m = vanishingMatrix(a, c, d);
  if (m.empty()) return true;
  if (m.front().empty()) return false;
  return rankExact(m) == static_cast<int>(m.size());
}

bool oracleSupportVanishes(const Algebra& a, int e, const TwoTermComplex& d) {
  return homShiftVanishes(a, stalkMinusOne(e), d);
}

}  // namespace strig
