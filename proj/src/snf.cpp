#include "milnor/snf.hpp"

#include "milnor/error.hpp"

#include <algorithm>
#include <utility>

namespace milnor {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m = zero_matrix(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix zero_matrix(std::size_t rows, std::size_t cols) { return IntMatrix(rows, IntVector(cols, BigInt(0))); }

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t m = k == 0 ? 0 : b.front().size();
  IntMatrix r = zero_matrix(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  }
  return r;
}

IntVector vec_mul(const IntVector& v, const IntMatrix& m) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  IntVector r(cols, BigInt(0));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) r[j] += v[i] * m[i][j];
  }
  return r;
}

BigInt determinant(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntVector SmithForm::diagonal() const {
  IntVector d;
  for (std::size_t i = 0; i < std::min(rows, cols); ++i) d.push_back(D[i][i]);
  return d;
}

namespace {

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) { std::swap(a[i], a[j]); }
void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  for (auto& row : a) std::swap(row[i], row[j]);
}
// row_i += c * row_j
void add_row(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& c) {
  for (std::size_t k = 0; k < a[i].size(); ++k) a[i][k] += c * a[j][k];
}
void add_col(IntMatrix& a, std::size_t i, std::size_t j, const BigInt& c) {
  for (auto& row : a) row[i] += c * row[j];
}
void negate_row(IntMatrix& a, std::size_t i) {
  for (auto& x : a[i]) x = -x;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols) {
  const std::size_t rows = a.size();
  SmithForm s;
  s.rows = rows;
  s.cols = cols;
  s.D = a;
  s.U = identity_matrix(rows);
  s.V = identity_matrix(cols);
  IntMatrix& D = s.D;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (D[i][j] != 0 && (pi == rows || abs(D[i][j]) < abs(D[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == rows) break;
      swap_rows(D, t, pi);
      swap_rows(s.U, t, pi);
      swap_cols(D, t, pj);
      swap_cols(s.V, t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (D[i][t] == 0) continue;
        BigInt q = D[i][t] / D[t][t];
        add_row(D, i, t, -q);
        add_row(s.U, i, t, -q);
        if (D[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (D[t][j] == 0) continue;
        BigInt q = D[t][j] / D[t][t];
        add_col(D, j, t, -q);
        add_col(s.V, j, t, -q);
        if (D[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Divisibility: fold an offending row into the pivot row and repeat.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (D[i][j] % D[t][t] != 0) {
            add_row(D, t, i, 1);
            add_row(s.U, t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (t < rows && t < cols && D[t][t] < 0) {
      negate_row(D, t);
      negate_row(s.U, t);
    }
  }
  if (!verify_smith(a, s)) fail(ErrorCode::InvalidArgument, "Smith normal form failed verification");
  return s;
}

bool verify_smith(const IntMatrix& a, const SmithForm& s) {
  if (s.rows != a.size()) return false;
  IntMatrix uav = s.rows == 0 ? IntMatrix{} : mat_mul(mat_mul(s.U, a), s.V);
  for (std::size_t i = 0; i < s.rows; ++i)
    for (std::size_t j = 0; j < s.cols; ++j) {
      if (uav[i][j] != s.D[i][j]) return false;
      if (i != j && s.D[i][j] != 0) return false;
    }
  IntVector d = s.diagonal();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] < 0) return false;
    if (i + 1 < d.size()) {
      if (d[i] == 0 && d[i + 1] != 0) return false;
      if (d[i] != 0 && d[i + 1] % d[i] != 0) return false;
    }
  }
  return abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
}

AbGroupPresentation AbGroupPresentation::make(std::size_t num_generators, IntMatrix relations) {
  for (const auto& r : relations)
    if (r.size() != num_generators) fail(ErrorCode::InvalidArgument, "relation length differs from generator count");
  AbGroupPresentation p;
  p.num_generators = num_generators;
  p.relations = std::move(relations);
  p.snf = smith_normal_form(p.relations, num_generators);
  return p;
}

IntVector AbGroupPresentation::invariant_factors() const {
  IntVector d = snf.diagonal();
  d.resize(num_generators, BigInt(0));
  IntVector out;
  for (const auto& x : d)
    if (x != 1) out.push_back(x);
  return out;
}

std::optional<IntVector> express_in_relators(const AbGroupPresentation& p, const IntVector& v) {
  if (v.size() != p.num_generators) fail(ErrorCode::InvalidArgument, "vector length differs from generator count");
  const SmithForm& s = p.snf;
  const std::size_t rows = p.relations.size();
  // c A = v  <=>  (c U^-1) D = v V.
  IntVector w = vec_mul(v, s.V);
  IntVector y(rows, BigInt(0));
  for (std::size_t i = 0; i < p.num_generators; ++i) {
    BigInt d = i < std::min(rows, s.cols) ? s.D[i][i] : BigInt(0);
    if (d == 0) {
      if (w[i] != 0) return std::nullopt;
      continue;
    }
    if (w[i] % d != 0) return std::nullopt;
    y[i] = w[i] / d;
  }
  IntVector c = vec_mul(y, s.U);
  IntVector back(p.num_generators, BigInt(0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < p.num_generators; ++j) back[j] += c[i] * p.relations[i][j];
  if (back != v) fail(ErrorCode::InvalidArgument, "relator expression failed verification");
  return c;
}

std::string vector_str(const IntVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

}  // namespace milnor
