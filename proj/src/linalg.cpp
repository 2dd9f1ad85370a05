#include "alcove/linalg.hpp"

#include <algorithm>
#include <cassert>

#include "alcove/error.hpp"

namespace alcove {

std::string rat_to_string(const Rational& r) {
  if (den(r) == 1) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Rational rat_from_string(const std::string& s) {
  if (s.empty()) throw domain_error("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) throw domain_error("zero denominator in rational literal");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    throw domain_error("malformed rational literal '" + s + "'");
  }
}

RatVec RatVec::unit(std::size_t n, std::size_t i) {
  RatVec v(n);
  v[i] = 1;
  return v;
}

bool RatVec::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return x == 0; });
}

RatVec RatVec::operator+(const RatVec& o) const {
  assert(size() == o.size());
  RatVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = c_[i] + o[i];
  return r;
}

RatVec RatVec::operator-(const RatVec& o) const {
  assert(size() == o.size());
  RatVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = c_[i] - o[i];
  return r;
}

RatVec RatVec::operator-() const {
  RatVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = -c_[i];
  return r;
}

RatVec RatVec::operator*(const Rational& s) const {
  RatVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = c_[i] * s;
  return r;
}

RatVec RatVec::operator/(const Rational& s) const {
  RatVec r(size());
  for (std::size_t i = 0; i < size(); ++i) r[i] = c_[i] / s;
  return r;
}

bool RatVec::operator<(const RatVec& o) const {
  return std::lexicographical_compare(c_.begin(), c_.end(), o.c_.begin(), o.c_.end());
}

Rational RatVec::dot(const RatVec& o) const {
  assert(size() == o.size());
  Rational s = 0;
  for (std::size_t i = 0; i < size(); ++i) s += c_[i] * o[i];
  return s;
}

RatMat RatMat::identity(std::size_t n) {
  RatMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMat RatMat::operator*(const RatMat& o) const {
  assert(cols_ == o.rows_);
  RatMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += x * o(k, j);
    }
  return r;
}

RatVec RatMat::operator*(const RatVec& v) const {
  assert(cols_ == v.size());
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

RatMat RatMat::operator*(const Rational& s) const {
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) * s;
  return r;
}

RatMat RatMat::operator+(const RatMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) + o(i, j);
  return r;
}

RatMat RatMat::operator-(const RatMat& o) const {
  assert(rows_ == o.rows_ && cols_ == o.cols_);
  RatMat r(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j) - o(i, j);
  return r;
}

RatMat RatMat::transposed() const {
  RatMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RatVec RatMat::row(std::size_t i) const {
  RatVec r(cols_);
  for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
  return r;
}

RatVec RatMat::col(std::size_t j) const {
  RatVec r(rows_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
  return r;
}

Rational inner(const RatMat& gram, const RatVec& x, const RatVec& y) {
  if (x.size() != gram.rows() || y.size() != gram.cols())
    throw domain_error("inner: dimension mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Rational t = 0;
    for (std::size_t j = 0; j < y.size(); ++j) t += gram(i, j) * y[j];
    s += x[i] * t;
  }
  return s;
}

namespace {

// Clears denominators row by row so elimination can run over integers.
std::vector<std::vector<BigInt>> cleared_rows(const RatMat& A, const RatVec& b) {
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<BigInt>> M(m, std::vector<BigInt>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, den(A(i, j)));
    l = lcm(l, den(b[i]));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = A(i, j);
      M[i][j] = num(x) * (l / den(x));
    }
    M[i][n] = num(b[i]) * (l / den(b[i]));
  }
  return M;
}

}  // namespace

LinearSolve solve_linear(const RatMat& A, const RatVec& b) {
  if (A.rows() != b.size()) throw domain_error("solve_linear: dimension mismatch");
  const std::size_t m = A.rows(), n = A.cols();
  auto M = cleared_rows(A, b);

  // Bareiss fraction-free elimination with column pivoting.
  std::vector<std::size_t> pivot_col;
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = c + 1; j <= n; ++j) {
        BigInt t = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        assert(t % prev == 0);
        M[i][j] = t / prev;
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    pivot_col.push_back(c);
    ++r;
  }

  for (std::size_t i = r; i < m; ++i)
    if (M[i][n] != 0) return {LinearSolve::Status::no_solution, RatVec()};
  if (r < n) return {LinearSolve::Status::underdetermined, RatVec()};

  RatVec x(n);
  for (std::size_t k = r; k-- > 0;) {
    std::size_t c = pivot_col[k];
    Rational s = Rational(M[k][n]);
    for (std::size_t j = c + 1; j < n; ++j) s -= Rational(M[k][j]) * x[j];
    x[c] = s / Rational(M[k][c]);
  }
  return {LinearSolve::Status::unique, x};
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& M) {
  const std::size_t m = M.size();
  if (m == 0) return {};
  const std::size_t n = M[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && M[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(M[p], M[r]);
    Rational inv = Rational(1) / M[r][c];
    for (std::size_t j = c; j < n; ++j) M[r][j] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || M[i][c] == 0) continue;
      Rational f = M[i][c];
      for (std::size_t j = c; j < n; ++j) M[i][j] -= f * M[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

AffineSubspace solve_affine(const RatMat& A, const RatVec& b) {
  if (A.rows() != b.size()) throw domain_error("solve_affine: dimension mismatch");
  const std::size_t m = A.rows(), n = A.cols();
  std::vector<std::vector<Rational>> M(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
    M[i][n] = b[i];
  }
  auto pivots = rref(M);
  if (!pivots.empty() && pivots.back() == n) return {};  // inconsistent

  AffineSubspace s;
  s.empty = false;
  s.point = RatVec(n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    is_pivot[pivots[k]] = true;
    s.point[pivots[k]] = M[k][n];
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    RatVec dir(n);
    dir[c] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) dir[pivots[k]] = -M[k][c];
    s.basis.push_back(std::move(dir));
  }
  return s;
}

std::size_t rank(const RatMat& A) {
  std::vector<std::vector<Rational>> M(A.rows(), std::vector<Rational>(A.cols()));
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) M[i][j] = A(i, j);
  return rref(M).size();
}

RatMat inverse(const RatMat& A) {
  if (A.rows() != A.cols()) throw domain_error("inverse: matrix not square");
  const std::size_t n = A.rows();
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A(i, j);
    M[i][n + i] = 1;
  }
  auto pivots = rref(M);
  if (pivots.size() < n || pivots.back() >= n) throw domain_error("inverse: singular matrix");
  RatMat R(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) R(i, j) = M[i][n + j];
  return R;
}

Rational det(const RatMat& A) {
  if (A.rows() != A.cols()) throw domain_error("det: matrix not square");
  const std::size_t n = A.rows();
  if (n == 0) return 1;

  // Clear denominators per row, run integer Bareiss, divide the scales back out.
  RatVec zero(n);
  auto M = cleared_rows(A, zero);
  Rational scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, den(A(i, j)));
    scale *= Rational(l);
  }
  int sgn = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && M[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(M[p], M[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = M[k][k] * M[i][j] - M[i][k] * M[k][j];
        assert(t % prev == 0);
        M[i][j] = t / prev;
      }
      M[i][k] = 0;
    }
    prev = M[k][k];
  }
  return Rational(M[n - 1][n - 1] * sgn) / scale;
}

}  // namespace alcove
