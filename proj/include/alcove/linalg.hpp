#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "alcove/rational.hpp"

namespace alcove {

// Coordinate vector over Q. Coordinates are in the simple-root basis unless a
// function documents otherwise.
class RatVec {
 public:
  RatVec() = default;
  explicit RatVec(std::size_t n) : c_(n) {}
  RatVec(std::initializer_list<Rational> init) : c_(init) {}
  explicit RatVec(std::vector<Rational> coords) : c_(std::move(coords)) {}

  static RatVec unit(std::size_t n, std::size_t i);

  std::size_t size() const { return c_.size(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  RatVec operator+(const RatVec& o) const;
  RatVec operator-(const RatVec& o) const;
  RatVec operator-() const;
  RatVec operator*(const Rational& s) const;
  RatVec operator/(const Rational& s) const;

  bool operator==(const RatVec& o) const { return c_ == o.c_; }
  bool operator!=(const RatVec& o) const { return c_ != o.c_; }
  // Lexicographic; used only for canonical ordering of outputs.
  bool operator<(const RatVec& o) const;

  // Plain coordinate dot product (no Gram pairing).
  Rational dot(const RatVec& o) const;

 private:
  std::vector<Rational> c_;
};

class RatMat {
 public:
  RatMat() = default;
  RatMat(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  RatMat operator*(const RatMat& o) const;
  RatVec operator*(const RatVec& v) const;
  RatMat operator*(const Rational& s) const;
  RatMat operator+(const RatMat& o) const;
  RatMat operator-(const RatMat& o) const;
  RatMat transposed() const;

  bool operator==(const RatMat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const RatMat& o) const { return !(*this == o); }

  RatVec row(std::size_t i) const;
  RatVec col(std::size_t j) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Symmetric bilinear form x^T G y. Dimensions must match G.
Rational inner(const RatMat& gram, const RatVec& x, const RatVec& y);

struct LinearSolve {
  enum class Status { unique, no_solution, underdetermined };
  Status status;
  RatVec solution;  // valid only when status == unique
};

// Exact solve of A x = b by fraction-free (Bareiss) elimination over cleared
// integer rows; rank deficiency is reported through the status.
LinearSolve solve_linear(const RatMat& A, const RatVec& b);

// Full solution set of A x = b as {point + span(basis)}.
struct AffineSubspace {
  bool empty = true;
  RatVec point;
  std::vector<RatVec> basis;
  std::size_t dim() const { return basis.size(); }
};

AffineSubspace solve_affine(const RatMat& A, const RatVec& b);

std::size_t rank(const RatMat& A);

// Throws domain_error on singular input.
RatMat inverse(const RatMat& A);

Rational det(const RatMat& A);

}  // namespace alcove
