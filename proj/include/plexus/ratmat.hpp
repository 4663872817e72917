#pragma once

#include <initializer_list>
#include <vector>

#include "plexus/errors.hpp"
#include "plexus/rational.hpp"

namespace plexus {

/// Small dense matrix over the rationals (Yang representation, Killing
/// forms, frames of eigenvectors). Row-major.
class RatMat {
 public:
  RatMat() = default;
  RatMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static RatMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  Rational& operator()(long r, long c) { return a_[r * cols_ + c]; }
  const Rational& operator()(long r, long c) const { return a_[r * cols_ + c]; }

  bool is_zero() const;
  Rational trace() const;
  RatMat transpose() const;

  friend RatMat operator+(const RatMat& x, const RatMat& y);
  friend RatMat operator-(const RatMat& x, const RatMat& y);
  friend RatMat operator*(const RatMat& x, const RatMat& y);
  friend RatMat operator*(const Rational& c, const RatMat& x);
  bool operator==(const RatMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  /// Reduced row echelon form in place; returns the rank.
  long rref();

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

RatMat commutator(const RatMat& x, const RatMat& y);
RatMat anticommutator(const RatMat& x, const RatMat& y);

Rational determinant(RatMat m);
long rank_of(RatMat m);

/// Basis of the null space, returned as columns.
RatMat null_space(const RatMat& m);

/// Signature (n_plus, n_minus, n_zero) of a symmetric matrix via congruent
/// diagonalization (exact).
struct Signature {
  long n_plus = 0, n_minus = 0, n_zero = 0;
};
Signature symmetric_signature(RatMat m);

/// Solve m x = b exactly; throws Error when inconsistent.
std::vector<Rational> solve(const RatMat& m, const std::vector<Rational>& b);

}  // namespace plexus
