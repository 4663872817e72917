#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

namespace plexus {

/// Tiny dense double matrix: only used where something genuinely numeric
/// happens (one-parameter rotations); all identities stay exact elsewhere.
class DMat {
 public:
  DMat() = default;
  DMat(long rows, long cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}

  static DMat identity(long n) {
    DMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  double& operator()(long r, long c) { return a_[r * cols_ + c]; }
  double operator()(long r, long c) const { return a_[r * cols_ + c]; }

  friend DMat operator*(const DMat& x, const DMat& y) {
    DMat out(x.rows_, y.cols_);
    for (long r = 0; r < x.rows_; ++r)
      for (long k = 0; k < x.cols_; ++k) {
        double v = x(r, k);
        if (v == 0.0) continue;
        for (long c = 0; c < y.cols_; ++c) out(r, c) += v * y(k, c);
      }
    return out;
  }

  friend DMat operator*(double c, const DMat& x) {
    DMat out = x;
    for (auto& v : out.a_) v *= c;
    return out;
  }

  friend DMat operator+(const DMat& x, const DMat& y) {
    DMat out = x;
    for (long i = 0; i < out.rows_ * out.cols_; ++i) out.a_[i] += y.a_[i];
    return out;
  }

  friend DMat operator-(const DMat& x, const DMat& y) {
    DMat out = x;
    for (long i = 0; i < out.rows_ * out.cols_; ++i) out.a_[i] -= y.a_[i];
    return out;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::fabs(v));
    return m;
  }

  std::vector<double> apply(const std::vector<double>& v) const {
    std::vector<double> out(rows_, 0.0);
    for (long r = 0; r < rows_; ++r)
      for (long c = 0; c < cols_; ++c) out[r] += (*this)(r, c) * v[c];
    return out;
  }

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

/// exp(M) by scaling-and-squaring with a Taylor tail summed to machine
/// precision; adequate for the small rotation generators used here.
inline DMat expm(const DMat& m) {
  long n = m.rows();
  double norm = 0.0;
  for (long r = 0; r < n; ++r) {
    double row = 0.0;
    for (long c = 0; c < n; ++c) row += std::fabs(m(r, c));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }
  DMat x = scale * m;
  DMat result = DMat::identity(n);
  DMat term = DMat::identity(n);
  for (int k = 1; k <= 30; ++k) {
    term = (1.0 / k) * (term * x);
    result = result + term;
    if (term.max_abs() < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

}  // namespace plexus
