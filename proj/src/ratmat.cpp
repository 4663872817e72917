#include "plexus/ratmat.hpp"

#include <algorithm>

namespace plexus {

RatMat RatMat::identity(long n) {
  RatMat m(n, n);
  for (long i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RatMat::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
}

Rational RatMat::trace() const {
  Rational t = 0;
  for (long i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

RatMat RatMat::transpose() const {
  RatMat out(cols_, rows_);
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RatMat operator+(const RatMat& x, const RatMat& y) {
  RatMat out = x;
  for (long i = 0; i < out.rows_ * out.cols_; ++i) out.a_[i] += y.a_[i];
  return out;
}

RatMat operator-(const RatMat& x, const RatMat& y) {
  RatMat out = x;
  for (long i = 0; i < out.rows_ * out.cols_; ++i) out.a_[i] -= y.a_[i];
  return out;
}

RatMat operator*(const RatMat& x, const RatMat& y) {
  RatMat out(x.rows_, y.cols_);
  for (long r = 0; r < x.rows_; ++r)
    for (long k = 0; k < x.cols_; ++k) {
      const Rational& v = x(r, k);
      if (v == 0) continue;
      for (long c = 0; c < y.cols_; ++c)
        if (y(k, c) != 0) out(r, c) += v * y(k, c);
    }
  return out;
}

RatMat operator*(const Rational& c, const RatMat& x) {
  RatMat out = x;
  for (auto& v : out.a_) v *= c;
  return out;
}

std::vector<Rational> RatMat::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_, Rational(0));
  for (long r = 0; r < rows_; ++r)
    for (long c = 0; c < cols_; ++c)
      if ((*this)(r, c) != 0 && v[c] != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

long RatMat::rref() {
  long lead = 0;
  for (long r = 0; r < rows_ && lead < cols_; ++r) {
    long piv = -1;
    while (lead < cols_) {
      for (long i = r; i < rows_; ++i)
        if ((*this)(i, lead) != 0) {
          piv = i;
          break;
        }
      if (piv >= 0) break;
      ++lead;
    }
    if (lead == cols_) return r;
    if (piv != r)
      for (long c = 0; c < cols_; ++c) std::swap((*this)(piv, c), (*this)(r, c));
    Rational inv = 1 / (*this)(r, lead);
    for (long c = 0; c < cols_; ++c) (*this)(r, c) *= inv;
    for (long i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rational f = (*this)(i, lead);
      if (f == 0) continue;
      for (long c = 0; c < cols_; ++c) (*this)(i, c) -= f * (*this)(r, c);
    }
    ++lead;
  }
  return std::min(rows_, cols_);
}

RatMat commutator(const RatMat& x, const RatMat& y) { return x * y - y * x; }
RatMat anticommutator(const RatMat& x, const RatMat& y) { return x * y + y * x; }

Rational determinant(RatMat m) {
  long n = m.rows();
  Rational det = 1;
  for (long c = 0; c < n; ++c) {
    long piv = -1;
    for (long r = c; r < n; ++r)
      if (m(r, c) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != c) {
      for (long k = 0; k < n; ++k) std::swap(m(piv, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (long r = c + 1; r < n; ++r) {
      Rational f = m(r, c) * inv;
      if (f == 0) continue;
      for (long k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

long rank_of(RatMat m) { return m.rref(); }

RatMat null_space(const RatMat& m) {
  RatMat r = m;
  long rank = r.rref();
  long n = m.cols();
  // After rref each nonzero row leads with a 1 in its pivot column.
  std::vector<long> pivot_col;
  std::vector<char> is_pivot(n, 0);
  for (long row = 0; row < rank; ++row) {
    for (long c = 0; c < n; ++c)
      if (r(row, c) != 0) {
        pivot_col.push_back(c);
        is_pivot[c] = 1;
        break;
      }
  }
  RatMat basis(n, n - rank);
  long out_col = 0;
  for (long c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    basis(c, out_col) = 1;
    for (long p = 0; p < rank; ++p) basis(pivot_col[p], out_col) = -r(p, c);
    ++out_col;
  }
  return basis;
}

Signature symmetric_signature(RatMat m) {
  long n = m.rows();
  Signature sig;
  // Congruent diagonalization; when a diagonal pivot is zero but the row is
  // not, fold another row in (congruence preserves signature).
  for (long k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      long j = -1;
      for (long c = k + 1; c < n; ++c)
        if (m(k, c) != 0) {
          j = c;
          break;
        }
      if (j < 0) {
        ++sig.n_zero;
        continue;
      }
      // Folding row/column j in makes the pivot 2*m(k,j) + m(j,j); if that
      // happens to cancel, fold with the opposite sign instead.
      Rational folded = 2 * m(k, j) + m(j, j);
      Rational s = (folded != 0) ? Rational(1) : Rational(-1);
      for (long c = 0; c < n; ++c) m(k, c) += s * m(j, c);
      for (long r = 0; r < n; ++r) m(r, k) += s * m(r, j);
    }
    Rational piv = m(k, k);
    if (piv > 0)
      ++sig.n_plus;
    else
      ++sig.n_minus;
    for (long r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      Rational f = m(r, k) / piv;
      for (long c = 0; c < n; ++c) m(r, c) -= f * m(k, c);
      for (long c = 0; c < n; ++c) m(c, r) -= f * m(c, k);
    }
  }
  return sig;
}

std::vector<Rational> solve(const RatMat& m, const std::vector<Rational>& b) {
  RatMat aug(m.rows(), m.cols() + 1);
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  aug.rref();
  std::vector<Rational> x(m.cols(), Rational(0));
  for (long r = 0; r < m.rows(); ++r) {
    long lead = -1;
    for (long c = 0; c < m.cols(); ++c)
      if (aug(r, c) != 0) {
        lead = c;
        break;
      }
    if (lead < 0) {
      if (aug(r, m.cols()) != 0) throw Error("inconsistent linear system");
      continue;
    }
    x[lead] = aug(r, m.cols());
  }
  return x;
}

}  // namespace plexus
