#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "plexus/errors.hpp"
#include "plexus/rational.hpp"

namespace plexus {

/// Column-major sparse matrix with exact rational entries; rows sorted
/// within each column. Stage operators are one-or-few entries per column,
/// so this is the working representation for everything large.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(long rows, long cols) : rows_(rows), cols_(cols), data_(cols) {}

  static SparseMat identity(long n);

  long rows() const { return rows_; }
  long cols() const { return cols_; }
  const std::vector<std::pair<long, Rational>>& column(long c) const { return data_[c]; }

  void set(long r, long c, const Rational& v);
  /// Entries may be pushed in any row order; call finalize() before use.
  void push(long r, long c, const Rational& v) { data_[c].emplace_back(r, v); }
  void finalize();

  Rational at(long r, long c) const;
  long nnz() const;
  bool is_zero() const;
  Rational trace() const;
  Rational frobenius_squared() const;

  SparseMat transpose() const;
  friend SparseMat operator+(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator-(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator*(const SparseMat& a, const SparseMat& b);
  friend SparseMat operator*(const Rational& c, const SparseMat& a);
  bool operator==(const SparseMat& o) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  /// y := this * x for sparse x given as (index, value) pairs.
  std::vector<std::pair<long, Rational>> apply_sparse(
      const std::vector<std::pair<long, Rational>>& x) const;

  /// True when every column and every row holds exactly one entry of value +-1.
  bool is_signed_permutation() const;

 private:
  long rows_ = 0, cols_ = 0;
  std::vector<std::vector<std::pair<long, Rational>>> data_;
};

SparseMat commutator(const SparseMat& a, const SparseMat& b);

/// Verifies prod_i (A - roots[i]*I) = 0 exactly, column by column.
bool annihilated_by(const SparseMat& a, const std::vector<Rational>& roots);

}  // namespace plexus
