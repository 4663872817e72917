#include "plexus/sparse.hpp"

#include <algorithm>
#include <map>

namespace plexus {

SparseMat SparseMat::identity(long n) {
  SparseMat m(n, n);
  for (long i = 0; i < n; ++i) m.data_[i].emplace_back(i, 1);
  return m;
}

void SparseMat::set(long r, long c, const Rational& v) {
  auto& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, long row) { return e.first < row; });
  if (it != col.end() && it->first == r) {
    if (v == 0)
      col.erase(it);
    else
      it->second = v;
  } else if (v != 0) {
    col.insert(it, {r, v});
  }
}

void SparseMat::finalize() {
  for (auto& col : data_) {
    std::sort(col.begin(), col.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<long, Rational>> merged;
    for (auto& [r, v] : col) {
      if (!merged.empty() && merged.back().first == r)
        merged.back().second += v;
      else
        merged.emplace_back(r, v);
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    col = std::move(merged);
  }
}

Rational SparseMat::at(long r, long c) const {
  const auto& col = data_[c];
  auto it = std::lower_bound(col.begin(), col.end(), r,
                             [](const auto& e, long row) { return e.first < row; });
  return (it != col.end() && it->first == r) ? it->second : Rational(0);
}

long SparseMat::nnz() const {
  long n = 0;
  for (const auto& col : data_) n += static_cast<long>(col.size());
  return n;
}

bool SparseMat::is_zero() const { return nnz() == 0; }

Rational SparseMat::trace() const {
  Rational t = 0;
  for (long c = 0; c < cols_; ++c) t += at(c, c);
  return t;
}

Rational SparseMat::frobenius_squared() const {
  Rational t = 0;
  for (const auto& col : data_)
    for (const auto& [r, v] : col) t += v * v;
  return t;
}

SparseMat SparseMat::transpose() const {
  SparseMat out(cols_, rows_);
  for (long c = 0; c < cols_; ++c)
    for (const auto& [r, v] : data_[c]) out.data_[r].emplace_back(c, v);
  out.finalize();
  return out;
}

SparseMat operator+(const SparseMat& a, const SparseMat& b) {
  SparseMat out(a.rows_, a.cols_);
  for (long c = 0; c < a.cols_; ++c) {
    auto col = a.data_[c];
    col.insert(col.end(), b.data_[c].begin(), b.data_[c].end());
    out.data_[c] = std::move(col);
  }
  out.finalize();
  return out;
}

SparseMat operator-(const SparseMat& a, const SparseMat& b) { return a + (Rational(-1) * b); }

SparseMat operator*(const Rational& c, const SparseMat& a) {
  SparseMat out(a.rows_, a.cols_);
  if (c == 0) return out;
  for (long j = 0; j < a.cols_; ++j) {
    out.data_[j] = a.data_[j];
    for (auto& [r, v] : out.data_[j]) v *= c;
  }
  return out;
}

SparseMat operator*(const SparseMat& a, const SparseMat& b) {
  SparseMat out(a.rows_, b.cols_);
  std::map<long, Rational> acc;
  for (long j = 0; j < b.cols_; ++j) {
    acc.clear();
    for (const auto& [k, bv] : b.data_[j])
      for (const auto& [i, av] : a.data_[k]) acc[i] += av * bv;
    auto& col = out.data_[j];
    for (auto& [i, v] : acc)
      if (v != 0) col.emplace_back(i, v);
  }
  return out;
}

bool SparseMat::operator==(const SparseMat& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<Rational> SparseMat::apply(const std::vector<Rational>& v) const {
  std::vector<Rational> out(rows_, Rational(0));
  for (long c = 0; c < cols_; ++c) {
    if (v[c] == 0) continue;
    for (const auto& [r, val] : data_[c]) out[r] += val * v[c];
  }
  return out;
}

std::vector<std::pair<long, Rational>> SparseMat::apply_sparse(
    const std::vector<std::pair<long, Rational>>& x) const {
  std::map<long, Rational> acc;
  for (const auto& [c, xv] : x)
    for (const auto& [r, val] : data_[c]) acc[r] += val * xv;
  std::vector<std::pair<long, Rational>> out;
  out.reserve(acc.size());
  for (auto& [r, v] : acc)
    if (v != 0) out.emplace_back(r, v);
  return out;
}

bool SparseMat::is_signed_permutation() const {
  if (rows_ != cols_) return false;
  std::vector<char> row_seen(rows_, 0);
  for (const auto& col : data_) {
    if (col.size() != 1) return false;
    const auto& [r, v] = col.front();
    if (v != 1 && v != -1) return false;
    if (row_seen[r]) return false;
    row_seen[r] = 1;
  }
  return true;
}

SparseMat commutator(const SparseMat& a, const SparseMat& b) { return a * b - b * a; }

bool annihilated_by(const SparseMat& a, const std::vector<Rational>& roots) {
  for (long j = 0; j < a.cols(); ++j) {
    std::vector<std::pair<long, Rational>> v{{j, Rational(1)}};
    for (const auto& r : roots) {
      auto w = a.apply_sparse(v);
      // w := A v - r v
      if (r != 0) {
        std::map<long, Rational> acc(w.begin(), w.end());
        for (const auto& [i, x] : v) {
          acc[i] -= r * x;
        }
        w.clear();
        for (auto& [i, x] : acc)
          if (x != 0) w.emplace_back(i, x);
      }
      v = std::move(w);
      if (v.empty()) break;
    }
    if (!v.empty()) return false;
  }
  return true;
}

}  // namespace plexus
