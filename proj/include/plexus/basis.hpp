#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "plexus/errors.hpp"
#include "plexus/rational.hpp"

namespace plexus {

class BasisMonomial;

/// A unitized element iota(body): the degree-1, odd-statistics generator
/// obtained by wrapping a lower-stage basis element. Its serial number is
/// 2^serial(body).
class Monadic {
 public:
  explicit Monadic(const BasisMonomial& body);
  const BasisMonomial& body() const { return *body_; }
  int rank() const { return rank_; }

 private:
  std::shared_ptr<const BasisMonomial> body_;
  int rank_;
};

/// Canonical classical basis element: an ordered product of monadics with
/// strictly decreasing serials. The empty product is the unit element.
class BasisMonomial {
 public:
  BasisMonomial() = default;  // unit

  /// Factors must be strictly decreasing under serial order.
  static BasisMonomial from_factors(std::vector<Monadic> descending);

  const std::vector<Monadic>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int degree() const { return static_cast<int>(factors_.size()); }
  int rank() const { return rank_; }
  int parity() const { return degree() % 2 == 0 ? +1 : -1; }

 private:
  std::vector<Monadic> factors_;
  int rank_ = 0;
};

/// Serial order without materializing serials; factors compare as binary
/// numbers by highest set bit. Returns -1, 0, +1.
int compare(const BasisMonomial& a, const BasisMonomial& b);
int compare(const Monadic& a, const Monadic& b);

inline bool operator==(const BasisMonomial& a, const BasisMonomial& b) { return compare(a, b) == 0; }
inline bool operator!=(const BasisMonomial& a, const BasisMonomial& b) { return compare(a, b) != 0; }
inline bool operator<(const BasisMonomial& a, const BasisMonomial& b) { return compare(a, b) < 0; }

struct SerialOrder {
  bool operator()(const BasisMonomial& a, const BasisMonomial& b) const { return compare(a, b) < 0; }
};

BasisMonomial unit();
BasisMonomial iota_basis(const BasisMonomial& m);

/// Canonical merge of factor sequences. Sign is the Koszul permutation sign
/// (every monadic is odd); sign 0 with unit result when a factor repeats.
std::pair<int, BasisMonomial> wedge_basis(const BasisMonomial& a, const BasisMonomial& b);

inline int rank(const BasisMonomial& m) { return m.rank(); }
inline int degree(const BasisMonomial& m) { return m.degree(); }
inline int parity(const BasisMonomial& m) { return m.parity(); }

inline constexpr unsigned long kDefaultBitBudget = 1ul << 20;

/// Sum over factors of 2^serial(body). Throws BudgetExceeded when a factor's
/// serial would not fit in bit_budget bits.
Natural serial(const BasisMonomial& m, unsigned long bit_budget = kDefaultBitBudget);

/// Fast path for stage <= 4 monomials (serial < 2^16).
std::uint32_t serial_u32(const BasisMonomial& m);

/// Decode binary bits: bit k set means factor iota(from_serial(k)).
BasisMonomial from_serial(const Natural& q);
BasisMonomial from_serial(unsigned long q);

/// Hyperexponential: Exp 0 = 1, Exp(r+1) = 2^Exp(r). Defined up to r = 5.
Natural hyper_exp(int r);

/// Exp r as a machine integer; throws RankTooLarge for r >= 5.
unsigned long stage_dim(int r);

/// All Exp(r) monomials of stage r in serial order; throws RankTooLarge for r >= 5.
std::vector<BasisMonomial> enumerate_stage(int r);

enum class MonomialFormat { expr, nested_bar, serial };

std::string render(const BasisMonomial& m, MonomialFormat fmt = MonomialFormat::expr);

}  // namespace plexus
