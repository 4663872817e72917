#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "plexus/element.hpp"
#include "plexus/report.hpp"
#include "plexus/sparse.hpp"

namespace plexus {

enum class GenKind { creator, annihilator };

/// Generator label: a monadic of the stage (creator wedges by it on the
/// left, annihilator is the left derivation with Koszul sign).
struct CliffordGenerator {
  BasisMonomial index;  // degree-1 monomial of the stage
  GenKind kind;
};

/// Normal-ordered word: all creators left of annihilators, each block in
/// strictly descending mode order. Modes index the monadics of the stage.
struct CliffWord {
  std::vector<int> cre;
  std::vector<int> ann;
  friend auto operator<=>(const CliffWord&, const CliffWord&) = default;
};

/// Sum of rational-weighted normal-ordered words in the creation and
/// annihilation generators of a stage. Anticommutation rewrites preserve
/// the action, so the normal form is canonical.
class CliffordOperator {
 public:
  explicit CliffordOperator(int stage);

  static CliffordOperator zero(int stage) { return CliffordOperator(stage); }
  static CliffordOperator identity(int stage);
  static CliffordOperator creator(int stage, int mode);
  static CliffordOperator annihilator(int stage, int mode);
  /// Label form: the monadic iota(b) maps to mode serial(b).
  static CliffordOperator from_generator(int stage, const CliffordGenerator& g);

  int stage() const { return stage_; }
  int modes() const { return modes_; }
  const std::map<CliffWord, Rational>& words() const { return words_; }
  bool is_zero() const { return words_.empty(); }
  bool is_identity() const;

  CliffordOperator& operator+=(const CliffordOperator& o);
  friend CliffordOperator operator+(CliffordOperator a, const CliffordOperator& b) { return a += b; }
  friend CliffordOperator operator-(const CliffordOperator& a, const CliffordOperator& b);
  friend CliffordOperator operator*(const Rational& c, const CliffordOperator& a);
  friend CliffordOperator operator*(const CliffordOperator& a, const CliffordOperator& b);
  bool operator==(const CliffordOperator& o) const {
    return stage_ == o.stage_ && words_ == o.words_;
  }

  void add_word(const CliffWord& w, const Rational& c);

 private:
  int stage_;
  int modes_;
  std::map<CliffWord, Rational> words_;
};

int stage_modes(int stage);

/// Transpose with respect to the orthonormal classical basis, computed
/// symbolically: word reversal with creator <-> annihilator swap.
CliffordOperator transpose(const CliffordOperator& op);

Element apply(const CliffordOperator& op, const Element& a);

CliffordOperator anticommutator(const CliffordOperator& a, const CliffordOperator& b);
CliffordOperator commutator(const CliffordOperator& a, const CliffordOperator& b);

/// v (+) v' maps to gamma_v + gamma^{v'}; squares to duplex_norm * identity
/// on isotropic-complement frames.
CliffordOperator generator_from_duplex(const DuplexVector& f);

/// gamma_{w'w} := [gamma(w'), gamma(w)] / 2.
CliffordOperator spin_generator(const DuplexVector& w1, const DuplexVector& w2);

SparseMat matrix_of(const CliffordOperator& op);

/// Mode-level Fock matrices on 2^n_modes dimensions; the Yang construction
/// reuses these for the three-generator cell.
SparseMat fock_creator(int n_modes, int mode);
SparseMat fock_annihilator(int n_modes, int mode);

/// Exhaustive CAR verification at stages 1..3; stage 4 runs the symbolic
/// proof for every pair plus sampled basis-vector actions.
CheckReport car_check(int stage, std::uint64_t seed = 0, long sample_vectors = 1000);

/// Grade-2 closure under commutator with orthogonal structure constants of
/// the duplex metric, Jacobi, and Killing-form regularity.
CheckReport so_closure_check(int stage, std::uint64_t seed = 0, long sample_pairs = 200);

struct RotationReport {
  bool compact = false;
  double max_deviation = 0.0;
  bool ok = false;
};

/// exp(pi * gamma_{w'w}) must be -identity on a compact plane
/// (double-valuedness); throws NonCompactPlane when the square is +identity.
RotationReport full_rotation_check(const DuplexVector& w1, const DuplexVector& w2,
                                   double tol = 1e-12);

}  // namespace plexus
