#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "plexus/ratmat.hpp"
#include "plexus/report.hpp"

namespace plexus {

enum class SignatureMode {
  compact_i_33,  // g = diag(+,+,+,-,-,-); gamma^{65} is compact, the quantized i
  alt            // g = diag(+,+,+,-,+,-); comparison mode, see build notes
};

std::string to_string(SignatureMode mode);

/// The six-dimensional quadratic space acting on 8-dimensional real chiral
/// spinors. gammas satisfy {gamma^a, gamma^b} = 2 g^{ab}; the Lie generators
/// L_{ab} = [gamma_a, gamma_b]/4 close with unit structure constants, while
/// the atom operators use the plain products gamma_a gamma_b (squares +-1).
class YangRep {
 public:
  SignatureMode mode;
  std::array<int, 6> g;          // diagonal metric entries, index 0..5 for 1..6
  std::array<RatMat, 6> gamma;   // gamma^n, integer entries

  RatMat gamma_lower(int a) const;                    // g_aa gamma^a
  const RatMat& generator(int a, int b) const;        // L_{ab}, a<b, 1-based
  RatMat generator_signed(int a, int b) const;        // antisymmetric extension
  RatMat generator_upper(int a, int b) const;         // indices raised with g
  RatMat product(int a, int b) const;                 // gamma_a gamma_b, lowered
  RatMat product_upper(int a, int b) const;           // gamma^a gamma^b

  std::array<std::array<RatMat, 7>, 7> gen_cache;     // [a][b], a<b, 1-based
};

YangRep build_yang_rep(SignatureMode mode = SignatureMode::compact_i_33);

/// All commutators [L_{n'n}, L_{m'm}] against the orthogonal structure
/// constants with the diagonal metric, plus Jacobi.
CheckReport structure_check(const YangRep& rep, std::uint64_t seed = 0);

struct KillingResult {
  RatMat form;  // 15x15
  bool nondegenerate = false;
  Signature signature;
  CheckReport report;
};

KillingResult killing_form(const YangRep& rep);

/// gamma^top = gamma^6...gamma^1 splits the spinor space into two
/// 4-dimensional real chiral eigenspaces with gamma^{4321} = -+ gamma^{65}.
struct ChiralSplit {
  RatMat top;
  RatMat plus_basis;   // 8x4
  RatMat minus_basis;  // 8x4
  CheckReport report;
};

ChiralSplit chiral_split(const YangRep& rep);

/// Atoms of the orbital variables: dx^m = X gamma^{m5}, dp_m = E gamma_{m6},
/// dQi = gamma^{65}, dL_{nm} = h gamma_{nm} (all plain gamma products).
struct OrbitalAtoms {
  Rational chrone;  // X
  Rational erge;    // E
  Rational h;
  std::array<RatMat, 5> dx;        // index 1..4
  std::array<RatMat, 5> dp;        // index 1..4
  RatMat dqi;
  std::array<std::array<RatMat, 7>, 7> dl;  // [n][m], n != m, 1-based
  CheckReport report;
};

OrbitalAtoms orbital_atoms(const YangRep& rep, const Rational& chrone = 1,
                           const Rational& erge = 1, const Rational& h = 1);

/// The 6x6 antisymmetric array of atoms with x/X and p/E borders, as a
/// labeled text table.
std::string yang_matrix_layout(const OrbitalAtoms& atoms);

struct PlaneReport {
  std::vector<Rational> q1, q2;  // plane basis: Q1 and J Q1
  CheckReport report;
};

/// Plane spanned by (Q1, J Q1) for a complex structure J; verifies
/// J-invariance and that the generators commuting with gamma^{65} carry
/// J-planes to J-planes. Throws NotAComplexStructure when J^2 != -1.
PlaneReport invariant_planes(const YangRep& rep, const RatMat& j,
                             const std::vector<Rational>& q1);

}  // namespace plexus
