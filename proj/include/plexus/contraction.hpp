#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plexus/ratmat.hpp"
#include "plexus/report.hpp"
#include "plexus/sparse.hpp"
#include "plexus/yang.hpp"

namespace plexus {

/// Sum over all N slots of the cell operator on the N-fold tensor power;
/// exact rationals, dimension 8^N. Throws TooLarge for N > 4.
SparseMat cumulate_exact(const RatMat& x, int n_cells);

/// [Sigma x, Sigma y] = Sigma [x, y], exactly.
CheckReport lie_hom_check(const RatMat& x, const RatMat& y, int n_cells);

/// k-flip sector of the cumulant Qi = (1/N) Sigma dQi over commuting
/// copies: magnitude |N-2k|/N, level multiplicity binomial(N,k) in units of
/// the per-cell plane degeneracy.
struct PolarizedSector {
  long k = 0;
  Rational magnitude;
  Natural multiplicity;
};

std::vector<PolarizedSector> qi_spectrum(long n_cells);

/// Distinct |eigenvalue| levels with their total complex multiplicities,
/// derived from the tensor cumulant itself: exact annihilating polynomial
/// plus exact traces through the Vandermonde system.
struct SpectrumLevels {
  std::vector<std::pair<Rational, Natural>> levels;  // (magnitude, multiplicity)
};

SpectrumLevels tensor_qi_eigenstructure(const SparseMat& sum_dqi, long n_cells);

/// Combinatorial side folded to distinct magnitudes, multiplicities scaled
/// by the per-cell plane degeneracy 4^N, for comparison with the tensor side.
SpectrumLevels qi_spectrum_levels(long n_cells);

struct BandCensus {
  long n_cells = 0;
  long levels = 0;          // levels with |N-2k|/N > 1 - N^{-1/2}
  long expected = 0;        // ceil(sqrt(N)/2)
  double band_width = 0.0;  // N^{-1/2}
  bool ok = false;          // |levels - expected| <= 1
};

BandCensus band_census(long n_cells);

/// Exact cell-level commutator identities and the power-constant triple
/// ||[x,x]|| : ||[x,p]|| : ||[p,p]|| = hbar/W : hbar : hbar W, with
/// X^mu = X Sigma L^{mu5}, P^mu = (E/N) Sigma L^{mu6}, Qi = (1/N) Sigma L^{65}
/// over the unit-structure-constant generators.
struct ScalingLedger {
  long n_cells = 0;
  Rational power_constant;  // W = E / (N X)
  Rational hbar;            // E X
  Rational bound_xx, bound_xp, bound_pp;
  Rational xp_qi_coefficient;  // [X^1, P^1] = coeff * hbar * Qi
  CheckReport report;
};

ScalingLedger commutator_ledger(const YangRep& rep, const Rational& chrone, const Rational& erge,
                                long n_cells);

struct SweepPolicy {
  enum class Kind { band, fully_polarized, custom } kind = Kind::band;
  long custom_cap = 0;

  long cap(long n_cells) const;
};

struct SweepRow {
  long n_cells = 0;
  double power_constant = 0.0;
  double r1 = 0.0;  // max over the sector cap of 1 - ((N-2k)/N)^2
  double r2 = 0.0;  // W(N)
  long band_levels = 0;
  double band_width = 0.0;
};

struct FitResult {
  std::string quantity;
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  FitResult fit_r1;
  FitResult fit_r2;
};

/// Deviations of the contracted relations from the Heisenberg-Poincare
/// targets on polarized sectors, with log-log fits of the residuals.
SweepResult contraction_sweep(const std::vector<long>& n_values,
                              SweepPolicy policy = {},
                              const Rational& chrone = 1, const Rational& erge = 1);

std::string sweep_csv(const SweepResult& s);

FitResult loglog_fit(const std::string& quantity, const std::vector<double>& x,
                     const std::vector<double>& y);

}  // namespace plexus
