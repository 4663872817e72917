#include "plexus/contraction.hpp"

#include <cmath>
#include <sstream>

namespace plexus {

SparseMat cumulate_exact(const RatMat& x, int n_cells) {
  if (n_cells < 1) throw TooLarge("cell count must be >= 1");
  if (n_cells > 4) throw TooLarge("tensor realization limited to N <= 4 (dim 8^N)");
  if (x.rows() != 8 || x.cols() != 8) throw Error("cell matrix must be 8x8");
  long dim = 1;
  for (int i = 0; i < n_cells; ++i) dim *= 8;
  SparseMat out(dim, dim);
  for (long col = 0; col < dim; ++col) {
    long scale = 1;
    for (int slot = 0; slot < n_cells; ++slot) {
      long digit = (col / scale) % 8;
      for (long r = 0; r < 8; ++r) {
        const Rational& v = x(r, digit);
        if (v != 0) out.push(col + (r - digit) * scale, col, v);
      }
      scale *= 8;
    }
  }
  out.finalize();
  return out;
}

CheckReport lie_hom_check(const RatMat& x, const RatMat& y, int n_cells) {
  CheckReport report;
  report.name = "lie_hom";
  report.meta["n_cells"] = std::to_string(n_cells);
  SparseMat sx = cumulate_exact(x, n_cells);
  SparseMat sy = cumulate_exact(y, n_cells);
  SparseMat lhs = commutator(sx, sy);
  SparseMat rhs = cumulate_exact(commutator(x, y), n_cells);
  report.check("[Sigma x, Sigma y] = Sigma [x, y]", lhs == rhs);
  return report;
}

std::vector<PolarizedSector> qi_spectrum(long n_cells) {
  if (n_cells < 1) throw Error("cell count must be >= 1");
  std::vector<PolarizedSector> out;
  out.reserve(n_cells + 1);
  for (long k = 0; k <= n_cells; ++k) {
    PolarizedSector s;
    s.k = k;
    s.magnitude = Rational(std::abs(n_cells - 2 * k), n_cells);
    s.magnitude.canonicalize();
    s.multiplicity = binomial(n_cells, k);
    out.push_back(std::move(s));
  }
  return out;
}

SpectrumLevels qi_spectrum_levels(long n_cells) {
  SpectrumLevels out;
  Natural plane_degeneracy = 1;
  for (long i = 0; i < n_cells; ++i) plane_degeneracy *= 4;
  for (long k = 0; 2 * k <= n_cells; ++k) {
    Rational mag(n_cells - 2 * k, n_cells);
    mag.canonicalize();
    Natural mult = binomial(n_cells, k);
    if (2 * k != n_cells) mult += binomial(n_cells, n_cells - k);
    out.levels.emplace_back(mag, mult * plane_degeneracy);
  }
  return out;
}

SpectrumLevels tensor_qi_eigenstructure(const SparseMat& sum_dqi, long n_cells) {
  long dim = sum_dqi.rows();
  SparseMat sq = sum_dqi * sum_dqi;
  long n_levels = n_cells / 2 + 1;

  // Annihilating polynomial of M^2: roots -(N-2k)^2, k = 0..floor(N/2).
  std::vector<Rational> roots;
  for (long k = 0; k < n_levels; ++k) {
    long m = n_cells - 2 * k;
    roots.emplace_back(-m * m);
  }
  if (!annihilated_by(sq, roots))
    throw Error("tensor cumulant is not annihilated by the predicted polynomial");

  // Multiplicities from exact traces through the Vandermonde system
  // tr(M^{2j}) = sum_k mult_k (-(N-2k)^2)^j, j = 0..n_levels-1.
  RatMat vander(n_levels, n_levels);
  std::vector<Rational> traces(n_levels);
  SparseMat power = SparseMat::identity(dim);
  for (long j = 0; j < n_levels; ++j) {
    traces[j] = power.trace();
    for (long k = 0; k < n_levels; ++k) {
      Rational base = roots[k];
      Rational v = 1;
      for (long e = 0; e < j; ++e) v *= base;
      vander(j, k) = v;
    }
    if (j + 1 < n_levels) power = power * sq;
  }
  std::vector<Rational> mult = solve(vander, traces);

  SpectrumLevels out;
  for (long k = 0; k < n_levels; ++k) {
    Rational mag(n_cells - 2 * k, n_cells);
    mag.canonicalize();
    if (mult[k].get_den() != 1 || mult[k] < 0)
      throw Error("non-integral eigenvalue multiplicity");
    out.levels.emplace_back(mag, Natural(mult[k].get_num()));
  }
  return out;
}

namespace {

// count of levels with |N-2k|/N > 1 - N^{-1/2}, i.e. 4k^2 < N
long band_level_count(long n) {
  long k = 0;
  while (4 * (k + 1) * (k + 1) <= n - 1) ++k;
  return k + 1;  // k = 0 always qualifies
}

long ceil_half_sqrt(long n) {
  long s = static_cast<long>(std::floor(std::sqrt(static_cast<double>(n))));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;  // s = floor(sqrt(n))
  // ceil(sqrt(n)/2): if n is a perfect square, ceil(s/2); else ceil over the
  // irrational sqrt, which is floor(s/2) + 1 when s even... handle exactly:
  if (s * s == n) return (s + 1) / 2;
  return s / 2 + 1;
}

}  // namespace

BandCensus band_census(long n_cells) {
  if (n_cells < 4) throw Error("band census needs N >= 4");
  BandCensus c;
  c.n_cells = n_cells;
  c.levels = band_level_count(n_cells);
  c.expected = ceil_half_sqrt(n_cells);
  c.band_width = 1.0 / std::sqrt(static_cast<double>(n_cells));
  c.ok = std::labs(c.levels - c.expected) <= 1;
  return c;
}

ScalingLedger commutator_ledger(const YangRep& rep, const Rational& chrone, const Rational& erge,
                                long n_cells) {
  if (n_cells < 1) throw Error("cell count must be >= 1");
  ScalingLedger led;
  led.n_cells = n_cells;
  led.hbar = chrone * erge;
  led.power_constant = erge / (Rational(n_cells) * chrone);
  led.report.name = "commutator_ledger";
  led.report.meta["n_cells"] = std::to_string(n_cells);
  led.report.meta["generators"] = "unit-structure-constant family L_{ab} = [gamma_a,gamma_b]/4";

  // Cell-level identities; Sigma is a Lie homomorphism, so these lift to
  // every N with the stated scale factors.
  auto lam = [&](int a, int b) { return rep.generator_upper(a, b); };

  // [L^{mu 5}, L^{nu 5}] = -g^{55} L^{mu nu}
  bool xx_ok = true;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      RatMat lhs = commutator(lam(mu, 5), lam(nu, 5));
      RatMat rhs = Rational(-rep.g[4]) * lam(mu, nu);
      if (!(lhs == rhs)) xx_ok = false;
    }
  led.report.check("[L^{mu5}, L^{nu5}] = -g^{55} L^{mu nu}", xx_ok);

  // [L^{mu 5}, L^{nu 6}] = -g^{mu nu} L^{56}
  bool xp_ok = true;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      RatMat lhs = commutator(lam(mu, 5), lam(nu, 6));
      RatMat rhs = Rational(mu == nu ? -rep.g[mu - 1] : 0) * lam(5, 6);
      if (!(lhs == rhs)) xp_ok = false;
    }
  led.report.check("[L^{mu5}, L^{nu6}] = -g^{mu nu} L^{56}", xp_ok);

  // [L^{mu 6}, L^{nu 6}] = -g^{66} L^{mu nu}
  bool pp_ok = true;
  for (int mu = 1; mu <= 4; ++mu)
    for (int nu = 1; nu <= 4; ++nu) {
      RatMat lhs = commutator(lam(mu, 6), lam(nu, 6));
      RatMat rhs = Rational(-rep.g[5]) * lam(mu, nu);
      if (!(lhs == rhs)) pp_ok = false;
    }
  led.report.check("[L^{mu6}, L^{nu6}] = -g^{66} L^{mu nu}", pp_ok);

  // Per-cell operator norm: every L^{ab} squares to +-1/4 exactly, so the
  // commuting-copy cumulant of any single L has operator norm N/2.
  bool sq_ok = true;
  const RatMat id = RatMat::identity(8);
  for (int a = 1; a <= 6 && sq_ok; ++a)
    for (int b = a + 1; b <= 6; ++b) {
      RatMat sq = lam(a, b) * lam(a, b);
      if (!(sq == rat(1, 4) * id) && !(sq == rat(-1, 4) * id)) {
        sq_ok = false;
        break;
      }
    }
  led.report.check("(L^{ab})^2 = +-identity/4 (cell norm 1/2)", sq_ok);

  // X^mu = X Sigma L^{mu5}: ||[X,X]|| <= X^2 * N * 1/2 = (hbar/W)/2, etc.
  Rational half = rat(1, 2);
  led.bound_xx = chrone * chrone * Rational(n_cells) * half;
  led.bound_xp = led.hbar * half;
  led.bound_pp = erge * erge / Rational(n_cells) * half;
  bool ratio_ok = led.bound_xx * led.power_constant == led.bound_xp &&
                  led.bound_xp * led.power_constant == led.bound_pp;
  led.report.check("bound ratios = (hbar/W) : hbar : (hbar W)", ratio_ok, 0.0,
                   led.bound_xx.get_str() + " : " + led.bound_xp.get_str() + " : " +
                       led.bound_pp.get_str(),
                   "scaled by W each step");

  // [X^1, P^1] = coeff * hbar * Qi with Qi = (1/N) Sigma L^{65}; at the cell
  // level [L^{15}, L^{16}] = -g^{11} L^{56} = g^{11} L^{65}, so coeff = g^{11}.
  RatMat lhs = commutator(lam(1, 5), lam(1, 6));
  RatMat rhs = Rational(rep.g[0]) * lam(6, 5);
  led.xp_qi_coefficient = Rational(rep.g[0]);
  led.report.check("[X^1, P^1] = g^{11} hbar Qi (cell identity)", lhs == rhs);
  return led;
}

long SweepPolicy::cap(long n_cells) const {
  switch (kind) {
    case Kind::band:
      return std::min(ceil_half_sqrt(n_cells), n_cells / 2);
    case Kind::fully_polarized:
      return 0;
    case Kind::custom:
      return std::min(custom_cap, n_cells / 2);
  }
  return 0;
}

SweepResult contraction_sweep(const std::vector<long>& n_values, SweepPolicy policy,
                              const Rational& chrone, const Rational& erge) {
  if (n_values.empty()) throw EmptySweep();
  SweepResult out;
  std::vector<double> xs, y1, y2;
  for (long n : n_values) {
    if (n < 4) throw Error("sweep cell counts must be >= 4");
    SweepRow row;
    row.n_cells = n;
    Rational w = erge / (Rational(n) * chrone);
    row.power_constant = w.get_d();
    long cap = policy.cap(n);
    // residual of Qi^2 + 1 on sector k: 1 - ((N-2k)/N)^2, increasing in k
    // up to N/2, so the band maximum sits at the cap.
    Rational m(n - 2 * cap, n);
    m.canonicalize();
    Rational r1 = 1 - m * m;
    row.r1 = r1.get_d();
    row.r2 = w.get_d();
    BandCensus census = band_census(n);
    row.band_levels = census.levels;
    row.band_width = census.band_width;
    out.rows.push_back(row);
    xs.push_back(static_cast<double>(n));
    y1.push_back(row.r1);
    y2.push_back(row.r2);
  }
  bool r1_positive = true;
  for (double v : y1)
    if (v <= 0.0) r1_positive = false;
  if (r1_positive)
    out.fit_r1 = loglog_fit("r1_band_residual", xs, y1);
  else
    out.fit_r1 = FitResult{"r1_band_residual", 0.0, 0.0, 0.0};  // k = 0: residual identically 0
  out.fit_r2 = loglog_fit("r2_power_constant", xs, y2);
  return out;
}

FitResult loglog_fit(const std::string& quantity, const std::vector<double>& x,
                     const std::vector<double>& y) {
  FitResult f;
  f.quantity = quantity;
  std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    syy += ly * ly;
  }
  double dn = static_cast<double>(n);
  double cov = sxy - sx * sy / dn;
  double varx = sxx - sx * sx / dn;
  double vary = syy - sy * sy / dn;
  f.slope = cov / varx;
  f.intercept = (sy - f.slope * sx) / dn;
  f.r_squared = vary == 0.0 ? 1.0 : (cov * cov) / (varx * vary);
  return f;
}

std::string sweep_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "N,W,r1_max_band,r2,band_levels,band_width\n";
  for (const auto& r : s.rows)
    os << r.n_cells << ',' << r.power_constant << ',' << r.r1 << ',' << r.r2 << ','
       << r.band_levels << ',' << r.band_width << '\n';
  return os.str();
}

}  // namespace plexus
