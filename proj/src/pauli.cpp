#include "plexus/pauli.hpp"

#include <algorithm>
#include <random>

namespace plexus {

QuadraticFrame orthonormal_duplex_frame(int stage) {
  if (stage < 1 || stage > 4) throw RankTooLarge(stage);
  DuplexFrame f = duplex_frame(stage - 1);
  return QuadraticFrame{stage, std::move(f.vectors), std::move(f.signs)};
}

PauliMetric pauli_metric(int stage) {
  if (stage < 2 || stage > 4) throw RankTooLarge(stage);
  QuadraticFrame frame = orthonormal_duplex_frame(stage);
  PauliMetric beta;
  beta.stage = stage;
  bool first = true;
  for (std::size_t i = 0; i < frame.vectors.size(); ++i) {
    if (frame.signs[i] != -1) continue;
    SparseMat g = matrix_of(generator_from_duplex(frame.vectors[i]));
    beta.matrix = first ? g : beta.matrix * g;
    first = false;
  }
  if (!beta.matrix.is_signed_permutation())
    throw Error("pauli metric is not a signed permutation");
  SparseMat bt = beta.matrix.transpose();
  if (bt == beta.matrix)
    beta.symmetric = true;
  else if (bt == Rational(-1) * beta.matrix)
    beta.symmetric = false;
  else
    throw Error("pauli metric is neither symmetric nor skew");
  SparseMat b2 = beta.matrix * beta.matrix;
  long dim = beta.matrix.rows();
  if (b2 == SparseMat::identity(dim))
    beta.square_sign = +1;
  else if (b2 == Rational(-1) * SparseMat::identity(dim))
    beta.square_sign = -1;
  else
    throw Error("pauli metric square is not +-identity");
  return beta;
}

CheckReport check_skew_symmetrization(int stage, std::uint64_t seed, long sample_planes,
                                      TransposeConvention conv) {
  CheckReport report;
  report.name = "pauli_skew_symmetrization";
  report.meta["stage"] = std::to_string(stage);
  report.meta["seed"] = std::to_string(seed);
  report.meta["transpose"] = conv == TransposeConvention::hilbert
                                 ? "hilbert (matrix transpose in the orthonormal classical basis)"
                                 : "duplex (valuation adjoint: creator<->annihilator reversal)";

  PauliMetric beta = pauli_metric(stage);
  QuadraticFrame frame = orthonormal_duplex_frame(stage);
  int nf = static_cast<int>(frame.vectors.size());

  std::vector<std::pair<int, int>> planes;
  for (int i = 0; i < nf; ++i)
    for (int j = i + 1; j < nf; ++j) planes.emplace_back(i, j);
  if (stage >= 4) {
    std::mt19937_64 rng(seed);
    std::shuffle(planes.begin(), planes.end(), rng);
    if (static_cast<long>(planes.size()) > sample_planes) planes.resize(sample_planes);
  }
  report.meta["planes"] = std::to_string(planes.size());

  // Invariance of the beta pairing under the spin algebra: T(Gamma) beta =
  // -beta Gamma, the transpose acting on the operator. For symmetric beta
  // (stage > 2) this equals transpose(beta*Gamma) = -beta*Gamma; for the
  // skew stage-2 beta the product-transpose form is unsatisfiable, while
  // this one is exactly what exp(theta Gamma)^T beta exp(theta Gamma) = beta
  // requires.
  long bad = 0;
  for (auto [i, j] : planes) {
    CliffordOperator g = spin_generator(frame.vectors[i], frame.vectors[j]);
    SparseMat gm = matrix_of(g);
    SparseMat bg = beta.matrix * gm;
    SparseMat gt = conv == TransposeConvention::hilbert
                       ? gm.transpose()
                       : matrix_of(transpose(g));  // valuation adjoint, symbolic
    if (!(gt * beta.matrix == Rational(-1) * bg)) ++bad;
  }
  report.check("T(Gamma) beta = -beta Gamma on " + std::to_string(planes.size()) + " planes",
               bad == 0, static_cast<double>(bad));
  report.meta["beta_symmetric"] = beta.symmetric ? "true" : "false";
  report.meta["beta_square"] = beta.square_sign > 0 ? "+identity" : "-identity";
  return report;
}

Rational pseudo_expectation(const Element& Q, const CliffordOperator& A) {
  return pseudo_expectation(Q, A, pauli_metric(Q.stage()));
}

Rational pseudo_expectation(const Element& Q, const CliffordOperator& A, const PauliMetric& beta) {
  if (Q.stage() != A.stage()) throw StageMismatch(Q.stage(), A.stage());
  if (Q.stage() != beta.stage) throw StageMismatch(Q.stage(), beta.stage);
  Element aq = apply(A, Q);
  // beta(Q, AQ) = sum_{q',q''} beta_{q'q''} Q^{q'} (AQ)^{q''}
  long dim = beta.matrix.rows();
  std::vector<Rational> v(dim, Rational(0));
  for (const auto& [m, c] : aq.terms()) v[serial_u32(m)] = c;
  std::vector<Rational> bv = beta.matrix.apply(v);
  Rational out = 0;
  for (const auto& [m, c] : Q.terms()) out += c * bv[serial_u32(m)];
  return out;
}

}  // namespace plexus
