#pragma once

#include <cstdint>

#include "plexus/clifford.hpp"

namespace plexus {

/// Orthonormal frame of the duplex space acted on by a stage's Clifford
/// algebra: Exp(stage-1) vectors of each sign, generator squares exactly +-1.
struct QuadraticFrame {
  int stage = 0;  // operator stage; vectors live one stage down
  std::vector<DuplexVector> vectors;
  std::vector<int> signs;
};

QuadraticFrame orthonormal_duplex_frame(int stage);

/// Product of the negative-square frame generators in ascending frame
/// order, as a matrix in the classical basis; a signed permutation.
struct PauliMetric {
  int stage = 0;
  SparseMat matrix;
  bool symmetric = false;    // skew at stage 2, symmetric for stage > 2
  int square_sign = 0;       // beta^2 = square_sign * identity
};

PauliMetric pauli_metric(int stage);

enum class TransposeConvention { hilbert, duplex };

/// T(beta Gamma) = -beta Gamma for every grade-2 frame generator Gamma;
/// exhaustive through stage 3, sampled planes at stage 4.
CheckReport check_skew_symmetrization(int stage, std::uint64_t seed = 0, long sample_planes = 200,
                                      TransposeConvention conv = TransposeConvention::hilbert);

/// Av_Q A = beta(Q, A Q); the flux of A in the channel Q.
Rational pseudo_expectation(const Element& Q, const CliffordOperator& A);
Rational pseudo_expectation(const Element& Q, const CliffordOperator& A, const PauliMetric& beta);

}  // namespace plexus
