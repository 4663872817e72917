#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "plexus/dmatrix.hpp"
#include "plexus/pauli.hpp"

using namespace plexus;

namespace {

DMat dmat_of(const SparseMat& m) {
  DMat out(m.rows(), m.cols());
  for (long c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) out(r, c) = v.get_d();
  return out;
}

}  // namespace

TEST_CASE("orthonormal frame layout") {
  QuadraticFrame f2 = orthonormal_duplex_frame(2);
  REQUIRE(f2.vectors.size() == 4);
  CHECK(f2.signs == std::vector<int>{+1, +1, -1, -1});
  QuadraticFrame f3 = orthonormal_duplex_frame(3);
  REQUIRE(f3.vectors.size() == 8);
  long plus = 0;
  for (int s : f3.signs) plus += s > 0;
  CHECK(plus == 4);
  // generator squares are exactly +-identity
  for (std::size_t i = 0; i < f2.vectors.size(); ++i) {
    CliffordOperator g = generator_from_duplex(f2.vectors[i]);
    CHECK(g * g == rat(f2.signs[i]) * CliffordOperator::identity(2));
  }
  CHECK_THROWS_AS(orthonormal_duplex_frame(5), RankTooLarge);
}

TEST_CASE("pauli metric symmetry character per stage") {
  PauliMetric b2 = pauli_metric(2);
  CHECK(b2.matrix.rows() == 4);
  CHECK_FALSE(b2.symmetric);
  CHECK(b2.matrix.is_signed_permutation());

  PauliMetric b3 = pauli_metric(3);
  CHECK(b3.matrix.rows() == 16);
  CHECK(b3.symmetric);
  CHECK(b3.matrix.is_signed_permutation());

  CHECK_THROWS_AS(pauli_metric(5), RankTooLarge);
}

TEST_CASE("pauli metric at stage 4 is a symmetric signed permutation") {
  PauliMetric b4 = pauli_metric(4);
  CHECK(b4.matrix.rows() == 65536);
  CHECK(b4.matrix.is_signed_permutation());
  CHECK(b4.symmetric);
  CHECK((b4.square_sign == +1 || b4.square_sign == -1));
}

TEST_CASE("beta squares to a sign times identity") {
  for (int stage = 2; stage <= 3; ++stage) {
    PauliMetric b = pauli_metric(stage);
    SparseMat sq = b.matrix * b.matrix;
    CHECK(sq == Rational(b.square_sign) * SparseMat::identity(b.matrix.rows()));
  }
}

TEST_CASE("beta in a different admissible factor order differs by a sign") {
  QuadraticFrame frame = orthonormal_duplex_frame(2);
  std::vector<SparseMat> negs;
  for (std::size_t i = 0; i < frame.vectors.size(); ++i)
    if (frame.signs[i] == -1) negs.push_back(matrix_of(generator_from_duplex(frame.vectors[i])));
  REQUIRE(negs.size() == 2);
  SparseMat asc = negs[0] * negs[1];
  SparseMat desc = negs[1] * negs[0];
  PauliMetric b = pauli_metric(2);
  CHECK(asc == b.matrix);
  CHECK(desc == Rational(-1) * b.matrix);
}

TEST_CASE("skew symmetrization exhaustive at stages 2 and 3") {
  CheckReport r2 = check_skew_symmetrization(2);
  CHECK(r2.passed());
  CHECK(r2.meta.at("planes") == "6");
  CheckReport r3 = check_skew_symmetrization(3);
  CHECK(r3.passed());
  CHECK(r3.meta.at("planes") == "28");
  // both transpose conventions agree
  CheckReport rdup = check_skew_symmetrization(2, 0, 200, TransposeConvention::duplex);
  CHECK(rdup.passed());
}

TEST_CASE("skew symmetrization sampled at stage 4") {
  CheckReport r4 = check_skew_symmetrization(4, 0, 200);
  CHECK(r4.passed());
  CHECK(r4.meta.at("planes") == "200");
}

TEST_CASE("pseudo expectation basics") {
  PauliMetric beta = pauli_metric(2);
  Element q0 = Element::monomial(2, unit());
  // beta-norm of e_0 is the (0,0) entry of beta
  CHECK(pseudo_expectation(q0, CliffordOperator::identity(2), beta) == beta.matrix.at(0, 0));
  CHECK(pseudo_expectation(q0, CliffordOperator::zero(2), beta) == 0);

  std::mt19937_64 rng(53);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<unsigned long> mask(0, 3);
  for (int t = 0; t < 20; ++t) {
    Element q(2);
    for (int i = 0; i < 3; ++i) q.add_term(from_serial(mask(rng)), rat(num(rng), 1 + (t % 3)));
    auto mk = [&](int n_terms) {
      CliffordOperator a = CliffordOperator::zero(2);
      for (int i = 0; i < n_terms; ++i) {
        CliffordOperator w =
            (i % 2 ? CliffordOperator::creator(2, i % 2) : CliffordOperator::annihilator(2, i % 2));
        a += rat(num(rng)) * w;
      }
      return a;
    };
    CliffordOperator a = mk(2), b = mk(3);
    CHECK(pseudo_expectation(q, a + b, beta) ==
          pseudo_expectation(q, a, beta) + pseudo_expectation(q, b, beta));
  }
}

TEST_CASE("pseudo expectation is spin covariant (numeric)") {
  PauliMetric beta = pauli_metric(2);
  QuadraticFrame frame = orthonormal_duplex_frame(2);
  DMat beta_d = dmat_of(beta.matrix);
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> angle(-1.5, 1.5);
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> num(-3, 3);

  for (int t = 0; t < 20; ++t) {
    int i = pick(rng), j = pick(rng);
    if (i == j) j = (j + 1) % 4;
    CliffordOperator gamma = spin_generator(frame.vectors[i], frame.vectors[j]);
    DMat g = dmat_of(matrix_of(gamma));
    double th = angle(rng);
    DMat rot = expm(th * g);
    DMat rot_inv = expm(-th * g);

    // random spinor and random operator
    std::vector<double> q(4);
    for (auto& v : q) v = num(rng);
    DMat a(4, 4);
    for (long r = 0; r < 4; ++r)
      for (long c = 0; c < 4; ++c) a(r, c) = num(rng);

    auto av = [&](const std::vector<double>& qq, const DMat& aa) {
      std::vector<double> aq = aa.apply(qq);
      std::vector<double> baq = beta_d.apply(aq);
      double s = 0;
      for (int r = 0; r < 4; ++r) s += qq[r] * baq[r];
      return s;
    };

    double before = av(q, a);
    std::vector<double> q2 = rot.apply(q);
    DMat a2 = rot * a * rot_inv;
    double after = av(q2, a2);
    CHECK(std::fabs(before - after) < 1e-10);
  }
}
