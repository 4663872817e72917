#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "plexus/clifford.hpp"
#include "plexus/dmatrix.hpp"

using namespace plexus;

namespace {

Element basis_elem(int stage, unsigned long q) {
  return Element::monomial(stage, from_serial(q));
}

DuplexVector frame_plus(int stage, unsigned long q) {
  return {basis_elem(stage, q), dual_monomial(stage, from_serial(q))};
}

DuplexVector frame_minus(int stage, unsigned long q) {
  return {basis_elem(stage, q), dual_monomial(stage, from_serial(q), -1)};
}

CliffordOperator random_operator(std::mt19937_64& rng, int stage, int n_terms) {
  int n = stage_modes(stage);
  std::uniform_int_distribution<int> mode(0, n - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> num(-4, 4);
  CliffordOperator out = CliffordOperator::zero(stage);
  for (int t = 0; t < n_terms; ++t) {
    CliffordOperator w = CliffordOperator::identity(stage);
    for (int g = 0; g <= t % 3; ++g) {
      CliffordOperator gen = coin(rng) ? CliffordOperator::creator(stage, mode(rng))
                                       : CliffordOperator::annihilator(stage, mode(rng));
      w = w * gen;
    }
    out += rat(num(rng)) * w;
  }
  return out;
}

}  // namespace

TEST_CASE("creator and annihilator action") {
  // gamma_{e_1} on the vacuum
  auto c0 = CliffordOperator::from_generator(
      2, {from_serial(1ul), GenKind::creator});
  CHECK(apply(c0, basis_elem(2, 0)) == basis_elem(2, 1));
  // gamma_{e_1} e_1 = 0
  CHECK(apply(c0, basis_elem(2, 1)).is_zero());
  // left derivation with Koszul sign: gamma^{e_1}(e_2 v e_1) = -e_2
  auto a0 = CliffordOperator::from_generator(
      2, {from_serial(1ul), GenKind::annihilator});
  CHECK(apply(a0, basis_elem(2, 3)) == scale(-1, basis_elem(2, 2)));
  CHECK_THROWS_AS(apply(c0, basis_elem(3, 0)), StageMismatch);
}

TEST_CASE("CAR anticommutators symbolically") {
  auto c = [&](int m) { return CliffordOperator::creator(2, m); };
  auto a = [&](int m) { return CliffordOperator::annihilator(2, m); };
  CHECK(anticommutator(c(0), a(0)).is_identity());
  CHECK(anticommutator(c(0), a(1)).is_zero());
  CHECK(anticommutator(c(0), c(1)).is_zero());
  CHECK(anticommutator(a(0), a(1)).is_zero());
  CHECK((c(0) * c(0)).is_zero());
}

TEST_CASE("car_check across stages") {
  for (int stage = 1; stage <= 3; ++stage) {
    CheckReport r = car_check(stage);
    CHECK(r.passed());
    CHECK(r.meta.at("generators") == std::to_string(2 * stage_modes(stage)));
  }
  CheckReport r4 = car_check(4, 0, 200);
  CHECK(r4.passed());
  CHECK(r4.meta.at("generators") == "32");
  CHECK_THROWS_AS(car_check(5), RankTooLarge);
  CHECK_THROWS_AS(car_check(0), RankTooLarge);
}

TEST_CASE("matrix_of agrees with symbolic apply") {
  std::mt19937_64 rng(41);
  for (int stage = 2; stage <= 3; ++stage) {
    long dim = 1l << stage_modes(stage);
    for (int t = 0; t < 8; ++t) {
      CliffordOperator op = random_operator(rng, stage, 4);
      SparseMat m = matrix_of(op);
      for (long q = 0; q < dim; ++q) {
        Element applied = apply(op, basis_elem(stage, q));
        std::vector<Rational> col(dim, Rational(0));
        for (const auto& [mono, coeff] : applied.terms()) col[serial_u32(mono)] = coeff;
        for (long r = 0; r < dim; ++r) CHECK(m.at(r, q) == col[r]);
      }
    }
  }
  // stage 4: sampled basis vectors
  std::uniform_int_distribution<unsigned long> mask(0, 65535);
  CliffordOperator op = random_operator(rng, 4, 3);
  SparseMat m = matrix_of(op);
  for (int t = 0; t < 1000; ++t) {
    unsigned long q = mask(rng);
    Element applied = apply(op, basis_elem(4, q));
    Rational checksum = 0, expected = 0;
    for (const auto& [mono, coeff] : applied.terms())
      checksum += coeff * (1 + Rational(serial_u32(mono)));
    for (const auto& [r, v] : m.column(static_cast<long>(q))) expected += v * (1 + Rational(r));
    CHECK(checksum == expected);
  }
}

TEST_CASE("symbolic product is associative and matches matrices") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 12; ++t) {
    CliffordOperator a = random_operator(rng, 2, 3);
    CliffordOperator b = random_operator(rng, 2, 3);
    CliffordOperator c = random_operator(rng, 2, 3);
    CHECK((a * b) * c == a * (b * c));
    CHECK(matrix_of(a * b) == matrix_of(a) * matrix_of(b));
  }
  for (int t = 0; t < 4; ++t) {
    CliffordOperator a = random_operator(rng, 3, 3);
    CliffordOperator b = random_operator(rng, 3, 3);
    CHECK(matrix_of(a * b) == matrix_of(a) * matrix_of(b));
  }
}

TEST_CASE("symbolic transpose matches matrix transpose") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 10; ++t) {
    CliffordOperator a = random_operator(rng, 2, 4);
    CHECK(matrix_of(transpose(a)) == matrix_of(a).transpose());
  }
  for (int t = 0; t < 4; ++t) {
    CliffordOperator a = random_operator(rng, 3, 4);
    CHECK(matrix_of(transpose(a)) == matrix_of(a).transpose());
  }
}

TEST_CASE("duplex generators square to the duplex norm") {
  auto fp = frame_plus(1, 1);
  auto fm = frame_minus(1, 1);
  CliffordOperator gp = generator_from_duplex(fp);
  CliffordOperator gm = generator_from_duplex(fm);
  CHECK(gp * gp == CliffordOperator::identity(2));
  CHECK(gm * gm == rat(-1) * CliffordOperator::identity(2));
  // isotropic: ket only
  DuplexVector iso{basis_elem(1, 1), DualElement{1, {}}};
  CliffordOperator gi = generator_from_duplex(iso);
  CHECK((gi * gi).is_zero());
}

TEST_CASE("anticommutator of duplex generators is twice the duplex inner") {
  DuplexFrame f = duplex_frame(2);
  for (std::size_t i = 0; i < f.vectors.size(); ++i)
    for (std::size_t j = 0; j < f.vectors.size(); ++j) {
      CliffordOperator gi = generator_from_duplex(f.vectors[i]);
      CliffordOperator gj = generator_from_duplex(f.vectors[j]);
      Rational g2 = 2 * duplex_inner(f.vectors[i], f.vectors[j]);
      CliffordOperator expect = g2 * CliffordOperator::identity(3);
      CHECK(anticommutator(gi, gj) == expect);
    }
}

TEST_CASE("spin generator squares classify planes") {
  // same-sign (compact) plane
  CliffordOperator compact = spin_generator(frame_plus(1, 0), frame_plus(1, 1));
  CHECK(compact * compact == rat(-1) * CliffordOperator::identity(2));
  // mixed-sign plane
  CliffordOperator boost = spin_generator(frame_plus(1, 0), frame_minus(1, 1));
  CHECK(boost * boost == CliffordOperator::identity(2));
  // w1 = w2
  CHECK(spin_generator(frame_plus(1, 0), frame_plus(1, 0)).is_zero());
}

TEST_CASE("so closure at stages 2 and 3") {
  CheckReport r2 = so_closure_check(2);
  CHECK(r2.passed());
  CHECK(r2.meta.at("algebra_dimension") == "6");
  CHECK(r2.meta.at("group") == "so(2,2)");

  CheckReport r3 = so_closure_check(3);
  CHECK(r3.passed());
  CHECK(r3.meta.at("algebra_dimension") == "28");
  CHECK(r3.meta.at("group") == "so(4,4)");

  CheckReport r4 = so_closure_check(4, 0, 60);
  CHECK(r4.passed());
  CHECK(r4.meta.at("algebra_dimension") == "496");
}

TEST_CASE("double-valuedness of rotations") {
  RotationReport rep = full_rotation_check(frame_plus(1, 0), frame_plus(1, 1));
  CHECK(rep.compact);
  CHECK(rep.ok);
  CHECK(rep.max_deviation < 1e-12);

  RotationReport rep_minus = full_rotation_check(frame_minus(1, 0), frame_minus(1, 1));
  CHECK(rep_minus.ok);

  CHECK_THROWS_AS(full_rotation_check(frame_plus(1, 0), frame_minus(1, 1)), NonCompactPlane);

  // 4 pi periodicity: exp(2 pi Gamma) = +identity
  CliffordOperator g = spin_generator(frame_plus(1, 0), frame_plus(1, 1));
  SparseMat m = matrix_of(g);
  DMat dm(m.rows(), m.cols());
  for (long c = 0; c < m.cols(); ++c)
    for (const auto& [r, v] : m.column(c)) dm(r, c) = v.get_d();
  DMat full = expm(2.0 * 3.14159265358979323846 * dm);
  CHECK((full - DMat::identity(m.rows())).max_abs() < 1e-11);
}
