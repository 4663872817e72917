#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "plexus/element.hpp"

using namespace plexus;

namespace {

Element e(unsigned long q, const Rational& c = 1) {
  BasisMonomial m = from_serial(q);
  return Element::monomial(m.rank(), m, c);
}

Element random_element(std::mt19937_64& rng, int stage, int n_terms) {
  std::uniform_int_distribution<unsigned long> serial_dist(0, stage_dim(stage) - 1);
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Element out(stage);
  for (int i = 0; i < n_terms; ++i)
    out.add_term(from_serial(serial_dist(rng)), rat(num(rng), den(rng)));
  return out;
}

}  // namespace

TEST_CASE("superposition") {
  Element a = embed(e(1) + e(1), 1);
  CHECK(a.coefficient(from_serial(1ul)) == 2);
  CHECK((e(1) + rat(-1) * e(1)).is_zero());
  Element s = scale(rat(3, 2), embed(e(5), 3) + embed(e(6), 3));
  CHECK(s.coefficient(from_serial(5ul)) == rat(3, 2));
  CHECK(s.coefficient(from_serial(6ul)) == rat(3, 2));
  CHECK_THROWS_AS(add(e(1), e(4)), StageMismatch);
}

TEST_CASE("wedge of elements") {
  Element lhs = wedge(embed(e(2), 2) + embed(e(1), 2), e(1));
  CHECK(lhs == embed(e(3), 2));
  Element q = e(5) + e(9, rat(2, 3));
  CHECK(wedge(Element::monomial(0, unit()), q) == q);
  CHECK(wedge(e(1), e(2)) == embed(e(3, -1), 2));
}

TEST_CASE("iota is linear") {
  Element a = embed(e(1, 2), 2) + e(2, 3);
  Element ia = iota_linear(a);
  CHECK(ia == embed(e(2, 2), 3) + e(4, 3));
  CHECK(iota_linear(Element(2)).is_zero());
  CHECK(iota_linear(Element::monomial(0, unit())) == e(1));
  for (const auto& [m, c] : ia.terms()) CHECK(m.degree() == 1);
}

TEST_CASE("grading operators") {
  Element a = embed(e(3), 3) + embed(e(4), 3);
  Element deg = apply_grading(a, GradeBy::degree);
  CHECK(deg.coefficient(from_serial(3ul)) == 2);
  CHECK(deg.coefficient(from_serial(4ul)) == 1);
  Element rk = apply_grading(e(1), GradeBy::rank);
  CHECK(rk == e(1));
  CHECK(grade_project(a, GradeBy::degree, 1) == embed(e(4), 3));
  CHECK(grade_project(a, GradeBy::degree, 3).is_zero());
}

TEST_CASE("hilbert metric is the orthonormal one") {
  CHECK(hilbert_inner(embed(e(5), 3), embed(e(5), 3)) == 1);
  CHECK(hilbert_inner(embed(e(5), 3), embed(e(6), 3)) == 0);
  Element a = embed(e(1, 2), 2) + embed(e(3), 2);
  CHECK(hilbert_inner(a, a) == 5);
  // dual(e_q) applied to e_q is 1
  CHECK(valuation(hilbert_dual(e(5)), e(5)) == 1);
}

TEST_CASE("hilbert form symmetric and positive definite on stages <= 3") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    Element a = random_element(rng, 3, 4);
    Element b = random_element(rng, 3, 4);
    CHECK(hilbert_inner(a, b) == hilbert_inner(b, a));
    if (!a.is_zero()) CHECK(hilbert_inner(a, a) > 0);
  }
}

TEST_CASE("duplex norm and inner") {
  DuplexVector v{e(1), dual_monomial(1, from_serial(1ul))};
  CHECK(duplex_norm(v) == 1);
  DuplexVector w{e(1), dual_monomial(1, from_serial(1ul), -1)};
  CHECK(duplex_norm(w) == -1);
  DuplexVector x{e(1), dual_monomial(1, from_serial(0ul))};
  CHECK(duplex_norm(x) == 0);
  CHECK(duplex_inner(v, w) == 0);
}

TEST_CASE("duplex frame has neutral signature") {
  for (int r = 0; r <= 3; ++r) {
    DuplexFrame f = duplex_frame(r);
    unsigned long n = stage_dim(r);
    REQUIRE(f.vectors.size() == 2 * n);
    long pos = 0, neg = 0;
    for (std::size_t i = 0; i < f.vectors.size(); ++i) {
      for (std::size_t j = 0; j < f.vectors.size(); ++j) {
        Rational g = duplex_inner(f.vectors[i], f.vectors[j]);
        if (i == j)
          CHECK(g == f.signs[i]);
        else
          CHECK(g == 0);
      }
      (f.signs[i] > 0 ? pos : neg)++;
    }
    CHECK(pos == static_cast<long>(n));
    CHECK(neg == static_cast<long>(n));
  }
}

TEST_CASE("wedge associative and unital on random elements") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 40; ++t) {
    Element a = random_element(rng, 3, 3);
    Element b = random_element(rng, 3, 3);
    Element c = random_element(rng, 3, 3);
    CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
  }
}

TEST_CASE("graded commutativity on homogeneous elements") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<unsigned long> dist(0, 15);
  for (int t = 0; t < 60; ++t) {
    BasisMonomial ma = from_serial(dist(rng));
    BasisMonomial mb = from_serial(dist(rng));
    Element a = Element::monomial(3, ma, rat(2, 3));
    Element b = Element::monomial(3, mb, rat(-3, 5));
    int flip = (ma.degree() * mb.degree()) % 2 == 0 ? 1 : -1;
    CHECK(wedge(a, b) == scale(flip, wedge(b, a)));
  }
}

TEST_CASE("iota image is the degree-1 sector of the next stage") {
  auto s2 = enumerate_stage(2);
  for (const auto& m : s2) {
    Element im = iota_linear(Element::monomial(2, m));
    CHECK(im.stage() == 3);
    CHECK(grade_project(im, GradeBy::degree, 1) == im);
  }
}

TEST_CASE("parse round trips and normalizes") {
  CHECK(parse("e6") == e(6));
  CHECK(parse("i(1) v i(1)").is_zero());
  CHECK(parse("i(e4)") == e(16));
  CHECK(parse("2 e1 + 3 e2") == embed(e(1, 2), 2) + e(2, 3));
  CHECK(parse("3/2 e6 v e1") == e(7, rat(3, 2)));
  CHECK(parse("e5 v e1").is_zero());  // shared factor e1
  CHECK(parse("e2 v e1") == e(3));
  CHECK(parse("e1 v e2") == e(3, -1));
  CHECK(parse("-e1") == e(1, -1));
  CHECK(parse("i(2 e1 + 3 e2)") == embed(e(2, 2), 3) + e(4, 3));
  CHECK(parse("1") == Element::monomial(0, unit()));
  // render/parse round trip on random elements
  std::mt19937_64 rng(31);
  for (int t = 0; t < 30; ++t) {
    Element a = random_element(rng, 3, 4);
    CHECK(parse(render(a, ElementFormat::serial)) == embed(a, parse(render(a)).stage()));
    Element b = parse(render(a, ElementFormat::expr));
    CHECK(b == embed(a, b.stage()));
  }
}

TEST_CASE("parse reports positions") {
  try {
    parse("e6 + i(e2");
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.position == 9);
  }
  CHECK_THROWS_AS(parse("q"), ParseError);
  CHECK_THROWS_AS(parse("3/0 e1"), ParseError);
}
