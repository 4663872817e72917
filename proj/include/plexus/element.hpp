#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "plexus/basis.hpp"

namespace plexus {

/// Finite rational linear combination of basis monomials of one stage.
/// Addition is quantum superposition; no zero coefficients are stored.
class Element {
 public:
  using TermMap = std::map<BasisMonomial, Rational, SerialOrder>;

  Element() = default;
  explicit Element(int stage) : stage_(stage) {}

  static Element monomial(const BasisMonomial& m, const Rational& c = 1);
  static Element monomial(int stage, const BasisMonomial& m, const Rational& c = 1);

  int stage() const { return stage_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const BasisMonomial& m) const;

  void add_term(const BasisMonomial& m, const Rational& c);

  bool operator==(const Element& o) const { return stage_ == o.stage_ && terms_ == o.terms_; }

 private:
  int stage_ = 0;
  TermMap terms_;
};

Element add(const Element& a, const Element& b);
Element sub(const Element& a, const Element& b);
Element scale(const Rational& c, const Element& a);
Element embed(const Element& a, int stage);

inline Element operator+(const Element& a, const Element& b) { return add(a, b); }
inline Element operator-(const Element& a, const Element& b) { return sub(a, b); }
inline Element operator*(const Rational& c, const Element& a) { return scale(c, a); }

/// Bilinear graded wedge; stages embed, result stage is the larger one.
Element wedge(const Element& a, const Element& b);

/// Linear unitization: every monomial wrapped, coefficients kept. The image
/// is homogeneous of degree 1 one stage up.
Element iota_linear(const Element& a);

enum class GradeBy { degree, rank };

Element grade_project(const Element& a, GradeBy by, int value);
/// The Deg / Rank operators: multiply each homogeneous component by its grade.
Element apply_grading(const Element& a, GradeBy by);

/// The classical basis is orthonormal under the recursively propagated
/// metric (Gram-determinant propagation from orthonormal generators).
Rational hilbert_inner(const Element& a, const Element& b);

/// Functional against the classical basis; valuation pairs coefficients.
struct DualElement {
  int stage = 0;
  std::map<BasisMonomial, Rational, SerialOrder> coterms;
};

DualElement hilbert_dual(const Element& a);
DualElement dual_monomial(int stage, const BasisMonomial& m, const Rational& c = 1);
DualElement dual_scale(const Rational& c, const DualElement& d);
DualElement dual_add(const DualElement& a, const DualElement& b);
Rational valuation(const DualElement& d, const Element& a);

/// Ket plus bra of the same stage; the neutral duplex norm is the valuation
/// of the ket by the bra.
struct DuplexVector {
  Element ket;
  DualElement bra;
};

Rational duplex_norm(const DuplexVector& v);
/// Symmetric polarization (v'(w) + w'(v)) / 2.
Rational duplex_inner(const DuplexVector& v, const DuplexVector& w);

/// Orthonormal frame of Dup(stage-r space): for each classical basis element
/// e_q the pair f+ = e_q (+) dual(e_q) with norm +1 and f- = e_q (+) -dual(e_q)
/// with norm -1; pluses first, then minuses, each in serial order.
struct DuplexFrame {
  int stage = 0;  // stage of the underlying space
  std::vector<DuplexVector> vectors;
  std::vector<int> signs;
};

DuplexFrame duplex_frame(int stage);

enum class ElementFormat { serial, expr };

std::string render(const Element& a, ElementFormat fmt = ElementFormat::serial);

/// Expression grammar: element := term (('+'|'-') term)*;
/// term := [rational] factor ('v' factor)*;
/// factor := '1' | 'i(' element ')' | 'e' decimal;
/// rational := integer ['/' positive-integer]. Whitespace insignificant.
Element parse(std::string_view text);

}  // namespace plexus
