#include "plexus/element.hpp"

#include <algorithm>
#include <cctype>

namespace plexus {

Element Element::monomial(const BasisMonomial& m, const Rational& c) {
  return monomial(m.rank(), m, c);
}

Element Element::monomial(int stage, const BasisMonomial& m, const Rational& c) {
  if (m.rank() > stage) throw StageMismatch(m.rank(), stage);
  Element e(stage);
  e.add_term(m, c);
  return e;
}

Rational Element::coefficient(const BasisMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::add_term(const BasisMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Element add(const Element& a, const Element& b) {
  if (a.stage() != b.stage()) throw StageMismatch(a.stage(), b.stage());
  Element out = a;
  for (const auto& [m, c] : b.terms()) out.add_term(m, c);
  return out;
}

Element sub(const Element& a, const Element& b) { return add(a, scale(-1, b)); }

Element scale(const Rational& c, const Element& a) {
  Element out(a.stage());
  if (c == 0) return out;
  for (const auto& [m, cm] : a.terms()) out.add_term(m, c * cm);
  return out;
}

Element embed(const Element& a, int stage) {
  if (stage < a.stage()) {
    for (const auto& [m, c] : a.terms())
      if (m.rank() > stage) throw StageMismatch(a.stage(), stage);
  }
  Element out(stage);
  for (const auto& [m, c] : a.terms()) out.add_term(m, c);
  return out;
}

Element wedge(const Element& a, const Element& b) {
  Element out(std::max(a.stage(), b.stage()));
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto [sign, m] = wedge_basis(ma, mb);
      if (sign != 0) out.add_term(m, ca * cb * sign);
    }
  }
  return out;
}

Element iota_linear(const Element& a) {
  Element out(a.stage() + 1);
  for (const auto& [m, c] : a.terms()) out.add_term(iota_basis(m), c);
  return out;
}

Element grade_project(const Element& a, GradeBy by, int value) {
  Element out(a.stage());
  for (const auto& [m, c] : a.terms()) {
    int g = by == GradeBy::degree ? m.degree() : m.rank();
    if (g == value) out.add_term(m, c);
  }
  return out;
}

Element apply_grading(const Element& a, GradeBy by) {
  Element out(a.stage());
  for (const auto& [m, c] : a.terms()) {
    int g = by == GradeBy::degree ? m.degree() : m.rank();
    out.add_term(m, c * g);
  }
  return out;
}

Rational hilbert_inner(const Element& a, const Element& b) {
  if (a.stage() != b.stage()) throw StageMismatch(a.stage(), b.stage());
  Rational s = 0;
  for (const auto& [m, c] : a.terms()) {
    auto it = b.terms().find(m);
    if (it != b.terms().end()) s += c * it->second;
  }
  return s;
}

DualElement hilbert_dual(const Element& a) {
  DualElement d;
  d.stage = a.stage();
  for (const auto& [m, c] : a.terms()) d.coterms.emplace(m, c);
  return d;
}

DualElement dual_monomial(int stage, const BasisMonomial& m, const Rational& c) {
  if (m.rank() > stage) throw StageMismatch(m.rank(), stage);
  DualElement d;
  d.stage = stage;
  if (c != 0) d.coterms.emplace(m, c);
  return d;
}

DualElement dual_scale(const Rational& c, const DualElement& d) {
  DualElement out;
  out.stage = d.stage;
  if (c == 0) return out;
  for (const auto& [m, cm] : d.coterms) out.coterms.emplace(m, c * cm);
  return out;
}

DualElement dual_add(const DualElement& a, const DualElement& b) {
  if (a.stage != b.stage) throw StageMismatch(a.stage, b.stage);
  DualElement out = a;
  for (const auto& [m, c] : b.coterms) {
    auto [it, inserted] = out.coterms.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) out.coterms.erase(it);
    }
  }
  return out;
}

Rational valuation(const DualElement& d, const Element& a) {
  if (d.stage != a.stage()) throw StageMismatch(d.stage, a.stage());
  Rational s = 0;
  for (const auto& [m, c] : d.coterms) {
    auto it = a.terms().find(m);
    if (it != a.terms().end()) s += c * it->second;
  }
  return s;
}

Rational duplex_norm(const DuplexVector& v) { return valuation(v.bra, v.ket); }

Rational duplex_inner(const DuplexVector& v, const DuplexVector& w) {
  return (valuation(v.bra, w.ket) + valuation(w.bra, v.ket)) / 2;
}

DuplexFrame duplex_frame(int stage) {
  DuplexFrame f;
  f.stage = stage;
  auto basis = enumerate_stage(stage);
  for (const auto& m : basis) {
    f.vectors.push_back({Element::monomial(stage, m), dual_monomial(stage, m)});
    f.signs.push_back(+1);
  }
  for (const auto& m : basis) {
    f.vectors.push_back({Element::monomial(stage, m), dual_monomial(stage, m, -1)});
    f.signs.push_back(-1);
  }
  return f;
}

std::string render(const Element& a, ElementFormat fmt) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : a.terms()) {
    Rational ac = abs(c);
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string mono;
    if (fmt == ElementFormat::serial) {
      try {
        mono = render(m, MonomialFormat::serial);
      } catch (const BudgetExceeded&) {
        mono = render(m, MonomialFormat::expr);
      }
    } else {
      mono = render(m, MonomialFormat::expr);
    }
    if (ac != 1) {
      s += ac.get_str();
      s += " ";
    }
    s += mono;
  }
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Element run() {
    Element e = parse_element();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError(pos_, "trailing input");
    return e;
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }

  static void lift(Element& a, Element& b) {
    int stage = std::max(a.stage(), b.stage());
    a = embed(a, stage);
    b = embed(b, stage);
  }

  Element parse_element() {
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    Element acc = scale(sign, parse_term());
    while (true) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Element t = scale(c == '-' ? -1 : 1, parse_term());
        lift(acc, t);
        acc = add(acc, t);
      } else {
        break;
      }
    }
    return acc;
  }

  Element parse_term() {
    Rational coeff = 1;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // A leading number is a coefficient unless it is the unit factor '1'
      // standing alone (no '/' and no digits beyond a single '1' followed by
      // a non-factor context). Simplest faithful rule: digits followed
      // by '/', or by whitespace-then-factor-start, form a rational.
      std::size_t save = pos_;
      Natural n = parse_digits();
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '/') {
        ++pos_;
        Natural d = parse_digits();
        if (d == 0) throw ParseError(pos_, "zero denominator");
        coeff = Rational(n) / Rational(d);
      } else if (n == 1 && !is_factor_start(peek())) {
        // Bare "1": the unit factor, not a coefficient.
        pos_ = save;
        coeff = 1;
      } else if (is_factor_start(peek())) {
        coeff = Rational(n);
      } else {
        // e.g. "2" with nothing following: grammar requires a factor.
        pos_ = save;
      }
    }
    Element acc = parse_factor();
    while (true) {
      std::size_t save = pos_;
      if (peek() == 'v') {
        ++pos_;
        if (!is_factor_start(peek())) {
          pos_ = save;
          break;
        }
        Element f = parse_factor();
        acc = wedge(acc, f);
      } else {
        break;
      }
    }
    return scale(coeff, acc);
  }

  static bool is_factor_start(char c) {
    return c == '1' || c == 'i' || c == 'e';
  }

  Element parse_factor() {
    char c = peek();
    if (c == '1') {
      ++pos_;
      return Element::monomial(0, unit());
    }
    if (c == 'i') {
      ++pos_;
      expect('(');
      Element inner = parse_element();
      expect(')');
      return iota_linear(inner);
    }
    if (c == 'e') {
      ++pos_;
      Natural q = parse_digits();
      BasisMonomial m = from_serial(q);
      return Element::monomial(m.rank(), m);
    }
    throw ParseError(pos_, "expected factor: '1', 'i(...)' or 'e<serial>'");
  }

  Natural parse_digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ParseError(pos_, "expected digits");
    return Natural(std::string(s_.substr(start, pos_ - start)), 10);
  }
};

}  // namespace

Element parse(std::string_view text) { return Parser(text).run(); }

}  // namespace plexus
