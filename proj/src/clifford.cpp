#include "plexus/clifford.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "plexus/dmatrix.hpp"
#include "plexus/ratmat.hpp"

namespace plexus {

namespace {

// Koszul sign for moving a generator to bit position k: parity of the
// occupied positions above k (factors are kept in descending serial order).
inline int jw_sign(std::uint32_t mask, int k) {
  return (std::popcount(mask >> (k + 1)) & 1) ? -1 : +1;
}

// Applies a normal-ordered word to a basis mask. Returns the sign, or 0
// when the vector is annihilated. Rightmost (smallest) generators act first.
inline int word_apply_mask(const CliffWord& w, std::uint32_t& mask) {
  int s = 1;
  for (auto it = w.ann.rbegin(); it != w.ann.rend(); ++it) {
    std::uint32_t bit = 1u << *it;
    if (!(mask & bit)) return 0;
    s *= jw_sign(mask, *it);
    mask ^= bit;
  }
  for (auto it = w.cre.rbegin(); it != w.cre.rend(); ++it) {
    std::uint32_t bit = 1u << *it;
    if (mask & bit) return 0;
    s *= jw_sign(mask, *it);
    mask ^= bit;
  }
  return s;
}

struct GenTok {
  int mode;
  bool creator;
};

// Normal-orders a generator sequence into the accumulator map using the
// CAR rewrites; confluent, so any rewrite order gives the same result.
void normal_order_into(std::map<CliffWord, Rational>& acc, std::vector<GenTok> seq0,
                       Rational coeff0) {
  std::vector<std::pair<std::vector<GenTok>, Rational>> work;
  work.emplace_back(std::move(seq0), std::move(coeff0));
  while (!work.empty()) {
    auto [seq, coeff] = std::move(work.back());
    work.pop_back();
    bool rewritten = false;
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      const GenTok& a = seq[i];
      const GenTok& b = seq[i + 1];
      if (!a.creator && b.creator) {
        // gamma^u gamma_v = delta_uv - gamma_v gamma^u
        std::vector<GenTok> swapped = seq;
        std::swap(swapped[i], swapped[i + 1]);
        work.emplace_back(std::move(swapped), -coeff);
        if (a.mode == b.mode) {
          std::vector<GenTok> contracted;
          contracted.reserve(seq.size() - 2);
          for (std::size_t j = 0; j < seq.size(); ++j)
            if (j != i && j != i + 1) contracted.push_back(seq[j]);
          work.emplace_back(std::move(contracted), coeff);
        }
        rewritten = true;
        break;
      }
      if (a.creator == b.creator) {
        if (a.mode == b.mode) {
          rewritten = true;  // square of a generator vanishes
          break;
        }
        if (a.mode < b.mode) {  // enforce descending order
          std::vector<GenTok> swapped = seq;
          std::swap(swapped[i], swapped[i + 1]);
          work.emplace_back(std::move(swapped), -coeff);
          rewritten = true;
          break;
        }
      }
    }
    if (rewritten) continue;
    CliffWord w;
    for (const auto& t : seq)
      (t.creator ? w.cre : w.ann).push_back(t.mode);
    auto [it, inserted] = acc.try_emplace(w, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) acc.erase(it);
    }
  }
}

}  // namespace

int stage_modes(int stage) {
  if (stage < 1) throw Error("operator stage must be >= 1");
  return static_cast<int>(stage_dim(stage - 1));
}

CliffordOperator::CliffordOperator(int stage) : stage_(stage), modes_(stage_modes(stage)) {}

CliffordOperator CliffordOperator::identity(int stage) {
  CliffordOperator op(stage);
  op.words_.emplace(CliffWord{}, 1);
  return op;
}

CliffordOperator CliffordOperator::creator(int stage, int mode) {
  CliffordOperator op(stage);
  if (mode < 0 || mode >= op.modes_) throw Error("mode out of range");
  op.words_.emplace(CliffWord{{mode}, {}}, 1);
  return op;
}

CliffordOperator CliffordOperator::annihilator(int stage, int mode) {
  CliffordOperator op(stage);
  if (mode < 0 || mode >= op.modes_) throw Error("mode out of range");
  op.words_.emplace(CliffWord{{}, {mode}}, 1);
  return op;
}

CliffordOperator CliffordOperator::from_generator(int stage, const CliffordGenerator& g) {
  if (g.index.degree() != 1) throw Error("generator label must be a monadic");
  int mode = static_cast<int>(serial_u32(g.index.factors().front().body()));
  return g.kind == GenKind::creator ? creator(stage, mode) : annihilator(stage, mode);
}

bool CliffordOperator::is_identity() const {
  return words_.size() == 1 && words_.begin()->first == CliffWord{} &&
         words_.begin()->second == 1;
}

void CliffordOperator::add_word(const CliffWord& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = words_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) words_.erase(it);
  }
}

CliffordOperator& CliffordOperator::operator+=(const CliffordOperator& o) {
  if (stage_ != o.stage_) throw StageMismatch(stage_, o.stage_);
  for (const auto& [w, c] : o.words_) add_word(w, c);
  return *this;
}

CliffordOperator operator-(const CliffordOperator& a, const CliffordOperator& b) {
  CliffordOperator out = a;
  out += Rational(-1) * b;
  return out;
}

CliffordOperator operator*(const Rational& c, const CliffordOperator& a) {
  CliffordOperator out(a.stage_);
  if (c == 0) return out;
  for (const auto& [w, cw] : a.words_) out.words_.emplace(w, c * cw);
  return out;
}

CliffordOperator operator*(const CliffordOperator& a, const CliffordOperator& b) {
  if (a.stage_ != b.stage_) throw StageMismatch(a.stage_, b.stage_);
  CliffordOperator out(a.stage_);
  for (const auto& [wa, ca] : a.words_) {
    for (const auto& [wb, cb] : b.words_) {
      std::vector<GenTok> seq;
      seq.reserve(wa.cre.size() + wa.ann.size() + wb.cre.size() + wb.ann.size());
      for (int m : wa.cre) seq.push_back({m, true});
      for (int m : wa.ann) seq.push_back({m, false});
      for (int m : wb.cre) seq.push_back({m, true});
      for (int m : wb.ann) seq.push_back({m, false});
      normal_order_into(out.words_, std::move(seq), ca * cb);
    }
  }
  std::erase_if(out.words_, [](const auto& e) { return e.second == 0; });
  return out;
}

CliffordOperator transpose(const CliffordOperator& op) {
  // (g1 ... gk)^T = gk^T ... g1^T with creator^T = annihilator in the
  // orthonormal classical basis.
  CliffordOperator out(op.stage());
  std::map<CliffWord, Rational> acc;
  for (const auto& [w, c] : op.words()) {
    std::vector<GenTok> seq;
    for (auto it = w.ann.rbegin(); it != w.ann.rend(); ++it) seq.push_back({*it, true});
    for (auto it = w.cre.rbegin(); it != w.cre.rend(); ++it) seq.push_back({*it, false});
    normal_order_into(acc, std::move(seq), c);
  }
  for (const auto& [w, c] : acc) out.add_word(w, c);
  return out;
}

Element apply(const CliffordOperator& op, const Element& a) {
  if (op.stage() != a.stage()) throw StageMismatch(op.stage(), a.stage());
  Element out(a.stage());
  for (const auto& [m, c] : a.terms()) {
    std::uint32_t mask = serial_u32(m);
    for (const auto& [w, cw] : op.words()) {
      std::uint32_t m2 = mask;
      int s = word_apply_mask(w, m2);
      if (s != 0) out.add_term(from_serial(static_cast<unsigned long>(m2)), c * cw * s);
    }
  }
  return out;
}

CliffordOperator anticommutator(const CliffordOperator& a, const CliffordOperator& b) {
  CliffordOperator out = a * b;
  out += b * a;
  return out;
}

CliffordOperator commutator(const CliffordOperator& a, const CliffordOperator& b) {
  return a * b - b * a;
}

CliffordOperator generator_from_duplex(const DuplexVector& f) {
  int stage = f.ket.stage() + 1;
  if (f.bra.stage != f.ket.stage()) throw StageMismatch(f.bra.stage, f.ket.stage());
  CliffordOperator op(stage);
  for (const auto& [m, c] : f.ket.terms())
    op.add_word(CliffWord{{static_cast<int>(serial_u32(m))}, {}}, c);
  for (const auto& [m, c] : f.bra.coterms)
    op.add_word(CliffWord{{}, {static_cast<int>(serial_u32(m))}}, c);
  return op;
}

CliffordOperator spin_generator(const DuplexVector& w1, const DuplexVector& w2) {
  CliffordOperator g1 = generator_from_duplex(w1);
  CliffordOperator g2 = generator_from_duplex(w2);
  return rat(1, 2) * commutator(g1, g2);
}

SparseMat matrix_of(const CliffordOperator& op) {
  if (op.stage() > 4) throw RankTooLarge(op.stage());
  long dim = 1l << op.modes();
  SparseMat m(dim, dim);
  for (long col = 0; col < dim; ++col) {
    for (const auto& [w, c] : op.words()) {
      std::uint32_t mask = static_cast<std::uint32_t>(col);
      int s = word_apply_mask(w, mask);
      if (s != 0) m.push(mask, col, c * s);
    }
  }
  m.finalize();
  return m;
}

SparseMat fock_creator(int n_modes, int mode) {
  long dim = 1l << n_modes;
  SparseMat m(dim, dim);
  for (long col = 0; col < dim; ++col) {
    std::uint32_t mask = static_cast<std::uint32_t>(col);
    std::uint32_t bit = 1u << mode;
    if (mask & bit) continue;
    m.push(mask | bit, col, jw_sign(mask, mode));
  }
  m.finalize();
  return m;
}

SparseMat fock_annihilator(int n_modes, int mode) {
  long dim = 1l << n_modes;
  SparseMat m(dim, dim);
  for (long col = 0; col < dim; ++col) {
    std::uint32_t mask = static_cast<std::uint32_t>(col);
    std::uint32_t bit = 1u << mode;
    if (!(mask & bit)) continue;
    m.push(mask ^ bit, col, jw_sign(mask, mode));
  }
  m.finalize();
  return m;
}

CheckReport car_check(int stage, std::uint64_t seed, long sample_vectors) {
  if (stage < 1 || stage > 4) throw RankTooLarge(stage);
  int n = stage_modes(stage);
  CheckReport report;
  report.name = "car";
  report.meta["stage"] = std::to_string(stage);
  report.meta["generators"] = std::to_string(2 * n);
  report.meta["seed"] = std::to_string(seed);

  auto cre = [&](int i) { return CliffordOperator::creator(stage, i); };
  auto ann = [&](int i) { return CliffordOperator::annihilator(stage, i); };
  const CliffordOperator id = CliffordOperator::identity(stage);
  const CliffordOperator zero = CliffordOperator::zero(stage);

  // Symbolic proof of every pairwise relation; this is exhaustive at every
  // stage because the rewrite system is exact.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      auto ca = anticommutator(cre(i), ann(j));
      bool ok = (i == j) ? ca == id : ca.is_zero();
      report.check("{c" + std::to_string(i) + ",a" + std::to_string(j) + "} = delta", ok);
      report.check("{c" + std::to_string(i) + ",c" + std::to_string(j) + "} = 0",
                   anticommutator(cre(i), cre(j)).is_zero());
      report.check("{a" + std::to_string(i) + ",a" + std::to_string(j) + "} = 0",
                   anticommutator(ann(i), ann(j)).is_zero());
    }
  }

  // Action check on basis vectors: exhaustive through stage 3, sampled at
  // stage 4. Everything stays in machine integers (signs are +-1).
  long dim = 1l << n;
  std::vector<std::uint32_t> masks;
  if (stage <= 3) {
    for (long q = 0; q < dim; ++q) masks.push_back(static_cast<std::uint32_t>(q));
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(dim - 1));
    for (long s = 0; s < sample_vectors; ++s) masks.push_back(dist(rng));
  }
  auto pair_apply = [](int ka, bool ca, int kb, bool cb, std::uint32_t mask,
                       std::uint32_t& out_mask) -> int {
    // applies g_b then g_a
    CliffWord wb, wa;
    (cb ? wb.cre : wb.ann).push_back(kb);
    (ca ? wa.cre : wa.ann).push_back(ka);
    std::uint32_t m = mask;
    int s = word_apply_mask(wb, m);
    if (s == 0) return 0;
    int s2 = word_apply_mask(wa, m);
    if (s2 == 0) return 0;
    out_mask = m;
    return s * s2;
  };
  long bad = 0;
  for (std::uint32_t mask : masks) {
    for (int i = 0; i < n && bad == 0; ++i) {
      for (int j = 0; j < n; ++j) {
        // {c_i, a_j} mask = delta_ij mask
        std::uint32_t m1, m2;
        int s1 = pair_apply(i, true, j, false, mask, m1);
        int s2 = pair_apply(j, false, i, true, mask, m2);
        int expect = (i == j) ? 1 : 0;
        std::uint32_t acc_mask = 0;
        int acc = 0;
        if (s1 != 0) {
          acc = s1;
          acc_mask = m1;
        }
        if (s2 != 0) {
          if (acc != 0 && m2 == acc_mask)
            acc += s2;
          else if (acc == 0) {
            acc = s2;
            acc_mask = m2;
          } else {
            ++bad;
            break;
          }
        }
        bool ok = (expect == 0) ? acc == 0 : (acc == 1 && acc_mask == mask);
        if (!ok) {
          ++bad;
          break;
        }
      }
    }
    if (bad) break;
  }
  report.check("basis-vector action of {c,a} relations (" +
                   std::to_string(masks.size()) + " vectors)",
               bad == 0);
  return report;
}

namespace {

// Index pairs (i<j) of frame planes; Gamma_{ji} = -Gamma_{ij}.
struct PlaneBasis {
  std::vector<std::pair<int, int>> pairs;
  std::map<std::pair<int, int>, int> index;
};

PlaneBasis plane_basis(int n_frame) {
  PlaneBasis pb;
  for (int i = 0; i < n_frame; ++i)
    for (int j = i + 1; j < n_frame; ++j) {
      pb.index[{i, j}] = static_cast<int>(pb.pairs.size());
      pb.pairs.emplace_back(i, j);
    }
  return pb;
}

// coefficient of Gamma_{pq} resolved into the i<j basis
void add_struct(std::vector<Rational>& row, const PlaneBasis& pb, int p, int q,
                const Rational& c) {
  if (p == q || c == 0) return;
  if (p < q)
    row[pb.index.at({p, q})] += c;
  else
    row[pb.index.at({q, p})] -= c;
}

}  // namespace

CheckReport so_closure_check(int stage, std::uint64_t seed, long sample_pairs) {
  if (stage < 2 || stage > 4) throw RankTooLarge(stage);
  CheckReport report;
  report.name = "so_closure";
  report.meta["stage"] = std::to_string(stage);
  report.meta["seed"] = std::to_string(seed);
  // gamma_{w'w} = [gamma(w'),gamma(w)]/2 closes with the structure constants
  // of the anticommutator-normalized duplex metric G = 2*diag(signs).
  report.meta["metric_normalization"] = "G_ab = {gamma(f_a),gamma(f_b)} = 2 diag(signs)";

  DuplexFrame frame = duplex_frame(stage - 1);
  int nf = static_cast<int>(frame.vectors.size());
  PlaneBasis pb = plane_basis(nf);
  int dim = static_cast<int>(pb.pairs.size());
  report.meta["algebra_dimension"] = std::to_string(dim);
  report.meta["group"] = "so(" + std::to_string(nf / 2) + "," + std::to_string(nf / 2) + ")";

  std::vector<CliffordOperator> gamma;
  gamma.reserve(dim);
  for (auto [i, j] : pb.pairs)
    gamma.push_back(spin_generator(frame.vectors[i], frame.vectors[j]));

  auto G = [&](int a, int b) -> Rational {
    return a == b ? Rational(2 * frame.signs[a]) : Rational(0);
  };

  // expected [Gamma_{ij}, Gamma_{kl}] expansion per the orthogonal pattern
  auto expected_row = [&](int p, int q) {
    auto [i, j] = pb.pairs[p];
    auto [k, l] = pb.pairs[q];
    std::vector<Rational> row(dim, Rational(0));
    add_struct(row, pb, i, l, G(j, k));
    add_struct(row, pb, j, l, -G(i, k));
    add_struct(row, pb, j, k, G(i, l));
    add_struct(row, pb, i, k, -G(j, l));
    return row;
  };

  std::vector<std::pair<int, int>> check_pairs;
  if (stage <= 3) {
    for (int p = 0; p < dim; ++p)
      for (int q = 0; q < dim; ++q) check_pairs.emplace_back(p, q);
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, dim - 1);
    for (long s = 0; s < sample_pairs; ++s) check_pairs.emplace_back(dist(rng), dist(rng));
  }

  long bad = 0;
  for (auto [p, q] : check_pairs) {
    CliffordOperator lhs = commutator(gamma[p], gamma[q]);
    auto row = expected_row(p, q);
    CliffordOperator rhs = CliffordOperator::zero(stage);
    for (int r = 0; r < dim; ++r)
      if (row[r] != 0) rhs += row[r] * gamma[r];
    if (!(lhs == rhs)) ++bad;
  }
  report.check("grade-2 commutators close with orthogonal structure constants (" +
                   std::to_string(check_pairs.size()) + " pairs)",
               bad == 0, static_cast<double>(bad));

  // Jacobi on random rational combinations.
  std::mt19937_64 rng(seed + 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  auto random_grade2 = [&]() {
    CliffordOperator x = CliffordOperator::zero(stage);
    for (int r = 0; r < dim; ++r) {
      int c = coeff(rng);
      if (c != 0) x += Rational(c) * gamma[r];
    }
    return x;
  };
  bool jacobi_ok = true;
  for (int t = 0; t < 5; ++t) {
    CliffordOperator a = random_grade2(), b = random_grade2(), c = random_grade2();
    CliffordOperator j = commutator(a, commutator(b, c));
    j += commutator(b, commutator(c, a));
    j += commutator(c, commutator(a, b));
    if (!j.is_zero()) jacobi_ok = false;
  }
  report.check("Jacobi identity on random triples", jacobi_ok);

  // Killing form from the verified structure constants; exact through
  // stage 3 (the stage-4 algebra is 496-dimensional, closure is sampled).
  if (stage <= 3) {
    std::vector<std::vector<std::vector<Rational>>> f(dim);
    for (int p = 0; p < dim; ++p) {
      f[p].resize(dim);
      for (int q = 0; q < dim; ++q) f[p][q] = expected_row(p, q);
    }
    RatMat killing(dim, dim);
    for (int a = 0; a < dim; ++a)
      for (int b = a; b < dim; ++b) {
        Rational k = 0;
        for (int c = 0; c < dim; ++c)
          for (int d = 0; d < dim; ++d) k += f[a][c][d] * f[b][d][c];
        killing(a, b) = k;
        killing(b, a) = k;
      }
    Rational det = determinant(killing);
    report.check("Killing form nondegenerate (regular)", det != 0, 0.0,
                 "det = " + det.get_str(), "!= 0");
    Signature sig = symmetric_signature(killing);
    report.meta["killing_signature"] =
        "(" + std::to_string(sig.n_plus) + "," + std::to_string(sig.n_minus) + ")";
  }
  return report;
}

RotationReport full_rotation_check(const DuplexVector& w1, const DuplexVector& w2, double tol) {
  CliffordOperator g = spin_generator(w1, w2);
  int stage = g.stage();
  if (stage > 3) throw RankTooLarge(stage);
  CliffordOperator sq = g * g;
  const CliffordOperator id = CliffordOperator::identity(stage);
  CliffordOperator plus = sq + id;    // zero iff square is -identity
  CliffordOperator minus = sq - id;   // zero iff square is +identity
  RotationReport rep;
  if (minus.is_zero()) throw NonCompactPlane();
  if (!plus.is_zero()) throw Error("plane is not orthonormal: square is not +-identity");
  rep.compact = true;
  SparseMat m = matrix_of(g);
  long n = m.rows();
  DMat dm(n, n);
  for (long c = 0; c < n; ++c)
    for (const auto& [r, v] : m.column(c)) dm(r, c) = v.get_d();
  DMat rot = expm(3.14159265358979323846 * dm);
  DMat target = -1.0 * DMat::identity(n);
  rep.max_deviation = (rot - target).max_abs();
  rep.ok = rep.max_deviation < tol;
  return rep;
}

}  // namespace plexus
