#include "plexus/basis.hpp"

#include <algorithm>
#include <sstream>

namespace plexus {

Monadic::Monadic(const BasisMonomial& body)
    : body_(std::make_shared<const BasisMonomial>(body)), rank_(body.rank() + 1) {}

BasisMonomial BasisMonomial::from_factors(std::vector<Monadic> descending) {
  BasisMonomial m;
  int r = 0;
  for (std::size_t i = 0; i < descending.size(); ++i) {
    r = std::max(r, descending[i].rank());
    if (i + 1 < descending.size() && compare(descending[i], descending[i + 1]) <= 0)
      throw Error("factors not strictly decreasing");
  }
  m.factors_ = std::move(descending);
  m.rank_ = r;
  return m;
}

int compare(const Monadic& a, const Monadic& b) {
  // serial(iota x) = 2^serial(x) is monotone, so monadics order by body.
  return compare(a.body(), b.body());
}

int compare(const BasisMonomial& a, const BasisMonomial& b) {
  // Binary numbers compare by highest differing bit: walk factor lists in
  // descending order; on a tie of prefixes the longer list is larger.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t n = std::min(fa.size(), fb.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = compare(fa[i], fb[i]);
    if (c != 0) return c;
  }
  if (fa.size() == fb.size()) return 0;
  return fa.size() < fb.size() ? -1 : +1;
}

BasisMonomial unit() { return BasisMonomial(); }

BasisMonomial iota_basis(const BasisMonomial& m) {
  return BasisMonomial::from_factors({Monadic(m)});
}

std::pair<int, BasisMonomial> wedge_basis(const BasisMonomial& a, const BasisMonomial& b) {
  // Merge two strictly-descending factor lists, counting the transpositions
  // needed to interleave them; every factor is odd, so each crossing is -1.
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::vector<Monadic> merged;
  merged.reserve(fa.size() + fb.size());
  std::size_t i = 0, j = 0;
  long crossings = 0;
  while (i < fa.size() && j < fb.size()) {
    int c = compare(fa[i], fb[j]);
    if (c == 0) return {0, unit()};
    if (c > 0) {
      merged.push_back(fa[i++]);
    } else {
      // fb[j] moves left past the remaining factors of a.
      crossings += static_cast<long>(fa.size() - i);
      merged.push_back(fb[j++]);
    }
  }
  while (i < fa.size()) merged.push_back(fa[i++]);
  while (j < fb.size()) merged.push_back(fb[j++]);
  int sign = (crossings % 2 == 0) ? +1 : -1;
  return {sign, BasisMonomial::from_factors(std::move(merged))};
}

Natural serial(const BasisMonomial& m, unsigned long bit_budget) {
  Natural total = 0;
  for (const auto& f : m.factors()) {
    Natural s = serial(f.body(), bit_budget);
    // 2^s has s+1 bits.
    if (s >= Natural(static_cast<unsigned long>(bit_budget)))
      throw BudgetExceeded("factor serial 2^" + s.get_str() + " needs more than " +
                           std::to_string(bit_budget) + " bits");
    total += pow2(s.get_ui());
  }
  return total;
}

std::uint32_t serial_u32(const BasisMonomial& m) {
  if (m.rank() > 4) throw RankTooLarge(m.rank());
  std::uint32_t total = 0;
  for (const auto& f : m.factors()) total += 1u << serial_u32(f.body());
  return total;
}

BasisMonomial from_serial(unsigned long q) { return from_serial(Natural(q)); }

BasisMonomial from_serial(const Natural& q) {
  if (q < 0) throw Error("serial must be nonnegative");
  std::vector<Monadic> factors;
  mp_bitcnt_t k = mpz_scan1(q.get_mpz_t(), 0);
  while (k != static_cast<mp_bitcnt_t>(-1)) {
    factors.push_back(Monadic(from_serial(static_cast<unsigned long>(k))));
    k = mpz_scan1(q.get_mpz_t(), k + 1);
  }
  // Bits come out ascending; canonical order is descending.
  std::reverse(factors.begin(), factors.end());
  return BasisMonomial::from_factors(std::move(factors));
}

Natural hyper_exp(int r) {
  if (r < 0) throw Error("negative rank");
  if (r > 5) throw RankTooLarge(r);
  Natural e = 1;
  for (int i = 0; i < r; ++i) e = pow2(e.get_ui());
  return e;
}

unsigned long stage_dim(int r) {
  if (r < 0) throw Error("negative rank");
  if (r > 4) throw RankTooLarge(r);
  static const unsigned long dims[5] = {1, 2, 4, 16, 65536};
  return dims[r];
}

std::vector<BasisMonomial> enumerate_stage(int r) {
  unsigned long dim = stage_dim(r);
  // One shared monadic per bit keeps the 65536 stage-4 trees small.
  unsigned long n_bits = (r == 0) ? 0 : stage_dim(r - 1);
  std::vector<Monadic> bit_monadic;
  std::vector<BasisMonomial> out;
  out.reserve(dim);
  for (unsigned long k = 0; k < n_bits; ++k) bit_monadic.push_back(Monadic(from_serial(k)));
  for (unsigned long q = 0; q < dim; ++q) {
    std::vector<Monadic> fs;
    for (unsigned long k = n_bits; k-- > 0;)
      if (q & (1ul << k)) fs.push_back(bit_monadic[k]);
    out.push_back(BasisMonomial::from_factors(std::move(fs)));
  }
  return out;
}

namespace {

std::string expr_of(const BasisMonomial& m) {
  if (m.is_unit()) return "1";
  std::string s;
  for (std::size_t i = 0; i < m.factors().size(); ++i) {
    if (i > 0) s += " v ";
    s += "i(" + expr_of(m.factors()[i].body()) + ")";
  }
  return s;
}

struct Block {
  std::vector<std::string> lines;  // top to bottom
  std::size_t width = 0;
};

Block block_of(const BasisMonomial& m);

Block block_of_monadic(const Monadic& f) {
  Block b = block_of(f.body());
  b.lines.insert(b.lines.begin(), std::string(b.width, '_'));
  return b;
}

Block block_of(const BasisMonomial& m) {
  if (m.is_unit()) return {{"1"}, 1};
  std::vector<Block> parts;
  std::size_t height = 0, width = 0;
  for (const auto& f : m.factors()) {
    parts.push_back(block_of_monadic(f));
    height = std::max(height, parts.back().lines.size());
    width += parts.back().width + 1;
  }
  width -= 1;
  Block out;
  out.width = width;
  out.lines.assign(height, "");
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const Block& b = parts[p];
    std::size_t pad = height - b.lines.size();
    for (std::size_t row = 0; row < height; ++row) {
      std::string piece =
          row < pad ? std::string(b.width, ' ') : b.lines[row - pad];
      out.lines[row] += piece;
      if (p + 1 < parts.size()) out.lines[row] += ' ';
    }
  }
  return out;
}

}  // namespace

std::string render(const BasisMonomial& m, MonomialFormat fmt) {
  switch (fmt) {
    case MonomialFormat::expr:
      return expr_of(m);
    case MonomialFormat::serial:
      return "e" + serial(m).get_str();
    case MonomialFormat::nested_bar: {
      Block b = block_of(m);
      std::string s;
      for (std::size_t i = 0; i < b.lines.size(); ++i) {
        if (i > 0) s += '\n';
        s += b.lines[i];
      }
      return s;
    }
  }
  return {};
}

}  // namespace plexus
