#include "gtsg/thabit.hpp"

#include <algorithm>

namespace gtsg::thabit {

GTParams::GTParams(std::uint32_t n_, std::uint32_t k_) : n(n_), k(k_) {
  if (k == 0) throw DomainError("GT(n,k) needs k >= 1");
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::N0: return "N0";
    case CaseTag::K1: return "K1";
    case CaseTag::KltN: return "KltN";
    case CaseTag::KeqN: return "KeqN";
    case CaseTag::KgtN: return "KgtN";
    case CaseTag::Exception12: return "Exception12";
  }
  return "?";
}

std::string CoeffSeq::digits() const {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ' ';
    out += static_cast<char>('0' + t[i]);
  }
  return out;
}

bool has_two_rule(const CoeffSeq& c) {
  bool seen_nonzero = false;
  for (std::uint8_t v : c.t) {
    if (v > 2) return false;
    if (v == 2 && seen_nonzero) return false;
    if (v != 0) seen_nonzero = true;
  }
  return true;
}

bool in_coeff_superset(const CoeffSeq& c) {
  return has_two_rule(c) && (c.t.empty() || c.t.back() <= 1);
}

Nat weight_sum(const CoeffSeq& c) {
  Nat total = 0;
  for (std::size_t i = 1; i <= c.size(); ++i)
    if (c.at(i)) total += c.at(i) * (pow2(i) - 1);
  return total;
}

Nat generator_at(const GTParams& p, std::uint64_t i) {
  Nat a = pow2(p.k);
  return (a + 1) * pow2(p.n + i) - (a - 1);
}

std::uint32_t delta(const GTParams& p) {
  if (p.n == 0) return 1;
  return p.k <= p.n ? p.k : p.k - 1;
}

std::uint32_t coeff_length(const GTParams& p) { return p.n + delta(p); }

GeneratorSet minimal_generating_set(const GTParams& p) {
  std::vector<Nat> gens;
  for (std::uint64_t i = 0; i <= coeff_length(p); ++i)
    gens.push_back(generator_at(p, i));
  return make_semigroup(std::move(gens));
}

std::uint32_t embedding_dimension(const GTParams& p) {
  return coeff_length(p) + 1;
}

CaseTag case_of(const GTParams& p) {
  if (p.n == 0) return CaseTag::N0;
  if (p.n == 1 && p.k == 2) return CaseTag::Exception12;
  if (p.k == 1) return CaseTag::K1;
  if (p.k == p.n) return CaseTag::KeqN;
  if (p.k < p.n) return CaseTag::KltN;
  return CaseTag::KgtN;
}

namespace {

// s_1 .. s_L, index 0 unused.
std::vector<Nat> generator_table(const GTParams& p) {
  std::vector<Nat> s(coeff_length(p) + 1);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = generator_at(p, i);
  return s;
}

Nat value_with(const std::vector<Nat>& s, const CoeffSeq& c) {
  Nat total = 0;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    switch (c.at(i)) {
      case 0: break;
      case 1: total += s[i]; break;
      default: total += c.at(i) * s[i]; break;
    }
  }
  return total;
}

CoeffSeq solve_or_throw(const Nat& target, std::uint32_t length) {
  auto c = coeff_solve(target, length);
  if (!c)
    throw InternalInconsistency("no coefficient solution for target " +
                                target.str() + " at length " +
                                std::to_string(length));
  return *c;
}

}  // namespace

Nat coeff_value(const GTParams& p, const CoeffSeq& c) {
  if (c.size() != coeff_length(p)) throw LengthMismatch(coeff_length(p), c.size());
  return value_with(generator_table(p), c);
}

std::optional<CoeffSeq> coeff_solve(const Nat& target, std::uint32_t length) {
  if (target < 0) return std::nullopt;
  if (target > 2 * (pow2(length) - 1)) return std::nullopt;
  // Positions below i can reach at most 2^i - 2 < 2^i - 1, so each digit is
  // forced from the top down: skew-binary expansion.
  CoeffSeq c{std::vector<std::uint8_t>(length, 0)};
  Nat rest = target;
  for (std::uint32_t i = length; i >= 1; --i) {
    Nat w = pow2(i) - 1;
    Nat digit = rest / w;
    if (digit > 2) break;
    c.t[i - 1] = static_cast<std::uint8_t>(digit);
    rest -= digit * w;
  }
  if (rest != 0 || !has_two_rule(c) || weight_sum(c) != target)
    throw InternalInconsistency("coefficient expansion of " + target.str() +
                                " is not unique at length " +
                                std::to_string(length));
  return c;
}

CoeffSeq max_apery_coeffs(const GTParams& p) {
  const std::uint32_t n = p.n, k = p.k, len = coeff_length(p);
  CoeffSeq c{std::vector<std::uint8_t>(len, 0)};
  auto set = [&](std::uint32_t i, std::uint8_t v) { c.t[i - 1] = v; };
  auto copy_prefix = [&](const CoeffSeq& prefix) {
    std::copy(prefix.t.begin(), prefix.t.end(), c.t.begin());
  };
  switch (case_of(p)) {
    case CaseTag::N0:
      set(1, 1);
      break;
    case CaseTag::K1:
      set(n, 1);
      set(n + 1, 1);
      break;
    case CaseTag::KltN:
      copy_prefix(solve_or_throw(pow2(n - 1) - pow2(k) + 2, n - 2));
      set(n - 1, 1);
      set(n + k, 1);
      break;
    case CaseTag::KeqN:
      set(1, 1);
      set(2 * n, 1);
      break;
    case CaseTag::KgtN:
      copy_prefix(solve_or_throw(pow2(n) + n, k - 1));
      for (std::uint32_t i = k; i <= n + k - 1; ++i) set(i, 1);
      break;
    case CaseTag::Exception12:
      // 74 = 2 s_2; outside A(n,delta) since the last entry is 2.
      set(2, 2);
      break;
  }
  return c;
}

Nat max_apery(const GTParams& p) {
  return value_with(generator_table(p), max_apery_coeffs(p));
}

Nat frobenius_closed(const GTParams& p) {
  return max_apery(p) - generator_at(p, 0);
}

Nat frobenius_k2_closed(std::uint32_t n) {
  if (n < 2) throw DomainError("the k = 2 formula needs n >= 2");
  return 85 * pow2(2 * n - 2) - 5 * pow2(n) - 9;
}

Nat max_apery_fast_kltn(const GTParams& p) {
  const std::uint32_t n = p.n, k = p.k;
  if (!(2 <= k && k < n) || Nat(n) > pow2(k) + k - 3)
    throw DomainError("shortcut needs 2 <= k < n <= 2^k + k - 3");
  auto s = generator_table(p);
  CoeffSeq c{std::vector<std::uint8_t>(coeff_length(p), 0)};
  auto prefix = solve_or_throw(Nat(n + 1 - k), k - 1);
  std::copy(prefix.t.begin(), prefix.t.end(), c.t.begin());
  for (std::uint32_t i = k; i <= n - 1; ++i) c.t[i - 1] = 1;
  c.t[n + k - 1] = 1;
  return value_with(s, c);
}

namespace {

// Visits every sequence of A(n,delta) of length len in a fixed order: first
// those without a 2, then by the position of the 2.
template <typename F>
void for_each_superset(std::uint32_t len, F&& visit) {
  CoeffSeq c{std::vector<std::uint8_t>(len, 0)};
  // Binary odometer over positions [from, len].
  auto sweep = [&](std::uint32_t from) {
    for (std::uint32_t i = from; i <= len; ++i) c.t[i - 1] = 0;
    while (true) {
      visit(static_cast<const CoeffSeq&>(c));
      std::uint32_t i = from;
      while (i <= len && c.t[i - 1] == 1) c.t[(i++) - 1] = 0;
      if (i > len) return;
      c.t[i - 1] = 1;
    }
  };
  if (len == 0) {
    visit(static_cast<const CoeffSeq&>(c));
    return;
  }
  sweep(1);
  for (std::uint32_t j = 1; j < len; ++j) {
    std::fill(c.t.begin(), c.t.end(), 0);
    c.t[j - 1] = 2;
    sweep(j + 1);
  }
}

bool all_equal(const CoeffSeq& c, std::uint32_t from, std::uint32_t to,
               std::uint8_t v) {
  for (std::uint32_t i = from; i <= to; ++i)
    if (c.at(i) != v) return false;
  return true;
}

Nat prefix_weight(const CoeffSeq& c, std::uint32_t upto) {
  Nat total = 0;
  for (std::uint32_t i = 1; i <= upto; ++i)
    if (c.at(i)) total += c.at(i) * (pow2(i) - 1);
  return total;
}

// Conditions beyond A(n,delta) for each generic case.
bool in_thabit_set(const CoeffSeq& c, std::uint32_t n) {
  // Thabit (k = 1): t_n = 2 forbids t_(n+1) = 1; t_n = t_(n+1) = 1 forces
  // zeros below n.
  if (c.at(n + 1) != 1) return true;
  if (c.at(n) == 2) return false;
  if (c.at(n) == 1) return all_equal(c, 1, n - 1, 0);
  return true;
}

bool in_kltn_set(const CoeffSeq& c, std::uint32_t n, std::uint32_t k,
                 const Nat& bound) {
  if (c.at(n + k) != 1) return true;
  if (!all_equal(c, n, n + k - 1, 0)) return false;
  switch (c.at(n - 1)) {
    case 0: return true;
    case 1: return prefix_weight(c, n - 2) <= bound;
    default: return false;  // 2 s_(n-1) + s_(n+k) is never an Apery element
  }
}

bool in_keqn_set(const CoeffSeq& c, std::uint32_t n) {
  if (c.at(2 * n) != 1) return true;
  return c.at(1) <= 1 && all_equal(c, 2, 2 * n - 1, 0);
}

bool in_kgtn_set(const CoeffSeq& c, std::uint32_t n, std::uint32_t k,
                 const Nat& bound) {
  const std::uint32_t top = n + k - 1;
  if (all_equal(c, k, top, 1)) return prefix_weight(c, k - 1) <= bound;
  // A 2 inside the top block followed only by ones lands in the residue
  // class of an all-ones block with P_(k-1) beyond the bound.
  for (std::uint32_t i = k; i < top; ++i)
    if (c.at(i) == 2) return !all_equal(c, i + 1, top, 1);
  return true;
}

}  // namespace

void for_each_apery_coeff(const GTParams& p,
                          const std::function<void(const CoeffSeq&)>& visit) {
  const std::uint32_t n = p.n, k = p.k, len = coeff_length(p);
  switch (case_of(p)) {
    case CaseTag::N0:
      visit(CoeffSeq{{0}});
      visit(CoeffSeq{{1}});
      return;
    case CaseTag::Exception12:
    {
      // Ap(GT(1,2), 7) = {0, 17, 34, 37, 54, 71, 74} over s_1 = 17, s_2 = 37.
      static const std::uint8_t table[7][2] = {{0, 0}, {1, 0}, {2, 0}, {0, 1},
                                               {1, 1}, {2, 1}, {0, 2}};
      for (const auto& row : table) visit(CoeffSeq{{row[0], row[1]}});
      return;
    }
    case CaseTag::K1:
      for_each_superset(len, [&](const CoeffSeq& c) {
        if (in_thabit_set(c, n)) visit(c);
      });
      return;
    case CaseTag::KltN: {
      const Nat bound = pow2(n - 1) - pow2(k) + 2;
      for_each_superset(len, [&](const CoeffSeq& c) {
        if (in_kltn_set(c, n, k, bound)) visit(c);
      });
      return;
    }
    case CaseTag::KeqN:
      for_each_superset(len, [&](const CoeffSeq& c) {
        if (in_keqn_set(c, n)) visit(c);
      });
      return;
    case CaseTag::KgtN: {
      const Nat bound = pow2(n) + n;
      for_each_superset(len, [&](const CoeffSeq& c) {
        if (in_kgtn_set(c, n, k, bound)) visit(c);
      });
      return;
    }
  }
}

std::vector<CoeffSeq> apery_coeffs(const GTParams& p) {
  std::vector<CoeffSeq> out;
  for_each_apery_coeff(p, [&](const CoeffSeq& c) { out.push_back(c); });
  return out;
}

std::vector<Nat> apery_set_closed(const GTParams& p) {
  auto s = generator_table(p);
  std::vector<Nat> out;
  for_each_apery_coeff(p, [&](const CoeffSeq& c) { out.push_back(value_with(s, c)); });
  std::sort(out.begin(), out.end());
  const Nat s0 = s[0];
  if (Nat(out.size()) != s0)
    throw InternalInconsistency("closed Apery set of GT(" + std::to_string(p.n) +
                                "," + std::to_string(p.k) + ") has " +
                                std::to_string(out.size()) + " elements, expected " +
                                s0.str());
  return out;
}

Nat genus_closed(const GTParams& p) {
  const Nat x = generator_at(p, 0);
  Nat sum = 0;
  for (const Nat& w : apery_set_closed(p)) sum += w;
  Nat num = 2 * sum - x * (x - 1);
  Nat den = 2 * x;
  if (num % den != 0)
    throw InternalInconsistency("genus of GT(" + std::to_string(p.n) + "," +
                                std::to_string(p.k) + ") is not an integer");
  return num / den;
}

}  // namespace gtsg::thabit
