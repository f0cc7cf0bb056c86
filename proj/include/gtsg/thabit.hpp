#pragma once

// Closed forms for the semigroups
//
//   GT(n,k) = < (2^k + 1) 2^(n+i) - (2^k - 1) : i >= 0 >,   n >= 0, k >= 1.
//
// Elements of the Apery set with respect to s_0 are written in coefficient
// form t_1 s_1 + ... + t_L s_L with L = n + delta and t_i in {0,1,2}.

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gtsg/nat.hpp"
#include "gtsg/semigroup.hpp"

namespace gtsg::thabit {

class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed form disagreed with one of its own consistency checks.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class LengthMismatch : public std::invalid_argument {
 public:
  LengthMismatch(std::size_t expected, std::size_t got)
      : std::invalid_argument("coefficient sequence has length " +
                              std::to_string(got) + ", expected " +
                              std::to_string(expected)) {}
};

struct GTParams {
  std::uint32_t n = 0;
  std::uint32_t k = 1;

  /// Throws DomainError when k = 0.
  GTParams(std::uint32_t n, std::uint32_t k);

  friend bool operator==(const GTParams&, const GTParams&) = default;
};

enum class CaseTag { N0, K1, KltN, KeqN, KgtN, Exception12 };

std::string_view to_string(CaseTag tag);

/// Coefficients (t_1, ..., t_L); t[0] holds t_1.
struct CoeffSeq {
  std::vector<std::uint8_t> t;

  std::size_t size() const noexcept { return t.size(); }
  /// 1-based access matching the usual subscripts.
  std::uint8_t at(std::size_t i) const { return t.at(i - 1); }
  std::string digits() const;  // "0 1 1 0"

  friend bool operator==(const CoeffSeq&, const CoeffSeq&) = default;
  friend auto operator<=>(const CoeffSeq&, const CoeffSeq&) = default;
};

/// The prefix rule: a 2 at position j forces zeros at every i < j.
bool has_two_rule(const CoeffSeq& c);

/// Membership in A(n,delta): the prefix rule plus a last entry in {0,1}.
bool in_coeff_superset(const CoeffSeq& c);

/// P = sum t_i (2^i - 1), the scalar image of a sequence.
Nat weight_sum(const CoeffSeq& c);

Nat generator_at(const GTParams& p, std::uint64_t i);

/// delta = 1 if n = 0; k if k <= n; k - 1 if k > n.
std::uint32_t delta(const GTParams& p);

/// Length n + delta of the coefficient sequences for p.
std::uint32_t coeff_length(const GTParams& p);

/// {s_0, ..., s_(n+delta)}.
GeneratorSet minimal_generating_set(const GTParams& p);

std::uint32_t embedding_dimension(const GTParams& p);

CaseTag case_of(const GTParams& p);

/// sum t_i s_i. Throws LengthMismatch unless c has length n + delta.
Nat coeff_value(const GTParams& p, const CoeffSeq& c);

/// Unique sequence of the given length that satisfies the prefix rule with
/// sum t_i (2^i - 1) = target, or nullopt if target > 2 (2^length - 1).
std::optional<CoeffSeq> coeff_solve(const Nat& target, std::uint32_t length);

Nat max_apery(const GTParams& p);

/// Coefficient form of max_apery(p).
CoeffSeq max_apery_coeffs(const GTParams& p);

Nat frobenius_closed(const GTParams& p);

/// 85 * 2^(2n-2) - 5 * 2^n - 9, the Frobenius number of GT(n,2) for n >= 2.
Nat frobenius_k2_closed(std::uint32_t n);

/// Shortcut for 2 <= k < n <= 2^k + k - 3. Throws DomainError otherwise.
Nat max_apery_fast_kltn(const GTParams& p);

/// Streams every coefficient sequence of the Apery set of p with respect to
/// s_0, in enumeration order. Memory stays O(n + delta).
void for_each_apery_coeff(const GTParams& p,
                          const std::function<void(const CoeffSeq&)>& visit);

std::vector<CoeffSeq> apery_coeffs(const GTParams& p);

/// Ap(GT(n,k), s_0) sorted ascending.
std::vector<Nat> apery_set_closed(const GTParams& p);

Nat genus_closed(const GTParams& p);

}  // namespace gtsg::thabit
