#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gtsg/nat.hpp"

namespace gtsg {

class SemigroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// gcd of the generators is not 1, so the monoid has infinite complement.
class GcdNotOne : public SemigroupError {
 public:
  explicit GcdNotOne(const Nat& gcd)
      : SemigroupError("generators have gcd " + gcd.str() + ", expected 1"),
        gcd_(gcd) {}
  const Nat& gcd() const noexcept { return gcd_; }

 private:
  Nat gcd_;
};

class EmptyInput : public SemigroupError {
 public:
  EmptyInput() : SemigroupError("no positive generators given") {}
};

class NotMember : public SemigroupError {
 public:
  explicit NotMember(const Nat& x)
      : SemigroupError(x.str() + " is not an element of the semigroup") {}
};

class ZeroModulus : public SemigroupError {
 public:
  ZeroModulus() : SemigroupError("Apery modulus must be nonzero") {}
};

/// The modulus would need more residue slots than can be allocated.
class ModulusTooLarge : public SemigroupError {
 public:
  explicit ModulusTooLarge(const Nat& x)
      : SemigroupError("Apery modulus " + x.str() + " is too large to tabulate") {}
};

/// Sorted, duplicate-free generators of a numerical semigroup (gcd 1).
///
/// Only constructible through make_semigroup, so every instance satisfies the
/// invariants.
class GeneratorSet {
 public:
  std::span<const Nat> gens() const noexcept { return gens_; }
  const Nat& smallest() const noexcept { return gens_.front(); }
  std::size_t size() const noexcept { return gens_.size(); }

  friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

 private:
  friend GeneratorSet make_semigroup(std::vector<Nat> gens);
  explicit GeneratorSet(std::vector<Nat> gens) : gens_(std::move(gens)) {}

  std::vector<Nat> gens_;
};

/// Least semigroup element in each residue class modulo `modulus`.
class AperyTable {
 public:
  AperyTable(Nat modulus, std::vector<Nat> w);

  const Nat& modulus() const noexcept { return modulus_; }
  std::span<const Nat> by_residue() const noexcept { return w_; }
  const Nat& operator[](std::size_t residue) const { return w_.at(residue); }
  std::size_t size() const noexcept { return w_.size(); }

  /// The Apery set as a sorted list.
  std::vector<Nat> sorted() const;
  const Nat& max() const;
  Nat sum() const;

  /// v is in S iff v >= w[v mod modulus].
  bool contains(const Nat& v) const;
  bool contains(std::uint64_t v) const;

 private:
  Nat modulus_;
  std::vector<Nat> w_;
  std::vector<std::uint64_t> w64_;  // copy of w_ when every entry fits
};

/// Normalizes and validates a generator list: zeros and duplicates are
/// dropped, the rest sorted ascending.
/// Throws EmptyInput when nothing positive remains, GcdNotOne otherwise.
GeneratorSet make_semigroup(std::vector<Nat> gens);

/// Apery set of S with respect to x, via Dijkstra on the residue graph
/// mod x (one edge r -> r+g per generator g, weight g).
AperyTable apery_set(const GeneratorSet& s, const Nat& x);
AperyTable apery_set(const GeneratorSet& s);

/// max(Ap(S, m)) - m with m the smallest generator; -1 when S = N.
Nat frobenius(const GeneratorSet& s);
Nat frobenius(const AperyTable& ap);

/// Number of gaps, from the Apery sum. Throws std::logic_error if the sum is
/// not consistent with a numerical semigroup (inexact division).
Nat genus(const GeneratorSet& s);
Nat genus(const AperyTable& ap);

bool is_member(const GeneratorSet& s, const Nat& x);

/// The unique minimal system of generators of <S>.
GeneratorSet minimal_generators(const GeneratorSet& s);

/// Shortest distances from residue 0 in the residue graph of `gens` modulo
/// `modulus`. Unreachable residues are left as -1. The generators need not
/// have gcd 1, which is what minimal-generator checks on subsets rely on.
std::vector<Nat> residue_distances(std::span<const Nat> gens,
                                   std::uint64_t modulus);

}  // namespace gtsg
