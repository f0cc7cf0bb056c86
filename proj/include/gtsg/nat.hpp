#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gtsg {

/// Arbitrary-precision integer used for every semigroup element.
///
/// The type is signed so that Frobenius numbers of the whole of N (-1) are
/// representable; all other values produced by the library are nonnegative.
using Nat = boost::multiprecision::cpp_int;

inline Nat pow2(std::uint64_t e) {
  Nat r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

inline std::string to_string(const Nat& v) { return v.str(); }

/// Parses a nonnegative decimal integer. Returns nullopt on any non-digit.
std::optional<Nat> parse_nat(std::string_view text);

/// Narrowing conversion that refuses values outside [0, 2^64).
std::optional<std::uint64_t> to_u64(const Nat& v);

}  // namespace gtsg
