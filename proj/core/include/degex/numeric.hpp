#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace degex {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
/// 50 significant decimal digits; used only where a quantity is irrational
/// (logarithms, exponentials, square roots).
using Real = boost::multiprecision::cpp_bin_float_50;

/// Parses "NUM/DEN", an integer, or a plain decimal such as "0.25" into an
/// exact rational. Throws ValidationError on anything else.
Rational parse_rational(std::string_view text);

/// Canonical "NUM/DEN" form (or just "NUM" when the denominator is 1).
std::string to_string(const Rational& q);

BigInt floor(const Rational& q);
BigInt ceil(const Rational& q);

/// Largest integer s with s*s <= v. Requires v >= 0.
BigInt isqrt(const BigInt& v);

/// Throws ValidationError unless 0 <= q <= 1.
void require_unit_interval(const Rational& q, std::string_view name);

Real to_real(const Rational& q);

double to_double(const Rational& q);

/// Fits-in-u64 conversion; throws OverflowError otherwise.
std::uint64_t to_u64(const BigInt& v);

}  // namespace degex
