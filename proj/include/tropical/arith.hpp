#pragma once

// Exact scalar and vector types shared by every module.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tropical {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" into a canonical rational. Throws
/// std::invalid_argument on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical lowest-terms text, "p" for integers and "p/q" with q > 0 otherwise.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

RatVector to_rational(const IntVector& v);
IntVector zero_int_vector(std::size_t n);
RatVector zero_rat_vector(std::size_t n);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);
Integer dot(std::span<const Integer> a, std::span<const Integer> b);

RatVector operator+(const RatVector& a, const RatVector& b);
RatVector operator-(const RatVector& a, const RatVector& b);
RatVector operator*(const Rational& s, const RatVector& v);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator*(const Integer& s, const IntVector& v);

bool is_zero(std::span<const Rational> v);
bool is_zero(std::span<const Integer> v);
bool is_integral(std::span<const Rational> v);

/// Smallest positive multiple of v with integer entries whose gcd is 1.
/// The zero vector maps to the zero vector.
IntVector primitive_integer_multiple(std::span<const Rational> v);

/// Exact integer conversion; throws std::domain_error if q is not integral.
Integer to_integer(const Rational& q);

/// Lexicographic three-way comparison on equal-length vectors.
std::strong_ordering compare(std::span<const Rational> a, std::span<const Rational> b);
std::strong_ordering compare(std::span<const Integer> a, std::span<const Integer> b);

std::string to_string(std::span<const Rational> v);
std::string to_string(std::span<const Integer> v);

}  // namespace tropical
