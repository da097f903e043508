#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hypermet {

using Integer = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Builds num/den in lowest terms. Throws Error(InvalidArgument) on den == 0.
Rational make_rational(const Integer& num, const Integer& den);

/// Parses "p", "-p" or "p/q". Throws Error(Parse) naming the token.
Rational parse_rational(std::string_view token);
Integer parse_integer(std::string_view token);

std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// "(a,b,c)" with p/q entries.
std::string format_vector(const RatVector& v);
std::string format_vector(const IntVector& v);

Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const IntVector& a, const RatVector& b);

RatVector to_rational(const IntVector& v);

/// Smallest positive rational multiple of v with integer, coprime entries.
/// The zero vector maps to the zero vector.
IntVector primitive(const RatVector& v);
IntVector primitive(const IntVector& v);

/// Like primitive(), then flips sign so the first nonzero entry is positive.
IntVector normalized_ray(const RatVector& v);
IntVector normalized_ray(const IntVector& v);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

}  // namespace hypermet
