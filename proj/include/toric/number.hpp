#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace toric {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// A point of Z^n. Ranks are carried by the containing objects.
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor division (rounds toward negative infinity).
Integer floor_div(const Integer& a, const Integer& b);

Integer dot(const IntVector& a, const IntVector& b);
Rational dot(const RatVector& a, const RatVector& b);

bool is_zero(const IntVector& v);
bool is_zero(const RatVector& v);

IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector negate(const IntVector& v);
IntVector scale(const Integer& c, const IntVector& v);
IntVector unit_vector(std::size_t rank, std::size_t index);

/// gcd of all entries (0 for the zero vector).
Integer content(const IntVector& v);

/// Divides out the content; the zero vector is returned unchanged.
IntVector primitive(const IntVector& v);

/// Clears denominators and returns the primitive integer vector on the same
/// ray (positive multiple).
IntVector primitive(const RatVector& v);

RatVector to_rational(const IntVector& v);

/// "(1,0,-2)"
std::string to_string(const IntVector& v);

}  // namespace toric
