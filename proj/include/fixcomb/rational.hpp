// Exact rational scalars and points. Arithmetic is arbitrary precision and
// always canonical (gcd(num, den) = 1, den > 0).
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <vector>

namespace fixcomb {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Serialized form is always "p/q", e.g. "1/2", "-3/1".
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or a bare integer "p"; result is canonical either way.
// Throws std::invalid_argument on malformed input or zero denominator.
Rat rat_from_string(const std::string& s);

using Point = std::vector<Rat>;

Point negated(const Point& p);
Rat dot(const Point& a, const Point& b);
Rat l1_norm(const Point& p);
Rat linf_norm(const Point& p);
Rat coord_sum(const Point& p);
std::string point_to_string(const Point& p);

}  // namespace fixcomb
