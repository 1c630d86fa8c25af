#ifndef BERGKERN_RATIONAL_HPP
#define BERGKERN_RATIONAL_HPP

#include <complex>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace bergkern {

// Exact rational scalar. cpp_rational keeps the canonical form for us:
// denominator > 0, gcd(|num|, den) = 1, zero stored as 0/1.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Cplx = std::complex<double>;

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

// Canonical "p/q" form ("p" when the denominator is 1).
std::string rat_to_string(const Rat& r);

// Accepts "p", "p/q" and optional leading sign. Throws std::invalid_argument.
Rat rat_from_string(const std::string& s);

// Exact binomial coefficient C(n, k); zero for k < 0 or k > n.
Rat binomial_rat(long n, long k);

} // namespace bergkern

#endif
