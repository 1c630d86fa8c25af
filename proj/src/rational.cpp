#include "bergkern/rational.hpp"

#include <stdexcept>

namespace bergkern {

std::string rat_to_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

Rat binomial_rat(long n, long k) {
    if (k < 0 || k > n) return Rat(0);
    if (k > n - k) k = n - k;
    Int num = 1, den = 1;
    for (long j = 0; j < k; ++j) {
        num *= Int(n - j);
        den *= Int(j + 1);
    }
    return Rat(num, den);
}

} // namespace bergkern
