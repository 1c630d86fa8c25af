#include "bergkern/bipoly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace bergkern {

BiPoly BiPoly::constant(const Rat& c) { return monomial(0, 0, c); }

BiPoly BiPoly::monomial(long i, long j, const Rat& c) {
    BiPoly p;
    p.add_term(i, j, c);
    return p;
}

long BiPoly::deg_x() const {
    long d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.first);
    return d;
}

long BiPoly::deg_y() const {
    long d = -1;
    for (const auto& [key, c] : terms_) d = std::max(d, key.second);
    return d;
}

Rat BiPoly::coeff(long i, long j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rat(0) : it->second;
}

void BiPoly::add_term(long i, long j, const Rat& c) {
    if (i < 0 || j < 0) throw std::invalid_argument("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(Key{i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, c);
    return out;
}

BiPoly BiPoly::operator-(const BiPoly& o) const {
    BiPoly out = *this;
    for (const auto& [key, c] : o.terms_) out.add_term(key.first, key.second, -c);
    return out;
}

BiPoly BiPoly::operator*(const BiPoly& o) const {
    BiPoly out;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

BiPoly BiPoly::operator*(const Rat& c) const {
    BiPoly out;
    if (c == 0) return out;
    for (const auto& [key, v] : terms_) out.terms_.emplace(key, v * c);
    return out;
}

BiPoly BiPoly::operator-() const { return *this * Rat(-1); }

BiPoly BiPoly::diff(Var v) const {
    BiPoly out;
    for (const auto& [key, c] : terms_) {
        if (v == Var::X) {
            if (key.first > 0) out.add_term(key.first - 1, key.second, c * key.first);
        } else {
            if (key.second > 0) out.add_term(key.first, key.second - 1, c * key.second);
        }
    }
    return out;
}

BiPoly BiPoly::swap_xy() const {
    BiPoly out;
    for (const auto& [key, c] : terms_) out.add_term(key.second, key.first, c);
    return out;
}

Cplx BiPoly::eval(Cplx x, Cplx y) const {
    // Horner in x over Horner-in-y coefficients.
    Cplx acc(0.0, 0.0);
    long dx = deg_x();
    if (dx < 0) return acc;
    auto it = terms_.rbegin();
    for (long i = dx; i >= 0; --i) {
        Cplx row(0.0, 0.0);
        long prev_j = -1;
        // terms with this x-degree, highest y first
        for (; it != terms_.rend() && it->first.first == i; ++it) {
            long j = it->first.second;
            if (prev_j < 0) {
                row = Cplx(to_double(it->second), 0.0);
            } else {
                for (long k = j; k < prev_j; ++k) row *= y;
                row += Cplx(to_double(it->second), 0.0);
            }
            prev_j = j;
        }
        if (prev_j > 0)
            for (long k = 0; k < prev_j; ++k) row *= y;
        acc = acc * x + row;
    }
    return acc;
}

Rat BiPoly::eval_rat(const Rat& x, const Rat& y) const {
    Rat acc(0);
    for (const auto& [key, c] : terms_) {
        Rat term = c;
        for (long i = 0; i < key.first; ++i) term *= x;
        for (long j = 0; j < key.second; ++j) term *= y;
        acc += term;
    }
    return acc;
}

bool BiPoly::divisible_one_minus(Var v) const {
    // p divisible by (1 - x) iff p(1, y) = 0 identically.
    std::map<long, Rat> residual;
    for (const auto& [key, c] : terms_) {
        long other = (v == Var::X) ? key.second : key.first;
        residual[other] += c;
    }
    return std::all_of(residual.begin(), residual.end(),
                       [](const auto& kv) { return kv.second == 0; });
}

BiPoly BiPoly::divide_one_minus(Var v) const {
    // Synthetic division by (1 - t): quotient coefficients are prefix sums
    // in the t-degree; exactness requires the row sums to vanish.
    BiPoly out;
    std::map<long, std::map<long, Rat>> rows; // other-degree -> t-degree -> coeff
    for (const auto& [key, c] : terms_) {
        long t = (v == Var::X) ? key.first : key.second;
        long o = (v == Var::X) ? key.second : key.first;
        rows[o][t] = c;
    }
    for (const auto& [o, row] : rows) {
        long dt = row.rbegin()->first;
        Rat prefix(0);
        for (long t = 0; t < dt; ++t) {
            auto it = row.find(t);
            if (it != row.end()) prefix += it->second;
            if (prefix != 0) {
                if (v == Var::X)
                    out.add_term(t, o, prefix);
                else
                    out.add_term(o, t, prefix);
            }
        }
        auto last = row.find(dt);
        assert(last != row.end());
        if (prefix + last->second != 0)
            throw std::invalid_argument("polynomial not divisible by (1 - var)");
    }
    return out;
}

BiPoly one_minus(Var v) {
    BiPoly p = BiPoly::constant(Rat(1));
    if (v == Var::X)
        p.add_term(1, 0, Rat(-1));
    else
        p.add_term(0, 1, Rat(-1));
    return p;
}

BiPoly one_plus(Var v) {
    BiPoly p = BiPoly::constant(Rat(1));
    if (v == Var::X)
        p.add_term(1, 0, Rat(1));
    else
        p.add_term(0, 1, Rat(1));
    return p;
}

} // namespace bergkern
