#include "bergkern/serialize.hpp"

#include <cstdio>
#include <sstream>

namespace bergkern {

nlohmann::json bipoly_to_json(const BiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : p.terms()) {
        terms.push_back({{"i", key.first}, {"j", key.second}, {"c", rat_to_string(c)}});
    }
    return {{"terms", terms}};
}

BiPoly bipoly_from_json(const nlohmann::json& j) {
    BiPoly p;
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("i").get<long>(), t.at("j").get<long>(),
                   rat_from_string(t.at("c").get<std::string>()));
    return p;
}

nlohmann::json ratfun_to_json(const StructuredRatFun& f) {
    return {{"numerator", bipoly_to_json(f.numerator())},
            {"scale", rat_to_string(f.scale())},
            {"pow_x", f.pow_x()},
            {"pow_y", f.pow_y()}};
}

StructuredRatFun ratfun_from_json(const nlohmann::json& j) {
    return StructuredRatFun(bipoly_from_json(j.at("numerator")),
                            rat_from_string(j.at("scale").get<std::string>()),
                            j.at("pow_x").get<long>(), j.at("pow_y").get<long>());
}

namespace {

std::string rat_to_latex(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    std::string sign = num < 0 ? "-" : "";
    Int a = num < 0 ? Int(-num) : num;
    return sign + "\\frac{" + a.str() + "}{" + den.str() + "}";
}

void append_power(std::string& out, const std::string& var, long e) {
    if (e == 0) return;
    out += var;
    if (e > 1) out += "^{" + std::to_string(e) + "}";
}

} // namespace

std::string bipoly_to_latex(const BiPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [key, c] : p.terms()) {
        Rat a = c;
        if (!first) {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        const bool has_vars = key.first > 0 || key.second > 0;
        if (!has_vars || a != 1) out += rat_to_latex(a);
        if (has_vars && a != 1 && boost::multiprecision::denominator(a) == 1)
            out += " ";
        append_power(out, "x", key.first);
        append_power(out, "y", key.second);
    }
    return out;
}

std::string ratfun_to_latex(const StructuredRatFun& f) {
    std::string den;
    if (f.scale() != 1) den += rat_to_latex(f.scale());
    if (f.pow_x() > 0) {
        den += "(1-x)";
        if (f.pow_x() > 1) den += "^{" + std::to_string(f.pow_x()) + "}";
    }
    if (f.pow_y() > 0) {
        den += "(1-y)";
        if (f.pow_y() > 1) den += "^{" + std::to_string(f.pow_y()) + "}";
    }
    if (den.empty()) return bipoly_to_latex(f.numerator());
    return "\\frac{" + bipoly_to_latex(f.numerator()) + "}{" + den + "}";
}

std::string format_double(double v, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", precision, v);
    return buf;
}

} // namespace bergkern
