#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bergkern/bergman.hpp"
#include "bergkern/serialize.hpp"

using namespace bergkern;

TEST_CASE("bipoly JSON round trip is lossless") {
    std::mt19937 gen(91);
    std::uniform_int_distribution<long> deg(0, 7);
    // coefficients with large numerators to exercise the string encoding
    std::uniform_int_distribution<long long> num(-1000000007LL, 1000000007LL);
    std::uniform_int_distribution<long long> den(1, 99991);
    for (int trial = 0; trial < 25; ++trial) {
        BiPoly p;
        for (int t = 0; t < 12; ++t)
            p.add_term(deg(gen), deg(gen), Rat(num(gen), den(gen)));
        CHECK(bipoly_from_json(bipoly_to_json(p)) == p);
    }
    CHECK(bipoly_from_json(bipoly_to_json(BiPoly())) == BiPoly());
}

TEST_CASE("ratfun JSON round trip reproduces the L family exactly") {
    for (int n = 1; n <= 6; ++n) {
        const StructuredRatFun L = build_L(n, Rat(2), Rat(7, 2));
        CHECK(ratfun_from_json(ratfun_to_json(L)) == L);
    }
    // huge exact coefficients appear by n = 6; spot-check one survives
    const StructuredRatFun L6 = build_L(6, Rat(3), Rat(5));
    const nlohmann::json j = ratfun_to_json(L6);
    CHECK(ratfun_from_json(j).taylor_coeff(5, 5) == L6.taylor_coeff(5, 5));
}

TEST_CASE("rational strings") {
    CHECK(rat_to_string(Rat(-3, 7)) == "-3/7");
    CHECK(rat_to_string(Rat(5)) == "5");
    CHECK(rat_from_string("22/7") == Rat(22, 7));
    CHECK(rat_from_string("-4") == Rat(-4));
}

TEST_CASE("latex rendering") {
    BiPoly p = BiPoly::constant(Rat(3));
    p.add_term(1, 0, Rat(-1));
    p.add_term(0, 1, Rat(-1));
    p.add_term(1, 1, Rat(-1));
    const StructuredRatFun f(p, Rat(1), 3, 3);
    const std::string tex = ratfun_to_latex(f);
    CHECK(tex.find("\\frac{") != std::string::npos);
    CHECK(tex.find("(1-x)^{3}") != std::string::npos);
    CHECK(tex.find("(1-y)^{3}") != std::string::npos);

    const std::string poly = bipoly_to_latex(p);
    CHECK(poly.find("xy") != std::string::npos);
    CHECK(poly.substr(0, 1) == "3");
}

TEST_CASE("format_double honors the requested precision") {
    CHECK(format_double(1.0 / 3.0, 3) == "0.333");
    CHECK(format_double(1.0 / 3.0, 15) == "0.333333333333333");
    CHECK(format_double(-2.5, 5) == "-2.5");
}
