#ifndef BERGKERN_SERIALIZE_HPP
#define BERGKERN_SERIALIZE_HPP

#include <string>

#include <json.hpp>

#include "bergkern/ratfun.hpp"

namespace bergkern {

// Lossless JSON forms: rationals as "p/q" strings, exponents as integers.
nlohmann::json bipoly_to_json(const BiPoly& p);
BiPoly bipoly_from_json(const nlohmann::json& j);

nlohmann::json ratfun_to_json(const StructuredRatFun& f);
StructuredRatFun ratfun_from_json(const nlohmann::json& j);

// LaTeX rendering \frac{numerator}{scale (1-x)^a (1-y)^b}.
std::string bipoly_to_latex(const BiPoly& p);
std::string ratfun_to_latex(const StructuredRatFun& f);

// Decimal string at the requested precision (CLI contract: JSON numbers are
// emitted as strings so precision is explicit).
std::string format_double(double v, int precision);

} // namespace bergkern

#endif
