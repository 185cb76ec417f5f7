#ifndef JP_JSON_IO_HPP
#define JP_JSON_IO_HPP

#include "jp/diffop.hpp"
#include "jp/params.hpp"
#include "jp/pineiro.hpp"
#include "jp/twisted.hpp"
#include "jp/verify.hpp"

#include <json.hpp>

namespace jp {

// Wire formats: Rational as the string "p/q" ("p" when q = 1), Poly as
// a coefficient array lowest degree first, RatFunc as {num, den},
// TwistedFunction as {body, exp_zero, exp_one}, DiffOperator as an
// array of RatFunc. Emitted JSON parses back to the identical object.

nlohmann::json to_json(const Rational& q);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFunc& f);
nlohmann::json to_json(const TwistedFunction& f);
nlohmann::json to_json(const DiffOperator& op);
nlohmann::json to_json(const ParameterSet& p);
nlohmann::json to_json(const ExponentData& e);
nlohmann::json to_json(const SpaceBasis& b);
nlohmann::json to_json(const VerificationReport& r, bool include_timing = false);
nlohmann::json to_json(const SweepResult& r, bool include_timing = false);

Rational rational_from_json(const nlohmann::json& j);
Poly poly_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);
TwistedFunction twisted_from_json(const nlohmann::json& j);
DiffOperator diffop_from_json(const nlohmann::json& j);
ParameterSet params_from_json(const nlohmann::json& j);

} // namespace jp

#endif
