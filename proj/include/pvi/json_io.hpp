#pragma once

#include <array>
#include <string>

#include "json.hpp"
#include "pvi/connection.hpp"
#include "pvi/higgs.hpp"
#include "pvi/lattice.hpp"
#include "pvi/mconv.hpp"
#include "pvi/parabolic.hpp"
#include "pvi/stability.hpp"

namespace pvi {

using nlohmann::json;

json to_json(const Rat& r);
json to_json(const ProjRat& r);
json to_json(const Mat2& m);
json to_json(const PQState& s);  // kappa listed with kappa0 first
json to_json(const FourPoleConnection& c);
json to_json(const QuasiPar& qp);
json to_json(const PPoint& p);
json to_json(const Subbundle& l);  // contact poles are 1-based
json to_json(const HiggsLimit& h);
json to_json(const TransversalClass& c);
json to_json(const ExponentData& e);

Rat rat_from_json(const json& j);
ProjRat projrat_from_json(const json& j);
std::array<Rat, 4> rat4_from_json(const json& j);
PQState state_from_json(const json& j);
QuasiPar qp_from_json(const json& j);
Weights weights_from_json(const json& j);  // mu optional

json parse_json_text(const std::string& text);

}  // namespace pvi
