#ifndef SLOPES_JSON_IO_HPP
#define SLOPES_JSON_IO_HPP

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "slopes/chain.hpp"
#include "slopes/checkerboard.hpp"
#include "slopes/slope.hpp"
#include "slopes/survey.hpp"

namespace slopes {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits serialize as JSON numbers, larger ones as
// decimal strings.
json int_to_json(const Int& x);

json to_json(const EdgePath& path);         // {"r","turns","vertices","m"}
json to_json(const QuadChain& chain);       // {"target","quads"}
json to_json(const SlopeReport& rep);
json to_json(const SurveyRow& row);
json to_json(const LinkDiagram& d);         // {"n","crossings","reduced_alternating"}
json to_json(const CheckerboardSlopes& cs);

LinkDiagram diagram_from_json(const json& j);

// Header "p,q,n,crossing_number,..."; linking_number column empty for knots.
std::string survey_csv(const std::vector<SurveyRow>& rows);
std::string survey_json(const std::vector<SurveyRow>& rows);

}  // namespace slopes

#endif
