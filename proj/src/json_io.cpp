#include "slopes/json_io.hpp"

#include <limits>
#include <sstream>

namespace slopes {

json int_to_json(const Int& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() &&
        x <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(x);
    return x.str();
}

json to_json(const EdgePath& path) {
    json j;
    j["r"] = int_to_json(path.r());
    json turns = json::array();
    for (const Int& b : path.turns()) turns.push_back(int_to_json(b));
    j["turns"] = std::move(turns);
    json verts = json::array();
    for (const Fraction& v : path.vertices()) verts.push_back(v.str());
    j["vertices"] = std::move(verts);
    j["m"] = int_to_json(path.m());
    return j;
}

json to_json(const QuadChain& chain) {
    json j;
    j["target"] = chain.target.str();
    json quads = json::array();
    for (const Quad& q : chain.quads) {
        json corners = json::array();
        for (const Fraction& c : q.corners) corners.push_back(c.str());
        quads.push_back(std::move(corners));
    }
    j["quads"] = std::move(quads);
    return j;
}

json to_json(const SlopeReport& rep) {
    json j;
    j["fraction"] = rep.fraction.str();
    j["p"] = int_to_json(rep.fraction.num());
    j["q"] = int_to_json(rep.fraction.den());
    j["n_components"] = rep.components;
    j["crossing_number"] = int_to_json(rep.crossing_number);
    j["diameter"] = int_to_json(rep.diameter);
    j["num_minimal_paths"] = int_to_json(rep.path_count);
    j["truncated"] = rep.truncated;
    j["slope_min"] = int_to_json(rep.slope_min);
    j["slope_max"] = int_to_json(rep.slope_max);
    j["sigma0"] = int_to_json(rep.sigma0);
    j["sigma1"] = int_to_json(rep.sigma1);
    j["linking_number"] =
        rep.linking_number ? int_to_json(*rep.linking_number) : json(nullptr);
    json paths = json::array();
    for (const PathSlope& ps : rep.slopes) {
        json p = to_json(ps.path);
        p["slope"] = int_to_json(ps.slope);
        paths.push_back(std::move(p));
    }
    j["paths"] = std::move(paths);
    return j;
}

json to_json(const SurveyRow& row) {
    json j;
    j["p"] = int_to_json(row.p);
    j["q"] = int_to_json(row.q);
    j["n"] = row.n_components;
    j["crossing_number"] = int_to_json(row.crossing_number);
    j["diameter"] = int_to_json(row.diameter);
    j["num_minimal_paths"] = int_to_json(row.num_minimal_paths);
    j["slope_min"] = int_to_json(row.slope_min);
    j["slope_max"] = int_to_json(row.slope_max);
    j["sigma0"] = int_to_json(row.sigma0);
    j["sigma1"] = int_to_json(row.sigma1);
    j["linking_number"] =
        row.linking_number ? int_to_json(*row.linking_number) : json(nullptr);
    return j;
}

json to_json(const LinkDiagram& d) {
    json j;
    j["n"] = d.n_components;
    json crossings = json::array();
    for (const Crossing& c : d.crossings)
        crossings.push_back(json{{"over", c.over}, {"under", c.under}, {"sign", c.sign}});
    j["crossings"] = std::move(crossings);
    j["reduced_alternating"] = d.reduced_alternating;
    return j;
}

json to_json(const CheckerboardSlopes& cs) {
    json j;
    json s = json::array(), t = json::array();
    for (const Int& x : cs.s) s.push_back(int_to_json(x));
    for (const Int& x : cs.t) t.push_back(int_to_json(x));
    j["s"] = std::move(s);
    j["t"] = std::move(t);
    auto [s_diag, t_diag] = is_diagonal(cs);
    j["s_diagonal"] = s_diag;
    j["t_diagonal"] = t_diag;
    return j;
}

LinkDiagram diagram_from_json(const json& j) {
    LinkDiagram d;
    try {
        d.n_components = j.at("n").get<int>();
        d.reduced_alternating = j.value("reduced_alternating", true);
        for (const json& c : j.at("crossings")) {
            Crossing cr;
            cr.over = c.at("over").get<int>();
            cr.under = c.at("under").get<int>();
            cr.sign = c.at("sign").get<int>();
            d.crossings.push_back(cr);
        }
    } catch (const json::exception& e) {
        throw bad_diagram(std::string("malformed diagram JSON: ") + e.what());
    }
    return d;
}

std::string survey_csv(const std::vector<SurveyRow>& rows) {
    std::ostringstream out;
    out << "p,q,n,crossing_number,diameter,num_minimal_paths,slope_min,slope_max,"
           "sigma0,sigma1,linking_number\n";
    for (const SurveyRow& r : rows) {
        out << r.p << ',' << r.q << ',' << r.n_components << ',' << r.crossing_number
            << ',' << r.diameter << ',' << r.num_minimal_paths << ',' << r.slope_min
            << ',' << r.slope_max << ',' << r.sigma0 << ',' << r.sigma1 << ',';
        if (r.linking_number) out << *r.linking_number;
        out << '\n';
    }
    return out.str();
}

std::string survey_json(const std::vector<SurveyRow>& rows) {
    json arr = json::array();
    for (const SurveyRow& r : rows) arr.push_back(to_json(r));
    return arr.dump(2) + "\n";
}

}  // namespace slopes
