#pragma once

#include <rdlab/geometry.hpp>
#include <rdlab/lifting.hpp>
#include <rdlab/parametrization.hpp>
#include <rdlab/search.hpp>

#include <json.hpp>

#include <string>

namespace rdlab {

inline nlohmann::json distance_report_json(const DistanceReport& rep) {
    nlohmann::json j;
    j["a"] = rep.a.str();
    j["x"] = rep.x.str();
    j["y"] = rep.y.str();
    nlohmann::json sq = nlohmann::json::array();
    for (const auto& s : rep.squared) sq.push_back(s.str());
    j["d_squared"] = sq;
    nlohmann::json d = nlohmann::json::array();
    for (const auto& od : rep.dist) {
        if (od)
            d.push_back(od->str());
        else
            d.push_back(nullptr);
    }
    j["d"] = d;
    return j;
}

inline nlohmann::json point_record_json(const PointRecord& rec) {
    nlohmann::json j;
    j["a"] = rec.a.str();
    j["x"] = rec.x.str();
    j["y"] = rec.y.str();
    nlohmann::json d = nlohmann::json::array();
    for (const auto& q : rec.distances) d.push_back(q.str());
    j["d"] = d;
    if (rec.trivial_line)
        j["trivial_line"] = line_tag_str(*rec.trivial_line);
    else
        j["trivial_line"] = nullptr;
    j["v3x"] = rec.v3x.str();
    j["v3z"] = rec.v3z.str();
    return j;
}

/// Parses a record and re-verifies the distances against an exact
/// four-distance check; throws std::invalid_argument when the record
/// lies.
inline PointRecord point_record_parse(const std::string& line) {
    nlohmann::json j = nlohmann::json::parse(line);
    PointRecord rec;
    rec.a = Rational::parse(j.at("a").get<std::string>());
    rec.x = Rational::parse(j.at("x").get<std::string>());
    rec.y = Rational::parse(j.at("y").get<std::string>());
    Rectangle rect(rec.a);
    Point p{rec.x, rec.y};
    auto rep = four_distance_check(rect, p);
    if (!rep) throw std::invalid_argument("point_record_parse: point fails re-verification");
    auto d = j.at("d");
    if (!d.is_array() || d.size() != 4)
        throw std::invalid_argument("point_record_parse: need 4 distances");
    for (int i = 0; i < 4; ++i) {
        rec.distances[i] = Rational::parse(d[i].get<std::string>());
        if (rec.distances[i] != *rep->dist[i])
            throw std::invalid_argument("point_record_parse: distance mismatch");
    }
    rec.trivial_line = classify_trivial(rect, p);
    rec.v3x = v3(rec.x);
    rec.v3z = v3(Rational(2) * rec.y);
    return rec;
}

inline nlohmann::json witness_json(const std::string& system_name, const ResidueVec& v) {
    nlohmann::json j;
    j["system"] = system_name;
    j["level"] = v.level;
    nlohmann::json e = nlohmann::json::array();
    for (const auto& n : v.entries) e.push_back(n.str());
    j["entries"] = e;
    return j;
}

inline ResidueVec witness_parse(const nlohmann::json& j) {
    ResidueVec v;
    v.level = j.at("level").get<unsigned>();
    for (const auto& s : j.at("entries")) v.entries.emplace_back(s.get<std::string>());
    return v;
}

/// Parametrization JSON: {"X": [...], "Y": [...], "Z": [...], "T": [...]},
/// decimal-string coefficients, constant term first.
inline Parametrization parametrization_parse(const nlohmann::json& j) {
    auto poly = [&](const char* key) {
        std::vector<Integer> c;
        for (const auto& s : j.at(key)) {
            if (s.is_string())
                c.emplace_back(s.get<std::string>());
            else
                c.emplace_back(s.get<long long>());
        }
        return UniPoly(std::move(c));
    };
    return {poly("X"), poly("Y"), poly("Z"), poly("T")};
}

inline nlohmann::json parametrization_json(const Parametrization& par) {
    auto arr = [](const UniPoly& p) {
        nlohmann::json a = nlohmann::json::array();
        for (const auto& c : p.coeffs()) a.push_back(c.str());
        return a;
    };
    nlohmann::json j;
    j["X"] = arr(par.X);
    j["Y"] = arr(par.Y);
    j["Z"] = arr(par.Z);
    j["T"] = arr(par.T);
    return j;
}

} // namespace rdlab
