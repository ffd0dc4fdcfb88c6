#include "splitoct/io.hpp"

namespace splitoct {

Json matrix_to_json(const LinearMap& m)
{
    Json rows = Json::array();
    for (int i = 0; i < 8; ++i) {
        Json row = Json::array();
        for (int j = 0; j < 8; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return Json{{"field", m.field().tag()}, {"rows", std::move(rows)}};
}

LinearMap matrix_from_json(const Json& j)
{
    const Field f = Field::parse(j.at("field").get<std::string>());
    const Json& rows = j.at("rows");
    if (rows.size() != 8) throw std::invalid_argument("matrix file needs 8 rows");
    LinearMap m(f);
    for (int i = 0; i < 8; ++i) {
        const Json& row = rows.at(i);
        if (row.size() != 8) throw std::invalid_argument("matrix file needs 8 columns per row");
        for (int jj = 0; jj < 8; ++jj)
            m.at(i, jj) = Scalar::parse(f, row.at(jj).get<std::string>());
    }
    return m;
}

namespace {

const char* verified_name(Verified v)
{
    switch (v) {
    case Verified::Holds: return "holds";
    case Verified::Fails: return "fails";
    default: return "unchecked";
    }
}

} // namespace

Json operator_to_json(const RotaBaxterCandidate& c)
{
    Json j = matrix_to_json(c.map);
    j["weight"] = c.weight.str();
    j["verified"] = verified_name(c.verified);
    return j;
}

RotaBaxterCandidate operator_from_json(const Json& j)
{
    LinearMap m = matrix_from_json(j);
    const Field f = m.field();
    Scalar w = j.contains("weight") ? Scalar::parse(f, j.at("weight").get<std::string>())
                                    : one(f);
    Verified v = Verified::Unchecked;
    if (j.contains("verified")) {
        const std::string s = j.at("verified").get<std::string>();
        v = s == "holds" ? Verified::Holds : s == "fails" ? Verified::Fails
                                                          : Verified::Unchecked;
    }
    return {std::move(m), std::move(w), v};
}

Json morphism_to_json(const Morphism& m)
{
    Json j = matrix_to_json(m.map);
    j["kind"] = m.kind == MorphKind::Auto ? "auto" : "anti";
    j["source"] = m.source;
    Json params = Json::array();
    for (const Scalar& s : m.params) params.push_back(s.str());
    j["params"] = std::move(params);
    return j;
}

Json subspace_to_json(const Subspace& s)
{
    Json rows = Json::array();
    for (const Octonion& v : s.basis()) {
        Json row = Json::array();
        for (int i = 0; i < 8; ++i) row.push_back(v[i].str());
        rows.push_back(std::move(row));
    }
    return Json{{"dim", s.dim()}, {"basis", std::move(rows)}};
}

} // namespace splitoct
