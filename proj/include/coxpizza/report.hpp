#ifndef COXPIZZA_REPORT_HPP
#define COXPIZZA_REPORT_HPP

#include <json.hpp>

#include "coxpizza/complex.hpp"
#include "coxpizza/conealg.hpp"
#include "coxpizza/twostruct.hpp"

namespace coxpizza {

using OrderedJson = nlohmann::ordered_json;

/// {"num": [...], "den": [...], "N": conductor}; large entries fall back to
/// decimal strings.
OrderedJson scalarToJson(const Scalar& s);
OrderedJson svecToJson(const SVec& v);
std::string signString(const SignVec& s, int positions);

OrderedJson rootSystemToJson(const RootSystem& rs, long groupBound = kDefaultGroupBound);
OrderedJson facePosetToJson(const FacePoset& fp);
OrderedJson twoStructureToJson(const RootSystem& rs, const TwoStructure& ts);
OrderedJson coneClassToJson(const ConeClass& c);
/// Coproduct terms of a closed face class, as (sign, leftClass, rightClass).
OrderedJson coproductToJson(const FacePoset& fp, int face);

struct Check {
    std::string name;
    OrderedJson params = OrderedJson::object();
    OrderedJson lhs, rhs;
    bool pass = false;
    OrderedJson witness; // null unless failing

    OrderedJson toJson() const;
};

struct Report {
    std::string system;
    std::vector<Check> checks;

    bool allPass() const;
    /// Timings are normalized to keep the output byte-identical across runs.
    OrderedJson toJson() const;
};

} // namespace coxpizza

#endif
