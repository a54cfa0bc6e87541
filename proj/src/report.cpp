#include "coxpizza/report.hpp"

namespace coxpizza {

namespace {

OrderedJson bigToJson(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

} // namespace

OrderedJson scalarToJson(const Scalar& s) {
    OrderedJson num = OrderedJson::array(), den = OrderedJson::array();
    for (const auto& c : s.coeffs()) {
        num.push_back(bigToJson(c.get_num()));
        den.push_back(bigToJson(c.get_den()));
    }
    OrderedJson j;
    j["num"] = num;
    j["den"] = den;
    j["N"] = s.context() ? s.context()->conductor() : 0;
    return j;
}

OrderedJson svecToJson(const SVec& v) {
    OrderedJson j = OrderedJson::array();
    for (const auto& s : v) j.push_back(scalarToJson(s));
    return j;
}

std::string signString(const SignVec& s, int positions) {
    std::string out(positions, '0');
    for (int p = 0; p < positions; ++p) {
        int v = s.at(p);
        out[p] = v > 0 ? '+' : v < 0 ? '-' : '0';
    }
    return out;
}

OrderedJson rootSystemToJson(const RootSystem& rs, long groupBound) {
    OrderedJson j;
    j["type"] = rs.system().description();
    j["rank"] = rs.rank();
    j["dim"] = rs.dim();
    j["conductor"] = rs.context()->conductor();
    j["normalized"] = rs.normalized();
    j["rootCount"] = rs.rootCount();
    j["positiveCount"] = rs.positiveCount();
    j["groupOrder"] = rs.system().groupOrder();
    j["groupEnumerable"] = rs.groupEnumerable(groupBound);
    OrderedJson gram = OrderedJson::array();
    for (int i = 0; i < rs.dim(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int k = 0; k < rs.dim(); ++k) row.push_back(scalarToJson(rs.gram()[i][k]));
        gram.push_back(row);
    }
    j["gram"] = gram;
    OrderedJson roots = OrderedJson::array();
    for (int r = 0; r < rs.positiveCount(); ++r) roots.push_back(svecToJson(rs.root(r)));
    j["positiveRoots"] = roots;
    return j;
}

OrderedJson facePosetToJson(const FacePoset& fp) {
    OrderedJson j;
    j["hyperplanes"] = fp.hyperplanes();
    j["dimV"] = fp.dimV();
    j["v0dim"] = fp.v0dim();
    OrderedJson faces = OrderedJson::array();
    for (int f = 0; f < fp.faceCount(); ++f) {
        OrderedJson fj;
        fj["sign"] = signString(fp.face(f).sign, fp.hyperplaneCount());
        fj["dim"] = fp.face(f).dim;
        if (fp.face(f).cosetW >= 0) {
            OrderedJson coset = OrderedJson::array();
            coset.push_back(fp.face(f).cosetW);
            OrderedJson iset = OrderedJson::array();
            for (int s = 0; s < 32; ++s)
                if ((fp.face(f).cosetI >> s) & 1) iset.push_back(s);
            coset.push_back(iset);
            fj["coset"] = coset;
        }
        faces.push_back(fj);
    }
    j["faces"] = faces;
    return j;
}

OrderedJson twoStructureToJson(const RootSystem& rs, const TwoStructure& ts) {
    OrderedJson j;
    j["lines"] = ts.lines;
    j["type"] = ts.typeTag();
    OrderedJson comps = OrderedJson::array();
    for (const auto& c : ts.components) {
        OrderedJson cj;
        cj["tag"] = c.tag();
        cj["lines"] = c.lines;
        comps.push_back(cj);
    }
    j["components"] = comps;
    j["epsilon"] = epsilon(rs, ts);
    return j;
}

OrderedJson coneClassToJson(const ConeClass& c) {
    OrderedJson j = OrderedJson::object();
    for (std::size_t f = 0; f < c.coeffs.size(); ++f)
        if (c.coeffs[f] != 0) j[std::to_string(f)] = c.coeffs[f];
    return j;
}

OrderedJson coproductToJson(const FacePoset& fp, int face) {
    OrderedJson terms = OrderedJson::array();
    for (const auto& t : coproduct(fp, face)) {
        OrderedJson term = OrderedJson::array();
        term.push_back(t.sign);
        term.push_back(coneClassToJson(closedClass(fp, t.spanFace)));
        term.push_back(coneClassToJson(classOfSpec(fp, spanPlusSpec(fp, t.spanFace, t.coneFace))));
        terms.push_back(term);
    }
    return terms;
}

OrderedJson Check::toJson() const {
    OrderedJson j;
    j["name"] = name;
    j["params"] = params;
    j["lhs"] = lhs;
    j["rhs"] = rhs;
    j["pass"] = pass;
    if (!pass && !witness.is_null()) j["witness"] = witness;
    return j;
}

bool Report::allPass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

OrderedJson Report::toJson() const {
    OrderedJson j;
    j["version"] = "1.0";
    j["system"] = system;
    OrderedJson cj = OrderedJson::array();
    for (const auto& c : checks) cj.push_back(c.toJson());
    j["checks"] = cj;
    j["timings"] = OrderedJson::object(); // normalized for deterministic output
    return j;
}

} // namespace coxpizza
