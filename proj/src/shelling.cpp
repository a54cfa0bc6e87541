#include "coxpizza/shelling.hpp"

#include <algorithm>

namespace coxpizza {

ShellingOrder shelling_order(const FacePoset& fp, int chamberB) {
    ShellingOrder so;
    so.base = chamberB;
    so.order = fp.chambers();
    std::sort(so.order.begin(), so.order.end(), [&](int a, int b) {
        int sa = fp.separationCount(chamberB, a), sb = fp.separationCount(chamberB, b);
        if (sa != sb) return sa < sb;
        const SignVec &va = fp.face(a).sign, &vb = fp.face(b).sign;
        return std::make_pair(va.plus, va.minus) < std::make_pair(vb.plus, vb.minus);
    });
    return so;
}

FiberReport fiber_partition(const FacePoset& fp, const ShellingOrder& so) {
    FiberReport rep;
    std::size_t n = so.order.size();
    rep.byOrder.resize(n);
    rep.byComposition.resize(n);
    std::vector<int> chamberSlot(fp.faceCount(), -1);
    for (std::size_t i = 0; i < n; ++i) chamberSlot[so.order[i]] = static_cast<int>(i);

    std::vector<char> captured(fp.faceCount(), 0);
    long long assigned = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < fp.faceCount(); ++c) {
            if (captured[c] || !fp.leq(c, so.order[i])) continue;
            captured[c] = 1;
            rep.byOrder[i].push_back(c);
            ++assigned;
        }
    }
    for (int c = 0; c < fp.faceCount(); ++c)
        rep.byComposition[chamberSlot[fp.fB(so.base, c)]].push_back(c);
    rep.equal = rep.byOrder == rep.byComposition;
    rep.partition = assigned == fp.faceCount();
    return rep;
}

ConditionAReport check_condition_A(const FacePoset& fp) {
    const RootSystem& rs = fp.rootSystem();
    ConditionAReport rep;
    int essentialDim = fp.dimV() - fp.v0dim();
    for (int t : fp.chambers()) {
        // walls: hyperplanes supporting a facet of the chamber
        std::vector<int> walls;
        for (int p = 0; p < fp.hyperplaneCount(); ++p) {
            SignVec s = fp.face(t).sign;
            if (s.at(p) > 0)
                s.plus &= ~(uint64_t(1) << p);
            else
                s.minus &= ~(uint64_t(1) << p);
            int facet = fp.faceBySign(s);
            if (facet >= 0 && fp.face(facet).dim == fp.face(t).dim - 1) walls.push_back(p);
        }
        if (static_cast<int>(walls.size()) > essentialDim)
            throw NonSimplicial("chamber has more walls than its essential dimension");
        for (std::size_t i = 0; i < walls.size(); ++i)
            for (std::size_t j = i + 1; j < walls.size(); ++j) {
                Scalar ip = rs.innerRoots(fp.hyperplanes()[walls[i]], fp.hyperplanes()[walls[j]]);
                int sign = ip.sign() * fp.face(t).sign.at(walls[i]) * fp.face(t).sign.at(walls[j]);
                if (sign > 0) {
                    rep.pass = false;
                    rep.chamber = t;
                    rep.wall1 = walls[i];
                    rep.wall2 = walls[j];
                    return rep;
                }
            }
    }
    rep.pass = true;
    return rep;
}

InitialSegmentReport weighted_initial_segment(const FacePoset& fp, const Weight& wt) {
    const RootSystem& rs = fp.rootSystem();
    InitialSegmentReport rep;
    auto member = weightedMembership(fp, wt);

    // sign flips making lambda weakly positive on every oriented normal
    std::vector<int> flip(fp.hyperplaneCount(), 0);
    for (int p = 0; p < fp.hyperplaneCount(); ++p) {
        int s = wt.signAt(rs, rs.root(fp.hyperplanes()[p]));
        flip[p] = s != 0 ? s : 0; // 0 means free, fixed later by the chosen chamber
    }
    // base chamber: matches the flips where forced and belongs to L_lambda
    int base = -1;
    for (int t : fp.chambers()) {
        if (!member[t]) continue;
        bool ok = true;
        for (int p = 0; p < fp.hyperplaneCount() && ok; ++p)
            if (flip[p] != 0 && fp.face(t).sign.at(p) != flip[p]) ok = false;
        if (ok) {
            base = t;
            break;
        }
    }
    if (base < 0) {
        // only possible when L_lambda has no chambers at all (e.g. lambda not
        // orthogonal to the lineality space)
        for (int t : fp.chambers())
            if (member[t]) throw Error("no flip-compatible base chamber despite nonempty segment");
        rep.segmentLength = 0;
        rep.isIdeal = true;
        rep.crossingOk = true;
        return rep;
    }
    rep.base = base;

    rep.isIdeal = true;
    for (int t : fp.chambers()) {
        if (!member[t]) continue;
        for (int t2 : fp.chambers())
            if (fp.chamberLeq(base, t2, t) && !member[t2]) rep.isIdeal = false;
        ++rep.segmentLength;
    }

    // single-wall crossing: T' in L, S(T,T') = {e}, (alpha_e,lambda) >= 0,
    // T' on the negative side  =>  T in L
    rep.crossingOk = true;
    for (int t : fp.chambers())
        for (int t2 : fp.chambers()) {
            if (fp.separationCount(t, t2) != 1 || !member[t2]) continue;
            uint64_t mask = fp.separationMask(t, t2);
            int p = __builtin_ctzll(mask);
            if (fp.face(t2).sign.at(p) != -1) continue;
            if (wt.signAt(rs, rs.root(fp.hyperplanes()[p])) < 0) continue;
            if (!member[t]) rep.crossingOk = false;
        }
    return rep;
}

BruhatReport strong_bruhat_ideal(const RootSystem& rs, const FacePoset& full,
                                 const SVec& lambda) {
    for (int p = 0; p < rs.positiveCount(); ++p)
        if (rs.inner(lambda, rs.root(p)).sign() < 0)
            throw NotDominant("lambda is not dominant");
    const Group& g = rs.group();
    BruhatReport rep;

    // chamber of each group element
    std::vector<int> chamberOf(g.size(), -1);
    for (int t : full.chambers())
        if (full.face(t).cosetI == 0) chamberOf[full.face(t).cosetW] = t;

    Weight wt{lambda, std::nullopt};
    auto member = weightedMembership(full, wt);
    std::vector<char> inW(g.size(), 0);
    for (std::size_t w = 0; w < g.size(); ++w) {
        inW[w] = member[chamberOf[w]];
        if (inW[w]) ++rep.members;
    }

    // strong Bruhat covers: z = t*w with length(z) = length(w) - 1
    rep.isIdeal = true;
    rep.monotone = true;
    const SVec& x = full.face(full.fundamentalChamber()).point;
    for (std::size_t w = 0; w < g.size(); ++w) {
        SVec wInvLambda = rs.applyElement(g.inverse(static_cast<int>(w)), lambda);
        Scalar valueW = rs.inner(wInvLambda, x);
        for (int p = 0; p < rs.positiveCount(); ++p) {
            int z = g.multiply(rs.reflectionElement(p), static_cast<int>(w));
            if (g.length(z) != g.length(static_cast<int>(w)) - 1) continue;
            if (inW[w] && !inW[z]) rep.isIdeal = false;
            SVec zInvLambda = rs.applyElement(g.inverse(z), lambda);
            if ((rs.inner(zInvLambda, x) - valueW).sign() < 0) rep.monotone = false;
        }
    }
    return rep;
}

} // namespace coxpizza
