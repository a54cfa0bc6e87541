#include "coxpizza/weighted.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace coxpizza {

int Weight::signAt(const RootSystem& rs, const SVec& x) const {
    int s = rs.inner(lambda, x).sign();
    if (s != 0 || !epsShift) return s;
    return -rs.inner(*epsShift, x).sign();
}

bool Weight::killsSubspace(const RootSystem& rs, const std::vector<SVec>& basis) const {
    for (const auto& v : basis) {
        if (!rs.inner(lambda, v).isZero()) return false;
        if (epsShift && !rs.inner(*epsShift, v).isZero()) return false;
    }
    return true;
}

std::vector<char> weightedMembership(const FacePoset& fp, const Weight& wt) {
    const RootSystem& rs = fp.rootSystem();
    std::vector<char> member(fp.faceCount(), 0);
    if (!wt.killsSubspace(rs, fp.v0basis())) return member;
    std::vector<char> rayOk(fp.faceCount(), 0);
    for (int r : fp.rays()) rayOk[r] = wt.signAt(rs, fp.face(r).point) >= 0;
    for (int f = 0; f < fp.faceCount(); ++f) {
        bool ok = true;
        for (int r : fp.face(f).rays)
            if (!rayOk[r]) {
                ok = false;
                break;
            }
        member[f] = ok;
    }
    return member;
}

WeightedComplexResult weighted_complex(const FacePoset& fp, const Weight& wt, int baseFace) {
    WeightedComplexResult res;
    res.member = weightedMembership(fp, wt);
    for (int f = 0; f < fp.faceCount(); ++f) {
        if (!res.member[f]) continue;
        if (baseFace >= 0 && !fp.leq(baseFace, f)) {
            res.member[f] = 0;
            continue;
        }
        res.faces.push_back(f);
    }
    return res;
}

long long weighted_sum(const FacePoset& fp, int chamberB, const Weight& wt) {
    return relative_weighted_sum(fp, fp.minimalFace(), chamberB, wt);
}

long long relative_weighted_sum(const FacePoset& fp, int faceC, int chamberB, const Weight& wt) {
    if (!fp.leq(faceC, chamberB)) throw FaceNotBelow("base chamber is not above the face");
    auto member = weightedMembership(fp, wt);
    long long sum = 0;
    for (int d = 0; d < fp.faceCount(); ++d) {
        if (!member[d] || !fp.leq(faceC, d)) continue;
        int s = fp.face(d).dim + fp.separationCount(chamberB, fp.fB(chamberB, d));
        sum += s % 2 ? -1 : 1;
    }
    return sum;
}

PizzaClasses pizza(const FacePoset& fp, int chamberB) {
    PizzaClasses pc{ConeClass(fp.faceCount()), ConeClass(fp.faceCount()),
                    ConeClass(fp.faceCount())};
    for (int c = 0; c < fp.faceCount(); ++c) {
        int sign = fp.separationCount(chamberB, fp.fB(chamberB, c)) % 2 ? -1 : 1;
        pc.pi.coeffs[c] = sign;
    }
    for (int t : fp.chambers()) {
        int sign = fp.separationCount(chamberB, t) % 2 ? -1 : 1;
        pc.p0.coeffs[t] += sign;
        for (int d = 0; d < fp.faceCount(); ++d)
            if (fp.leq(d, t)) pc.p.coeffs[d] += sign;
    }
    return pc;
}

FirstMainReport verify_theorem_2structures(const RootSystem& rs, long groupBound) {
    FacePoset full = FacePoset::full(rs, groupBound);
    int b = full.fundamentalChamber();
    PizzaClasses lhs = pizza(full, b);
    auto structures = enumerate_two_structures(rs, groupBound);

    ConeClass rhsPi(full.faceCount()), rhsP(full.faceCount());
    for (const auto& ts : structures) {
        int eps = epsilon(rs, ts);
        FacePoset sub = FacePoset::sub(full, ts.lines);
        int bs = sub.fundamentalChamber();
        std::vector<int> subFace(full.faceCount());
        for (int d = 0; d < full.faceCount(); ++d) subFace[d] = sub.fromParent(full, d);
        std::vector<int> chamberSign(sub.faceCount(), 0);
        for (int z : sub.chambers())
            chamberSign[z] = sub.separationCount(bs, z) % 2 ? -1 : 1;
        for (int d = 0; d < full.faceCount(); ++d) {
            int sf = subFace[d];
            int s = sub.separationCount(bs, sub.fB(bs, sf)) % 2 ? -1 : 1;
            rhsPi.coeffs[d] += eps * s;
            for (int z : sub.chambers())
                if (sub.leq(sf, z)) rhsP.coeffs[d] += eps * chamberSign[z];
        }
    }
    FirstMainReport rep;
    rep.structures = static_cast<int>(structures.size());
    rep.piEqual = lhs.pi == rhsPi;
    rep.pEqual = lhs.p == rhsP;
    return rep;
}

SecondMainResult verify_second_main(const RootSystem& rs, const FacePoset& full,
                                    const std::vector<int>& I, const Weight& wt,
                                    long groupBound) {
    // C has sign 0 on the parabolic positives and + on the rest
    auto h1 = rs.positivesInSpan(I);
    std::vector<char> inH1(rs.positiveCount(), 0);
    for (int p : h1) inH1[p] = 1;
    SignVec cSign;
    for (int p = 0; p < rs.positiveCount(); ++p)
        if (!inH1[p]) cSign.set(p, 1);
    int faceC = full.faceBySign(cSign);
    if (faceC < 0) throw Error("parabolic base face not found");
    int b = full.fundamentalChamber();

    SecondMainResult res;
    res.lhs = relative_weighted_sum(full, faceC, b, wt);

    RootSystem parab = rs.parabolic(I);
    auto structures = enumerate_two_structures(parab, groupBound);
    for (const auto& ts : structures) {
        int eps = epsilon(parab, ts);
        std::vector<int> hyperSet;
        for (int line : ts.lines)
            hyperSet.push_back(rs.positiveIndex(parab.parentRoots()[line]));
        for (int p = 0; p < rs.positiveCount(); ++p)
            if (!inH1[p]) hyperSet.push_back(p);
        std::sort(hyperSet.begin(), hyperSet.end());
        FacePoset sub = FacePoset::sub(full, hyperSet);
        int cPhi = sub.fromParent(full, faceC);
        int bPhi = sub.fromParent(full, b);
        res.rhs += eps * relative_weighted_sum(sub, cPhi, bPhi, wt);
    }
    res.pass = res.lhs == res.rhs;
    return res;
}

SVec projectToComponent(const RootSystem& rs, const TwoStructure::Component& comp,
                        const SVec& lambda) {
    const SVec& u = rs.root(comp.lines[0]);
    SVec proj = scaleVec(u, rs.inner(lambda, u));
    if (comp.rank() == 2) {
        for (std::size_t i = 1; i < comp.lines.size(); ++i) {
            if (!rs.innerRoots(comp.lines[0], comp.lines[i]).isZero()) continue;
            const SVec& w = rs.root(comp.lines[i]);
            return addVec(std::move(proj), scaleVec(w, rs.inner(lambda, w)));
        }
        throw Error("rank-2 component has no orthogonal pair");
    }
    return proj;
}

long long closedFormRank1(int signOfC) { return signOfC > 0 ? 0 : signOfC == 0 ? 1 : 2; }

DihedralFrame dihedralFrame(const RootSystem& rs, const TwoStructure::Component& comp) {
    DihedralFrame fr;
    fr.m = comp.m;
    if (fr.m < 4) throw Error("dihedralFrame requires a rank-2 component");
    // the two positive roots lying on the closed base chamber's boundary rays
    std::vector<int> boundary;
    for (int l : comp.lines) {
        bool ok = true;
        for (int l2 : comp.lines)
            if (rs.innerRoots(l, l2).sign() < 0) {
                ok = false;
                break;
            }
        if (ok) boundary.push_back(l);
    }
    if (boundary.size() != 2) throw Error("dihedral base chamber should have two boundary roots");
    fr.u = rs.root(boundary[0]);
    SVec interior = addVec(rs.root(boundary[0]), rs.root(boundary[1]));
    int orth = -1;
    for (int l : comp.lines)
        if (rs.innerRoots(boundary[0], l).isZero()) orth = l;
    if (orth < 0) throw Error("no orthogonal partner in dihedral component");
    fr.w = rs.root(orth);
    if (rs.inner(fr.w, interior).sign() < 0)
        for (auto& c : fr.w) c = -c;

    // assign every signed root its model index by exact cos value and sine sign
    const FieldPtr& ctx = rs.context();
    std::vector<Scalar> cosVals;
    Scalar twoCos = cos_pi_over(ctx, fr.m) * Scalar(ctx, Rational(2));
    for (long r = 0; r < 2 * fr.m; ++r)
        cosVals.push_back(evalPoly(dickson(r), twoCos) * Scalar(ctx, Rational(1, 2)));
    fr.directions.assign(2 * fr.m, SVec{});
    for (int l : comp.lines) {
        for (int sgn = 0; sgn < 2; ++sgn) {
            SVec v = rs.root(l);
            if (sgn)
                for (auto& c : v) c = -c;
            Scalar a = rs.inner(v, fr.u);
            int bs = rs.inner(v, fr.w).sign();
            long found = -1;
            for (long r = 0; r < 2 * fr.m && found < 0; ++r) {
                int sinSign = (r == 0 || r == fr.m) ? 0 : (r < fr.m ? 1 : -1);
                if (bs == sinSign && a == cosVals[r]) found = r;
            }
            if (found < 0) throw Error("dihedral direction does not match the model grid");
            if (!fr.directions[found].empty()) throw Error("duplicate dihedral direction");
            fr.directions[found] = std::move(v);
        }
    }
    return fr;
}

long long closedFormRank2(const RootSystem& rs, const DihedralFrame& fr,
                          const SVec& lambdaInPlane) {
    bool zero = true;
    for (const auto& c : lambdaInPlane)
        if (!c.isZero()) zero = false;
    if (zero) return 1;
    long m = fr.m;
    Scalar a = rs.inner(lambdaInPlane, fr.u);
    Scalar b = rs.inner(lambdaInPlane, fr.w);
    std::vector<Scalar> ar, br;
    for (long r = 0; r < 2 * m; ++r) {
        ar.push_back(rs.inner(fr.directions[r], fr.u));
        br.push_back(rs.inner(fr.directions[r], fr.w));
    }
    // on a ray of the model grid?
    for (long r = 0; r < 2 * m; ++r) {
        Scalar cross = ar[r] * b - br[r] * a;
        if (!cross.isZero()) continue;
        if ((ar[r] * a + br[r] * b).sign() > 0)
            return (r >= m / 2 + 1 && r <= 3 * m / 2) ? 2 : 0;
    }
    // otherwise strictly inside a sector (r, r+1)
    for (long r = 0; r < 2 * m; ++r) {
        long rn = (r + 1) % (2 * m);
        Scalar c1 = ar[r] * b - br[r] * a;
        Scalar c2 = a * br[rn] - b * ar[rn];
        if (c1.sign() > 0 && c2.sign() > 0)
            return (r % 2 == 1 && r >= m / 2 + 1 && r <= 3 * m / 2 - 1) ? 4 : 0;
    }
    throw Error("dihedral sector classification failed");
}

long long componentPsi(const RootSystem& rs, const TwoStructure::Component& comp,
                       const SVec& lambdaProj) {
    if (comp.rank() == 1)
        return closedFormRank1(rs.inner(lambdaProj, rs.root(comp.lines[0])).sign());
    return closedFormRank2(rs, dihedralFrame(rs, comp), lambdaProj);
}

std::pair<long long, long long> gkm_vs_herb(const RootSystem& rs, const FacePoset& full,
                                            const SVec& lambda, long groupBound) {
    Weight wt{lambda, std::nullopt};
    long long lhs = weighted_sum(full, full.fundamentalChamber(), wt);
    auto structures = enumerate_two_structures(rs, groupBound);
    long long rhs = 0;
    int rank2 = structures.empty() ? 0 : structures[0].rank();
    for (const auto& ts : structures) {
        SVec sum = zeroVec(rs.context(), rs.dim());
        std::vector<SVec> projs;
        for (const auto& comp : ts.components) {
            projs.push_back(projectToComponent(rs, comp, lambda));
            sum = addVec(std::move(sum), projs.back());
        }
        bool inSpan = true;
        for (int d = 0; d < rs.dim() && inSpan; ++d) inSpan = (sum[d] == lambda[d]);
        if (!inSpan) continue;
        long long prod = epsilon(rs, ts);
        for (std::size_t i = 0; i < ts.components.size() && prod != 0; ++i)
            prod *= componentPsi(rs, ts.components[i], projs[i]);
        rhs += prod;
    }
    if ((rs.dim() - rank2) % 2) rhs = -rhs;
    return {lhs, rhs};
}

namespace {

int permutationSign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// S(lambda): ordered set partitions of {1..n} with every prefix sum > 0,
// each contributing (-1)^{#blocks} * sign(g), where g reads the blocks in
// decreasing order.
long long typeAPartitionSum(int n, const std::vector<Rational>& lambda) {
    long long total = 0;
    std::vector<int> remaining(n);
    for (int i = 0; i < n; ++i) remaining[i] = i + 1;
    std::vector<std::vector<int>> blocks;
    std::function<void(std::vector<int>, Rational)> rec = [&](std::vector<int> rest,
                                                              Rational prefix) {
        if (rest.empty()) {
            std::vector<int> perm;
            for (const auto& b : blocks)
                for (auto it = b.rbegin(); it != b.rend(); ++it) perm.push_back(*it);
            total += (blocks.size() % 2 ? -1 : 1) * permutationSign(perm);
            return;
        }
        std::size_t k = rest.size();
        for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
            std::vector<int> block, rest2;
            Rational sum = prefix;
            for (std::size_t i = 0; i < k; ++i) {
                if ((mask >> i) & 1) {
                    block.push_back(rest[i]);
                    sum += lambda[rest[i] - 1];
                } else {
                    rest2.push_back(rest[i]);
                }
            }
            if (sgn(sum) <= 0) continue; // strict prefix positivity
            blocks.push_back(block);
            rec(rest2, sum);
            blocks.pop_back();
        }
    };
    rec(remaining, Rational(0));
    return total;
}

long long c1(const Rational& a) { return sgn(a) > 0 ? 1 : 0; }

long long c2(const Rational& x, const Rational& y) {
    if (sgn(x) > 0 && sgn(y) > 0) return 1;
    if (sgn(y) <= 0 && sgn(x + y) > 0) return 2;
    return 0;
}

const RootSystem& typeASystem(int n) {
    static std::map<int, RootSystem> cache;
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, RootSystem::canonical("A" + std::to_string(n))).first;
    return it->second;
}

// maximal matchings on {1..n}: perfect for even n, one unmatched element
// for odd n
void enumerateMatchings(std::vector<int> rest, bool unmatchedUsed,
                        std::vector<std::pair<int, int>>& acc,
                        const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    if (rest.empty()) {
        emit(acc);
        return;
    }
    int i = rest[0];
    std::vector<int> rest1(rest.begin() + 1, rest.end());
    for (std::size_t j = 0; j < rest1.size(); ++j) {
        std::vector<int> rest2 = rest1;
        rest2.erase(rest2.begin() + j);
        acc.emplace_back(i, rest1[j]);
        enumerateMatchings(rest2, unmatchedUsed, acc, emit);
        acc.pop_back();
    }
    if (!unmatchedUsed && rest.size() % 2 == 1) enumerateMatchings(rest1, true, acc, emit);
}

} // namespace

TypeAResult type_A_identity(int n, const std::vector<Rational>& lambda) {
    if (static_cast<int>(lambda.size()) != n) throw Error("lambda dimension mismatch");
    TypeAResult res;
    res.s = typeAPartitionSum(n, lambda);

    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i + 1;
    std::vector<std::pair<int, int>> acc;
    enumerateMatchings(all, n % 2 == 0, acc, [&](const std::vector<std::pair<int, int>>& p) {
        // sign of the matching = epsilon of the corresponding 2-structure
        int sign = 1;
        if (n >= 2) {
            const RootSystem& rs = typeASystem(n - 1);
            TwoStructure ts;
            for (auto [i, j] : p) {
                SVec v = zeroVec(rs.context(), n - 1);
                for (int d = i; d < j; ++d) v[d - 1] = Scalar(rs.context(), Rational(1));
                int idx = rs.findRoot(v);
                if (idx < 0) throw Error("matching edge is not a type-A root");
                ts.lines.push_back(rs.positiveIndex(idx));
            }
            std::sort(ts.lines.begin(), ts.lines.end());
            ts.components = *decomposeComponents(rs, ts.lines);
            sign = epsilon(rs, ts);
        }
        // the identity evaluates psi at the reversed perturbed lambda, which
        // relabels edge endpoints: the net effect is c2(lambda_i, lambda_j)
        long long c = 1;
        std::vector<char> matched(n + 1, 0);
        for (auto [i, j] : p) {
            matched[i] = matched[j] = 1;
            c *= c2(lambda[i - 1], lambda[j - 1]);
        }
        if (n % 2 == 1)
            for (int u = 1; u <= n; ++u)
                if (!matched[u]) c *= c1(lambda[u - 1]);
        res.t += sign * c;
    });
    res.pass = res.s == (n % 2 ? -res.t : res.t);
    return res;
}

long long psi_face_pair(const FacePoset& fp, int faceD, int faceC, int faceDprime,
                        const Weight& wt) {
    if (!fp.leq(faceC, faceD) || !fp.leq(faceC, faceDprime))
        throw FaceNotBelow("psi_face_pair requires D, D' in the star of C");
    auto member = weightedMembership(fp, wt);
    long long sum = 0;
    for (int cp = 0; cp < fp.faceCount(); ++cp) {
        if (!member[cp] || !fp.leq(faceC, cp)) continue;
        if (!fp.leq(fp.compose(cp, faceDprime), faceD)) continue;
        sum += fp.face(cp).dim % 2 ? -1 : 1;
    }
    return sum;
}

std::vector<SVec> sampleLambdas(const RootSystem& rs, const FacePoset& full, int count,
                                uint64_t seed) {
    std::vector<SVec> out;
    const FieldPtr& ctx = rs.context();
    if (count >= 1) out.push_back(zeroVec(ctx, rs.dim()));
    if (count >= 2) {
        // a point on exactly one hyperplane: any codimension-1 face
        for (int f = 0; f < full.faceCount(); ++f)
            if (full.face(f).dim == full.dimV() - 1) {
                out.push_back(full.face(f).point);
                break;
            }
    }
    if (count >= 3) out.push_back(full.face(full.fundamentalChamber()).point); // dominant
    if (count >= 4) {
        SVec anti = out.back();
        for (auto& c : anti) c = -c;
        out.push_back(anti);
    }
    LambdaRng rng(seed);
    while (static_cast<int>(out.size()) < count) {
        SVec l = zeroVec(ctx, rs.dim());
        for (auto& c : l) c = Scalar(ctx, Rational(rng.nextCoord()));
        out.push_back(l);
    }
    return out;
}

} // namespace coxpizza
