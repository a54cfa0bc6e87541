#include "coxpizza/conealg.hpp"

#include <algorithm>
#include <numeric>

namespace coxpizza {

bool closureInHalfspace(const FacePoset& fp, int face, const SVec& lambda) {
    const RootSystem& rs = fp.rootSystem();
    for (const auto& v : fp.v0basis())
        if (!rs.inner(lambda, v).isZero()) return false;
    for (int r : fp.face(face).rays)
        if (rs.inner(lambda, fp.face(r).point).sign() < 0) return false;
    return true;
}

ConeSpec closureSpec(const FacePoset& fp, int face) {
    ConeSpec spec(fp.hyperplaneCount());
    for (int p = 0; p < fp.hyperplaneCount(); ++p) spec.cond[p] = fp.face(face).sign.at(p);
    return spec;
}

ConeSpec spanPlusSpec(const FacePoset& fp, int g, int k) {
    if (!fp.leq(g, k)) throw FaceNotBelow("spanPlusSpec requires G <= K");
    ConeSpec spec(fp.hyperplaneCount());
    const SignVec& gs = fp.face(g).sign;
    const SignVec& ks = fp.face(k).sign;
    for (int p = 0; p < fp.hyperplaneCount(); ++p)
        spec.cond[p] = gs.at(p) == 0 ? ks.at(p) : ConeSpec::kFree;
    return spec;
}

ConeSpec intersectSpec(ConeSpec spec, int position, int side) {
    int c = spec.cond[position];
    if (side == 0) {
        spec.cond[position] = 0;
    } else if (c == ConeSpec::kFree) {
        spec.cond[position] = side;
    } else if (c == 0 || c == -side) {
        spec.cond[position] = 0;
    } // c == side: unchanged
    return spec;
}

ConeClass classOfSpec(const FacePoset& fp, const ConeSpec& spec) {
    ConeClass cls(fp.faceCount());
    for (int f = 0; f < fp.faceCount(); ++f) {
        bool in = true;
        const SignVec& s = fp.face(f).sign;
        for (int p = 0; p < fp.hyperplaneCount() && in; ++p) {
            int c = spec.cond[p];
            if (c == ConeSpec::kFree) continue;
            int v = s.at(p);
            in = (c == 0) ? v == 0 : (v == 0 || v == c);
        }
        if (in) cls.coeffs[f] = 1;
    }
    return cls;
}

ConeClass closedClass(const FacePoset& fp, int face) {
    ConeClass cls(fp.faceCount());
    for (int f = 0; f < fp.faceCount(); ++f)
        if (fp.leq(f, face)) cls.coeffs[f] = 1;
    return cls;
}

long long valuationOnSpec(const FacePoset& fp, const Valuation& v, const ConeSpec& spec) {
    return v.onClass(classOfSpec(fp, spec));
}

long long valuationOnClosedFace(const FacePoset& fp, const Valuation& v, int face) {
    long long s = 0;
    for (int f = 0; f < fp.faceCount(); ++f)
        if (fp.leq(f, face)) s += v.values[f];
    return s;
}

Valuation valuationFromClosed(const FacePoset& fp,
                              const std::function<long long(int)>& closed) {
    int n = fp.faceCount();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fp.face(a).dim < fp.face(b).dim; });
    Valuation v;
    v.values.assign(n, 0);
    for (int f : order) {
        long long below = 0;
        for (int d = 0; d < n; ++d)
            if (d != f && fp.leq(d, f)) below += v.values[d];
        v.values[f] = closed(f) - below;
    }
    return v;
}

Valuation counitValuation(const FacePoset& fp) {
    int sign = fp.v0dim() % 2 ? -1 : 1;
    return valuationFromClosed(fp, [&](int f) -> long long {
        return f == fp.minimalFace() ? sign : 0;
    });
}

Valuation psiLambdaValuation(const FacePoset& fp, const SVec& lambda) {
    return valuationFromClosed(fp, [&](int f) -> long long {
        return closureInHalfspace(fp, f, lambda) ? 1 : 0;
    });
}

Valuation convolve(const FacePoset& fp, const Valuation& f1, const Valuation& f2) {
    return valuationFromClosed(fp, [&](int k) -> long long {
        long long sum = 0;
        for (int cp = 0; cp < fp.faceCount(); ++cp) {
            if (!fp.leq(cp, k)) continue;
            long long left = valuationOnClosedFace(fp, f1, cp);
            if (left == 0) continue;
            long long right = valuationOnSpec(fp, f2, spanPlusSpec(fp, cp, k));
            if (right == 0) continue;
            int sign = fp.face(cp).dim % 2 ? -1 : 1;
            sum += sign * left * right;
        }
        return sum;
    });
}

bool groemerHolds(const FacePoset& fp, const Valuation& f) {
    for (int k = 0; k < fp.faceCount(); ++k) {
        ConeSpec base = closureSpec(fp, k);
        long long fk = valuationOnSpec(fp, f, base);
        for (int p = 0; p < fp.hyperplaneCount(); ++p) {
            long long f0 = valuationOnSpec(fp, f, intersectSpec(base, p, 0));
            long long fplus = valuationOnSpec(fp, f, intersectSpec(base, p, 1));
            long long fminus = valuationOnSpec(fp, f, intersectSpec(base, p, -1));
            if (fk + f0 != fplus + fminus) return false;
        }
    }
    return true;
}

std::vector<CoproductTerm> coproduct(const FacePoset& fp, int face) {
    std::vector<CoproductTerm> terms;
    for (int cp = 0; cp < fp.faceCount(); ++cp) {
        if (!fp.leq(cp, face)) continue;
        terms.push_back({fp.face(cp).dim % 2 ? -1 : 1, cp, face});
    }
    return terms;
}

std::vector<Tensor2> coproductOnOpenBasis(const FacePoset& fp) {
    int n = fp.faceCount();
    // coproduct of each closed face, expanded over open (x) open
    std::vector<Tensor2> closedDelta(n);
    for (int k = 0; k < n; ++k) {
        for (const auto& t : coproduct(fp, k)) {
            ConeClass left = closedClass(fp, t.spanFace);
            ConeClass right = classOfSpec(fp, spanPlusSpec(fp, t.spanFace, t.coneFace));
            for (int a = 0; a < n; ++a) {
                if (!left.coeffs[a]) continue;
                for (int b = 0; b < n; ++b) {
                    if (!right.coeffs[b]) continue;
                    closedDelta[k][{a, b}] += t.sign;
                }
            }
        }
    }
    // Moebius: Delta[open D] = Delta[cl D] - sum over D' < D of Delta[open D']
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return fp.face(a).dim < fp.face(b).dim; });
    std::vector<Tensor2> openDelta(n);
    for (int f : order) {
        Tensor2 acc = closedDelta[f];
        for (int d = 0; d < n; ++d) {
            if (d == f || !fp.leq(d, f)) continue;
            for (const auto& [key, val] : openDelta[d]) acc[key] -= val;
        }
        for (auto it = acc.begin(); it != acc.end();)
            it = it->second == 0 ? acc.erase(it) : std::next(it);
        openDelta[f] = std::move(acc);
    }
    return openDelta;
}

bool coassociativityHolds(const FacePoset& fp) {
    auto delta = coproductOnOpenBasis(fp);
    for (int f = 0; f < fp.faceCount(); ++f) {
        Tensor3 lhs, rhs;
        for (const auto& [ab, c1] : delta[f]) {
            auto [a, b] = ab;
            for (const auto& [xy, c2] : delta[a]) {
                auto [x, y] = xy;
                lhs[{x, y, b}] += c1 * c2;
            }
            for (const auto& [xy, c2] : delta[b]) {
                auto [x, y] = xy;
                rhs[{a, x, y}] += c1 * c2;
            }
        }
        auto clean = [](Tensor3& t) {
            for (auto it = t.begin(); it != t.end();)
                it = it->second == 0 ? t.erase(it) : std::next(it);
        };
        clean(lhs);
        clean(rhs);
        if (lhs != rhs) return false;
    }
    return true;
}

bool counitLawsHold(const FacePoset& fp) {
    auto delta = coproductOnOpenBasis(fp);
    Valuation eps = counitValuation(fp);
    for (int f = 0; f < fp.faceCount(); ++f) {
        std::vector<long long> left(fp.faceCount(), 0), right(fp.faceCount(), 0);
        for (const auto& [ab, c] : delta[f]) {
            auto [a, b] = ab;
            left[b] += c * eps.values[a];
            right[a] += c * eps.values[b];
        }
        for (int d = 0; d < fp.faceCount(); ++d) {
            long long expect = d == f ? 1 : 0;
            if (left[d] != expect || right[d] != expect) return false;
        }
    }
    return true;
}

bool spanMembership(const FacePoset& fp, int xFace, int f, int k) {
    if (!fp.leq(f, k)) throw FaceNotBelow("spanMembership requires F <= K");
    return fp.leq(fp.compose(f, xFace), k);
}

long long psiK(const FacePoset& fp, int k, int xFace, const SVec& lambda) {
    long long sum = 0;
    for (int f = 0; f < fp.faceCount(); ++f) {
        if (!fp.leq(f, k)) continue;
        if (!closureInHalfspace(fp, f, lambda)) continue;
        if (!fp.leq(fp.compose(f, xFace), k)) continue;
        sum += fp.face(f).dim % 2 ? -1 : 1;
    }
    return sum;
}

} // namespace coxpizza
