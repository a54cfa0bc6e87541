#ifndef COXPIZZA_CONEALG_HPP
#define COXPIZZA_CONEALG_HPP

#include <functional>
#include <map>

#include "coxpizza/complex.hpp"

namespace coxpizza {

/// Closure of a face lies in the closed nonnegative side of lambda iff
/// lambda kills the lineality space and is nonnegative on every ray.
bool closureInHalfspace(const FacePoset& fp, int face, const SVec& lambda);

/// Element of K_H(V) in the open-face basis of a fixed poset.
struct ConeClass {
    std::vector<long long> coeffs;

    ConeClass() = default;
    explicit ConeClass(int n) : coeffs(n, 0) {}
    ConeClass& operator+=(const ConeClass& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    ConeClass& operator-=(const ConeClass& o) {
        for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= o.coeffs[i];
        return *this;
    }
    ConeClass& operator*=(long long c) {
        for (auto& x : coeffs) x *= c;
        return *this;
    }
    bool operator==(const ConeClass& o) const { return coeffs == o.coeffs; }
};

/// Closed cone subordinate to the arrangement, as weak sign conditions per
/// hyperplane position: kFree, forced zero, weak plus, weak minus.
struct ConeSpec {
    static constexpr int kFree = 2;
    std::vector<int> cond; // one of {kFree, 0, +1, -1}

    explicit ConeSpec(int positions) : cond(positions, kFree) {}
};

/// Class of the cone cl(C).
ConeSpec closureSpec(const FacePoset& fp, int face);
/// Class of span(G) + cl(K) for faces G <= K (constraints only on E(G)).
ConeSpec spanPlusSpec(const FacePoset& fp, int g, int k);
/// Intersect with the hyperplane (side 0) or a closed half-space (side +-1).
ConeSpec intersectSpec(ConeSpec spec, int position, int side);

/// Open faces contained in the spec cone.
ConeClass classOfSpec(const FacePoset& fp, const ConeSpec& spec);
ConeClass closedClass(const FacePoset& fp, int face);

/// Z-valued valuation, stored by its values on the open-face basis.
struct Valuation {
    std::vector<long long> values;

    long long onOpenFace(int f) const { return values[f]; }
    long long onClass(const ConeClass& c) const {
        long long s = 0;
        for (std::size_t i = 0; i < values.size(); ++i) s += values[i] * c.coeffs[i];
        return s;
    }
    bool operator==(const Valuation& o) const { return values == o.values; }
};

long long valuationOnSpec(const FacePoset& fp, const Valuation& v, const ConeSpec& spec);
long long valuationOnClosedFace(const FacePoset& fp, const Valuation& v, int face);

/// Build a valuation from its values on the closures of faces (Moebius
/// inversion along the face order).
Valuation valuationFromClosed(const FacePoset& fp, const std::function<long long(int)>& closed);

/// The counit: (-1)^dim on subspaces, 0 elsewhere.
Valuation counitValuation(const FacePoset& fp);

/// The half-space indicator valuation psi_lambda.
Valuation psiLambdaValuation(const FacePoset& fp, const SVec& lambda);

/// Convolution product of valuations induced by the coproduct.
Valuation convolve(const FacePoset& fp, const Valuation& f1, const Valuation& f2);

/// Groemer's criterion for f on every face closure against every hyperplane.
bool groemerHolds(const FacePoset& fp, const Valuation& f);

/// One coproduct term (-1)^{dim C'} [cl C'] (x) [span C' + cl C].
struct CoproductTerm {
    int sign;
    int spanFace; // C'
    int coneFace; // C
};
std::vector<CoproductTerm> coproduct(const FacePoset& fp, int face);

/// Sparse tensors over the open-face basis, used for the coalgebra laws.
using Tensor2 = std::map<std::pair<int, int>, long long>;
using Tensor3 = std::map<std::tuple<int, int, int>, long long>;

/// Coproduct of every open basis element, as open (x) open tensors.
std::vector<Tensor2> coproductOnOpenBasis(const FacePoset& fp);
bool coassociativityHolds(const FacePoset& fp);
bool counitLawsHold(const FacePoset& fp);

/// x in cl(K) + span(F), decided combinatorially (F <= K required).
bool spanMembership(const FacePoset& fp, int xFace, int f, int k);

/// The GKM valuation psi_K(x, lambda) on the closure of face k.
long long psiK(const FacePoset& fp, int k, int xFace, const SVec& lambda);

} // namespace coxpizza

#endif
