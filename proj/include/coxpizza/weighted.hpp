#ifndef COXPIZZA_WEIGHTED_HPP
#define COXPIZZA_WEIGHTED_HPP

#include "coxpizza/conealg.hpp"
#include "coxpizza/twostruct.hpp"

namespace coxpizza {

/// Linear functional (lambda, .) optionally perturbed to (lambda - eps*mu, .)
/// for an infinitesimal eps > 0; signs are decided lexicographically.
struct Weight {
    SVec lambda;
    std::optional<SVec> epsShift; // mu in lambda - eps*mu

    int signAt(const RootSystem& rs, const SVec& x) const;
    bool killsSubspace(const RootSystem& rs, const std::vector<SVec>& basis) const;
};

/// Membership of every face in L_lambda (closure on the nonnegative side).
std::vector<char> weightedMembership(const FacePoset& fp, const Weight& wt);

struct WeightedComplexResult {
    std::vector<char> member;
    std::vector<int> faces;
};
WeightedComplexResult weighted_complex(const FacePoset& fp, const Weight& wt, int baseFace = -1);

long long weighted_sum(const FacePoset& fp, int chamberB, const Weight& wt);
long long relative_weighted_sum(const FacePoset& fp, int faceC, int chamberB, const Weight& wt);

struct PizzaClasses {
    ConeClass pi, p, p0;
};
PizzaClasses pizza(const FacePoset& fp, int chamberB);

/// Pi(H) = sum_phi eps(phi) Pi(H_phi) and P(H) = sum_phi eps(phi) P(H_phi),
/// expanded in the open-face basis of the full arrangement.
struct FirstMainReport {
    bool piEqual = false, pEqual = false;
    int structures = 0;
};
FirstMainReport verify_theorem_2structures(const RootSystem& rs,
                                           long groupBound = kDefaultGroupBound);

/// Second main theorem for the parabolic subset I of S.
struct SecondMainResult {
    long long lhs = 0, rhs = 0;
    bool pass = false;
};
SecondMainResult verify_second_main(const RootSystem& rs, const FacePoset& full,
                                    const std::vector<int>& I, const Weight& wt,
                                    long groupBound = kDefaultGroupBound);

/// Weighted sum vs. its 2-structure expansion with per-component closed forms.
std::pair<long long, long long> gkm_vs_herb(const RootSystem& rs, const FacePoset& full,
                                            const SVec& lambda,
                                            long groupBound = kDefaultGroupBound);

/// Rank-1 closed form: 0 / 1 / 2 by the sign of the coefficient.
long long closedFormRank1(int signOfC);

/// Exact model of a dihedral component: orthonormal reference pair (u, w)
/// with u on the boundary of the base chamber, and the 2m unit directions
/// indexed by their angle r*pi/m from u.
struct DihedralFrame {
    long m = 0;
    SVec u, w;
    std::vector<SVec> directions;
};
DihedralFrame dihedralFrame(const RootSystem& rs, const TwoStructure::Component& comp);

/// Closed form for I2(2^k) components, k >= 2 (B2 = I2(4) included).
long long closedFormRank2(const RootSystem& rs, const DihedralFrame& frame,
                          const SVec& lambdaInPlane);

SVec projectToComponent(const RootSystem& rs, const TwoStructure::Component& comp,
                        const SVec& lambda);
long long componentPsi(const RootSystem& rs, const TwoStructure::Component& comp,
                       const SVec& lambdaProj);

/// S(lambda) over ordered set partitions with strictly positive prefix sums,
/// T(lambda) over maximal matchings; the identity asserts S = (-1)^n T.
struct TypeAResult {
    long long s = 0, t = 0;
    bool pass = false;
};
TypeAResult type_A_identity(int n, const std::vector<Rational>& lambda);

/// psi_{D/C}(D', lambda): alternating count of faces C' of the weighted star
/// with C' o D' <= D.
long long psi_face_pair(const FacePoset& fp, int faceD, int faceC, int faceDprime,
                        const Weight& wt);

/// Deterministic lambda sampler: zero, a point on one hyperplane, dominant,
/// antidominant, then seeded small-integer coordinate vectors.
std::vector<SVec> sampleLambdas(const RootSystem& rs, const FacePoset& full, int count,
                                uint64_t seed);

/// The documented linear congruential generator behind all seeded sampling:
/// x <- (1103515245 x + 12345) mod 2^31, coordinate = ((x >> 16) mod 19) - 9.
struct LambdaRng {
    uint64_t state;
    explicit LambdaRng(uint64_t seed) : state(seed % 0x80000000ull) {}
    long nextCoord() {
        state = (1103515245ull * state + 12345ull) % 0x80000000ull;
        return static_cast<long>((state >> 16) % 19) - 9;
    }
};

} // namespace coxpizza

#endif
