#ifndef COXPIZZA_TWOSTRUCT_HPP
#define COXPIZZA_TWOSTRUCT_HPP

#include <optional>
#include <string>
#include <vector>

#include "coxpizza/rootsys.hpp"

namespace coxpizza {

/// A 2-structure: a sub-pseudo-root-system closed under negation, stored as
/// the sorted positive indices of its +/- pairs, together with its
/// decomposition into pairwise orthogonal irreducible components.
struct TwoStructure {
    struct Component {
        long m = 0;             // 0 for A1, else the dihedral line count (4 = B2)
        std::vector<int> lines; // positive-root indices, sorted
        std::string tag() const {
            return m == 0 ? "A1" : m == 4 ? "B2" : "I2(" + std::to_string(m) + ")";
        }
        int rank() const { return m == 0 ? 1 : 2; }
    };

    std::vector<int> lines; // sorted positive-root indices
    std::vector<Component> components;

    int rank() const;
    std::string typeTag() const; // e.g. "A1^3", "B2^2", "I2(8)"
};

struct TwoStructureCheck {
    bool ok = false;
    std::string reason;
    int witnessElement = -1; // group element violating the determinant condition
};

/// Decompose a negation-closed root subset into orthogonal components and
/// verify each is of type A1, B2 or I2(2^k), k >= 3.
std::optional<std::vector<TwoStructure::Component>> decomposeComponents(
    const RootSystem& rs, const std::vector<int>& lines, std::string* reason = nullptr);

/// Condition check per the definition: component types plus the determinant
/// condition on the setwise stabilizer of the positive part.
TwoStructureCheck is_two_structure(const RootSystem& rs, const std::vector<int>& lines,
                                   long groupBound = kDefaultGroupBound);

/// The explicit representative 2-structure, assembled factor by factor.
TwoStructure seed_two_structure(const RootSystem& rs);

/// W-orbit of the seed, deduplicated; every element passes is_two_structure
/// when validate is set.
std::vector<TwoStructure> enumerate_two_structures(const RootSystem& rs,
                                                   long groupBound = kDefaultGroupBound,
                                                   bool validate = true);

/// Ordered orthogonal sequences defining the sign. Entries are root indices.
using ThetaSequence = std::vector<int>;

/// Valid ordered pairs (alpha, alpha') for a rank-2 component: the positive
/// part must be lexicographically positive for (alpha, alpha').
std::vector<std::pair<int, int>> validThetaPairs(const RootSystem& rs,
                                                 const TwoStructure::Component& comp);

/// Build a theta sequence; componentOrder permutes components, rank2Choices
/// selects among the valid pairs of each rank-2 component.
ThetaSequence theta_sequence(const RootSystem& rs, const TwoStructure& ts,
                             const std::vector<int>& componentOrder = {},
                             const std::vector<int>& rank2Choices = {});

/// det of the group element sending Phi+ to the lexicographic positive
/// system of theta, computed as the parity of |Phi+_theta ∩ Phi-|.
int detWTheta(const RootSystem& rs, const ThetaSequence& theta);

/// The sign of a 2-structure.
int epsilon(const RootSystem& rs, const TwoStructure& ts);

/// Independent sign evaluation by full group scan:
/// (1/|W_1|) * sum over { w : w(phi+) in Phi+ } of det(w).
Rational epsilon_stabilizer_oracle(const RootSystem& rs, const TwoStructure& ts,
                                   long groupBound = kDefaultGroupBound);

/// |W(phi,Phi+)| and |W_1(phi,Phi+)| from the same scan.
std::pair<long, long> stabilizer_counts(const RootSystem& rs, const TwoStructure& ts,
                                        long groupBound = kDefaultGroupBound);

/// Count of unordered k-subsets of roots, pairwise orthogonal, all of the
/// same squared length (restricted to one length class when given).
long orthogonal_set_count(const RootSystem& rs, int k,
                          const std::optional<Rational>& lengthClass = std::nullopt);

struct ResidualCheck {
    long residual = 0;
    std::string rule;
    bool pass = false;
};

/// |Phi+ - phi+| against the per-type parity table (irreducible systems).
ResidualCheck residual_count_check(const RootSystem& rs, const TwoStructure& ts);

/// Apply a group element to a 2-structure (as a set of +/- pairs).
std::vector<int> actOnLines(const RootSystem& rs, int w, const std::vector<int>& lines);

} // namespace coxpizza

#endif
