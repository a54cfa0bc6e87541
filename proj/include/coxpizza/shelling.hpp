#ifndef COXPIZZA_SHELLING_HPP
#define COXPIZZA_SHELLING_HPP

#include "coxpizza/weighted.hpp"

namespace coxpizza {

/// Deterministic linear extension of the chamber poset with base B:
/// sort by (|S(B,T)|, sign vector).
struct ShellingOrder {
    int base = -1;
    std::vector<int> order;
};
ShellingOrder shelling_order(const FacePoset& fp, int chamberB);

/// Fibers of f_B computed two ways: first-capture along the shelling order
/// (first-capture route) and the composition rule f_B(C) = C o B.
struct FiberReport {
    std::vector<std::vector<int>> byOrder, byComposition; // indexed like order
    bool equal = false;
    bool partition = false;
};
FiberReport fiber_partition(const FacePoset& fp, const ShellingOrder& so);

/// Pairwise wall-normal test for the acute-dihedral-angle condition.
struct ConditionAReport {
    bool pass = false;
    int chamber = -1;
    int wall1 = -1, wall2 = -1; // hyperplane positions witnessing failure
};
ConditionAReport check_condition_A(const FacePoset& fp);

/// Builds the sign-flipped base chamber of the shellability argument and
/// verifies the weighted chamber set is a lower order ideal (an initial
/// shelling segment), plus the single-wall-crossing implication.
struct InitialSegmentReport {
    int base = -1;
    bool isIdeal = false;
    bool crossingOk = false;
    int segmentLength = 0;
};
InitialSegmentReport weighted_initial_segment(const FacePoset& fp, const Weight& wt);

/// For dominant lambda: W_lambda is downward closed in the strong Bruhat
/// order, and z <= w implies (z^-1 lambda, x) >= (w^-1 lambda, x) on B.
struct BruhatReport {
    bool isIdeal = false;
    bool monotone = false;
    long members = 0;
};
BruhatReport strong_bruhat_ideal(const RootSystem& rs, const FacePoset& full, const SVec& lambda);

} // namespace coxpizza

#endif
