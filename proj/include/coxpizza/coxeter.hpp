#ifndef COXPIZZA_COXETER_HPP
#define COXPIZZA_COXETER_HPP

#include <string>
#include <vector>

#include "coxpizza/errors.hpp"

namespace coxpizza {

/// Irreducible factor of a Coxeter system, with vertices listed in the
/// order matching the Bourbaki simple-root conventions used by bourbaki().
struct CoxeterFactor {
    char family = 'A';          // A B D E F G H I  (C folds into B, rank-2 aliases canonicalized)
    int rank = 1;
    long m = 0;                 // edge label for I2(m)
    std::vector<int> vertices;  // generator indices, path first, branch tip last

    std::string tag() const;
    long groupOrder() const;
    /// Factor counts toward the A_{2n} (n odd) sign correction.
    bool isA2nOddN() const { return family == 'A' && rank % 4 == 2; }
    /// Factor counts toward the I2(2n'+1) (n' >= 3 odd) sign correction.
    bool isI2OddCorrection() const { return family == 'I' && m >= 7 && m % 4 == 3; }
};

struct CoxeterSystem {
    std::vector<std::vector<long>> matrix; // m_{s,t}, 1 on the diagonal
    std::vector<CoxeterFactor> factors;

    int rank() const { return static_cast<int>(matrix.size()); }
    long conductor() const; // lcm of all matrix entries
    long groupOrder() const;
    std::string description() const;

    /// Sub-system generated by a subset of the generators (indices into S).
    CoxeterSystem restrict(const std::vector<int>& subset) const;
};

/// Build a Coxeter system from a type string, e.g. "A3", "B3xA1", "I2(7)".
CoxeterSystem parse_type(const std::string& spec);

/// Classify the connected components of a Coxeter matrix into factors.
/// Throws UnsupportedType if any component is not of finite type.
std::vector<CoxeterFactor> classify(const std::vector<std::vector<long>>& matrix);

} // namespace coxpizza

#endif
