#ifndef COXPIZZA_LINALG_HPP
#define COXPIZZA_LINALG_HPP

#include <optional>
#include <vector>

#include "coxpizza/scalar.hpp"

namespace coxpizza {

using SVec = std::vector<Scalar>;
using SMat = std::vector<SVec>;

SVec zeroVec(const FieldPtr& ctx, std::size_t n);

Scalar dotStd(const SVec& x, const SVec& y);
/// Bilinear form x^T G y.
Scalar dotForm(const SMat& gram, const SVec& x, const SVec& y);

SVec addVec(SVec x, const SVec& y);
SVec subVec(SVec x, const SVec& y);
SVec scaleVec(SVec x, const Scalar& c);

/// Solve A x = b for square invertible A; throws SingularMatrix otherwise.
SVec solveLinear(SMat a, SVec b);

/// Rank of the row space.
int rankOf(SMat rows);

/// Basis of { x : rows * x = 0 }, rows acting coordinatewise.
std::vector<SVec> nullspace(SMat rows, std::size_t ncols, const FieldPtr& ctx);

/// Determinant sign (+1, -1, 0) of a square matrix.
int detSign(SMat a);

/// Coordinates of v in the given basis, when v lies in its span.
std::optional<SVec> coordsInBasis(const std::vector<SVec>& basis, const SVec& v,
                                  const FieldPtr& ctx);

/// Evaluate a rational-coefficient polynomial at a Scalar.
Scalar evalPoly(const std::vector<Rational>& p, const Scalar& x);

} // namespace coxpizza

#endif
