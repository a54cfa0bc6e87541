#ifndef COXPIZZA_SCALAR_HPP
#define COXPIZZA_SCALAR_HPP

#include <gmpxx.h>

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "coxpizza/errors.hpp"

namespace coxpizza {

using Rational = mpq_class;

inline int sgn(const Rational& q) { return sgn(q.get_num()); }

/// Exact arithmetic in the real cyclotomic field Q(theta), theta = 2cos(pi/N).
/// One context per conductor N; elements are polynomials in theta of degree
/// < degree(), reduced modulo the minimal polynomial of theta.
class FieldContext : public std::enable_shared_from_this<FieldContext> {
public:
    explicit FieldContext(long conductor);

    long conductor() const { return conductor_; }
    int degree() const { return static_cast<int>(minpoly_.size()) - 1; }
    /// Monic minimal polynomial of theta, low coefficients first.
    const std::vector<Rational>& minpoly() const { return minpoly_; }

    /// Current rational enclosure [lo, hi] of theta; refine() halves it.
    std::pair<Rational, Rational> enclosure() const;
    void refine() const;

    /// Reduce an arbitrary coefficient list modulo the minimal polynomial.
    std::vector<Rational> reduce(std::vector<Rational> coeffs) const;

private:
    long conductor_;
    std::vector<Rational> minpoly_;
    std::vector<std::vector<Rational>> powers_; // theta^k for k = degree .. 2*degree-2
    mutable std::mutex mu_;
    mutable Rational lo_, hi_;

    void refineLocked() const;
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// Shared, cached context per conductor.
FieldPtr field_context(long conductor);

class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldPtr ctx) : ctx_(std::move(ctx)), c_(ctxDegree(), Rational(0)) {}
    Scalar(FieldPtr ctx, const Rational& value);
    Scalar(FieldPtr ctx, std::vector<Rational> coeffs);

    const FieldPtr& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool isZero() const;
    bool isRational() const;
    /// Constant coefficient; exact value when isRational().
    const Rational& rationalPart() const { return c_.at(0); }

    /// Exact sign of the real number this element represents.
    int sign() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    Scalar inv() const;

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
    friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
    friend bool operator>(const Scalar& a, const Scalar& b) { return (a - b).sign() > 0; }
    friend bool operator<=(const Scalar& a, const Scalar& b) { return (a - b).sign() <= 0; }
    friend bool operator>=(const Scalar& a, const Scalar& b) { return (a - b).sign() >= 0; }

    std::string str() const;

private:
    FieldPtr ctx_;
    std::vector<Rational> c_;

    int ctxDegree() const { return ctx_ ? ctx_->degree() : 1; }
    void requireSameContext(const Scalar& o) const;
};

/// theta itself, i.e. 2cos(pi/N).
Scalar theta(const FieldPtr& ctx);

/// Exact cos(pi/m) inside Q(2cos(pi/N)); requires m | N.
Scalar cos_pi_over(const FieldPtr& ctx, long m);

/// Cyclotomic polynomial Phi_n, integer coefficients, low first.
std::vector<Rational> cyclotomic(long n);

/// Monic "doubled Chebyshev" C_k with C_k(2cos t) = 2cos(k t).
std::vector<Rational> dickson(long k);

} // namespace coxpizza

#endif
