#include "coxpizza/scalar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace coxpizza {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly polyMul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division, remainder must vanish.
Poly polyDivExact(Poly num, const Poly& den) {
    Poly q(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Rational(0));
    for (std::size_t k = q.size(); k-- > 0;) {
        Rational t = num[k + den.size() - 1] / den.back();
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) num[k + j] -= t * den[j];
    }
    for (const auto& c : num)
        if (c != 0) throw Error("polyDivExact: nonzero remainder");
    return q;
}

Rational evalAt(const Poly& p, const Rational& x) {
    Rational r(0);
    for (std::size_t k = p.size(); k-- > 0;) r = r * x + p[k];
    return r;
}

// cos enclosure at a rational point 0 <= x <= 3.2, via the Taylor series
// with an explicit tail bound.
std::pair<Rational, Rational> cosEnclosure(const Rational& x) {
    const int K = 24;
    Rational x2 = x * x, term(1), sum(0);
    for (int k = 0; k < K; ++k) {
        sum += (k % 2 == 0) ? term : -term;
        term *= x2;
        term /= (2 * k + 1) * (2 * k + 2);
    }
    Rational bound = term * 2;
    return {sum - bound, sum + bound};
}

std::pair<Rational, Rational> piBounds() {
    mpz_class num("314159265358979323846");
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, 20);
    Rational lo(num, den), hi(num + 1, den);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

long eulerPhi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

} // namespace

std::vector<Rational> cyclotomic(long n) {
    static std::map<long, Poly> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed recursively
    // without the lock re-entering (divisors are processed iteratively).
    std::vector<long> pending{n};
    while (!pending.empty()) {
        long m = pending.back();
        if (cache.count(m)) {
            pending.pop_back();
            continue;
        }
        bool ready = true;
        for (long d = 1; d < m; ++d)
            if (m % d == 0 && !cache.count(d)) {
                pending.push_back(d);
                ready = false;
            }
        if (!ready) continue;
        Poly num(m + 1, Rational(0));
        num[0] = -1;
        num[m] = 1;
        for (long d = 1; d < m; ++d)
            if (m % d == 0) num = polyDivExact(std::move(num), cache[d]);
        cache[m] = num;
        pending.pop_back();
    }
    return cache[n];
}

std::vector<Rational> dickson(long k) {
    Poly prev{Rational(2)}, cur{Rational(0), Rational(1)};
    if (k == 0) return prev;
    for (long i = 1; i < k; ++i) {
        Poly next(cur.size() + 1, Rational(0));
        for (std::size_t j = 0; j < cur.size(); ++j) next[j + 1] = cur[j];
        for (std::size_t j = 0; j < prev.size(); ++j) next[j] -= prev[j];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

FieldContext::FieldContext(long conductor) : conductor_(conductor) {
    if (conductor < 1) throw Error("conductor must be >= 1");
    if (conductor == 1) {
        minpoly_ = {Rational(2), Rational(1)}; // theta = -2
        lo_ = hi_ = Rational(-2);
    } else {
        Poly phi = cyclotomic(2 * conductor);
        long d = static_cast<long>(phi.size()) - 1;
        long m = d / 2;
        // phi is palindromic of even degree; write phi(z)/z^m in the basis
        // z^k + z^-k and convert with C_k(z + 1/z) = z^k + z^-k.
        Poly g{phi[m]};
        for (long k = 1; k <= m; ++k) {
            Poly ck = dickson(k);
            if (static_cast<long>(g.size()) < k + 1) g.resize(k + 1, Rational(0));
            for (std::size_t j = 0; j < ck.size(); ++j) g[j] += phi[m + k] * ck[j];
        }
        trim(g);
        if (g.back() != 1 || static_cast<long>(g.size()) - 1 != eulerPhi(2 * conductor) / 2)
            throw Error("minimal polynomial construction failed");
        minpoly_ = g;

        if (degree() == 1) {
            lo_ = hi_ = -minpoly_[0];
        } else {
            auto [plo, phi_] = piBounds();
            auto top = cosEnclosure(plo / conductor);
            auto bot = cosEnclosure(phi_ / conductor);
            lo_ = bot.first * 2;
            hi_ = top.second * 2;
            int slo = sgn(evalAt(minpoly_, lo_)), shi = sgn(evalAt(minpoly_, hi_));
            if (slo == 0 || shi == 0 || slo == shi)
                throw Error("initial enclosure does not isolate theta");
        }
    }
    int d = degree();
    powers_.clear();
    if (d >= 1) {
        Poly cur(d, Rational(0)); // theta^d reduced
        for (int j = 0; j < d; ++j) cur[j] = -minpoly_[j];
        for (int k = d; k <= 2 * d - 2; ++k) {
            powers_.push_back(cur);
            Poly next(d, Rational(0));
            for (int j = 0; j < d - 1; ++j) next[j + 1] = cur[j];
            if (cur[d - 1] != 0)
                for (int j = 0; j < d; ++j) next[j] -= cur[d - 1] * minpoly_[j];
            cur = std::move(next);
        }
    }
}

std::pair<Rational, Rational> FieldContext::enclosure() const {
    std::lock_guard<std::mutex> lock(mu_);
    return {lo_, hi_};
}

void FieldContext::refine() const {
    std::lock_guard<std::mutex> lock(mu_);
    refineLocked();
}

void FieldContext::refineLocked() const {
    if (lo_ == hi_) return;
    Rational mid = (lo_ + hi_) / 2;
    int sm = sgn(evalAt(minpoly_, mid));
    if (sm == 0) { // rational root: only possible in degree 1
        lo_ = hi_ = mid;
        return;
    }
    int slo = sgn(evalAt(minpoly_, lo_));
    if (slo != sm)
        hi_ = mid;
    else
        lo_ = mid;
}

std::vector<Rational> FieldContext::reduce(std::vector<Rational> c) const {
    std::size_t d = static_cast<std::size_t>(degree());
    for (std::size_t k = c.size(); k-- > d;) {
        Rational t = c[k];
        if (t == 0) continue;
        c[k] = 0;
        for (std::size_t j = 0; j < d; ++j) c[k - d + j] -= t * minpoly_[j];
    }
    c.resize(d, Rational(0));
    return c;
}

FieldPtr field_context(long conductor) {
    static std::map<long, FieldPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& p = cache[conductor];
    if (!p) p = std::make_shared<FieldContext>(conductor);
    return p;
}

Scalar::Scalar(FieldPtr ctx, const Rational& value) : ctx_(std::move(ctx)) {
    c_.assign(ctxDegree(), Rational(0));
    c_[0] = value;
}

Scalar::Scalar(FieldPtr ctx, std::vector<Rational> coeffs) : ctx_(std::move(ctx)) {
    c_ = ctx_->reduce(std::move(coeffs));
}

bool Scalar::isZero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool Scalar::isRational() const {
    for (std::size_t k = 1; k < c_.size(); ++k)
        if (c_[k] != 0) return false;
    return true;
}

void Scalar::requireSameContext(const Scalar& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->conductor() != o.ctx_->conductor())
        throw MixedContext("scalars from different field contexts");
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    requireSameContext(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    requireSameContext(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    requireSameContext(o);
    std::size_t d = c_.size();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (o.c_[j] == 0) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = ctx_->reduce(std::move(prod));
    return *this;
}

Scalar Scalar::inv() const {
    if (isZero()) throw DivisionByZero("inverse of zero");
    if (isRational()) {
        Scalar r(ctx_, Rational(1) / c_[0]);
        return r;
    }
    // extended Euclid in Q[x]: u*this + v*minpoly = 1
    Poly r0 = ctx_->minpoly(), r1 = c_;
    trim(r1);
    Poly s0{}, s1{Rational(1)};
    while (true) {
        // r0 = q*r1 + r2
        Poly q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 0, Rational(0));
        Poly rem = r0;
        for (std::size_t k = q.size(); k-- > 0;) {
            Rational t = rem[k + r1.size() - 1] / r1.back();
            q[k] = t;
            if (t == 0) continue;
            for (std::size_t j = 0; j < r1.size(); ++j) rem[k + j] -= t * r1[j];
        }
        trim(rem);
        Poly s2 = s0; // s2 = s0 - q*s1
        Poly qs = polyMul(q, s1);
        if (s2.size() < qs.size()) s2.resize(qs.size(), Rational(0));
        for (std::size_t j = 0; j < qs.size(); ++j) s2[j] -= qs[j];
        trim(s2);
        if (rem.empty()) {
            // r1 is the gcd, a nonzero constant since minpoly is irreducible
            if (r1.size() != 1) throw Error("inverse: gcd not constant");
            for (auto& cc : s1) cc /= r1[0];
            return Scalar(ctx_, std::move(s1));
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

bool operator==(const Scalar& a, const Scalar& b) {
    a.requireSameContext(b);
    return a.c_ == b.c_;
}

int Scalar::sign() const {
    if (c_.empty() || isZero()) return 0;
    if (isRational()) return sgn(c_[0]);
    for (int iter = 0; iter < 20000; ++iter) {
        auto [lo, hi] = ctx_->enclosure();
        // interval Horner
        Rational rlo = c_.back(), rhi = c_.back();
        for (std::size_t k = c_.size() - 1; k-- > 0;) {
            Rational p1 = rlo * lo, p2 = rlo * hi, p3 = rhi * lo, p4 = rhi * hi;
            Rational mn = std::min(std::min(p1, p2), std::min(p3, p4));
            Rational mx = std::max(std::max(p1, p2), std::max(p3, p4));
            rlo = mn + c_[k];
            rhi = mx + c_[k];
        }
        if (sgn(rlo) > 0) return 1;
        if (sgn(rhi) < 0) return -1;
        ctx_->refine();
    }
    throw Error("sign: refinement did not terminate");
}

std::string Scalar::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        if (!first) os << " + ";
        os << c_[k].get_str();
        if (k >= 1) os << "*t";
        if (k >= 2) os << "^" << k;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Scalar theta(const FieldPtr& ctx) {
    return Scalar(ctx, std::vector<Rational>{Rational(0), Rational(1)});
}

Scalar cos_pi_over(const FieldPtr& ctx, long m) {
    if (m < 1 || ctx->conductor() % m != 0)
        throw IncompatibleConductor("cos(pi/" + std::to_string(m) + ") not in Q(2cos(pi/" +
                                    std::to_string(ctx->conductor()) + "))");
    Scalar c(ctx, dickson(ctx->conductor() / m));
    return c * Scalar(ctx, Rational(1, 2));
}

} // namespace coxpizza
