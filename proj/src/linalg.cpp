#include "coxpizza/linalg.hpp"

namespace coxpizza {

SVec zeroVec(const FieldPtr& ctx, std::size_t n) { return SVec(n, Scalar(ctx, Rational(0))); }

Scalar dotStd(const SVec& x, const SVec& y) {
    Scalar r(x.at(0).context(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) r += x[i] * y[i];
    return r;
}

Scalar dotForm(const SMat& gram, const SVec& x, const SVec& y) {
    Scalar r(x.at(0).context(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].isZero()) continue;
        Scalar row(x[0].context(), Rational(0));
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j].isZero() || gram[i][j].isZero()) continue;
            row += gram[i][j] * y[j];
        }
        r += x[i] * row;
    }
    return r;
}

SVec addVec(SVec x, const SVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] += y[i];
    return x;
}

SVec subVec(SVec x, const SVec& y) {
    for (std::size_t i = 0; i < x.size(); ++i) x[i] -= y[i];
    return x;
}

SVec scaleVec(SVec x, const Scalar& c) {
    for (auto& v : x) v *= c;
    return x;
}

namespace {

// Row echelon reduction; returns pivot columns. Mutates rows in place.
std::vector<int> echelon(SMat& rows, std::size_t ncols) {
    std::vector<int> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
        std::size_t sel = r;
        while (sel < rows.size() && rows[sel][c].isZero()) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][c].inv();
        for (std::size_t j = c; j < ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].isZero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return pivots;
}

} // namespace

SVec solveLinear(SMat a, SVec b) {
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
    auto pivots = echelon(a, n + 1);
    if (pivots.size() != n || (!pivots.empty() && pivots.back() == static_cast<int>(n)))
        throw SingularMatrix("solveLinear: singular system");
    SVec x(n, Scalar(b[0].context(), Rational(0)));
    for (std::size_t i = 0; i < n; ++i) x[pivots[i]] = a[i][n];
    return x;
}

int rankOf(SMat rows) {
    if (rows.empty()) return 0;
    return static_cast<int>(echelon(rows, rows[0].size()).size());
}

std::vector<SVec> nullspace(SMat rows, std::size_t ncols, const FieldPtr& ctx) {
    auto pivots = echelon(rows, ncols);
    std::vector<bool> isPivot(ncols, false);
    for (int c : pivots) isPivot[c] = true;
    std::vector<SVec> basis;
    for (std::size_t freeCol = 0; freeCol < ncols; ++freeCol) {
        if (isPivot[freeCol]) continue;
        SVec v = zeroVec(ctx, ncols);
        v[freeCol] = Scalar(ctx, Rational(1));
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -rows[i][freeCol];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<SVec> coordsInBasis(const std::vector<SVec>& basis, const SVec& v,
                                  const FieldPtr& ctx) {
    std::size_t dim = v.size(), k = basis.size();
    SMat rows(dim, zeroVec(ctx, k + 1));
    for (std::size_t d = 0; d < dim; ++d) {
        for (std::size_t j = 0; j < k; ++j) rows[d][j] = basis[j][d];
        rows[d][k] = v[d];
    }
    std::size_t r = 0;
    std::vector<int> pivots;
    for (std::size_t c = 0; c < k && r < dim; ++c) {
        std::size_t sel = r;
        while (sel < dim && rows[sel][c].isZero()) ++sel;
        if (sel == dim) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][c].inv();
        for (std::size_t j = c; j <= k; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == r || rows[i][c].isZero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j <= k; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < dim; ++i)
        if (!rows[i][k].isZero()) return std::nullopt;
    SVec coords = zeroVec(ctx, k);
    for (std::size_t i = 0; i < pivots.size(); ++i) coords[pivots[i]] = rows[i][k];
    return coords;
}

Scalar evalPoly(const std::vector<Rational>& p, const Scalar& x) {
    Scalar r(x.context(), Rational(0));
    for (std::size_t k = p.size(); k-- > 0;) r = r * x + Scalar(x.context(), p[k]);
    return r;
}

int detSign(SMat a) {
    std::size_t n = a.size();
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a[sel][c].isZero()) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            std::swap(a[sel], a[c]);
            sign = -sign;
        }
        sign *= a[c][c].sign();
        Scalar inv = a[c][c].inv();
        for (std::size_t i = c + 1; i < n; ++i) {
            if (a[i][c].isZero()) continue;
            Scalar f = a[i][c] * inv;
            for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return sign;
}

} // namespace coxpizza
