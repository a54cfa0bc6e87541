#include "coxpizza/complex.hpp"

#include <algorithm>

namespace coxpizza {

namespace {

SVec formRow(const SMat& gram, const SVec& v, const FieldPtr& ctx) {
    std::size_t n = v.size();
    SVec row = zeroVec(ctx, n);
    for (std::size_t d = 0; d < n; ++d)
        for (std::size_t j = 0; j < n; ++j) {
            if (gram[d][j].isZero() || v[j].isZero()) continue;
            row[d] += gram[d][j] * v[j];
        }
    return row;
}

// Any solution of rows * x = rhs (free variables set to zero).
SVec particularSolution(SMat rows, SVec rhs, const FieldPtr& ctx, std::size_t ncols) {
    std::size_t k = rows.size();
    for (std::size_t i = 0; i < k; ++i) rows[i].push_back(rhs[i]);
    std::size_t r = 0;
    std::vector<int> pivots;
    for (std::size_t c = 0; c < ncols && r < k; ++c) {
        std::size_t sel = r;
        while (sel < k && rows[sel][c].isZero()) ++sel;
        if (sel == k) continue;
        std::swap(rows[r], rows[sel]);
        Scalar inv = rows[r][c].inv();
        for (std::size_t j = c; j <= ncols; ++j) rows[r][j] *= inv;
        for (std::size_t i = 0; i < k; ++i) {
            if (i == r || rows[i][c].isZero()) continue;
            Scalar f = rows[i][c];
            for (std::size_t j = c; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    for (std::size_t i = r; i < k; ++i)
        if (!rows[i][ncols].isZero()) throw SingularMatrix("inconsistent linear system");
    SVec x = zeroVec(ctx, ncols);
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rows[i][ncols];
    return x;
}

} // namespace

int FacePoset::positionOfRoot(int rootIdx) const {
    return rootIdx < static_cast<int>(posOf_.size()) ? posOf_[rootIdx] : -1;
}

int FacePoset::faceBySign(const SignVec& s) const {
    auto it = bySign_.find(s);
    return it == bySign_.end() ? -1 : it->second;
}

int FacePoset::compose(int c, int d) const {
    int idx = faceBySign(faces_[c].sign.composedWith(faces_[d].sign));
    if (idx < 0) throw Error("composition left the face poset");
    return idx;
}

int FacePoset::fundamentalChamber() const {
    int e = hyperplaneCount();
    SignVec allPlus;
    allPlus.plus = e == 64 ? ~uint64_t(0) : (uint64_t(1) << e) - 1;
    int idx = faceBySign(allPlus);
    if (idx < 0) throw Error("no chamber on the positive side of every hyperplane");
    return idx;
}

SignVec FacePoset::signOfPoint(const SVec& x) const {
    SignVec s;
    for (int p = 0; p < hyperplaneCount(); ++p)
        s.set(p, rs_->inner(rs_->root(hyper_[p]), x).sign());
    return s;
}

int FacePoset::faceOfPoint(const SVec& x) const {
    int idx = faceBySign(signOfPoint(x));
    if (idx < 0) throw Error("point's sign vector is not a face (inconsistent poset)");
    return idx;
}

std::vector<int> FacePoset::starFaces(int c) const {
    std::vector<int> out;
    for (int f = 0; f < faceCount(); ++f)
        if (leq(c, f)) out.push_back(f);
    return out;
}

std::vector<int> FacePoset::starHyperplanes(int c) const {
    std::vector<int> out;
    for (int p = 0; p < hyperplaneCount(); ++p)
        if (faces_[c].sign.at(p) == 0) out.push_back(hyper_[p]);
    return out;
}

SignVec FacePoset::restrictSign(int face, const std::vector<int>& rootSubset) const {
    SignVec out;
    for (std::size_t p = 0; p < rootSubset.size(); ++p) {
        int pos = positionOfRoot(rootSubset[p]);
        if (pos < 0) throw Error("restrictSign: hyperplane not in the arrangement");
        out.set(static_cast<int>(p), faces_[face].sign.at(pos));
    }
    return out;
}

int FacePoset::fromParent(const FacePoset& parent, int parentFace) const {
    const SignVec& ps = parent.face(parentFace).sign;
    SignVec s;
    for (int p = 0; p < hyperplaneCount(); ++p) {
        int q = parent.positionOfRoot(hyper_[p]);
        if (q < 0) throw Error("fromParent: hyperplane missing in the finer poset");
        s.set(p, ps.at(q));
    }
    int idx = faceBySign(s);
    if (idx < 0) throw Error("fromParent: restricted sign vector not found");
    return idx;
}

void FacePoset::finalize() {
    bySign_.clear();
    for (int i = 0; i < faceCount(); ++i) {
        if (!bySign_.emplace(faces_[i].sign, i).second)
            throw Error("duplicate sign vector in face poset");
    }
    chambers_.clear();
    rays_.clear();
    minFace_ = -1;
    for (int i = 0; i < faceCount(); ++i) {
        if (faces_[i].dim == dimV_) chambers_.push_back(i);
        if (faces_[i].dim == v0dim_ + 1) rays_.push_back(i);
        if (faces_[i].sign.support() == 0) minFace_ = i;
        faces_[i].neg = faceBySign(faces_[i].sign.negated());
        if (faces_[i].neg < 0) throw Error("face poset not centrally symmetric");
    }
    if (minFace_ < 0) throw Error("face poset has no minimal face");
    for (auto& f : faces_) {
        f.rays.clear();
        for (int r : rays_)
            if (faces_[r].sign.below(f.sign)) f.rays.push_back(r);
    }
}

FacePoset FacePoset::full(const RootSystem& rs, long groupBound) {
    const Group& g = rs.group(groupBound);
    FacePoset fp;
    fp.rs_ = &rs;
    int pcount = rs.positiveCount();
    if (pcount > 64) throw Error("arrangement too large for packed sign vectors");
    fp.hyper_.resize(pcount);
    for (int p = 0; p < pcount; ++p) fp.hyper_[p] = p;
    fp.posOf_.assign(pcount, 0);
    for (int p = 0; p < pcount; ++p) fp.posOf_[p] = p;
    fp.dimV_ = rs.dim();

    const FieldPtr& ctx = rs.context();
    SMat allRows;
    for (int p = 0; p < pcount; ++p) allRows.push_back(formRow(rs.gram(), rs.root(p), ctx));
    fp.v0basis_ = nullspace(allRows, rs.dim(), ctx);
    fp.v0dim_ = static_cast<int>(fp.v0basis_.size());

    int rank = rs.rank();
    SMat simpleRows;
    for (int s = 0; s < rank; ++s)
        simpleRows.push_back(formRow(rs.gram(), rs.root(rs.simpleRoot(s)), ctx));

    for (uint32_t mask = 0; mask < (uint32_t(1) << rank); ++mask) {
        SVec rhs = zeroVec(ctx, rank);
        for (int s = 0; s < rank; ++s)
            if (!((mask >> s) & 1)) rhs[s] = Scalar(ctx, Rational(1));
        SVec q = particularSolution(simpleRows, rhs, ctx, rs.dim());
        int faceDim = rank - __builtin_popcount(mask) + fp.v0dim_;
        for (int w = 0; w < static_cast<int>(g.size()); ++w) {
            bool minimal = true;
            for (int s = 0; s < rank && minimal; ++s)
                if ((mask >> s) & 1)
                    minimal = rs.isPositive(g.act(w, rs.simpleRoot(s)));
            if (!minimal) continue;
            Face f;
            f.point = rs.applyElement(w, q);
            f.sign = fp.signOfPoint(f.point);
            f.dim = faceDim;
            f.cosetW = w;
            f.cosetI = mask;
            fp.faces_.push_back(std::move(f));
        }
    }
    fp.finalize();
    if (fp.chambers_.size() != g.size()) throw Error("chamber count mismatch with |W|");
    return fp;
}

FacePoset FacePoset::sub(const FacePoset& parent, std::vector<int> rootSubset) {
    FacePoset fp;
    fp.rs_ = parent.rs_;
    fp.hyper_ = std::move(rootSubset);
    if (fp.hyper_.size() > 64) throw Error("arrangement too large for packed sign vectors");
    fp.posOf_.assign(parent.rs_->positiveCount(), -1);
    for (int p = 0; p < fp.hyperplaneCount(); ++p) {
        if (parent.positionOfRoot(fp.hyper_[p]) < 0)
            throw Error("sub: hyperplane not in parent arrangement");
        fp.posOf_[fp.hyper_[p]] = p;
    }
    fp.dimV_ = parent.dimV_;

    const FieldPtr& ctx = parent.rs_->context();
    SMat rows;
    for (int h : fp.hyper_) rows.push_back(formRow(parent.rs_->gram(), parent.rs_->root(h), ctx));
    fp.v0basis_ = nullspace(rows, parent.rs_->dim(), ctx);
    fp.v0dim_ = static_cast<int>(fp.v0basis_.size());

    std::unordered_map<SignVec, int, SignVecHash> classes;
    for (int pf = 0; pf < parent.faceCount(); ++pf) {
        const auto& parentFace = parent.face(pf);
        SignVec s;
        for (int p = 0; p < fp.hyperplaneCount(); ++p)
            s.set(p, parentFace.sign.at(parent.positionOfRoot(fp.hyper_[p])));
        auto [it, inserted] = classes.emplace(s, fp.faceCount());
        if (inserted) {
            Face f;
            f.sign = s;
            f.dim = parentFace.dim;
            f.point = parentFace.point;
            fp.faces_.push_back(std::move(f));
        } else if (parentFace.dim > fp.faces_[it->second].dim) {
            fp.faces_[it->second].dim = parentFace.dim;
            fp.faces_[it->second].point = parentFace.point;
        }
    }
    fp.finalize();
    return fp;
}

} // namespace coxpizza
