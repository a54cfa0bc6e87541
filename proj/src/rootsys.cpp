#include "coxpizza/rootsys.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace coxpizza {

namespace {

std::string packPerm(const std::vector<uint16_t>& p) {
    std::string s(p.size() * 2, '\0');
    for (std::size_t i = 0; i < p.size(); ++i) {
        s[2 * i] = static_cast<char>(p[i] & 0xff);
        s[2 * i + 1] = static_cast<char>(p[i] >> 8);
    }
    return s;
}

SVec rationalVec(const FieldPtr& ctx, const std::vector<Rational>& q) {
    SVec v;
    v.reserve(q.size());
    for (const auto& c : q) v.emplace_back(ctx, c);
    return v;
}

} // namespace

int Group::indexOf(const std::vector<uint16_t>& p) const {
    auto it = index.find(packPerm(p));
    return it == index.end() ? -1 : it->second;
}

int Group::multiply(int w1, int w2) const {
    std::vector<uint16_t> p(perm[w1].size());
    for (std::size_t r = 0; r < p.size(); ++r) p[r] = perm[w1][perm[w2][r]];
    int idx = indexOf(p);
    if (idx < 0) throw Error("group multiply: element not found");
    return idx;
}

int Group::inverse(int w) const {
    std::vector<uint16_t> p(perm[w].size());
    for (std::size_t r = 0; r < p.size(); ++r) p[perm[w][r]] = static_cast<uint16_t>(r);
    int idx = indexOf(p);
    if (idx < 0) throw Error("group inverse: element not found");
    return idx;
}

std::vector<std::string> RootSystem::key(const SVec& v) const {
    std::vector<std::string> k;
    k.reserve(v.size());
    for (const auto& s : v) {
        std::string e;
        for (const auto& c : s.coeffs()) e += c.get_str() + ",";
        k.push_back(std::move(e));
    }
    return k;
}

void RootSystem::indexRoots(std::vector<SVec> roots) {
    std::vector<std::pair<std::vector<std::string>, SVec>> pos;
    for (auto& v : roots) {
        bool nonneg = true, nonpos = true;
        for (const auto& c : v) {
            int s = c.sign();
            if (s < 0) nonneg = false;
            if (s > 0) nonpos = false;
        }
        if (nonneg == nonpos) throw Error("root with mixed-sign simple coordinates");
        if (nonneg) pos.emplace_back(key(v), std::move(v));
    }
    std::sort(pos.begin(), pos.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    roots_.clear();
    for (auto& [k, v] : pos) roots_.push_back(std::move(v));
    std::size_t p = pos.size();
    for (std::size_t i = 0; i < p; ++i) {
        SVec neg = roots_[i];
        for (auto& c : neg) c = -c;
        roots_.push_back(std::move(neg));
    }
    byCoords_.clear();
    for (int i = 0; i < static_cast<int>(roots_.size()); ++i) byCoords_[key(roots_[i])] = i;
    norm2_.clear();
    for (const auto& v : roots_) {
        Scalar n = inner(v, v);
        if (!n.isRational()) {
            norm2_.push_back(Rational(1)); // irrational norm: only the canonical unit case
            if (!(n == Scalar(ctx_, Rational(1)))) throw Error("unexpected root norm");
        } else {
            norm2_.push_back(n.rationalPart());
        }
    }
}

int RootSystem::findRoot(const SVec& coords) const {
    auto it = byCoords_.find(key(coords));
    return it == byCoords_.end() ? -1 : it->second;
}

int RootSystem::findRootRay(const SVec& v) const {
    for (int i = 0; i < rootCount(); ++i) {
        const SVec& r = roots_[i];
        int j = 0;
        while (j < dim_ && r[j].isZero()) ++j;
        if (j == dim_) continue;
        if (v[j].isZero()) continue;
        Scalar c = v[j] / r[j];
        if (c.sign() <= 0) continue;
        bool ok = true;
        for (int d = 0; d < dim_ && ok; ++d) ok = (v[d] == c * r[d]);
        if (ok) return i;
    }
    return -1;
}

SVec RootSystem::reflect(int r, SVec v) const {
    const SVec& alpha = roots_[r];
    Scalar c = inner(alpha, v);
    if (!normalized_) c /= Scalar(ctx_, norm2_[r]);
    c += c;
    for (int d = 0; d < dim_; ++d) v[d] -= c * alpha[d];
    return v;
}

std::vector<uint16_t> RootSystem::reflectionPerm(int r) const {
    std::vector<uint16_t> p(rootCount());
    for (int i = 0; i < rootCount(); ++i) {
        SVec img = reflect(r, roots_[i]);
        int idx = findRoot(img);
        if (idx < 0) {
            idx = findRootRay(img); // non-normalized systems: match up to positive scale
            if (idx < 0) throw Error("reflection does not preserve the root set");
        }
        p[i] = static_cast<uint16_t>(idx);
    }
    return p;
}

bool RootSystem::groupEnumerable(long bound) const { return sys_.groupOrder() <= bound; }

const Group& RootSystem::group(long bound) const {
    if (group_) return *group_;
    if (!groupEnumerable(bound))
        throw GroupTooLarge("group order " + std::to_string(sys_.groupOrder()) +
                            " exceeds bound " + std::to_string(bound));
    Group g;
    int nroots = rootCount();
    std::vector<std::vector<uint16_t>> gens;
    for (int s = 0; s < rank(); ++s) gens.push_back(reflectionPerm(simple_[s]));
    std::vector<uint16_t> id(nroots);
    for (int i = 0; i < nroots; ++i) id[i] = static_cast<uint16_t>(i);
    g.perm.push_back(id);
    g.word.push_back({});
    g.index[packPerm(id)] = 0;
    for (std::size_t head = 0; head < g.perm.size(); ++head) {
        for (int s = 0; s < rank(); ++s) {
            std::vector<uint16_t> next(nroots);
            for (int r = 0; r < nroots; ++r) next[r] = g.perm[head][gens[s][r]];
            std::string k = packPerm(next);
            if (g.index.count(k)) continue;
            g.index[k] = static_cast<int>(g.perm.size());
            auto w = g.word[head];
            w.push_back(static_cast<uint8_t>(s));
            g.perm.push_back(std::move(next));
            g.word.push_back(std::move(w));
        }
    }
    group_ = std::move(g);
    return *group_;
}

SVec RootSystem::applyElement(int w, SVec v) const {
    const auto& word = group().word[w];
    for (std::size_t i = word.size(); i-- > 0;) v = reflect(simple_[word[i]], std::move(v));
    return v;
}

int RootSystem::reflectionElement(int r) const {
    const Group& g = group();
    if (reflElem_.empty()) reflElem_.assign(rootCount(), -2);
    if (reflElem_[r] == -2) {
        reflElem_[r] = g.indexOf(reflectionPerm(r));
        if (reflElem_[r] < 0) throw Error("reflection not in enumerated group");
    }
    return reflElem_[r];
}

RootSystem RootSystem::canonical(const CoxeterSystem& sys) {
    RootSystem rs;
    rs.sys_ = sys;
    rs.ctx_ = field_context(sys.conductor());
    rs.dim_ = sys.rank();
    rs.normalized_ = true;
    int n = sys.rank();
    rs.gram_.assign(n, zeroVec(rs.ctx_, n));
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) rs.gram_[s][t] = -cos_pi_over(rs.ctx_, sys.matrix[s][t]);

    // orbit of the simple basis vectors under the simple reflections
    std::map<std::vector<std::string>, int> seen;
    std::vector<SVec> all;
    std::deque<SVec> queue;
    for (int s = 0; s < n; ++s) {
        SVec e = zeroVec(rs.ctx_, n);
        e[s] = Scalar(rs.ctx_, Rational(1));
        queue.push_back(e);
    }
    auto tmpKey = [&rs](const SVec& v) { return rs.key(v); };
    while (!queue.empty()) {
        SVec v = std::move(queue.front());
        queue.pop_front();
        auto k = tmpKey(v);
        if (seen.count(k)) continue;
        seen[k] = 1;
        for (int s = 0; s < n; ++s) {
            SVec w = v;
            Scalar c(rs.ctx_, Rational(0));
            for (int j = 0; j < n; ++j) {
                if (v[j].isZero()) continue;
                c += rs.gram_[s][j] * v[j];
            }
            c += c;
            w[s] -= c;
            if (!seen.count(tmpKey(w))) queue.push_back(std::move(w));
        }
        all.push_back(std::move(v));
    }
    rs.indexRoots(std::move(all));
    rs.simple_.resize(n);
    for (int s = 0; s < n; ++s) {
        SVec e = zeroVec(rs.ctx_, n);
        e[s] = Scalar(rs.ctx_, Rational(1));
        rs.simple_[s] = rs.findRoot(e);
        if (rs.simple_[s] < 0) throw Error("simple root missing from orbit");
    }
    return rs;
}

RootSystem RootSystem::bourbaki(const std::string& typeTag) {
    char fam = typeTag.at(0);
    int n = std::stoi(typeTag.substr(1));
    if (std::string("ABCDEFG").find(fam) == std::string::npos)
        throw UnsupportedType("bourbaki coordinates only for crystallographic types");
    if ((fam == 'E' && (n < 6 || n > 8)) || (fam == 'F' && n != 4) || (fam == 'G' && n != 2))
        throw RankError("invalid rank for type " + typeTag);

    RootSystem rs;
    rs.ctx_ = field_context(2);
    rs.normalized_ = false;
    auto R = [](long num, long den = 1) { return Rational(num, den); };

    std::vector<std::vector<Rational>> roots, simples;
    int dim = 0;
    auto unitDiff = [&](int i, int j) { // e_i - e_j, 1-based
        std::vector<Rational> v(dim, R(0));
        v[i - 1] = 1;
        v[j - 1] = -1;
        return v;
    };

    if (fam == 'A') {
        dim = n + 1;
        for (int i = 1; i <= n + 1; ++i)
            for (int j = 1; j <= n + 1; ++j)
                if (i != j) roots.push_back(unitDiff(i, j));
        for (int i = 1; i <= n; ++i) simples.push_back(unitDiff(i, i + 1));
    } else if (fam == 'B' || fam == 'C' || fam == 'D') {
        dim = n;
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        std::vector<Rational> v(dim, R(0));
                        v[i - 1] = si;
                        v[j - 1] = sj;
                        roots.push_back(v);
                    }
        if (fam != 'D')
            for (int i = 1; i <= n; ++i)
                for (int si = -1; si <= 1; si += 2) {
                    std::vector<Rational> v(dim, R(0));
                    v[i - 1] = fam == 'B' ? R(si) : R(2 * si);
                    roots.push_back(v);
                }
        for (int i = 1; i < n; ++i) simples.push_back(unitDiff(i, i + 1));
        std::vector<Rational> last(dim, R(0));
        if (fam == 'B') last[n - 1] = 1;
        if (fam == 'C') last[n - 1] = 2;
        if (fam == 'D') { last[n - 2] = 1; last[n - 1] = 1; }
        simples.push_back(last);
    } else if (fam == 'F') {
        dim = 4;
        for (int i = 1; i <= 4; ++i)
            for (int si = -1; si <= 1; si += 2) {
                std::vector<Rational> v(dim, R(0));
                v[i - 1] = si;
                roots.push_back(v);
            }
        for (int i = 1; i <= 4; ++i)
            for (int j = i + 1; j <= 4; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        std::vector<Rational> v(dim, R(0));
                        v[i - 1] = si;
                        v[j - 1] = sj;
                        roots.push_back(v);
                    }
        for (int mask = 0; mask < 16; ++mask) {
            std::vector<Rational> v(dim);
            for (int i = 0; i < 4; ++i) v[i] = R((mask >> i) & 1 ? -1 : 1, 2);
            roots.push_back(v);
        }
        simples = {unitDiff(2, 3), unitDiff(3, 4),
                   {R(0), R(0), R(0), R(1)},
                   {R(1, 2), R(-1, 2), R(-1, 2), R(-1, 2)}};
    } else if (fam == 'G') {
        dim = 3;
        int idx[3][2] = {{1, 2}, {1, 3}, {2, 3}};
        for (auto& ij : idx)
            for (int s = -1; s <= 1; s += 2) {
                auto v = unitDiff(ij[0], ij[1]);
                for (auto& c : v) c *= s;
                roots.push_back(v);
            }
        for (int i = 1; i <= 3; ++i)
            for (int s = -1; s <= 1; s += 2) {
                std::vector<Rational> v(dim, R(-1 * s));
                v[i - 1] = R(2 * s);
                roots.push_back(v);
            }
        simples = {unitDiff(1, 2), {R(-2), R(1), R(1)}};
    } else { // E6, E7, E8
        dim = 8;
        std::vector<std::vector<Rational>> e8;
        for (int i = 1; i <= 8; ++i)
            for (int j = i + 1; j <= 8; ++j)
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2) {
                        std::vector<Rational> v(dim, R(0));
                        v[i - 1] = si;
                        v[j - 1] = sj;
                        e8.push_back(v);
                    }
        for (int mask = 0; mask < 256; ++mask) {
            if (__builtin_popcount(mask) % 2) continue;
            std::vector<Rational> v(dim);
            for (int i = 0; i < 8; ++i) v[i] = R((mask >> i) & 1 ? -1 : 1, 2);
            e8.push_back(v);
        }
        std::vector<Rational> a1(dim, R(-1, 2));
        a1[0] = R(1, 2);
        a1[7] = R(1, 2);
        std::vector<Rational> a2(dim, R(0));
        a2[0] = 1;
        a2[1] = 1;
        std::vector<std::vector<Rational>> alphas{a1, a2};
        alphas.push_back(unitDiff(2, 1));
        for (int k = 4; k <= 8; ++k) alphas.push_back(unitDiff(k - 1, k - 2));
        // my vertex order: path a1,a3,a4,...,then tip a2
        std::vector<int> order;
        for (int k = 0; k < n - 1; ++k) order.push_back(k == 0 ? 0 : k + 1);
        order.push_back(1);
        for (int k : order) simples.push_back(alphas[k]);
        if (n == 8) {
            roots = e8;
        } else {
            SMat basis;
            for (auto& s : simples) basis.push_back(rationalVec(rs.ctx_, s));
            for (auto& r : e8) {
                SVec v = rationalVec(rs.ctx_, r);
                if (coordsInBasis(basis, v, rs.ctx_)) roots.push_back(r);
            }
        }
    }

    rs.dim_ = dim;
    rs.gram_.assign(dim, zeroVec(rs.ctx_, dim));
    for (int i = 0; i < dim; ++i) rs.gram_[i][i] = Scalar(rs.ctx_, R(1));

    std::vector<SVec> basis;
    for (auto& s : simples) basis.push_back(rationalVec(rs.ctx_, s));

    // positivity via simple-basis coordinates; store roots so that the
    // all-nonnegative convention of indexRoots applies to those coordinates.
    std::vector<SVec> rootVecs;
    std::vector<SVec> rootCoordVecs;
    for (auto& r : roots) {
        SVec v = rationalVec(rs.ctx_, r);
        auto c = coordsInBasis(basis, v, rs.ctx_);
        if (!c) throw Error("root outside simple span");
        rootVecs.push_back(std::move(v));
        rootCoordVecs.push_back(std::move(*c));
    }
    // order: positives (sorted by ambient key) then matching negatives
    std::vector<std::pair<std::vector<std::string>, int>> pos;
    for (int i = 0; i < static_cast<int>(rootVecs.size()); ++i) {
        bool nonneg = true;
        for (const auto& c : rootCoordVecs[i])
            if (c.sign() < 0) { nonneg = false; break; }
        if (nonneg) pos.emplace_back(rs.key(rootVecs[i]), i);
    }
    std::sort(pos.begin(), pos.end());
    std::vector<SVec> ordered;
    for (auto& [k, i] : pos) ordered.push_back(rootVecs[i]);
    for (auto& [k, i] : pos) {
        SVec neg = rootVecs[i];
        for (auto& c : neg) c = -c;
        ordered.push_back(std::move(neg));
    }
    rs.roots_ = std::move(ordered);
    rs.byCoords_.clear();
    for (int i = 0; i < rs.rootCount(); ++i) rs.byCoords_[rs.key(rs.roots_[i])] = i;
    for (const auto& v : rs.roots_) rs.norm2_.push_back(rs.inner(v, v).rationalPart());

    rs.simple_.clear();
    for (const auto& s : basis) {
        int idx = rs.findRoot(s);
        if (idx < 0) throw Error("simple root not in root list");
        rs.simple_.push_back(idx);
    }
    std::string canonicalTag = typeTag;
    if (fam == 'C') canonicalTag[0] = 'B';
    if (canonicalTag == "B1" || canonicalTag == "C1") canonicalTag = "A1";
    rs.sys_ = parse_type(canonicalTag);
    return rs;
}

std::vector<int> RootSystem::positivesInSpan(const std::vector<int>& I) const {
    if (!normalized_) throw Error("positivesInSpan requires the canonical system");
    std::vector<bool> inI(dim_, false);
    for (int s : I) inI[s] = true;
    std::vector<int> out;
    for (int p = 0; p < positiveCount(); ++p) {
        bool ok = true;
        for (int d = 0; d < dim_ && ok; ++d)
            if (!inI[d] && !roots_[p][d].isZero()) ok = false;
        if (ok) out.push_back(p);
    }
    return out;
}

RootSystem RootSystem::parabolic(const std::vector<int>& I) const {
    if (!normalized_) throw Error("parabolic requires the canonical system");
    RootSystem sub;
    sub.sys_ = sys_.restrict(I);
    sub.ctx_ = ctx_;
    sub.dim_ = static_cast<int>(I.size());
    sub.normalized_ = true;
    sub.gram_.assign(I.size(), zeroVec(ctx_, I.size()));
    for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = 0; b < I.size(); ++b) sub.gram_[a][b] = gram_[I[a]][I[b]];

    auto positives = positivesInSpan(I);
    std::vector<std::pair<std::vector<std::string>, std::pair<SVec, int>>> pos;
    for (int p : positives) {
        SVec local = zeroVec(ctx_, I.size());
        for (std::size_t a = 0; a < I.size(); ++a) local[a] = roots_[p][I[a]];
        pos.emplace_back(sub.key(local), std::make_pair(std::move(local), p));
    }
    std::sort(pos.begin(), pos.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [k, lv] : pos) {
        sub.roots_.push_back(lv.first);
        sub.parentRoot_.push_back(lv.second);
    }
    std::size_t np = sub.roots_.size();
    for (std::size_t i = 0; i < np; ++i) {
        SVec neg = sub.roots_[i];
        for (auto& c : neg) c = -c;
        sub.roots_.push_back(std::move(neg));
        sub.parentRoot_.push_back(negate(sub.parentRoot_[i]));
    }
    for (int i = 0; i < sub.rootCount(); ++i) sub.byCoords_[sub.key(sub.roots_[i])] = i;
    for (const auto& v : sub.roots_) {
        Scalar nn = sub.inner(v, v);
        sub.norm2_.push_back(nn.isRational() ? nn.rationalPart() : Rational(1));
    }
    sub.simple_.resize(I.size());
    for (std::size_t a = 0; a < I.size(); ++a) {
        SVec e = zeroVec(ctx_, I.size());
        e[a] = Scalar(ctx_, Rational(1));
        sub.simple_[a] = sub.findRoot(e);
        if (sub.simple_[a] < 0) throw Error("parabolic simple root missing");
    }
    return sub;
}

} // namespace coxpizza
