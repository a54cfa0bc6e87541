#include "coxpizza/twostruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace coxpizza {

int TwoStructure::rank() const {
    int r = 0;
    for (const auto& c : components) r += c.rank();
    return r;
}

std::string TwoStructure::typeTag() const {
    std::map<std::string, int> counts;
    for (const auto& c : components) ++counts[c.tag()];
    std::string out;
    for (const auto& [tag, n] : counts) {
        if (!out.empty()) out += "x";
        out += tag;
        if (n > 1) out += "^" + std::to_string(n);
    }
    return out.empty() ? "(empty)" : out;
}

std::optional<std::vector<TwoStructure::Component>> decomposeComponents(
    const RootSystem& rs, const std::vector<int>& lines, std::string* reason) {
    auto fail = [&](const std::string& r) {
        if (reason) *reason = r;
        return std::nullopt;
    };
    std::size_t n = lines.size();
    // orthogonality graph components
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<std::size_t> stack{i};
        comp[i] = ncomp;
        while (!stack.empty()) {
            std::size_t a = stack.back();
            stack.pop_back();
            for (std::size_t b = 0; b < n; ++b)
                if (comp[b] < 0 && !rs.innerRoots(lines[a], lines[b]).isZero()) {
                    comp[b] = ncomp;
                    stack.push_back(b);
                }
        }
        ++ncomp;
    }
    std::vector<TwoStructure::Component> comps(ncomp);
    for (std::size_t i = 0; i < n; ++i) comps[comp[i]].lines.push_back(lines[i]);
    for (auto& c : comps) {
        std::sort(c.lines.begin(), c.lines.end());
        if (c.lines.size() == 1) {
            c.m = 0;
            continue;
        }
        long m = static_cast<long>(c.lines.size());
        if (m < 4 || (m & (m - 1)) != 0)
            return fail("component of " + std::to_string(m) + " lines is not I2(2^k)");
        // rank-2 span
        SMat vecs;
        for (int l : c.lines) vecs.push_back(rs.root(l));
        if (rankOf(vecs) != 2) return fail("rank-2 component does not span a plane");
        // closure under the component's own reflections
        std::set<int> lineSet(c.lines.begin(), c.lines.end());
        for (int a : c.lines)
            for (int b : c.lines) {
                int img = rs.findRoot(rs.reflect(a, rs.root(b)));
                if (img < 0 || !lineSet.count(rs.positiveIndex(img)))
                    return fail("component not closed under its reflections");
            }
        c.m = m;
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.lines[0] < b.lines[0]; });
    return comps;
}

std::vector<int> actOnLines(const RootSystem& rs, int w, const std::vector<int>& lines) {
    const Group& g = rs.group();
    std::vector<int> out;
    out.reserve(lines.size());
    for (int l : lines) out.push_back(rs.positiveIndex(g.act(w, l)));
    std::sort(out.begin(), out.end());
    return out;
}

TwoStructureCheck is_two_structure(const RootSystem& rs, const std::vector<int>& lines,
                                   long groupBound) {
    TwoStructureCheck res;
    std::string reason;
    auto comps = decomposeComponents(rs, lines, &reason);
    if (!comps) {
        res.reason = reason;
        return res;
    }
    const Group& g = rs.group(groupBound);
    // phi+ as a signed root set equals the set of positive indices
    std::vector<int> phiPlus = lines;
    std::sort(phiPlus.begin(), phiPlus.end());
    std::vector<int> img(phiPlus.size());
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
        bool same = true;
        for (std::size_t i = 0; i < phiPlus.size() && same; ++i) {
            img[i] = g.act(w, phiPlus[i]);
            if (!rs.isPositive(img[i])) same = false;
        }
        if (!same) continue;
        std::sort(img.begin(), img.end());
        if (img != phiPlus) continue;
        if (g.det(w) != 1) {
            res.reason = "setwise stabilizer contains a determinant -1 element";
            res.witnessElement = w;
            return res;
        }
    }
    res.ok = true;
    return res;
}

namespace {

Scalar sqrtOfRatio(const FieldPtr& ctx, const Rational& r) {
    auto c = [&](long num, long den = 1) { return Scalar(ctx, Rational(num, den)); };
    if (r == 1) return c(1);
    if (r == 4) return c(2);
    if (r == Rational(1, 4)) return c(1, 2);
    if (r == 2) return cos_pi_over(ctx, 4) * c(2); // sqrt(2)
    if (r == Rational(1, 2)) return cos_pi_over(ctx, 4);
    if (r == 3) return cos_pi_over(ctx, 6) * c(2); // sqrt(3)
    if (r == Rational(1, 3)) return cos_pi_over(ctx, 6) * c(2, 3);
    throw Error("unsupported length ratio in seed transport");
}

// Bourbaki-coordinate representatives of the seed lines, per type.
std::vector<std::vector<Rational>> bourbakiSeedLines(char family, int rank, int dim) {
    std::vector<std::vector<Rational>> out;
    auto vec = [&](std::initializer_list<std::pair<int, Rational>> entries) {
        std::vector<Rational> v(dim, Rational(0));
        for (auto& [i, val] : entries) v[i - 1] = val;
        out.push_back(v);
    };
    auto pairBlock = [&](int i) { // e_i -+ e_{i+1}
        vec({{i, 1}, {i + 1, -1}});
        vec({{i, 1}, {i + 1, 1}});
    };
    switch (family) {
        case 'A':
            for (int i = 1; i + 1 <= rank + 1; i += 2) vec({{i, 1}, {i + 1, -1}});
            break;
        case 'B':
        case 'C':
            for (int i = 1; i + 1 <= rank; i += 2) {
                vec({{i, 1}});
                vec({{i + 1, 1}});
                pairBlock(i);
            }
            if (rank % 2) vec({{rank, 1}});
            break;
        case 'D':
            for (int i = 1; i + 1 <= rank; i += 2) pairBlock(i);
            break;
        case 'F':
            vec({{1, 1}});
            vec({{2, 1}});
            pairBlock(1);
            vec({{3, 1}});
            vec({{4, 1}});
            pairBlock(3);
            break;
        case 'E':
            pairBlock(1);
            pairBlock(3);
            if (rank >= 7) pairBlock(5);
            if (rank == 7) vec({{7, 1}, {8, -1}});
            if (rank == 8) pairBlock(7);
            break;
        default:
            throw Error("no tabulated seed for this family");
    }
    return out;
}

// Transport one bourbaki root into the canonical system of the same type:
// beta = sum c_s beta_s maps to sum c_s (|beta_s|/|beta|) e_s.
int transportRoot(const RootSystem& bourbaki, const RootSystem& canonical,
                  const SVec& beta) {
    std::vector<SVec> basis;
    for (int s = 0; s < bourbaki.rank(); ++s) basis.push_back(bourbaki.root(bourbaki.simpleRoot(s)));
    auto coords = coordsInBasis(basis, beta, bourbaki.context());
    if (!coords) throw Error("seed root outside simple span");
    Rational beta2 = bourbaki.inner(beta, beta).rationalPart();
    const FieldPtr& ctx = canonical.context();
    SVec v = zeroVec(ctx, canonical.rank());
    for (int s = 0; s < bourbaki.rank(); ++s) {
        if ((*coords)[s].isZero()) continue;
        Rational ratio = bourbaki.normSquared(bourbaki.simpleRoot(s)) / beta2;
        v[s] = Scalar(ctx, (*coords)[s].rationalPart()) * sqrtOfRatio(ctx, ratio);
    }
    int idx = canonical.findRoot(v);
    if (idx < 0) throw Error("transported seed root not found in canonical system");
    return idx;
}

// Seed lines for one irreducible factor, as positive indices of the
// factor's own root system view.
std::vector<int> factorSeedLines(const RootSystem& view, const CoxeterFactor& f) {
    std::vector<int> lines;
    if (f.rank == 1) return {view.positiveIndex(view.simpleRoot(0))};
    char fam = f.family;
    long m = f.m;
    if (fam == 'G') { fam = 'I'; m = 6; }
    if (fam == 'B' && f.rank == 2) { fam = 'I'; m = 4; }
    if (fam == 'A' && f.rank == 2) { fam = 'I'; m = 3; }

    if (fam == 'I') {
        // the I2(2^r) sub-system spanned by every (m/2^r)-th line
        long p2 = 1;
        while (m % (2 * p2) == 0) p2 *= 2;
        int u0 = 0; // any positive root
        const FieldPtr& ctx = view.context();
        std::vector<Scalar> allowed; // cos^2(k pi / p2)
        for (long k = 0; k <= p2 / 2; ++k) {
            Scalar c = evalPoly(dickson(k), cos_pi_over(ctx, p2) * Scalar(ctx, Rational(2)));
            c = c * Scalar(ctx, Rational(1, 2));
            allowed.push_back(c * c);
        }
        for (int l = 0; l < view.positiveCount(); ++l) {
            Scalar ip = view.innerRoots(u0, l);
            Scalar sq = ip * ip;
            for (const auto& a : allowed)
                if (sq == a) {
                    lines.push_back(l);
                    break;
                }
        }
        if (static_cast<long>(lines.size()) != p2)
            throw Error("dihedral seed selection failed");
        return lines;
    }
    if (fam == 'H') {
        // maximal pairwise-orthogonal sets have full rank; take the first
        std::vector<int> chosen;
        std::vector<int> cand(view.positiveCount());
        for (int i = 0; i < view.positiveCount(); ++i) cand[i] = i;
        std::function<bool(std::vector<int>, std::vector<int>&)> extend =
            [&](std::vector<int> pool, std::vector<int>& acc) -> bool {
            if (static_cast<int>(acc.size()) == f.rank) return true;
            for (std::size_t i = 0; i < pool.size(); ++i) {
                acc.push_back(pool[i]);
                std::vector<int> next;
                for (std::size_t j = i + 1; j < pool.size(); ++j)
                    if (view.innerRoots(pool[i], pool[j]).isZero()) next.push_back(pool[j]);
                if (extend(next, acc)) return true;
                acc.pop_back();
            }
            return false;
        };
        if (!extend(cand, chosen)) throw Error("no orthogonal frame found in type H");
        return chosen;
    }
    // crystallographic families: transport the tabulated representative
    std::string tag;
    tag += fam;
    tag += std::to_string(f.rank);
    RootSystem brs = RootSystem::bourbaki(tag);
    std::vector<int> out;
    for (const auto& q : bourbakiSeedLines(fam, f.rank, brs.dim())) {
        SVec beta;
        for (const auto& c : q) beta.emplace_back(brs.context(), c);
        out.push_back(view.positiveIndex(transportRoot(brs, view, beta)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

TwoStructure seed_two_structure(const RootSystem& rs) {
    std::vector<int> lines;
    for (const auto& f : rs.system().factors) {
        RootSystem view = rs.parabolic(f.vertices);
        for (int l : factorSeedLines(view, f)) {
            int parent = view.parentRoots()[l];
            lines.push_back(rs.positiveIndex(parent));
        }
    }
    std::sort(lines.begin(), lines.end());
    TwoStructure ts;
    ts.lines = lines;
    std::string reason;
    auto comps = decomposeComponents(rs, lines, &reason);
    if (!comps) throw Error("seed is not a valid 2-structure candidate: " + reason);
    ts.components = *comps;
    return ts;
}

std::vector<TwoStructure> enumerate_two_structures(const RootSystem& rs, long groupBound,
                                                   bool validate) {
    if (rs.rank() == 0) {
        TwoStructure empty;
        return {empty};
    }
    TwoStructure seed = seed_two_structure(rs);
    const Group& g = rs.group(groupBound);
    std::set<std::vector<int>> seen;
    std::vector<TwoStructure> out;
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
        auto lines = actOnLines(rs, w, seed.lines);
        if (!seen.insert(lines).second) continue;
        TwoStructure ts;
        ts.lines = lines;
        std::string reason;
        auto comps = decomposeComponents(rs, lines, &reason);
        if (!comps) throw Error("orbit image fails component check: " + reason);
        ts.components = *comps;
        if (validate) {
            auto check = is_two_structure(rs, lines, groupBound);
            if (!check.ok) throw Error("orbit image fails the 2-structure check: " + check.reason);
        }
        out.push_back(std::move(ts));
    }
    return out;
}

std::vector<std::pair<int, int>> validThetaPairs(const RootSystem& rs,
                                                 const TwoStructure::Component& comp) {
    std::vector<std::pair<int, int>> valid;
    for (int a : comp.lines)
        for (int ap : comp.lines) {
            if (a == ap || !rs.innerRoots(a, ap).isZero()) continue;
            bool ok = true;
            for (int l : comp.lines) {
                // the positive rep must be lex-positive, its negative lex-negative
                int s1 = rs.innerRoots(l, a).sign();
                int s2 = rs.innerRoots(l, ap).sign();
                if (!(s1 > 0 || (s1 == 0 && s2 > 0))) {
                    ok = false;
                    break;
                }
            }
            if (ok) valid.emplace_back(a, ap);
        }
    return valid;
}

ThetaSequence theta_sequence(const RootSystem& rs, const TwoStructure& ts,
                             const std::vector<int>& componentOrder,
                             const std::vector<int>& rank2Choices) {
    std::size_t n = ts.components.size();
    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    if (!componentOrder.empty()) {
        if (componentOrder.size() != n) throw InvalidChoice("component order has wrong size");
        order = componentOrder;
    }
    ThetaSequence theta;
    std::size_t rank2Seen = 0;
    for (int ci : order) {
        const auto& comp = ts.components.at(ci);
        if (comp.m == 0) {
            theta.push_back(comp.lines[0]);
            continue;
        }
        auto valid = validThetaPairs(rs, comp);
        if (valid.empty()) throw InvalidChoice("no valid theta pair for rank-2 component");
        std::size_t pick = 0;
        if (!rank2Choices.empty()) {
            if (rank2Seen >= rank2Choices.size())
                throw InvalidChoice("missing rank-2 choice");
            pick = static_cast<std::size_t>(rank2Choices[rank2Seen]);
            if (pick >= valid.size()) throw InvalidChoice("rank-2 choice out of range");
        }
        ++rank2Seen;
        theta.push_back(valid[pick].first);
        theta.push_back(valid[pick].second);
    }
    return theta;
}

int detWTheta(const RootSystem& rs, const ThetaSequence& theta) {
    int negatives = 0, positives = 0;
    for (int r = 0; r < rs.rootCount(); ++r) {
        int lex = 0;
        for (int t : theta) {
            lex = rs.innerRoots(r, t).sign();
            if (lex != 0) break;
        }
        if (lex == 0) throw Error("theta sequence has a root in its orthogonal complement");
        if (lex > 0) {
            ++positives;
            if (!rs.isPositive(r)) ++negatives;
        }
    }
    if (positives != rs.positiveCount()) throw Error("lexicographic system has wrong size");
    return negatives % 2 ? -1 : 1;
}

int epsilon(const RootSystem& rs, const TwoStructure& ts) {
    if (ts.lines.empty() && rs.rank() == 0) return 1;
    int corr = 0;
    for (const auto& f : rs.system().factors) {
        if (f.isA2nOddN()) ++corr;
        if (f.isI2OddCorrection()) ++corr;
    }
    int d = detWTheta(rs, theta_sequence(rs, ts));
    return corr % 2 ? -d : d;
}

std::pair<long, long> stabilizer_counts(const RootSystem& rs, const TwoStructure& ts,
                                        long groupBound) {
    const Group& g = rs.group(groupBound);
    long w1 = 0, wAll = 0;
    std::vector<int> phiPlus = ts.lines;
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
        bool allPositive = true;
        std::vector<int> img;
        img.reserve(phiPlus.size());
        for (int l : phiPlus) {
            int i = g.act(w, l);
            if (!rs.isPositive(i)) {
                allPositive = false;
                break;
            }
            img.push_back(i);
        }
        if (!allPositive) continue;
        ++wAll;
        std::sort(img.begin(), img.end());
        if (img == phiPlus) ++w1;
    }
    return {wAll, w1};
}

Rational epsilon_stabilizer_oracle(const RootSystem& rs, const TwoStructure& ts,
                                   long groupBound) {
    const Group& g = rs.group(groupBound);
    long w1 = 0;
    long detSum = 0;
    std::vector<int> phiPlus = ts.lines;
    for (int w = 0; w < static_cast<int>(g.size()); ++w) {
        bool allPositive = true;
        std::vector<int> img;
        img.reserve(phiPlus.size());
        for (int l : phiPlus) {
            int i = g.act(w, l);
            if (!rs.isPositive(i)) {
                allPositive = false;
                break;
            }
            img.push_back(i);
        }
        if (!allPositive) continue;
        detSum += g.det(w);
        std::sort(img.begin(), img.end());
        if (img == phiPlus) ++w1;
    }
    if (w1 == 0) throw Error("empty stabilizer");
    Rational r(detSum, w1);
    r.canonicalize();
    return r;
}

long orthogonal_set_count(const RootSystem& rs, int k,
                          const std::optional<Rational>& lengthClass) {
    // collect length classes of lines
    std::vector<Rational> classes;
    for (int l = 0; l < rs.positiveCount(); ++l) {
        const Rational& n2 = rs.normSquared(l);
        if (lengthClass && n2 != *lengthClass) continue;
        if (std::find(classes.begin(), classes.end(), n2) == classes.end())
            classes.push_back(n2);
    }
    long total = 0;
    for (const auto& cls : classes) {
        std::vector<int> lines;
        for (int l = 0; l < rs.positiveCount(); ++l)
            if (rs.normSquared(l) == cls) lines.push_back(l);
        int n = static_cast<int>(lines.size());
        std::vector<std::vector<bool>> orth(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                orth[i][j] = orth[j][i] = rs.innerRoots(lines[i], lines[j]).isZero();
        // count k-subsets of pairwise-orthogonal lines
        long count = 0;
        std::vector<int> stack;
        std::function<void(int)> rec = [&](int start) {
            if (static_cast<int>(stack.size()) == k) {
                ++count;
                return;
            }
            for (int i = start; i < n; ++i) {
                bool ok = true;
                for (int s : stack)
                    if (!orth[s][i]) {
                        ok = false;
                        break;
                    }
                if (ok) {
                    stack.push_back(i);
                    rec(i + 1);
                    stack.pop_back();
                }
            }
        };
        rec(0);
        total += count << k; // sign choices per line
    }
    return total;
}

ResidualCheck residual_count_check(const RootSystem& rs, const TwoStructure& ts) {
    if (rs.system().factors.size() != 1) throw Error("residual check needs an irreducible system");
    const auto& f = rs.system().factors[0];
    ResidualCheck rc;
    rc.residual = rs.positiveCount() - static_cast<long>(ts.lines.size());
    if (f.family == 'A' && f.rank % 2 == 0) {
        rc.rule = "A_{2n}: residual = 2n mod 4";
        rc.pass = (rc.residual % 4) == (f.rank % 4);
    } else if (f.family == 'I') {
        long p2 = 1;
        while (f.m % (2 * p2) == 0) p2 *= 2;
        long expected = p2 * (f.m / p2 - 1);
        rc.rule = "I2(2^r m): residual = 2^r (m-1)";
        rc.pass = rc.residual == expected;
    } else {
        rc.rule = "residual = 0 mod 4";
        rc.pass = rc.residual % 4 == 0;
    }
    return rc;
}

} // namespace coxpizza
