#ifndef COXPIZZA_ROOTSYS_HPP
#define COXPIZZA_ROOTSYS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxpizza/coxeter.hpp"
#include "coxpizza/linalg.hpp"

namespace coxpizza {

constexpr long kDefaultGroupBound = 20000;

/// Enumerated Coxeter group acting on the root index set. Element 0 is the
/// identity; words are reduced (BFS by right multiplication).
struct Group {
    std::vector<std::vector<uint16_t>> perm; // perm[w][r] = index of w . alpha_r
    std::vector<std::vector<uint8_t>> word;  // reduced word in generator indices
    std::unordered_map<std::string, int> index; // packed perm -> element

    std::size_t size() const { return perm.size(); }
    int length(int w) const { return static_cast<int>(word[w].size()); }
    int det(int w) const { return length(w) % 2 ? -1 : 1; }
    int act(int w, int rootIdx) const { return perm[w][rootIdx]; }
    int indexOf(const std::vector<uint16_t>& p) const;
    /// w1 * w2 as maps: (w1*w2)(r) = w1(w2(r)).
    int multiply(int w1, int w2) const;
    int inverse(int w) const;
};

class RootSystem {
public:
    /// Canonical (normalized) pseudo-root system of a Coxeter system.
    static RootSystem canonical(const CoxeterSystem& sys);
    static RootSystem canonical(const std::string& typeSpec) { return canonical(parse_type(typeSpec)); }
    /// Bourbaki-coordinate root system with true lengths (crystallographic only).
    static RootSystem bourbaki(const std::string& typeTag);

    const CoxeterSystem& system() const { return sys_; }
    const FieldPtr& context() const { return ctx_; }
    const SMat& gram() const { return gram_; }
    int dim() const { return dim_; }
    bool normalized() const { return normalized_; }

    int rootCount() const { return static_cast<int>(roots_.size()); }
    int positiveCount() const { return rootCount() / 2; }
    const SVec& root(int i) const { return roots_[i]; }
    bool isPositive(int i) const { return i < positiveCount(); }
    int negate(int i) const { return (i + positiveCount()) % rootCount(); }
    int positiveIndex(int i) const { return isPositive(i) ? i : negate(i); }
    /// Index of the simple root e_s.
    int simpleRoot(int s) const { return simple_[s]; }
    int rank() const { return static_cast<int>(simple_.size()); }
    const Rational& normSquared(int i) const { return norm2_[i]; }

    Scalar inner(const SVec& x, const SVec& y) const { return dotForm(gram_, x, y); }
    Scalar innerRoots(int i, int j) const { return inner(roots_[i], roots_[j]); }
    int findRoot(const SVec& coords) const; // -1 if absent
    /// Index of the root whose positive span contains v, or -1.
    int findRootRay(const SVec& v) const;

    /// Apply the reflection in root r to a coordinate vector.
    SVec reflect(int r, SVec v) const;
    /// Reflection in root r as a permutation of the root indices.
    std::vector<uint16_t> reflectionPerm(int r) const;

    const Group& group(long bound = kDefaultGroupBound) const;
    bool groupEnumerable(long bound = kDefaultGroupBound) const;
    /// Apply group element w to an arbitrary coordinate vector via its word.
    SVec applyElement(int w, SVec v) const;
    /// Group index of the reflection in root r.
    int reflectionElement(int r) const;

    /// Sub-root-system generated by a subset I of the simple roots,
    /// re-expressed in the basis of its own simples (coordinates restricted
    /// to I). parentRoot maps local root indices back to this system.
    RootSystem parabolic(const std::vector<int>& I) const;
    const std::vector<int>& parentRoots() const { return parentRoot_; }

    /// Positive-root indices lying in the span of the simples indexed by I.
    std::vector<int> positivesInSpan(const std::vector<int>& I) const;

private:
    CoxeterSystem sys_;
    FieldPtr ctx_;
    SMat gram_;
    int dim_ = 0;
    bool normalized_ = true;
    std::vector<SVec> roots_;
    std::vector<int> simple_;
    std::vector<Rational> norm2_;
    std::vector<int> parentRoot_;
    std::map<std::vector<std::string>, int> byCoords_;
    mutable std::optional<Group> group_;
    mutable std::vector<int> reflElem_;

    void indexRoots(std::vector<SVec> roots);
    std::vector<std::string> key(const SVec& v) const;
};

} // namespace coxpizza

#endif
