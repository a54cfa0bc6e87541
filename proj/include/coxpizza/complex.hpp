#ifndef COXPIZZA_COMPLEX_HPP
#define COXPIZZA_COMPLEX_HPP

#include <cstdint>
#include <unordered_map>

#include "coxpizza/rootsys.hpp"

namespace coxpizza {

/// Ternary sign vector over the hyperplanes of an arrangement, packed as a
/// (plus, minus) bit pair. Positions are local to the owning FacePoset.
struct SignVec {
    uint64_t plus = 0, minus = 0;

    uint64_t support() const { return plus | minus; }
    int at(int p) const { return (plus >> p) & 1 ? 1 : (minus >> p) & 1 ? -1 : 0; }
    void set(int p, int s) {
        if (s > 0) plus |= uint64_t(1) << p;
        else if (s < 0) minus |= uint64_t(1) << p;
    }
    SignVec negated() const { return {minus, plus}; }
    SignVec composedWith(const SignVec& y) const {
        uint64_t sup = support();
        return {plus | (y.plus & ~sup), minus | (y.minus & ~sup)};
    }
    uint64_t separation(const SignVec& y) const { return (plus & y.minus) | (minus & y.plus); }
    /// this <= y in the face order: zero entries may grow, signs must agree.
    bool below(const SignVec& y) const { return !(plus & ~y.plus) && !(minus & ~y.minus); }
    bool operator==(const SignVec& o) const { return plus == o.plus && minus == o.minus; }
};

struct SignVecHash {
    std::size_t operator()(const SignVec& s) const {
        return std::hash<uint64_t>()(s.plus * 0x9e3779b97f4a7c15ull ^ s.minus);
    }
};

/// Face poset of a central arrangement whose hyperplanes are a subset of the
/// reflection hyperplanes of a root system. Faces carry exact interior
/// representative points; ordering, composition and separation are sign
/// vector operations.
class FacePoset {
public:
    struct Face {
        SignVec sign;
        int dim = 0;            // dim of Span(face) in the ambient V
        SVec point;             // interior representative
        int cosetW = -1;        // full Coxeter arrangements: minimal coset rep
        uint32_t cosetI = 0;    //   and the parabolic subset I (bitmask)
        std::vector<int> rays;  // rank-1 subfaces (poset face indices)
        int neg = -1;           // the face with opposite signs
    };

    /// Full Coxeter arrangement, one face per standard coset wW_I.
    static FacePoset full(const RootSystem& rs, long groupBound = kDefaultGroupBound);
    /// Subarrangement on a subset of the parent's hyperplanes (root indices).
    /// Faces are the classes of parent faces with equal restricted signs.
    static FacePoset sub(const FacePoset& parent, std::vector<int> rootSubset);

    const RootSystem& rootSystem() const { return *rs_; }
    int faceCount() const { return static_cast<int>(faces_.size()); }
    const Face& face(int i) const { return faces_[i]; }
    int hyperplaneCount() const { return static_cast<int>(hyper_.size()); }
    const std::vector<int>& hyperplanes() const { return hyper_; }
    int positionOfRoot(int rootIdx) const;

    int faceBySign(const SignVec& s) const;
    int compose(int c, int d) const;
    int fB(int b, int c) const { return compose(c, b); }
    uint64_t separationMask(int c, int d) const {
        return faces_[c].sign.separation(faces_[d].sign);
    }
    int separationCount(int c, int d) const { return __builtin_popcountll(separationMask(c, d)); }
    bool leq(int c, int d) const { return faces_[c].sign.below(faces_[d].sign); }
    /// T <=_B T' in the chamber poset with base chamber B.
    bool chamberLeq(int b, int t, int tp) const {
        uint64_t s1 = separationMask(b, t), s2 = separationMask(b, tp);
        return (s1 & ~s2) == 0;
    }
    int negFace(int c) const { return faces_[c].neg; }

    int fundamentalChamber() const;
    int minimalFace() const { return minFace_; }
    const std::vector<int>& chambers() const { return chambers_; }
    const std::vector<int>& rays() const { return rays_; }

    int dimV() const { return dimV_; }
    int v0dim() const { return v0dim_; }
    const std::vector<SVec>& v0basis() const { return v0basis_; }

    std::vector<int> starFaces(int c) const;
    /// Hyperplanes through the face (root indices), i.e. E(C).
    std::vector<int> starHyperplanes(int c) const;

    /// Locate the face of this poset containing a face of a finer poset over
    /// the same root system (restriction of the sign vector).
    int fromParent(const FacePoset& parent, int parentFace) const;
    int faceOfPoint(const SVec& x) const;

    /// Restriction of a face's sign vector to a hyperplane subset (given as
    /// root indices); position p of the result corresponds to subset[p].
    /// This is Z_phi(T) when the subset is a 2-structure's positive part.
    SignVec restrictSign(int face, const std::vector<int>& rootSubset) const;

private:
    const RootSystem* rs_ = nullptr;
    std::vector<int> hyper_;
    std::vector<int> posOf_; // root index -> local position (-1 absent)
    std::vector<Face> faces_;
    std::unordered_map<SignVec, int, SignVecHash> bySign_;
    std::vector<int> chambers_, rays_;
    int minFace_ = -1;
    int dimV_ = 0, v0dim_ = 0;
    std::vector<SVec> v0basis_;

    void finalize();
    SignVec signOfPoint(const SVec& x) const;
};

} // namespace coxpizza

#endif
