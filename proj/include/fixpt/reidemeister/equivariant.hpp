#ifndef FIXPT_REIDEMEISTER_EQUIVARIANT_HPP
#define FIXPT_REIDEMEISTER_EQUIVARIANT_HPP

#include "fixpt/grouprings/shadow.hpp"
#include "fixpt/simplicial/map.hpp"

namespace fixpt {

/**
 * Cellular chains of the universal cover of one component, as free right
 * modules over Z[pi] with one generator per simplex (its canonical lift: the
 * least vertex sits over the basepoint chart of the spanning tree).
 *
 * Column convention: d(s~) = t0~ eps(v0 v1)^-1 + sum_{i>=1} (-1)^i ti~ where ti
 * is the face opposite vi.
 */
class EquivariantChainComplex {
public:
    EquivariantChainComplex() = default;
    /// Validates shapes and d d = 0 over the group ring.
    EquivariantChainComplex(Group group, std::vector<Index> ranks, std::vector<GroupRingMatrix> boundaries);

    const Group& group() const { return group_; }
    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    Index rank(int d) const { return d < 0 || d > top_degree() ? 0 : ranks_[d]; }
    const GroupRingMatrix& boundary(int d) const { return boundaries_.at(d); }

    /// For complexes built by lift_to_universal_cover: simplex index of basis element i in degree d.
    const std::vector<std::vector<Index>>& cells() const { return cells_; }
    Index basis_index(int d, Index simplex) const; // -1 if outside the component

    friend EquivariantChainComplex lift_to_universal_cover(const Pi1Presentation& p);

private:
    Group group_;
    std::vector<Index> ranks_;
    std::vector<GroupRingMatrix> boundaries_; // boundaries_[d] = d_d, entry 0 unused
    std::vector<std::vector<Index>> cells_;
    std::vector<std::map<Index, Index>> basis_;
};

/// Throws UnsupportedError when the presentation's group is unsupported.
EquivariantChainComplex lift_to_universal_cover(const Pi1Presentation& p);

/// phi-semilinear self-map f(c g) = f(c) phi(g) with d f = f phi(d) degreewise.
class TwistedChainMap {
public:
    TwistedChainMap() = default;
    /// Throws InputError when shapes mismatch or the twisted commutation fails.
    TwistedChainMap(std::shared_ptr<const EquivariantChainComplex> complex, GroupEndomorphism phi,
                    std::vector<GroupRingMatrix> components);

    const EquivariantChainComplex& complex() const { return *complex_; }
    const GroupEndomorphism& endomorphism() const { return phi_; }
    const GroupRingMatrix& component(int d) const { return components_.at(d); }
    int top_degree() const { return static_cast<int>(components_.size()) - 1; }

private:
    std::shared_ptr<const EquivariantChainComplex> complex_;
    GroupEndomorphism phi_;
    std::vector<GroupRingMatrix> components_;
};

/**
 * Lift of a self-map to the universal cover of the basepoint component, fixed
 * by sending the basepoint lift along the basepath. A vertex v goes to the
 * lift of f(v) at the end of basepath . f(p_v); cells follow by path lifting,
 * and 2-cells on which f is not simplicial use the universal-cover fill.
 */
TwistedChainMap lift_map(const SimplicialMap& f, const VertexWalk& basepath, const Pi1Presentation& p,
                         std::shared_ptr<const EquivariantChainComplex> lifted);

} // namespace fixpt

#endif
