#ifndef FIXPT_SIMPLICIAL_MAP_HPP
#define FIXPT_SIMPLICIAL_MAP_HPP

#include "fixpt/simplicial/pi1.hpp"

#include <map>
#include <memory>

namespace fixpt {

/**
 * Vertex map between simplicial complexes, optionally cellular on edges.
 *
 * Without edge walks the map must be simplicial. An edge walk for the source
 * edge (u, v), u < v, is a target vertex walk from f(u) to f(v); this realizes
 * maps such as z -> z^d that no triangulated polygon carries simplicially.
 * Edges without a walk are mapped simplicially.
 */
class SimplicialMap {
public:
    SimplicialMap() = default;
    SimplicialMap(std::shared_ptr<const SimplicialComplex> source, std::shared_ptr<const SimplicialComplex> target,
                  std::vector<int> vertex_images, std::map<Index, VertexWalk> edge_walks = {});

    const SimplicialComplex& source() const { return *source_; }
    const SimplicialComplex& target() const { return *target_; }
    std::shared_ptr<const SimplicialComplex> source_ptr() const { return source_; }
    std::shared_ptr<const SimplicialComplex> target_ptr() const { return target_; }

    int operator()(int v) const { return images_.at(v); }
    const std::vector<int>& vertex_images() const { return images_; }
    /// Explicit walks only (those that are not a single edge or a constant).
    const std::map<Index, VertexWalk>& edge_walks() const { return walks_; }

    /// Image walk of source edge e (walks from f(lo) to f(hi)).
    VertexWalk edge_walk(Index e) const;
    /// Image of a source vertex walk, stutters and backtracks removed.
    VertexWalk image_walk(const VertexWalk& w) const;

    bool is_simplicial() const { return walks_.empty(); }
    /// The map is simplicial on this simplex (edges go to edges or points and the image spans a simplex).
    bool simplicial_on(int dim, Index s) const;
    bool is_endomorphism() const { return source_ == target_ || *source_ == *target_; }

private:
    std::shared_ptr<const SimplicialComplex> source_, target_;
    std::vector<int> images_;
    std::map<Index, VertexWalk> walks_;
};

SimplicialMap identity_map(std::shared_ptr<const SimplicialComplex> k);
/// g o f.
SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f);

/**
 * Chain map of f. Simplices go to sign(sorting permutation) times the image
 * simplex, or 0 when degenerate; edges with walks go to their signed edge
 * counts; a 2-simplex on which f is not simplicial goes to the augmentation of
 * the universal-cover fill of its image boundary.
 */
ChainMap induced_chain_map(const SimplicialMap& f);
ChainMap induced_chain_map(const SimplicialMap& f, std::shared_ptr<const ChainComplex> source,
                           std::shared_ptr<const ChainComplex> target);

Integer lefschetz_number(const SimplicialMap& f);

/**
 * Endomorphism of pi_1(K, x0) induced by a self-map f with a basepath from x0
 * to f(x0): g -> [basepath . f(g) . basepath^-1]. An empty basepath is
 * accepted when f fixes x0. Throws InputError for an invalid walk.
 */
GroupEndomorphism induced_pi1_endo(const SimplicialMap& f, const Pi1Presentation& p, const VertexWalk& basepath);

/// Checks a basepath for f at p's basepoint and returns it normalized (non-empty).
VertexWalk checked_basepath(const SimplicialMap& f, const Pi1Presentation& p, const VertexWalk& basepath);

/// Basepoint-component presentation used for fills (least vertex of the component).
Pi1Presentation fill_presentation(std::shared_ptr<const SimplicialComplex> k, int vertex);

/// Fill of the image of source 2-simplex s, as a lifted chain of the target starting at the identity translate.
LiftedChain image_fill(const SimplicialMap& f, const Pi1Presentation& target_presentation, Index s);

} // namespace fixpt

#endif
