#ifndef FIXPT_SIMPLICIAL_PI1_HPP
#define FIXPT_SIMPLICIAL_PI1_HPP

#include "fixpt/grouprings/group.hpp"
#include "fixpt/simplicial/complex.hpp"

#include <map>
#include <memory>
#include <optional>

namespace fixpt {

enum class Pi1Class { FreeAbelian, Free, Finite, Unsupported };

std::string to_string(Pi1Class c);

/// A vertex walk v0, v1, ..., vk with consecutive vertices adjacent.
using VertexWalk = std::vector<int>;

VertexWalk reverse_walk(VertexWalk w);
/// Joins a -> b walks (a.back() == b.front()) and cancels backtracks u, v, u.
VertexWalk join_walks(const VertexWalk& a, const VertexWalk& b);
VertexWalk reduce_walk(const VertexWalk& w);
/// reduce_walk, then a -> b -> c becomes a -> c across each 2-simplex {a, b, c}; homotopic rel endpoints.
VertexWalk shorten_walk(const SimplicialComplex& k, const VertexWalk& w);

/**
 * Edge-path presentation of the fundamental group of the basepoint's component.
 *
 * Generator j is the non-tree edge generators()[j] = (u, v), u < v, read as the
 * loop p_u (u -> v) p_v^-1 with p_x the tree path from the basepoint. After a
 * Tietze pass the group is recognized; generator_image(j) gives generator j as
 * an element of group(). For an edge step a -> b, epsilon(a, b) is the class of
 * p_a (a -> b) p_b^-1 (trivial on tree edges).
 */
class Pi1Presentation {
public:
    const SimplicialComplex& complex() const { return *complex_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
    int basepoint() const { return basepoint_; }
    const std::vector<int>& component() const { return component_; }
    bool in_component(int v) const { return in_component_.at(v); }

    /// Tree edges as indices into complex().simplices(1).
    const std::vector<Index>& tree_edges() const { return tree_; }
    /// Non-tree edges of the component, as edge indices, in edge order.
    const std::vector<Index>& generators() const { return generators_; }
    /// Relators over the original generators, one per 2-simplex (trivial ones dropped).
    const std::vector<Word>& relators() const { return relators_; }

    Pi1Class recognized_class() const { return class_; }
    /// Throws UnsupportedError when the class is Unsupported.
    const Group& group() const;
    /// Original generators surviving the Tietze pass; recognized generator k is surviving()[k].
    const std::vector<int>& surviving() const { return surviving_; }
    const GroupElement& generator_image(int j) const { return generator_images_.at(j); }

    /// Tree path from the basepoint to v.
    const VertexWalk& tree_path(int v) const;
    /// Loop of original generator j.
    VertexWalk generator_loop(int j) const;

    GroupElement epsilon(int a, int b) const;
    /// Product of epsilon over the steps of a walk; for a closed walk at the basepoint its class.
    GroupElement walk_element(const VertexWalk& w) const;
    /// A reduced closed walk at the basepoint representing g.
    VertexWalk walk_of_element(const GroupElement& g) const;

    friend Pi1Presentation pi1_presentation(std::shared_ptr<const SimplicialComplex>, int,
                                            const std::optional<std::vector<Index>>&);

private:
    std::shared_ptr<const SimplicialComplex> complex_;
    int basepoint_ = 0;
    std::vector<int> component_;
    std::vector<bool> in_component_;
    std::vector<Index> tree_;
    std::vector<Index> generators_;
    std::map<Index, int> generator_of_edge_;
    std::vector<Word> relators_;
    std::vector<VertexWalk> tree_paths_;

    Pi1Class class_ = Pi1Class::Unsupported;
    Group group_;
    std::vector<int> surviving_;
    std::vector<GroupElement> generator_images_;
};

/**
 * Presentation based at the given vertex. The spanning tree is breadth-first
 * from the basepoint with neighbours in vertex order unless tree_edges is
 * supplied (InputError if it is not a spanning tree of the component).
 */
Pi1Presentation pi1_presentation(std::shared_ptr<const SimplicialComplex> k, int basepoint,
                                 const std::optional<std::vector<Index>>& tree_edges = std::nullopt);

/// Simplices lifted to the universal cover: simplex index paired with a deck translate.
using LiftedCell = std::pair<Index, GroupElement>;
using LiftedChain = std::map<LiftedCell, Integer>;

/**
 * Lift of a walk to the universal cover starting at the lift of w[0] translated
 * by start: each step a -> b moves the translate h to epsilon(a,b)^-1 h and
 * contributes +edge*h for a < b, -edge*h' otherwise. end receives the final
 * translate.
 */
LiftedChain lift_walk(const Pi1Presentation& p, const VertexWalk& w, const GroupElement& start,
                      GroupElement* end = nullptr);

/**
 * The unique finitely supported 2-chain of the universal cover bounding the
 * lift of a closed walk that starts at the identity translate. Needs a free
 * abelian fundamental group and a component where every edge lies on exactly
 * two triangles; throws NotConstructibleError otherwise or when the walk is not
 * null-homotopic.
 */
LiftedChain universal_fill(const Pi1Presentation& p, const VertexWalk& closed_walk);

} // namespace fixpt

#endif
