#ifndef FIXPT_BUNDLES_BUNDLE_HPP
#define FIXPT_BUNDLES_BUNDLE_HPP

#include "fixpt/reidemeister/trace.hpp"

#include <optional>

namespace fixpt {

struct BaseEdge {
    std::string id;
    int src = 0;
    int dst = 0;
};

/// One traversal of a base edge, along (forward) or against its orientation.
struct EdgeStep {
    int edge = 0;
    bool forward = true;

    friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

using EdgeWord = std::vector<EdgeStep>;

EdgeWord reverse_word(EdgeWord w);

/**
 * Simple graph with oriented edges and a spanning forest.
 *
 * The graph may be disconnected; the tree then spans each component. The
 * presentation of a component is taken at its root: the basepoint for the
 * basepoint's component, the least vertex otherwise.
 */
class GraphBase {
public:
    GraphBase() = default;
    /// tree holds positions into edges. Throws InputError on loops, parallel edges or a bad tree.
    GraphBase(std::vector<std::string> vertices, std::vector<BaseEdge> edges, std::vector<int> tree, int basepoint);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<BaseEdge>& edges() const { return edges_; }
    const std::vector<int>& tree() const { return tree_; }
    int basepoint() const { return basepoint_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int vertex_position(const std::string& name) const; // -1 if unknown
    int edge_position(const std::string& id) const;     // -1 if unknown

    const SimplicialComplex& complex() const { return *complex_; }
    std::shared_ptr<const SimplicialComplex> complex_ptr() const { return complex_; }
    /// Index of edge e among complex().simplices(1).
    Index complex_edge(int e) const { return complex_edges_.at(e); }
    /// Base edge joining u and v, or -1.
    int edge_between(int u, int v) const;

    int root(int v) const;
    Pi1Presentation presentation(int root) const;

    /// Vertex walk of a word starting at start; throws InputError if the word does not chain.
    VertexWalk walk_of_word(const EdgeWord& w, int start) const;
    EdgeWord word_of_walk(const VertexWalk& w) const;

private:
    std::vector<std::string> vertices_;
    std::vector<BaseEdge> edges_;
    std::vector<int> tree_;
    int basepoint_ = 0;
    std::shared_ptr<const SimplicialComplex> complex_;
    std::vector<Index> complex_edges_;
    std::map<std::pair<int, int>, int> edge_of_pair_;
};

/// Transport along an edge together with its designated homotopy inverse.
struct Transport {
    SimplicialMap map;
    SimplicialMap inverse;
};

/**
 * Fibers over the base vertices and simplicial transports over the edges.
 * The transport of e: b -> b' maps F_b to F_b'; both composites with the
 * designated inverse must induce the identity on homology.
 */
class DiscreteBundle {
public:
    DiscreteBundle() = default;
    DiscreteBundle(GraphBase base, std::vector<std::shared_ptr<const SimplicialComplex>> fibers,
                   std::vector<Transport> transports);

    const GraphBase& base() const { return base_; }
    const SimplicialComplex& fiber(int b) const { return *fibers_.at(b); }
    std::shared_ptr<const SimplicialComplex> fiber_ptr(int b) const { return fibers_.at(b); }
    const Transport& edge_transport(int e) const { return transports_.at(e); }

private:
    GraphBase base_;
    std::vector<std::shared_ptr<const SimplicialComplex>> fibers_;
    std::vector<Transport> transports_;
};

/// Composite transport F_start -> F_end along a word; the empty word gives the identity.
SimplicialMap transport(const DiscreteBundle& bundle, const EdgeWord& word, int start);

/**
 * A base map (vertex images plus an edge word per edge) with fiber maps
 * F_b -> F_fbar(b), and optionally a total map supplied by the caller.
 */
class BundleSelfMapPair {
public:
    BundleSelfMapPair() = default;
    BundleSelfMapPair(DiscreteBundle bundle, std::vector<int> base_images, std::vector<EdgeWord> edge_words,
                      std::vector<SimplicialMap> fiber_maps, std::optional<SimplicialMap> total_map = {});

    const DiscreteBundle& bundle() const { return bundle_; }
    const GraphBase& base() const { return bundle_.base(); }
    const SimplicialMap& base_map() const { return base_map_; }
    const std::vector<int>& base_images() const { return base_images_; }
    const EdgeWord& edge_word(int e) const { return edge_words_.at(e); }
    const SimplicialMap& fiber_map(int b) const { return fiber_maps_.at(b); }
    const std::optional<SimplicialMap>& supplied_total_map() const { return total_map_; }

private:
    DiscreteBundle bundle_;
    std::vector<int> base_images_;
    std::vector<EdgeWord> edge_words_;
    SimplicialMap base_map_;
    std::vector<SimplicialMap> fiber_maps_;
    std::optional<SimplicialMap> total_map_;
};

/// Edges on which the two composites F_b -> F_fbar(b') disagree on homology, one message each.
std::vector<std::string> compatibility_violations(const BundleSelfMapPair& pair);

/// Base component data for an fbar-invariant component.
struct BaseComponent {
    int root = 0;
    VertexWalk basepath; // root -> fbar(root)
    std::shared_ptr<const Pi1Presentation> presentation;
    std::shared_ptr<const TwistedConjugacy> classes;
};

/// fbar-invariant base components; the basepath is the tree path unless given (keyed by root).
std::vector<BaseComponent> base_components(const BundleSelfMapPair& pair,
                                           const std::map<int, VertexWalk>& basepaths = {},
                                           int depth = TwistedConjugacy::default_depth);

struct BasePathClass {
    int component = 0; // index into base_components
    GroupElement element;
    int vertex = 0;
    EdgeWord path; // vertex -> fbar(vertex)
    Certainty certainty = Certainty::Certain;
};

/// Classes found per component, with the completeness flag of each enumeration.
struct BaseClassList {
    std::vector<BasePathClass> classes;
    bool complete = true;
};

BaseClassList base_twisted_classes(const BundleSelfMapPair& pair, const std::vector<BaseComponent>& components);

/// Representative (root, walk(g) . basepath) of the class of g.
BasePathClass base_class(const BundleSelfMapPair& pair, const std::vector<BaseComponent>& components, int component,
                         const GroupElement& g);

/// Class of a pair (b, gamma) with gamma: b ~> fbar(b); b must lie in the component.
GroupElement class_of_path(const BundleSelfMapPair& pair, const BaseComponent& component, int b,
                           const EdgeWord& gamma);

/// k_b = transport(gamma^-1) o f_b, a self-map of F_b.
SimplicialMap fiber_composite(const BundleSelfMapPair& pair, int b, const EdgeWord& gamma);

Integer refined_L(const BundleSelfMapPair& pair, const BasePathClass& c);

/// R(fbar) on each component of base_components, in the same order.
std::vector<ShadowElement> base_reidemeister(const BundleSelfMapPair& pair,
                                             const std::vector<BaseComponent>& components);

/**
 * Total space: the fibers glued along prisms over the edges, each prism
 * triangulated by the staircase rule in the source fiber's vertex order.
 * Requires every transport to be a simplicial isomorphism whose designated
 * inverse is its inverse (NotConstructibleError otherwise).
 */
struct TotalSpace {
    std::shared_ptr<const SimplicialComplex> complex;
    std::vector<int> offset; // total vertex of fiber vertex v over b is offset[b] + v
    std::vector<int> base_of;
    /// tracks[e][v]: the prism edge from v over src(e) to its transport over dst(e).
    std::vector<std::vector<VertexWalk>> tracks;

    int vertex(int b, int v) const { return offset.at(b) + v; }
    int fiber_vertex(int x) const { return x - offset.at(base_of.at(x)); }
    VertexWalk embed(int b, const VertexWalk& w) const;
    /// Lift of a word from fiber vertex v over start; ends over the word's end at the transported vertex.
    VertexWalk lift(const DiscreteBundle& bundle, const EdgeWord& word, int start, int v) const;
    /// Base walk under the projection, stutters removed.
    VertexWalk project(const VertexWalk& w) const;
};

TotalSpace total_space(const DiscreteBundle& bundle);

/**
 * Self-map of the total space over the pair. A supplied map is validated
 * (p f = fbar p and agreement with the fiber maps on vertices). Otherwise
 * vertical edges follow the fiber maps and a prism edge follows the fiber walk
 * and then the lift of the base word; this needs T_{fbar(e)} f_b = f_b' t_e on
 * vertices, and NotConstructibleError is raised when that fails.
 */
SimplicialMap total_map(const BundleSelfMapPair& pair, const TotalSpace& total);

} // namespace fixpt

#endif
