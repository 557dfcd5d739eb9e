#ifndef FIXPT_REIDEMEISTER_TRACE_HPP
#define FIXPT_REIDEMEISTER_TRACE_HPP

#include "fixpt/reidemeister/equivariant.hpp"

#include <optional>

namespace fixpt {

/// sum_i (-1)^i twisted trace of f_i.
ShadowElement reidemeister_trace_chain(const TwistedChainMap& m, int depth = TwistedConjugacy::default_depth);

/// A fixed point with its index and the class of its path b ~> f(b) in pi_1 coordinates.
struct FixedPointRecord {
    std::string label;
    Integer index;
    GroupElement witness;
};

/// sum index [witness]; classes must come from the same (G, phi) as the chain route.
ShadowElement reidemeister_trace_geometric(const std::vector<FixedPointRecord>& records,
                                           std::shared_ptr<const TwistedConjugacy> classes);

/**
 * Witness of a fixed-point vertex x: the class of c . f(c)^-1 . basepath^-1
 * with c the tree path from the basepoint to x.
 */
GroupElement fixed_vertex_witness(const SimplicialMap& f, const Pi1Presentation& p, const VertexWalk& basepath,
                                  int x);

/// A fixed point given by a fixed vertex, or by a closed walk at the basepoint carrying its witness class.
struct FixedPointSite {
    std::string label;
    Integer index;
    std::optional<int> vertex;
    std::optional<VertexWalk> loop;
};

std::vector<FixedPointRecord> resolve_fixed_points(const std::vector<FixedPointSite>& sites, const SimplicialMap& f,
                                                   const Pi1Presentation& p, const VertexWalk& basepath);

/// Reidemeister trace on one f-invariant component.
struct ComponentTrace {
    int basepoint = 0;
    VertexWalk basepath;
    std::shared_ptr<const Pi1Presentation> presentation;
    ShadowElement trace;
};

/**
 * Componentwise Reidemeister trace of a self-map of a possibly disconnected
 * complex. Every component C with f(C) inside C contributes; its basepoint is
 * the least vertex and its basepath the tree path to f(basepoint) unless
 * basepaths supplies one. A basepaths key may be any vertex of its component
 * and becomes that component's basepoint. Components that f moves carry
 * no fixed points and are skipped.
 */
struct ReidemeisterTrace {
    std::vector<ComponentTrace> parts;

    Integer augment() const;
    bool indeterminate() const;
    Index nielsen() const;
    std::string format() const;
};

ReidemeisterTrace reidemeister_trace(const SimplicialMap& f, const std::map<int, VertexWalk>& basepaths = {},
                                     int depth = TwistedConjugacy::default_depth);

/// Trace of f on the basepoint component of p with the given basepath.
ShadowElement component_reidemeister_trace(const SimplicialMap& f, const Pi1Presentation& p,
                                           const VertexWalk& basepath, int depth = TwistedConjugacy::default_depth);

} // namespace fixpt

#endif
