#include "fixpt/reidemeister/trace.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fixpt {

ShadowElement reidemeister_trace_chain(const TwistedChainMap& m, int depth)
{
    auto classes = std::make_shared<const TwistedConjugacy>(m.endomorphism(), depth);
    ShadowElement out(classes);
    for (int d = 0; d <= m.top_degree(); ++d)
        out.add(twisted_hs_trace(m.component(d), classes), d % 2 == 0 ? 1 : -1);
    return out;
}

ShadowElement reidemeister_trace_geometric(const std::vector<FixedPointRecord>& records,
                                           std::shared_ptr<const TwistedConjugacy> classes)
{
    ShadowElement out(std::move(classes));
    for (const auto& r : records) {
        out.classes().group().check(r.witness);
        out.add(r.witness, r.index);
    }
    return out;
}

GroupElement fixed_vertex_witness(const SimplicialMap& f, const Pi1Presentation& p, const VertexWalk& basepath, int x)
{
    if (f(x) != x)
        throw InputError("fixed_vertex_witness: vertex is not fixed");
    VertexWalk beta = checked_basepath(f, p, basepath);
    const VertexWalk& c = p.tree_path(x);
    VertexWalk loop = join_walks(join_walks(c, reverse_walk(f.image_walk(c))), reverse_walk(beta));
    return p.walk_element(loop);
}

std::vector<FixedPointRecord> resolve_fixed_points(const std::vector<FixedPointSite>& sites, const SimplicialMap& f,
                                                   const Pi1Presentation& p, const VertexWalk& basepath)
{
    std::vector<FixedPointRecord> out;
    for (const auto& s : sites) {
        if (s.vertex.has_value() == s.loop.has_value())
            throw InputError("fixed point '" + s.label + "': give exactly one of vertex and loop");
        if (s.vertex) {
            if (!p.in_component(*s.vertex))
                throw InputError("fixed point '" + s.label + "' lies outside the basepoint component");
            out.push_back({s.label, s.index, fixed_vertex_witness(f, p, basepath, *s.vertex)});
            continue;
        }
        const VertexWalk& w = *s.loop;
        if (w.empty() || w.front() != p.basepoint() || w.back() != p.basepoint())
            throw InputError("fixed point '" + s.label + "': loop must start and end at the basepoint");
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] != w[i + 1] && !p.complex().adjacent(w[i], w[i + 1]))
                throw InputError("fixed point '" + s.label + "': loop is not an edge path");
        out.push_back({s.label, s.index, p.walk_element(w)});
    }
    return out;
}

ShadowElement component_reidemeister_trace(const SimplicialMap& f, const Pi1Presentation& p,
                                           const VertexWalk& basepath, int depth)
{
    auto lifted = std::make_shared<const EquivariantChainComplex>(lift_to_universal_cover(p));
    return reidemeister_trace_chain(lift_map(f, basepath, p, lifted), depth);
}

ReidemeisterTrace reidemeister_trace(const SimplicialMap& f, const std::map<int, VertexWalk>& basepaths, int depth)
{
    if (!f.is_endomorphism())
        throw InputError("reidemeister_trace: not a self-map");
    const SimplicialComplex& k = f.source();
    std::vector<int> label = k.component_of();
    ReidemeisterTrace out;
    for (const auto& comp : k.components()) {
        int x = comp.front();
        if (label[f(x)] != label[x])
            continue;
        auto it = std::find_if(basepaths.begin(), basepaths.end(),
                               [&](const auto& b) { return label[b.first] == label[x]; });
        if (it != basepaths.end())
            x = it->first;
        auto p = std::make_shared<const Pi1Presentation>(pi1_presentation(f.target_ptr(), x));
        ComponentTrace part;
        part.basepoint = x;
        part.basepath = it != basepaths.end() ? it->second : p->tree_path(f(x));
        part.presentation = p;
        part.trace = component_reidemeister_trace(f, *p, part.basepath, depth);
        out.parts.push_back(std::move(part));
    }
    return out;
}

Integer ReidemeisterTrace::augment() const
{
    Integer s = 0;
    for (const auto& p : parts)
        s += fixpt::augment(p.trace);
    return s;
}

bool ReidemeisterTrace::indeterminate() const
{
    for (const auto& p : parts)
        if (p.trace.indeterminate())
            return true;
    return false;
}

Index ReidemeisterTrace::nielsen() const
{
    Index n = 0;
    for (const auto& p : parts)
        n += fixpt::nielsen(p.trace);
    return n;
}

std::string ReidemeisterTrace::format() const
{
    std::ostringstream out;
    bool first = true;
    for (const auto& p : parts) {
        if (p.trace.empty())
            continue;
        if (!first)
            out << " ; ";
        if (parts.size() > 1)
            out << p.presentation->complex().vertex_name(p.basepoint) << ": ";
        out << p.trace.format();
        first = false;
    }
    return first ? "0" : out.str();
}

} // namespace fixpt
