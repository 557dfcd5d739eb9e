#include "fixpt/bundles/bundle.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fixpt {

namespace {

int find_root(std::vector<int>& parent, int x)
{
    while (parent[x] != x)
        x = parent[x] = parent[parent[x]];
    return x;
}

bool is_isomorphism(const SimplicialMap& t)
{
    const SimplicialComplex& a = t.source();
    const SimplicialComplex& b = t.target();
    if (!t.is_simplicial() || a.vertex_count() != b.vertex_count() || a.dimension() != b.dimension())
        return false;
    std::vector<int> images = t.vertex_images();
    std::sort(images.begin(), images.end());
    if (std::adjacent_find(images.begin(), images.end()) != images.end())
        return false;
    for (int d = 0; d <= a.dimension(); ++d) {
        if (a.count(d) != b.count(d))
            return false;
        for (const Simplex& s : a.simplices(d)) {
            Simplex img;
            for (int v : s)
                img.push_back(t(v));
            std::sort(img.begin(), img.end());
            if (!b.contains(img))
                return false;
        }
    }
    return true;
}

} // namespace

EdgeWord reverse_word(EdgeWord w)
{
    std::reverse(w.begin(), w.end());
    for (EdgeStep& s : w)
        s.forward = !s.forward;
    return w;
}

GraphBase::GraphBase(std::vector<std::string> vertices, std::vector<BaseEdge> edges, std::vector<int> tree,
                     int basepoint)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), tree_(std::move(tree)), basepoint_(basepoint)
{
    const int n = vertex_count();
    if (n == 0)
        throw InputError("base: no vertices");
    if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size())
        throw InputError("base: repeated vertex name");
    if (basepoint_ < 0 || basepoint_ >= n)
        throw InputError("base: basepoint out of range");
    std::set<std::string> ids;
    std::vector<Simplex> simplices;
    for (int v = 0; v < n; ++v)
        simplices.push_back({v});
    for (int e = 0; e < edge_count(); ++e) {
        const BaseEdge& be = edges_[e];
        if (be.id.empty() || be.id[0] == '-')
            throw InputError("base: edge ids must be non-empty and not start with '-'");
        if (!ids.insert(be.id).second)
            throw InputError("base: repeated edge id '" + be.id + "'");
        if (be.src < 0 || be.src >= n || be.dst < 0 || be.dst >= n)
            throw InputError("base: edge '" + be.id + "' has an unknown endpoint");
        if (be.src == be.dst)
            throw InputError("base: edge '" + be.id + "' is a loop; subdivide it");
        auto key = std::minmax(be.src, be.dst);
        if (!edge_of_pair_.emplace(std::pair<int, int>(key.first, key.second), e).second)
            throw InputError("base: edge '" + be.id + "' is parallel to another edge; subdivide it");
        simplices.push_back({key.first, key.second});
    }
    complex_ = std::make_shared<const SimplicialComplex>(build_complex(vertices_, simplices));
    for (const BaseEdge& be : edges_)
        complex_edges_.push_back(complex_->edge_index(be.src, be.dst));

    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::set<int> seen;
    for (int e : tree_) {
        if (e < 0 || e >= edge_count())
            throw InputError("base: tree edge out of range");
        if (!seen.insert(e).second)
            throw InputError("base: repeated tree edge");
        int a = find_root(parent, edges_[e].src), b = find_root(parent, edges_[e].dst);
        if (a == b)
            throw InputError("base: tree contains a cycle through '" + edges_[e].id + "'");
        parent[a] = b;
    }
    const auto components = complex_->components().size();
    if (tree_.size() + components != static_cast<std::size_t>(n))
        throw InputError("base: tree does not span the base");
}

int GraphBase::vertex_position(const std::string& name) const
{
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    return it == vertices_.end() ? -1 : static_cast<int>(it - vertices_.begin());
}

int GraphBase::edge_position(const std::string& id) const
{
    for (int e = 0; e < edge_count(); ++e)
        if (edges_[e].id == id)
            return e;
    return -1;
}

int GraphBase::edge_between(int u, int v) const
{
    auto key = std::minmax(u, v);
    auto it = edge_of_pair_.find({key.first, key.second});
    return it == edge_of_pair_.end() ? -1 : it->second;
}

int GraphBase::root(int v) const
{
    std::vector<int> label = complex_->component_of();
    if (label[v] == label[basepoint_])
        return basepoint_;
    return complex_->components()[label[v]].front();
}

Pi1Presentation GraphBase::presentation(int root) const
{
    std::vector<int> label = complex_->component_of();
    std::vector<Index> tree;
    for (int e : tree_)
        if (label[edges_[e].src] == label[root])
            tree.push_back(complex_edges_[e]);
    return pi1_presentation(complex_, root, tree);
}

VertexWalk GraphBase::walk_of_word(const EdgeWord& w, int start) const
{
    VertexWalk out{start};
    int cur = start;
    for (const EdgeStep& s : w) {
        if (s.edge < 0 || s.edge >= edge_count())
            throw InputError("edge word: unknown edge");
        const BaseEdge& e = edges_[s.edge];
        int from = s.forward ? e.src : e.dst;
        if (from != cur)
            throw InputError("edge word: step along '" + e.id + "' does not start at '" + vertices_[cur] + "'");
        cur = s.forward ? e.dst : e.src;
        out.push_back(cur);
    }
    return out;
}

EdgeWord GraphBase::word_of_walk(const VertexWalk& w) const
{
    EdgeWord out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1])
            continue;
        int e = edge_between(w[i], w[i + 1]);
        if (e < 0)
            throw InputError("walk step is not a base edge");
        out.push_back({e, edges_[e].src == w[i]});
    }
    return out;
}

DiscreteBundle::DiscreteBundle(GraphBase base, std::vector<std::shared_ptr<const SimplicialComplex>> fibers,
                               std::vector<Transport> transports)
    : base_(std::move(base)), fibers_(std::move(fibers)), transports_(std::move(transports))
{
    if (static_cast<int>(fibers_.size()) != base_.vertex_count())
        throw InputError("bundle: expected one fiber per base vertex");
    if (static_cast<int>(transports_.size()) != base_.edge_count())
        throw InputError("bundle: expected one transport per base edge");
    for (const auto& f : fibers_)
        if (!f || f->vertex_count() == 0)
            throw InputError("bundle: empty fiber");
    for (int e = 0; e < base_.edge_count(); ++e) {
        const BaseEdge& be = base_.edges()[e];
        const Transport& t = transports_[e];
        const std::string where = "bundle: transport of edge '" + be.id + "'";
        if (!(t.map.source() == fiber(be.src)) || !(t.map.target() == fiber(be.dst)))
            throw InputError(where + " does not map the source fiber to the target fiber");
        if (!(t.inverse.source() == fiber(be.dst)) || !(t.inverse.target() == fiber(be.src)))
            throw InputError(where + ": inverse has the wrong fibers");
        ChainMap there = induced_chain_map(compose(t.inverse, t.map));
        ChainMap back = induced_chain_map(compose(t.map, t.inverse));
        if (!induce_equal_homology(there, induced_chain_map(identity_map(fibers_[be.src]))) ||
            !induce_equal_homology(back, induced_chain_map(identity_map(fibers_[be.dst]))))
            throw InputError(where + " and its inverse are not inverse on homology");
    }
}

SimplicialMap transport(const DiscreteBundle& bundle, const EdgeWord& word, int start)
{
    const GraphBase& base = bundle.base();
    base.walk_of_word(word, start);
    SimplicialMap out = identity_map(bundle.fiber_ptr(start));
    for (const EdgeStep& s : word) {
        const Transport& t = bundle.edge_transport(s.edge);
        out = compose(s.forward ? t.map : t.inverse, out);
    }
    return out;
}

BundleSelfMapPair::BundleSelfMapPair(DiscreteBundle bundle, std::vector<int> base_images,
                                     std::vector<EdgeWord> edge_words, std::vector<SimplicialMap> fiber_maps,
                                     std::optional<SimplicialMap> total_map)
    : bundle_(std::move(bundle)), base_images_(std::move(base_images)), edge_words_(std::move(edge_words)),
      fiber_maps_(std::move(fiber_maps)), total_map_(std::move(total_map))
{
    const GraphBase& b = bundle_.base();
    if (static_cast<int>(base_images_.size()) != b.vertex_count())
        throw InputError("pair: expected one base image per base vertex");
    for (int v : base_images_)
        if (v < 0 || v >= b.vertex_count())
            throw InputError("pair: base image out of range");
    if (static_cast<int>(edge_words_.size()) != b.edge_count())
        throw InputError("pair: expected one edge word per base edge");
    std::map<Index, VertexWalk> walks;
    for (int e = 0; e < b.edge_count(); ++e) {
        const BaseEdge& be = b.edges()[e];
        VertexWalk w = b.walk_of_word(edge_words_[e], base_images_[be.src]);
        if (w.back() != base_images_[be.dst])
            throw InputError("pair: edge word of '" + be.id + "' does not end at the image of its target");
        if (be.src > be.dst)
            w = reverse_walk(w);
        walks[b.complex_edge(e)] = reduce_walk(w);
    }
    base_map_ = SimplicialMap(b.complex_ptr(), b.complex_ptr(), base_images_, std::move(walks));
    if (static_cast<int>(fiber_maps_.size()) != b.vertex_count())
        throw InputError("pair: expected one fiber map per base vertex");
    for (int v = 0; v < b.vertex_count(); ++v)
        if (!(fiber_maps_[v].source() == bundle_.fiber(v)) ||
            !(fiber_maps_[v].target() == bundle_.fiber(base_images_[v])))
            throw InputError("pair: fiber map over '" + b.vertices()[v] +
                             "' does not go to the fiber over the image vertex");
}

std::vector<std::string> compatibility_violations(const BundleSelfMapPair& pair)
{
    const GraphBase& b = pair.base();
    std::vector<std::string> out;
    for (int e = 0; e < b.edge_count(); ++e) {
        const BaseEdge& be = b.edges()[e];
        SimplicialMap first = compose(pair.fiber_map(be.dst), pair.bundle().edge_transport(e).map);
        SimplicialMap second =
            compose(transport(pair.bundle(), pair.edge_word(e), pair.base_images()[be.src]), pair.fiber_map(be.src));
        if (!induce_equal_homology(induced_chain_map(first), induced_chain_map(second)))
            out.push_back("edge '" + be.id + "': transport-then-map and map-then-transport differ on fiber homology");
    }
    return out;
}

std::vector<BaseComponent> base_components(const BundleSelfMapPair& pair, const std::map<int, VertexWalk>& basepaths,
                                           int depth)
{
    const GraphBase& b = pair.base();
    const SimplicialMap& f = pair.base_map();
    std::vector<int> label = b.complex().component_of();
    std::vector<BaseComponent> out;
    std::vector<int> roots;
    for (const auto& comp : b.complex().components())
        roots.push_back(b.root(comp.front()));
    std::sort(roots.begin(), roots.end(), [&](int x, int y) {
        if ((x == b.basepoint()) != (y == b.basepoint()))
            return x == b.basepoint();
        return x < y;
    });
    for (int r : roots) {
        if (label[f(r)] != label[r])
            continue;
        BaseComponent c;
        c.root = r;
        c.presentation = std::make_shared<const Pi1Presentation>(b.presentation(r));
        auto it = basepaths.find(r);
        c.basepath = checked_basepath(f, *c.presentation,
                                      it != basepaths.end() ? it->second : c.presentation->tree_path(f(r)));
        c.classes = std::make_shared<const TwistedConjugacy>(induced_pi1_endo(f, *c.presentation, c.basepath), depth);
        out.push_back(std::move(c));
    }
    return out;
}

BasePathClass base_class(const BundleSelfMapPair& pair, const std::vector<BaseComponent>& components, int component,
                         const GroupElement& g)
{
    const BaseComponent& c = components.at(component);
    BasePathClass out;
    out.component = component;
    TwistedClass cls = c.classes->canonical(g);
    out.element = cls.representative;
    out.certainty = cls.certainty;
    out.vertex = c.root;
    VertexWalk w = join_walks(c.presentation->walk_of_element(out.element), c.basepath);
    out.path = pair.base().word_of_walk(w);
    return out;
}

BaseClassList base_twisted_classes(const BundleSelfMapPair& pair, const std::vector<BaseComponent>& components)
{
    BaseClassList out;
    for (std::size_t i = 0; i < components.size(); ++i) {
        ClassEnumeration e = components[i].classes->enumerate();
        out.complete = out.complete && e.complete;
        for (const TwistedClass& t : e.classes) {
            BasePathClass c = base_class(pair, components, static_cast<int>(i), t.representative);
            c.certainty = t.certainty;
            out.classes.push_back(std::move(c));
        }
    }
    return out;
}

GroupElement class_of_path(const BundleSelfMapPair& pair, const BaseComponent& component, int b,
                           const EdgeWord& gamma)
{
    const Pi1Presentation& p = *component.presentation;
    if (!p.in_component(b))
        throw InputError("class_of_path: vertex outside the component");
    VertexWalk g = pair.base().walk_of_word(gamma, b);
    if (g.back() != pair.base_map()(b))
        throw InputError("class_of_path: path does not end at the image vertex");
    const VertexWalk& q = p.tree_path(b);
    VertexWalk loop = join_walks(q, g);
    loop = join_walks(loop, reverse_walk(pair.base_map().image_walk(q)));
    loop = join_walks(loop, reverse_walk(component.basepath));
    return component.classes->canonical(p.walk_element(loop)).representative;
}

SimplicialMap fiber_composite(const BundleSelfMapPair& pair, int b, const EdgeWord& gamma)
{
    VertexWalk g = pair.base().walk_of_word(gamma, b);
    const int fb = pair.base_images().at(b);
    if (g.back() != fb)
        throw InputError("fiber_composite: path does not end at the image vertex");
    return compose(transport(pair.bundle(), reverse_word(gamma), fb), pair.fiber_map(b));
}

Integer refined_L(const BundleSelfMapPair& pair, const BasePathClass& c)
{
    return lefschetz_number(fiber_composite(pair, c.vertex, c.path));
}

std::vector<ShadowElement> base_reidemeister(const BundleSelfMapPair& pair,
                                             const std::vector<BaseComponent>& components)
{
    std::vector<ShadowElement> out;
    for (const BaseComponent& c : components) {
        ShadowElement s(c.classes);
        s.add(component_reidemeister_trace(pair.base_map(), *c.presentation, c.basepath, c.classes->depth()));
        out.push_back(std::move(s));
    }
    return out;
}

VertexWalk TotalSpace::embed(int b, const VertexWalk& w) const
{
    VertexWalk out;
    for (int v : w)
        out.push_back(vertex(b, v));
    return out;
}

VertexWalk TotalSpace::lift(const DiscreteBundle& bundle, const EdgeWord& word, int start, int v) const
{
    VertexWalk out{vertex(start, v)};
    int cur = start;
    for (const EdgeStep& s : word) {
        const BaseEdge& e = bundle.base().edges().at(s.edge);
        const Transport& t = bundle.edge_transport(s.edge);
        if ((s.forward ? e.src : e.dst) != cur)
            throw InputError("lift: word does not chain");
        v = s.forward ? t.map(v) : t.inverse(v);
        cur = s.forward ? e.dst : e.src;
        out.push_back(vertex(cur, v));
    }
    return out;
}

VertexWalk TotalSpace::project(const VertexWalk& w) const
{
    VertexWalk out;
    for (int x : w)
        out.push_back(base_of.at(x));
    return reduce_walk(out);
}

TotalSpace total_space(const DiscreteBundle& bundle)
{
    const GraphBase& base = bundle.base();
    TotalSpace out;
    std::vector<std::string> names;
    for (int b = 0; b < base.vertex_count(); ++b) {
        out.offset.push_back(static_cast<int>(names.size()));
        for (const std::string& v : bundle.fiber(b).names()) {
            names.push_back(base.vertices()[b] + ":" + v);
            out.base_of.push_back(b);
        }
    }
    std::vector<Simplex> simplices;
    for (int b = 0; b < base.vertex_count(); ++b) {
        const SimplicialComplex& f = bundle.fiber(b);
        for (int d = 0; d <= f.dimension(); ++d)
            for (const Simplex& s : f.simplices(d))
                simplices.push_back(out.embed(b, s));
    }
    for (int e = 0; e < base.edge_count(); ++e) {
        const BaseEdge& be = base.edges()[e];
        const Transport& t = bundle.edge_transport(e);
        if (!is_isomorphism(t.map))
            throw NotConstructibleError("total space: transport of edge '" + be.id +
                                        "' is not a simplicial isomorphism");
        for (int v = 0; v < bundle.fiber(be.src).vertex_count(); ++v)
            if (t.inverse(t.map(v)) != v)
                throw NotConstructibleError("total space: designated inverse of edge '" + be.id +
                                            "' is not the inverse isomorphism");
        const SimplicialComplex& f = bundle.fiber(be.src);
        for (int d = 0; d <= f.dimension(); ++d)
            for (const Simplex& s : f.simplices(d))
                for (std::size_t i = 0; i < s.size(); ++i) {
                    Simplex prism;
                    for (std::size_t j = 0; j <= i; ++j)
                        prism.push_back(out.vertex(be.src, s[j]));
                    for (std::size_t j = i; j < s.size(); ++j)
                        prism.push_back(out.vertex(be.dst, t.map(s[j])));
                    std::sort(prism.begin(), prism.end());
                    simplices.push_back(std::move(prism));
                }
        std::vector<VertexWalk> tracks;
        for (int v = 0; v < f.vertex_count(); ++v)
            tracks.push_back({out.vertex(be.src, v), out.vertex(be.dst, t.map(v))});
        out.tracks.push_back(std::move(tracks));
    }
    out.complex = std::make_shared<const SimplicialComplex>(build_complex(std::move(names), simplices));
    return out;
}

SimplicialMap total_map(const BundleSelfMapPair& pair, const TotalSpace& total)
{
    const DiscreteBundle& bundle = pair.bundle();
    const GraphBase& base = pair.base();
    const SimplicialComplex& e = *total.complex;
    const std::vector<int>& fbar = pair.base_images();

    if (const auto& given = pair.supplied_total_map()) {
        if (!(given->source() == e) || !(given->target() == e))
            throw InputError("total map: not a self-map of the total space");
        for (int x = 0; x < e.vertex_count(); ++x) {
            const int b = total.base_of[x];
            const int y = (*given)(x);
            if (total.base_of[y] != fbar[b])
                throw InputError("total map: p f != fbar p at '" + e.vertex_name(x) + "'");
            if (total.fiber_vertex(y) != pair.fiber_map(b)(total.fiber_vertex(x)))
                throw InputError("total map: disagrees with the fiber map at '" + e.vertex_name(x) + "'");
        }
        return SimplicialMap(total.complex, total.complex, given->vertex_images(), given->edge_walks());
    }

    for (int k = 0; k < base.edge_count(); ++k) {
        const BaseEdge& be = base.edges()[k];
        SimplicialMap around = transport(bundle, pair.edge_word(k), fbar[be.src]);
        const Transport& t = bundle.edge_transport(k);
        for (int v = 0; v < bundle.fiber(be.src).vertex_count(); ++v)
            if (around(pair.fiber_map(be.src)(v)) != pair.fiber_map(be.dst)(t.map(v)))
                throw NotConstructibleError("total map: over edge '" + be.id +
                                            "' the fiber maps do not commute with transport at '" +
                                            bundle.fiber(be.src).vertex_name(v) + "'");
    }

    std::vector<int> images(e.vertex_count());
    for (int x = 0; x < e.vertex_count(); ++x) {
        const int b = total.base_of[x];
        images[x] = total.vertex(fbar[b], pair.fiber_map(b)(total.fiber_vertex(x)));
    }
    std::map<Index, VertexWalk> walks;
    for (Index i = 0; i < e.count(1); ++i) {
        const Simplex& s = e.simplex(1, i);
        const int bx = total.base_of[s[0]], by = total.base_of[s[1]];
        if (bx == by) {
            const SimplicialComplex& f = bundle.fiber(bx);
            Index fe = f.edge_index(total.fiber_vertex(s[0]), total.fiber_vertex(s[1]));
            walks[i] = shorten_walk(e, total.embed(fbar[bx], pair.fiber_map(bx).edge_walk(fe)));
            continue;
        }
        const int k = base.edge_between(bx, by);
        const BaseEdge& be = base.edges()[k];
        const Transport& t = bundle.edge_transport(k);
        const int a = be.src == bx ? s[0] : s[1];
        const int c = be.src == bx ? s[1] : s[0];
        const int u = total.fiber_vertex(a);
        const int v = t.inverse(total.fiber_vertex(c));
        const SimplicialMap& fs = pair.fiber_map(be.src);
        VertexWalk vertical{fs(u)};
        if (u != v)
            vertical = fs.edge_walk(bundle.fiber(be.src).edge_index(u, v));
        VertexWalk w = join_walks(total.embed(fbar[be.src], vertical),
                                  total.lift(bundle, pair.edge_word(k), fbar[be.src], fs(v)));
        walks[i] = shorten_walk(e, a == s[0] ? w : reverse_walk(w));
    }
    return SimplicialMap(total.complex, total.complex, std::move(images), std::move(walks));
}

} // namespace fixpt
