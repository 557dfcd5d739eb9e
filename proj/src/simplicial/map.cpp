#include "fixpt/simplicial/map.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <set>

namespace fixpt {

namespace {

bool trivial_walk(const VertexWalk& w) { return w.size() <= 2; }

std::string edge_name(const SimplicialComplex& k, const Simplex& e)
{
    return "(" + k.vertex_name(e[0]) + "," + k.vertex_name(e[1]) + ")";
}

} // namespace

SimplicialMap::SimplicialMap(std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, std::vector<int> vertex_images,
                             std::map<Index, VertexWalk> edge_walks)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(vertex_images))
{
    if (static_cast<int>(images_.size()) != source_->vertex_count())
        throw InputError("map: vertex image count does not match the source");
    for (int v : images_)
        if (v < 0 || v >= target_->vertex_count())
            throw InputError("map: vertex image out of range");
    const bool cellular = !edge_walks.empty();
    for (auto& [e, w] : edge_walks) {
        if (e < 0 || e >= source_->count(1))
            throw InputError("map: edge walk for an unknown edge");
        const Simplex& s = source_->simplex(1, e);
        if (w.empty() || w.front() != images_[s[0]] || w.back() != images_[s[1]])
            throw InputError("map: walk for edge " + edge_name(*source_, s) + " has wrong endpoints");
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] == w[i + 1] || !target_->adjacent(w[i], w[i + 1]))
                throw InputError("map: walk for edge " + edge_name(*source_, s) + " is not an edge path");
        if (!trivial_walk(w))
            walks_[e] = w;
    }
    for (Index e = 0; e < source_->count(1); ++e) {
        if (walks_.count(e))
            continue;
        const Simplex& s = source_->simplex(1, e);
        int a = images_[s[0]], b = images_[s[1]];
        if (a != b && !target_->adjacent(a, b))
            throw InputError("map is not simplicial: edge " + edge_name(*source_, s) + " goes to a non-edge");
    }
    if (!cellular)
        for (int d = 2; d <= source_->dimension(); ++d)
            for (Index i = 0; i < source_->count(d); ++i)
                if (!simplicial_on(d, i))
                    throw InputError("map is not simplicial on a " + std::to_string(d) + "-simplex");
}

VertexWalk SimplicialMap::edge_walk(Index e) const
{
    auto it = walks_.find(e);
    if (it != walks_.end())
        return it->second;
    const Simplex& s = source_->simplex(1, e);
    int a = images_[s[0]], b = images_[s[1]];
    return a == b ? VertexWalk{a} : VertexWalk{a, b};
}

VertexWalk SimplicialMap::image_walk(const VertexWalk& w) const
{
    if (w.empty())
        return {};
    VertexWalk out{images_.at(w[0])};
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i], b = w[i + 1];
        if (a == b)
            continue;
        Index e = source_->edge_index(a, b);
        if (e < 0)
            throw InputError("image_walk: step is not an edge");
        VertexWalk step = edge_walk(e);
        if (a > b)
            step = reverse_walk(step);
        out = join_walks(out, step);
    }
    return out;
}

bool SimplicialMap::simplicial_on(int dim, Index idx) const
{
    const Simplex& s = source_->simplex(dim, idx);
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (walks_.count(source_->edge_index(s[i], s[j])))
                return false;
    std::set<int> image;
    for (int v : s)
        image.insert(images_[v]);
    return target_->contains(Simplex(image.begin(), image.end()));
}

SimplicialMap identity_map(std::shared_ptr<const SimplicialComplex> k)
{
    std::vector<int> images(k->vertex_count());
    for (int v = 0; v < k->vertex_count(); ++v)
        images[v] = v;
    return SimplicialMap(k, k, std::move(images));
}

SimplicialMap compose(const SimplicialMap& g, const SimplicialMap& f)
{
    if (!(f.target() == g.source()))
        throw InputError("compose: maps are not composable");
    std::vector<int> images;
    for (int v : f.vertex_images())
        images.push_back(g(v));
    std::map<Index, VertexWalk> walks;
    if (!f.is_simplicial() || !g.is_simplicial()) {
        for (Index e = 0; e < f.source().count(1); ++e)
            walks[e] = g.image_walk(f.edge_walk(e));
        // a composite that is simplicial everywhere stays a plain simplicial map
        bool all_trivial = true;
        for (auto& [e, w] : walks)
            all_trivial = all_trivial && trivial_walk(w);
        if (all_trivial) {
            bool simplicial = true;
            SimplicialMap probe(f.source_ptr(), g.target_ptr(), images, walks);
            for (int d = 2; d <= f.source().dimension() && simplicial; ++d)
                for (Index i = 0; i < f.source().count(d) && simplicial; ++i)
                    simplicial = probe.simplicial_on(d, i);
            if (simplicial)
                walks.clear();
        }
    }
    return SimplicialMap(f.source_ptr(), g.target_ptr(), std::move(images), std::move(walks));
}

VertexWalk checked_basepath(const SimplicialMap& f, const Pi1Presentation& p, const VertexWalk& basepath)
{
    const int x0 = p.basepoint();
    const int fx0 = f(x0);
    if (basepath.empty()) {
        if (fx0 != x0)
            throw InputError("basepath required: the map moves the basepoint '" + p.complex().vertex_name(x0) + "'");
        return {x0};
    }
    if (basepath.front() != x0 || basepath.back() != fx0)
        throw InputError("basepath must run from the basepoint to its image");
    for (std::size_t i = 0; i + 1 < basepath.size(); ++i)
        if (basepath[i] != basepath[i + 1] && !p.complex().adjacent(basepath[i], basepath[i + 1]))
            throw InputError("basepath step " + p.complex().vertex_name(basepath[i]) + " -> " +
                             p.complex().vertex_name(basepath[i + 1]) + " is not an edge");
    return reduce_walk(basepath);
}

GroupEndomorphism induced_pi1_endo(const SimplicialMap& f, const Pi1Presentation& p, const VertexWalk& basepath)
{
    if (!f.is_endomorphism())
        throw InputError("induced_pi1_endo: not a self-map");
    VertexWalk beta = checked_basepath(f, p, basepath);
    const Group& g = p.group();
    std::vector<GroupElement> images;
    for (int k = 0; k < g.rank(); ++k) {
        VertexWalk loop = f.image_walk(p.generator_loop(p.surviving()[k]));
        VertexWalk conj = join_walks(join_walks(beta, loop), reverse_walk(beta));
        images.push_back(p.walk_element(conj));
    }
    return GroupEndomorphism(g, g, std::move(images));
}

Pi1Presentation fill_presentation(std::shared_ptr<const SimplicialComplex> k, int vertex)
{
    std::vector<int> label = k->component_of();
    int base = vertex;
    for (int v = 0; v < k->vertex_count(); ++v)
        if (label[v] == label[vertex]) {
            base = v;
            break;
        }
    return pi1_presentation(std::move(k), base);
}

LiftedChain image_fill(const SimplicialMap& f, const Pi1Presentation& p, Index s)
{
    const Simplex& t = f.source().simplex(2, s);
    VertexWalk loop = f.image_walk({t[0], t[1], t[2], t[0]});
    if (loop.size() <= 1)
        return {};
    return universal_fill(p, loop);
}

ChainMap induced_chain_map(const SimplicialMap& f, std::shared_ptr<const ChainComplex> source,
                           std::shared_ptr<const ChainComplex> target)
{
    const SimplicialComplex& k = f.source();
    const SimplicialComplex& l = f.target();
    std::vector<IntMatrix> comps;
    std::map<int, Pi1Presentation> presentations; // by target component label
    std::vector<int> label = l.component_of();
    for (int d = 0; d <= k.dimension(); ++d) {
        IntMatrix m = zero_matrix<Integer>(l.count(d), k.count(d));
        for (Index j = 0; j < k.count(d); ++j) {
            const Simplex& s = k.simplex(d, j);
            if (d == 1 && !f.simplicial_on(1, j)) {
                VertexWalk w = f.edge_walk(j);
                for (std::size_t i = 0; i + 1 < w.size(); ++i)
                    m(l.edge_index(w[i], w[i + 1]), j) += w[i] < w[i + 1] ? 1 : -1;
                continue;
            }
            if (f.simplicial_on(d, j)) {
                std::vector<int> image;
                for (int v : s)
                    image.push_back(f(v));
                int sign = sorting_sign(image);
                if (sign == 0)
                    continue;
                std::sort(image.begin(), image.end());
                m(l.find(image), j) += sign;
                continue;
            }
            if (d != 2)
                throw NotConstructibleError("map is not simplicial on a " + std::to_string(d) +
                                            "-simplex and only 2-cells can be filled");
            int c = label[f(s[0])];
            auto it = presentations.find(c);
            if (it == presentations.end())
                it = presentations.emplace(c, fill_presentation(f.target_ptr(), f(s[0]))).first;
            for (const auto& [cell, coeff] : image_fill(f, it->second, j))
                m(cell.first, j) += coeff;
        }
        comps.push_back(std::move(m));
    }
    return ChainMap(std::move(source), std::move(target), std::move(comps));
}

ChainMap induced_chain_map(const SimplicialMap& f)
{
    auto source = std::make_shared<const ChainComplex>(chain_complex(f.source()));
    auto target = f.source_ptr() == f.target_ptr() ? source
                                                    : std::make_shared<const ChainComplex>(chain_complex(f.target()));
    return induced_chain_map(f, source, target);
}

Integer lefschetz_number(const SimplicialMap& f)
{
    if (!f.is_endomorphism())
        throw InputError("lefschetz_number: not a self-map");
    return lefschetz_from_homology(induced_chain_map(f));
}

} // namespace fixpt
