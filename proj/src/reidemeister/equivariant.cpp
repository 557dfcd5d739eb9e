#include "fixpt/reidemeister/equivariant.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>

namespace fixpt {

EquivariantChainComplex::EquivariantChainComplex(Group group, std::vector<Index> ranks,
                                                 std::vector<GroupRingMatrix> boundaries)
    : group_(std::move(group)), ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    if (boundaries_.size() != ranks_.size())
        throw InputError("equivariant complex: expected one boundary slot per degree");
    for (int d = 1; d <= top_degree(); ++d)
        if (boundaries_[d].rows() != ranks_[d - 1] || boundaries_[d].cols() != ranks_[d])
            throw InputError("equivariant complex: boundary d_" + std::to_string(d) + " has the wrong shape");
    for (int d = 1; d < top_degree(); ++d)
        if (!multiply(group_, boundaries_[d], boundaries_[d + 1]).is_zero())
            throw InputError("equivariant complex: d_" + std::to_string(d) + " d_" + std::to_string(d + 1) +
                             " is not zero");
}

Index EquivariantChainComplex::basis_index(int d, Index simplex) const
{
    if (d < 0 || d >= static_cast<int>(basis_.size()))
        return -1;
    auto it = basis_[d].find(simplex);
    return it == basis_[d].end() ? -1 : it->second;
}

EquivariantChainComplex lift_to_universal_cover(const Pi1Presentation& p)
{
    const Group& g = p.group();
    const SimplicialComplex& k = p.complex();
    int top = 0;
    for (int d = 0; d <= k.dimension(); ++d)
        for (const Simplex& s : k.simplices(d))
            if (p.in_component(s[0]))
                top = d;
    std::vector<std::vector<Index>> cells(top + 1);
    std::vector<std::map<Index, Index>> basis(top + 1);
    for (int d = 0; d <= top; ++d)
        for (Index i = 0; i < k.count(d); ++i)
            if (p.in_component(k.simplex(d, i)[0])) {
                basis[d][i] = static_cast<Index>(cells[d].size());
                cells[d].push_back(i);
            }
    std::vector<Index> ranks;
    std::vector<GroupRingMatrix> boundaries;
    for (int d = 0; d <= top; ++d) {
        ranks.push_back(static_cast<Index>(cells[d].size()));
        if (d == 0) {
            boundaries.emplace_back(0, ranks[0]);
            continue;
        }
        GroupRingMatrix b(static_cast<Index>(cells[d - 1].size()), static_cast<Index>(cells[d].size()));
        for (std::size_t j = 0; j < cells[d].size(); ++j) {
            const Simplex& s = k.simplex(d, cells[d][j]);
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                Index row = basis[d - 1].at(k.find(face));
                GroupElement x = i == 0 ? g.inverse(p.epsilon(s[0], s[1])) : g.identity();
                b(row, static_cast<Index>(j)).add(x, i % 2 == 0 ? 1 : -1);
            }
        }
        boundaries.push_back(std::move(b));
    }
    EquivariantChainComplex out(g, std::move(ranks), std::move(boundaries));
    out.cells_ = std::move(cells);
    out.basis_ = std::move(basis);
    return out;
}

TwistedChainMap::TwistedChainMap(std::shared_ptr<const EquivariantChainComplex> complex, GroupEndomorphism phi,
                                 std::vector<GroupRingMatrix> components)
    : complex_(std::move(complex)), phi_(std::move(phi)), components_(std::move(components))
{
    const EquivariantChainComplex& c = *complex_;
    if (!(phi_.source() == c.group()) || !(phi_.target() == c.group()))
        throw InputError("twisted chain map: endomorphism is not over the complex's group");
    if (static_cast<int>(components_.size()) != c.top_degree() + 1)
        throw InputError("twisted chain map: expected one component per degree");
    for (int d = 0; d <= c.top_degree(); ++d)
        if (components_[d].rows() != c.rank(d) || components_[d].cols() != c.rank(d))
            throw InputError("twisted chain map: component " + std::to_string(d) + " has the wrong shape");
    const Group& g = c.group();
    for (int d = 1; d <= c.top_degree(); ++d) {
        GroupRingMatrix lhs = multiply(g, c.boundary(d), components_[d]);
        GroupRingMatrix rhs = multiply(g, components_[d - 1], apply(phi_, c.boundary(d)));
        if (!(lhs == rhs))
            throw InputError("twisted chain map: twisted commutation fails in degree " + std::to_string(d) +
                             " (inconsistent basepath?)");
    }
}

TwistedChainMap lift_map(const SimplicialMap& f, const VertexWalk& basepath, const Pi1Presentation& p,
                         std::shared_ptr<const EquivariantChainComplex> lifted)
{
    if (!f.is_endomorphism())
        throw InputError("lift_map: not a self-map");
    const SimplicialComplex& k = p.complex();
    const Group& g = p.group();
    VertexWalk beta = checked_basepath(f, p, basepath);
    GroupEndomorphism phi = induced_pi1_endo(f, p, beta);
    const EquivariantChainComplex& c = *lifted;

    // translate over f(v) at the end of beta . f(p_v)
    const int n = k.vertex_count();
    std::vector<GroupElement> start(n);
    for (int v : p.component()) {
        VertexWalk w = join_walks(beta, f.image_walk(p.tree_path(v)));
        start[v] = p.walk_element(join_walks(p.tree_path(f(v)), reverse_walk(w)));
    }

    std::vector<GroupRingMatrix> comps;
    for (int d = 0; d <= c.top_degree(); ++d) {
        GroupRingMatrix m(c.rank(d), c.rank(d));
        for (Index j = 0; j < c.rank(d); ++j) {
            const Index sidx = c.cells()[d][j];
            const Simplex& s = k.simplex(d, sidx);
            const GroupElement& h0 = start[s[0]];
            if (d == 1 && !f.simplicial_on(1, sidx)) {
                for (const auto& [cell, coeff] : lift_walk(p, f.edge_walk(sidx), h0))
                    m(c.basis_index(1, cell.first), j).add(cell.second, coeff);
                continue;
            }
            if (f.simplicial_on(d, sidx)) {
                std::vector<int> image;
                for (int v : s)
                    image.push_back(f(v));
                int sign = sorting_sign(image);
                if (sign == 0)
                    continue;
                std::sort(image.begin(), image.end());
                GroupElement h = h0;
                if (f(s[0]) != image[0])
                    h = g.multiply(g.inverse(p.epsilon(f(s[0]), image[0])), h0);
                m(c.basis_index(d, k.find(image)), j).add(h, sign);
                continue;
            }
            if (d != 2)
                throw NotConstructibleError("map is not simplicial on a " + std::to_string(d) + "-simplex");
            for (const auto& [cell, coeff] : image_fill(f, p, sidx))
                m(c.basis_index(2, cell.first), j).add(g.multiply(cell.second, h0), coeff);
        }
        comps.push_back(std::move(m));
    }
    return TwistedChainMap(std::move(lifted), std::move(phi), std::move(comps));
}

} // namespace fixpt
