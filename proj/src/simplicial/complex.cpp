#include "fixpt/simplicial/complex.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace fixpt {

int SimplicialComplex::vertex_index(const std::string& name) const
{
    auto it = lookup_.find(name);
    return it == lookup_.end() ? -1 : it->second;
}

Index SimplicialComplex::count(int dim) const
{
    if (dim < 0 || dim > dimension())
        return 0;
    return static_cast<Index>(simplices_[dim].size());
}

const std::vector<Simplex>& SimplicialComplex::simplices(int dim) const
{
    static const std::vector<Simplex> empty;
    if (dim < 0 || dim > dimension())
        return empty;
    return simplices_[dim];
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const
{
    // maximal iff not a codimension-one face of anything
    std::set<Simplex> covered;
    for (int d = 1; d <= dimension(); ++d)
        for (const Simplex& s : simplices_[d])
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                covered.insert(std::move(face));
            }
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d)
        for (const Simplex& s : simplices_[d])
            if (!covered.count(s))
                out.push_back(s);
    std::sort(out.begin(), out.end());
    return out;
}

Index SimplicialComplex::find(const Simplex& s) const
{
    const int d = static_cast<int>(s.size()) - 1;
    if (d < 0 || d > dimension())
        return -1;
    auto it = index_[d].find(s);
    return it == index_[d].end() ? -1 : it->second;
}

bool SimplicialComplex::adjacent(int u, int v) const
{
    const auto& nb = neighbors_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

Index SimplicialComplex::edge_index(int u, int v) const
{
    return find(u < v ? Simplex{u, v} : Simplex{v, u});
}

Integer SimplicialComplex::euler_characteristic() const
{
    Integer chi = 0;
    for (int d = 0; d <= dimension(); ++d)
        chi += (d % 2 == 0 ? 1 : -1) * Integer(count(d));
    return chi;
}

std::vector<int> SimplicialComplex::component_of() const
{
    const int n = vertex_count();
    std::vector<int> label(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (label[s] >= 0)
            continue;
        std::vector<int> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : neighbors_[v])
                if (label[w] < 0) {
                    label[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return label;
}

std::vector<std::vector<int>> SimplicialComplex::components() const
{
    std::vector<int> label = component_of();
    int k = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    std::vector<std::vector<int>> out(k);
    for (int v = 0; v < vertex_count(); ++v)
        out[label[v]].push_back(v);
    return out;
}

SimplicialComplex SimplicialComplex::induced_subcomplex(const std::vector<int>& vertices) const
{
    std::vector<int> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    std::map<int, int> relabel;
    std::vector<std::string> names;
    for (int v : sorted) {
        relabel[v] = static_cast<int>(names.size());
        names.push_back(names_.at(v));
    }
    std::vector<Simplex> kept;
    for (const Simplex& s : maximal_simplices()) {
        Simplex t;
        for (int v : s) {
            auto it = relabel.find(v);
            if (it != relabel.end())
                t.push_back(it->second);
        }
        if (!t.empty())
            kept.push_back(t);
    }
    return build_complex(std::move(names), kept);
}

SimplicialComplex build_complex(std::vector<std::string> names, const std::vector<Simplex>& simplices)
{
    SimplicialComplex k;
    const int n = static_cast<int>(names.size());
    for (int i = 0; i < n; ++i)
        if (!k.lookup_.emplace(names[i], i).second)
            throw InputError("duplicate vertex id '" + names[i] + "'");
    k.names_ = std::move(names);

    std::vector<std::set<Simplex>> by_dim(n > 0 ? 1 : 0);
    for (int v = 0; v < n; ++v)
        by_dim[0].insert(Simplex{v});
    for (Simplex s : simplices) {
        std::sort(s.begin(), s.end());
        if (s.empty())
            throw InputError("empty simplex");
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InputError("simplex with a repeated vertex");
        if (s.front() < 0 || s.back() >= n)
            throw InputError("simplex refers to an unknown vertex");
        const int top = static_cast<int>(s.size()) - 1;
        if (static_cast<int>(by_dim.size()) <= top)
            by_dim.resize(top + 1);
        if (s.size() > 20)
            throw InputError("simplex dimension too large");
        // all nonempty subsets
        const unsigned full = 1u << s.size();
        for (unsigned mask = 1; mask < full; ++mask) {
            Simplex face;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (mask & (1u << i))
                    face.push_back(s[i]);
            by_dim[face.size() - 1].insert(std::move(face));
        }
    }
    k.simplices_.resize(by_dim.size());
    k.index_.resize(by_dim.size());
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        k.simplices_[d].assign(by_dim[d].begin(), by_dim[d].end());
        for (std::size_t i = 0; i < k.simplices_[d].size(); ++i)
            k.index_[d].emplace(k.simplices_[d][i], static_cast<Index>(i));
    }
    k.neighbors_.assign(n, {});
    if (k.simplices_.size() > 1)
        for (const Simplex& e : k.simplices_[1]) {
            k.neighbors_[e[0]].push_back(e[1]);
            k.neighbors_[e[1]].push_back(e[0]);
        }
    for (auto& nb : k.neighbors_)
        std::sort(nb.begin(), nb.end());
    return k;
}

SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& simplices)
{
    std::vector<std::string> names;
    for (int i = 0; i < vertex_count; ++i)
        names.push_back(std::to_string(i));
    return build_complex(std::move(names), simplices);
}

ChainComplex chain_complex(const SimplicialComplex& k)
{
    const int top = k.dimension();
    std::vector<Index> ranks;
    std::vector<IntMatrix> boundaries;
    for (int d = 0; d <= top; ++d) {
        ranks.push_back(k.count(d));
        if (d == 0) {
            boundaries.emplace_back(0, k.count(0));
            continue;
        }
        IntMatrix b = zero_matrix<Integer>(k.count(d - 1), k.count(d));
        for (Index j = 0; j < k.count(d); ++j) {
            const Simplex& s = k.simplex(d, j);
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex face = s;
                face.erase(face.begin() + i);
                b(k.find(face), j) += (i % 2 == 0 ? 1 : -1);
            }
        }
        boundaries.push_back(std::move(b));
    }
    return ChainComplex(std::move(ranks), std::move(boundaries));
}

int sorting_sign(std::vector<int> xs)
{
    int sign = 1;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] == xs[j])
                return 0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j + 1 < xs.size() - i; ++j) {
            if (xs[j] > xs[j + 1]) {
                std::swap(xs[j], xs[j + 1]);
                sign = -sign;
            }
        }
    return sign;
}

namespace {

// Monotone lattice paths from (0,0) to (p,q), as sequences of grid points.
void staircases(int p, int q, std::vector<std::pair<int, int>>& path,
                std::vector<std::vector<std::pair<int, int>>>& out)
{
    auto [i, j] = path.back();
    if (i == p && j == q) {
        out.push_back(path);
        return;
    }
    if (i < p) {
        path.emplace_back(i + 1, j);
        staircases(p, q, path, out);
        path.pop_back();
    }
    if (j < q) {
        path.emplace_back(i, j + 1);
        staircases(p, q, path, out);
        path.pop_back();
    }
}

} // namespace

SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l)
{
    const int nl = l.vertex_count();
    std::vector<std::string> names;
    for (int a = 0; a < k.vertex_count(); ++a)
        for (int b = 0; b < nl; ++b)
            names.push_back(k.vertex_name(a) + "|" + l.vertex_name(b));
    std::vector<Simplex> cells;
    for (const Simplex& s : k.maximal_simplices())
        for (const Simplex& t : l.maximal_simplices()) {
            std::vector<std::vector<std::pair<int, int>>> paths;
            std::vector<std::pair<int, int>> start{{0, 0}};
            staircases(static_cast<int>(s.size()) - 1, static_cast<int>(t.size()) - 1, start, paths);
            for (const auto& path : paths) {
                Simplex cell;
                for (auto [i, j] : path)
                    cell.push_back(s[i] * nl + t[j]);
                cells.push_back(std::move(cell));
            }
        }
    return build_complex(std::move(names), cells);
}

} // namespace fixpt
