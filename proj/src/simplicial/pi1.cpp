#include "fixpt/simplicial/pi1.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fixpt {

std::string to_string(Pi1Class c)
{
    switch (c) {
    case Pi1Class::FreeAbelian:
        return "FreeAbelian";
    case Pi1Class::Free:
        return "Free";
    case Pi1Class::Finite:
        return "Finite";
    case Pi1Class::Unsupported:
        return "Unsupported";
    }
    return "";
}

VertexWalk reverse_walk(VertexWalk w)
{
    std::reverse(w.begin(), w.end());
    return w;
}

VertexWalk reduce_walk(const VertexWalk& w)
{
    VertexWalk out;
    for (int v : w) {
        if (!out.empty() && out.back() == v)
            continue;
        if (out.size() >= 2 && out[out.size() - 2] == v) {
            out.pop_back();
            continue;
        }
        out.push_back(v);
    }
    return out;
}

VertexWalk shorten_walk(const SimplicialComplex& k, const VertexWalk& w)
{
    VertexWalk out;
    for (int v : reduce_walk(w)) {
        while (out.size() >= 2) {
            const int a = out[out.size() - 2];
            if (a == v) {
                out.pop_back();
                out.pop_back();
                continue;
            }
            Simplex t{a, out.back(), v};
            std::sort(t.begin(), t.end());
            if (!k.contains(t))
                break;
            out.pop_back();
        }
        if (out.empty() || out.back() != v)
            out.push_back(v);
    }
    return out;
}

VertexWalk join_walks(const VertexWalk& a, const VertexWalk& b)
{
    if (a.empty())
        return reduce_walk(b);
    if (b.empty())
        return reduce_walk(a);
    if (a.back() != b.front())
        throw InputError("join_walks: walks do not meet");
    VertexWalk out = a;
    out.insert(out.end(), b.begin() + 1, b.end());
    return reduce_walk(out);
}

namespace {

// ---------------------------------------------------------------------------
// Tietze elimination

int letter_gen(std::int64_t l) { return static_cast<int>((l > 0 ? l : -l) - 1); }

Word substitute(const Word& w, int gen, const Word& value)
{
    Word out;
    Word inv = inverse_word(value);
    for (auto l : w) {
        if (letter_gen(l) != gen)
            out.push_back(l);
        else
            out.insert(out.end(), (l > 0 ? value : inv).begin(), (l > 0 ? value : inv).end());
    }
    return reduce_word(out);
}

// Least rotation of w or its inverse; identifies relators up to cyclic order and inversion.
Word relator_key(const Word& w)
{
    Word best;
    bool have = false;
    for (const Word& base : {w, inverse_word(w)})
        for (std::size_t r = 0; r < base.size(); ++r) {
            Word rot(base.begin() + r, base.end());
            rot.insert(rot.end(), base.begin(), base.begin() + r);
            if (!have || GroupElement{rot} < GroupElement{best}) {
                best = rot;
                have = true;
            }
        }
    return best;
}

struct TietzeResult {
    std::vector<int> surviving;
    std::vector<Word> relators;     // over original generator letters
    std::vector<Word> substitution; // per original generator, over surviving letters
};

TietzeResult tietze(int gens, std::vector<Word> relators)
{
    TietzeResult t;
    std::vector<bool> alive(gens, true);
    for (int j = 0; j < gens; ++j)
        t.substitution.push_back(Word{j + 1});
    auto normalize = [](std::vector<Word>& rels) {
        std::set<Word> seen;
        std::vector<Word> out;
        for (Word& r : rels) {
            r = cyclic_reduce(r);
            if (r.empty())
                continue;
            Word key = relator_key(r);
            if (seen.insert(key).second)
                out.push_back(std::move(key));
        }
        std::stable_sort(out.begin(), out.end(),
                         [](const Word& a, const Word& b) { return a.size() < b.size(); });
        rels = std::move(out);
    };
    normalize(relators);
    for (;;) {
        bool eliminated = false;
        for (std::size_t ri = 0; ri < relators.size() && !eliminated; ++ri) {
            const Word& r = relators[ri];
            std::map<int, int> occurrences;
            for (auto l : r)
                ++occurrences[letter_gen(l)];
            for (std::size_t pos = 0; pos < r.size(); ++pos) {
                int g = letter_gen(r[pos]);
                if (occurrences[g] != 1)
                    continue;
                // r rotated to start at pos reads x^s rest = 1
                Word rest(r.begin() + pos + 1, r.end());
                rest.insert(rest.end(), r.begin(), r.begin() + pos);
                Word value = r[pos] > 0 ? inverse_word(rest) : rest;
                std::vector<Word> next;
                for (std::size_t k = 0; k < relators.size(); ++k)
                    if (k != ri)
                        next.push_back(substitute(relators[k], g, value));
                for (auto& s : t.substitution)
                    s = substitute(s, g, value);
                alive[g] = false;
                relators = std::move(next);
                normalize(relators);
                eliminated = true;
                break;
            }
        }
        if (!eliminated)
            break;
    }
    for (int j = 0; j < gens; ++j)
        if (alive[j])
            t.surviving.push_back(j);
    t.relators = std::move(relators);
    return t;
}

Word remap(const Word& w, const std::map<int, int>& index)
{
    Word out;
    for (auto l : w) {
        int k = index.at(letter_gen(l));
        out.push_back(l > 0 ? k + 1 : -(k + 1));
    }
    return out;
}

bool commutator_form(const std::vector<Word>& relators, int n)
{
    std::set<std::pair<int, int>> pairs;
    for (const Word& r : relators) {
        std::vector<std::int64_t> sums(n, 0);
        for (auto l : r)
            sums[letter_gen(l)] += l > 0 ? 1 : -1;
        for (auto s : sums)
            if (s != 0)
                return false;
        if (r.size() == 4) {
            std::set<int> gens;
            for (auto l : r)
                gens.insert(letter_gen(l));
            if (gens.size() == 2)
                pairs.emplace(*gens.begin(), *gens.rbegin());
        }
    }
    return static_cast<int>(pairs.size()) == n * (n - 1) / 2;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter coset enumeration over the trivial subgroup (HLT with coincidences)

class CosetEnumeration {
public:
    CosetEnumeration(int gens, std::vector<Word> relators, int limit)
        : cols_(2 * gens), relators_(std::move(relators)), limit_(limit)
    {
    }

    bool run()
    {
        new_coset();
        for (int c = 0; c < static_cast<int>(table_.size()); ++c) {
            for (const Word& r : relators_) {
                if (!live(c))
                    break;
                scan_and_fill(c, r);
                if (overflow_)
                    return false;
            }
            for (int x = 0; x < cols_ && live(c); ++x)
                if (table_[c][x] < 0) {
                    define(c, x);
                    if (overflow_)
                        return false;
                }
        }
        return true;
    }

    // Group of live cosets with the generator elements; coset 0 is the identity.
    Group group() const
    {
        std::vector<int> number(table_.size(), -1);
        int n = 0;
        for (int c = 0; c < static_cast<int>(table_.size()); ++c)
            if (live(c))
                number[c] = n++;
        std::vector<std::vector<int>> act(n, std::vector<int>(cols_));
        for (int c = 0; c < static_cast<int>(table_.size()); ++c)
            if (live(c))
                for (int x = 0; x < cols_; ++x)
                    act[number[c]][x] = number[table_[c][x]];
        // words of cosets, then a * b = a acted on by the word of b
        std::vector<std::vector<int>> words(n);
        std::vector<bool> seen(n, false);
        std::deque<int> queue{0};
        seen[0] = true;
        while (!queue.empty()) {
            int a = queue.front();
            queue.pop_front();
            for (int x = 0; x < cols_; ++x) {
                int b = act[a][x];
                if (!seen[b]) {
                    seen[b] = true;
                    words[b] = words[a];
                    words[b].push_back(x);
                    queue.push_back(b);
                }
            }
        }
        std::vector<std::vector<int>> table(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int c = a;
                for (int x : words[b])
                    c = act[c][x];
                table[a][b] = c;
            }
        std::vector<int> generators;
        for (int i = 0; i < cols_ / 2; ++i)
            generators.push_back(act[0][2 * i]);
        return Group::finite(std::move(table), std::move(generators));
    }

private:
    int cols_;
    std::vector<Word> relators_;
    int limit_;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
    std::deque<int> dead_queue_;
    int defined_ = 0;
    bool overflow_ = false;

    static int column(std::int64_t l) { return 2 * letter_gen(l) + (l > 0 ? 0 : 1); }
    static int inv(int x) { return x ^ 1; }
    bool live(int c) const { return parent_[c] == c; }

    int new_coset()
    {
        table_.emplace_back(cols_, -1);
        parent_.push_back(static_cast<int>(parent_.size()));
        if (++defined_ > limit_)
            overflow_ = true;
        return static_cast<int>(table_.size()) - 1;
    }

    void define(int c, int x)
    {
        int d = new_coset();
        table_[c][x] = d;
        table_[d][inv(x)] = c;
    }

    int rep(int c)
    {
        int r = c;
        while (parent_[r] != r)
            r = parent_[r];
        while (parent_[c] != r) {
            int next = parent_[c];
            parent_[c] = r;
            c = next;
        }
        return r;
    }

    void merge(int k, int l)
    {
        int a = rep(k), b = rep(l);
        if (a == b)
            return;
        int lo = std::min(a, b), hi = std::max(a, b);
        parent_[hi] = lo;
        dead_queue_.push_back(hi);
    }

    void coincidence(int a, int b)
    {
        merge(a, b);
        while (!dead_queue_.empty()) {
            int e = dead_queue_.front();
            dead_queue_.pop_front();
            for (int x = 0; x < cols_; ++x) {
                int f = table_[e][x];
                if (f < 0)
                    continue;
                if (table_[f][inv(x)] == e)
                    table_[f][inv(x)] = -1;
                int e1 = rep(e), f1 = rep(f);
                if (table_[e1][x] >= 0)
                    merge(f1, table_[e1][x]);
                else if (table_[f1][inv(x)] >= 0)
                    merge(e1, table_[f1][inv(x)]);
                else {
                    table_[e1][x] = f1;
                    table_[f1][inv(x)] = e1;
                }
            }
        }
    }

    void scan_and_fill(int c, const Word& w)
    {
        int f = c, b = c;
        int i = 0, j = static_cast<int>(w.size()) - 1;
        for (;;) {
            while (i <= j && table_[f][column(w[i])] >= 0)
                f = table_[f][column(w[i++])];
            if (i > j) {
                if (f != b)
                    coincidence(f, b);
                return;
            }
            while (j >= i && table_[b][inv(column(w[j]))] >= 0)
                b = table_[b][inv(column(w[j--]))];
            if (j < i) {
                coincidence(f, b);
                return;
            }
            if (i == j) {
                table_[f][column(w[i])] = b;
                table_[b][inv(column(w[i]))] = f;
                return;
            }
            define(f, column(w[i]));
            if (overflow_)
                return;
        }
    }
};

constexpr int coset_limit = 5000;

} // namespace

// ---------------------------------------------------------------------------

const Group& Pi1Presentation::group() const
{
    if (class_ == Pi1Class::Unsupported)
        throw UnsupportedError("fundamental group at vertex '" + complex_->vertex_name(basepoint_) +
                               "' is not in a supported class");
    return group_;
}

const VertexWalk& Pi1Presentation::tree_path(int v) const
{
    if (v < 0 || v >= complex_->vertex_count() || !in_component_[v])
        throw InputError("vertex is outside the basepoint component");
    return tree_paths_[v];
}

VertexWalk Pi1Presentation::generator_loop(int j) const
{
    const Simplex& e = complex_->simplex(1, generators_.at(j));
    VertexWalk w = tree_path(e[0]);
    w.push_back(e[1]);
    return join_walks(w, reverse_walk(tree_path(e[1])));
}

GroupElement Pi1Presentation::epsilon(int a, int b) const
{
    Index e = complex_->edge_index(a, b);
    if (e < 0)
        throw InputError("walk step " + complex_->vertex_name(a) + " -> " + complex_->vertex_name(b) +
                         " is not an edge");
    if (!in_component_[a])
        throw InputError("walk leaves the basepoint component");
    auto it = generator_of_edge_.find(e);
    if (it == generator_of_edge_.end())
        return group().identity();
    const GroupElement& g = generator_images_[it->second];
    return a < b ? g : group_.inverse(g);
}

GroupElement Pi1Presentation::walk_element(const VertexWalk& w) const
{
    GroupElement out = group().identity();
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] != w[i + 1])
            out = group_.multiply(out, epsilon(w[i], w[i + 1]));
    return out;
}

VertexWalk Pi1Presentation::walk_of_element(const GroupElement& g) const
{
    group().check(g);
    VertexWalk walk{basepoint_};
    for (auto l : group_.word_of(g)) {
        int original = surviving_.at(letter_gen(l));
        VertexWalk loop = generator_loop(original);
        walk = join_walks(walk, l > 0 ? loop : reverse_walk(loop));
    }
    return walk;
}

Pi1Presentation pi1_presentation(std::shared_ptr<const SimplicialComplex> k, int basepoint,
                                 const std::optional<std::vector<Index>>& tree_edges)
{
    if (basepoint < 0 || basepoint >= k->vertex_count())
        throw InputError("basepoint out of range");
    Pi1Presentation p;
    p.complex_ = k;
    p.basepoint_ = basepoint;
    const int n = k->vertex_count();
    std::vector<int> label = k->component_of();
    p.in_component_.assign(n, false);
    for (int v = 0; v < n; ++v)
        if (label[v] == label[basepoint]) {
            p.in_component_[v] = true;
            p.component_.push_back(v);
        }

    // spanning tree and tree paths
    std::set<Index> tree;
    p.tree_paths_.assign(n, {});
    if (tree_edges) {
        for (Index e : *tree_edges) {
            if (e < 0 || e >= k->count(1))
                throw InputError("tree edge out of range");
            if (!p.in_component_[k->simplex(1, e)[0]])
                throw InputError("tree edge outside the basepoint component");
            tree.insert(e);
        }
        if (tree.size() + 1 != p.component_.size())
            throw InputError("supplied tree does not have |V|-1 edges");
    }
    std::vector<bool> seen(n, false);
    std::deque<int> queue{basepoint};
    seen[basepoint] = true;
    p.tree_paths_[basepoint] = {basepoint};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : k->neighbors(v)) {
            if (seen[w])
                continue;
            Index e = k->edge_index(v, w);
            if (tree_edges && !tree.count(e))
                continue;
            seen[w] = true;
            if (!tree_edges)
                tree.insert(e);
            p.tree_paths_[w] = p.tree_paths_[v];
            p.tree_paths_[w].push_back(w);
            queue.push_back(w);
        }
    }
    for (int v : p.component_)
        if (!seen[v])
            throw InputError("supplied tree does not span the basepoint component");
    p.tree_.assign(tree.begin(), tree.end());

    for (Index e = 0; e < k->count(1); ++e)
        if (p.in_component_[k->simplex(1, e)[0]] && !tree.count(e)) {
            p.generator_of_edge_[e] = static_cast<int>(p.generators_.size());
            p.generators_.push_back(e);
        }
    const int gens = static_cast<int>(p.generators_.size());

    auto letter = [&](int a, int b) -> std::int64_t {
        auto it = p.generator_of_edge_.find(k->edge_index(a, b));
        if (it == p.generator_of_edge_.end())
            return 0;
        return a < b ? it->second + 1 : -(it->second + 1);
    };
    for (const Simplex& t : k->simplices(2)) {
        if (!p.in_component_[t[0]])
            continue;
        Word w;
        for (auto [a, b] : {std::pair{t[0], t[1]}, std::pair{t[1], t[2]}, std::pair{t[2], t[0]}})
            if (auto l = letter(a, b))
                w.push_back(l);
        w = cyclic_reduce(w);
        if (!w.empty())
            p.relators_.push_back(w);
    }

    if (k->dimension() <= 1 || p.relators_.empty()) {
        p.class_ = Pi1Class::Free;
        p.group_ = Group::free(gens);
        for (int j = 0; j < gens; ++j) {
            p.surviving_.push_back(j);
            p.generator_images_.push_back(p.group_.generator(j));
        }
        return p;
    }

    TietzeResult t = tietze(gens, p.relators_);
    std::map<int, int> index;
    for (std::size_t i = 0; i < t.surviving.size(); ++i)
        index[t.surviving[i]] = static_cast<int>(i);
    const int m = static_cast<int>(t.surviving.size());
    std::vector<Word> rels;
    for (const Word& r : t.relators)
        rels.push_back(remap(r, index));
    p.surviving_ = t.surviving;

    if (rels.empty()) {
        p.class_ = Pi1Class::Free;
        p.group_ = Group::free(m);
    }
    else if (commutator_form(rels, m)) {
        p.class_ = Pi1Class::FreeAbelian;
        p.group_ = Group::free_abelian(m);
    }
    else {
        CosetEnumeration enumeration(m, rels, coset_limit);
        if (!enumeration.run()) {
            p.class_ = Pi1Class::Unsupported;
            return p;
        }
        p.class_ = Pi1Class::Finite;
        p.group_ = enumeration.group();
    }
    for (int j = 0; j < gens; ++j)
        p.generator_images_.push_back(p.group_.from_word(remap(t.substitution[j], index)));
    return p;
}

// ---------------------------------------------------------------------------
// Universal cover helpers

LiftedChain lift_walk(const Pi1Presentation& p, const VertexWalk& w, const GroupElement& start, GroupElement* end)
{
    const Group& g = p.group();
    const SimplicialComplex& k = p.complex();
    LiftedChain chain;
    GroupElement h = start;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        int a = w[i], b = w[i + 1];
        if (a == b)
            continue;
        GroupElement next = g.multiply(g.inverse(p.epsilon(a, b)), h);
        Index e = k.edge_index(a, b);
        if (a < b)
            chain[{e, h}] += 1;
        else
            chain[{e, next}] -= 1;
        h = next;
    }
    for (auto it = chain.begin(); it != chain.end();)
        it = it->second == 0 ? chain.erase(it) : std::next(it);
    if (end)
        *end = h;
    return chain;
}

LiftedChain universal_fill(const Pi1Presentation& p, const VertexWalk& closed_walk)
{
    if (p.recognized_class() != Pi1Class::FreeAbelian)
        throw NotConstructibleError("cannot fill a 2-cell image: fundamental group is not free abelian");
    const Group& g = p.group();
    const SimplicialComplex& k = p.complex();
    const int n = g.rank();

    // pseudo-surface check on the component
    std::vector<int> incidence(k.count(1), 0);
    for (const Simplex& t : k.simplices(2))
        if (p.in_component(t[0]))
            for (auto [a, b] : {std::pair{t[1], t[2]}, std::pair{t[0], t[2]}, std::pair{t[0], t[1]}})
                ++incidence[k.edge_index(a, b)];
    for (Index e = 0; e < k.count(1); ++e)
        if (p.in_component(k.simplex(1, e)[0]) && incidence[e] != 2)
            throw NotConstructibleError("cannot fill a 2-cell image: target is not a closed pseudo-surface");
    if (k.dimension() > 2)
        throw NotConstructibleError("cannot fill a 2-cell image: target has cells above dimension 2");

    GroupElement end;
    LiftedChain z = lift_walk(p, closed_walk, g.identity(), &end);
    if (!g.is_identity(end))
        throw NotConstructibleError("image of a 2-simplex boundary is not null-homotopic");
    if (z.empty())
        return {};

    // bounding box of translates
    std::int64_t margin = 2;
    std::vector<const Simplex*> triangles;
    std::vector<Index> triangle_index;
    for (Index t = 0; t < k.count(2); ++t) {
        const Simplex& s = k.simplex(2, t);
        if (!p.in_component(s[0]))
            continue;
        triangles.push_back(&s);
        triangle_index.push_back(t);
        for (auto x : p.epsilon(s[0], s[1]).data)
            margin = std::max<std::int64_t>(margin, 2 + (x < 0 ? -x : x));
    }
    std::vector<std::int64_t> lo = z.begin()->first.second.data, hi = lo;
    for (const auto& [cell, c] : z)
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], cell.second.data[i]);
            hi[i] = std::max(hi[i], cell.second.data[i]);
        }
    std::size_t volume = 1;
    for (int i = 0; i < n; ++i) {
        lo[i] -= margin;
        hi[i] += margin;
        volume *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
        if (volume > 4000000)
            throw NotConstructibleError("2-cell fill region too large");
    }
    std::vector<GroupElement> box;
    for (std::size_t idx = 0; idx < volume; ++idx) {
        std::size_t r = idx;
        GroupElement x = g.identity();
        for (int i = 0; i < n; ++i) {
            std::size_t w = static_cast<std::size_t>(hi[i] - lo[i] + 1);
            x.data[i] = lo[i] + static_cast<std::int64_t>(r % w);
            r /= w;
        }
        box.push_back(std::move(x));
    }
    auto on_rim = [&](const GroupElement& x) {
        for (int i = 0; i < n; ++i)
            if (x.data[i] == lo[i] || x.data[i] == hi[i])
                return true;
        return false;
    };

    // lifted triangle ids and edge incidences
    struct Incidence {
        std::size_t cell;
        int sign;
    };
    std::map<LiftedCell, std::vector<Incidence>> edges;
    std::vector<LiftedCell> cells;
    for (std::size_t ti = 0; ti < triangles.size(); ++ti) {
        const Simplex& s = *triangles[ti];
        GroupElement shift = g.inverse(p.epsilon(s[0], s[1]));
        for (const GroupElement& x : box) {
            std::size_t id = cells.size();
            cells.emplace_back(triangle_index[ti], x);
            edges[{k.edge_index(s[1], s[2]), g.multiply(shift, x)}].push_back({id, 1});
            edges[{k.edge_index(s[0], s[2]), x}].push_back({id, -1});
            edges[{k.edge_index(s[0], s[1]), x}].push_back({id, 1});
        }
    }
    for (const auto& [cell, c] : z)
        if (!edges.count(cell))
            throw NotConstructibleError("2-cell fill region too small");

    std::vector<std::optional<Integer>> value(cells.size());
    for (std::size_t id = 0; id < cells.size(); ++id)
        if (on_rim(cells[id].second))
            value[id] = Integer(0);
    auto target = [&](const LiftedCell& e) {
        auto it = z.find(e);
        return it == z.end() ? Integer(0) : it->second;
    };
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& [e, inc] : edges) {
            if (inc.size() != 2)
                continue;
            const Incidence& a = inc[0];
            const Incidence& b = inc[1];
            if (value[a.cell].has_value() == value[b.cell].has_value())
                continue;
            const Incidence& known = value[a.cell] ? a : b;
            const Incidence& unknown = value[a.cell] ? b : a;
            value[unknown.cell] = (target(e) - known.sign * *value[known.cell]) * unknown.sign;
            progress = true;
        }
    }
    LiftedChain fill;
    for (std::size_t id = 0; id < cells.size(); ++id) {
        if (!value[id])
            throw NotConstructibleError("2-cell fill did not propagate");
        if (*value[id] != 0)
            fill[cells[id]] = *value[id];
    }
    for (const auto& [e, inc] : edges) {
        Integer sum = 0;
        for (const Incidence& i : inc)
            sum += i.sign * *value[i.cell];
        if (sum != target(e))
            throw NotConstructibleError("2-cell fill is inconsistent");
    }
    return fill;
}

} // namespace fixpt
