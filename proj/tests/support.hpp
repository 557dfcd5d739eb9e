#ifndef FIXPT_TESTS_SUPPORT_HPP
#define FIXPT_TESTS_SUPPORT_HPP

#include "fixpt/bundles/verify.hpp"
#include "fixpt/cli/catalog.hpp"
#include "fixpt/errors.hpp"
#include "fixpt/grouprings/shadow.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>

namespace fixpt::testing {

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr catalog_complex(const std::string& name) { return catalog::make(name).complex; }

/// Complexes the random suites draw from: every catalog complex kind plus two total spaces.
inline std::vector<ComplexPtr> sample_complexes()
{
    return {catalog_complex("circle:3"),          catalog_complex("circle:5"),
            catalog_complex("figure_eight"),      catalog_complex("torus7"),
            catalog_complex("rp2"),               catalog_complex("torus_linear"),
            catalog_complex("point"),             catalog_complex("double_cover_reflection"),
            catalog_complex("trivial_product:1,1"), catalog_complex("two_component_base")};
}

/**
 * Random simplicial self-map by backtracking over vertex images in random
 * order; every simplex whose vertices are assigned must land on a simplex.
 * Falls back to a constant map if the search budget runs out.
 */
inline SimplicialMap random_simplicial_map(const ComplexPtr& k, std::mt19937& rng)
{
    const int n = k->vertex_count();
    std::vector<std::vector<Simplex>> closing(n); // simplices whose largest vertex is v
    for (int d = 1; d <= k->dimension(); ++d)
        for (const Simplex& s : k->simplices(d))
            closing[s.back()].push_back(s);
    std::vector<int> images(n, -1);
    long budget = 20000;

    auto fits = [&](int v) {
        for (const Simplex& s : closing[v]) {
            Simplex img;
            for (int x : s)
                img.push_back(images[x]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (!k->contains(img))
                return false;
        }
        return true;
    };
    std::function<bool(int)> assign = [&](int v) {
        if (v == n)
            return true;
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        for (int c : order) {
            if (--budget < 0)
                return false;
            images[v] = c;
            if (fits(v) && assign(v + 1))
                return true;
        }
        images[v] = -1;
        return false;
    };
    if (!assign(0))
        images.assign(n, std::uniform_int_distribution<int>(0, n - 1)(rng));
    return SimplicialMap(k, k, images);
}

inline Group cyclic_group(int n)
{
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return Group::finite(t, {n > 1 ? 1 : 0});
}

/// Symmetric group on three letters; permutations in lexicographic order, 0 the identity.
inline Group s3()
{
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    auto index = [&](const std::array<int, 3>& q) {
        return static_cast<int>(std::find(perms.begin(), perms.end(), q) - perms.begin());
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i)
                c[i] = perms[a][perms[b][i]];
            t[a][b] = index(c);
        }
    return Group::finite(t, {index({1, 0, 2}), index({1, 2, 0})});
}

inline GroupElement random_element(const Group& g, std::mt19937& rng, int span = 2)
{
    if (g.kind() == GroupKind::Finite)
        return GroupElement{{std::uniform_int_distribution<std::int64_t>(0, g.order() - 1)(rng)}};
    if (g.kind() == GroupKind::FreeAbelian) {
        std::vector<std::int64_t> v(g.rank());
        for (auto& x : v)
            x = std::uniform_int_distribution<std::int64_t>(-span, span)(rng);
        return vector_element(v);
    }
    Word w;
    const int len = std::uniform_int_distribution<int>(0, span + 1)(rng);
    for (int i = 0; i < len; ++i) {
        const std::int64_t letter = std::uniform_int_distribution<std::int64_t>(1, g.rank())(rng);
        w.push_back(rng() % 2 ? letter : -letter);
    }
    return g.from_word(w);
}

/// Random endomorphism: free abelian via a random matrix, finite by rejection sampling.
inline GroupEndomorphism random_endomorphism(const Group& g, std::mt19937& rng)
{
    if (g.kind() == GroupKind::FreeAbelian) {
        IntMatrix a(g.rank(), g.rank());
        for (Index i = 0; i < a.rows(); ++i)
            for (Index j = 0; j < a.cols(); ++j)
                a(i, j) = std::uniform_int_distribution<int>(-2, 2)(rng);
        return GroupHomomorphism::from_matrix(g, a);
    }
    for (;;) {
        std::vector<GroupElement> images;
        for (int i = 0; i < g.rank(); ++i)
            images.push_back(random_element(g, rng));
        try {
            return GroupHomomorphism(g, g, images);
        } catch (const InputError&) {
        }
    }
}

inline GroupRingMatrix random_group_ring_matrix(const Group& g, Index rows, Index cols, std::mt19937& rng)
{
    GroupRingMatrix m(rows, cols);
    for (Index i = 0; i < rows; ++i)
        for (Index j = 0; j < cols; ++j) {
            const int terms = std::uniform_int_distribution<int>(0, 2)(rng);
            for (int t = 0; t < terms; ++t)
                m(i, j).add(random_element(g, rng), std::uniform_int_distribution<int>(-3, 3)(rng));
        }
    return m;
}

} // namespace fixpt::testing

#endif
