#include "doctest.h"

#include "../support.hpp"

using namespace fixpt;

namespace {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<int>> rows)
{
    IntMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
    Index i = 0;
    for (const auto& r : rows) {
        Index j = 0;
        for (int x : r)
            m(i, j++) = x;
        ++i;
    }
    return m;
}

std::vector<Integer> torsion(const HomologySummary& h, int d) { return h.degrees.at(d).torsion; }

} // namespace

TEST_CASE("smith normal form of a textbook matrix")
{
    const IntMatrix a = int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    const auto s = smith_normal_form(a);
    CHECK(s.invariant_factors() == std::vector<Integer>{2, 6, 12});
    CHECK(product(product(s.U, a), s.V) == s.S);
    CHECK(product(s.U, s.U_inv) == identity_matrix<Integer>(3));
    CHECK(product(s.V_inv, s.V) == identity_matrix<Integer>(3));
    CHECK(determinant(a) == -144);
}

TEST_CASE("smith normal form of rank-deficient and empty matrices")
{
    const IntMatrix a = int_matrix({{1, 2, 3}, {2, 4, 6}});
    CHECK(smith_normal_form(a).rank == 1);
    CHECK(matrix_rank(IntMatrix(0, 4)) == 0);
    CHECK(rational_rank(zero_matrix<Integer>(3, 2)) == 0);
}

TEST_CASE("determinant by exact elimination")
{
    CHECK(determinant(int_matrix({{2, 1}, {1, 1}})) == 1);
    CHECK(determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
    CHECK(determinant(IntMatrix(0, 0)) == 1);
}

TEST_CASE("chain complex rejects d d != 0")
{
    IntMatrix d1 = int_matrix({{1}});
    IntMatrix d2 = int_matrix({{1}});
    CHECK_THROWS_AS(ChainComplex({1, 1, 1}, {IntMatrix(0, 1), d1, d2}), InputError);
    CHECK_NOTHROW(ChainComplex({1, 1, 1}, {IntMatrix(0, 1), d1, zero_matrix<Integer>(1, 1)}));
}

TEST_CASE("integral homology of catalog complexes")
{
    auto betti = [](const std::string& name) {
        return homology(chain_complex(*testing::catalog_complex(name))).betti_numbers();
    };
    CHECK(betti("point") == std::vector<Index>{1});
    CHECK(betti("circle:3") == std::vector<Index>{1, 1});
    CHECK(betti("figure_eight") == std::vector<Index>{1, 2});
    CHECK(betti("torus7") == std::vector<Index>{1, 2, 1});
    CHECK(betti("rp2") == std::vector<Index>{1, 0, 0});
    CHECK(betti("two_component_base")[0] == 2);

    const auto rp2 = homology(chain_complex(*testing::catalog_complex("rp2")));
    CHECK(torsion(rp2, 1) == std::vector<Integer>{2});
    CHECK(torsion(rp2, 2).empty());
}

TEST_CASE("chain map must commute with boundaries")
{
    auto c = std::make_shared<const ChainComplex>(chain_complex(*testing::catalog_complex("circle:3")));
    std::vector<IntMatrix> bad{identity_matrix<Integer>(3), zero_matrix<Integer>(3, 3)};
    bad[1](0, 0) = 1;
    CHECK_THROWS_AS(ChainMap(c, c, bad), InputError);
    CHECK_NOTHROW(ChainMap(c, c, {identity_matrix<Integer>(3), identity_matrix<Integer>(3)}));
}

TEST_CASE("hopf trace and homology trace agree on catalog maps")
{
    for (const std::string name : {"circle_reflection", "circle_degree_map:3", "circle_degree_map:-2", "torus_linear"}) {
        const auto e = catalog::make(name);
        const ChainMap f = induced_chain_map(e.map->map);
        CAPTURE(name);
        CHECK(hopf_chain_trace(f) == lefschetz_from_homology(f));
        CHECK(hopf_chain_trace(f) == *e.oracle.lefschetz);
    }
}

TEST_CASE("tensor product of chain complexes")
{
    auto a = std::make_shared<const ChainComplex>(chain_complex(*testing::catalog_complex("circle:3")));
    auto b = std::make_shared<const ChainComplex>(chain_complex(*testing::catalog_complex("rp2")));
    const ChainComplex t = tensor_complex(*a, *b);
    CHECK(t.ranks() == std::vector<Index>{18, 63, 75, 30});
    CHECK(t.euler_characteristic() == 0);
    // Kunneth: H(S^1 x RP^2) has H_1 = Z + Z/2, H_2 = Z/2.
    const auto h = homology(t);
    CHECK(h.betti_numbers() == std::vector<Index>{1, 1, 0, 0});
    CHECK(torsion(h, 1) == std::vector<Integer>{2});
    CHECK(torsion(h, 2) == std::vector<Integer>{2});

    const auto refl = catalog::make("circle_reflection");
    const ChainMap f = induced_chain_map(refl.map->map);
    const ChainMap id = ChainMap(f.source_ptr(), f.source_ptr(),
                                 {identity_matrix<Integer>(f.source().rank(0)),
                                  identity_matrix<Integer>(f.source().rank(1))});
    const ChainMap ff = tensor_chain_map(f, id);
    CHECK(hopf_chain_trace(ff) == 0);
    CHECK(hopf_chain_trace(tensor_chain_map(f, f)) == 4);
}

TEST_CASE("chain homotopic maps induce equal homology")
{
    const auto e = catalog::make("circle_degree_map:2");
    const ChainMap f = induced_chain_map(e.map->map);
    CHECK(induce_equal_homology(f, f));
    const auto r = catalog::make("circle_reflection");
    if (r.complex->vertex_count() == e.complex->vertex_count())
        CHECK_FALSE(induce_equal_homology(f, induced_chain_map(r.map->map)));
}
