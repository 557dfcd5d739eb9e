#include "doctest.h"

#include "../support.hpp"

using namespace fixpt;

namespace {

std::shared_ptr<const SimplicialComplex> share(SimplicialComplex k)
{
    return std::make_shared<const SimplicialComplex>(std::move(k));
}

} // namespace

TEST_CASE("build_complex closes under faces and sorts simplices")
{
    const auto k = build_complex(4, {{2, 0, 1}, {3, 2}});
    CHECK(k.count(0) == 4);
    CHECK(k.count(1) == 4);
    CHECK(k.count(2) == 1);
    CHECK(k.contains({0, 2}));
    CHECK(k.contains({2, 3}));
    CHECK_FALSE(k.contains({0, 3}));
    CHECK(k.euler_characteristic() == 1);
    CHECK(k.maximal_simplices().size() == 2);
}

TEST_CASE("build_complex rejects bad input")
{
    CHECK_THROWS_AS(build_complex(3, {{0, 5}}), InputError);
    CHECK_THROWS_AS(build_complex(3, {{0, 0, 1}}), InputError);
    CHECK_THROWS_AS(build_complex(std::vector<std::string>{"a", "a"}, {}), InputError);
}

TEST_CASE("euler characteristic and components")
{
    CHECK(testing::catalog_complex("torus7")->euler_characteristic() == 0);
    CHECK(testing::catalog_complex("rp2")->euler_characteristic() == 1);
    CHECK(testing::catalog_complex("figure_eight")->euler_characteristic() == -1);
    CHECK(testing::catalog_complex("two_component_base")->components().size() == 2);
    const auto e = catalog::make("trivial_product:1,1");
    CHECK(e.complex->euler_characteristic() == 0);
}

TEST_CASE("product complex multiplies euler characteristics")
{
    const auto a = testing::catalog_complex("rp2");
    const auto b = testing::catalog_complex("figure_eight");
    const auto p = product_complex(*a, *b);
    CHECK(p.euler_characteristic() == a->euler_characteristic() * b->euler_characteristic());
    CHECK(p.dimension() == 3);
    const auto h = homology(chain_complex(p)).betti_numbers();
    CHECK(h == std::vector<Index>{1, 2, 0, 0});
}

TEST_CASE("fundamental group recognition")
{
    auto cls = [](const std::string& name) {
        return pi1_presentation(testing::catalog_complex(name), 0);
    };
    const auto circle = cls("circle:4");
    CHECK(circle.recognized_class() == Pi1Class::Free);
    CHECK(circle.group().describe() == "Free(1)");
    CHECK(cls("torus7").group().describe() == "FreeAbelian(2)");
    CHECK(cls("figure_eight").group().describe() == "Free(2)");
    CHECK(cls("rp2").group().describe() == "Finite(2)");
    CHECK(cls("point").group().describe() == "Free(0)");
    CHECK(cls("torus7").relators().size() >= 1);
}

TEST_CASE("walk classes in the circle")
{
    const auto k = testing::catalog_complex("circle:4");
    const auto p = pi1_presentation(k, 0);
    const Group& g = p.group();
    const GroupElement once = p.walk_element({0, 1, 2, 3, 0});
    CHECK_FALSE(g.is_identity(once));
    CHECK(p.walk_element({0, 3, 2, 1, 0}) == g.inverse(once));
    CHECK(g.is_identity(p.walk_element({0, 1, 2, 1, 0})));
    CHECK(p.walk_element({0, 1, 2, 3, 0, 1, 2, 3, 0}) == g.multiply(once, once));
    CHECK(p.walk_element(p.walk_of_element(once)) == once);
    for (int v = 0; v < 4; ++v) {
        CHECK(p.tree_path(v).front() == 0);
        CHECK(p.tree_path(v).back() == v);
    }
}

TEST_CASE("walk reduction and shortening")
{
    CHECK(reduce_walk({0, 1, 0, 2, 3, 2}) == VertexWalk{0, 2});
    CHECK(reverse_walk({0, 1, 2}) == VertexWalk{2, 1, 0});
    CHECK(join_walks({0, 1}, {1, 2}) == VertexWalk{0, 1, 2});

    const auto filled = build_complex(3, {{0, 1, 2}});
    CHECK(shorten_walk(filled, {0, 1, 2}) == VertexWalk{0, 2});
    CHECK(shorten_walk(filled, {0, 1, 2, 0}) == VertexWalk{0});
    const auto hollow = build_complex(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(shorten_walk(hollow, {0, 1, 2}) == VertexWalk{0, 1, 2});
}

TEST_CASE("simplicial maps")
{
    const auto k = share(build_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    CHECK_THROWS_AS(SimplicialMap(k, k, {0, 2, 0, 2}), InputError);
    CHECK_THROWS_AS(SimplicialMap(k, k, {0, 1, 2}), InputError);

    const SimplicialMap rot(k, k, {1, 2, 3, 0});
    CHECK(lefschetz_number(rot) == 0);
    const SimplicialMap flip(k, k, {0, 3, 2, 1});
    CHECK(lefschetz_number(flip) == 2);
    CHECK(lefschetz_number(compose(flip, flip)) == 0);
    CHECK(compose(flip, flip).vertex_images() == std::vector<int>{0, 1, 2, 3});
    CHECK(lefschetz_number(SimplicialMap(k, k, {0, 0, 0, 0})) == 1);
    CHECK(lefschetz_number(identity_map(k)) == 0);
}

TEST_CASE("edge walks realize degree maps")
{
    for (int d : {-2, -1, 0, 2, 3}) {
        const auto e = catalog::make("circle_degree_map:" + std::to_string(d));
        CAPTURE(d);
        CHECK(lefschetz_number(e.map->map) == 1 - d);
    }
}

TEST_CASE("induced endomorphism on the fundamental group")
{
    const auto e = catalog::make("torus_linear");
    const auto p = pi1_presentation(e.complex, 0);
    const auto phi = induced_pi1_endo(e.map->map, p, p.tree_path(e.map->map(0)));
    CHECK(determinant(phi.matrix()) == 1);
    const auto r = catalog::make("circle_reflection");
    const auto q = pi1_presentation(r.complex, 0);
    const auto psi = induced_pi1_endo(r.map->map, q, q.tree_path(r.map->map(0)));
    CHECK(psi.matrix()(0, 0) == -1);
}

TEST_CASE("basepaths are validated")
{
    const auto k = share(build_complex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    const SimplicialMap rot(k, k, {1, 2, 3, 0});
    const auto p = pi1_presentation(k, 0);
    CHECK_THROWS_AS(checked_basepath(rot, p, {}), InputError);
    CHECK_THROWS_AS(checked_basepath(rot, p, {0, 2}), InputError);
    CHECK_THROWS_AS(checked_basepath(rot, p, {1, 0}), InputError);
    CHECK(checked_basepath(rot, p, {0, 3, 0, 1}) == VertexWalk{0, 1});
}
