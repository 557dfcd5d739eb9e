#include "doctest.h"

#include "../support.hpp"

using namespace fixpt;

namespace {

std::shared_ptr<const SimplicialComplex> two_points()
{
    return std::make_shared<const SimplicialComplex>(build_complex(std::vector<std::string>{"x", "y"}, {}));
}

GraphBase triangle_base()
{
    return GraphBase({"b0", "b1", "b2"}, {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 0, 2}}, {0, 1}, 0);
}

/// Double cover of a triangle: the edge e2 swaps the two sheets.
DiscreteBundle double_cover()
{
    const auto f = two_points();
    const SimplicialMap id(f, f, {0, 1});
    const SimplicialMap swap(f, f, {1, 0});
    return DiscreteBundle(triangle_base(), {f, f, f}, {{id, id}, {id, id}, {swap, swap}});
}

std::vector<std::string> labels(const VerificationReport& r)
{
    std::vector<std::string> out;
    for (const auto& row : r.rows)
        out.push_back(row.label);
    return out;
}

} // namespace

TEST_CASE("graph base validation")
{
    CHECK_NOTHROW(triangle_base());
    CHECK_THROWS_AS(GraphBase({"b0", "b1"}, {{"e0", 0, 0}}, {}, 0), InputError);
    CHECK_THROWS_AS(GraphBase({"b0", "b1"}, {{"e0", 0, 1}, {"e1", 1, 0}}, {0}, 0), InputError);
    CHECK_THROWS_AS(GraphBase({"b0", "b1", "b2"}, {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 0, 2}}, {0}, 0), InputError);
    CHECK_THROWS_AS(GraphBase({"b0", "b1", "b2"}, {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 0, 2}}, {0, 1, 2}, 0),
                    InputError);
    const GraphBase b = triangle_base();
    CHECK(b.edge_position("e2") == 2);
    CHECK(b.vertex_position("b9") == -1);
    CHECK(b.presentation(0).group().describe() == "Free(1)");
}

TEST_CASE("edge words and walks")
{
    const GraphBase b = triangle_base();
    const EdgeWord w{{0, true}, {1, true}, {2, false}};
    CHECK(b.walk_of_word(w, 0) == VertexWalk{0, 1, 2, 0});
    CHECK(b.word_of_walk({0, 1, 2, 0}) == w);
    CHECK(reverse_word(w) == EdgeWord{{2, true}, {1, false}, {0, false}});
    CHECK_THROWS_AS(b.walk_of_word(w, 1), InputError);
}

TEST_CASE("transports must be fiber isomorphisms")
{
    const auto f = two_points();
    const SimplicialMap id(f, f, {0, 1});
    const SimplicialMap squash(f, f, {0, 0});
    CHECK_THROWS_AS(DiscreteBundle(triangle_base(), {f, f, f}, {{id, id}, {id, id}, {squash, squash}}), InputError);
    CHECK_THROWS_AS(DiscreteBundle(triangle_base(), {f, f}, {{id, id}, {id, id}, {id, id}}), InputError);
}

TEST_CASE("transport along a loop is the monodromy")
{
    const DiscreteBundle bundle = double_cover();
    const EdgeWord loop{{0, true}, {1, true}, {2, false}};
    CHECK(transport(bundle, loop, 0).vertex_images() == std::vector<int>{1, 0});
    CHECK(transport(bundle, {{0, true}, {0, false}}, 0).vertex_images() == std::vector<int>{0, 1});
}

TEST_CASE("total space of the double cover is a hexagon")
{
    const TotalSpace t = total_space(double_cover());
    CHECK(t.complex->vertex_count() == 6);
    CHECK(t.complex->count(1) == 6);
    CHECK(t.complex->components().size() == 1);
    CHECK(homology(chain_complex(*t.complex)).betti_numbers() == std::vector<Index>{1, 1});
    CHECK(t.base_of == std::vector<int>{0, 0, 1, 1, 2, 2});
}

TEST_CASE("double cover over the reflection")
{
    const auto e = catalog::make("double_cover_reflection");
    const auto& pair = *e.pair;
    CHECK(compatibility_violations(pair).empty());

    const auto comps = base_components(pair);
    const auto classes = base_twisted_classes(pair, comps);
    CHECK(classes.complete);
    REQUIRE(classes.classes.size() == 2);
    CHECK(refined_L(pair, classes.classes[0]) == 2);
    CHECK(refined_L(pair, classes.classes[1]) == 0);

    const auto l = verify_lefschetz_mult(pair);
    CHECK(l.verdict == Verdict::Pass);
    CHECK(l.lhs == "2");
    CHECK(l.rhs == "1*2 + 1*0 = 2");
    REQUIRE(l.rows.size() == 2);
    CHECK(l.rows[0].index == 1);
    CHECK(*l.rows[0].lefschetz == 2);
    CHECK(l.rows[1].index == 1);
    CHECK(*l.rows[1].lefschetz == 0);

    const auto r = verify_reidemeister_mult(pair);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.diff.empty());

    const auto n = nielsen_additivity(pair);
    CHECK(n.verdict == Verdict::Pass);
}

TEST_CASE("corrupted transport fails compatibility")
{
    const auto e = catalog::make("double_cover_corrupted");
    CHECK_FALSE(compatibility_violations(*e.pair).empty());
    const auto l = verify_lefschetz_mult(*e.pair);
    CHECK(l.verdict == Verdict::Fail);
    CHECK_FALSE(l.diff.empty());
}

TEST_CASE("trivial products split as products")
{
    for (const auto& [d1, d2] : std::vector<std::pair<int, int>>{{2, 3}, {-1, 2}, {0, -2}}) {
        const auto e = catalog::make("trivial_product:" + std::to_string(d1) + "," + std::to_string(d2));
        CAPTURE(d1);
        CAPTURE(d2);
        const auto l = verify_lefschetz_mult(*e.pair);
        CHECK(l.verdict == Verdict::Pass);
        CHECK(l.lhs == to_string(Integer((1 - d1) * (1 - d2))));
        CHECK(l.rows.size() == static_cast<std::size_t>(std::abs(1 - d1)));
        CHECK(verify_reidemeister_mult(*e.pair).verdict == Verdict::Pass);
    }
}

TEST_CASE("euler characteristic of identity pairs")
{
    for (const std::string name : {"trivial_product:1,1", "two_component_base"}) {
        const auto e = catalog::make(name);
        CAPTURE(name);
        const TotalSpace t = total_space(e.pair->bundle());
        const auto l = verify_lefschetz_mult(*e.pair);
        CHECK(l.verdict == Verdict::Pass);
        CHECK(l.lhs == to_string(t.complex->euler_characteristic()));
    }
}

TEST_CASE("point fibers reduce to the base map")
{
    const auto e = catalog::make("point_fiber");
    const auto l = verify_lefschetz_mult(*e.pair);
    CHECK(l.verdict == Verdict::Pass);
    CHECK(l.lhs == to_string(lefschetz_number(e.pair->base_map())));
    CHECK(verify_reidemeister_mult(*e.pair).verdict == Verdict::Pass);
}

TEST_CASE("fixed point free rotation has no essential classes")
{
    const auto e = catalog::make("fixed_point_free_rotation");
    const auto n = nielsen_additivity(*e.pair);
    CHECK(n.verdict == Verdict::Pass);
    CHECK(n.lhs == "0");
    CHECK(verify_lefschetz_mult(*e.pair).lhs == "0");
}

TEST_CASE("non-abelian total space is unsupported")
{
    const auto e = catalog::make("klein_bundle");
    CHECK(verify_lefschetz_mult(*e.pair).verdict == Verdict::Pass);
    CHECK_THROWS_AS(verify_reidemeister_mult(*e.pair), UnsupportedError);
}

TEST_CASE("row labels list classes in canonical order")
{
    const auto e = catalog::make("trivial_product:3,2");
    const auto l = verify_lefschetz_mult(*e.pair);
    CHECK(labels(l).size() == 2);
    CHECK(labels(l)[0].find("[e]") != std::string::npos);
}
