#include "doctest.h"

#include "../support.hpp"

using namespace fixpt;

namespace {

ReidemeisterTrace trace_of(const catalog::Entry& e, int depth = TwistedConjugacy::default_depth)
{
    std::map<int, VertexWalk> paths;
    if (!e.map->basepath.empty())
        paths[e.map->basepath.front()] = e.map->basepath;
    return reidemeister_trace(e.map->map, paths, depth);
}

} // namespace

TEST_CASE("universal cover lift of the circle")
{
    const auto p = pi1_presentation(testing::catalog_complex("circle:4"), 0);
    const auto lifted = lift_to_universal_cover(p);
    CHECK(lifted.rank(0) == 4);
    CHECK(lifted.rank(1) == 4);
    // Augmenting the equivariant boundary recovers the cellular one.
    CHECK(augment(lifted.boundary(1)) == chain_complex(p.complex()).boundary(1));
    // Exactly one edge crosses the fundamental domain.
    int crossing = 0;
    for (Index i = 0; i < lifted.boundary(1).rows(); ++i)
        for (Index j = 0; j < lifted.boundary(1).cols(); ++j)
            for (const auto& [g, c] : lifted.boundary(1)(i, j).terms())
                crossing += !p.group().is_identity(g);
    CHECK(crossing == 1);
}

TEST_CASE("universal cover lift respects d d = 0")
{
    for (const std::string name : {"torus7", "rp2", "figure_eight"}) {
        const auto p = pi1_presentation(testing::catalog_complex(name), 0);
        const auto lifted = lift_to_universal_cover(p);
        CAPTURE(name);
        for (int d = 2; d <= lifted.top_degree(); ++d)
            CHECK(multiply(p.group(), lifted.boundary(d - 1), lifted.boundary(d)).is_zero());
    }
}

TEST_CASE("circle degree family traces")
{
    const std::map<int, std::string> expected{
        {-3, "[e] + [a] + [aa] + [aaa]"},
        {-1, "[e] + [a]"},
        {0, "[e]"},
        {2, "-[e]"},
        {3, "-[e] - [a]"},
        {4, "-[e] - [a] - [aa]"},
    };
    for (const auto& [d, text] : expected) {
        const auto e = catalog::make("circle_degree_map:" + std::to_string(d));
        const auto r = trace_of(e);
        CAPTURE(d);
        CHECK(r.format() == text);
        CHECK(r.augment() == 1 - d);
        CHECK(r.nielsen() == static_cast<Index>(std::abs(1 - d)));
    }
}

TEST_CASE("identity of the circle has zero trace")
{
    const auto e = catalog::make("circle_degree_map:1");
    const auto r = trace_of(e);
    CHECK(r.augment() == 0);
    CHECK(r.nielsen() == 0);
}

TEST_CASE("torus linear map")
{
    const auto e = catalog::make("torus_linear");
    const auto r = trace_of(e);
    CHECK(r.format() == "-[(0,0)]");
    CHECK(r.augment() == *e.oracle.lefschetz);
    CHECK(r.nielsen() == *e.oracle.nielsen);
}

TEST_CASE("chain and geometric routes agree")
{
    for (const std::string name : {"circle_reflection", "circle_degree_map:-2", "circle_degree_map:3", "torus_linear",
                                   "torus_linear:3,1,1,1"}) {
        const auto e = catalog::make(name);
        CAPTURE(name);
        const auto& f = e.map->map;
        const auto p = pi1_presentation(e.map->map.source_ptr(), e.map->basepath.empty() ? 0 : e.map->basepath.front());
        const auto basepath = checked_basepath(f, p, e.map->basepath);
        const auto chain = component_reidemeister_trace(f, p, basepath);
        const auto records = resolve_fixed_points(e.map->fixed_points, f, p, basepath);
        const auto geometric = reidemeister_trace_geometric(records, chain.classes_ptr());
        CHECK(compare(chain, geometric) == Comparison::Equal);
        CHECK(augment(chain) == lefschetz_number(f));
    }
}

TEST_CASE("changing the basepath relabels classes only")
{
    const auto e = catalog::make("circle_degree_map:-2");
    const auto& f = e.map->map;
    const auto p = pi1_presentation(f.source_ptr(), 0);
    const VertexWalk base = checked_basepath(f, p, e.map->basepath.empty() ? p.tree_path(f(0)) : e.map->basepath);
    // Precompose the basepath with a loop: the class set is permuted.
    VertexWalk alt = join_walks(p.generator_loop(0), base);
    const auto a = component_reidemeister_trace(f, p, base);
    const auto b = component_reidemeister_trace(f, p, alt);
    CHECK(augment(a) == augment(b));
    CHECK(nielsen(a) == nielsen(b));
    CHECK(a.terms().size() == 3);
}

TEST_CASE("reflection trace has two classes")
{
    const auto e = catalog::make("circle_reflection");
    const auto r = trace_of(e);
    CHECK(r.format() == "[e] + [a]");
    CHECK(r.augment() == 2);
}

TEST_CASE("free group map with an undecided merge is indeterminate")
{
    const auto e = catalog::make("figure_eight:drag");
    const auto r = trace_of(e);
    CHECK(r.indeterminate());
    CHECK_THROWS_AS(r.nielsen(), IndeterminateError);
    CHECK(r.augment() == lefschetz_number(e.map->map));
}

TEST_CASE("figure eight identity and swap")
{
    const auto id = reidemeister_trace(identity_map(testing::catalog_complex("figure_eight")));
    CHECK(id.format() == "-[e]");
    CHECK_FALSE(id.indeterminate());
    const auto swap = catalog::make("figure_eight:swap");
    const auto r = trace_of(swap);
    CHECK(r.augment() == lefschetz_number(swap.map->map));
}

TEST_CASE("disconnected complexes trace componentwise")
{
    const auto k = testing::catalog_complex("two_component_base");
    const auto r = reidemeister_trace(identity_map(k));
    CHECK(r.parts.size() == 2);
    CHECK(r.augment() == k->euler_characteristic());
}
