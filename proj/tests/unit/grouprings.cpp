#include "doctest.h"

#include "../support.hpp"

using namespace fixpt;

namespace {

GroupEndomorphism z_mult(std::int64_t m)
{
    IntMatrix a(1, 1);
    a(0, 0) = m;
    return GroupHomomorphism::from_matrix(Group::free_abelian(1), a);
}

} // namespace

TEST_CASE("free group words reduce freely")
{
    CHECK(reduce_word({1, 2, -2, -1, 1}) == Word{1});
    CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
    CHECK(inverse_word({1, -2}) == Word{2, -1});
    const Group f = Group::free(2);
    CHECK(f.multiply(f.from_word({1, 2}), f.from_word({-2})) == f.generator(0));
    CHECK(f.is_identity(f.multiply(f.from_word({1, 2}), f.inverse(f.from_word({1, 2})))));
}

TEST_CASE("finite groups validate their tables")
{
    const Group g = testing::s3();
    CHECK(g.order() == 6);
    CHECK(g.describe() == "Finite(6)");
    CHECK(g.elements().size() == 6);
    CHECK_THROWS_AS(Group::finite({{0, 1}, {1, 1}}, {1}), InputError);
    // Generators must generate.
    CHECK_THROWS_AS(Group::finite(testing::cyclic_group(4).table(), {2}), InputError);
}

TEST_CASE("homomorphisms are checked on relations")
{
    const Group z4 = testing::cyclic_group(4);
    const Group z2 = testing::cyclic_group(2);
    CHECK_NOTHROW(GroupHomomorphism(z4, z2, {GroupElement{{1}}}));
    CHECK_THROWS_AS(GroupHomomorphism(z2, z4, {GroupElement{{1}}}), InputError);
}

TEST_CASE("twisted classes of multiplication by m on Z")
{
    // |1 - m| classes, residues mod (1 - m).
    for (std::int64_t m : {-2, -1, 0, 2, 3, 5}) {
        const TwistedConjugacy tc(z_mult(m));
        const auto en = tc.enumerate();
        CAPTURE(m);
        CHECK(en.complete);
        CHECK(static_cast<std::int64_t>(en.classes.size()) == std::abs(1 - m));
        CHECK(tc.decisive());
    }
    const TwistedConjugacy id(z_mult(1));
    CHECK_FALSE(id.enumerate().complete);
    CHECK(id.compare(vector_element({3}), vector_element({3})) == Comparison::Equal);
    CHECK(id.compare(vector_element({3}), vector_element({4})) == Comparison::Distinct);

    const TwistedConjugacy m4(z_mult(4));
    CHECK(m4.compare(vector_element({1}), vector_element({-2})) == Comparison::Equal);
    CHECK(m4.compare(vector_element({1}), vector_element({2})) == Comparison::Distinct);
    CHECK(m4.canonical(vector_element({-1})).representative == vector_element({2}));
}

TEST_CASE("twisted classes of a hyperbolic torus automorphism")
{
    IntMatrix a(2, 2);
    a << 2, 1, 1, 1;
    const TwistedConjugacy tc(GroupHomomorphism::from_matrix(Group::free_abelian(2), a));
    CHECK(tc.enumerate().classes.size() == 1);
    IntMatrix b(2, 2);
    b << 3, 0, 0, 3;
    const TwistedConjugacy tb(GroupHomomorphism::from_matrix(Group::free_abelian(2), b));
    CHECK(tb.enumerate().classes.size() == 4);
}

TEST_CASE("free group identity: twisted classes are conjugacy classes")
{
    const Group f = Group::free(2);
    const TwistedConjugacy tc(GroupHomomorphism::identity(f));
    CHECK(tc.decisive());
    CHECK(tc.compare(f.from_word({1, 2}), f.from_word({2, 1})) == Comparison::Equal);
    CHECK(tc.compare(f.from_word({1}), f.from_word({2})) == Comparison::Distinct);
    CHECK(tc.compare(f.from_word({1, 2, -1}), f.from_word({2})) == Comparison::Equal);
    CHECK(tc.compare(f.from_word({1, 1, 2}), f.from_word({1, 2, 2})) == Comparison::Distinct);
}

TEST_CASE("finite group twisted classes")
{
    const Group g = testing::s3();
    const TwistedConjugacy conj(GroupHomomorphism::identity(g));
    CHECK(conj.enumerate().classes.size() == 3);
    const Group z6 = testing::cyclic_group(6);
    const TwistedConjugacy neg(GroupHomomorphism(z6, z6, {GroupElement{{5}}}));
    // g ~ h g (-h)^-1 = g + 2h: classes are parities.
    CHECK(neg.enumerate().classes.size() == 2);
}

TEST_CASE("group ring arithmetic")
{
    const Group z = Group::free_abelian(1);
    const GroupRingElement a = GroupRingElement(vector_element({0}), 2) + GroupRingElement(vector_element({1}), -1);
    const GroupRingElement b = GroupRingElement(vector_element({1}), 1);
    const GroupRingElement ab = multiply(z, a, b);
    CHECK(ab.coefficient(vector_element({1})) == 2);
    CHECK(ab.coefficient(vector_element({2})) == -1);
    CHECK(ab.augment() == a.augment() * b.augment());
    CHECK((a - a).is_zero());
    CHECK(apply(z_mult(3), a).coefficient(vector_element({3})) == -1);
}

TEST_CASE("twisted trace is invariant under twisted cyclic permutation")
{
    std::mt19937 rng(7);
    const Group g = testing::s3();
    const auto phi = GroupHomomorphism::identity(g);
    auto classes = std::make_shared<const TwistedConjugacy>(phi);
    const auto m = testing::random_group_ring_matrix(g, 2, 3, rng);
    const auto n = testing::random_group_ring_matrix(g, 3, 2, rng);
    const auto lhs = twisted_hs_trace(multiply(g, m, n), classes);
    const auto rhs = twisted_hs_trace(multiply(g, n, apply(phi, m)), classes);
    CHECK(compare(lhs, rhs) == Comparison::Equal);
    CHECK(augment(lhs) == augment(rhs));
}

TEST_CASE("shadow formatting and nielsen number")
{
    auto classes = std::make_shared<const TwistedConjugacy>(z_mult(3));
    ShadowElement s(classes);
    s.add(vector_element({0}), -1);
    s.add(vector_element({5}), -1);
    CHECK(s.format() == "-[0] - [1]");
    CHECK(nielsen(s) == 2);
    CHECK(augment(s) == -2);
    s.add(vector_element({-2}), 1);
    CHECK(s.format() == "-[1]");
    CHECK(nielsen(s) == 1);
}

TEST_CASE("rank one free groups print classes as words")
{
    const Group z = Group::free(1);
    auto classes = std::make_shared<const TwistedConjugacy>(GroupHomomorphism(z, z, {z.from_word({-1, -1})}));
    ShadowElement s(classes);
    s.add(z.identity(), 1);
    s.add(z.from_word({-1}), 1);
    s.add(z.from_word({1, 1, 1, 1}), 1);
    CHECK(s.format() == "[e] + [a] + [aa]");
}

TEST_CASE("pushforward requires the intertwining condition")
{
    const Group z = Group::free_abelian(1);
    auto src = std::make_shared<const TwistedConjugacy>(z_mult(-1));
    auto dst = std::make_shared<const TwistedConjugacy>(z_mult(3));
    ShadowElement s(src);
    s.add(vector_element({0}), 1);
    CHECK_THROWS_AS(pushforward(GroupHomomorphism::identity(z), vector_element({0}), s, dst), InputError);

    auto same = std::make_shared<const TwistedConjugacy>(z_mult(-1));
    const auto pushed = pushforward(GroupHomomorphism::identity(z), vector_element({1}), s, same);
    CHECK(pushed.format() == "[1]");
}
