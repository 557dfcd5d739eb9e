#include "fixpt/grouprings/twisted.hpp"

#include "fixpt/errors.hpp"

#include <deque>

namespace fixpt {

std::string to_string(Comparison c)
{
    switch (c) {
    case Comparison::Equal:
        return "Equal";
    case Comparison::Distinct:
        return "Distinct";
    case Comparison::Unknown:
        return "Unknown";
    }
    return "";
}

namespace {

constexpr std::size_t orbit_cap = 20000;

// least rotation of a cyclically reduced word
Word least_rotation(const Word& w)
{
    Word best = w;
    for (std::size_t r = 1; r < w.size(); ++r) {
        Word rot(w.begin() + r, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + r);
        if (GroupElement{rot} < GroupElement{best})
            best = std::move(rot);
    }
    return best;
}

Integer floor_mod(const Integer& x, const Integer& d)
{
    Integer m = abs_value(d);
    Integer r = x % m;
    return r < 0 ? Integer(r + m) : r;
}

} // namespace

TwistedConjugacy::TwistedConjugacy(GroupEndomorphism phi, int depth) : phi_(std::move(phi)), depth_(depth)
{
    if (!(phi_.source() == phi_.target()))
        throw InputError("twisted conjugacy needs an endomorphism");
    const Group& g = group();
    abelian_like_ = g.kind() == GroupKind::FreeAbelian || (g.kind() == GroupKind::Free && g.rank() <= 1);
    conjugacy_ = g.kind() == GroupKind::Free && g.rank() >= 2 && phi_.is_identity();
    if (abelian_like_) {
        IntMatrix a = phi_.matrix();
        snf_ = smith_normal_form<Integer>(identity_matrix<Integer>(g.rank()) - a);
    }
}

bool TwistedConjugacy::decisive() const { return abelian_like_ || conjugacy_ || group().kind() == GroupKind::Finite; }

GroupElement TwistedConjugacy::act(const GroupElement& h, const GroupElement& g) const
{
    const Group& grp = group();
    return grp.multiply(grp.multiply(h, g), grp.inverse(phi_(h)));
}

std::vector<std::int64_t> TwistedConjugacy::coordinates(const GroupElement& g) const { return group().abelianize(g); }

GroupElement TwistedConjugacy::from_coordinates(const std::vector<std::int64_t>& v) const
{
    if (group().kind() == GroupKind::FreeAbelian)
        return vector_element(v);
    if (v.empty())
        return group().identity();
    Word w;
    for (std::int64_t k = 0; k < (v[0] < 0 ? -v[0] : v[0]); ++k)
        w.push_back(v[0] > 0 ? 1 : -1);
    return word_element(w);
}

std::set<GroupElement> TwistedConjugacy::orbit(const GroupElement& g) const
{
    const Group& grp = group();
    std::set<GroupElement> seen{g};
    std::deque<std::pair<GroupElement, int>> queue{{g, 0}};
    while (!queue.empty() && seen.size() < orbit_cap) {
        auto [x, d] = queue.front();
        queue.pop_front();
        if (d >= depth_)
            continue;
        for (int i = 0; i < grp.rank(); ++i)
            for (bool inv : {false, true}) {
                GroupElement h = grp.generator(i);
                if (inv)
                    h = grp.inverse(h);
                GroupElement y = act(h, x);
                if (seen.insert(y).second)
                    queue.emplace_back(y, d + 1);
            }
    }
    return seen;
}

TwistedClass TwistedConjugacy::canonical(const GroupElement& g) const
{
    const Group& grp = group();
    grp.check(g);
    if (abelian_like_) {
        const Index n = grp.rank();
        auto v = coordinates(g);
        IntVector x(n);
        for (Index i = 0; i < n; ++i)
            x(i) = Integer(v[i]);
        if (n == 1 && snf_.rank == 1) // residue in [0, |1 - a|) directly, independent of the sign of U
            return {from_coordinates({floor_mod(x(0), snf_.S(0, 0)).convert_to<std::int64_t>()}), Certainty::Certain,
                    0};
        IntVector y = snf_.U * x;
        for (Index j = 0; j < snf_.rank; ++j)
            y(j) = floor_mod(y(j), snf_.S(j, j));
        IntVector rep = snf_.U_inv * y;
        std::vector<std::int64_t> out;
        for (Index i = 0; i < n; ++i)
            out.push_back(rep(i).convert_to<std::int64_t>());
        return {from_coordinates(out), Certainty::Certain, 0};
    }
    if (grp.kind() == GroupKind::Finite) {
        const Index n = grp.order();
        std::int64_t best = g.data[0];
        for (Index h = 0; h < n; ++h)
            best = std::min(best, act(GroupElement{{static_cast<std::int64_t>(h)}}, g).data[0]);
        return {GroupElement{{best}}, Certainty::Certain, 0};
    }
    if (conjugacy_)
        return {word_element(least_rotation(cyclic_reduce(g.data))), Certainty::Certain, 0};
    std::set<GroupElement> o = orbit(g);
    return {*o.begin(), Certainty::Heuristic, depth_};
}

Comparison TwistedConjugacy::compare(const GroupElement& g, const GroupElement& h) const
{
    TwistedClass a = canonical(g), b = canonical(h);
    if (a.representative == b.representative)
        return Comparison::Equal;
    if (decisive())
        return Comparison::Distinct;
    std::set<GroupElement> og = orbit(g), oh = orbit(h);
    for (const auto& x : og)
        if (oh.count(x))
            return Comparison::Equal;
    // abelianized invariant
    const Group& grp = group();
    GroupEndomorphism ab = GroupHomomorphism::from_matrix(Group::free_abelian(grp.rank()), phi_.matrix());
    TwistedConjugacy abelian(ab);
    if (abelian.compare(vector_element(grp.abelianize(g)), vector_element(grp.abelianize(h))) == Comparison::Distinct)
        return Comparison::Distinct;
    return Comparison::Unknown;
}

ClassEnumeration TwistedConjugacy::enumerate() const
{
    const Group& grp = group();
    ClassEnumeration out;
    if (grp.kind() == GroupKind::Finite) {
        std::set<GroupElement> reps;
        for (const auto& g : grp.elements())
            reps.insert(canonical(g).representative);
        for (const auto& r : reps)
            out.classes.push_back({r, Certainty::Certain, 0});
        return out;
    }
    if (abelian_like_) {
        const Index n = grp.rank();
        // residues y_j in [0, d_j) for j < rank; free coordinates range over [-depth, depth]
        std::vector<std::int64_t> lo(n), hi(n);
        for (Index j = 0; j < n; ++j) {
            if (j < snf_.rank) {
                lo[j] = 0;
                hi[j] = snf_.S(j, j).convert_to<std::int64_t>() - 1;
            }
            else {
                lo[j] = -depth_;
                hi[j] = depth_;
                out.complete = false;
            }
        }
        std::vector<std::int64_t> y = lo;
        std::set<GroupElement> reps;
        for (;;) {
            IntVector yy(n);
            for (Index j = 0; j < n; ++j)
                yy(j) = Integer(y[j]);
            IntVector rep = snf_.U_inv * yy;
            std::vector<std::int64_t> v;
            for (Index i = 0; i < n; ++i)
                v.push_back(rep(i).convert_to<std::int64_t>());
            reps.insert(canonical(from_coordinates(v)).representative);
            Index j = 0;
            while (j < n && y[j] == hi[j]) {
                y[j] = lo[j];
                ++j;
            }
            if (j == n)
                break;
            ++y[j];
        }
        for (const auto& r : reps)
            out.classes.push_back({r, Certainty::Certain, 0});
        return out;
    }
    // free of rank >= 2: canonical forms of short words
    out.complete = false;
    const int max_len = std::min(depth_, 4);
    std::set<GroupElement> reps;
    std::vector<Word> layer{Word{}};
    std::vector<TwistedClass> found;
    auto consider = [&](const Word& w) {
        TwistedClass c = canonical(word_element(w));
        if (!reps.insert(c.representative).second)
            return;
        for (const auto& other : found)
            if (compare(other.representative, c.representative) == Comparison::Equal)
                return;
        found.push_back(c);
    };
    consider(Word{});
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const Word& w : layer)
            for (int i = 1; i <= grp.rank(); ++i)
                for (std::int64_t l : {static_cast<std::int64_t>(i), -static_cast<std::int64_t>(i)}) {
                    if (!w.empty() && w.back() == -l)
                        continue;
                    Word x = w;
                    x.push_back(l);
                    consider(x);
                    next.push_back(std::move(x));
                }
        layer = std::move(next);
    }
    std::sort(found.begin(), found.end(),
              [](const TwistedClass& a, const TwistedClass& b) { return a.representative < b.representative; });
    out.classes = std::move(found);
    return out;
}

TwistedClass twisted_class(const GroupEndomorphism& phi, const GroupElement& g, int depth)
{
    return TwistedConjugacy(phi, depth).canonical(g);
}

Comparison classes_equal(const GroupEndomorphism& phi, const GroupElement& g, const GroupElement& h, int depth)
{
    return TwistedConjugacy(phi, depth).compare(g, h);
}

} // namespace fixpt
