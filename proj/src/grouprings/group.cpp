#include "fixpt/grouprings/group.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace fixpt {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("group element coordinate overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("group element coordinate overflow");
    return r;
}

std::uint64_t order_key(std::int64_t x)
{
    return x >= 0 ? 2 * static_cast<std::uint64_t>(x) : 2 * static_cast<std::uint64_t>(-x) + 1;
}

std::string letter_name(std::int64_t l)
{
    std::string base;
    std::int64_t i = (l > 0 ? l : -l) - 1;
    if (i < 26)
        base = std::string(1, static_cast<char>('a' + i));
    else
        base = "x" + std::to_string(i);
    if (l < 0) {
        if (i < 26)
            base[0] = static_cast<char>(base[0] - 'a' + 'A');
        else
            base = "X" + std::to_string(i);
    }
    return base;
}

} // namespace

std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b)
{
    if (a.data.size() != b.data.size())
        return a.data.size() <=> b.data.size();
    for (std::size_t i = 0; i < a.data.size(); ++i)
        if (a.data[i] != b.data[i])
            return order_key(a.data[i]) <=> order_key(b.data[i]);
    return std::strong_ordering::equal;
}

Word inverse_word(const Word& w)
{
    Word out(w.rbegin(), w.rend());
    for (auto& l : out)
        l = -l;
    return out;
}

Word reduce_word(Word w)
{
    Word out;
    for (std::int64_t l : w) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word cyclic_reduce(Word w)
{
    w = reduce_word(std::move(w));
    std::size_t lo = 0, hi = w.size();
    while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(w.begin() + lo, w.begin() + hi);
}

Word concat(const Word& a, const Word& b)
{
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return reduce_word(std::move(out));
}

GroupElement vector_element(const std::vector<std::int64_t>& v) { return GroupElement{v}; }
GroupElement word_element(const Word& w) { return GroupElement{reduce_word(w)}; }

// ---------------------------------------------------------------------------

Group Group::free_abelian(int n)
{
    Group g;
    g.kind_ = GroupKind::FreeAbelian;
    g.rank_ = n;
    return g;
}

Group Group::free(int k)
{
    Group g;
    g.kind_ = GroupKind::Free;
    g.rank_ = k;
    return g;
}

Group Group::finite(std::vector<std::vector<int>> table, std::vector<int> generators)
{
    const int n = static_cast<int>(table.size());
    if (n == 0)
        throw InputError("finite group: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("finite group: table is not square");
        for (int x : row)
            if (x < 0 || x >= n)
                throw InputError("finite group: table entry out of range");
    }
    int e = -1;
    for (int a = 0; a < n && e < 0; ++a) {
        bool ok = true;
        for (int b = 0; b < n && ok; ++b)
            ok = table[a][b] == b && table[b][a] == b;
        if (ok)
            e = a;
    }
    if (e < 0)
        throw InputError("finite group: no identity element");
    std::vector<int> inv(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] == e && table[b][a] == e)
                inv[a] = b;
    if (std::count(inv.begin(), inv.end(), -1) > 0)
        throw InputError("finite group: missing inverse");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw InputError("finite group: table is not associative");
    for (int x : generators)
        if (x < 0 || x >= n)
            throw InputError("finite group: generator out of range");

    Group g;
    g.kind_ = GroupKind::Finite;
    g.rank_ = static_cast<int>(generators.size());
    g.table_ = std::move(table);
    g.generators_ = std::move(generators);
    g.inverses_ = std::move(inv);
    g.identity_ = e;
    g.words_.assign(n, Word{});
    std::vector<bool> seen(n, false);
    std::deque<int> queue{e};
    seen[e] = true;
    while (!queue.empty()) {
        int a = queue.front();
        queue.pop_front();
        for (int i = 0; i < g.rank_; ++i)
            for (int s : {1, -1}) {
                int x = s > 0 ? g.generators_[i] : g.inverses_[g.generators_[i]];
                int b = g.table_[a][x];
                if (seen[b])
                    continue;
                seen[b] = true;
                g.words_[b] = g.words_[a];
                g.words_[b].push_back(s * (i + 1));
                queue.push_back(b);
            }
    }
    if (std::count(seen.begin(), seen.end(), false) > 0)
        throw InputError("finite group: generators do not generate");
    return g;
}

GroupElement Group::identity() const
{
    switch (kind_) {
    case GroupKind::FreeAbelian:
        return GroupElement{std::vector<std::int64_t>(rank_, 0)};
    case GroupKind::Free:
        return GroupElement{};
    case GroupKind::Finite:
        return GroupElement{{identity_}};
    }
    return {};
}

GroupElement Group::generator(int i) const
{
    if (i < 0 || i >= rank_)
        throw std::out_of_range("generator index");
    switch (kind_) {
    case GroupKind::FreeAbelian: {
        GroupElement g = identity();
        g.data[i] = 1;
        return g;
    }
    case GroupKind::Free:
        return GroupElement{{i + 1}};
    case GroupKind::Finite:
        return GroupElement{{generators_[i]}};
    }
    return {};
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const
{
    switch (kind_) {
    case GroupKind::FreeAbelian: {
        GroupElement c = a;
        for (int i = 0; i < rank_; ++i)
            c.data[i] = checked_add(a.data[i], b.data[i]);
        return c;
    }
    case GroupKind::Free:
        return GroupElement{concat(a.data, b.data)};
    case GroupKind::Finite:
        return GroupElement{{table_[a.data[0]][b.data[0]]}};
    }
    return {};
}

GroupElement Group::inverse(const GroupElement& a) const
{
    switch (kind_) {
    case GroupKind::FreeAbelian: {
        GroupElement c = a;
        for (auto& x : c.data)
            x = checked_mul(x, -1);
        return c;
    }
    case GroupKind::Free:
        return GroupElement{inverse_word(a.data)};
    case GroupKind::Finite:
        return GroupElement{{inverses_[a.data[0]]}};
    }
    return {};
}

GroupElement Group::from_word(const Word& w) const
{
    if (kind_ == GroupKind::Free) {
        for (auto l : w)
            if (l == 0 || l > rank_ || l < -rank_)
                throw InputError("word letter out of range");
        return GroupElement{reduce_word(w)};
    }
    GroupElement out = identity();
    for (auto l : w) {
        if (l == 0 || l > rank_ || l < -rank_)
            throw InputError("word letter out of range");
        GroupElement x = generator(static_cast<int>((l > 0 ? l : -l) - 1));
        out = multiply(out, l > 0 ? x : inverse(x));
    }
    return out;
}

Word Group::word_of(const GroupElement& g) const
{
    switch (kind_) {
    case GroupKind::FreeAbelian: {
        Word w;
        for (int i = 0; i < rank_; ++i) {
            std::int64_t x = g.data[i];
            for (std::int64_t k = 0; k < (x > 0 ? x : -x); ++k)
                w.push_back(x > 0 ? i + 1 : -(i + 1));
        }
        return w;
    }
    case GroupKind::Free:
        return g.data;
    case GroupKind::Finite:
        return words_[g.data[0]];
    }
    return {};
}

std::vector<GroupElement> Group::elements() const
{
    std::vector<GroupElement> out;
    for (Index i = 0; i < order(); ++i)
        out.push_back(GroupElement{{static_cast<std::int64_t>(i)}});
    return out;
}

std::vector<std::int64_t> Group::abelianize(const GroupElement& g) const
{
    if (kind_ == GroupKind::FreeAbelian)
        return g.data;
    if (kind_ == GroupKind::Finite)
        throw std::logic_error("abelianize: finite group");
    std::vector<std::int64_t> v(rank_, 0);
    for (auto l : g.data)
        v[(l > 0 ? l : -l) - 1] += l > 0 ? 1 : -1;
    return v;
}

void Group::check(const GroupElement& g) const
{
    switch (kind_) {
    case GroupKind::FreeAbelian:
        if (static_cast<int>(g.data.size()) != rank_)
            throw InputError("group element has " + std::to_string(g.data.size()) + " coordinates, expected " +
                             std::to_string(rank_));
        return;
    case GroupKind::Free:
        for (auto l : g.data)
            if (l == 0 || l > rank_ || l < -rank_)
                throw InputError("group element letter out of range");
        if (reduce_word(g.data) != g.data)
            throw InputError("free group element is not reduced");
        return;
    case GroupKind::Finite:
        if (g.data.size() != 1 || g.data[0] < 0 || g.data[0] >= order())
            throw InputError("finite group element out of range");
        return;
    }
}

std::string Group::describe() const
{
    switch (kind_) {
    case GroupKind::FreeAbelian:
        return "FreeAbelian(" + std::to_string(rank_) + ")";
    case GroupKind::Free:
        return "Free(" + std::to_string(rank_) + ")";
    case GroupKind::Finite:
        return "Finite(" + std::to_string(order()) + ")";
    }
    return "";
}

std::string Group::format(const GroupElement& g) const
{
    std::ostringstream out;
    switch (kind_) {
    case GroupKind::FreeAbelian:
        if (rank_ == 1) {
            out << g.data[0];
            break;
        }
        out << "(";
        for (std::size_t i = 0; i < g.data.size(); ++i)
            out << (i ? "," : "") << g.data[i];
        out << ")";
        break;
    case GroupKind::Free:
        if (g.data.empty())
            out << "e";
        for (auto l : g.data)
            out << letter_name(l);
        break;
    case GroupKind::Finite:
        out << "#" << g.data[0];
        break;
    }
    return out.str();
}

// ---------------------------------------------------------------------------

GroupHomomorphism::GroupHomomorphism(Group source, Group target, std::vector<GroupElement> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images))
{
    if (static_cast<int>(images_.size()) != source_.rank())
        throw InputError("homomorphism: expected " + std::to_string(source_.rank()) + " generator images, got " +
                         std::to_string(images_.size()));
    for (const auto& g : images_)
        target_.check(g);
    if (source_.kind() == GroupKind::FreeAbelian && target_.kind() != GroupKind::FreeAbelian) {
        // generators must commute in the target
        for (std::size_t i = 0; i < images_.size(); ++i)
            for (std::size_t j = i + 1; j < images_.size(); ++j)
                if (target_.multiply(images_[i], images_[j]) != target_.multiply(images_[j], images_[i]))
                    throw InputError("homomorphism: images of commuting generators do not commute");
    }
    if (source_.kind() == GroupKind::Finite) {
        const Index n = source_.order();
        finite_map_.assign(n, -1);
        std::vector<GroupElement> image(n);
        for (Index a = 0; a < n; ++a) {
            GroupElement g{{static_cast<std::int64_t>(a)}};
            GroupElement out = target_.identity();
            for (auto l : source_.word_of(g)) {
                const GroupElement& x = images_[(l > 0 ? l : -l) - 1];
                out = target_.multiply(out, l > 0 ? x : target_.inverse(x));
            }
            image[a] = out;
        }
        const auto& t = source_.table();
        for (Index a = 0; a < n; ++a)
            for (Index b = 0; b < n; ++b)
                if (image[t[a][b]] != target_.multiply(image[a], image[b]))
                    throw InputError("homomorphism: generator images do not respect the group relations");
        if (target_.kind() == GroupKind::Finite)
            for (Index a = 0; a < n; ++a)
                finite_map_[a] = static_cast<int>(image[a].data[0]);
        else
            for (Index a = 0; a < n; ++a)
                if (!target_.is_identity(image[a]))
                    throw InputError("homomorphism: finite group into a torsion-free group must be trivial");
    }
}

GroupHomomorphism GroupHomomorphism::identity(const Group& g)
{
    std::vector<GroupElement> images;
    for (int i = 0; i < g.rank(); ++i)
        images.push_back(g.generator(i));
    return GroupHomomorphism(g, g, std::move(images));
}

GroupHomomorphism GroupHomomorphism::from_matrix(const Group& g, const IntMatrix& a)
{
    if (g.kind() != GroupKind::FreeAbelian || a.rows() != g.rank() || a.cols() != g.rank())
        throw InputError("from_matrix: expected a square matrix over a free abelian group");
    std::vector<GroupElement> images;
    for (Index j = 0; j < a.cols(); ++j) {
        std::vector<std::int64_t> v;
        for (Index i = 0; i < a.rows(); ++i)
            v.push_back(a(i, j).convert_to<std::int64_t>());
        images.push_back(vector_element(v));
    }
    return GroupHomomorphism(g, g, std::move(images));
}

GroupElement GroupHomomorphism::operator()(const GroupElement& g) const
{
    if (source_.kind() == GroupKind::Finite && target_.kind() == GroupKind::Finite)
        return GroupElement{{finite_map_[g.data[0]]}};
    if (source_.kind() == GroupKind::Finite)
        return target_.identity();
    if (source_.kind() == GroupKind::FreeAbelian && target_.kind() == GroupKind::FreeAbelian) {
        GroupElement out = target_.identity();
        for (int j = 0; j < source_.rank(); ++j)
            for (int i = 0; i < target_.rank(); ++i)
                out.data[i] = checked_add(out.data[i], checked_mul(images_[j].data[i], g.data[j]));
        return out;
    }
    if (source_.kind() == GroupKind::FreeAbelian) {
        GroupElement out = target_.identity();
        for (int j = 0; j < source_.rank(); ++j) {
            std::int64_t e = g.data[j];
            GroupElement x = e >= 0 ? images_[j] : target_.inverse(images_[j]);
            for (std::int64_t k = 0; k < (e >= 0 ? e : -e); ++k)
                out = target_.multiply(out, x);
        }
        return out;
    }
    GroupElement out = target_.identity();
    for (auto l : g.data) {
        const GroupElement& x = images_[(l > 0 ? l : -l) - 1];
        out = target_.multiply(out, l > 0 ? x : target_.inverse(x));
    }
    return out;
}

IntMatrix GroupHomomorphism::matrix() const
{
    IntMatrix m = zero_matrix<Integer>(target_.rank(), source_.rank());
    for (int j = 0; j < source_.rank(); ++j) {
        auto v = target_.abelianize(images_[j]);
        for (int i = 0; i < target_.rank(); ++i)
            m(i, j) = Integer(v[i]);
    }
    return m;
}

bool GroupHomomorphism::is_identity() const
{
    if (!(source_ == target_))
        return false;
    for (int i = 0; i < source_.rank(); ++i)
        if (images_[i] != source_.generator(i))
            return false;
    return true;
}

} // namespace fixpt
