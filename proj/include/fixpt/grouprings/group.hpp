#ifndef FIXPT_GROUPRINGS_GROUP_HPP
#define FIXPT_GROUPRINGS_GROUP_HPP

#include "fixpt/exactalg/types.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fixpt {

/// Word over group generators: letter +(i+1) is generator i, -(i+1) its inverse.
using Word = std::vector<std::int64_t>;

Word inverse_word(const Word& w);
Word reduce_word(Word w);
/// Freely and cyclically reduced.
Word cyclic_reduce(Word w);
Word concat(const Word& a, const Word& b);

enum class GroupKind { FreeAbelian, Free, Finite };

/**
 * Element of one of the supported groups. FreeAbelian: coordinate vector.
 * Free: reduced word. Finite: a single element index.
 *
 * The ordering is shortlex with the key 0 < 1 < -1 < 2 < -2 < ... on
 * entries, so for words a < A < b < B; canonical representatives are minima
 * under it.
 */
struct GroupElement {
    std::vector<std::int64_t> data;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b);
};

class Group {
public:
    Group() = default;

    static Group free_abelian(int n);
    static Group free(int k);
    /**
     * Finite group from a multiplication table (table[a][b] = a*b) and the
     * elements playing the role of generators. Verifies the group axioms and
     * that the generators generate; throws InputError otherwise.
     */
    static Group finite(std::vector<std::vector<int>> table, std::vector<int> generators);

    GroupKind kind() const { return kind_; }
    /// Number of generators.
    int rank() const { return rank_; }
    /// Order of a finite group; 0 for infinite groups.
    Index order() const { return kind_ == GroupKind::Finite ? static_cast<Index>(table_.size()) : 0; }
    const std::vector<std::vector<int>>& table() const { return table_; }

    GroupElement identity() const;
    GroupElement generator(int i) const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    bool is_identity(const GroupElement& a) const { return a == identity(); }
    GroupElement from_word(const Word& w) const;
    /// A word representing g (FreeAbelian: x1^v1 x2^v2 ...; Finite: BFS word).
    Word word_of(const GroupElement& g) const;
    /// Finite groups: all elements in index order.
    std::vector<GroupElement> elements() const;

    /// Exponent-sum vector of g (not available for finite groups).
    std::vector<std::int64_t> abelianize(const GroupElement& g) const;

    /// Throws InputError if g is not a valid element of this group.
    void check(const GroupElement& g) const;

    std::string describe() const;
    std::string format(const GroupElement& g) const;

    friend bool operator==(const Group& a, const Group& b)
    {
        return a.kind_ == b.kind_ && a.rank_ == b.rank_ && a.table_ == b.table_ &&
               a.generators_ == b.generators_;
    }

private:
    GroupKind kind_ = GroupKind::Free;
    int rank_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> generators_;
    std::vector<int> inverses_;
    int identity_ = 0;
    std::vector<Word> words_; // finite: BFS word of each element
};

/// Homomorphism given by generator images; endomorphisms have source == target.
class GroupHomomorphism {
public:
    GroupHomomorphism() = default;
    /// Validates images; for finite sources checks the relations by building the full element map.
    GroupHomomorphism(Group source, Group target, std::vector<GroupElement> images);

    static GroupHomomorphism identity(const Group& g);
    /// FreeAbelian endomorphism with the given matrix (column j = image of generator j).
    static GroupHomomorphism from_matrix(const Group& g, const IntMatrix& a);

    const Group& source() const { return source_; }
    const Group& target() const { return target_; }
    const std::vector<GroupElement>& images() const { return images_; }

    GroupElement operator()(const GroupElement& g) const;
    /// Abelianized matrix (target exponent sums of generator images); not for finite groups.
    IntMatrix matrix() const;
    bool is_identity() const;

    friend bool operator==(const GroupHomomorphism& a, const GroupHomomorphism& b)
    {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

private:
    Group source_, target_;
    std::vector<GroupElement> images_;
    std::vector<int> finite_map_;
};

using GroupEndomorphism = GroupHomomorphism;

/// Element of a free abelian group from integer coordinates.
GroupElement vector_element(const std::vector<std::int64_t>& v);
/// Word element of a free group.
GroupElement word_element(const Word& w);

} // namespace fixpt

#endif
