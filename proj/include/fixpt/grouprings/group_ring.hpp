#ifndef FIXPT_GROUPRINGS_GROUP_RING_HPP
#define FIXPT_GROUPRINGS_GROUP_RING_HPP

#include "fixpt/grouprings/group.hpp"

#include <map>

namespace fixpt {

/**
 * Finite formal sum of group elements with integer coefficients. Zero
 * coefficients are never stored. Multiplication needs the group, so it is a
 * free function rather than an operator.
 */
class GroupRingElement {
public:
    GroupRingElement() = default;
    GroupRingElement(const GroupElement& g, const Integer& c) { add(g, c); }

    void add(const GroupElement& g, const Integer& c);
    const std::map<GroupElement, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Integer coefficient(const GroupElement& g) const;
    Integer augment() const;

    GroupRingElement& operator+=(const GroupRingElement& o);
    GroupRingElement& operator-=(const GroupRingElement& o);
    GroupRingElement operator-() const;
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    std::map<GroupElement, Integer> terms_;
};

GroupRingElement multiply(const Group& g, const GroupRingElement& a, const GroupRingElement& b);
/// Right multiplication of every term by x.
GroupRingElement right_translate(const Group& g, const GroupRingElement& a, const GroupElement& x);
GroupRingElement apply(const GroupHomomorphism& phi, const GroupRingElement& a);
std::string format(const Group& g, const GroupRingElement& a);

/// Dense matrix over the group ring, row-major.
class GroupRingMatrix {
public:
    GroupRingMatrix() = default;
    GroupRingMatrix(Index rows, Index cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    Index rows() const { return rows_; }
    Index cols() const { return cols_; }
    GroupRingElement& operator()(Index i, Index j) { return entries_[i * cols_ + j]; }
    const GroupRingElement& operator()(Index i, Index j) const { return entries_[i * cols_ + j]; }
    bool is_zero() const;

    friend bool operator==(const GroupRingMatrix&, const GroupRingMatrix&) = default;

private:
    Index rows_ = 0, cols_ = 0;
    std::vector<GroupRingElement> entries_;
};

GroupRingMatrix multiply(const Group& g, const GroupRingMatrix& a, const GroupRingMatrix& b);
/// Entrywise image under a homomorphism.
GroupRingMatrix apply(const GroupHomomorphism& phi, const GroupRingMatrix& a);
/// Entrywise augmentation g -> 1.
IntMatrix augment(const GroupRingMatrix& a);
/// Integer matrix embedded with identity group elements.
GroupRingMatrix embed(const Group& g, const IntMatrix& a);

} // namespace fixpt

#endif
