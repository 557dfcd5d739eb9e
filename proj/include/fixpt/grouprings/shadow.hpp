#ifndef FIXPT_GROUPRINGS_SHADOW_HPP
#define FIXPT_GROUPRINGS_SHADOW_HPP

#include "fixpt/grouprings/group_ring.hpp"
#include "fixpt/grouprings/twisted.hpp"

#include <memory>

namespace fixpt {

/**
 * Integer combination of twisted conjugacy classes. Adding a term merges it
 * into an existing class when the comparison says Equal; an Unknown
 * comparison keeps the classes apart and marks the element indeterminate.
 */
class ShadowElement {
public:
    struct Term {
        TwistedClass cls;
        Integer coefficient;
    };

    ShadowElement() = default;
    explicit ShadowElement(std::shared_ptr<const TwistedConjugacy> classes) : classes_(std::move(classes)) {}

    void add(const GroupElement& g, const Integer& c);
    void add(const ShadowElement& other, const Integer& scale = 1);

    /// Terms with nonzero coefficients, ordered by representative.
    std::vector<Term> terms() const;
    Integer coefficient(const GroupElement& g) const;
    bool empty() const { return terms().empty(); }

    const TwistedConjugacy& classes() const { return *classes_; }
    std::shared_ptr<const TwistedConjugacy> classes_ptr() const { return classes_; }
    bool indeterminate() const { return unknown_; }
    void mark_indeterminate() { unknown_ = true; }
    bool heuristic() const;

    std::string format() const;

private:
    std::shared_ptr<const TwistedConjugacy> classes_;
    std::vector<Term> terms_;
    bool unknown_ = false;
};

/// sum over the diagonal of M of c [g]_phi.
ShadowElement twisted_hs_trace(const GroupRingMatrix& m, std::shared_ptr<const TwistedConjugacy> classes);

/**
 * Class map [g] -> [iota(g) w] from classes of (G, phi_G) to (H, phi_H).
 * Requires iota(phi_G x) = w phi_H(iota x) w^-1 on generators (InputError
 * otherwise), which is what makes the class map well defined.
 */
ShadowElement pushforward(const GroupHomomorphism& iota, const GroupElement& w, const ShadowElement& s,
                          std::shared_ptr<const TwistedConjugacy> target);

Integer augment(const ShadowElement& s);
/// Number of classes with nonzero coefficient; IndeterminateError if a merge was undecided.
Index nielsen(const ShadowElement& s);
/// Equal iff the formal sums agree class by class.
Comparison compare(const ShadowElement& a, const ShadowElement& b);

} // namespace fixpt

#endif
