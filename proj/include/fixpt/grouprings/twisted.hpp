#ifndef FIXPT_GROUPRINGS_TWISTED_HPP
#define FIXPT_GROUPRINGS_TWISTED_HPP

#include "fixpt/exactalg/smith.hpp"
#include "fixpt/grouprings/group.hpp"

#include <optional>
#include <set>

namespace fixpt {

enum class Certainty { Certain, Heuristic };
enum class Comparison { Equal, Distinct, Unknown };

std::string to_string(Comparison c);

/// Canonical representative of a twisted conjugacy class g ~ h g phi(h)^-1.
struct TwistedClass {
    GroupElement representative;
    Certainty certainty = Certainty::Certain;
    int depth = 0; // search depth behind a heuristic representative

    friend bool operator==(const TwistedClass& a, const TwistedClass& b)
    {
        return a.representative == b.representative;
    }
};

struct ClassEnumeration {
    std::vector<TwistedClass> classes;
    bool complete = true; // false when the class set is infinite or could not be decided
};

/**
 * Twisted conjugacy under a fixed endomorphism.
 *
 * FreeAbelian (and free of rank <= 1): g reduces via SNF(I - A) = U (I - A) V,
 * coordinates of U g taken mod the invariant factors; decisive. Finite: least
 * index in the orbit; decisive. Free of rank >= 2 with phi = id: least
 * rotation of the cyclically reduced word; decisive. Other free endomorphisms:
 * shortlex minimum of a breadth-first orbit search to depth(), marked heuristic.
 */
class TwistedConjugacy {
public:
    static constexpr int default_depth = 8;

    explicit TwistedConjugacy(GroupEndomorphism phi, int depth = default_depth);

    const Group& group() const { return phi_.source(); }
    const GroupEndomorphism& endomorphism() const { return phi_; }
    int depth() const { return depth_; }
    /// Whether classes_equal always answers Equal or Distinct.
    bool decisive() const;

    /// h g phi(h)^-1.
    GroupElement act(const GroupElement& h, const GroupElement& g) const;

    TwistedClass canonical(const GroupElement& g) const;
    Comparison compare(const GroupElement& g, const GroupElement& h) const;

    /// All classes when finitely many and decidable; otherwise those met up to depth().
    ClassEnumeration enumerate() const;

private:
    GroupEndomorphism phi_;
    int depth_;
    bool abelian_like_ = false; // FreeAbelian or free of rank <= 1
    bool conjugacy_ = false;    // free with phi = id
    SmithForm<Integer> snf_;

    std::vector<std::int64_t> coordinates(const GroupElement& g) const;
    GroupElement from_coordinates(const std::vector<std::int64_t>& v) const;
    std::set<GroupElement> orbit(const GroupElement& g) const;
};

TwistedClass twisted_class(const GroupEndomorphism& phi, const GroupElement& g,
                           int depth = TwistedConjugacy::default_depth);
Comparison classes_equal(const GroupEndomorphism& phi, const GroupElement& g, const GroupElement& h,
                         int depth = TwistedConjugacy::default_depth);

} // namespace fixpt

#endif
