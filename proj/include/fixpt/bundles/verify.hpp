#ifndef FIXPT_BUNDLES_VERIFY_HPP
#define FIXPT_BUNDLES_VERIFY_HPP

#include "fixpt/bundles/bundle.hpp"

namespace fixpt {

enum class Verdict { Pass, Fail, Indeterminate };

std::string to_string(Verdict v);

/// One base class C with ind_C(fbar) and whichever fiber quantities the check needs.
struct ClassRow {
    BasePathClass cls;
    std::string label;
    Integer index;
    std::optional<Integer> lefschetz;     // L(f_C)
    std::optional<ShadowElement> pushed;  // i_C(R(f_C)) over the total space
    std::optional<Index> nielsen;         // c(b) for the class
};

struct VerificationReport {
    std::string theorem; // "lefschetz", "reidemeister" or "nielsen"
    std::vector<ClassRow> rows;
    std::optional<std::string> lhs, rhs;
    Verdict verdict = Verdict::Fail;
    std::vector<std::string> flags;
    std::vector<std::string> diff;
};

/// sum_C ind_C(fbar) L(f_C) against L(f) of the total map.
VerificationReport verify_lefschetz_mult(const BundleSelfMapPair& pair, int depth = TwistedConjugacy::default_depth);

/**
 * sum_C ind_C(fbar) i_C(R(f_C)) against the chain-level R(f) of the total
 * map, class by class, on each fbar-invariant base component. The total space
 * over such a component must be connected (UnsupportedError otherwise).
 */
VerificationReport verify_reidemeister_mult(const BundleSelfMapPair& pair,
                                            int depth = TwistedConjugacy::default_depth);

/// N(f) against sum over base classes of c(b); IndeterminateError on undecided merges.
VerificationReport nielsen_additivity(const BundleSelfMapPair& pair, int depth = TwistedConjugacy::default_depth);

} // namespace fixpt

#endif
