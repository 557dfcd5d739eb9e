#include "fixpt/grouprings/shadow.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <sstream>

namespace fixpt {

void ShadowElement::add(const GroupElement& g, const Integer& c)
{
    if (!classes_)
        throw std::logic_error("shadow element without a class structure");
    if (c == 0)
        return;
    TwistedClass cls = classes_->canonical(g);
    for (Term& t : terms_)
        if (t.cls.representative == cls.representative) {
            t.coefficient += c;
            return;
        }
    if (!classes_->decisive())
        for (Term& t : terms_) {
            Comparison cmp = classes_->compare(t.cls.representative, cls.representative);
            if (cmp == Comparison::Equal) {
                t.coefficient += c;
                return;
            }
            if (cmp == Comparison::Unknown)
                unknown_ = true;
        }
    terms_.push_back({std::move(cls), c});
}

void ShadowElement::add(const ShadowElement& other, const Integer& scale)
{
    for (const Term& t : other.terms_)
        add(t.cls.representative, t.coefficient * scale);
    unknown_ = unknown_ || other.unknown_;
}

std::vector<ShadowElement::Term> ShadowElement::terms() const
{
    std::vector<Term> out;
    for (const Term& t : terms_)
        if (t.coefficient != 0)
            out.push_back(t);
    std::sort(out.begin(), out.end(),
              [](const Term& a, const Term& b) { return a.cls.representative < b.cls.representative; });
    return out;
}

Integer ShadowElement::coefficient(const GroupElement& g) const
{
    GroupElement rep = classes_->canonical(g).representative;
    for (const Term& t : terms_)
        if (t.cls.representative == rep)
            return t.coefficient;
    return 0;
}

bool ShadowElement::heuristic() const
{
    for (const Term& t : terms_)
        if (t.cls.certainty == Certainty::Heuristic)
            return true;
    return false;
}

std::string ShadowElement::format() const
{
    auto ts = terms();
    if (ts.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const Term& t : ts) {
        const Integer& c = t.coefficient;
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        Integer m = c < 0 ? Integer(-c) : c;
        if (m != 1)
            out << m << "*";
        out << "[" << classes_->group().format(t.cls.representative) << "]";
        first = false;
    }
    return out.str();
}

ShadowElement twisted_hs_trace(const GroupRingMatrix& m, std::shared_ptr<const TwistedConjugacy> classes)
{
    if (m.rows() != m.cols())
        throw InputError("twisted trace of a non-square matrix");
    ShadowElement out(std::move(classes));
    for (Index i = 0; i < m.rows(); ++i)
        for (const auto& [g, c] : m(i, i).terms())
            out.add(g, c);
    return out;
}

ShadowElement pushforward(const GroupHomomorphism& iota, const GroupElement& w, const ShadowElement& s,
                          std::shared_ptr<const TwistedConjugacy> target)
{
    const Group& h = target->group();
    const GroupEndomorphism& phi_h = target->endomorphism();
    const GroupEndomorphism& phi_g = s.classes().endomorphism();
    if (!(iota.source() == s.classes().group()) || !(iota.target() == h))
        throw InputError("pushforward: homomorphism does not match the class structures");
    h.check(w);
    for (int i = 0; i < iota.source().rank(); ++i) {
        GroupElement x = iota.source().generator(i);
        GroupElement lhs = iota(phi_g(x));
        GroupElement rhs = h.multiply(h.multiply(w, phi_h(iota(x))), h.inverse(w));
        if (lhs != rhs)
            throw InputError("pushforward: correction element does not intertwine the endomorphisms on generator " +
                             std::to_string(i));
    }
    ShadowElement out(std::move(target));
    for (const auto& t : s.terms())
        out.add(h.multiply(iota(t.cls.representative), w), t.coefficient);
    if (s.indeterminate())
        out.mark_indeterminate();
    return out;
}

Integer augment(const ShadowElement& s)
{
    Integer sum = 0;
    for (const auto& t : s.terms())
        sum += t.coefficient;
    return sum;
}

Index nielsen(const ShadowElement& s)
{
    if (s.indeterminate())
        throw IndeterminateError("Nielsen number depends on an undecided twisted-conjugacy comparison");
    return static_cast<Index>(s.terms().size());
}

Comparison compare(const ShadowElement& a, const ShadowElement& b)
{
    ShadowElement diff(a.classes_ptr());
    diff.add(a);
    diff.add(b, -1);
    if (diff.indeterminate())
        return Comparison::Unknown;
    return diff.empty() ? Comparison::Equal : Comparison::Distinct;
}

} // namespace fixpt
