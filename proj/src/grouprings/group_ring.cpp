#include "fixpt/grouprings/group_ring.hpp"

#include <sstream>

namespace fixpt {

void GroupRingElement::add(const GroupElement& g, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Integer GroupRingElement::coefficient(const GroupElement& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Integer(0) : it->second;
}

Integer GroupRingElement::augment() const
{
    Integer s = 0;
    for (const auto& [g, c] : terms_)
        s += c;
    return s;
}

GroupRingElement& GroupRingElement::operator+=(const GroupRingElement& o)
{
    for (const auto& [g, c] : o.terms_)
        add(g, c);
    return *this;
}

GroupRingElement& GroupRingElement::operator-=(const GroupRingElement& o)
{
    for (const auto& [g, c] : o.terms_)
        add(g, -c);
    return *this;
}

GroupRingElement GroupRingElement::operator-() const
{
    GroupRingElement out;
    for (const auto& [g, c] : terms_)
        out.add(g, -c);
    return out;
}

GroupRingElement multiply(const Group& grp, const GroupRingElement& a, const GroupRingElement& b)
{
    GroupRingElement out;
    for (const auto& [g, c] : a.terms())
        for (const auto& [h, d] : b.terms())
            out.add(grp.multiply(g, h), c * d);
    return out;
}

GroupRingElement right_translate(const Group& grp, const GroupRingElement& a, const GroupElement& x)
{
    GroupRingElement out;
    for (const auto& [g, c] : a.terms())
        out.add(grp.multiply(g, x), c);
    return out;
}

GroupRingElement apply(const GroupHomomorphism& phi, const GroupRingElement& a)
{
    GroupRingElement out;
    for (const auto& [g, c] : a.terms())
        out.add(phi(g), c);
    return out;
}

std::string format(const Group& grp, const GroupRingElement& a)
{
    if (a.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [g, c] : a.terms()) {
        if (!first)
            out << (c < 0 ? " - " : " + ");
        else if (c < 0)
            out << "-";
        Integer m = c < 0 ? Integer(-c) : c;
        if (m != 1)
            out << m << "*";
        out << "[" << grp.format(g) << "]";
        first = false;
    }
    return out.str();
}

bool GroupRingMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

GroupRingMatrix multiply(const Group& grp, const GroupRingMatrix& a, const GroupRingMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("group ring matrix shapes do not match");
    GroupRingMatrix out(a.rows(), b.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero())
                continue;
            for (Index j = 0; j < b.cols(); ++j)
                if (!b(k, j).is_zero())
                    out(i, j) += multiply(grp, a(i, k), b(k, j));
        }
    return out;
}

GroupRingMatrix apply(const GroupHomomorphism& phi, const GroupRingMatrix& a)
{
    GroupRingMatrix out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out(i, j) = apply(phi, a(i, j));
    return out;
}

IntMatrix augment(const GroupRingMatrix& a)
{
    IntMatrix out = zero_matrix<Integer>(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j).augment();
    return out;
}

GroupRingMatrix embed(const Group& grp, const IntMatrix& a)
{
    GroupRingMatrix out(a.rows(), a.cols());
    for (Index i = 0; i < a.rows(); ++i)
        for (Index j = 0; j < a.cols(); ++j)
            out(i, j).add(grp.identity(), a(i, j));
    return out;
}

} // namespace fixpt
