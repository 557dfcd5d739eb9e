#include "fixpt/exactalg/chain.hpp"

#include "fixpt/errors.hpp"
#include "fixpt/exactalg/smith.hpp"

#include <sstream>

namespace fixpt {

Integer to_integer(const Rational& q)
{
    if (boost::multiprecision::denominator(q) != 1)
        throw std::logic_error("expected an integral rational, got " + to_string(q));
    return Integer(boost::multiprecision::numerator(q));
}

std::string to_string(const Integer& x) { return x.str(); }
std::string to_string(const Rational& q) { return q.str(); }

Integer determinant(const IntMatrix& input)
{
    const Index n = input.rows();
    if (n != input.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0)
        return 1;
    IntMatrix a = input;
    Integer sign = 1, prev = 1;
    for (Index k = 0; k < n - 1; ++k) {
        if (a(k, k) == 0) {
            Index swap = -1;
            for (Index i = k + 1; i < n; ++i)
                if (a(i, k) != 0) {
                    swap = i;
                    break;
                }
            if (swap < 0)
                return 0;
            a.row(k).swap(a.row(swap));
            sign = -sign;
        }
        for (Index i = k + 1; i < n; ++i)
            for (Index j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

Index rational_rank(const IntMatrix& m) { return matrix_rank(m); }

// ---------------------------------------------------------------------------
// ChainComplex

ChainComplex::ChainComplex(std::vector<Index> ranks, std::vector<IntMatrix> boundaries)
    : ranks_(std::move(ranks)), boundaries_(std::move(boundaries))
{
    if (boundaries_.size() != ranks_.size()) {
        if (boundaries_.size() + 1 == ranks_.size())
            boundaries_.insert(boundaries_.begin(), IntMatrix(0, ranks_.empty() ? 0 : ranks_[0]));
        else
            throw InputError("chain complex: expected one boundary per positive degree");
    }
    if (!ranks_.empty())
        boundaries_[0] = IntMatrix(0, ranks_[0]);
    for (std::size_t i = 1; i < ranks_.size(); ++i) {
        const IntMatrix& d = boundaries_[i];
        if (d.rows() != ranks_[i - 1] || d.cols() != ranks_[i]) {
            std::ostringstream msg;
            msg << "chain complex: boundary d_" << i << " has shape " << d.rows() << "x" << d.cols()
                << ", expected " << ranks_[i - 1] << "x" << ranks_[i];
            throw InputError(msg.str());
        }
    }
    for (std::size_t i = 1; i + 1 < ranks_.size(); ++i) {
        IntMatrix dd = product(boundaries_[i], boundaries_[i + 1]);
        if (!is_zero_matrix(dd))
            throw InputError("chain complex: d_" + std::to_string(i) + " d_" + std::to_string(i + 1) +
                             " is not zero");
    }
}

Index ChainComplex::rank(int degree) const
{
    if (degree < 0 || degree > top_degree())
        return 0;
    return ranks_[degree];
}

IntMatrix ChainComplex::boundary(int degree) const
{
    if (degree >= 1 && degree <= top_degree())
        return boundaries_[degree];
    return zero_matrix<Integer>(rank(degree - 1), rank(degree));
}

Integer ChainComplex::euler_characteristic() const
{
    Integer chi = 0;
    for (int i = 0; i <= top_degree(); ++i)
        chi += (i % 2 == 0 ? 1 : -1) * Integer(ranks_[i]);
    return chi;
}

// ---------------------------------------------------------------------------
// ChainMap

ChainMap::ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
                   std::vector<IntMatrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components))
{
    const int top = std::max(source_->top_degree(), target_->top_degree());
    components_.resize(std::max<int>(top + 1, static_cast<int>(components_.size())));
    for (int i = 0; i <= top; ++i) {
        IntMatrix& f = components_[i];
        if (f.size() == 0)
            f = zero_matrix<Integer>(target_->rank(i), source_->rank(i));
        if (f.rows() != target_->rank(i) || f.cols() != source_->rank(i))
            throw InputError("chain map: component " + std::to_string(i) + " has the wrong shape");
    }
    for (int i = 1; i <= top; ++i) {
        IntMatrix lhs = product(target_->boundary(i), components_[i]);
        IntMatrix rhs = product(components_[i - 1], source_->boundary(i));
        if (lhs != rhs)
            throw InputError("chain map: boundary square fails to commute in degree " + std::to_string(i));
    }
}

IntMatrix ChainMap::component(int degree) const
{
    if (degree >= 0 && degree <= top_degree())
        return components_[degree];
    return zero_matrix<Integer>(target_->rank(degree), source_->rank(degree));
}

bool ChainMap::is_endomorphism() const
{
    return source_ == target_ || source_->ranks() == target_->ranks();
}

// ---------------------------------------------------------------------------
// Homology

std::vector<Index> HomologySummary::betti_numbers() const
{
    std::vector<Index> b;
    for (const auto& d : degrees)
        b.push_back(d.betti);
    return b;
}

HomologySummary homology(const ChainComplex& c)
{
    HomologySummary out;
    const int top = c.top_degree();
    std::vector<Index> ranks(top + 2, 0);
    std::vector<SmithForm<Integer>> forms(top + 2);
    for (int i = 1; i <= top; ++i) {
        forms[i] = smith_normal_form(c.boundary(i));
        ranks[i] = forms[i].rank;
    }
    for (int i = 0; i <= top; ++i) {
        HomologyDegree h;
        h.betti = c.rank(i) - ranks[i] - ranks[i + 1];
        if (i + 1 <= top)
            for (const Integer& d : forms[i + 1].invariant_factors())
                if (d > 1)
                    h.torsion.push_back(d);
        out.degrees.push_back(std::move(h));
    }
    return out;
}

namespace {

struct HomologyBasis {
    IntMatrix complement_inverse; // U from SNF(d_{i+1}): chain coordinates -> adapted coordinates
    Index image_rank = 0;
    IntMatrix cycle_v_inv; // V^-1 from SNF(d_i restricted to the complement)
    Index cycle_rank = 0;
    IntMatrix basis; // n_i x betti integer cycles
};

HomologyBasis homology_basis(const ChainComplex& c, int i)
{
    HomologyBasis hb;
    const Index n = c.rank(i);
    SmithForm<Integer> upper = smith_normal_form(c.boundary(i + 1));
    hb.complement_inverse = upper.U;
    hb.image_rank = upper.rank;
    IntMatrix w = upper.U_inv.rightCols(n - upper.rank);
    IntMatrix restricted = product(c.boundary(i), w);
    SmithForm<Integer> lower = smith_normal_form(restricted);
    hb.cycle_v_inv = lower.V_inv;
    hb.cycle_rank = lower.rank;
    const Index betti = (n - upper.rank) - lower.rank;
    hb.basis = w * lower.V.rightCols(betti);
    return hb;
}

// Coordinates of the class of a cycle z in the chosen homology basis.
IntVector homology_coordinates(const HomologyBasis& hb, const IntVector& z)
{
    IntVector y = hb.complement_inverse * z;
    const Index free = y.size() - hb.image_rank;
    IntVector tail = y.tail(free);
    IntVector u = hb.cycle_v_inv * tail;
    for (Index k = 0; k < hb.cycle_rank; ++k)
        if (u(k) != 0)
            throw std::logic_error("homology_coordinates: vector is not a cycle");
    return u.tail(free - hb.cycle_rank);
}

} // namespace

std::vector<RatMatrix> induced_homology_map(const ChainMap& map)
{
    if (!map.is_endomorphism())
        throw InputError("induced_homology_map: chain map is not a self-map");
    const ChainComplex& c = map.source();
    std::vector<RatMatrix> out;
    for (int i = 0; i <= c.top_degree(); ++i) {
        HomologyBasis hb = homology_basis(c, i);
        const Index b = hb.basis.cols();
        RatMatrix m = zero_matrix<Rational>(b, b);
        IntMatrix fi = map.component(i);
        for (Index j = 0; j < b; ++j) {
            IntVector z = fi * hb.basis.col(j);
            IntVector coords = homology_coordinates(hb, z);
            for (Index k = 0; k < b; ++k)
                m(k, j) = Rational(coords(k));
        }
        out.push_back(std::move(m));
    }
    return out;
}

HomologySummary homology(const ChainMap& map)
{
    HomologySummary out = homology(map.source());
    out.induced = induced_homology_map(map);
    return out;
}

Integer lefschetz_from_homology(const ChainMap& map)
{
    Rational total = 0;
    std::vector<RatMatrix> induced = induced_homology_map(map);
    for (std::size_t i = 0; i < induced.size(); ++i) {
        Rational tr = 0;
        for (Index k = 0; k < induced[i].rows(); ++k)
            tr += induced[i](k, k);
        total += (i % 2 == 0 ? 1 : -1) * tr;
    }
    return to_integer(total);
}

Integer hopf_chain_trace(const ChainMap& map)
{
    if (!map.is_endomorphism())
        throw InputError("hopf_chain_trace: chain map is not a self-map");
    Integer total = 0;
    for (int i = 0; i <= map.source().top_degree(); ++i) {
        IntMatrix f = map.component(i);
        Integer tr = 0;
        for (Index k = 0; k < f.rows(); ++k)
            tr += f(k, k);
        total += (i % 2 == 0 ? 1 : -1) * tr;
    }
    return total;
}

// ---------------------------------------------------------------------------
// Tensor products

namespace {

struct TensorLayout {
    // offsets[n][p] = start of block (p, n - p) inside degree n, or -1 if absent.
    std::vector<std::vector<Index>> offsets;
    std::vector<Index> ranks;
};

TensorLayout tensor_layout(const ChainComplex& c, const ChainComplex& d)
{
    TensorLayout l;
    const int top = c.top_degree() + d.top_degree();
    if (c.top_degree() < 0 || d.top_degree() < 0)
        return l;
    l.offsets.assign(top + 1, std::vector<Index>(c.top_degree() + 1, -1));
    l.ranks.assign(top + 1, 0);
    for (int n = 0; n <= top; ++n)
        for (int p = 0; p <= c.top_degree(); ++p) {
            int q = n - p;
            if (q < 0 || q > d.top_degree())
                continue;
            l.offsets[n][p] = l.ranks[n];
            l.ranks[n] += c.rank(p) * d.rank(q);
        }
    return l;
}

} // namespace

ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d)
{
    TensorLayout l = tensor_layout(c, d);
    const int top = static_cast<int>(l.ranks.size()) - 1;
    std::vector<IntMatrix> boundaries(top + 1);
    for (int n = 1; n <= top; ++n) {
        IntMatrix b = zero_matrix<Integer>(l.ranks[n - 1], l.ranks[n]);
        for (int p = 0; p <= c.top_degree(); ++p) {
            int q = n - p;
            if (l.offsets[n][p] < 0)
                continue;
            const Index col = l.offsets[n][p];
            const Index width = c.rank(p) * d.rank(q);
            if (p >= 1 && l.offsets[n - 1][p - 1] >= 0) {
                IntMatrix blk = kronecker<Integer>(c.boundary(p), identity_matrix<Integer>(d.rank(q)));
                b.block(l.offsets[n - 1][p - 1], col, blk.rows(), width) = blk;
            }
            if (q >= 1 && l.offsets[n - 1][p] >= 0) {
                IntMatrix blk = kronecker<Integer>(identity_matrix<Integer>(c.rank(p)), d.boundary(q));
                if (p % 2 == 1)
                    blk = -blk;
                b.block(l.offsets[n - 1][p], col, blk.rows(), width) = blk;
            }
        }
        boundaries[n] = std::move(b);
    }
    return ChainComplex(l.ranks, std::move(boundaries));
}

ChainMap tensor_chain_map(const ChainMap& f, const ChainMap& g)
{
    auto source = std::make_shared<const ChainComplex>(tensor_complex(f.source(), g.source()));
    auto target = std::make_shared<const ChainComplex>(tensor_complex(f.target(), g.target()));
    TensorLayout ls = tensor_layout(f.source(), g.source());
    TensorLayout lt = tensor_layout(f.target(), g.target());
    const int top = source->top_degree();
    std::vector<IntMatrix> comps(top + 1);
    for (int n = 0; n <= top; ++n) {
        IntMatrix m = zero_matrix<Integer>(target->rank(n), source->rank(n));
        for (int p = 0; p <= f.source().top_degree(); ++p) {
            if (ls.offsets[n][p] < 0 || lt.offsets[n][p] < 0)
                continue;
            IntMatrix blk = kronecker<Integer>(f.component(p), g.component(n - p));
            m.block(lt.offsets[n][p], ls.offsets[n][p], blk.rows(), blk.cols()) = blk;
        }
        comps[n] = std::move(m);
    }
    return ChainMap(source, target, std::move(comps));
}

bool induce_equal_homology(const ChainMap& f, const ChainMap& g)
{
    const ChainComplex& src = f.source();
    const ChainComplex& tgt = f.target();
    if (src.ranks() != g.source().ranks() || tgt.ranks() != g.target().ranks())
        throw InputError("induce_equal_homology: chain maps have different shapes");
    for (int i = 0; i <= src.top_degree(); ++i) {
        HomologyBasis hb = homology_basis(src, i);
        if (hb.basis.cols() == 0)
            continue;
        IntMatrix diff = product<Integer>(f.component(i) - g.component(i), hb.basis);
        IntMatrix image = tgt.boundary(i + 1);
        IntMatrix joined(image.rows(), image.cols() + diff.cols());
        joined << image, diff;
        if (rational_rank(joined) != rational_rank(image))
            return false;
    }
    return true;
}

} // namespace fixpt
