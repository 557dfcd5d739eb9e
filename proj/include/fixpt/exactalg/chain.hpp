#ifndef FIXPT_EXACTALG_CHAIN_HPP
#define FIXPT_EXACTALG_CHAIN_HPP

#include "fixpt/exactalg/types.hpp"

#include <memory>
#include <vector>

namespace fixpt {

/**
 * A finite free chain complex C_0 <- C_1 <- ... <- C_D over the integers.
 *
 * boundary(i) is the n_{i-1} x n_i matrix of d_i in column convention (a chain
 * is a column vector). Degrees outside [0, D] have rank zero.
 */
class ChainComplex {
public:
    ChainComplex() = default;

    /// Throws InputError on shape mismatch or if some d_i d_{i+1} != 0.
    ChainComplex(std::vector<Index> ranks, std::vector<IntMatrix> boundaries);

    int top_degree() const { return static_cast<int>(ranks_.size()) - 1; }
    Index rank(int degree) const;
    const std::vector<Index>& ranks() const { return ranks_; }

    /// d_i : C_i -> C_{i-1}; an empty-shaped matrix for degrees without a boundary.
    IntMatrix boundary(int degree) const;

    Integer euler_characteristic() const;

private:
    std::vector<Index> ranks_;
    std::vector<IntMatrix> boundaries_; // boundaries_[i] = d_i, boundaries_[0] unused
};

/// Degreewise integer matrices f_i : C_i -> D_i commuting with the boundaries.
class ChainMap {
public:
    ChainMap() = default;

    /// Throws InputError if shapes mismatch or the boundary square fails to commute.
    ChainMap(std::shared_ptr<const ChainComplex> source, std::shared_ptr<const ChainComplex> target,
             std::vector<IntMatrix> components);

    const ChainComplex& source() const { return *source_; }
    const ChainComplex& target() const { return *target_; }
    std::shared_ptr<const ChainComplex> source_ptr() const { return source_; }
    std::shared_ptr<const ChainComplex> target_ptr() const { return target_; }

    /// f_i; a zero matrix of the right shape outside the stored range.
    IntMatrix component(int degree) const;
    int top_degree() const { return static_cast<int>(components_.size()) - 1; }

    bool is_endomorphism() const;

private:
    std::shared_ptr<const ChainComplex> source_, target_;
    std::vector<IntMatrix> components_;
};

struct HomologyDegree {
    Index betti = 0;
    std::vector<Integer> torsion; // invariant factors > 1
};

struct HomologySummary {
    std::vector<HomologyDegree> degrees;
    /// Induced maps on H_i(-; Q), filled in only when a chain map was supplied.
    std::vector<RatMatrix> induced;

    std::vector<Index> betti_numbers() const;
};

HomologySummary homology(const ChainComplex& complex);

/// Homology of the source together with the induced self-maps on rational homology.
HomologySummary homology(const ChainMap& map);

/**
 * Matrices of the induced endomorphisms of H_i(-; Q).
 *
 * The basis of H_i is built from SNF(d_{i+1}) = U d V: the columns of U^-1 past
 * the rank complement the boundaries, and a second SNF of d_i restricted to
 * those columns picks the cycles among them (its trailing V columns). The
 * matrices are therefore reproducible, although only their traces are
 * basis independent.
 */
std::vector<RatMatrix> induced_homology_map(const ChainMap& map);

/// sum (-1)^i tr H_i(f; Q); throws if the alternating sum is not integral.
Integer lefschetz_from_homology(const ChainMap& map);

/// sum (-1)^i tr f_i at the chain level.
Integer hopf_chain_trace(const ChainMap& map);

/// Total complex of C (x) D with d(a (x) b) = da (x) b + (-1)^p a (x) db.
ChainComplex tensor_complex(const ChainComplex& c, const ChainComplex& d);

/// f (x) g on the tensor complex of the two sources.
ChainMap tensor_chain_map(const ChainMap& f, const ChainMap& g);

/// Whether two chain maps with the same source and target agree on rational homology.
bool induce_equal_homology(const ChainMap& f, const ChainMap& g);

/// Rank of an integer matrix over Q.
Index rational_rank(const IntMatrix& m);

} // namespace fixpt

#endif
