#ifndef FIXPT_SIMPLICIAL_COMPLEX_HPP
#define FIXPT_SIMPLICIAL_COMPLEX_HPP

#include "fixpt/exactalg/chain.hpp"

#include <map>
#include <string>
#include <vector>

namespace fixpt {

/// A simplex as a strictly increasing tuple of vertex indices.
using Simplex = std::vector<int>;

/**
 * Finite abstract simplicial complex over an ordered vertex set.
 *
 * Vertex i is names()[i]; the declaration order is the global vertex order and
 * every orientation sign is taken relative to it. Simplices of each dimension
 * are stored sorted lexicographically, so simplex indices are canonical.
 */
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    const std::vector<std::string>& names() const { return names_; }
    int vertex_count() const { return static_cast<int>(names_.size()); }
    int vertex_index(const std::string& name) const; // -1 if unknown
    const std::string& vertex_name(int v) const { return names_.at(v); }

    int dimension() const { return static_cast<int>(simplices_.size()) - 1; }
    Index count(int dim) const;
    const Simplex& simplex(int dim, Index i) const { return simplices_.at(dim).at(i); }
    const std::vector<Simplex>& simplices(int dim) const;
    std::vector<Simplex> maximal_simplices() const;

    /// Index of a sorted simplex, or -1 if it is not in the complex.
    Index find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s) >= 0; }
    bool adjacent(int u, int v) const;
    /// Sorted neighbours in the 1-skeleton.
    const std::vector<int>& neighbors(int v) const { return neighbors_.at(v); }
    Index edge_index(int u, int v) const;

    Integer euler_characteristic() const;

    /// Connected components as sorted vertex lists, ordered by least vertex.
    std::vector<std::vector<int>> components() const;
    /// component_of()[v] = index into components().
    std::vector<int> component_of() const;

    /// Full subcomplex on a vertex subset, with vertex order inherited.
    SimplicialComplex induced_subcomplex(const std::vector<int>& vertices) const;

    bool operator==(const SimplicialComplex& other) const
    {
        return names_ == other.names_ && simplices_ == other.simplices_;
    }

    friend SimplicialComplex build_complex(std::vector<std::string>, const std::vector<Simplex>&);

private:
    std::vector<std::string> names_;
    std::map<std::string, int> lookup_;
    std::vector<std::vector<Simplex>> simplices_;
    std::vector<std::map<Simplex, Index>> index_;
    std::vector<std::vector<int>> neighbors_;
};

/**
 * Face closure of a set of simplices over the named vertices. Simplices may be
 * given in any vertex order; a repeated vertex or an out-of-range index is an
 * InputError. Every named vertex becomes a 0-simplex.
 */
SimplicialComplex build_complex(std::vector<std::string> names, const std::vector<Simplex>& simplices);

/// Same, naming vertices "0", "1", ... n-1.
SimplicialComplex build_complex(int vertex_count, const std::vector<Simplex>& simplices);

/// Oriented simplicial chains with d[v0..vn] = sum (-1)^i [v0..^vi..vn].
ChainComplex chain_complex(const SimplicialComplex& k);

/**
 * Staircase triangulation of |K| x |L|. Vertex (a, b) is named "a|b" and the
 * vertex order is K-major; each product of simplices is cut into the monotone
 * lattice paths of its grid.
 */
SimplicialComplex product_complex(const SimplicialComplex& k, const SimplicialComplex& l);

/// Sign of the permutation sorting xs (0 if xs has a repeated entry).
int sorting_sign(std::vector<int> xs);

} // namespace fixpt

#endif
