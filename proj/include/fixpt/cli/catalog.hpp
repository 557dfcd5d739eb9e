#ifndef FIXPT_CLI_CATALOG_HPP
#define FIXPT_CLI_CATALOG_HPP

#include "fixpt/cli/io.hpp"

namespace fixpt::catalog {

enum class Kind { Complex, Map, Pair };

std::string to_string(Kind k);

/// Expected (ind_C, L(f_C)) for one base class, in canonical class order.
struct ClassOracle {
    Integer index;
    Integer lefschetz;
};

struct Oracle {
    std::string provenance; // analytic, lattice-enumeration, worked-example, trivial
    std::optional<Integer> lefschetz;
    std::optional<Index> nielsen;
    std::optional<Integer> uniform_coefficient; // every nonzero R coefficient
    std::optional<Integer> euler;               // chi(E) of an identity pair
    std::vector<ClassOracle> classes;
    std::vector<FixedPointSite> total_fixed_points; // pairs; basepoint is the first total vertex
    std::optional<std::string> expected_verdict;    // when it is not Pass
};

struct Entry {
    std::string name; // canonical, parameters included
    std::string family;
    std::vector<std::string> parameters;
    Kind kind = Kind::Complex;
    std::string notes;
    std::shared_ptr<const SimplicialComplex> complex;
    std::optional<io::MapDocument> map;
    std::optional<BundleSelfMapPair> pair;
    Oracle oracle;
};

struct Family {
    std::string name;
    std::string syntax;
    std::string summary;
};

const std::vector<Family>& families();
/// One instance per family plus the parameter choices the test suites use.
std::vector<std::string> standard_names();

/// "family" or "family:p1,p2,..."; InputError for unknown names or bad parameters.
Entry make(const std::string& name);
std::shared_ptr<const SimplicialComplex> complex_by_name(const std::string& name);

io::Json emit(const Entry& e);

/// The object an input document describes: catalog wrappers are unwrapped to their payload.
io::Json payload(const io::Json& doc, Kind wanted);

} // namespace fixpt::catalog

#endif
