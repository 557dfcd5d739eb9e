#ifndef FIXPT_CLI_IO_HPP
#define FIXPT_CLI_IO_HPP

#include "fixpt/bundles/bundle.hpp"

#include <json.hpp>

namespace fixpt::io {

using Json = nlohmann::ordered_json;

/// Parses text; syntax errors become InputError with origin:line:column.
Json parse_text(const std::string& text, const std::string& origin);
/// Reads and parses a file ("-" is stdin). raw receives the bytes read.
Json read_document(const std::string& path, std::string* raw = nullptr);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);
/// A JSON number when it fits in 64 bits, else a decimal string.
Json integer_json(const Integer& n);
/// Lowercase hex SHA-256.
std::string sha256_hex(const std::string& bytes);

Json emit_complex(const SimplicialComplex& k);
std::shared_ptr<const SimplicialComplex> parse_complex(const Json& j, const std::string& where);

/// {vertex_images, edge_walks?} of a map whose complexes are implied by the context.
Json emit_map_body(const SimplicialMap& f);
SimplicialMap parse_map_body(const Json& j, std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, const std::string& where);

/// Self-map document with an inline complex (or a catalog name), basepath and optional fixed points.
struct MapDocument {
    SimplicialMap map;
    VertexWalk basepath;
    std::vector<FixedPointSite> fixed_points;
};

Json emit_map(const MapDocument& m);
MapDocument parse_map(const Json& j, const std::string& where);

VertexWalk parse_walk(const Json& j, const SimplicialComplex& k, const std::string& where);
Json emit_walk(const VertexWalk& w, const SimplicialComplex& k);

Json emit_bundle(const DiscreteBundle& b);
DiscreteBundle parse_bundle(const Json& j, const std::string& where);

Json emit_pair(const BundleSelfMapPair& p);
BundleSelfMapPair parse_pair(const Json& j, const std::string& where);

Json emit_word(const EdgeWord& w, const GraphBase& base);
EdgeWord parse_word(const Json& j, const GraphBase& base, const std::string& where);

} // namespace fixpt::io

#endif
