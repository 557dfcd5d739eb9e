#include "fixpt/cli/io.hpp"

#include "fixpt/cli/catalog.hpp"
#include "fixpt/errors.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

namespace fixpt::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        throw InputError(where + ": expected an object");
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(where + ": missing field '" + key + "'");
    return *it;
}

std::string text(const Json& j, const std::string& where)
{
    if (!j.is_string())
        throw InputError(where + ": expected a string");
    return j.get<std::string>();
}

int vertex_of(const SimplicialComplex& k, const Json& j, const std::string& where)
{
    std::string name = text(j, where);
    int v = k.vertex_index(name);
    if (v < 0)
        throw InputError(where + ": unknown vertex '" + name + "'");
    return v;
}

const Json& object_field(const Json& j, const char* key, const std::string& where)
{
    const Json& f = field(j, key, where);
    if (!f.is_object())
        throw InputError(where + "." + key + ": expected an object");
    return f;
}

Integer integer(const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Integer(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Integer(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InputError(where + ": expected an integer");
}

} // namespace

Json integer_json(const Integer& n)
{
    if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max())
        return n.convert_to<std::int64_t>();
    return to_string(n);
}

Json parse_text(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        std::string msg = e.what();
        auto pos = msg.find("parse error");
        throw InputError(origin + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " +
                         (pos == std::string::npos ? msg : msg.substr(pos)));
    }
}

Json read_document(const std::string& path, std::string* raw)
{
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InputError("cannot read '" + path + "'");
        buf << in.rdbuf();
    }
    std::string s = buf.str();
    if (raw)
        *raw = s;
    return parse_text(s, path == "-" ? "<stdin>" : path);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string sha256_hex(const std::string& bytes)
{
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (!EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr))
        throw std::runtime_error("sha256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

Json emit_complex(const SimplicialComplex& k)
{
    Json j;
    j["vertices"] = k.names();
    Json simplices = Json::array();
    auto maximal = k.maximal_simplices();
    std::sort(maximal.begin(), maximal.end());
    for (const Simplex& s : maximal) {
        Json row = Json::array();
        for (int v : s)
            row.push_back(k.vertex_name(v));
        simplices.push_back(row);
    }
    j["simplices"] = simplices;
    return j;
}

std::shared_ptr<const SimplicialComplex> parse_complex(const Json& j, const std::string& where)
{
    if (j.is_string())
        return catalog::complex_by_name(j.get<std::string>());
    const Json& vs = field(j, "vertices", where);
    if (!vs.is_array())
        throw InputError(where + ".vertices: expected an array");
    std::vector<std::string> names;
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::string name = text(vs[i], where + ".vertices[" + std::to_string(i) + "]");
        if (!index.emplace(name, static_cast<int>(names.size())).second)
            throw InputError(where + ".vertices: repeated id '" + name + "'");
        names.push_back(name);
    }
    const Json& ss = field(j, "simplices", where);
    if (!ss.is_array())
        throw InputError(where + ".simplices: expected an array");
    std::vector<Simplex> simplices;
    for (std::size_t i = 0; i < ss.size(); ++i) {
        const std::string w = where + ".simplices[" + std::to_string(i) + "]";
        if (!ss[i].is_array() || ss[i].empty())
            throw InputError(w + ": expected a non-empty array of vertex ids");
        Simplex s;
        for (std::size_t t = 0; t < ss[i].size(); ++t) {
            std::string name = text(ss[i][t], w + "[" + std::to_string(t) + "]");
            auto it = index.find(name);
            if (it == index.end())
                throw InputError(w + ": unknown vertex '" + name + "'");
            s.push_back(it->second);
        }
        simplices.push_back(std::move(s));
    }
    try {
        return std::make_shared<const SimplicialComplex>(build_complex(std::move(names), simplices));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

VertexWalk parse_walk(const Json& j, const SimplicialComplex& k, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array");
    VertexWalk w;
    if (!j.empty() && j[0].is_array()) {
        // edge form [[u, v], [v, x], ...]
        for (std::size_t i = 0; i < j.size(); ++i) {
            const std::string wi = where + "[" + std::to_string(i) + "]";
            if (!j[i].is_array() || j[i].size() != 2)
                throw InputError(wi + ": expected an edge [u, v]");
            int u = vertex_of(k, j[i][0], wi), v = vertex_of(k, j[i][1], wi);
            if (!w.empty() && w.back() != u)
                throw InputError(wi + ": edge does not continue the path");
            if (w.empty())
                w.push_back(u);
            w.push_back(v);
        }
        return w;
    }
    for (std::size_t i = 0; i < j.size(); ++i)
        w.push_back(vertex_of(k, j[i], where + "[" + std::to_string(i) + "]"));
    return w;
}

Json emit_walk(const VertexWalk& w, const SimplicialComplex& k)
{
    Json j = Json::array();
    for (int v : w)
        j.push_back(k.vertex_name(v));
    return j;
}

Json emit_map_body(const SimplicialMap& f)
{
    Json j;
    Json images = Json::object();
    for (int v = 0; v < f.source().vertex_count(); ++v)
        images[f.source().vertex_name(v)] = f.target().vertex_name(f(v));
    j["vertex_images"] = images;
    if (!f.edge_walks().empty()) {
        Json walks = Json::array();
        for (const auto& [e, w] : f.edge_walks()) {
            const Simplex& s = f.source().simplex(1, e);
            Json item;
            item["edge"] = {f.source().vertex_name(s[0]), f.source().vertex_name(s[1])};
            item["walk"] = emit_walk(w, f.target());
            walks.push_back(item);
        }
        j["edge_walks"] = walks;
    }
    return j;
}

SimplicialMap parse_map_body(const Json& j, std::shared_ptr<const SimplicialComplex> source,
                             std::shared_ptr<const SimplicialComplex> target, const std::string& where)
{
    const Json& imgs = object_field(j, "vertex_images", where);
    std::vector<int> images(source->vertex_count(), -1);
    for (auto it = imgs.begin(); it != imgs.end(); ++it) {
        int v = source->vertex_index(it.key());
        if (v < 0)
            throw InputError(where + ".vertex_images: unknown source vertex '" + it.key() + "'");
        images[v] = vertex_of(*target, it.value(), where + ".vertex_images." + it.key());
    }
    for (int v = 0; v < source->vertex_count(); ++v)
        if (images[v] < 0)
            throw InputError(where + ".vertex_images: no image for '" + source->vertex_name(v) + "'");
    std::map<Index, VertexWalk> walks;
    if (auto it = j.find("edge_walks"); it != j.end()) {
        if (!it->is_array())
            throw InputError(where + ".edge_walks: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string wi = where + ".edge_walks[" + std::to_string(i) + "]";
            const Json& edge = field((*it)[i], "edge", wi);
            if (!edge.is_array() || edge.size() != 2)
                throw InputError(wi + ".edge: expected [u, v]");
            int u = vertex_of(*source, edge[0], wi + ".edge"), v = vertex_of(*source, edge[1], wi + ".edge");
            Index e = source->edge_index(std::min(u, v), std::max(u, v));
            if (e < 0)
                throw InputError(wi + ".edge: not an edge of the source");
            VertexWalk w = parse_walk(field((*it)[i], "walk", wi), *target, wi + ".walk");
            if (u > v)
                w = reverse_walk(w);
            if (!walks.emplace(e, w).second)
                throw InputError(wi + ": repeated edge");
        }
    }
    try {
        return SimplicialMap(std::move(source), std::move(target), std::move(images), std::move(walks));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

Json emit_map(const MapDocument& m)
{
    Json j;
    j["complex"] = emit_complex(m.map.source());
    Json body = emit_map_body(m.map);
    for (auto& [k, v] : body.items())
        j[k] = v;
    if (!m.basepath.empty())
        j["basepath"] = emit_walk(m.basepath, m.map.source());
    if (!m.fixed_points.empty()) {
        Json fps = Json::array();
        for (const auto& s : m.fixed_points) {
            Json r;
            r["label"] = s.label;
            r["index"] = integer_json(s.index);
            if (s.vertex)
                r["vertex"] = m.map.source().vertex_name(*s.vertex);
            if (s.loop)
                r["loop"] = emit_walk(*s.loop, m.map.source());
            fps.push_back(r);
        }
        j["fixed_points"] = fps;
    }
    return j;
}

MapDocument parse_map(const Json& j, const std::string& where)
{
    auto k = parse_complex(field(j, "complex", where), where + ".complex");
    MapDocument m;
    m.map = parse_map_body(j, k, k, where);
    if (auto it = j.find("basepath"); it != j.end())
        m.basepath = parse_walk(*it, *k, where + ".basepath");
    if (auto it = j.find("fixed_points"); it != j.end()) {
        if (!it->is_array())
            throw InputError(where + ".fixed_points: expected an array");
        for (std::size_t i = 0; i < it->size(); ++i) {
            const std::string wi = where + ".fixed_points[" + std::to_string(i) + "]";
            const Json& r = (*it)[i];
            FixedPointSite s;
            s.label = r.contains("label") ? text(r["label"], wi + ".label") : std::to_string(i);
            s.index = integer(field(r, "index", wi), wi + ".index");
            if (r.contains("vertex"))
                s.vertex = vertex_of(*k, r["vertex"], wi + ".vertex");
            if (r.contains("loop"))
                s.loop = parse_walk(r["loop"], *k, wi + ".loop");
            if (s.vertex.has_value() == s.loop.has_value())
                throw InputError(wi + ": give exactly one of 'vertex' and 'loop'");
            m.fixed_points.push_back(std::move(s));
        }
    }
    return m;
}

Json emit_word(const EdgeWord& w, const GraphBase& base)
{
    Json j = Json::array();
    for (const EdgeStep& s : w)
        j.push_back((s.forward ? "" : "-") + base.edges()[s.edge].id);
    return j;
}

EdgeWord parse_word(const Json& j, const GraphBase& base, const std::string& where)
{
    if (!j.is_array())
        throw InputError(where + ": expected an array of edge ids");
    EdgeWord w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string id = text(j[i], where + "[" + std::to_string(i) + "]");
        bool forward = true;
        if (!id.empty() && id[0] == '-') {
            forward = false;
            id = id.substr(1);
        }
        int e = base.edge_position(id);
        if (e < 0)
            throw InputError(where + "[" + std::to_string(i) + "]: unknown edge '" + id + "'");
        w.push_back({e, forward});
    }
    return w;
}

Json emit_bundle(const DiscreteBundle& b)
{
    const GraphBase& base = b.base();
    Json j;
    Json bj;
    bj["vertices"] = base.vertices();
    Json edges = Json::array();
    for (const BaseEdge& e : base.edges())
        edges.push_back(Json{{"id", e.id}, {"src", base.vertices()[e.src]}, {"dst", base.vertices()[e.dst]}});
    bj["edges"] = edges;
    Json tree = Json::array();
    for (int e : base.tree())
        tree.push_back(base.edges()[e].id);
    bj["tree"] = tree;
    bj["basepoint"] = base.vertices()[base.basepoint()];
    j["base"] = bj;
    Json fibers = Json::object();
    for (int v = 0; v < base.vertex_count(); ++v)
        fibers[base.vertices()[v]] = emit_complex(b.fiber(v));
    j["fibers"] = fibers;
    Json transports = Json::object();
    for (int e = 0; e < base.edge_count(); ++e)
        transports[base.edges()[e].id] =
            Json{{"map", emit_map_body(b.edge_transport(e).map)}, {"inverse", emit_map_body(b.edge_transport(e).inverse)}};
    j["transports"] = transports;
    return j;
}

DiscreteBundle parse_bundle(const Json& j, const std::string& where)
{
    const std::string wb = where + ".base";
    const Json& bj = object_field(j, "base", where);
    const Json& vs = field(bj, "vertices", wb);
    if (!vs.is_array())
        throw InputError(wb + ".vertices: expected an array");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i)
        vertices.push_back(text(vs[i], wb + ".vertices[" + std::to_string(i) + "]"));
    auto vertex = [&](const Json& x, const std::string& w) {
        std::string name = text(x, w);
        auto it = std::find(vertices.begin(), vertices.end(), name);
        if (it == vertices.end())
            throw InputError(w + ": unknown base vertex '" + name + "'");
        return static_cast<int>(it - vertices.begin());
    };
    const Json& es = field(bj, "edges", wb);
    if (!es.is_array())
        throw InputError(wb + ".edges: expected an array");
    std::vector<BaseEdge> edges;
    for (std::size_t i = 0; i < es.size(); ++i) {
        const std::string we = wb + ".edges[" + std::to_string(i) + "]";
        edges.push_back({text(field(es[i], "id", we), we + ".id"), vertex(field(es[i], "src", we), we + ".src"),
                         vertex(field(es[i], "dst", we), we + ".dst")});
    }
    const Json& ts = field(bj, "tree", wb);
    if (!ts.is_array())
        throw InputError(wb + ".tree: expected an array");
    std::vector<int> tree;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        std::string id = text(ts[i], wb + ".tree[" + std::to_string(i) + "]");
        auto it = std::find_if(edges.begin(), edges.end(), [&](const BaseEdge& e) { return e.id == id; });
        if (it == edges.end())
            throw InputError(wb + ".tree: unknown edge '" + id + "'");
        tree.push_back(static_cast<int>(it - edges.begin()));
    }
    int basepoint = vertex(field(bj, "basepoint", wb), wb + ".basepoint");
    GraphBase base;
    try {
        base = GraphBase(vertices, edges, tree, basepoint);
    } catch (const InputError& e) {
        throw InputError(wb + ": " + e.what());
    }

    const Json& fj = object_field(j, "fibers", where);
    std::vector<std::shared_ptr<const SimplicialComplex>> fibers;
    for (const std::string& v : vertices) {
        if (!fj.contains(v))
            throw InputError(where + ".fibers: no fiber over '" + v + "'");
        fibers.push_back(parse_complex(fj[v], where + ".fibers." + v));
    }
    for (auto it = fj.begin(); it != fj.end(); ++it)
        if (std::find(vertices.begin(), vertices.end(), it.key()) == vertices.end())
            throw InputError(where + ".fibers: unknown base vertex '" + it.key() + "'");
    const Json& tj = object_field(j, "transports", where);
    std::vector<Transport> transports;
    for (const BaseEdge& e : edges) {
        const std::string wt = where + ".transports." + e.id;
        if (!tj.contains(e.id))
            throw InputError(where + ".transports: no transport for edge '" + e.id + "'");
        const Json& t = tj[e.id];
        transports.push_back({parse_map_body(field(t, "map", wt), fibers[e.src], fibers[e.dst], wt + ".map"),
                              parse_map_body(field(t, "inverse", wt), fibers[e.dst], fibers[e.src], wt + ".inverse")});
    }
    for (auto it = tj.begin(); it != tj.end(); ++it)
        if (base.edge_position(it.key()) < 0)
            throw InputError(where + ".transports: unknown edge '" + it.key() + "'");
    try {
        return DiscreteBundle(std::move(base), std::move(fibers), std::move(transports));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

Json emit_pair(const BundleSelfMapPair& p)
{
    const GraphBase& base = p.base();
    Json j;
    j["bundle"] = emit_bundle(p.bundle());
    Json bm;
    Json images = Json::object();
    for (int v = 0; v < base.vertex_count(); ++v)
        images[base.vertices()[v]] = base.vertices()[p.base_images()[v]];
    bm["vertex_images"] = images;
    Json words = Json::object();
    for (int e = 0; e < base.edge_count(); ++e)
        words[base.edges()[e].id] = emit_word(p.edge_word(e), base);
    bm["edge_words"] = words;
    j["base_map"] = bm;
    Json fm = Json::object();
    for (int v = 0; v < base.vertex_count(); ++v)
        fm[base.vertices()[v]] = emit_map_body(p.fiber_map(v));
    j["fiber_maps"] = fm;
    if (p.supplied_total_map())
        j["total_map"] = emit_map_body(*p.supplied_total_map());
    return j;
}

BundleSelfMapPair parse_pair(const Json& j, const std::string& where)
{
    DiscreteBundle bundle = parse_bundle(field(j, "bundle", where), where + ".bundle");
    const GraphBase& base = bundle.base();
    const std::string wm = where + ".base_map";
    const Json& bm = object_field(j, "base_map", where);
    const Json& imgs = object_field(bm, "vertex_images", wm);
    std::vector<int> images(base.vertex_count(), -1);
    for (auto it = imgs.begin(); it != imgs.end(); ++it) {
        int v = base.vertex_position(it.key());
        if (v < 0)
            throw InputError(wm + ".vertex_images: unknown base vertex '" + it.key() + "'");
        std::string t = text(it.value(), wm + ".vertex_images." + it.key());
        images[v] = base.vertex_position(t);
        if (images[v] < 0)
            throw InputError(wm + ".vertex_images." + it.key() + ": unknown base vertex '" + t + "'");
    }
    for (int v = 0; v < base.vertex_count(); ++v)
        if (images[v] < 0)
            throw InputError(wm + ".vertex_images: no image for '" + base.vertices()[v] + "'");
    const Json& ws = object_field(bm, "edge_words", wm);
    std::vector<EdgeWord> words;
    for (const BaseEdge& e : base.edges()) {
        if (!ws.contains(e.id))
            throw InputError(wm + ".edge_words: no word for edge '" + e.id + "'");
        words.push_back(parse_word(ws[e.id], base, wm + ".edge_words." + e.id));
    }
    const Json& fm = object_field(j, "fiber_maps", where);
    std::vector<SimplicialMap> fiber_maps;
    for (int v = 0; v < base.vertex_count(); ++v) {
        const std::string& name = base.vertices()[v];
        if (!fm.contains(name))
            throw InputError(where + ".fiber_maps: no map over '" + name + "'");
        fiber_maps.push_back(parse_map_body(fm[name], bundle.fiber_ptr(v), bundle.fiber_ptr(images[v]),
                                            where + ".fiber_maps." + name));
    }
    std::optional<SimplicialMap> total;
    if (auto it = j.find("total_map"); it != j.end() && !it->is_null()) {
        TotalSpace ts = total_space(bundle);
        total = parse_map_body(*it, ts.complex, ts.complex, where + ".total_map");
    }
    try {
        return BundleSelfMapPair(std::move(bundle), std::move(images), std::move(words), std::move(fiber_maps),
                                 std::move(total));
    } catch (const InputError& e) {
        throw InputError(where + ": " + e.what());
    }
}

} // namespace fixpt::io
