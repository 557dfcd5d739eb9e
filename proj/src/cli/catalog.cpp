#include "fixpt/cli/catalog.hpp"

#include "fixpt/errors.hpp"
#include "fixpt/exactalg/smith.hpp"

#include <sstream>

namespace fixpt::catalog {

std::string to_string(Kind k)
{
    switch (k) {
    case Kind::Complex:
        return "complex";
    case Kind::Map:
        return "map";
    case Kind::Pair:
        return "pair";
    }
    return "?";
}

namespace {

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

int mod(long long a, long long n) { return static_cast<int>(((a % n) + n) % n); }

Integer sign(const Integer& x) { return Integer(sign_of(x)); }

std::vector<long long> int_params(const std::vector<std::string>& ps, const std::string& family)
{
    std::vector<long long> out;
    for (const std::string& p : ps) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(p, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != p.size())
            throw InputError("catalog: " + family + ": parameter '" + p + "' is not an integer");
        out.push_back(v);
    }
    return out;
}

std::vector<std::string> numbered(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        names.push_back(std::to_string(i));
    return names;
}

ComplexPtr cycle(int n, std::vector<std::string> names = {})
{
    if (names.empty())
        names = numbered(n);
    std::vector<Simplex> edges;
    for (int i = 0; i < n; ++i)
        edges.push_back({i, (i + 1) % n});
    return std::make_shared<const SimplicialComplex>(build_complex(std::move(names), edges));
}

/// Walk of |d| steps around an n-cycle, forward for d > 0.
VertexWalk turn(int start, long long d, int n)
{
    VertexWalk w{start};
    for (long long k = 0; k < (d < 0 ? -d : d); ++k)
        w.push_back(mod(w.back() + (d > 0 ? 1 : -1), n));
    return w;
}

/// z -> z^d on an n-cycle: vertex i to d i, edge (i, i+1) to a d-step walk.
SimplicialMap degree_map(ComplexPtr source, ComplexPtr target, long long d)
{
    const int n = source->vertex_count();
    std::vector<int> images;
    for (int i = 0; i < n; ++i)
        images.push_back(mod(d * i, n));
    std::map<Index, VertexWalk> walks;
    for (int i = 0; i < n; ++i) {
        const int j = (i + 1) % n;
        VertexWalk w = turn(images[i], d, n);
        if (i > j)
            w = reverse_walk(w);
        walks[source->edge_index(std::min(i, j), std::max(i, j))] = w;
    }
    return SimplicialMap(std::move(source), std::move(target), std::move(images), std::move(walks));
}

/// m positive turns around an n-cycle from vertex 0.
VertexWalk turns(long long m, int n)
{
    VertexWalk w{0};
    for (long long k = 0; k < m * n; ++k)
        w.push_back(mod(w.back() + 1, n));
    return w;
}

// n x n grid torus; vertex (i, j) is i n + j; edges along i, along j and along the (1, 1) diagonal
int grid_vertex(long long i, long long j, int n) { return mod(i, n) * n + mod(j, n); }

ComplexPtr grid_torus(int n)
{
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            names.push_back(std::to_string(i) + "." + std::to_string(j));
    std::vector<Simplex> triangles;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            triangles.push_back({grid_vertex(i, j, n), grid_vertex(i + 1, j, n), grid_vertex(i + 1, j + 1, n)});
            triangles.push_back({grid_vertex(i, j, n), grid_vertex(i, j + 1, n), grid_vertex(i + 1, j + 1, n)});
        }
    return std::make_shared<const SimplicialComplex>(build_complex(std::move(names), triangles));
}

/// Lattice path from (i, j) along (x, y): diagonal steps while both move the same way, then axis steps.
VertexWalk lattice_walk(long long i, long long j, long long x, long long y, int n)
{
    VertexWalk w{grid_vertex(i, j, n)};
    while (x != 0 || y != 0) {
        const int sx = (x > 0) - (x < 0), sy = (y > 0) - (y < 0);
        if (sx != 0 && sx == sy) {
            i += sx;
            j += sy;
            x -= sx;
            y -= sy;
        } else if (sx != 0) {
            i += sx;
            x -= sx;
        } else {
            j += sy;
            y -= sy;
        }
        w.push_back(grid_vertex(i, j, n));
    }
    return w;
}

std::string join(const std::vector<std::string>& ps)
{
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i)
        s += (i ? "," : "") + ps[i];
    return s;
}

void expect_count(const std::vector<std::string>& ps, std::size_t lo, std::size_t hi, const std::string& family)
{
    if (ps.size() < lo || ps.size() > hi)
        throw InputError("catalog: " + family + ": wrong number of parameters");
}

std::vector<int> identity_images(int n)
{
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = i;
    return v;
}

Entry map_entry(Entry e, SimplicialMap f, VertexWalk basepath = {}, std::vector<FixedPointSite> sites = {})
{
    e.kind = Kind::Map;
    e.complex = f.source_ptr();
    e.map = io::MapDocument{std::move(f), std::move(basepath), std::move(sites)};
    return e;
}

Entry point_entry(Entry e)
{
    auto k = std::make_shared<const SimplicialComplex>(build_complex(std::vector<std::string>{"0"}, {{0}}));
    e.notes = "single vertex with the identity map";
    e.oracle = {"trivial", Integer(1), 1, Integer(1), {}, {}, {}, {}};
    return map_entry(std::move(e), identity_map(k), {}, {{"0", Integer(1), 0, {}}});
}

Entry circle_entry(Entry e, const std::vector<long long>& p)
{
    const long long n = p.empty() ? 3 : p[0];
    if (n < 3 || n > 1000)
        throw InputError("catalog: circle: need 3 <= n <= 1000");
    e.kind = Kind::Complex;
    e.complex = cycle(static_cast<int>(n));
    e.notes = "boundary of an n-gon, vertices 0..n-1 in cyclic order";
    e.oracle.provenance = "trivial";
    return e;
}

Entry figure_eight_entry(Entry e, bool drag)
{
    auto k = std::make_shared<const SimplicialComplex>(
        build_complex(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}));
    if (drag) {
        // edge 0-2 first runs backwards around loop b, edge 0-4 around b then a
        std::map<Index, VertexWalk> walks{{k->edge_index(0, 2), {0, 4, 3, 0, 2}},
                                          {k->edge_index(0, 4), {0, 3, 4, 0, 1, 2, 0, 4}}};
        e.notes = "wedge of two triangles; every vertex is fixed and two edges are dragged around the loops; "
                  "the orbit search cannot separate the resulting classes, so R is flagged indeterminate";
        e.oracle.provenance = "trivial";
        e.oracle.lefschetz = Integer(0);
        e.oracle.expected_verdict = "Indeterminate";
        return map_entry(std::move(e), SimplicialMap(k, k, identity_images(5), std::move(walks)));
    }
    SimplicialMap swap(k, k, {0, 3, 4, 1, 2});
    e.notes = "two triangles 0-1-2 and 0-3-4 glued at 0; the map swaps the loops, fixing only the wedge point; "
              "pi_1 is free of rank 2 so twisted classes are heuristic";
    e.oracle = {"analytic", Integer(1), 1, Integer(1), {}, {}, {}, {}};
    return map_entry(std::move(e), swap, {}, {{"wedge", Integer(1), 0, {}}});
}

Entry torus7_entry(Entry e, const std::vector<long long>& p)
{
    const long long m = p.empty() ? 2 : p[0];
    if (mod(m, 7) == 0)
        throw InputError("catalog: torus7: multiplier must be nonzero mod 7");
    std::vector<Simplex> t;
    for (int i = 0; i < 7; ++i) {
        t.push_back({i, (i + 1) % 7, (i + 3) % 7});
        t.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    auto k = std::make_shared<const SimplicialComplex>(build_complex(7, t));
    std::vector<int> images;
    for (int i = 0; i < 7; ++i)
        images.push_back(mod(m * i, 7));
    // multiplication by m is a rotation of the hexagonal lattice about vertex 0:
    // order 1 (m=1), 3 (m=2,4), 2 (m=6), 6 (m=3,5); det(I - R) = 0, 3, 4, 1
    const int r = mod(m, 7);
    const Integer l = r == 1 ? 0 : (r == 2 || r == 4) ? 3 : r == 6 ? 4 : 1;
    e.notes = "7-vertex torus with triangles {i,i+1,i+3} and {i,i+2,i+3}; x -> m x mod 7 is a simplicial "
              "automorphism rotating the hexagonal lattice about vertex 0";
    e.oracle.provenance = "analytic";
    e.oracle.lefschetz = l;
    if (l != 0) {
        e.oracle.nielsen = static_cast<Index>(l.convert_to<long long>());
        e.oracle.uniform_coefficient = Integer(1);
    }
    return map_entry(std::move(e), SimplicialMap(k, k, images));
}

Entry rp2_entry(Entry e)
{
    auto k = std::make_shared<const SimplicialComplex>(build_complex(
        6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5}, {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {1, 3, 5}, {2, 4, 5}}));
    e.notes = "6-vertex projective plane with the identity map; pi_1 = Z/2";
    e.oracle = {"trivial", Integer(1), 1, Integer(1), {}, {}, {}, {}};
    return map_entry(std::move(e), identity_map(k));
}

Entry circle_degree_entry(Entry e, const std::vector<long long>& p)
{
    if (p.empty())
        throw InputError("catalog: circle_degree_map needs d");
    const long long d = p[0];
    const long long n = p.size() > 1 ? p[1] : 6;
    if (n < 3 || n > 1000 || d < -50 || d > 50)
        throw InputError("catalog: circle_degree_map: need |d| <= 50 and 3 <= n <= 1000");
    auto k = cycle(static_cast<int>(n));
    e.notes = "z -> z^d on an n-gon (default hexagon) as a cellular map: vertex i goes to d i mod n and each "
              "edge to a |d|-step walk; fixed points m/(1-d) with witness m turns";
    e.oracle.provenance = "analytic";
    e.oracle.lefschetz = Integer(1 - d);
    std::vector<FixedPointSite> sites;
    if (d != 1) {
        const long long c = d < 1 ? 1 - d : d - 1;
        e.oracle.nielsen = c;
        e.oracle.uniform_coefficient = sign(Integer(1 - d));
        for (long long m = 0; m < c; ++m)
            sites.push_back({"m=" + std::to_string(m), sign(Integer(1 - d)), {}, turns(m, static_cast<int>(n))});
    }
    return map_entry(std::move(e), degree_map(k, k, d), {}, std::move(sites));
}

Entry circle_reflection_entry(Entry e, const std::vector<long long>& p)
{
    const long long n = p.empty() ? 6 : p[0];
    if (n < 4 || n % 2 != 0 || n > 1000)
        throw InputError("catalog: circle_reflection: n must be even, 4 <= n <= 1000");
    auto k = cycle(static_cast<int>(n));
    std::vector<int> images;
    for (int i = 0; i < n; ++i)
        images.push_back(mod(-i, n));
    e.notes = "z -> conj(z) on an n-gon, n even, so both fixed points 0 and n/2 are vertices";
    e.oracle = {"analytic", Integer(2), 2, Integer(1), {}, {}, {}, {}};
    return map_entry(std::move(e), SimplicialMap(k, k, images), {},
                     {{"+1", Integer(1), 0, {}}, {"-1", Integer(1), static_cast<int>(n / 2), {}}});
}

Entry torus_linear_entry(Entry e, const std::vector<long long>& p)
{
    std::vector<long long> a = p.empty() ? std::vector<long long>{2, 1, 1, 1} : p;
    if (a.size() != 4)
        throw InputError("catalog: torus_linear needs four entries a,b,c,d (row major)");
    for (long long x : a)
        if (x < -20 || x > 20)
            throw InputError("catalog: torus_linear: entries must lie in [-20, 20]");
    const int n = 3;
    auto k = grid_torus(n);
    std::vector<int> images(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            images[grid_vertex(i, j, n)] = grid_vertex(a[0] * i + a[1] * j, a[2] * i + a[3] * j, n);
    std::map<Index, VertexWalk> walks;
    for (Index t = 0; t < k->count(1); ++t) {
        const Simplex& s = k->simplex(1, t);
        const int ui = s[0] / n, uj = s[0] % n, vi = s[1] / n, vj = s[1] % n;
        const int di = mod(vi - ui + 1, n) - 1, dj = mod(vj - uj + 1, n) - 1;
        walks[t] = lattice_walk(a[0] * ui + a[1] * uj, a[2] * ui + a[3] * uj, a[0] * di + a[1] * dj,
                                a[2] * di + a[3] * dj, n);
    }
    IntMatrix m(2, 2);
    m(0, 0) = 1 - a[0];
    m(0, 1) = -a[1];
    m(1, 0) = -a[2];
    m(1, 1) = 1 - a[3];
    const Integer det = determinant(m);
    e.notes = "3x3 grid torus R^2/Z^2 at spacing 1/3; x -> A x mod Z^2 with each edge sent to a straight "
              "lattice path; fixed points (I-A)^-1 m, witness m";
    e.oracle.provenance = "lattice-enumeration";
    e.oracle.lefschetz = det;
    std::vector<FixedPointSite> sites;
    if (det != 0) {
        e.oracle.nielsen = static_cast<Index>(abs_value(det).convert_to<long long>());
        e.oracle.uniform_coefficient = sign(det);
        SmithForm<Integer> snf = smith_normal_form<Integer>(m);
        const long long s0 = abs_value(snf.S(0, 0)).convert_to<long long>();
        const long long s1 = abs_value(snf.S(1, 1)).convert_to<long long>();
        for (long long y0 = 0; y0 < s0; ++y0)
            for (long long y1 = 0; y1 < s1; ++y1) {
                IntVector y(2);
                y(0) = y0;
                y(1) = y1;
                IntVector r = snf.U_inv * y;
                const long long r0 = r(0).convert_to<long long>(), r1 = r(1).convert_to<long long>();
                sites.push_back({"m=(" + std::to_string(r0) + "," + std::to_string(r1) + ")", sign(det), {},
                                 lattice_walk(0, 0, r0 * n, r1 * n, n)});
            }
    }
    return map_entry(std::move(e), SimplicialMap(k, k, std::move(images), std::move(walks)), {}, std::move(sites));
}

// ---- bundles -------------------------------------------------------------

ComplexPtr points(std::vector<std::string> names)
{
    std::vector<Simplex> s;
    for (int i = 0; i < static_cast<int>(names.size()); ++i)
        s.push_back({i});
    return std::make_shared<const SimplicialComplex>(build_complex(std::move(names), s));
}

SimplicialMap vmap(ComplexPtr a, ComplexPtr b, std::vector<int> images)
{
    return SimplicialMap(std::move(a), std::move(b), std::move(images));
}

Transport iso(ComplexPtr a, ComplexPtr b, const std::vector<int>& images)
{
    std::vector<int> inverse(images.size());
    for (std::size_t i = 0; i < images.size(); ++i)
        inverse[images[i]] = static_cast<int>(i);
    return {vmap(a, b, images), vmap(b, a, inverse)};
}

/// Triangle base b0 -> b1 -> b2 -> b0 with tree {e0, e1}.
GraphBase triangle_base() { return GraphBase({"b0", "b1", "b2"}, {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 2, 0}}, {0, 1}, 0); }

/// Edge words of z -> z^d on the triangle base.
std::vector<EdgeWord> triangle_degree_words(long long d)
{
    std::vector<EdgeWord> words;
    for (int e = 0; e < 3; ++e) {
        EdgeWord w;
        int cur = mod(d * e, 3);
        for (long long k = 0; k < (d < 0 ? -d : d); ++k) {
            if (d > 0) {
                w.push_back({cur, true});
                cur = (cur + 1) % 3;
            } else {
                cur = (cur + 2) % 3;
                w.push_back({cur, false});
            }
        }
        words.push_back(std::move(w));
    }
    return words;
}

std::vector<int> triangle_degree_images(long long d) { return {0, mod(d, 3), mod(2 * d, 3)}; }

std::vector<FixedPointSite> total_sites(const DiscreteBundle& b,
                                        const std::vector<std::tuple<std::string, Integer, std::string>>& vertices)
{
    TotalSpace t = total_space(b);
    std::vector<FixedPointSite> out;
    for (const auto& [label, index, name] : vertices)
        out.push_back({label, index, t.complex->vertex_index(name), {}});
    return out;
}

/// Two-point fiber over the triangle with the swap on e2; the reflection base map fixes b0.
BundleSelfMapPair double_cover_pair(bool corrupt, bool with_total)
{
    GraphBase base = triangle_base();
    std::vector<ComplexPtr> fibers;
    for (int i = 0; i < 3; ++i)
        fibers.push_back(points({"x", "y"}));
    std::vector<Transport> tr{iso(fibers[0], fibers[1], {0, 1}), iso(fibers[1], fibers[2], {0, 1}),
                              iso(fibers[2], fibers[0], corrupt ? std::vector<int>{0, 1} : std::vector<int>{1, 0})};
    DiscreteBundle bundle(base, fibers, tr);
    std::vector<EdgeWord> words{{{2, false}}, {{1, false}}, {{0, false}}};
    std::vector<SimplicialMap> fm{vmap(fibers[0], fibers[0], {0, 1}), vmap(fibers[1], fibers[2], {1, 0}),
                                  vmap(fibers[2], fibers[1], {1, 0})};
    std::optional<SimplicialMap> total;
    if (with_total) {
        TotalSpace t = total_space(bundle);
        const SimplicialComplex& k = *t.complex;
        auto v = [&](const char* name) { return k.vertex_index(name); };
        std::vector<int> images(k.vertex_count());
        images[v("b0:x")] = v("b0:x");
        images[v("b0:y")] = v("b0:y");
        images[v("b1:x")] = v("b2:y");
        images[v("b1:y")] = v("b2:x");
        images[v("b2:x")] = v("b1:y");
        images[v("b2:y")] = v("b1:x");
        total = SimplicialMap(t.complex, t.complex, images);
    }
    return BundleSelfMapPair(bundle, {0, 2, 1}, words, fm, total);
}

Entry pair_entry(Entry e, BundleSelfMapPair pair)
{
    e.kind = Kind::Pair;
    e.complex = total_space(pair.bundle()).complex;
    e.pair = std::move(pair);
    return e;
}

Entry double_cover_entry(Entry e)
{
    BundleSelfMapPair pair = double_cover_pair(false, true);
    e.notes = "connected double cover of the triangle (hexagon) with swap monodromy on e2; the base reflection "
              "fixes b0 and the midpoint of b1b2; the supplied total map is the hexagon reflection fixing b0:x "
              "and b0:y; fibers are discrete so transports are exact and no homotopy choice enters";
    e.oracle.provenance = "worked-example";
    e.oracle.lefschetz = Integer(2);
    e.oracle.nielsen = 2;
    e.oracle.uniform_coefficient = Integer(1);
    e.oracle.classes = {{Integer(1), Integer(2)}, {Integer(1), Integer(0)}};
    e.oracle.total_fixed_points =
        total_sites(pair.bundle(), {{"+1", Integer(1), "b0:x"}, {"-1", Integer(1), "b0:y"}});
    return pair_entry(std::move(e), std::move(pair));
}

Entry double_cover_corrupted_entry(Entry e)
{
    e.notes = "the double cover with the transport over e2 replaced by the identity while the fiber maps stay; "
              "the square over e2 fails on fiber homology";
    e.oracle.provenance = "trivial";
    e.oracle.expected_verdict = "Fail";
    return pair_entry(std::move(e), double_cover_pair(true, false));
}

Entry double_cover_degree2_entry(Entry e)
{
    GraphBase base = triangle_base();
    std::vector<ComplexPtr> fibers;
    for (int i = 0; i < 3; ++i)
        fibers.push_back(points({"x", "y"}));
    std::vector<Transport> tr{iso(fibers[0], fibers[1], {0, 1}), iso(fibers[1], fibers[2], {0, 1}),
                              iso(fibers[2], fibers[0], {1, 0})};
    DiscreteBundle bundle(base, fibers, tr);
    std::vector<SimplicialMap> fm{vmap(fibers[0], fibers[0], {0, 0}), vmap(fibers[1], fibers[2], {0, 0}),
                                  vmap(fibers[2], fibers[1], {1, 1})};
    BundleSelfMapPair pair(bundle, triangle_degree_images(2), triangle_degree_words(2), fm);
    e.notes = "the double cover over z -> z^2; fiber maps are constant, so the total map factors through the "
              "base and has degree 2 on the hexagon with the single fixed point b0:x";
    e.oracle.provenance = "analytic";
    e.oracle.lefschetz = Integer(-1);
    e.oracle.nielsen = 1;
    e.oracle.uniform_coefficient = Integer(-1);
    e.oracle.classes = {{Integer(-1), Integer(1)}};
    e.oracle.total_fixed_points = total_sites(bundle, {{"b0:x", Integer(-1), "b0:x"}});
    return pair_entry(std::move(e), std::move(pair));
}

/// C3 fibers over the triangle; transport over e2 is the given automorphism of C3.
DiscreteBundle circle_bundle(const std::vector<int>& monodromy, std::vector<ComplexPtr>& fibers)
{
    fibers.clear();
    for (int i = 0; i < 3; ++i)
        fibers.push_back(cycle(3));
    std::vector<Transport> tr{iso(fibers[0], fibers[1], identity_images(3)),
                              iso(fibers[1], fibers[2], identity_images(3)), iso(fibers[2], fibers[0], monodromy)};
    return DiscreteBundle(triangle_base(), fibers, tr);
}

Entry trivial_product_entry(Entry e, const std::vector<long long>& p)
{
    const long long d1 = p.size() > 0 ? p[0] : 2;
    const long long d2 = p.size() > 1 ? p[1] : 3;
    if (p.size() == 1 || p.size() > 2 || d1 < -10 || d1 > 10 || d2 < -10 || d2 > 10)
        throw InputError("catalog: trivial_product needs d1,d2 in [-10, 10]");
    std::vector<ComplexPtr> fibers;
    DiscreteBundle bundle = circle_bundle(identity_images(3), fibers);
    std::vector<int> images = triangle_degree_images(d1);
    std::vector<SimplicialMap> fm;
    for (int b = 0; b < 3; ++b)
        fm.push_back(degree_map(fibers[b], fibers[images[b]], d2));
    BundleSelfMapPair pair(bundle, images, triangle_degree_words(d1), fm);
    e.notes = "triangle x triangle (prisms triangulated by the staircase rule) with z^d1 on the base and z^d2 "
              "on every fiber; the total map is built from the fiber walks and lifted base words";
    e.oracle.provenance = "lattice-enumeration";
    const Integer l = Integer(1 - d1) * Integer(1 - d2);
    e.oracle.lefschetz = l;
    if (d1 == 1 && d2 == 1)
        e.oracle.euler = Integer(0);
    if (l != 0) {
        e.oracle.nielsen = static_cast<Index>(abs_value(l).convert_to<long long>());
        e.oracle.uniform_coefficient = sign(l);
    }
    if (d1 != 1)
        for (long long m = 0; m < (d1 < 1 ? 1 - d1 : d1 - 1); ++m)
            e.oracle.classes.push_back({sign(Integer(1 - d1)), Integer(1 - d2)});
    if (l != 0) {
        TotalSpace t = total_space(bundle);
        auto at = [&](int b, int v) { return t.vertex(b, v); };
        for (long long m1 = 0; m1 < (d1 < 1 ? 1 - d1 : d1 - 1); ++m1)
            for (long long m2 = 0; m2 < (d2 < 1 ? 1 - d2 : d2 - 1); ++m2) {
                VertexWalk w{at(0, 0)};
                for (long long k = 0; k < 3 * m1; ++k)
                    w.push_back(at(static_cast<int>((k + 1) % 3), 0));
                for (long long k = 0; k < 3 * m2; ++k)
                    w.push_back(at(0, static_cast<int>((k + 1) % 3)));
                e.oracle.total_fixed_points.push_back(
                    {"m=(" + std::to_string(m1) + "," + std::to_string(m2) + ")", sign(l), {}, w});
            }
    }
    return pair_entry(std::move(e), std::move(pair));
}

Entry klein_entry(Entry e)
{
    std::vector<ComplexPtr> fibers;
    DiscreteBundle bundle = circle_bundle({0, 2, 1}, fibers);
    std::vector<SimplicialMap> fm;
    for (int b = 0; b < 3; ++b)
        fm.push_back(identity_map(fibers[b]));
    BundleSelfMapPair pair(bundle, {0, 1, 2}, triangle_degree_words(1), fm);
    e.notes = "circle bundle over the triangle whose monodromy reflects the fiber (a Klein bottle), identity "
              "pair; pi_1 of the total space is not abelian, so only the Lefschetz check applies";
    e.oracle.provenance = "trivial";
    e.oracle.lefschetz = Integer(0);
    e.oracle.euler = Integer(0);
    return pair_entry(std::move(e), std::move(pair));
}

Entry point_fiber_entry(Entry e)
{
    GraphBase base = triangle_base();
    std::vector<ComplexPtr> fibers;
    for (int i = 0; i < 3; ++i)
        fibers.push_back(points({"p"}));
    std::vector<Transport> tr{iso(fibers[0], fibers[1], {0}), iso(fibers[1], fibers[2], {0}),
                              iso(fibers[2], fibers[0], {0})};
    DiscreteBundle bundle(base, fibers, tr);
    std::vector<SimplicialMap> fm{vmap(fibers[0], fibers[0], {0}), vmap(fibers[1], fibers[2], {0}),
                                  vmap(fibers[2], fibers[1], {0})};
    BundleSelfMapPair pair(bundle, {0, 2, 1}, {{{2, false}}, {{1, false}}, {{0, false}}}, fm);
    e.notes = "point fiber over the triangle with the reflection; the total space is a copy of the base";
    e.oracle.provenance = "trivial";
    e.oracle.lefschetz = Integer(2);
    e.oracle.nielsen = 2;
    e.oracle.uniform_coefficient = Integer(1);
    e.oracle.classes = {{Integer(1), Integer(1)}, {Integer(1), Integer(1)}};
    TotalSpace t = total_space(bundle);
    const SimplicialComplex& k = *t.complex;
    e.oracle.total_fixed_points = {
        {"b0", Integer(1), k.vertex_index("b0:p"), {}},
        {"mid(b1,b2)",
         Integer(1),
         {},
         VertexWalk{k.vertex_index("b0:p"), k.vertex_index("b1:p"), k.vertex_index("b2:p"), k.vertex_index("b0:p")}}};
    return pair_entry(std::move(e), std::move(pair));
}

Entry two_component_entry(Entry e)
{
    GraphBase base({"b0", "b1", "b2", "c0", "c1"}, {{"e0", 0, 1}, {"e1", 1, 2}, {"e2", 2, 0}, {"e3", 3, 4}},
                   {0, 1, 3}, 0);
    std::vector<ComplexPtr> fibers;
    for (int i = 0; i < 3; ++i)
        fibers.push_back(points({"x", "y"}));
    for (int i = 0; i < 2; ++i)
        fibers.push_back(std::make_shared<const SimplicialComplex>(build_complex(3, {{0, 1}, {1, 2}})));
    std::vector<Transport> tr{iso(fibers[0], fibers[1], {0, 1}), iso(fibers[1], fibers[2], {0, 1}),
                              iso(fibers[2], fibers[0], {1, 0}), iso(fibers[3], fibers[4], {0, 1, 2})};
    DiscreteBundle bundle(base, fibers, tr);
    std::vector<SimplicialMap> fm;
    for (int b = 0; b < 5; ++b)
        fm.push_back(identity_map(fibers[b]));
    std::vector<EdgeWord> words{{{0, true}}, {{1, true}}, {{2, true}}, {{3, true}}};
    BundleSelfMapPair pair(bundle, identity_images(5), words, fm);
    e.notes = "base = triangle (chi 0, two-point fiber with swap monodromy) plus a disjoint edge (chi 1, fiber a "
              "path of two edges); identity pair, chi(E) = 0*2 + 1*1";
    e.oracle.provenance = "trivial";
    e.oracle.lefschetz = Integer(1);
    e.oracle.euler = Integer(1);
    return pair_entry(std::move(e), std::move(pair));
}

Entry rotation_entry(Entry e)
{
    std::vector<ComplexPtr> fibers;
    DiscreteBundle bundle = circle_bundle(identity_images(3), fibers);
    std::vector<SimplicialMap> fm;
    for (int b = 0; b < 3; ++b)
        fm.push_back(vmap(fibers[b], fibers[(b + 1) % 3], identity_images(3)));
    std::vector<EdgeWord> words{{{1, true}}, {{2, true}}, {{0, true}}};
    BundleSelfMapPair pair(bundle, {1, 2, 0}, words, fm);
    e.notes = "triangle x triangle with a third-turn rotation of the base and the identity on fibers; the total "
              "map has no fixed points";
    e.oracle.provenance = "trivial";
    e.oracle.lefschetz = Integer(0);
    e.oracle.nielsen = 0;
    return pair_entry(std::move(e), std::move(pair));
}

} // namespace

const std::vector<Family>& families()
{
    static const std::vector<Family> list{
        {"point", "point", "one vertex, identity map"},
        {"circle", "circle[:n]", "n-gon (default 3)"},
        {"figure_eight", "figure_eight[:swap|drag]", "wedge of two triangles, loop swap or dragged edges"},
        {"torus7", "torus7[:m]", "7-vertex torus, x -> m x mod 7 (default 2)"},
        {"rp2", "rp2", "6-vertex projective plane, identity"},
        {"circle_degree_map", "circle_degree_map:d[,n]", "z -> z^d on an n-gon (default 6)"},
        {"circle_reflection", "circle_reflection[:n]", "z -> conj(z) on an even n-gon (default 6)"},
        {"torus_linear", "torus_linear[:a,b,c,d]", "x -> A x on the 3x3 grid torus (default 2,1,1,1)"},
        {"double_cover_reflection", "double_cover_reflection", "double cover of the circle over the reflection"},
        {"double_cover_degree2", "double_cover_degree2", "double cover of the circle over z -> z^2"},
        {"double_cover_corrupted", "double_cover_corrupted", "double cover with a corrupted transport"},
        {"trivial_product", "trivial_product[:d1,d2]", "circle x circle, z^d1 on the base, z^d2 on fibers"},
        {"point_fiber", "point_fiber", "point fiber over the circle reflection"},
        {"two_component_base", "two_component_base", "identity pair over a disconnected base"},
        {"klein_bundle", "klein_bundle", "Klein bottle as a circle bundle, identity pair"},
        {"fixed_point_free_rotation", "fixed_point_free_rotation", "rotation of the base of the torus"},
    };
    return list;
}

std::vector<std::string> standard_names()
{
    return {"point",
            "circle:3",
            "circle:5",
            "figure_eight",
            "figure_eight:drag",
            "torus7",
            "torus7:6",
            "rp2",
            "circle_degree_map:-3",
            "circle_degree_map:-2",
            "circle_degree_map:-1",
            "circle_degree_map:0",
            "circle_degree_map:2",
            "circle_degree_map:3",
            "circle_degree_map:4",
            "circle_reflection",
            "torus_linear:2,1,1,1",
            "double_cover_reflection",
            "double_cover_degree2",
            "double_cover_corrupted",
            "trivial_product:2,3",
            "trivial_product:1,1",
            "point_fiber",
            "two_component_base",
            "klein_bundle",
            "fixed_point_free_rotation"};
}

Entry make(const std::string& name)
{
    std::string family = name;
    std::vector<std::string> params;
    if (auto colon = name.find(':'); colon != std::string::npos) {
        family = name.substr(0, colon);
        std::stringstream ss(name.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ','))
            params.push_back(item);
        if (params.empty())
            throw InputError("catalog: empty parameter list in '" + name + "'");
    }
    Entry e;
    e.family = family;
    e.parameters = params;
    e.name = params.empty() ? family : family + ":" + join(params);
    auto none = [&] { expect_count(params, 0, 0, family); };
    const std::vector<long long> p = family == "figure_eight" ? std::vector<long long>{} : int_params(params, family);
    if (family == "point") {
        none();
        return point_entry(std::move(e));
    }
    if (family == "circle") {
        expect_count(params, 0, 1, family);
        return circle_entry(std::move(e), p);
    }
    if (family == "figure_eight") {
        expect_count(params, 0, 1, family);
        if (!params.empty() && params[0] != "swap" && params[0] != "drag")
            throw InputError("catalog: figure_eight: variant must be swap or drag");
        return figure_eight_entry(std::move(e), !params.empty() && params[0] == "drag");
    }
    if (family == "torus7") {
        expect_count(params, 0, 1, family);
        return torus7_entry(std::move(e), p);
    }
    if (family == "rp2") {
        none();
        return rp2_entry(std::move(e));
    }
    if (family == "circle_degree_map") {
        expect_count(params, 1, 2, family);
        return circle_degree_entry(std::move(e), p);
    }
    if (family == "circle_reflection") {
        expect_count(params, 0, 1, family);
        return circle_reflection_entry(std::move(e), p);
    }
    if (family == "torus_linear") {
        expect_count(params, 0, 4, family);
        return torus_linear_entry(std::move(e), p);
    }
    if (family == "double_cover_reflection") {
        none();
        return double_cover_entry(std::move(e));
    }
    if (family == "double_cover_degree2") {
        none();
        return double_cover_degree2_entry(std::move(e));
    }
    if (family == "double_cover_corrupted") {
        none();
        return double_cover_corrupted_entry(std::move(e));
    }
    if (family == "trivial_product") {
        expect_count(params, 0, 2, family);
        return trivial_product_entry(std::move(e), p);
    }
    if (family == "point_fiber") {
        none();
        return point_fiber_entry(std::move(e));
    }
    if (family == "two_component_base") {
        none();
        return two_component_entry(std::move(e));
    }
    if (family == "klein_bundle") {
        none();
        return klein_entry(std::move(e));
    }
    if (family == "fixed_point_free_rotation") {
        none();
        return rotation_entry(std::move(e));
    }
    throw InputError("catalog: unknown fixture '" + family + "'");
}

std::shared_ptr<const SimplicialComplex> complex_by_name(const std::string& name) { return make(name).complex; }

io::Json emit(const Entry& e)
{
    io::Json j;
    j["name"] = e.name;
    j["kind"] = to_string(e.kind);
    j["parameters"] = e.parameters;
    j["notes"] = e.notes;
    io::Json o;
    o["provenance"] = e.oracle.provenance;
    auto num = [](const Integer& x) { return io::integer_json(x); };
    if (e.oracle.lefschetz)
        o["lefschetz"] = num(*e.oracle.lefschetz);
    if (e.oracle.nielsen)
        o["nielsen"] = *e.oracle.nielsen;
    if (e.oracle.uniform_coefficient)
        o["uniform_coefficient"] = num(*e.oracle.uniform_coefficient);
    if (e.oracle.euler)
        o["euler"] = num(*e.oracle.euler);
    if (!e.oracle.classes.empty()) {
        io::Json rows = io::Json::array();
        for (const auto& c : e.oracle.classes)
            rows.push_back(io::Json{{"index", num(c.index)}, {"lefschetz", num(c.lefschetz)}});
        o["classes"] = rows;
    }
    if (!e.oracle.total_fixed_points.empty()) {
        const SimplicialComplex& k = *e.complex;
        io::Json rows = io::Json::array();
        for (const auto& s : e.oracle.total_fixed_points) {
            io::Json r{{"label", s.label}, {"index", num(s.index)}};
            if (s.vertex)
                r["vertex"] = k.vertex_name(*s.vertex);
            if (s.loop)
                r["loop"] = io::emit_walk(*s.loop, k);
            rows.push_back(r);
        }
        o["total_fixed_points"] = rows;
    }
    if (e.oracle.expected_verdict)
        o["expected_verdict"] = *e.oracle.expected_verdict;
    j["oracle"] = o;
    switch (e.kind) {
    case Kind::Complex:
        j["complex"] = io::emit_complex(*e.complex);
        break;
    case Kind::Map:
        j["map"] = io::emit_map(*e.map);
        break;
    case Kind::Pair:
        j["pair"] = io::emit_pair(*e.pair);
        break;
    }
    return j;
}

io::Json payload(const io::Json& doc, Kind wanted)
{
    if (doc.is_object() && doc.contains("kind") && doc.contains("name") && doc["kind"].is_string()) {
        const std::string kind = doc["kind"].get<std::string>();
        if (!doc.contains(kind))
            throw InputError("catalog document: missing '" + kind + "' payload");
        const io::Json& body = doc[kind];
        if (wanted == Kind::Complex && kind == "map")
            return body.contains("complex") ? body["complex"] : body;
        if (to_string(wanted) != kind)
            throw InputError("expected a " + to_string(wanted) + " document, got a catalog " + kind);
        return body;
    }
    if (wanted == Kind::Complex && doc.is_object() && doc.contains("vertex_images") && doc.contains("complex"))
        return doc["complex"];
    return doc;
}

} // namespace fixpt::catalog
