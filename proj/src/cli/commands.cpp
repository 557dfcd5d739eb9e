#include "fixpt/cli/commands.hpp"

#include "fixpt/bundles/verify.hpp"
#include "fixpt/errors.hpp"

#include <functional>
#include <iomanip>
#include <sstream>

namespace fixpt::cli {

namespace {

using io::Json;

struct Loaded {
    Json doc;
    std::string digest;
    std::string origin;
};

Loaded load(const Source& in)
{
    Loaded l;
    std::string raw;
    if (!in.catalog.empty()) {
        l.doc = catalog::emit(catalog::make(in.catalog));
        raw = io::dump(l.doc);
        l.origin = "catalog:" + in.catalog;
    } else {
        l.doc = io::read_document(in.path, &raw);
        l.origin = in.path == "-" ? "<stdin>" : in.path;
    }
    l.digest = "sha256:" + io::sha256_hex(raw);
    return l;
}

Json new_report(const std::string& command)
{
    Json r;
    r["command"] = command;
    r["inputs_digest"] = nullptr;
    r["tables"] = Json::array();
    r["lhs"] = nullptr;
    r["rhs"] = nullptr;
    r["verdict"] = nullptr;
    r["flags"] = Json::array();
    return r;
}

Json make_table(const std::string& name, std::vector<std::string> columns)
{
    return Json{{"name", name}, {"columns", columns}, {"rows", Json::array()}};
}

void add_flag(Json& report, const std::string& flag)
{
    for (const auto& f : report["flags"])
        if (f == flag)
            return;
    report["flags"].push_back(flag);
}

int exit_for(const std::string& verdict)
{
    if (verdict == "Pass")
        return ExitPass;
    if (verdict == "Fail")
        return ExitFail;
    return ExitUnsupported;
}

/// Loads the input, runs body on a fresh report and maps exceptions to verdicts and exit codes.
Result run(const std::string& command, const Source& in, const std::function<void(const Loaded&, Json&)>& body)
{
    Json report = new_report(command);
    Loaded input;
    try {
        input = load(in);
        report["inputs_digest"] = input.digest;
        body(input, report);
    } catch (const InputError& e) {
        return {ExitInput, "", "error: " + std::string(e.what()) + "\n"};
    } catch (const IndeterminateError& e) {
        report["verdict"] = "Indeterminate";
        add_flag(report, e.what());
    } catch (const NotConstructibleError& e) {
        report["verdict"] = "Unsupported";
        add_flag(report, std::string("not constructible: ") + e.what());
    } catch (const UnsupportedError& e) {
        report["verdict"] = "Unsupported";
        add_flag(report, std::string("unsupported: ") + e.what());
    }
    return {exit_for(report["verdict"].get<std::string>()), io::dump(report), ""};
}

std::string certainty_name(Certainty c) { return c == Certainty::Certain ? "certain" : "heuristic"; }

} // namespace

Result cmd_homology(const Source& in)
{
    return run("homology", in, [](const Loaded& input, Json& report) {
        auto k = io::parse_complex(catalog::payload(input.doc, catalog::Kind::Complex), input.origin);
        ChainComplex cc = chain_complex(*k);
        HomologySummary h = homology(cc);
        Json t = make_table("homology", {"degree", "cells", "betti", "torsion"});
        Integer chi_h = 0;
        for (std::size_t i = 0; i < h.degrees.size(); ++i) {
            Json torsion = Json::array();
            for (const Integer& x : h.degrees[i].torsion)
                torsion.push_back(io::integer_json(x));
            t["rows"].push_back(Json::array({i, cc.rank(static_cast<int>(i)), h.degrees[i].betti, torsion}));
            chi_h += (i % 2 ? -1 : 1) * Integer(h.degrees[i].betti);
        }
        report["tables"].push_back(t);
        const Integer chi_c = cc.euler_characteristic();
        report["lhs"] = io::integer_json(chi_h);
        report["rhs"] = io::integer_json(chi_c);
        report["verdict"] = chi_h == chi_c ? "Pass" : "Fail";
    });
}

Result cmd_lefschetz(const Source& in)
{
    return run("lefschetz", in, [](const Loaded& input, Json& report) {
        io::MapDocument m = io::parse_map(catalog::payload(input.doc, catalog::Kind::Map), input.origin);
        ChainMap cm = induced_chain_map(m.map);
        std::vector<RatMatrix> hm = induced_homology_map(cm);
        Json t = make_table("traces", {"degree", "chain_trace", "homology_trace"});
        for (int i = 0; i <= cm.source().top_degree(); ++i) {
            IntMatrix c = cm.component(i);
            Integer ct = 0;
            for (Index j = 0; j < c.rows(); ++j)
                ct += c(j, j);
            Rational ht = 0;
            if (i < static_cast<int>(hm.size()))
                for (Index j = 0; j < hm[i].rows(); ++j)
                    ht += hm[i](j, j);
            Json hj = denominator(ht) == 1 ? io::integer_json(to_integer(ht)) : Json(to_string(ht));
            t["rows"].push_back(Json::array({i, io::integer_json(ct), hj}));
        }
        report["tables"].push_back(t);
        const Integer chain = hopf_chain_trace(cm);
        const Integer hom = lefschetz_from_homology(cm);
        report["lhs"] = io::integer_json(chain);
        report["rhs"] = io::integer_json(hom);
        report["verdict"] = chain == hom ? "Pass" : "Fail";
    });
}

Result cmd_reidemeister(const Source& in, int depth)
{
    return run("reidemeister", in, [depth](const Loaded& input, Json& report) {
        io::MapDocument m = io::parse_map(catalog::payload(input.doc, catalog::Kind::Map), input.origin);
        const SimplicialComplex& k = m.map.source();
        std::map<int, VertexWalk> basepaths;
        if (!m.basepath.empty())
            basepaths[m.basepath.front()] = m.basepath;
        ReidemeisterTrace r = reidemeister_trace(m.map, basepaths, depth);
        const Integer l = lefschetz_number(m.map);
        add_flag(report, "twisted class search depth " + std::to_string(depth));

        Json classes = make_table("classes", {"component", "class", "coefficient", "certainty"});
        Json summary = make_table("summary", {"component", "group", "augmentation", "nielsen", "indeterminate"});
        bool unknown = false;
        for (const auto& part : r.parts) {
            const std::string comp = k.vertex_name(part.basepoint);
            const Group& g = part.presentation->group();
            for (const auto& term : part.trace.terms()) {
                classes["rows"].push_back(Json::array({comp, "[" + g.format(term.cls.representative) + "]",
                                                       io::integer_json(term.coefficient),
                                                       certainty_name(term.cls.certainty)}));
                if (term.cls.certainty == Certainty::Heuristic)
                    add_flag(report, "heuristic class representatives (orbit search to depth " +
                                         std::to_string(depth) + ")");
            }
            const bool ind = part.trace.indeterminate();
            unknown = unknown || ind;
            summary["rows"].push_back(Json::array({comp, g.describe(), io::integer_json(augment(part.trace)),
                                                   ind ? Json(nullptr) : Json(nielsen(part.trace)), ind}));
        }
        if (unknown)
            add_flag(report, "undecided twisted-class merge; the Nielsen number is not determined");

        Json check = make_table("augmentation", {"augment(R)", "L(f)"});
        check["rows"].push_back(Json::array({io::integer_json(r.augment()), io::integer_json(l)}));
        report["tables"].push_back(classes);
        report["tables"].push_back(summary);
        report["tables"].push_back(check);
        report["lhs"] = r.format();
        std::string verdict = r.augment() == l ? "Pass" : "Fail";
        if (r.augment() != l)
            add_flag(report, "augmentation of R differs from L(f)");

        if (!m.fixed_points.empty()) {
            std::vector<int> label = k.component_of();
            ReidemeisterTrace geo = r;
            Json fps = make_table("fixed_points", {"label", "index", "witness", "class"});
            std::vector<bool> used(m.fixed_points.size(), false);
            bool distinct = false;
            for (auto& part : geo.parts) {
                std::vector<FixedPointSite> sites;
                for (std::size_t i = 0; i < m.fixed_points.size(); ++i) {
                    const auto& s = m.fixed_points[i];
                    const int v = s.vertex ? *s.vertex : s.loop->front();
                    if (label[v] == label[part.basepoint]) {
                        sites.push_back(s);
                        used[i] = true;
                    }
                }
                auto records = resolve_fixed_points(sites, m.map, *part.presentation, part.basepath);
                const Group& g = part.presentation->group();
                for (const auto& rec : records)
                    fps["rows"].push_back(Json::array(
                        {rec.label, io::integer_json(rec.index), "[" + g.format(rec.witness) + "]",
                         "[" + g.format(part.trace.classes().canonical(rec.witness).representative) + "]"}));
                ShadowElement chain = part.trace;
                part.trace = reidemeister_trace_geometric(records, chain.classes_ptr());
                Comparison c = compare(chain, part.trace);
                distinct = distinct || c == Comparison::Distinct;
                unknown = unknown || c == Comparison::Unknown;
            }
            for (std::size_t i = 0; i < used.size(); ++i)
                if (!used[i])
                    throw InputError(input.origin + ": fixed point '" + m.fixed_points[i].label +
                                     "' lies in a component that the map moves");
            report["tables"].push_back(fps);
            report["rhs"] = geo.format();
            if (distinct) {
                verdict = "Fail";
                add_flag(report, "chain and geometric traces differ");
            }
        }
        if (verdict == "Pass" && unknown)
            verdict = "Indeterminate";
        report["verdict"] = verdict;
    });
}

Result cmd_bundle_verify(const Source& in, const std::string& theorem, int depth)
{
    std::vector<std::string> theorems;
    if (theorem == "both")
        theorems = {"lefschetz", "reidemeister"};
    else if (theorem == "lefschetz" || theorem == "reidemeister" || theorem == "nielsen")
        theorems = {theorem};
    else
        return {ExitInput, "", "error: unknown theorem '" + theorem + "'\n"};
    if (depth < 0)
        return {ExitInput, "", "error: depth must be nonnegative\n"};

    return run("bundle-verify", in, [&](const Loaded& input, Json& report) {
        BundleSelfMapPair pair = io::parse_pair(catalog::payload(input.doc, catalog::Kind::Pair), input.origin);
        add_flag(report, "twisted class search depth " + std::to_string(depth));
        report["lhs"] = Json::object();
        report["rhs"] = Json::object();
        std::vector<std::string> verdicts;
        std::vector<std::pair<std::string, std::string>> diff;
        for (const std::string& th : theorems) {
            VerificationReport v;
            try {
                v = th == "lefschetz"      ? verify_lefschetz_mult(pair, depth)
                    : th == "reidemeister" ? verify_reidemeister_mult(pair, depth)
                                           : nielsen_additivity(pair, depth);
            } catch (const IndeterminateError& e) {
                verdicts.push_back("Indeterminate");
                add_flag(report, th + ": " + e.what());
                report["lhs"][th] = nullptr;
                report["rhs"][th] = nullptr;
                continue;
            } catch (const UnsupportedError& e) {
                verdicts.push_back("Unsupported");
                add_flag(report, th + ": unsupported: " + e.what());
                report["lhs"][th] = nullptr;
                report["rhs"][th] = nullptr;
                continue;
            }
            std::vector<std::string> cols{"class", "index"};
            if (th != "nielsen")
                cols.push_back("L(f_C)");
            if (th == "reidemeister")
                cols.push_back("i_C(R(f_C))");
            if (th == "nielsen")
                cols.push_back("c");
            Json t = make_table(th, cols);
            for (const ClassRow& row : v.rows) {
                Json cells = Json::array({row.label, io::integer_json(row.index)});
                if (th != "nielsen")
                    cells.push_back(row.lefschetz ? io::integer_json(*row.lefschetz) : Json(nullptr));
                if (th == "reidemeister")
                    cells.push_back(row.pushed ? Json(row.pushed->format()) : Json(nullptr));
                if (th == "nielsen")
                    cells.push_back(row.nielsen ? Json(*row.nielsen) : Json(nullptr));
                t["rows"].push_back(cells);
            }
            report["tables"].push_back(t);
            report["lhs"][th] = v.lhs ? Json(*v.lhs) : Json(nullptr);
            report["rhs"][th] = v.rhs ? Json(*v.rhs) : Json(nullptr);
            for (const auto& f : v.flags)
                add_flag(report, f);
            for (const auto& d : v.diff)
                diff.emplace_back(th, d);
            verdicts.push_back(to_string(v.verdict));
        }
        if (!diff.empty()) {
            Json t = make_table("diff", {"theorem", "difference"});
            for (const auto& [th, d] : diff)
                t["rows"].push_back(Json::array({th, d}));
            report["tables"].push_back(t);
        }
        auto has = [&](const char* s) { return std::find(verdicts.begin(), verdicts.end(), s) != verdicts.end(); };
        report["verdict"] = has("Fail")            ? "Fail"
                            : has("Unsupported")   ? "Unsupported"
                            : has("Indeterminate") ? "Indeterminate"
                                                   : "Pass";
    });
}

Result cmd_catalog_list()
{
    std::ostringstream out;
    for (const auto& f : catalog::families())
        out << std::left << std::setw(30) << f.syntax << f.summary << "\n";
    return {ExitPass, out.str(), ""};
}

Result cmd_catalog_emit(const std::string& name)
{
    try {
        return {ExitPass, io::dump(catalog::emit(catalog::make(name))), ""};
    } catch (const InputError& e) {
        return {ExitInput, "", "error: " + std::string(e.what()) + "\n"};
    }
}

} // namespace fixpt::cli
