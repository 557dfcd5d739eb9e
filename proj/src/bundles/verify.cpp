#include "fixpt/bundles/verify.hpp"

#include "fixpt/errors.hpp"

#include <algorithm>
#include <set>

namespace fixpt {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Pass:
        return "Pass";
    case Verdict::Fail:
        return "Fail";
    case Verdict::Indeterminate:
        return "Indeterminate";
    }
    return "?";
}

namespace {

std::string class_label(const BundleSelfMapPair& pair, const std::vector<BaseComponent>& comps, const BasePathClass& c)
{
    std::string s = "[" + comps[c.component].classes->group().format(c.element) + "]";
    if (comps.size() > 1)
        s = pair.base().vertices()[comps[c.component].root] + ":" + s;
    return s;
}

/// Rows for every enumerated class when the enumeration is complete, else for the support of R(fbar).
std::vector<ClassRow> class_rows(const BundleSelfMapPair& pair, const std::vector<BaseComponent>& comps,
                                 const std::vector<ShadowElement>& base_r, std::vector<std::string>& flags)
{
    BaseClassList list = base_twisted_classes(pair, comps);
    std::vector<BasePathClass> classes;
    if (list.complete)
        classes = list.classes;
    else
        flags.push_back("base class enumeration truncated at depth " +
                        std::to_string(comps.empty() ? 0 : comps[0].classes->depth()) +
                        "; the table lists the classes with nonzero index");
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (const auto& t : base_r[i].terms()) {
            bool found = false;
            for (const auto& c : classes)
                found = found || (c.component == static_cast<int>(i) && c.element == t.cls.representative);
            if (!found)
                classes.push_back(base_class(pair, comps, static_cast<int>(i), t.cls.representative));
        }
    std::sort(classes.begin(), classes.end(), [](const BasePathClass& a, const BasePathClass& b) {
        return a.component != b.component ? a.component < b.component : a.element < b.element;
    });
    std::vector<ClassRow> rows;
    for (const auto& c : classes) {
        ClassRow r;
        r.cls = c;
        r.label = class_label(pair, comps, c);
        r.index = base_r[c.component].coefficient(c.element);
        if (c.certainty == Certainty::Heuristic)
            flags.push_back("class " + r.label + " is a heuristic representative");
        rows.push_back(std::move(r));
    }
    for (const auto& s : base_r)
        if (s.indeterminate())
            flags.push_back("undecided merge among base classes");
    return rows;
}

bool compatible(const BundleSelfMapPair& pair, VerificationReport& report)
{
    report.diff = compatibility_violations(pair);
    report.flags.push_back("compatibility of (f, fbar) checked on fiber homology only");
    if (report.diff.empty())
        return true;
    report.verdict = Verdict::Fail;
    return false;
}

struct ComponentSides {
    int root = 0;
    ShadowElement lhs, rhs;
};

struct ReidemeisterData {
    std::vector<BaseComponent> comps;
    std::vector<ShadowElement> base_r;
    std::vector<ComponentSides> sides;
    std::vector<ClassRow> rows;
};

ReidemeisterData reidemeister_data(const BundleSelfMapPair& pair, int depth, std::vector<std::string>& flags)
{
    const DiscreteBundle& bundle = pair.bundle();
    const GraphBase& base = pair.base();
    TotalSpace total = total_space(bundle);
    SimplicialMap f = total_map(pair, total);
    std::vector<int> base_label = base.complex().component_of();

    struct TotalData {
        std::shared_ptr<const Pi1Presentation> p;
        VertexWalk beta;
    };
    std::map<int, TotalData> per_root;
    std::map<int, VertexWalk> base_paths;
    for (const auto& comp : base.complex().components()) {
        const int r = base.root(comp.front());
        if (base_label[pair.base_images()[r]] != base_label[r])
            continue;
        const int e0 = total.vertex(r, 0);
        auto p = std::make_shared<const Pi1Presentation>(pi1_presentation(total.complex, e0));
        std::size_t over = 0;
        for (int x = 0; x < total.complex->vertex_count(); ++x)
            over += base_label[total.base_of[x]] == base_label[r];
        if (p->component().size() != over)
            throw UnsupportedError("total space over the component of '" + base.vertices()[r] +
                                   "' is disconnected");
        VertexWalk beta = p->tree_path(f(e0));
        base_paths[r] = total.project(beta);
        per_root[r] = {p, beta};
    }

    ReidemeisterData out;
    out.comps = base_components(pair, base_paths, depth);
    out.base_r = base_reidemeister(pair, out.comps);
    out.rows = class_rows(pair, out.comps, out.base_r, flags);

    for (const BaseComponent& c : out.comps) {
        const TotalData& td = per_root.at(c.root);
        ComponentSides s;
        s.root = c.root;
        s.lhs = component_reidemeister_trace(f, *td.p, td.beta, depth);
        s.rhs = ShadowElement(s.lhs.classes_ptr());
        out.sides.push_back(std::move(s));
    }

    for (ClassRow& row : out.rows) {
        const BasePathClass& c = row.cls;
        const TotalData& td = per_root.at(out.comps[c.component].root);
        const Pi1Presentation& pe = *td.p;
        ComponentSides& side = out.sides[c.component];
        SimplicialMap k = fiber_composite(pair, c.vertex, c.path);
        row.lefschetz = lefschetz_number(k);
        ShadowElement pushed(side.lhs.classes_ptr());
        auto fiber = bundle.fiber_ptr(c.vertex);
        std::vector<int> label = fiber->component_of();
        for (const auto& fc : fiber->components()) {
            const int x = fc.front();
            if (label[k(x)] != label[x])
                continue;
            Pi1Presentation pf = pi1_presentation(fiber, x);
            VertexWalk alpha = pf.tree_path(k(x));
            ShadowElement rf = component_reidemeister_trace(k, pf, alpha, depth);
            const VertexWalk& q = pe.tree_path(total.vertex(c.vertex, x));
            std::vector<GroupElement> images;
            for (int j = 0; j < pf.group().rank(); ++j) {
                VertexWalk loop = join_walks(join_walks(q, total.embed(c.vertex, pf.generator_loop(pf.surviving()[j]))),
                                             reverse_walk(q));
                images.push_back(pe.walk_element(loop));
            }
            GroupHomomorphism iota(pf.group(), pe.group(), std::move(images));
            VertexWalk wk = join_walks(q, total.embed(c.vertex, alpha));
            wk = join_walks(wk, total.lift(bundle, c.path, c.vertex, k(x)));
            wk = join_walks(wk, reverse_walk(f.image_walk(q)));
            wk = join_walks(wk, reverse_walk(td.beta));
            pushed.add(pushforward(iota, pe.walk_element(wk), rf, side.lhs.classes_ptr()));
        }
        side.rhs.add(pushed, row.index);
        row.pushed = std::move(pushed);
    }
    return out;
}

std::string join_parts(const std::vector<BaseComponent>& comps, const GraphBase& base,
                       const std::vector<std::string>& parts)
{
    if (parts.size() == 1)
        return parts[0];
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i)
        s += (i ? " ; " : "") + base.vertices()[comps[i].root] + ": " + parts[i];
    return s.empty() ? "0" : s;
}

void class_diff(const ShadowElement& lhs, const ShadowElement& rhs, const std::string& prefix,
                std::vector<std::string>& diff)
{
    std::set<GroupElement> reps;
    for (const auto& t : lhs.terms())
        reps.insert(t.cls.representative);
    for (const auto& t : rhs.terms())
        reps.insert(rhs.classes().canonical(t.cls.representative).representative);
    for (const GroupElement& g : reps) {
        Integer a = lhs.coefficient(g), b = rhs.coefficient(g);
        if (a != b)
            diff.push_back(prefix + "[" + lhs.classes().group().format(g) + "]: total " + to_string(a) +
                           ", sum " + to_string(b));
    }
}

} // namespace

VerificationReport verify_lefschetz_mult(const BundleSelfMapPair& pair, int depth)
{
    VerificationReport report;
    report.theorem = "lefschetz";
    if (!compatible(pair, report))
        return report;
    auto comps = base_components(pair, {}, depth);
    auto base_r = base_reidemeister(pair, comps);
    report.rows = class_rows(pair, comps, base_r, report.flags);
    Integer rhs = 0;
    std::string terms;
    for (ClassRow& row : report.rows) {
        row.lefschetz = refined_L(pair, row.cls);
        rhs += row.index * *row.lefschetz;
        terms += (terms.empty() ? "" : " + ") + to_string(row.index) + "*" + to_string(*row.lefschetz);
    }
    TotalSpace total = total_space(pair.bundle());
    Integer lhs = lefschetz_number(total_map(pair, total));
    report.lhs = to_string(lhs);
    report.rhs = (terms.empty() ? "0" : terms) + " = " + to_string(rhs);
    bool unknown = false;
    for (const auto& s : base_r)
        unknown = unknown || s.indeterminate();
    if (lhs != rhs) {
        report.verdict = Verdict::Fail;
        report.diff.push_back("L(f) = " + to_string(lhs) + " but the class sum is " + to_string(rhs));
    } else {
        report.verdict = unknown ? Verdict::Indeterminate : Verdict::Pass;
    }
    return report;
}

VerificationReport verify_reidemeister_mult(const BundleSelfMapPair& pair, int depth)
{
    VerificationReport report;
    report.theorem = "reidemeister";
    if (!compatible(pair, report))
        return report;
    ReidemeisterData data = reidemeister_data(pair, depth, report.flags);
    report.rows = data.rows;
    std::vector<std::string> lhs, rhs;
    bool equal = true, unknown = false;
    for (std::size_t i = 0; i < data.sides.size(); ++i) {
        const ComponentSides& s = data.sides[i];
        lhs.push_back(s.lhs.format());
        rhs.push_back(s.rhs.format());
        Comparison cmp = compare(s.lhs, s.rhs);
        unknown = unknown || cmp == Comparison::Unknown || s.lhs.indeterminate() || s.rhs.indeterminate();
        if (cmp == Comparison::Distinct) {
            equal = false;
            std::string prefix = data.sides.size() > 1 ? pair.base().vertices()[s.root] + ":" : "";
            class_diff(s.lhs, s.rhs, prefix, report.diff);
        }
    }
    if (unknown)
        report.flags.push_back("undecided twisted-class merge");
    report.lhs = join_parts(data.comps, pair.base(), lhs);
    report.rhs = join_parts(data.comps, pair.base(), rhs);
    if (data.sides.empty())
        report.lhs = report.rhs = "0";
    report.verdict = !equal ? Verdict::Fail : unknown ? Verdict::Indeterminate : Verdict::Pass;
    return report;
}

VerificationReport nielsen_additivity(const BundleSelfMapPair& pair, int depth)
{
    VerificationReport report;
    report.theorem = "nielsen";
    if (!compatible(pair, report))
        return report;
    ReidemeisterData data = reidemeister_data(pair, depth, report.flags);
    Index total = 0;
    for (const auto& s : data.sides)
        total += nielsen(s.lhs);
    Index sum = 0;
    std::string terms;
    for (ClassRow& row : data.rows) {
        ShadowElement scaled(row.pushed->classes_ptr());
        scaled.add(*row.pushed, row.index);
        row.nielsen = nielsen(scaled);
        if (*row.nielsen == 0)
            continue;
        sum += *row.nielsen;
        terms += (terms.empty() ? "" : " + ") + std::to_string(*row.nielsen);
    }
    report.rows = std::move(data.rows);
    report.lhs = std::to_string(total);
    report.rhs = (terms.empty() ? "0" : terms) + " = " + std::to_string(sum);
    report.verdict = total == sum ? Verdict::Pass : Verdict::Fail;
    if (total != sum)
        report.diff.push_back("N(f) = " + std::to_string(total) + " but the class sum is " + std::to_string(sum));
    return report;
}

} // namespace fixpt
