#include "fixpt/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace fixpt::cli;

namespace {

void add_source(CLI::App* cmd, Source& src)
{
    auto* file = cmd->add_option("input", src.path, "input document, - for stdin");
    auto* cat = cmd->add_option("--catalog", src.catalog, "catalog fixture name instead of a file");
    file->excludes(cat);
    cat->excludes(file);
}

int emit(const Result& r, const std::string& out_path)
{
    std::cerr << r.err;
    if (r.out.empty())
        return r.exit_code;
    if (out_path.empty()) {
        std::cout << r.out;
        return r.exit_code;
    }
    std::ofstream f(out_path, std::ios::binary);
    f << r.out;
    if (!f) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return ExitInput;
    }
    return r.exit_code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"fixed-point invariants of simplicial maps and fiber bundles"};
    app.require_subcommand(1);
    std::string out_path;
    int depth = 8;
    std::string theorem = "both";
    Source src;

    auto* hom = app.add_subcommand("homology", "Betti numbers and torsion of a complex");
    auto* lef = app.add_subcommand("lefschetz", "Lefschetz number, chain and homology level");
    auto* rei = app.add_subcommand("reidemeister", "Reidemeister trace of a self-map");
    auto* bun = app.add_subcommand("bundle-verify", "check the product formulas on a bundle pair");
    auto* cat = app.add_subcommand("catalog", "list or emit fixtures");
    for (auto* c : {hom, lef, rei, bun}) {
        add_source(c, src);
        c->add_option("--out", out_path, "write the report here instead of stdout");
    }
    for (auto* c : {rei, bun})
        c->add_option("--depth", depth, "twisted class search depth")->check(CLI::NonNegativeNumber);
    bun->add_option("--theorem", theorem, "lefschetz, reidemeister, nielsen or both")
        ->check(CLI::IsMember({"lefschetz", "reidemeister", "nielsen", "both"}));

    cat->require_subcommand(1);
    cat->add_subcommand("list", "list fixture families");
    auto* cat_emit = cat->add_subcommand("emit", "write a fixture document");
    std::string name;
    cat_emit->add_option("name", name, "fixture name, e.g. trivial_product:2,3")->required();
    cat_emit->add_option("--out", out_path, "output file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ExitInput;
    }

    for (auto* c : {hom, lef, rei, bun})
        if (c->parsed() && src.path.empty() && src.catalog.empty()) {
            std::cerr << "error: give an input file or --catalog NAME\n";
            return ExitInput;
        }

    if (hom->parsed())
        return emit(cmd_homology(src), out_path);
    if (lef->parsed())
        return emit(cmd_lefschetz(src), out_path);
    if (rei->parsed())
        return emit(cmd_reidemeister(src, depth), out_path);
    if (bun->parsed())
        return emit(cmd_bundle_verify(src, theorem, depth), out_path);
    if (cat->got_subcommand("list"))
        return emit(cmd_catalog_list(), "");
    return emit(cmd_catalog_emit(name), out_path);
}
