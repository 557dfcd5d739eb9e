#include "doctest.h"

#include "../support.hpp"
#include "fixpt/cli/commands.hpp"

#include <filesystem>
#include <fstream>

using namespace fixpt;
using cli::Source;

namespace {

/// Writes text to a fresh file under the temp directory and removes it on scope exit.
struct TempFile {
    std::filesystem::path path;

    explicit TempFile(const std::string& text)
    {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("fixpt_unit_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
        std::ofstream(path) << text;
    }
    ~TempFile() { std::filesystem::remove(path); }
};

io::Json report(const cli::Result& r) { return io::parse_text(r.out, "report"); }

Source named(const std::string& name) { return Source{"", name}; }

} // namespace

TEST_CASE("parse errors carry line and column")
{
    try {
        io::parse_text("{\n  \"a\": ,\n}", "doc.json");
        FAIL("expected a parse error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).rfind("doc.json:2:", 0) == 0);
    }
}

TEST_CASE("field diagnostics name the offending path")
{
    const auto j = io::parse_text(R"({"vertices": ["a", "b"], "simplices": [["a", "c"]]})", "x");
    try {
        io::parse_complex(j, "complex");
        FAIL("expected an input error");
    } catch (const InputError& e) {
        const std::string msg = e.what();
        CHECK(msg.find("complex.simplices") != std::string::npos);
        CHECK(msg.find("'c'") != std::string::npos);
    }
    CHECK_THROWS_AS(io::parse_complex(io::parse_text(R"({"vertices": ["a", "a"], "simplices": []})", "x"), "k"),
                    InputError);
}

TEST_CASE("catalog documents round trip")
{
    for (const std::string& name : catalog::standard_names()) {
        CAPTURE(name);
        const auto e = catalog::make(name);
        const io::Json doc = catalog::emit(e);
        const std::string text = io::dump(doc);
        const io::Json again = io::parse_text(text, name);
        CHECK(again == doc);
        switch (e.kind) {
        case catalog::Kind::Complex: {
            const auto k = io::parse_complex(catalog::payload(again, e.kind), name);
            CHECK(*k == *e.complex);
            break;
        }
        case catalog::Kind::Map: {
            const auto m = io::parse_map(catalog::payload(again, e.kind), name);
            CHECK(io::emit_map(m) == catalog::payload(doc, e.kind));
            break;
        }
        case catalog::Kind::Pair: {
            const auto p = io::parse_pair(catalog::payload(again, e.kind), name);
            CHECK(io::emit_pair(p) == catalog::payload(doc, e.kind));
            break;
        }
        }
    }
}

TEST_CASE("unknown catalog names are input errors")
{
    CHECK_THROWS_AS(catalog::make("no_such_space"), InputError);
    CHECK_THROWS_AS(catalog::make("circle:1"), InputError);
    CHECK_THROWS_AS(catalog::make("circle_reflection:5"), InputError);
}

TEST_CASE("sha256 of a known string")
{
    CHECK(io::sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("homology command")
{
    const auto r = cli::cmd_homology(named("rp2"));
    CHECK(r.exit_code == cli::ExitPass);
    const auto j = report(r);
    CHECK(j["command"] == "homology");
    CHECK(j["verdict"] == "Pass");
    CHECK(j["lhs"] == j["rhs"]);
    CHECK(j["inputs_digest"].get<std::string>().rfind("sha256:", 0) == 0);
}

TEST_CASE("report keys and determinism")
{
    const auto a = cli::cmd_bundle_verify(named("double_cover_reflection"), "both", 8);
    const auto b = cli::cmd_bundle_verify(named("double_cover_reflection"), "both", 8);
    CHECK(a.out == b.out);
    const auto j = report(a);
    for (const char* key : {"command", "inputs_digest", "tables", "lhs", "rhs", "verdict", "flags"})
        CHECK(j.contains(key));
    CHECK(j["verdict"] == "Pass");
    CHECK(j["lhs"].is_object());
    CHECK(j["lhs"]["lefschetz"] == "2");
    CHECK(j["rhs"]["lefschetz"] == "1*2 + 1*0 = 2");
}

TEST_CASE("file and catalog sources give the same report body")
{
    const TempFile f(io::dump(catalog::emit(catalog::make("circle_reflection"))));
    const auto from_file = report(cli::cmd_lefschetz(Source{f.path.string(), ""}));
    const auto from_catalog = report(cli::cmd_lefschetz(named("circle_reflection")));
    CHECK(from_file["lhs"] == from_catalog["lhs"]);
    CHECK(from_file["inputs_digest"] != "");
    CHECK(from_file["lhs"] == 2);
}

TEST_CASE("exit codes")
{
    CHECK(cli::cmd_bundle_verify(named("double_cover_reflection"), "lefschetz", 8).exit_code == cli::ExitPass);
    CHECK(cli::cmd_bundle_verify(named("double_cover_corrupted"), "lefschetz", 8).exit_code == cli::ExitFail);
    CHECK(cli::cmd_bundle_verify(named("klein_bundle"), "reidemeister", 8).exit_code == cli::ExitUnsupported);
    CHECK(cli::cmd_reidemeister(named("figure_eight:drag"), 8).exit_code == cli::ExitUnsupported);
    CHECK(cli::cmd_reidemeister(named("circle_degree_map:3"), 8).exit_code == cli::ExitPass);

    const auto unknown = cli::cmd_homology(named("no_such_space"));
    CHECK(unknown.exit_code == cli::ExitInput);
    CHECK(unknown.out.empty());
    CHECK_FALSE(unknown.err.empty());

    const TempFile bad("{ \"vertices\": [");
    const auto malformed = cli::cmd_homology(Source{bad.path.string(), ""});
    CHECK(malformed.exit_code == cli::ExitInput);
    CHECK(malformed.out.empty());

    const auto missing = cli::cmd_homology(Source{"/nonexistent/fixpt.json", ""});
    CHECK(missing.exit_code == cli::ExitInput);
}

TEST_CASE("indeterminate report still carries tables")
{
    const auto r = cli::cmd_reidemeister(named("figure_eight:drag"), 8);
    const auto j = report(r);
    CHECK(j["verdict"] == "Indeterminate");
    CHECK_FALSE(j["tables"].empty());
}

TEST_CASE("catalog listing names every family")
{
    const auto r = cli::cmd_catalog_list();
    CHECK(r.exit_code == cli::ExitPass);
    for (const auto& f : catalog::families())
        CHECK(r.out.find(f.name) != std::string::npos);
    CHECK(cli::cmd_catalog_emit("circle:4").exit_code == cli::ExitPass);
    CHECK(cli::cmd_catalog_emit("circle:2").exit_code == cli::ExitInput);
}
