#ifndef FIXPT_CLI_COMMANDS_HPP
#define FIXPT_CLI_COMMANDS_HPP

#include "fixpt/cli/catalog.hpp"

namespace fixpt::cli {

enum Exit { ExitPass = 0, ExitFail = 1, ExitInput = 2, ExitUnsupported = 3 };

/// A document path ("-" for stdin) or a catalog fixture name; exactly one is set.
struct Source {
    std::string path;
    std::string catalog;
};

struct Result {
    int exit_code = ExitPass;
    std::string out; // report document or listing
    std::string err; // diagnostics
};

Result cmd_homology(const Source& in);
Result cmd_lefschetz(const Source& in);
Result cmd_reidemeister(const Source& in, int depth);
/// theorem: lefschetz, reidemeister, nielsen or both (lefschetz and reidemeister).
Result cmd_bundle_verify(const Source& in, const std::string& theorem, int depth);
Result cmd_catalog_list();
Result cmd_catalog_emit(const std::string& name);

} // namespace fixpt::cli

#endif
