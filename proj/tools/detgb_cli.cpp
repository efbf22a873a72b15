// Command-line front end. All computation goes through the C API of the
// shared library; this file only parses arguments, loads spec files, prints
// payloads to stdout, and maps statuses to exit codes.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "detgb.h"

namespace {

struct StringDeleter {
    void operator()(char* s) const { detgb_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PermDeleter {
    void operator()(detgb_permutation* w) const { detgb_permutation_free(w); }
};
using OwnedPerm = std::unique_ptr<detgb_permutation, PermDeleter>;

int report_error(detgb_status status, const OwnedString& message) {
    std::cerr << "error: " << (message ? message.get() : "unspecified failure") << "\n";
    return static_cast<int>(status);
}

OwnedPerm parse_perm_or_exit(const std::vector<std::string>& tokens, int& exit_code) {
    std::string joined;
    for (const std::string& t : tokens) {
        if (!joined.empty()) joined += ",";
        joined += t;
    }
    detgb_permutation* raw = nullptr;
    char* err = nullptr;
    const detgb_status st = detgb_permutation_parse(joined.c_str(), &raw, &err);
    OwnedString msg(err);
    if (st != DETGB_OK) {
        exit_code = report_error(st, msg);
        return nullptr;
    }
    exit_code = 0;
    return OwnedPerm(raw);
}

std::string read_file_or_exit(const std::string& path, int& exit_code) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read spec file \"" << path << "\"\n";
        exit_code = static_cast<int>(DETGB_ERROR_INVALID_INPUT);
        return {};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    exit_code = 0;
    return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Groebner bases of Schubert, ladder, and blockwise determinantal ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(detgb_version()));

    // schubert ------------------------------------------------------------
    std::string sch_what;
    std::vector<std::string> sch_perm;
    std::string sch_order, sch_format = "text";
    bool sch_stats = false;
    auto* sch = app.add_subcommand("schubert", "Schubert determinantal ideal computations");
    sch->add_option("subcommand", sch_what, "ess | rothe | fulton | elusive | redgb | wchar")
        ->required();
    sch->add_option("permutation", sch_perm, "permutation, e.g. 2143 or [10,9,2,...]")
        ->required();
    sch->add_option("--order", sch_order, "term order: new nes swe swn nwe nws sew sen");
    sch->add_option("--format", sch_format, "text | json")->check(CLI::IsMember({"text", "json"}));
    sch->add_flag("--stats", sch_stats, "print counts and wall time instead of the payload");

    // verify ---------------------------------------------------------------
    std::string ver_what, ver_order, ver_format = "text";
    std::vector<std::string> ver_schubert, ver_elusive, ver_redgb;
    auto* ver = app.add_subcommand("verify", "classical-oracle verification");
    ver->add_option("check", ver_what, "gb | minimal | reduced | normality | strongpair")
        ->required();
    ver->add_option("--schubert", ver_schubert, "verify the Fulton generators of this permutation");
    ver->add_option("--elusive", ver_elusive, "verify the elusive minors of this permutation");
    ver->add_option("--redgb", ver_redgb, "verify the reduced basis of this permutation");
    ver->add_option("--order", ver_order, "term order")->required();
    ver->add_option("--format", ver_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    // ladder ----------------------------------------------------------------
    std::string lad_what, lad_spec, lad_order, lad_format = "text";
    int lad_n = 0;
    auto* lad = app.add_subcommand("ladder", "ladder and blockwise determinantal ideals");
    lad->add_option("subcommand", lad_what, "onesided | twosided | tovex | criteria")->required();
    lad->add_option("--spec", lad_spec, "JSON spec file")->required();
    lad->add_option("--order", lad_order, "term order (criteria)");
    lad->add_option("-n", lad_n, "ambient S_n for tovex (0 = smallest admissible)");
    lad->add_option("--format", lad_format, "text | json")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Keep --help/--version at exit 0; everything else is an input error.
        const int code = app.exit(e);
        return code == 0 ? 0 : static_cast<int>(DETGB_ERROR_INVALID_INPUT);
    }

    if (sch->parsed()) {
        int ec = 0;
        OwnedPerm w = parse_perm_or_exit(sch_perm, ec);
        if (!w) return ec;
        char* payload = nullptr;
        char* err = nullptr;
        const detgb_status st =
            detgb_schubert(w.get(), sch_what.c_str(), sch_order.empty() ? nullptr : sch_order.c_str(),
                           sch_format.c_str(), sch_stats ? 1 : 0, &payload, &err);
        OwnedString out(payload), msg(err);
        if (st != DETGB_OK) return report_error(st, msg);
        if (out && *out.get()) std::fputs(out.get(), stdout);
        return 0;
    }

    if (ver->parsed()) {
        std::string target;
        const std::vector<std::string>* tokens = nullptr;
        int chosen = 0;
        if (!ver_schubert.empty()) { target = "fulton"; tokens = &ver_schubert; ++chosen; }
        if (!ver_elusive.empty()) { target = "elusive"; tokens = &ver_elusive; ++chosen; }
        if (!ver_redgb.empty()) { target = "redgb"; tokens = &ver_redgb; ++chosen; }
        if (chosen != 1) {
            std::cerr << "error: give exactly one of --schubert, --elusive, --redgb\n";
            return static_cast<int>(DETGB_ERROR_INVALID_INPUT);
        }
        int ec = 0;
        OwnedPerm w = parse_perm_or_exit(*tokens, ec);
        if (!w) return ec;
        char* payload = nullptr;
        char* err = nullptr;
        const detgb_status st = detgb_verify(w.get(), ver_what.c_str(), target.c_str(),
                                             ver_order.c_str(), ver_format.c_str(), &payload, &err);
        OwnedString out(payload), msg(err);
        if (st == DETGB_OK || st == DETGB_CHECK_FAILED) {
            if (out && *out.get()) std::fputs(out.get(), stdout);
            return static_cast<int>(st);
        }
        return report_error(st, msg);
    }

    if (lad->parsed()) {
        int ec = 0;
        const std::string spec = read_file_or_exit(lad_spec, ec);
        if (ec) return ec;
        char* payload = nullptr;
        char* err = nullptr;
        const detgb_status st =
            detgb_ladder(lad_what.c_str(), spec.c_str(),
                         lad_order.empty() ? nullptr : lad_order.c_str(), lad_format.c_str(),
                         lad_n, &payload, &err);
        OwnedString out(payload), msg(err);
        if (st != DETGB_OK) return report_error(st, msg);
        if (out && *out.get()) std::fputs(out.get(), stdout);
        return 0;
    }

    return 0;
}
