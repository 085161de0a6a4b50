// Command line front end. Talks to the library exclusively through the
// C interface in utcell.h.

#include "utcell.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <string>

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct CommonOpts {
    int n = 0;
    std::string d;
    std::string format = "text";
};

utcell_format fmt_of(const std::string& f) {
    return f == "json" ? UTCELL_JSON : UTCELL_TEXT;
}

int report_error(utcell_status st) {
    std::cerr << "error: " << utcell_last_error() << "\n";
    return st == UTCELL_EINVAL ? kExitBadInput : (st == UTCELL_EVERIFY ? kExitVerifyFailed : 3);
}

struct SubsetHandle {
    utcell_subset* ptr = nullptr;
    ~SubsetHandle() { utcell_subset_free(ptr); }
};

struct StringOut {
    char* ptr = nullptr;
    ~StringOut() { utcell_string_free(ptr); }
};

int emit(utcell_status st, StringOut& s) {
    if (st != UTCELL_OK && st != UTCELL_EVERIFY) return report_error(st);
    if (s.ptr) {
        std::fputs(s.ptr, stdout);
        std::size_t len = std::char_traits<char>::length(s.ptr);
        if (len == 0 || s.ptr[len - 1] != '\n') std::fputc('\n', stdout);
    }
    if (st == UTCELL_EVERIFY) {
        std::cerr << "error: " << utcell_last_error() << "\n";
        return kExitVerifyFailed;
    }
    return 0;
}

int open_subset(const CommonOpts& opts, SubsetHandle& d) {
    utcell_status st = utcell_subset_parse(opts.n, opts.d.c_str(), &d.ptr);
    if (st != UTCELL_OK) return report_error(st);
    return -1;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_d = true) {
    cmd->add_option("--n", opts.n, "board size")->required();
    if (with_d) cmd->add_option("--d", opts.d, "basic subset, e.g. \"(4,1),(7,2)\"");
    cmd->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"basic subsets of UT(n): diagrams, Weyl elements, coadjoint invariants"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string phi;
    unsigned long seed = 0;
    int trials = 20;

    CLI::App* cmd_diagram = app.add_subcommand("diagram", "fill the diagram and print C(D)");
    add_common(cmd_diagram, opts);
    CLI::App* cmd_wd = app.add_subcommand("wd", "the permutation w_D and its homogeneity");
    add_common(cmd_wd, opts);
    CLI::App* cmd_factor = app.add_subcommand("factor", "reflection factorization of w_D");
    add_common(cmd_factor, opts);
    CLI::App* cmd_inv = app.add_subcommand("invariants", "generators F_xi of the invariant field");
    add_common(cmd_inv, opts);
    CLI::App* cmd_rel = app.add_subcommand("relations", "minors cutting out the basic cell");
    add_common(cmd_rel, opts);
    CLI::App* cmd_verify = app.add_subcommand("verify", "invariance and independence checks");
    add_common(cmd_verify, opts);
    cmd_verify->add_option("--phi", phi, "values on D, e.g. \"(4,1)=1,(7,2)=2/3\"");
    cmd_verify->add_option("--seed", seed, "random seed");
    cmd_verify->add_option("--trials", trials, "number of verification trials");
    CLI::App* cmd_enum = app.add_subcommand("enumerate", "all basic subsets of the board");
    add_common(cmd_enum, opts, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);   // prints help/diagnostics
        return code == 0 ? 0 : kExitBadInput;
    }

    const utcell_format fmt = fmt_of(opts.format);

    if (cmd_enum->parsed()) {
        StringOut out;
        return emit(utcell_enumerate(opts.n, fmt, &out.ptr), out);
    }

    SubsetHandle d;
    if (int rc = open_subset(opts, d); rc >= 0) return rc;

    if (cmd_diagram->parsed()) {
        utcell_diagram* dia = nullptr;
        utcell_status st = utcell_diagram_build(d.ptr, &dia);
        if (st != UTCELL_OK) return report_error(st);
        StringOut grid, ext;
        st = utcell_diagram_render(dia, fmt, &grid.ptr);
        if (st == UTCELL_OK && fmt == UTCELL_TEXT) st = utcell_diagram_extension(dia, &ext.ptr);
        utcell_diagram_free(dia);
        if (st != UTCELL_OK) return report_error(st);
        std::fputs(grid.ptr, stdout);
        if (ext.ptr) std::printf("C(D) = %s\n", ext.ptr);
        return 0;
    }
    if (cmd_wd->parsed()) {
        StringOut out;
        return emit(utcell_wd(d.ptr, fmt, &out.ptr), out);
    }
    if (cmd_factor->parsed()) {
        StringOut out;
        return emit(utcell_factorize(d.ptr, fmt, &out.ptr), out);
    }
    if (cmd_inv->parsed()) {
        utcell_invariants* inv = nullptr;
        utcell_status st = utcell_invariants_compute(d.ptr, &inv);
        if (st != UTCELL_OK) return report_error(st);
        StringOut out;
        st = utcell_invariants_render(inv, fmt, &out.ptr);
        utcell_invariants_free(inv);
        return emit(st, out);
    }
    if (cmd_rel->parsed()) {
        StringOut out;
        return emit(utcell_relations(d.ptr, fmt, &out.ptr), out);
    }
    if (cmd_verify->parsed()) {
        StringOut out;
        utcell_status st = utcell_verify(d.ptr, phi.empty() ? nullptr : phi.c_str(),
                                         seed, trials, &out.ptr);
        return emit(st, out);
    }
    return kExitBadInput;
}
