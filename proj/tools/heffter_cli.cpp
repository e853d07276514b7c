// Command-line front end: construct, verify, table, decompose, search.
// Exit codes: 0 success, 1 property failure, 2 usage/parse/class error,
// 3 search budget exhausted.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "heffter/construct.hpp"
#include "heffter/decompose.hpp"
#include "heffter/io.hpp"
#include "heffter/oracle.hpp"
#include "heffter/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kUsageError = 2;
constexpr int kBudgetExhausted = 3;

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw heffter::HeffterError("cannot write '" + path + "'");
    out << text;
}

std::string witness_lines(const heffter::VerifyReport& rep) {
    std::string out;
    for (const auto& w : rep.witnesses)
        out += std::string("  ") + heffter::axis_name(w.axis) + " " +
               std::to_string(w.index) + ": " + w.detail + "\n";
    return out;
}

int cmd_construct(int n, int k, const std::string& format, const std::string& out,
                  bool force) {
    heffter::PartialArray a = heffter::construct(n, k, force);
    if (force) {
        // forced parameters are outside the claimed range: verify, never trust
        auto rep = heffter::verify_array(a);
        std::cerr << "forced construction: heffter(integer)="
                  << (rep.heffter_ok(true) ? "ok" : "FAIL")
                  << " globally_simple=" << (rep.globally_simple ? "ok" : "FAIL")
                  << "\n"
                  << witness_lines(rep);
        if (!rep.heffter_ok(true) || !rep.globally_simple) {
            write_output(heffter::serialize(a, format), out);
            return kPropertyFailure;
        }
    }
    write_output(heffter::serialize(a, format), out);
    return kOk;
}

int cmd_verify(const std::string& file, bool integer, bool global_simple,
               bool support, bool json_out) {
    heffter::PartialArray a = heffter::load_array(file);
    auto rep = heffter::verify_array(a);

    bool ok = rep.fill_ok && rep.support_ok && rep.modular_sums_ok;
    if (integer) ok = ok && rep.integer_sums_ok;
    if (global_simple) ok = ok && rep.globally_simple;
    (void)support;  // support is part of the base check; flag kept for scripts

    if (json_out) {
        nlohmann::json doc{{"fill_ok", rep.fill_ok},
                           {"support_ok", rep.support_ok},
                           {"modular_sums_ok", rep.modular_sums_ok},
                           {"integer_sums_ok", rep.integer_sums_ok},
                           {"globally_simple", rep.globally_simple},
                           {"ok", ok}};
        auto& w = doc["witnesses"] = nlohmann::json::array();
        for (const auto& wit : rep.witnesses)
            w.push_back({{"axis", heffter::axis_name(wit.axis)},
                         {"index", wit.index},
                         {"detail", wit.detail}});
        std::cout << doc.dump(1) << "\n";
    } else {
        auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
        std::cout << "fill counts:    " << flag(rep.fill_ok) << "\n"
                  << "support:        " << flag(rep.support_ok) << "\n"
                  << "modular sums:   " << flag(rep.modular_sums_ok) << "\n"
                  << "integer sums:   " << flag(rep.integer_sums_ok)
                  << (integer ? "" : " (informational)") << "\n"
                  << "globally simple: " << flag(rep.globally_simple)
                  << (global_simple ? "" : " (informational)") << "\n"
                  << witness_lines(rep);
    }
    return ok ? kOk : kPropertyFailure;
}

int cmd_table(const std::string& file, const std::string& axis,
              const std::string& cls_name, const std::string& out) {
    heffter::PartialArray a = heffter::load_array(file);
    heffter::Axis ax = axis == "rows" ? heffter::Axis::Row : heffter::Axis::Column;
    heffter::ArrayClass cls =
        cls_name == "n3" ? heffter::ArrayClass::N3 : heffter::ArrayClass::N0;
    auto traces = heffter::sum_table(a, ax, cls);
    write_output(heffter::sum_table_csv(traces), out);
    return kOk;
}

std::string type_str(const std::vector<int>& type) {
    // cycle type as length^count, largest first
    std::string out = "{";
    for (std::size_t i = 0; i < type.size();) {
        std::size_t j = i;
        while (j < type.size() && type[j] == type[i]) ++j;
        if (i) out += ", ";
        out += std::to_string(type[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out + "}";
}

int cmd_decompose(const std::string& file, bool check_orth, bool check_compat) {
    heffter::PartialArray a = heffter::load_array(file);
    const auto& d = a.dims();

    auto rows = heffter::develop(heffter::base_cycles(a, heffter::Axis::Row));
    auto cols = heffter::develop(heffter::base_cycles(a, heffter::Axis::Column));
    auto row_check = heffter::verify_decomposition(rows);
    auto col_check = heffter::verify_decomposition(cols);
    std::cout << "row system: " << rows.base.size() << " base cycles of length "
              << rows.cycle_length << ", developed " << rows.developed_count()
              << ", edge partition of K_" << rows.modulus << ": "
              << (row_check.ok ? "ok" : "FAIL " + row_check.witness) << " ("
              << row_check.edges_covered << " edges)\n";
    std::cout << "column system: " << cols.base.size() << " base cycles of length "
              << cols.cycle_length << ", developed " << cols.developed_count()
              << ", edge partition of K_" << cols.modulus << ": "
              << (col_check.ok ? "ok" : "FAIL " + col_check.witness) << " ("
              << col_check.edges_covered << " edges)\n";
    bool ok = row_check.ok && col_check.ok;

    if (check_orth) {
        auto orth = heffter::check_orthogonality(rows, cols);
        std::cout << "orthogonality: " << (orth.ok ? "ok" : "FAIL " + orth.witness)
                  << "\n";
        ok = ok && orth.ok;
    }
    if (check_compat) {
        auto pair = heffter::natural_orderings(a);
        auto rep = heffter::check_compatible(pair, d.filled());
        std::cout << "natural orderings: omega_r.omega_c cycle type "
                  << type_str(rep.type_rc) << ", omega_c.omega_r "
                  << type_str(rep.type_cr) << ", compatible: "
                  << (rep.compatible ? "yes" : "no") << "\n";
        if (d.is_square() && d.n % 2 == 1 && d.k % 2 == 1)
            std::cout << "gcd predicate (n, k-2): compatible orderings "
                      << (heffter::gcd_compat_predicate(d.n, d.k) ==
                                  heffter::CompatPrediction::Yes
                              ? "exist"
                              : "unknown")
                      << "\n";
    }
    return ok ? kOk : kPropertyFailure;
}

int cmd_search(int m, int n, int h, int k, std::size_t limit, std::uint64_t budget,
               const std::string& format) {
    heffter::SearchSpec spec;
    spec.m = m;
    spec.n = n;
    spec.h = h;
    spec.k = k;
    spec.limit = limit;
    spec.budget = budget;
    auto res = heffter::brute_force_heffter(spec);
    std::cout << "solutions: " << res.solutions.size() << " (nodes " << res.nodes
              << (res.budget_exceeded ? ", budget exhausted" : "") << ")\n";
    for (const auto& a : res.solutions) std::cout << heffter::serialize(a, format);
    return res.budget_exceeded ? kBudgetExhausted : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"globally simple integer Heffter arrays H(n;k): construction, "
                 "verification, cycle decompositions"};
    app.require_subcommand(1);
    // keep -h free for the search subcommand's --h option
    app.set_help_flag("--help", "print help");

    int n = 0, k = 0, m = 0, h = 0;
    std::string format = "json", file, out, axis, cls;
    bool force = false, integer = false, global_simple = false, support = false;
    bool json_out = false, check_orth = false, check_compat = false;
    std::size_t limit = static_cast<std::size_t>(-1);
    std::uint64_t budget = 50'000'000;

    auto* c = app.add_subcommand("construct", "build H(n;k) and print it");
    c->add_option("--n", n, "array order")->required();
    c->add_option("--k", k, "filled cells per row and column")->required();
    c->add_option("--format", format, "json, csv or grid")
        ->check(CLI::IsMember({"json", "csv", "grid"}));
    c->add_option("-o,--output", out, "write to file instead of stdout");
    c->add_flag("--force", force, "build k = 9 and verify instead of trusting it");

    auto* v = app.add_subcommand("verify", "check the defining properties of an array file");
    v->add_option("file", file, "JSON or CSV array file")->required();
    v->add_flag("--integer", integer, "require sums to vanish over the integers");
    v->add_flag("--global-simple", global_simple, "require natural orderings to be simple");
    v->add_flag("--support", support, "require support {1..nk} (always checked)");
    v->add_flag("--json", json_out, "machine-readable report");

    auto* t = app.add_subcommand("table", "partial-sum table in the reference convention");
    t->add_option("file", file, "JSON or CSV array file")->required();
    t->add_option("--axis", axis, "rows or cols")
        ->required()
        ->check(CLI::IsMember({"rows", "cols"}));
    t->add_option("--class", cls, "n3 (n = 3 mod 4) or n0 (n = 0 mod 4)")
        ->required()
        ->check(CLI::IsMember({"n3", "n0"}));
    t->add_option("-o,--output", out, "write to file instead of stdout");

    auto* dc = app.add_subcommand("decompose",
                                  "develop row/column cycle systems over K_{2nk+1}");
    dc->add_option("file", file, "JSON or CSV array file")->required();
    dc->add_flag("--check-orthogonal", check_orth, "verify the two systems are orthogonal");
    dc->add_flag("--check-compatible", check_compat,
                 "report the natural-ordering composition cycle type");

    auto* s = app.add_subcommand("search", "exhaustive search for tiny Heffter arrays");
    s->set_help_flag("--help", "print help");
    s->add_option("--m", m, "rows")->required();
    s->add_option("--n", n, "columns")->required();
    s->add_option("--h", h, "filled cells per row")->required();
    s->add_option("--k", k, "filled cells per column")->required();
    s->add_option("--limit", limit, "stop after this many solutions");
    s->add_option("--budget", budget, "node budget");
    s->add_option("--format", format, "json, csv or grid")
        ->check(CLI::IsMember({"json", "csv", "grid"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (c->parsed()) return cmd_construct(n, k, format, out, force);
        if (v->parsed()) return cmd_verify(file, integer, global_simple, support, json_out);
        if (t->parsed()) return cmd_table(file, axis, cls, out);
        if (dc->parsed()) return cmd_decompose(file, check_orth, check_compat);
        if (s->parsed()) return cmd_search(m, n, h, k, limit, budget, format);
    } catch (const heffter::NotSimpleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kPropertyFailure;
    } catch (const heffter::ClassError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const heffter::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    } catch (const heffter::HeffterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageError;
    }
    return kUsageError;
}
