#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "burgetree/burgetree.h"

namespace {

enum Exit { kPass = 0, kFail = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CString {
    char* p = nullptr;
    ~CString() { bt_string_free(p); }
    std::string str() const { return p ? p : ""; }
};

using PolyPtr = std::unique_ptr<bt_poly, decltype(&bt_poly_free)>;

std::int64_t to_int(const std::string& s, const char* what) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || s.empty()) throw UsageError(std::string(what) + ": not an integer: '" + s + "'");
    return v;
}

void need(const std::vector<std::string>& args, std::size_t n, const char* usage) {
    if (args.size() != n) throw UsageError(std::string("expected: eval ") + usage);
}

// Library errors on malformed or out-of-domain input are usage errors for the CLI.
void check(bt_status s) {
    if (s == BT_OK) return;
    throw UsageError(bt_last_error());
}

std::string poly_text(bt_poly* raw) {
    PolyPtr p(raw, &bt_poly_free);
    CString s;
    check(bt_poly_to_string(p.get(), &s.p));
    return s.str();
}

bt_family family_code(const std::string& name) {
    if (name == "F") return BT_FAMILY_F;
    if (name == "f") return BT_FAMILY_f;
    if (name == "H") return BT_FAMILY_H;
    if (name == "I") return BT_FAMILY_I;
    throw UsageError("unknown family '" + name + "' (expected F, f, H or I)");
}

struct EvalArgs {
    std::string object;
    std::vector<std::string> params;
    std::optional<std::int64_t> L, M;
    std::int64_t order = 60;
    std::string side = "lattice";
};

std::string run_eval(const EvalArgs& e) {
    const auto& a = e.params;
    bt_poly* p = nullptr;
    if (e.object == "qbin") {
        need(a, 2, "qbin n m");
        check(bt_qbinomial(to_int(a[0], "n"), to_int(a[1], "m"), &p));
    } else if (e.object == "B") {
        need(a, 4, "B L M a b");
        check(bt_b_kernel(to_int(a[0], "L"), to_int(a[1], "M"), to_int(a[2], "a"), to_int(a[3], "b"), &p));
    } else if (e.object == "G") {
        need(a, 5, "G N M alpha beta K");
        check(bt_g_poly(to_int(a[0], "N"), to_int(a[1], "M"), a[2].c_str(), a[3].c_str(), to_int(a[4], "K"), &p));
    } else if (e.object == "D") {
        need(a, 6, "D K i N M alpha beta");
        check(bt_d_poly(to_int(a[0], "K"), to_int(a[1], "i"), to_int(a[2], "N"), to_int(a[3], "M"), a[4].c_str(), a[5].c_str(), &p));
    } else if (e.object == "F" || e.object == "f" || e.object == "H" || e.object == "I") {
        need(a, 2, (e.object + " a b [--L n] [--M n]").c_str());
        const bt_family fam = family_code(e.object);
        const std::int64_t x = to_int(a[0], "a"), y = to_int(a[1], "b");
        if (e.side != "lattice") {
            if (!e.L || !e.M) throw UsageError("--side " + e.side + " needs both --L and --M");
            check(e.side == "bosonic" ? bt_bosonic(fam, x, y, *e.L, *e.M, &p) : bt_tree_walk(fam, x, y, *e.L, *e.M, &p));
        } else if (e.L && e.M) {
            check(bt_eval(fam, x, y, *e.L, *e.M, &p));
        } else if (e.L) {
            check(bt_eval_limit_M(fam, x, y, *e.L, &p));
        } else if (e.M) {
            check(bt_eval_limit_L(fam, x, y, *e.M, &p));
        } else {
            throw UsageError("eval " + e.object + " needs --L, --M or both");
        }
    } else if (e.object == "Ftilde") {
        need(a, 2, "Ftilde a b --M n");
        if (!e.M || e.L) throw UsageError("eval Ftilde takes --M only");
        check(bt_eval_limit_L(BT_FAMILY_F, to_int(a[0], "a"), to_int(a[1], "b"), *e.M, &p));
    } else if (e.object == "series") {
        need(a, 3, "series FAMILY a b [--order T]");
        bt_series* s = nullptr;
        check(bt_eval_series(family_code(a[0]), to_int(a[1], "a"), to_int(a[2], "b"), e.order, &s));
        std::unique_ptr<bt_series, decltype(&bt_series_free)> owner(s, &bt_series_free);
        CString text;
        check(bt_series_to_string(s, &text.p));
        return text.str();
    } else {
        throw UsageError("unknown object '" + e.object + "' (qbin, B, G, D, F, f, H, I, Ftilde, series)");
    }
    return poly_text(p);
}

struct VerifyArgs {
    std::vector<std::string> suites;
    std::vector<std::string> cases;
    std::int64_t a_max = -1, lm_max = -1, n_max = -1, order = -1;
    unsigned jobs = 0;
    std::string format = "json";
    std::string out;
    bool canonical = false;
    std::string config;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CLI11 only reads config files for the top-level app, so the verify file is
// parsed with its TOML reader and fed to options the command line left unset.
void apply_config(CLI::App& cmd, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read config file " + path);
    std::vector<CLI::ConfigItem> items;
    try {
        items = CLI::ConfigTOML().from_config(in);
    } catch (const CLI::ParseError& e) {
        throw UsageError(path + ": " + e.what());
    }
    for (const auto& item : items) {
        if (!item.parents.empty()) throw UsageError(path + ": sections are not supported (" + item.fullname() + ")");
        CLI::Option* opt = cmd.get_option_no_throw("--" + item.name);
        if (opt == nullptr || item.name == "config") throw UsageError(path + ": unknown key " + item.name);
        if (opt->count() > 0) continue;
        try {
            opt->add_result(item.inputs);
            opt->run_callback();
        } catch (const CLI::ParseError& e) {
            throw UsageError(path + ": " + item.name + ": " + e.what());
        }
    }
}

int run_verify(const VerifyArgs& v) {
    std::vector<std::string> suites;
    for (const auto& s : v.suites) {
        if (s == "all") {
            CString names;
            check(bt_suite_names(&names.p));
            std::istringstream is(names.str());
            for (std::string line; std::getline(is, line);) suites.push_back(line);
        } else {
            suites.push_back(s);
        }
    }
    if (suites.empty() && v.cases.empty()) throw UsageError("verify needs --suite or --case");
    std::vector<const char*> sp, cp;
    for (const auto& s : suites) sp.push_back(s.c_str());
    for (const auto& c : v.cases) cp.push_back(c.c_str());

    bt_format fmt = BT_FORMAT_JSON;
    if (v.format == "csv") fmt = BT_FORMAT_CSV;
    else if (v.format == "plain") fmt = BT_FORMAT_PLAIN;

    // Fail on an unwritable path before spending time on the campaign.
    std::ofstream file;
    if (!v.out.empty()) {
        file.open(v.out, std::ios::binary | std::ios::trunc);
        if (!file) {
            std::cerr << "error: cannot write " << v.out << ": " << std::strerror(errno) << '\n';
            return kIo;
        }
    }

    bt_campaign_options o;
    bt_campaign_options_init(&o);
    o.a_max = v.a_max;
    o.lm_max = v.lm_max;
    o.n_max = v.n_max;
    o.order = v.order;
    o.jobs = v.jobs;
    bt_campaign* raw = nullptr;
    check(bt_campaign_run(sp.data(), sp.size(), cp.data(), cp.size(), &o, &raw));
    std::unique_ptr<bt_campaign, decltype(&bt_campaign_free)> camp(raw, &bt_campaign_free);

    CString report, summary;
    check(bt_campaign_render(camp.get(), fmt, v.canonical ? 1 : 0, &report.p));
    check(bt_campaign_summary(camp.get(), &summary.p));
    if (file.is_open()) {
        file << report.str();
        file.close();
        if (!file) {
            std::cerr << "error: failed writing " << v.out << '\n';
            return kIo;
        }
        std::cout << summary.str() << '\n';
    } else {
        std::cout << report.str();
        std::cerr << summary.str() << '\n';
    }
    return bt_campaign_passed(camp.get()) == bt_campaign_size(camp.get()) ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of Burge-transform q-series identities"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(bt_version()));

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "Evaluate one object and print sorted exponent:coefficient pairs");
    eval->add_option("object", ev.object, "qbin, B, G, D, F, f, H, I, Ftilde or series")->required();
    eval->add_option("params", ev.params, "Positional parameters of the object");
    eval->add_option("--L", ev.L, "Bound L")->check(CLI::NonNegativeNumber);
    eval->add_option("--M", ev.M, "Bound M")->check(CLI::NonNegativeNumber);
    eval->add_option("--order", ev.order, "Series truncation order")->check(CLI::NonNegativeNumber);
    eval->add_option("--side", ev.side, "lattice, bosonic or tree (families with both bounds)")
        ->check(CLI::IsMember({"lattice", "bosonic", "tree"}));

    VerifyArgs va;
    auto* verify = app.add_subcommand("verify", "Run identity campaigns");
    verify->add_option("--config", va.config, "TOML or INI file with the same keys as the long flags; flags win");
    auto* suite_opt = verify->add_option("--suite", va.suites, "Suite to run (repeatable, or 'all')");
    verify->add_option("--case", va.cases, "Restrict to these case ids (repeatable)");
    verify->add_option("--a-max", va.a_max, "Largest a of a coprime pair")->check(CLI::NonNegativeNumber);
    verify->add_option("--lm-max", va.lm_max, "Largest L and M")->check(CLI::NonNegativeNumber);
    verify->add_option("--n-max", va.n_max, "Largest single bound")->check(CLI::NonNegativeNumber);
    verify->add_option("--order", va.order, "Series truncation order")->check(CLI::NonNegativeNumber);
    verify->add_option("--jobs", va.jobs, "Worker threads (0: all cores)");
    verify->add_option("--format", va.format, "Report format")->check(CLI::IsMember({"json", "csv", "plain"}));
    verify->add_option("--out", va.out, "Report path (default stdout)");
    verify->add_flag("--canonical", va.canonical, "Omit timing for byte-stable reports");

    std::vector<std::string> known;
    {
        CString names;
        if (bt_suite_names(&names.p) == BT_OK) {
            std::istringstream is(names.str());
            for (std::string line; std::getline(is, line);) known.push_back(line);
        }
    }
    std::vector<std::string> known_or_all = known;
    known_or_all.push_back("all");
    suite_opt->check(CLI::IsMember(known_or_all));

    std::string list_suite;
    std::string list_format = "plain";
    auto* list = app.add_subcommand("list-identities", "List registered identity cases");
    list->add_option("--suite", list_suite, "Only this suite")->check(CLI::IsMember(known));
    list->add_option("--format", list_format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kPass : kUsage;
    }

    try {
        if (*eval) {
            std::cout << run_eval(ev) << '\n';
            return kPass;
        }
        if (*verify) {
            if (!va.config.empty()) apply_config(*verify, va.config);
            return run_verify(va);
        }
        if (*list) {
            CString text;
            check(bt_list_identities(list_suite.empty() ? nullptr : list_suite.c_str(),
                                     list_format == "json" ? BT_FORMAT_JSON : BT_FORMAT_PLAIN, &text.p));
            std::cout << text.str();
            return kPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    }
    return kUsage;
}
