#include "crankmex/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "crankmex/identities.hpp"
#include "crankmex/partition.hpp"

namespace crankmex::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kDefaultMaxN = 40;
constexpr int kDefaultSeriesBound = 60;
constexpr int kDefaultMaxM = 8;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Bounds {
    int max_n = kDefaultMaxN;
    int zmax = kDefaultSeriesBound;
    int qmax = kDefaultSeriesBound;
    int max_m = kDefaultMaxM;
};

struct Check {
    std::string suite;
    std::function<Verdict()> run;
};

int default_qmax()
{
    const char* env = std::getenv("CRANKMEX_DEFAULT_QMAX");
    if (env == nullptr || *env == '\0')
        return kDefaultSeriesBound;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 100000)
        throw UsageError("CRANKMEX_DEFAULT_QMAX must be a positive integer");
    return static_cast<int>(v);
}

std::vector<Check> checks_for(const std::string& suite, const Bounds& b)
{
    std::vector<Check> out;
    auto add = [&](std::function<Verdict()> f) { out.push_back({suite, std::move(f)}); };
    if (suite == "theorem2") {
        add([b] { return verify_theorem2(b.max_n); });
        add([b] { return verify_theorem1(b.max_n); });
    } else if (suite == "series") {
        add([b] { return verify_M_equals_K(b.zmax, b.qmax); });
        add([b] { return verify_series_oracle(b.max_n); });
        add([b] { return verify_cleared_forms(b.zmax, b.qmax); });
    } else if (suite == "lemma") {
        add([b] { return verify_lemma(b.max_n); });
        add([b] { return verify_q_pascal(b.max_n); });
    } else if (suite == "crank-gf") {
        if (b.qmax < 2)
            throw UsageError("crank-gf needs --qmax >= 2");
        add([b] { return verify_crank_gf(b.qmax); });
        add([b] { return verify_crank_anomaly(b.qmax); });
        add([b] { return verify_crank_distribution(2, std::clamp(b.max_n, 2, b.qmax), b.qmax); });
    } else if (suite == "zn") {
        add([b] { return verify_zN(b.max_n, b.qmax); });
    } else if (suite == "qbinom") {
        for (int t : {1, 2, 5})
            add([b, t] { return qbinomial_expansion(t, b.zmax, b.qmax); });
    } else if (suite == "ramanujan") {
        add([b] { return verify_ramanujan(b.max_m); });
        add([b] { return verify_partition_count(b.max_n); });
    }
    return out;
}

json params_json(const ParamList& p)
{
    json o = json::object();
    for (const auto& [k, v] : p)
        o[k] = v;
    return o;
}

json report_json(const std::string& suite, const Verdict& v, const std::string& status,
                 const std::string& error, long long elapsed_ms, bool timings)
{
    json o;
    o["suite"] = suite;
    o["check"] = v.name;
    o["params"] = params_json(v.params);
    o["status"] = status;
    if (v.counterexample) {
        o["counterexample"] = {{"where", params_json(v.counterexample->where)},
                               {"lhs", v.counterexample->lhs},
                               {"rhs", v.counterexample->rhs}};
    } else {
        o["counterexample"] = nullptr;
    }
    if (!error.empty())
        o["error"] = error;
    if (timings)
        o["elapsed_ms"] = elapsed_ms;
    return o;
}

std::string params_tsv(const ParamList& p)
{
    std::string s;
    for (const auto& [k, v] : p) {
        if (!s.empty())
            s += ',';
        s += k + '=' + v;
    }
    return s.empty() ? "-" : s;
}

int cmd_tables(int max_n, const std::string& format, std::ostream& out)
{
    const CountTable mex_t = count_table(max_n, Statistic::odd_mex);
    const CountTable crank_t = count_table(max_n, Statistic::nonneg_crank);
    if (format == "json") {
        json rows = json::array();
        for (int n = 1; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k)
                rows.push_back({{"n", n},
                                {"k", k},
                                {"odd_mex_count", mex_t.at(n, k).get_str()},
                                {"nonneg_crank_count", crank_t.at(n, k).get_str()}});
        out << rows.dump(2) << '\n';
    } else {
        out << "n\tk\todd_mex_count\tnonneg_crank_count\n";
        for (int n = 1; n <= max_n; ++n)
            for (int k = 0; k <= n; ++k)
                out << n << '\t' << k << '\t' << mex_t.at(n, k).get_str() << '\t'
                    << crank_t.at(n, k).get_str() << '\n';
    }
    return 0;
}

int cmd_verify(const std::string& selector, const Bounds& b, const std::string& format, bool timings,
               std::ostream& out, std::ostream& err)
{
    std::vector<Check> checks;
    if (selector == "all") {
        for (const auto& s : suite_names()) {
            auto c = checks_for(s, b);
            checks.insert(checks.end(), c.begin(), c.end());
        }
    } else {
        checks = checks_for(selector, b);
    }

    if (format == "tsv")
        out << "suite\tcheck\tstatus\tparams\tcounterexample\n";
    int exit_code = 0;
    for (const auto& c : checks) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        std::string status, error;
        try {
            v = c.run();
            status = v.pass ? "pass" : "fail";
        } catch (const std::exception& e) {
            v.name = c.suite;
            status = "error";
            error = e.what();
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                .count();
        err << "[crankmex] " << c.suite << '/' << v.name << ' ' << status << " in " << ms << " ms\n";
        if (status != "pass")
            exit_code = 1;

        if (format == "tsv") {
            std::string cx = "-";
            if (v.counterexample)
                cx = params_tsv(v.counterexample->where) + ";lhs=" + v.counterexample->lhs +
                     ";rhs=" + v.counterexample->rhs;
            else if (!error.empty())
                cx = error;
            out << c.suite << '\t' << v.name << '\t' << status << '\t' << params_tsv(v.params) << '\t' << cx
                << '\n';
        } else {
            out << report_json(c.suite, v, status, error, ms, timings).dump() << '\n';
        }
    }
    return exit_code;
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"theorem2", "series", "lemma",    "crank-gf",
                                                "zn",       "qbinom", "ramanujan"};
    return names;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact checks of the odd-mex / nonnegative-crank partition identity", "crankmex"};
    app.require_subcommand(1);

    int tables_max_n = kDefaultMaxN;
    std::string tables_format = "tsv";
    auto* tables = app.add_subcommand("tables", "Odd-mex and nonneg-crank counts by (n, k)");
    tables->add_option("--max-n", tables_max_n, "Largest n")->check(CLI::PositiveNumber);
    tables->add_option("--format", tables_format, "Output format")->check(CLI::IsMember({"tsv", "json"}));

    std::vector<std::string> selectors = suite_names();
    selectors.push_back("all");
    std::string selector;
    Bounds bounds;
    std::string verify_format = "json";
    bool timings = false;
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", selector, "Suite to run")->required()->check(CLI::IsMember(selectors));
    verify->add_option("--max-n", bounds.max_n, "Bound for enumeration, lemma and z^N checks")
        ->check(CLI::PositiveNumber);
    verify->add_option("--zmax", bounds.zmax, "z-degree bound")->check(CLI::PositiveNumber);
    auto* qmax_opt = verify->add_option("--qmax", bounds.qmax, "q-degree bound")->check(CLI::PositiveNumber);
    verify->add_option("--max-m", bounds.max_m, "Largest m for p(11m+6)")->check(CLI::NonNegativeNumber);
    verify->add_option("--format", verify_format, "Report format")->check(CLI::IsMember({"json", "tsv"}));
    verify->add_flag("--timings", timings, "Include elapsed_ms in reports");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "crankmex: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*tables)
            return cmd_tables(tables_max_n, tables_format, out);
        if (qmax_opt->count() == 0)
            bounds.qmax = default_qmax();
        return cmd_verify(selector, bounds, verify_format, timings, out, err);
    } catch (const UsageError& e) {
        err << "crankmex: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace crankmex::cli
