// sidonlab: construct, verify, search and analyze finite Sidon sets.

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sidonlab/constructions.hpp"
#include "sidonlab/gf.hpp"
#include "sidonlab/io.hpp"
#include "sidonlab/primes.hpp"
#include "sidonlab/search.hpp"
#include "sidonlab/sidon.hpp"
#include "sidonlab/suite.hpp"

namespace {

using nlohmann::json;
using namespace sidonlab;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

void emit(const std::string& out, const std::string& content) {
    if (out.empty() || out == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
    } else {
        write_text_atomic(out, content);
    }
}

json wrap_report(json config, json body) {
    json j;
    j["schema_version"] = 1;
    j["config"] = std::move(config);
    j["report"] = std::move(body);
    return j;
}

std::string csv_discrepancy(const SweepSummary& s) {
    std::ostringstream os;
    os << "n,u,len,c,count,E_I,bound,ratio\n";
    for (const auto& r : s.reports)
        os << r.n << ',' << r.u << ',' << r.len << ',' << r.c << ',' << r.count << ','
           << r.E_I << ',' << r.bound << ',' << r.ratio << '\n';
    return os.str();
}

std::string csv_element_errors(const ElementErrorSummary& s) {
    std::ostringstream os;
    os << "m,a_m,main_term,abs_error,normalizer,normalized\n";
    for (const auto& r : s.records)
        os << r.m << ',' << r.a_m << ',' << r.main_term << ',' << r.abs_error << ','
           << r.normalizer << ',' << r.normalized << '\n';
    return os.str();
}

std::string csv_power_sum(const PowerSumRecord& r) {
    std::ostringstream os;
    os << "ell,exact_sum,main_term,abs_error,normalizer,normalized\n";
    os << r.ell << ',' << r.exact_sum.str() << ',' << r.main_term << ',' << r.abs_error
       << ',' << r.normalizer << ',' << r.normalized << '\n';
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sidonlab: finite Sidon set construction, search and measurement"};
    app.require_subcommand(1);

    // construct
    auto* c_construct = app.add_subcommand("construct", "build a classic Sidon set");
    std::string family, out = "-";
    int64_t param = 0;
    c_construct->add_option("--family", family, "bose|singer|erdos-turan|mian-chowla")
        ->required();
    c_construct->add_option("--param", param, "prime parameter or target length")
        ->required();
    c_construct->add_option("--out", out, "output file, '-' for stdout");

    // verify
    auto* c_verify = app.add_subcommand("verify", "check the Sidon property of a set file");
    std::string in_file;
    c_verify->add_option("--in", in_file, "set file")->required();

    // search
    auto* c_search = app.add_subcommand("search", "exact maximum Sidon subset of [n]");
    int64_t search_n = 0;
    std::string range;
    bool exact = false, bracket = false, lex = false;
    c_search->add_option("--n", search_n, "ambient bound");
    c_search->add_option("--range", range, "table mode, e.g. 1..56");
    c_search->add_flag("--exact", exact, "force exact mode (default)");
    c_search->add_flag("--bracket", bracket, "bracket mode: [bose bound, eq1 bound]");
    c_search->add_flag("--lex-witness", lex, "lexicographically smallest witness");
    c_search->add_option("--out", out, "output file (json), '-' for stdout");

    // analyze
    auto* c_analyze = app.add_subcommand("analyze", "measurements on a set file");
    std::string report_kind, format = "json";
    int64_t ell = 1, u = 0, len = 0;
    double fraction = 0.01;
    bool sweep = false;
    c_analyze->add_option("--in", in_file, "set file")->required();
    c_analyze
        ->add_option("--report", report_kind,
                     "element-errors|power-sum|discrepancy|ding")
        ->required();
    c_analyze->add_option("--ell", ell, "power-sum exponent (1..8)");
    c_analyze->add_option("--u", u, "interval offset");
    c_analyze->add_option("--len", len, "interval length");
    c_analyze->add_flag("--sweep", sweep, "dyadic discrepancy sweep");
    c_analyze->add_option("--fraction", fraction, "ding condition fraction in (0,1)");
    c_analyze->add_option("--format", format, "json|csv");
    c_analyze->add_option("--out", out, "output file, '-' for stdout");

    // exceptions
    auto* c_exc = app.add_subcommand("exceptions", "exceptional-interval count up to N");
    int64_t big_n = 0;
    c_exc->add_option("--N", big_n, "range limit")->required();
    c_exc->add_option("--out", out, "output file (json), '-' for stdout");

    // primes
    auto* c_primes = app.add_subcommand("primes", "sieve primes up to a limit");
    int64_t limit = 0;
    c_primes->add_option("--limit", limit, "sieve limit")->required();
    c_primes->add_option("--out", out, "output file, '-' for stdout");

    // gaps
    auto* c_gaps = app.add_subcommand("gaps", "prime gap statistics up to x");
    int64_t gaps_x = 0;
    c_gaps->add_option("--x", gaps_x, "upper limit")->required();
    c_gaps->add_option("--out", out, "output file (json), '-' for stdout");

    // suite
    auto* c_suite = app.add_subcommand("suite", "composite measurement report");
    bool quick = false, json_only = false;
    c_suite->add_flag("--quick", quick, "restricted grid (p <= 101, N <= 1e4)");
    c_suite->add_flag("--json-only", json_only, "suppress CSV emission");
    std::string csv_out;
    c_suite->add_option("--out", out, "output file (json), '-' for stdout");
    c_suite->add_option("--csv-out", csv_out, "per-set CSV table (default: report.csv next to --out)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsageError;
    }

    try {
        if (*c_construct) {
            const Family f = parse_family(family);
            const SidonSet s = construct(f, param);
            std::ostringstream ss;
            write_set_file(ss, s, family_name(f));
            emit(out, ss.str());
            return kExitOk;
        }
        if (*c_verify) {
            SetFile f;
            std::vector<int64_t> elems;
            {
                // read leniently so that a violation is reported, not thrown
                std::ifstream in(in_file);
                if (!in) throw std::invalid_argument("cannot open " + in_file);
                std::string line;
                while (std::getline(in, line)) {
                    const auto first = line.find_first_not_of(" \t\r");
                    if (first == std::string::npos || line[first] == '#') continue;
                    elems.push_back(std::stoll(line.substr(first)));
                }
            }
            const VerifyResult r = verify_sidon(elems);
            if (r.ok) {
                std::cout << "ok: " << elems.size() << " elements\n";
                return kExitOk;
            }
            const Violation& w = *r.witness;
            std::cout << "violation: " << w.a << "+" << w.b << " = " << w.c << "+" << w.d
                      << "\n";
            return kExitDomainError;
        }
        if (*c_search) {
            SearchOptions opts;
            opts.lex_witness = lex;
            json body;
            json config = {{"lex_witness", lex}, {"bracket", bracket}};
            if (!range.empty()) {
                const auto dots = range.find("..");
                if (dots == std::string::npos)
                    throw std::invalid_argument("range must look like A..B");
                const int64_t a = std::stoll(range.substr(0, dots));
                const int64_t b = std::stoll(range.substr(dots + 2));
                if (a < 1 || b < a) throw std::invalid_argument("empty range");
                std::vector<int64_t> ns;
                for (int64_t n = a; n <= b; ++n) ns.push_back(n);
                config["range"] = range;
                body = json::array();
                for (const auto& r : defect_table(ns, bracket, opts))
                    body.push_back(to_json(r));
            } else {
                if (search_n <= 0) throw std::invalid_argument("--n or --range required");
                config["n"] = search_n;
                if (bracket) {
                    body = to_json(defect_table({search_n}, true, opts).front());
                } else {
                    body = to_json(max_sidon(search_n, opts));
                }
            }
            emit(out, wrap_report(config, body).dump(2));
            return kExitOk;
        }
        if (*c_analyze) {
            const SetFile f = read_set_file(std::filesystem::path(in_file));
            const SidonSet& a = f.set;
            json config = {{"in", in_file}, {"report", report_kind}, {"format", format}};
            std::string content;
            if (report_kind == "element-errors") {
                const ElementErrorSummary s = element_errors(a);
                content = format == "csv" ? csv_element_errors(s)
                                          : wrap_report(config, to_json(s)).dump(2);
            } else if (report_kind == "power-sum") {
                config["ell"] = ell;
                const PowerSumRecord r = power_sum(a, ell);
                content = format == "csv" ? csv_power_sum(r)
                                          : wrap_report(config, to_json(r)).dump(2);
            } else if (report_kind == "discrepancy") {
                SweepSummary s;
                if (sweep || len == 0) {
                    s = discrepancy_sweep(a);
                } else {
                    config["u"] = u;
                    config["len"] = len;
                    s.reports.push_back(interval_discrepancy(a, u, len, defect_value(a)));
                    s.max_ratio = s.reports.front().ratio;
                    s.argmax_u = u;
                    s.argmax_len = len;
                }
                content = format == "csv" ? csv_discrepancy(s)
                                          : wrap_report(config, to_json(s)).dump(2);
            } else if (report_kind == "ding") {
                config["fraction"] = fraction;
                content = wrap_report(config, to_json(ding_condition(a, fraction))).dump(2);
            } else {
                throw std::invalid_argument("unknown report kind: " + report_kind);
            }
            emit(out, content);
            return kExitOk;
        }
        if (*c_exc) {
            const double root = std::sqrt(static_cast<double>(big_n) + 1.0);
            const PrimeTable table = sieve(std::max<int64_t>(100, 4 * static_cast<int64_t>(root)));
            const ExceptionReport r = exceptional_set(big_n, table);
            emit(out, wrap_report({{"N", big_n}}, to_json(r)).dump(2));
            return kExitOk;
        }
        if (*c_primes) {
            const PrimeTable t = sieve(limit);
            std::ostringstream ss;
            ss << "# limit=" << t.limit << "\n";
            for (int64_t p : t.primes) ss << p << "\n";
            emit(out, ss.str());
            return kExitOk;
        }
        if (*c_gaps) {
            const PrimeTable t = sieve(std::max<int64_t>(gaps_x + 1000, 2000));
            json body = {{"gap_exponents", to_json(gap_exponent_report(t))},
                         {"heath_brown", to_json(heath_brown_sum(t, gaps_x))}};
            emit(out, wrap_report({{"x", gaps_x}}, body).dump(2));
            return kExitOk;
        }
        if (*c_suite) {
            SuiteOptions opts;
            opts.quick = quick;
            opts.json_only = json_only;
            const json report = run_paper_suite(opts);
            emit(out, report.dump(2));
            if (!json_only) {
                std::ostringstream os;
                os << "family,param,n,size,sweep_max_ratio,element_error_max,"
                      "power_sum_normalized_l1,power_sum_normalized_l2,"
                      "power_sum_normalized_l3\n";
                for (const auto& e : report.at("construction_grid"))
                    os << e.at("family").get<std::string>() << ','
                       << e.at("param").get<int64_t>() << ',' << e.at("n").get<int64_t>()
                       << ',' << e.at("size").get<int64_t>() << ','
                       << e.at("sweep_max_ratio").get<double>() << ','
                       << e.at("element_error_max").get<double>() << ','
                       << e.at("power_sum_normalized_l1").get<double>() << ','
                       << e.at("power_sum_normalized_l2").get<double>() << ','
                       << e.at("power_sum_normalized_l3").get<double>() << '\n';
                if (csv_out.empty())
                    csv_out = (out.empty() || out == "-") ? "suite.csv" : out + ".csv";
                write_text_atomic(csv_out, os.str());
            }
            return report.at("all_passed").get<bool>() ? kExitOk : kExitDomainError;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomainError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitDomainError;
    }
    return kExitUsageError;
}
