#include "sidonlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace sidonlab {

using nlohmann::json;

SetFile read_set_file(std::istream& in) {
    SetFile f;
    std::vector<int64_t> elems;
    int64_t n = 0;
    bool have_n = false;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') {
            std::string body = line.substr(first + 1);
            std::istringstream ss(body);
            std::string tok;
            while (ss >> tok) {
                if (tok.rfind("n=", 0) == 0) {
                    n = std::stoll(tok.substr(2));
                    have_n = true;
                } else if (tok.rfind("family=", 0) == 0) {
                    f.family = tok.substr(7);
                }
            }
            continue;
        }
        try {
            size_t pos = 0;
            const int64_t v = std::stoll(line.substr(first), &pos);
            elems.push_back(v);
        } catch (const std::exception&) {
            throw std::invalid_argument("set file line " + std::to_string(lineno) +
                                        ": not an integer: " + line);
        }
    }
    if (!have_n) n = elems.empty() ? 0 : elems.back();
    f.set = make_verified(std::move(elems), n);
    return f;
}

SetFile read_set_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path.string());
    return read_set_file(in);
}

void write_set_file(std::ostream& out, const SidonSet& set, const std::string& family) {
    out << "# n=" << set.n << "\n";
    if (!family.empty()) out << "# family=" << family << "\n";
    for (int64_t e : set.elements) out << e << "\n";
}

void write_set_file(const std::filesystem::path& path, const SidonSet& set,
                    const std::string& family) {
    std::ostringstream ss;
    write_set_file(ss, set, family);
    write_text_atomic(path, ss.str());
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        if (!out.flush()) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

json to_json(const DefectValue& v) {
    return {{"n", v.n}, {"size", v.size}, {"L_prime", v.L_prime}, {"L", v.L}};
}

json to_json(const DiscrepancyReport& r) {
    return {{"n", r.n},     {"u", r.u},     {"len", r.len},     {"c", r.c},
            {"count", r.count}, {"E_I", r.E_I}, {"bound", r.bound}, {"ratio", r.ratio}};
}

json to_json(const SweepSummary& s) {
    json reports = json::array();
    for (const auto& r : s.reports) reports.push_back(to_json(r));
    return {{"reports", std::move(reports)},
            {"max_ratio", s.max_ratio},
            {"argmax_u", s.argmax_u},
            {"argmax_len", s.argmax_len}};
}

json to_json(const ElementErrorRecord& r) {
    return {{"m", r.m},
            {"a_m", r.a_m},
            {"main_term", r.main_term},
            {"abs_error", r.abs_error},
            {"normalizer", r.normalizer},
            {"normalized", r.normalized}};
}

json to_json(const ElementErrorSummary& s) {
    json records = json::array();
    for (const auto& r : s.records) records.push_back(to_json(r));
    return {{"records", std::move(records)},
            {"max_normalized", s.max_normalized},
            {"argmax_m", s.argmax_m},
            {"max_normalized_upper", s.max_normalized_upper},
            {"argmax_m_upper", s.argmax_m_upper}};
}

json to_json(const PowerSumRecord& r) {
    return {{"ell", r.ell},
            {"exact_sum", r.exact_sum.str()},
            {"main_term", r.main_term},
            {"abs_error", r.abs_error},
            {"normalizer", r.normalizer},
            {"normalized", r.normalized}};
}

json to_json(const DingReport& r) {
    json j{{"holds", r.holds}};
    if (r.first_failing_t)
        j["first_failing_t"] = *r.first_failing_t;
    else
        j["first_failing_t"] = nullptr;
    return j;
}

json to_json(const SearchResult& r) {
    return {{"n", r.n},
            {"s_n", r.s_n},
            {"witness", r.witness.elements},
            {"nodes_expanded", r.nodes_expanded},
            {"elapsed", r.elapsed}};
}

json to_json(const DefectRecord& r) {
    json j{{"n", r.n},
           {"bose_bracket", r.bose_bracket},
           {"eq1_bound", r.eq1_bound},
           {"L_prime", r.L_prime}};
    if (r.s_n) {
        j["s_n"] = *r.s_n;
    } else {
        j["s_n"] = nullptr;
        j["s_lo"] = r.bose_bracket;
        j["s_hi"] = r.s_hi;
    }
    return j;
}

json to_json(const ExceptionReport& r) {
    json intervals = json::array();
    for (const auto& iv : r.intervals)
        intervals.push_back(
            {{"p_lo", iv.p_lo}, {"p_hi", iv.p_hi}, {"lo", iv.lo}, {"hi", iv.hi}});
    return {{"N", r.N},
            {"intervals", std::move(intervals)},
            {"exception_count", r.exception_count},
            {"ratio_to_N45", r.ratio_to_N45}};
}

json to_json(const GapExponentReport& r) {
    return {{"limit", r.limit},
            {"min_prime", r.min_prime},
            {"max_exponent", r.max_exponent},
            {"argmax_p", r.argmax_p},
            {"count_exceeding", r.count_exceeding},
            {"note", "trend metric only: the 0.525 exponent hides an implicit constant, "
                     "no asymptotic claim is verified here"}};
}

json to_json(const HeathBrownSum& r) {
    json decades = json::array();
    for (const auto& [x, expo] : r.decade_exponents)
        decades.push_back({{"x", x}, {"exponent", expo}});
    return {{"x", r.x},
            {"sum", r.sum},
            {"decade_exponents", std::move(decades)},
            {"sublinear_tail", r.sublinear_tail},
            {"note", "trend metric only: the 3/5+eps bound carries unknown constants, "
                     "only sublinearity at the tail is asserted"}};
}

DiscrepancyReport discrepancy_from_json(const json& j) {
    DiscrepancyReport r;
    r.n = j.at("n");
    r.u = j.at("u");
    r.len = j.at("len");
    r.c = j.at("c");
    r.count = j.at("count");
    r.E_I = j.at("E_I");
    r.bound = j.at("bound");
    r.ratio = j.at("ratio");
    return r;
}

ElementErrorRecord element_error_from_json(const json& j) {
    ElementErrorRecord r;
    r.m = j.at("m");
    r.a_m = j.at("a_m");
    r.main_term = j.at("main_term");
    r.abs_error = j.at("abs_error");
    r.normalizer = j.at("normalizer");
    r.normalized = j.at("normalized");
    return r;
}

PowerSumRecord power_sum_from_json(const json& j) {
    PowerSumRecord r;
    r.ell = j.at("ell");
    r.exact_sum = BigInt(j.at("exact_sum").get<std::string>());
    r.main_term = j.at("main_term");
    r.abs_error = j.at("abs_error");
    r.normalizer = j.at("normalizer");
    r.normalized = j.at("normalized");
    return r;
}

}  // namespace sidonlab
