#include <doctest.h>

#include <filesystem>
#include <random>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sidonlab/constructions.hpp"
#include "sidonlab/io.hpp"
#include "sidonlab/primes.hpp"
#include "sidonlab/search.hpp"

using namespace sidonlab;
using nlohmann::json;

TEST_CASE("set file round trip") {
    const SidonSet a = bose(13);
    std::stringstream ss;
    write_set_file(ss, a, "bose");
    const SetFile f = read_set_file(ss);
    CHECK(f.set.elements == a.elements);
    CHECK(f.set.n == a.n);
    CHECK(f.set.verified);
    CHECK(f.family == "bose");
}

TEST_CASE("set file without header derives n from the last element") {
    std::stringstream ss("1\n2\n5\n11\n");
    const SetFile f = read_set_file(ss);
    CHECK(f.set.n == 11);
    CHECK(f.family.empty());
}

TEST_CASE("set file rejects bad input") {
    {
        std::stringstream ss("# n=5\n1\n2\n3\n");
        CHECK_THROWS_AS(read_set_file(ss), std::invalid_argument);  // not Sidon
    }
    {
        std::stringstream ss("1\nbanana\n");
        CHECK_THROWS_AS(read_set_file(ss), std::invalid_argument);
    }
    {
        std::stringstream ss("# n=4\n1\n2\n11\n");
        CHECK_THROWS_AS(read_set_file(ss), std::invalid_argument);  // exceeds n
    }
}

TEST_CASE("random set file round trips") {
    std::mt19937 rng(42);
    for (int it = 0; it < 50; ++it) {
        std::vector<int64_t> e;
        int64_t cur = 0;
        std::uniform_int_distribution<int64_t> step(1, 50);
        const int k = static_cast<int>(rng() % 20);
        for (int i = 0; i < k; ++i) e.push_back(cur += step(rng));
        if (!verify_sidon(e).ok) continue;
        const SidonSet a = make_verified(e, cur + 10);
        std::stringstream ss;
        write_set_file(ss, a);
        const SetFile f = read_set_file(ss);
        CHECK(f.set.elements == a.elements);
        CHECK(f.set.n == a.n);
    }
}

TEST_CASE("report json field names and round trips") {
    const SidonSet a = singer(11);
    const auto defect = defect_value(a);

    const auto d = interval_discrepancy(a, 0, a.n / 2, defect);
    const json jd = to_json(d);
    for (const char* key : {"n", "u", "len", "c", "count", "E_I", "bound", "ratio"})
        CHECK(jd.contains(key));
    const auto d2 = discrepancy_from_json(jd);
    CHECK(d2.count == d.count);
    CHECK(d2.E_I == d.E_I);
    CHECK(d2.bound == d.bound);

    const auto ee = element_errors(a);
    const json je = to_json(ee.records[0]);
    for (const char* key :
         {"m", "a_m", "main_term", "abs_error", "normalizer", "normalized"})
        CHECK(je.contains(key));
    const auto e2 = element_error_from_json(je);
    CHECK(e2.a_m == ee.records[0].a_m);
    CHECK(e2.normalized == ee.records[0].normalized);

    const auto ps = power_sum(a, 3);
    const json jp = to_json(ps);
    for (const char* key :
         {"ell", "exact_sum", "main_term", "abs_error", "normalizer", "normalized"})
        CHECK(jp.contains(key));
    const auto p2 = power_sum_from_json(jp);
    CHECK(p2.exact_sum == ps.exact_sum);  // exact through the string encoding
    CHECK(p2.ell == 3);

    const json jv = to_json(defect);
    for (const char* key : {"n", "size", "L_prime", "L"}) CHECK(jv.contains(key));
}

TEST_CASE("search and prime reports serialize") {
    const json js = to_json(max_sidon(12));
    CHECK(js.at("s_n") == 5);
    CHECK(js.at("witness").size() == 5);

    const PrimeTable t = sieve(1000);
    const json jx = to_json(exceptional_set(30, t));
    CHECK(jx.at("exception_count") == 16);
    const json jh = to_json(heath_brown_sum(t, 10));
    CHECK(jh.at("sum") == 6);
}

TEST_CASE("atomic write leaves no temp file") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "sidonlab_io_test.txt";
    write_text_atomic(path, "hello\n");
    CHECK(std::filesystem::exists(path));
    CHECK_FALSE(std::filesystem::exists(path.string() + ".tmp"));
    std::filesystem::remove(path);
}
