#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "macqt/cli.hpp"
#include "macqt/io.hpp"
#include "macqt/qalgebra.hpp"

using namespace macqt;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

} // namespace

TEST_CASE("hmu command") {
    CliRun r = run({"hmu", "2", "--basis", "m"});
    CHECK(r.code == 0);
    CHECK(r.out == "m[2] + (1 + q)*m[1,1]\n");
    CHECK(run({"hmu", "1"}).out == "m[1]\n");

    CliRun js = run({"hmu", "2,1", "--basis", "s", "--format", "json"});
    CHECK(js.code == 0);
    const Json j = Json::parse(js.out);
    const SymFun f = symfun_from_json(j);
    CHECK(f.basis() == Basis::s);
    CHECK(f.terms().size() == 3);
    CHECK(convert(f, Basis::m) == hmu_monomial(P({2, 1})));

    CHECK(run({"hmu", "2,x"}).code == 2);
    CHECK(run({"hmu", "1,2"}).code == 2); // not weakly decreasing
}

TEST_CASE("pieri command") {
    CliRun r = run({"pieri", "1", "--op", "e1"});
    CHECK(r.code == 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const Json j = Json::parse(line);
        CHECK(j["kind"] == "d1");
        CHECK(partition_from_json(j["nu"]) == P({1}));
        const Partition mu = partition_from_json(j["mu"]);
        CHECK(qtscalar_from_json(j["value"]) == d1(mu, P({1})));
        ++count;
    }
    CHECK(count == 2);

    CliRun hk = run({"pieri", "2,2", "--op", "hk", "--k", "2"});
    CHECK(hk.code == 0);
    CHECK(run({"pieri", "2", "--op", "nope"}).code == 2);
}

TEST_CASE("qop and expand commands") {
    CliRun r = run({"qop", "3", "2", "--const"});
    CHECK(r.code == 0);
    CHECK(hexp_from_json(Json::parse(r.out)) == q_const(3, 2));

    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "macqt_cli_test").string();
    fs::create_directories(dir);
    // e_2[X/M] as input for expand
    const SymFun e2xm = plethysm_plain(
        convert(SymFun::single(Basis::e, P({2})), Basis::p),
        Alphabet::scaled(QtScalar::M().inv()));
    const std::string path = dir + "/e2xm.json";
    {
        std::ofstream f(path);
        f << to_json(convert(e2xm, Basis::m)).dump();
    }
    CliRun ex = run({"expand", "--input", path});
    CHECK(ex.code == 0);
    const HExp h = hexp_from_json(Json::parse(ex.out));
    CHECK(h.coeff(P({2})) == stats(P({2})).w.inv());
    CHECK(h.coeff(P({1, 1})) == stats(P({1, 1})).w.inv());

    // apply an operator to a file input
    {
        std::ofstream f(dir + "/h1.json");
        f << to_json(HExp::unit(P({1}))).dump();
    }
    CliRun ap = run({"qop", "0", "-1", "--input", dir + "/h1.json"});
    CHECK(ap.code == 0);
    CHECK(hexp_from_json(Json::parse(ap.out)) == q_m_neg1(HExp::unit(P({1})), 0));

    CHECK(run({"qop", "1", "1"}).code == 2);             // neither --const nor --input
    CHECK(run({"expand", "--input", "/nonexistent"}).code == 2);
    fs::remove_all(dir);
}

TEST_CASE("verify command") {
    CliRun r = run({"verify", "--suite", "sums", "--max-n", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  sums/sum-rules") != std::string::npos);
    CHECK(run({"verify", "--suite", "bogus"}).code == 2);
}

TEST_CASE("bench command emits csv") {
    CliRun r = run({"bench", "--max-n", "2", "--algo", "oracle"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,algo,millis,table_entries\n", 0) == 0);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    int rows = 0;
    while (std::getline(lines, line)) {
        CHECK(line.find("oracle") != std::string::npos);
        ++rows;
    }
    CHECK(rows == 2);
}

TEST_CASE("cache-dir flag persists tables without changing output") {
    namespace fs = std::filesystem;
    const std::string dir = (fs::temp_directory_path() / "macqt_cli_cache").string();
    fs::remove_all(dir);
    const std::vector<std::string> cmd = {"--cache-dir", dir, "hmu", "3", "--basis", "m"};
    CliRun first = run(cmd);
    CHECK(first.code == 0);
    CHECK(fs::exists(dir + "/mtable_3.json"));
    clear_hspace_caches();
    CliRun second = run(cmd); // served from the persisted table
    CHECK(second.out == first.out);
    fs::remove_all(dir);
    set_cache_dir(std::nullopt);
    clear_hspace_caches();
}

TEST_CASE("output determinism") {
    const std::vector<std::string> cmd = {"hmu", "3,1", "--basis", "s", "--format", "json"};
    CHECK(run(cmd).out == run(cmd).out);
    const std::vector<std::string> cmd2 = {"qop", "5", "3", "--const"};
    CHECK(run(cmd2).out == run(cmd2).out);
}

TEST_CASE("json round trips") {
    const QtScalar s = (QtScalar(1) - QtScalar::q() * QtScalar::t()).inv() * QtScalar(-7);
    CHECK(qtscalar_from_json(to_json(s)) == s);
    SymFun f(Basis::h);
    f.add_term(P({2, 1}), s);
    f.add_term(P({1}), QtScalar(3));
    CHECK(symfun_from_json(to_json(f)) == f);
    HExp h = HExp::unit(P({2}), s) + HExp::unit(P({1, 1}));
    CHECK(hexp_from_json(to_json(h)) == h);
    CHECK(partition_from_string("3,2,1") == P({3, 2, 1}));
    CHECK(partition_from_string("0") == Partition());
    CHECK(partition_from_string("[]") == Partition());
    CHECK_THROWS_AS(partition_from_string("1,2"), ParseError);
}
