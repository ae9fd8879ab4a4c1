#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <sstream>

#include "rectwalg/cli.hpp"
#include "rectwalg/report.hpp"

using namespace rectwalg;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& content) {
        char tmpl[] = "/tmp/rectwalg_test_XXXXXX";
        int fd = mkstemp(tmpl);
        REQUIRE(fd >= 0);
        close(fd);
        path = tmpl;
        std::ofstream f(path);
        f << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

const char* example_2x4 = R"({
  "n": 2, "l": 4,
  "rows": {"-1": ["-3", "1", "2", "4"]}
})";

} // namespace

TEST_CASE("verify runs green on a small case") {
    auto res = run({"verify", "--n", "2", "--l", "2", "--eps", "-"});
    CHECK(res.code == 0);
    CHECK(res.out.find("FAIL") == std::string::npos);
    CHECK(res.out.find("membership") != std::string::npos);
    CHECK(res.out.find("gens_identity") != std::string::npos);
    CHECK(res.out.find("kernel") != std::string::npos);
    CHECK(res.out.find("symmetry") != std::string::npos);
}

TEST_CASE("invalid parameters exit 2 naming the constraint") {
    auto res = run({"verify", "--n", "3", "--l", "2", "--eps", "+"});
    CHECK(res.code == 2);
    CHECK(res.err.find("n even") != std::string::npos);
    auto res2 = run({"classify", "--n", "2", "--l", "2", "--eps", "?", "--tableau", "x.json"});
    CHECK(res2.code == 2);
    auto res3 = run({"verify", "--n", "2", "--eps", "-"});
    CHECK(res3.code == 2); // missing --l
}

TEST_CASE("classify the reference 2x4 example") {
    TempFile f(example_2x4);
    auto res = run({"classify", "--n", "2", "--l", "4", "--eps", "-", "--tableau", f.path,
                    "--format", "json"});
    CHECK(res.code == 0);
    CHECK(res.out.find("\"agree\": true") != std::string::npos);
    CHECK(res.out.find("\"findim_tableaux\": true") != std::string::npos);
    // shape mismatch is an input error
    auto bad = run({"classify", "--n", "2", "--l", "2", "--eps", "-", "--tableau", f.path});
    CHECK(bad.code == 2);
}

TEST_CASE("orbit of the reference example has two classes") {
    TempFile f(example_2x4);
    auto res = run({"orbit", "--n", "2", "--l", "4", "--eps", "-", "--tableau", f.path,
                    "--format", "json"});
    CHECK(res.code == 0);
    CHECK(res.out.find("\"size\": 2") != std::string::npos);
    // fixed class
    TempFile g(R"({"n":2,"l":2,"rows":{"-1":["-3","-2"]}})");
    auto res2 = run({"orbit", "--n", "2", "--l", "2", "--eps", "-", "--tableau", g.path});
    CHECK(res2.code == 0);
    CHECK(res2.out.find("orbit size 1") != std::string::npos);
}

TEST_CASE("enumerate agrees everywhere and is deterministic across jobs") {
    std::vector<std::string> base = {"enumerate", "--n", "2", "--l", "2", "--eps", "-",
                                     "--pool", "-1,0,1,1/2", "--format", "json"};
    auto one = run(base);
    CHECK(one.code == 0);
    auto par = base;
    par.push_back("--jobs");
    par.push_back("4");
    auto four = run(par);
    CHECK(four.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("verify output is byte-identical across runs and worker counts") {
    std::vector<std::string> base = {"verify", "--n", "2", "--l", "3", "--eps", "-",
                                     "--format", "json"};
    auto a = run(base);
    auto b = run(base);
    CHECK(a.out == b.out);
    auto par = base;
    par.push_back("--jobs");
    par.push_back("3");
    auto c = run(par);
    CHECK(a.out == c.out);
}

TEST_CASE("row class json round trip") {
    RowClass rc(3, 3, {{-2, {Number::parse("2"), Number::parse("1/2"), Number::parse("-1")}},
                       {0, {Number::parse("1"), Number::parse("0"), Number::parse("-1")}}});
    RowClass back = row_class_from_json(row_class_to_json(rc));
    CHECK(back == rc);
    CHECK_THROWS_AS(row_class_from_json("{\"n\": 2}"), std::invalid_argument);
}

TEST_CASE("pool parsing") {
    auto pool = parse_pool(" -2, 1/2 ,s ");
    REQUIRE(pool.size() == 3);
    CHECK(pool[0] == Number(-2));
    CHECK(pool[2] == Number::symbol("s"));
    CHECK_THROWS_AS(parse_pool(""), std::invalid_argument);
}

TEST_CASE("help exits zero") {
    auto res = run({"--help"});
    CHECK(res.code == 0);
    CHECK(res.out.find("verify") != std::string::npos);
}

TEST_CASE("verify honors --order") {
    auto res = run({"verify", "--n", "2", "--l", "2", "--eps", "-", "--order", "5"});
    CHECK(res.code == 0);
    CHECK(res.out.find("r=5") != std::string::npos);
    auto bad = run({"verify", "--n", "2", "--l", "2", "--eps", "-", "--order", "1"});
    CHECK(bad.code == 2);
}

TEST_CASE("report rendering") {
    CHECK(report_render({}, OutputFormat::json) == "[]\n");
    CheckRecord ok{"membership", 2, 2, '-', 1, -1, 3, true, ""};
    CheckRecord fail{"membership", 2, 2, '-', 1, -1, 2, false, "pr([f[-1,1], .]) = 1*f[1,3]"};
    std::string text = report_render({ok, fail}, OutputFormat::text);
    // deterministic order: r=2 line first, witness included on failures only
    CHECK(text.find("r=2 FAIL") < text.find("r=3 PASS"));
    CHECK(text.find("witness: pr(") != std::string::npos);
    std::string js = report_render({fail}, OutputFormat::json);
    CHECK(js.find("\"status\": \"fail\"") != std::string::npos);
    CHECK(js.find("\"schema\": 1") != std::string::npos);
}
