#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qcert/cli.hpp"

#include <json.hpp>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = qcert::cli::run(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeff") {
    CHECK(run_cli({"coeff", "--series", "S", "--n", "1"}).out == "0\n");
    CHECK(run_cli({"coeff", "--series", "omega", "--n", "3"}).out == "4\n");
    CHECK(run_cli({"coeff", "--series", "C", "--n", "0"}).out == "0\n");
    CHECK(run_cli({"coeff", "--series", "C", "--n", "12"}).out == "284\n");
    CHECK(run_cli({"coeff", "--series", "C_k", "--k", "1", "--n", "3"}).out == "6\n");
    CHECK(run_cli({"coeff", "--series", "theta", "--n", "4"}).out == "2\n");

    auto r = run_cli({"coeff", "--series", "nope", "--n", "1"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());

    // explicit prec below the index is a usage error
    CHECK(run_cli({"coeff", "--series", "S", "--n", "9", "--prec", "5"}).code == 2);
    // C_k without --k
    CHECK(run_cli({"coeff", "--series", "C_k", "--n", "3"}).code == 2);
}

TEST_CASE("verify single check, text and exit codes") {
    auto r = run_cli({"verify", "--check", "theorem-S", "--prec", "120"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass  theorem-S") != std::string::npos);
    CHECK(r.out.find("1/1 checks passed") != std::string::npos);

    auto bad = run_cli({"verify", "--check", "nope"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("unknown check") != std::string::npos);

    auto badflag = run_cli({"verify", "--bogus"});
    CHECK(badflag.code == 2);
}

TEST_CASE("verify json schema") {
    auto r = run_cli({"verify", "--check", "psi-sum-vs-product", "--prec", "80", "--format",
                      "json"});
    CHECK(r.code == 0);
    json arr = json::parse(r.out);
    REQUIRE(arr.is_array());
    REQUIRE(arr.size() == 1);
    const json& j = arr[0];
    CHECK(j.at("check") == "psi-sum-vs-product");
    CHECK(j.at("prec") == 80);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("first_failure").is_null());
    CHECK(j.at("elapsed_ms").is_number());
}

TEST_CASE("verify csv schema") {
    auto r = run_cli({"verify", "--check", "theta-sum-vs-product", "--prec", "60", "--format",
                      "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("check,prec,status,first_failure_exponent,elapsed_ms\n", 0) == 0);
    CHECK(r.out.find("theta-sum-vs-product,60,pass,,") != std::string::npos);
}

TEST_CASE("verify --list prints the registry") {
    auto r = run_cli({"verify", "--list"});
    CHECK(r.code == 0);
    CHECK(r.out.find("theorem-S") != std::string::npos);
    CHECK(r.out.find("c-8n4-mod4") != std::string::npos);
}

TEST_CASE("dissect") {
    auto r = run_cli({"dissect", "--series", "B", "--mod", "4", "--prec", "64"});
    CHECK(r.code == 0);
    CHECK(r.out.find("component 0 (prec 16): 1") != std::string::npos);

    auto th = run_cli({"dissect", "--series", "theta", "--mod", "4", "--prec", "64",
                       "--format", "json"});
    CHECK(th.code == 0);
    json j = json::parse(th.out);
    CHECK(j.at("components").size() == 4);
    for (const auto& lead : j.at("components")[2].at("leading"))
        CHECK(lead.get<std::string>() == "0");
    for (const auto& lead : j.at("components")[3].at("leading"))
        CHECK(lead.get<std::string>() == "0");
}

TEST_CASE("scan openq and family") {
    auto r = run_cli({"scan", "--target", "openq", "--prec", "400"});
    CHECK(r.code == 0);
    CHECK(r.out.find("c-32n23-mod8") != std::string::npos);

    auto fam = run_cli({"scan", "--target", "family", "--kmax", "2", "--prec", "100",
                        "--format", "csv"});
    CHECK(fam.code == 0);
    // 9 instances + header
    std::size_t lines = 0;
    for (char ch : fam.out)
        if (ch == '\n') ++lines;
    CHECK(lines == 10);

    CHECK(run_cli({"scan", "--target", "bogus"}).code == 2);
}

TEST_CASE("scan discover") {
    auto r = run_cli({"scan", "--target", "discover", "--series", "S", "--mmax", "8",
                      "--prec", "300"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S[4n+1] == 0 exactly") != std::string::npos);

    CHECK(run_cli({"scan", "--target", "discover", "--mmax", "8"}).code == 2);
    CHECK(run_cli({"scan", "--target", "discover", "--series", "S", "--moduli", "xyz"}).code ==
          2);
}

TEST_CASE("QCERT_PREC env default") {
    setenv("QCERT_PREC", "40", 1);
    auto r = run_cli({"verify", "--check", "psi-sum-vs-product", "--format", "json"});
    unsetenv("QCERT_PREC");
    CHECK(r.code == 0);
    json arr = json::parse(r.out);
    CHECK(arr[0].at("prec") == 40);

    setenv("QCERT_PREC", "banana", 1);
    auto bad = run_cli({"coeff", "--series", "S", "--n", "1"});
    unsetenv("QCERT_PREC");
    CHECK(bad.code == 2);
}

TEST_CASE("help") {
    auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("verify") != std::string::npos);
    auto none = run_cli({});
    CHECK(none.code == 2);
}
