#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(DUNKLCALC) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int status = pclose(pipe);
    while (!out.empty() && out.back() == '\n') out.pop_back();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string data(const char* name) { return std::string(TEST_DATA_DIR) + "/" + name; }

} // namespace

TEST_CASE("apply") {
    auto r = run("apply --system z2:d=1 --kappa 1/2 --xi 1 --poly x1");
    CHECK(r.code == 0);
    CHECK(r.out == "2");
    auto j = run("apply --system b:d=2 --kappa 1,2 --xi 1,0 --poly \"x1^2\" --json");
    CHECK(j.code == 0);
    CHECK(nlohmann::json::parse(j.out)["result"] == "6*x1");
}

TEST_CASE("pizzetti") {
    auto r = run("pizzetti --system z2:d=2 --kappa 1,0 --poly \"x1^2\"");
    CHECK(r.code == 0);
    CHECK(r.out == "3/4");
    auto j = nlohmann::json::parse(run("pizzetti --system z2:d=2 --kappa 1,0 --poly \"x1^2\" --json").out);
    CHECK(j["oracle_match"] == true);
    CHECK(j["alternating_sign_variant"] == "-3/4");
}

TEST_CASE("laplacian routes") {
    auto sq = run("laplacian --system a:d=3 --kappa 1 --poly \"x1^3*x2 - x3^2\"");
    auto ex = run("laplacian --system a:d=3 --kappa 1 --poly \"x1^3*x2 - x3^2\" --route expr");
    CHECK(sq.code == 0);
    CHECK(sq.out == ex.out);
    CHECK(run("laplacian --system a:d=3 --poly x1 --route bogus").code == 2);
}

TEST_CASE("hobson") {
    auto j = nlohmann::json::parse(
        run("hobson --system z2:d=1 --kappa 3/2 --poly \"x1^2\" --profile \"exp(-1/2*r^2)\" --json").out);
    CHECK(j["residual"] == "0");
    CHECK(run("hobson --system b:d=3 --kappa 1,2 --poly \"x1*x2*x3\" --profile \"r^(7/2)\"").code == 0);
}

TEST_CASE("projection and decomposition") {
    CHECK(run("project --system z2:d=2 --poly \"x1^2\"").out == "1/2*x1^2 - 1/2*x2^2");
    CHECK(run("project --system b:d=2 --kappa 1,2 --poly \"x1^3*x2\" --route check").code == 0);
    auto skipped = nlohmann::json::parse(
        run("project --system z2:d=1 --kappa 1/2 --poly x1 --route maxwell --json").out);
    CHECK(skipped["result"].is_null());
    auto dec = nlohmann::json::parse(run("decompose --system z2:d=2 --poly \"x1^2\" --json").out);
    CHECK(dec["recomposes"] == true);
    CHECK(dec["components"].size() == 2);
}

TEST_CASE("hermite") {
    auto r = run("hermite --system z2:d=1 --kappa 1 --poly \"x1^2\" --json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["result"] == "x1^2 - 3/2");
    CHECK(j["rodrigues_residual"] == "0");
}

TEST_CASE("transform") {
    CHECK(run("transform --system z2:d=2 --kappa 1/2,1 --poly \"x1*x2^2\" --y 0.5,-1.25 --kind sphere").code == 0);
    CHECK(run("transform --system z2:d=1 --kappa 3/2 --poly \"x1^3\" --y 2 --kind gauss").code == 0);
    auto j = nlohmann::json::parse(
        run("transform --system z2:d=1 --kappa 1/2 --poly \"x1^2\" --y 1 --kind hermite --json").out);
    CHECK(j["status"] == "pass");
    CHECK(run("transform --system b:d=2 --poly x1 --y 1,1").code == 2);
    CHECK(run("transform --system z2:d=1 --poly x1 --y abc").code == 2);
}

TEST_CASE("verify") {
    CHECK(run("verify hobson --system b:d=2 --kappa 1,2 --deg 5 --seed 7 --count 10").code == 0);
    auto path = std::filesystem::temp_directory_path() / "dunklcalc_report_test.json";
    CHECK(run("verify com00 --system a:d=3 --kappa 1 --count 4 --report " + path.string()).code == 0);
    std::ifstream in(path);
    auto j = nlohmann::json::parse(in);
    CHECK(j["suite"] == "com00");
    CHECK(j["passed"] == true);
    std::filesystem::remove(path);
    auto a = run("verify pizzetti --system z2:d=2 --kappa 1/2,1 --count 4 --json");
    auto b = run("verify pizzetti --system z2:d=2 --kappa 1/2,1 --count 4 --json");
    CHECK(a.out == b.out);
    CHECK(run("verify transforms --system z2:d=1 --kappa 1 --count 2 --tolerance 1e-300").code == 1);
}

TEST_CASE("custom systems") {
    CHECK(run("apply --system custom:" + data("b2_custom.json") + " --xi 1,0 --poly x1").code == 0);
    CHECK(run("pizzetti --system custom:" + data("b2_custom.json") + " --poly \"x1^2\"").code == 0);
    CHECK(run("apply --system custom:" + data("not_closed.json") + " --xi 1,0 --poly x1").code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run("apply --system z2:d=1 --xi 1 --poly x2").code == 2);
    CHECK(run("apply --system z2:d=1 --xi 1,2 --poly x1").code == 2);
    CHECK(run("apply --poly x1 --xi 1").code == 2);
    CHECK(run("verify nosuch --system z2:d=1").code == 2);
    CHECK(run("frobnicate").code == 2);
    CHECK(run("apply --system z2:d=1 --kappa -1 --xi 1 --poly x1").code == 2);
    CHECK(run("apply --system q:d=2 --xi 1,1 --poly x1").code == 2);
}
