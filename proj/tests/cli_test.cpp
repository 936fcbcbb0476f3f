// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

using Json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::string text;
    if (FILE* f = std::fopen(p.c_str(), "rb")) {
        std::array<char, 4096> buf{};
        std::size_t n = 0;
        while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) text.append(buf.data(), n);
        std::fclose(f);
    }
    return text;
}

std::filesystem::path scratch() {
    const std::filesystem::path dir = std::filesystem::temp_directory_path() / "maglap_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

Run run(const std::string& args, const std::string& env = "") {
    const std::filesystem::path err = scratch() / "stderr.txt";
    const std::string cmd = env + " " + MAGLAP_CLI_PATH + " " + args + " 2>" + err.string();
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.err = slurp(err);
    return r;
}

void check_error(const Run& r, int code, const std::string& kind) {
    CHECK(r.status == code);
    const Json j = Json::parse(r.err);
    CHECK(j.at("error").at("kind") == kind);
    CHECK(j.at("error").at("message").is_string());
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("spectrum of the combinatorial 6-cycle") {
    const Run r = run("spectrum --model cycle --n 6 --weights combinatorial --flux 0");
    REQUIRE(r.status == 0);
    const Json j = Json::parse(r.out);
    const std::array<double, 6> expected = {0, 1, 1, 3, 3, 4};
    REQUIRE(j.at("values").size() == 6);
    for (std::size_t k = 0; k < 6; ++k) CHECK(std::abs(j["values"][k].get<double>() - expected[k]) < 1e-9);
}

TEST_CASE("kappa bracketing of polyacetylene") {
    const Run r = run("bracket --model polyacetylene --weights standard --flux 1.570796 --virtualize-arcs e1 "
                      "--virtualize-vertices v1 --kappa");
    REQUIRE(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("kappa_refined") == true);
    const std::array<double, 8> ends = {0.114212, 0.44555, 0.549103, 0.717765,
                                        2 - 0.717765, 2 - 0.549103, 2 - 0.44555, 2 - 0.114212};
    std::vector<double> got;
    for (const Json& i : j.at("union"))
        if (i[0].get<double>() < i[1].get<double>()) {
            got.push_back(i[0]);
            got.push_back(i[1]);
        }
    REQUIRE(got.size() == ends.size());
    for (std::size_t k = 0; k < ends.size(); ++k) CHECK(std::abs(got[k] - ends[k]) < 1e-3);
}

TEST_CASE("delta certificate for agnr(3)") {
    const Run r = run("delta --model agnr --width 3 --weights combinatorial --vertex v1");
    REQUIRE(r.status == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("delta").get<double>() > 0.0);
    CHECK(j.at("verdict") == "gap certified");
    CHECK(j.at("trace_discrepancy").get<double>() <= 1e-9);
}

TEST_CASE("numeric output is 12-digit decimal") {
    const Run r = run("spectrum --model polyacetylene --flux 0.7 --theta 1.1");
    REQUIRE(r.status == 0);
    for (const Json& v : Json::parse(r.out).at("values")) {
        const double x = v.get<double>();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.12g", x);
        CHECK(std::stod(buf) == x);
    }
}

TEST_CASE("sweep, render and export") {
    const std::filesystem::path dir = scratch();
    const std::string csv = (dir / "d.csv").string();
    const std::string svg = (dir / "d.svg").string();
    REQUIRE(run("sweep --model agnr --width 3 --s-grid 8 --theta-grid 8 --out " + csv + " --svg " + svg).status == 0);
    const Run rendered = run("render --in " + csv);
    REQUIRE(rendered.status == 0);
    CHECK(rendered.out == run("render --in " + csv).out);
    CHECK(rendered.out.find("<svg") != std::string::npos);
    CHECK(slurp(svg).find("<svg") != std::string::npos);

    const Run bands = run("bands --model zgnr --width 2 --grid 16");
    REQUIRE(bands.status == 0);
    CHECK(bands.out.rfind("theta_1,lambda_1", 0) == 0);

    const std::string graph = (dir / "g.json").string();
    const Run exported = run("export --model polyacetylene --flux 0.5");
    REQUIRE(exported.status == 0);
    {
        FILE* f = std::fopen(graph.c_str(), "wb");
        REQUIRE(f != nullptr);
        std::fwrite(exported.out.data(), 1, exported.out.size(), f);
        std::fclose(f);
    }
    const Run again = run("export --graph " + graph);
    REQUIRE(again.status == 0);
    CHECK(Json::parse(again.out) == Json::parse(exported.out));
    const Run sweep_file = run("sweep --graph " + graph + " --s-grid 2 --theta-grid 4");
    CHECK(sweep_file.status == 0);
}

TEST_CASE("error exits") {
    check_error(run("spectrum --model graphene"), 1, "unknown_model");
    check_error(run("spectrum --graph /nonexistent.json"), 1, "io_error");
    check_error(run("spectrum --model cycle --n 6 --bogus"), 1, "usage");
    check_error(run("bands --model cycle --n 5 --grid 8"), 1, "not_periodic");
    check_error(run("bands --model polyacetylene --grid 64", "MAGLAP_COST_CAP=10"), 2, "cost_guard");
    check_error(run("delta --model polyacetylene --weights combinatorial --vertex v1 --variant standard"), 1,
                "weight_mismatch");
}

}  // TEST_SUITE
