#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support/run_cli.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using testsupport::run_cli;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (!line.empty() && line.back() == ',') fields.emplace_back();
        rows.push_back(std::move(fields));
    }
    return rows;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("truncate: reference roots, determinism, exit codes") {
    const auto res = run_cli("truncate --gamma 0 --n 2 --b 1");
    CHECK(res.exit_code == 0);
    const auto rows = parse_csv(res.out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0] == std::vector<std::string>{"n", "i", "root", "w"});
    const double expected[3] = {-1.940551663, 1.190016441, 5.250535221};
    for (int i = 0; i < 3; ++i) {
        CHECK(std::stod(rows[static_cast<std::size_t>(i) + 1][2]) ==
              doctest::Approx(expected[i]).epsilon(1e-9));
        CHECK(std::stod(rows[static_cast<std::size_t>(i) + 1][3]) == 5.75);
    }

    // byte-identical reruns
    const auto res2 = run_cli("truncate --gamma 0 --n 2 --b 1");
    CHECK(res.out == res2.out);

    // n = 1 with b = 1: the closed-form pair
    const auto n1 = run_cli("truncate --gamma 0 --n 1 --b 1");
    const auto n1rows = parse_csv(n1.out);
    REQUIRE(n1rows.size() == 3);
    CHECK(std::stod(n1rows[1][2]) == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(std::stod(n1rows[2][2]) == doctest::Approx(2.5).epsilon(1e-12));
    CHECK(std::stod(n1rows[1][3]) == 3.75);

    // b-roots mode
    const auto br = run_cli("truncate --gamma 0 --n 1 --a 2.5 --mode b-roots");
    CHECK(br.exit_code == 0);
    const auto brows = parse_csv(br.out);
    REQUIRE(brows.size() == 3);
    CHECK(std::stod(brows[1][2]) == doctest::Approx(1.0).epsilon(1e-10));

    // usage errors are exit 1
    CHECK(run_cli("truncate --gamma 0 --n 0 --b 1").exit_code == 1);
    CHECK(run_cli("truncate --gamma 0 --n 2 --b 1 --bogus-flag 3").exit_code == 1);
    CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("spectrum: JSON payload and precision modes") {
    const auto res = run_cli("spectrum --gamma 0 --a 2 --b 1 --count 5 --basis-size 32");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["method"] == "rayleigh-ritz");
    CHECK(j["params"]["a"] == 2.0);
    CHECK(j["converged_digits"].get<double>() >= 10.0);
    const double expected[5] = {-3.230518994, 4.510929109, 9.532275968, 14.19728140,
                                18.70978427};
    REQUIRE(j["eigenvalues"].size() == 5);
    for (int k = 0; k < 5; ++k) {
        // extended mode renders decimal strings
        REQUIRE(j["eigenvalues"][k].is_string());
        CHECK(std::fabs(std::stod(j["eigenvalues"][k].get<std::string>()) - expected[k]) < 1e-6);
    }

    // third value of the high-root configuration is the shared eigenvalue
    const auto hi = run_cli("spectrum --gamma 0 --a 5.250535221 --b 1 --count 4 --basis-size 32");
    const json jh = json::parse(hi.out);
    CHECK(std::fabs(std::stod(jh["eigenvalues"][2].get<std::string>()) - 5.75) < 1e-6);

    // double mode emits plain numbers and works at small sizes
    const auto dbl = run_cli(
        "spectrum --gamma 0 --a 0 --b 0 --count 3 --basis-size 10 --precision-mode double");
    const json jd = json::parse(dbl.out);
    REQUIRE(jd["eigenvalues"][0].is_number());
    CHECK(std::fabs(jd["eigenvalues"][0].get<double>() - 2.0) < 1e-8);
    CHECK(std::fabs(jd["eigenvalues"][1].get<double>() - 6.0) < 1e-8);

    // ill-conditioned double solve is a numerical failure: exit 2
    const auto bad =
        run_cli("spectrum --gamma 0 --a 2 --b 1 --count 4 --basis-size 30 --precision-mode double");
    CHECK(bad.exit_code == 2);
}

TEST_CASE("map: reduction output and singular input") {
    const auto res = run_cli("map --m 1 --omega 1 --kappa 4 --a1 0 --l 1 --s 1");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    CHECK(j["reduced"]["gamma"] == 1.0);
    CHECK(std::fabs(j["reduced"]["a"].get<double>() - 1.261345) < 1e-6);
    CHECK(std::fabs(j["reduced"]["b"].get<double>() - 2.378414) < 1e-6);
    CHECK(j["physical"]["coupling_product"] == 4.0);

    // attractive singularity: numerical failure, exit 2
    CHECK(run_cli("map --m 1 --omega 1 --kappa 1 --a1 -1 --l 0 --s 1").exit_code == 2);
    // kappa conflicts with the individual coupling flags
    CHECK(run_cli("map --m 1 --omega 1 --kappa 4 --g-factor 2 --l 0 --s 1").exit_code == 1);
}

TEST_CASE("allowed-omega: constraint root plus off-constraint spectrum") {
    const auto res = run_cli("allowed-omega --m 1 --kappa 8 --l 0 --s 1 --n 1 --range 0.1:10");
    CHECK(res.exit_code == 0);
    const json j = json::parse(res.out);
    REQUIRE(j["roots"].size() == 1);
    const auto& root = j["roots"][0];
    CHECK(std::fabs(root["omega"].get<double>() - 1.4902348) < 1e-4);
    CHECK(root["residual"].get<double>() < 1e-10);
    const auto& ev = root["companion"]["eigenvalues"];
    REQUIRE(ev.size() == 3);
    CHECK(ev[0].get<double>() < ev[1].get<double>());
    CHECK(ev[1].get<double>() < ev[2].get<double>());

    CHECK(run_cli("allowed-omega --m 1 --kappa 8 --l 0 --s 1 --n 1 --range 10:0.1").exit_code ==
          1);
    CHECK(run_cli("allowed-omega --m 1 --kappa 8 --l 0 --s 1 --n 1 --range nonsense").exit_code ==
          1);
}

TEST_CASE("sweep: file outputs, degenerate step count, determinism") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "radspec_cli_test";
    fs::create_directories(dir);
    const fs::path curves = dir / "curves.csv";
    const fs::path overlay = dir / "overlay.csv";

    const std::string cmd = "sweep --gamma 0 --b 1 --a-min -1 --a-max 1 --steps 2 --nu-max 1 "
                            "--n-max 2 --basis-size 12 --precision-mode double --curves-out " +
                            curves.string() + " --overlay-out " + overlay.string();
    CHECK(run_cli(cmd).exit_code == 0);

    const std::string curves_text = slurp(curves);
    const auto rows = parse_csv(curves_text);
    REQUIRE(rows.size() == 5);  // header + 2 points x 2 curves
    CHECK(rows[0] == std::vector<std::string>{"a", "nu", "w"});
    CHECK(curves_text.find("\r") == std::string::npos);  // LF endings

    const auto orows = parse_csv(slurp(overlay));
    REQUIRE(orows.size() == 1 + 2 + 3);  // header + n=1 pair + n=2 triple
    CHECK(orows[0] == std::vector<std::string>{"n", "i", "a_root", "w"});
    CHECK(std::stod(orows[3][3]) == 5.75);

    // identical flags, identical bytes
    CHECK(run_cli(cmd).exit_code == 0);
    CHECK(slurp(curves) == curves_text);

    CHECK(run_cli("sweep --gamma 0 --b 1 --a-min 1 --a-max -1 --steps 4").exit_code == 1);

    // per-point solver failures leave the w field empty and keep exit 0
    const std::string failing =
        "sweep --gamma 0 --b 1 --a-min 0 --a-max 1 --steps 3 --nu-max 1 --n-max 0 "
        "--basis-size 30 --precision-mode double --curves-out " +
        curves.string() + " --overlay-out " + overlay.string();
    CHECK(run_cli(failing).exit_code == 0);
    const auto frows = parse_csv(slurp(curves));
    REQUIRE(frows.size() == 7);
    for (std::size_t i = 1; i < frows.size(); ++i) {
        REQUIRE(frows[i].size() == 3);
        CHECK(frows[i][2].empty());
    }
    fs::remove_all(dir);
}

TEST_CASE("verify: quick level passes, failure path reports and exits 3") {
    const auto ok = run_cli("verify --level quick");
    CHECK(ok.exit_code == 0);
    CHECK(ok.out.find("[PASS]") != std::string::npos);
    CHECK(ok.out.find("FAIL") == std::string::npos);

    const auto bad = run_cli("verify --level quick --self-test-failure");
    CHECK(bad.exit_code == 3);
    CHECK(bad.out.find("[FAIL] injected negative control") != std::string::npos);

    CHECK(run_cli("verify --level bogus").exit_code == 1);
}
