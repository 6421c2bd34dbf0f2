// Copyright 2026 The qcorr Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cli.hpp"
#include "doctest.h"
#include "qcorr/correlations.hpp"
#include "qcorr/purification.hpp"
#include "qcorr/states.hpp"

using namespace qcorr;
using namespace qcorr::cli;

namespace {

struct RunResult {
    int code = 0;
    std::string out;
    std::string err;
};

RunResult drive(const std::vector<std::string> &args) {
    std::ostringstream out;
    std::ostringstream err;
    RunResult result;
    result.code = run(args, out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::vector<std::string> lines_of(const std::string &text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> fields;
    std::istringstream stream(line);
    std::string field;
    while (std::getline(stream, field, sep)) {
        fields.push_back(field);
    }
    return fields;
}

}  // namespace

TEST_CASE("format_number uses 12 significant digits without locale effects") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(0.5) == "0.5");
    CHECK(format_number(1.0 / 3.0) == "0.333333333333");
    CHECK(format_number(-0.25) == "-0.25");
    CHECK(format_number(1e-7) == "1e-07");
}

TEST_CASE("discord subcommand prints the closed-form report") {
    const RunResult werner_pure = drive({"discord", "werner", "1.0"});
    CHECK(werner_pure.code == 0);
    CHECK(werner_pure.out.find("discord = 1\n") != std::string::npos);
    CHECK(werner_pure.out.find("mutual_information = 2\n") != std::string::npos);

    const RunResult werner_zero = drive({"discord", "werner", "0.25"});
    CHECK(werner_zero.code == 0);
    CHECK(werner_zero.out.find("discord = 0\n") != std::string::npos);

    const CVector c{0.6, -0.6, 0.6};
    const RunResult c_state = drive({"discord", "c", "0.6", "-0.6", "0.6"});
    CHECK(c_state.code == 0);
    CHECK(c_state.out.find("discord = " + format_number(discord_bell_diagonal(c)) + "\n") !=
          std::string::npos);
}

TEST_CASE("discord subcommand rejects malformed or unphysical input") {
    CHECK(drive({"discord", "werner", "1.2"}).code == 1);
    CHECK(drive({"discord", "werner"}).code == 1);
    CHECK(drive({"discord", "bell", "2", "0"}).code == 1);
    CHECK(drive({"discord", "sphere", "1"}).code == 1);
    CHECK(drive({"discord", "c", "0.6", "0.6"}).code == 1);

    // Outside the Bell-diagonal tetrahedron: one weight would be negative.
    const RunResult outside = drive({"discord", "c", "-0.6", "0.6", "-0.6"});
    CHECK(outside.code == 1);
    CHECK(outside.err.find("outside the physical state space") != std::string::npos);
}

TEST_CASE("sweep validation rejects bad configurations") {
    SweepConfig config;
    config.f_min = 0.5;
    config.f_max = 0.4;
    CHECK_THROWS_AS(validate_sweep(config), std::invalid_argument);

    config = SweepConfig{};
    config.step = 0.0;
    CHECK_THROWS_AS(validate_sweep(config), std::invalid_argument);

    config = SweepConfig{};
    config.step = 1e-8;
    CHECK_THROWS_AS(validate_sweep(config), std::invalid_argument);

    config = SweepConfig{};
    config.quantities = {"negativity"};
    CHECK_THROWS_AS(validate_sweep(config), std::invalid_argument);
}

TEST_CASE("sweep_csv rows reproduce the closed forms") {
    SweepConfig config;
    config.f_min = 0.5;
    config.f_max = 0.51;
    config.step = 0.005;
    config.quantities = {"discord"};
    config.verify = true;
    config.provenance = "unit test";

    const std::vector<std::string> lines = lines_of(sweep_csv(config));
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "# unit test");
    CHECK(lines[1] ==
          "F,discord_rho,discord_rho_prime,discord_chi,discord_chi_prime,"
          "verify_discord_chi,verify_discord_chi_prime");

    for (std::size_t row = 0; row < 3; ++row) {
        const std::vector<std::string> fields = split(lines[2 + row], ',');
        REQUIRE(fields.size() == 7);
        const double f = 0.5 + 0.005 * static_cast<double>(row);
        CHECK(fields[0] == format_number(f));
        CHECK(fields[1] == format_number(discord_bell_diagonal(werner_c(f))));

        const double n = 8.0 * f * f - 4.0 * f + 5.0;
        const double c1 = (16.0 * f * f - 8.0 * f + 1.0) / n;
        const CVector prime{c1, -c1, (12.0 * f - 3.0) / n};
        CHECK(fields[2] == format_number(discord_bell_diagonal(prime)));
        CHECK(fields[3] ==
              format_number(discord_bell_diagonal(werner_c((10.0 * f * f - 2.0 * f + 1.0) / n))));
        CHECK(fields[4] ==
              format_number(discord_bell_diagonal(werner_c((2.0 * f * f - 4.0 * f + 2.0) / n))));
        CHECK(std::stod(fields[5]) <= 1e-12);
        CHECK(std::stod(fields[6]) <= 1e-12);
    }
}

TEST_CASE("sweep output is deterministic") {
    SweepConfig config;
    config.f_min = 0.6;
    config.f_max = 0.8;
    config.step = 0.01;
    config.provenance = "determinism";
    CHECK(sweep_csv(config) == sweep_csv(config));

    const RunResult first = drive({"sweep", "--preset", "fig2"});
    const RunResult second = drive({"sweep", "--preset", "fig2"});
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
    CHECK(first.out.find("# qcorr sweep preset=fig2") == 0);
}

TEST_CASE("sweep presets pin range and quantity") {
    const RunResult fig3 = drive({"sweep", "--preset", "fig3"});
    REQUIRE(fig3.code == 0);
    const std::vector<std::string> lines = lines_of(fig3.out);
    CHECK(lines[1] ==
          "F,classical_correlation_rho,classical_correlation_rho_prime,"
          "classical_correlation_chi,classical_correlation_chi_prime");
    CHECK(lines.size() == 2 + 101);
    CHECK(split(lines[2], ',')[0] == "0.5");
    CHECK(split(lines.back(), ',')[0] == "1");

    const RunResult extended = drive({"sweep", "--preset", "fig3", "--extended"});
    REQUIRE(extended.code == 0);
    CHECK(lines_of(extended.out).size() == 2 + 201);

    CHECK(drive({"sweep", "--preset", "fig3", "--from", "0.1"}).code == 1);
    CHECK(drive({"sweep", "--preset", "fig9"}).code == 1);
    CHECK(drive({"sweep", "--extended"}).code == 1);
    CHECK(drive({"sweep", "--from", "0.5"}).code == 1);
    CHECK(drive({"sweep", "--from", "0.5", "--to", "0.4"}).code == 1);
}

TEST_CASE("sweep writes files and reports unwritable paths") {
    const std::string path = "cli_sweep_unit.csv";
    const RunResult to_file = drive(
        {"sweep", "--from", "0.7", "--to", "0.71", "--step", "0.01", "--output", path});
    REQUIRE(to_file.code == 0);
    CHECK(to_file.out.empty());
    std::ifstream file(path, std::ios::binary);
    REQUIRE(file.good());
    std::stringstream content;
    content << file.rdbuf();
    CHECK(lines_of(content.str()).size() == 4);
    file.close();
    std::remove(path.c_str());

    CHECK(drive({"sweep", "--preset", "fig1", "--output-dir", "/tmp"}).code == 1);
    CHECK(drive({"sweep", "--preset", "fig1", "--output", "x.csv", "--output-dir",
                 "/nonexistent-dir-qcorr"})
              .code == 1);
}

TEST_CASE("purify subcommand table and CSV agree with iterate") {
    const RunResult table = drive({"purify", "--f0", "0.75", "--rounds", "2"});
    REQUIRE(table.code == 0);
    CHECK(table.out.find("yield") != std::string::npos);
    CHECK(table.out.find("0.788462") != std::string::npos);

    const PurificationTrace trace = iterate(0.75, 2);
    const std::string csv = purify_csv(trace, "prov");
    const std::vector<std::string> lines = lines_of(csv);
    REQUIRE(lines.size() == 4);
    const std::vector<std::string> row = split(lines[2], ',');
    REQUIRE(row.size() == 14);
    CHECK(row[0] == "1");
    CHECK(row[1] == format_number(trace.rounds[0].fidelity_in));
    CHECK(row[2] == format_number(trace.rounds[0].fidelity_out));
    CHECK(row[3] == format_number(trace.rounds[0].success_probability));
    CHECK(row[4] == format_number(0.5 * trace.rounds[0].success_probability));
    CHECK(row[13] == format_number(trace.rounds[0].discord_out));

    const std::vector<std::string> last = split(lines[3], ',');
    CHECK(last[4] == format_number(trace.yield));

    CHECK(drive({"purify", "--f0", "1.2", "--rounds", "2"}).code == 1);
    CHECK(drive({"purify", "--f0", "0.8", "--rounds", "0"}).code == 1);
    CHECK(drive({"purify", "--f0", "0.8"}).code == 1);
}

TEST_CASE("koashi-check validation and determinism") {
    KoashiCheckConfig config;
    config.dim_a = 5;
    CHECK_THROWS_AS(validate_koashi(config), std::invalid_argument);
    config = KoashiCheckConfig{};
    config.trials = 0;
    CHECK_THROWS_AS(validate_koashi(config), std::invalid_argument);

    config = KoashiCheckConfig{};
    config.trials = 2;
    config.seed = 11;
    const KoashiCheckOutcome first = run_koashi_check(config, "prov");
    const KoashiCheckOutcome second = run_koashi_check(config, "prov");
    CHECK(first.ok);
    CHECK(first.csv == second.csv);
    CHECK(first.summary == second.summary);

    const std::vector<std::string> lines = lines_of(first.csv);
    REQUIRE(lines.size() == 2 + 2);
    CHECK(lines[1] ==
          "trial,classical_residual,min_pt_eigenvalue,is_ppt,additivity_residual,"
          "identity_residual,kw_residual");
    for (std::size_t row = 2; row < lines.size(); ++row) {
        const std::vector<std::string> fields = split(lines[row], ',');
        REQUIRE(fields.size() == 7);
        CHECK(fields[3] == "1");
        CHECK(std::stod(fields[6]) <= 1e-5);
    }
}

TEST_CASE("koashi-check single-term specs have machine-zero residuals") {
    KoashiCheckConfig config;
    config.trials = 2;
    config.pure_spec = true;
    const KoashiCheckOutcome outcome = run_koashi_check(config, "prov");
    CHECK(outcome.ok);
    const std::vector<std::string> lines = lines_of(outcome.csv);
    for (std::size_t row = 2; row < lines.size(); ++row) {
        const std::vector<std::string> fields = split(lines[row], ',');
        CHECK(std::stod(fields[1]) <= 1e-12);
        CHECK(std::stod(fields[4]) <= 1e-12);
        CHECK(std::stod(fields[5]) <= 1e-12);
        CHECK(std::stod(fields[6]) <= 1e-12);
    }
}

TEST_CASE("koashi-check drops columns that need qubit subsystems") {
    KoashiCheckConfig config;
    config.dim_b = 3;
    config.trials = 1;
    const KoashiCheckOutcome outcome = run_koashi_check(config, "prov");
    const std::vector<std::string> lines = lines_of(outcome.csv);
    CHECK(lines[1] ==
          "trial,classical_residual,min_pt_eigenvalue,is_ppt,additivity_residual,"
          "identity_residual");
    CHECK(outcome.summary.find("monogamy") == std::string::npos);
    CHECK(outcome.summary.find("formation identity") != std::string::npos);
}

TEST_CASE("top-level driver exit paths") {
    CHECK(drive({}).code == 1);
    CHECK(drive({"polish"}).code == 1);

    const RunResult version = drive({"--version"});
    CHECK(version.code == 0);
    CHECK(version.out.find("0.1.0") != std::string::npos);

    const RunResult help = drive({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("sweep") != std::string::npos);

    CHECK(drive({"koashi-check", "--dims", "5", "2", "2", "--trials", "1"}).code == 1);
    CHECK(drive({"koashi-check", "--trials", "1"}).code == 1);
}
