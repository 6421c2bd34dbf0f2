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
#include "cli.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/density_matrix.hpp"
#include "qcorr/koashi.hpp"
#include "qcorr/random.hpp"
#include "qcorr/states.hpp"

namespace qcorr::cli {
namespace {

// Tolerances the koashi-check subcommand holds its residuals to.  The
// classical-correlation bound is looser when the B measurement is found by
// the sampled optimizer instead of the exact qubit path.
constexpr double kClassicalTolQubit = 1e-4;
constexpr double kClassicalTolSampled = 1e-3;
constexpr double kAdditivityTol = 1e-12;
constexpr double kPtTol = -1e-10;
constexpr double kIdentityTol = 1e-5;
constexpr double kKwTol = 1e-5;
constexpr std::size_t kAdditivityCopies = 2;

std::string format_with_digits(double value, int digits) {
    std::array<char, 64> buffer;
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                      std::chars_format::general, digits);
    return std::string(buffer.data(), result.ptr);
}

std::string format_short(double value) { return format_with_digits(value, 6); }

std::string padded(const std::string &text, std::size_t width) {
    std::string out = text;
    if (out.size() < width) {
        out.append(width - out.size(), ' ');
    }
    return out;
}

struct Triple {
    double discord = 0.0;
    double mutual = 0.0;
    double classical = 0.0;
};

Triple triple_from_c(const CVector &c) {
    const BellWeights w = bell_weights_from_c(c);
    Triple t;
    t.mutual = 2.0 - shannon_entropy({w[0], w[1], w[2], w[3]});
    t.classical = classical_correlation_analytic(c);
    t.discord = t.mutual - t.classical;
    return t;
}

double component(const Triple &t, const std::string &name) {
    if (name == "discord") {
        return t.discord;
    }
    if (name == "mutual_information") {
        return t.mutual;
    }
    return t.classical;
}

std::vector<std::string> resolved_quantities(const SweepConfig &config) {
    if (config.quantities.empty()) {
        return canonical_quantities();
    }
    std::vector<std::string> out;
    for (const std::string &name : canonical_quantities()) {
        const bool wanted = std::find(config.quantities.begin(), config.quantities.end(),
                                      name) != config.quantities.end();
        if (wanted) {
            out.push_back(name);
        }
    }
    return out;
}

std::size_t sweep_row_count(const SweepConfig &config) {
    return static_cast<std::size_t>(
               std::floor((config.f_max - config.f_min) / config.step + 1e-9)) +
           1;
}

/// Closed-form correlation coordinates of the four per-round states.
struct RowStates {
    CVector rho, rho_prime, chi, chi_prime;
};

RowStates row_states(double f) {
    const double n = 8.0 * f * f - 4.0 * f + 5.0;
    RowStates states;
    states.rho = werner_c(f);
    const double c1 = (16.0 * f * f - 8.0 * f + 1.0) / n;
    states.rho_prime = CVector{c1, -c1, (12.0 * f - 3.0) / n};
    states.chi = werner_c((10.0 * f * f - 2.0 * f + 1.0) / n);
    states.chi_prime = werner_c((2.0 * f * f - 4.0 * f + 2.0) / n);
    return states;
}

ClassStateSpec single_term_spec(std::size_t d_a, std::size_t d_b, std::size_t d_c,
                                std::uint64_t seed) {
    SplitMix64 rng(seed);
    ClassStateSpec spec;
    spec.weights.assign(d_b, 0.0);
    spec.weights[0] = 1.0;
    for (std::size_t i = 0; i < d_b; ++i) {
        spec.a_states.push_back(haar_state(d_a, rng));
        spec.c_states.push_back(haar_state(d_c, rng));
    }
    return spec;
}

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::string format_number(double value) { return format_with_digits(value, 12); }

const std::vector<std::string> &canonical_quantities() {
    static const std::vector<std::string> names = {"discord", "mutual_information",
                                                   "classical_correlation"};
    return names;
}

void validate_sweep(const SweepConfig &config) {
    if (!(config.f_min >= 0.0 && config.f_max <= 1.0 && config.f_min <= config.f_max)) {
        throw std::invalid_argument("sweep: need 0 <= from <= to <= 1");
    }
    if (!(config.step > 0.0)) {
        throw std::invalid_argument("sweep: step must be positive");
    }
    if ((config.f_max - config.f_min) / config.step > 1e6) {
        throw std::invalid_argument("sweep: more than 1e6 grid points");
    }
    for (const std::string &name : config.quantities) {
        const auto &known = canonical_quantities();
        if (std::find(known.begin(), known.end(), name) == known.end()) {
            throw std::invalid_argument("sweep: unknown quantity \"" + name + "\"");
        }
    }
}

std::string sweep_csv(const SweepConfig &config) {
    validate_sweep(config);
    const std::vector<std::string> quantities = resolved_quantities(config);

    std::ostringstream out;
    out << "# " << config.provenance << "\n";
    out << "F";
    for (const std::string &q : quantities) {
        out << "," << q << "_rho"
            << "," << q << "_rho_prime"
            << "," << q << "_chi"
            << "," << q << "_chi_prime";
    }
    if (config.verify) {
        for (const std::string &q : quantities) {
            out << ",verify_" << q << "_chi"
                << ",verify_" << q << "_chi_prime";
        }
    }
    out << "\n";

    const std::size_t rows = sweep_row_count(config);
    for (std::size_t k = 0; k < rows; ++k) {
        const double f = std::clamp(config.f_min + static_cast<double>(k) * config.step,
                                    0.0, 1.0);
        const RowStates states = row_states(f);
        const Triple rho = triple_from_c(states.rho);
        const Triple rho_prime = triple_from_c(states.rho_prime);
        const Triple chi = triple_from_c(states.chi);
        const Triple chi_prime = triple_from_c(states.chi_prime);

        out << format_number(f);
        for (const std::string &q : quantities) {
            out << "," << format_number(component(rho, q)) << ","
                << format_number(component(rho_prime, q)) << ","
                << format_number(component(chi, q)) << ","
                << format_number(component(chi_prime, q));
        }
        if (config.verify) {
            const RoundStates simulated = bbpssw_round_states(f);
            const Triple sim_chi = triple_from_c(c_from_state(simulated.chi));
            const Triple sim_chi_prime = triple_from_c(c_from_state(simulated.chi_prime));
            for (const std::string &q : quantities) {
                out << ","
                    << format_number(std::abs(component(chi, q) - component(sim_chi, q)))
                    << ","
                    << format_number(
                           std::abs(component(chi_prime, q) - component(sim_chi_prime, q)));
            }
        }
        out << "\n";
    }
    return out.str();
}

std::string purify_table(const PurificationTrace &trace) {
    static const std::array<const char *, 13> headers = {
        "round", "F_in",  "F_out", "p_ok",  "I_in",  "C_in",  "D_in",
        "I_mid", "C_mid", "D_mid", "I_out", "C_out", "D_out"};
    constexpr std::size_t kWidth = 12;

    std::ostringstream out;
    for (const char *h : headers) {
        out << padded(h, kWidth);
    }
    out << "\n";
    std::size_t round = 1;
    for (const RoundRecord &r : trace.rounds) {
        out << padded(std::to_string(round++), kWidth) << padded(format_short(r.fidelity_in), kWidth)
            << padded(format_short(r.fidelity_out), kWidth)
            << padded(format_short(r.success_probability), kWidth)
            << padded(format_short(r.mutual_in), kWidth) << padded(format_short(r.classical_in), kWidth)
            << padded(format_short(r.discord_in), kWidth) << padded(format_short(r.mutual_mid), kWidth)
            << padded(format_short(r.classical_mid), kWidth)
            << padded(format_short(r.discord_mid), kWidth) << padded(format_short(r.mutual_out), kWidth)
            << padded(format_short(r.classical_out), kWidth)
            << padded(format_short(r.discord_out), kWidth) << "\n";
    }
    out << "yield " << format_short(trace.yield) << " (surviving pairs per input pair)\n";
    return out.str();
}

std::string purify_csv(const PurificationTrace &trace, const std::string &provenance) {
    std::ostringstream out;
    out << "# " << provenance << "\n";
    out << "round,fidelity_in,fidelity_out,success_probability,cumulative_yield,"
           "mutual_in,classical_in,discord_in,"
           "mutual_mid,classical_mid,discord_mid,"
           "mutual_out,classical_out,discord_out\n";
    double yield = 1.0;
    std::size_t round = 1;
    for (const RoundRecord &r : trace.rounds) {
        yield *= 0.5 * r.success_probability;
        out << round++ << "," << format_number(r.fidelity_in) << ","
            << format_number(r.fidelity_out) << "," << format_number(r.success_probability)
            << "," << format_number(yield) << "," << format_number(r.mutual_in) << ","
            << format_number(r.classical_in) << "," << format_number(r.discord_in) << ","
            << format_number(r.mutual_mid) << "," << format_number(r.classical_mid) << ","
            << format_number(r.discord_mid) << "," << format_number(r.mutual_out) << ","
            << format_number(r.classical_out) << "," << format_number(r.discord_out) << "\n";
    }
    return out.str();
}

void validate_koashi(const KoashiCheckConfig &config) {
    const auto in_cap = [](std::size_t d) { return d >= 2 && d <= 4; };
    if (!in_cap(config.dim_a) || !in_cap(config.dim_b) || !in_cap(config.dim_c)) {
        throw std::invalid_argument("koashi-check: each dimension must lie in [2, 4]");
    }
    if (config.trials == 0) {
        throw std::invalid_argument("koashi-check: trials must be at least 1");
    }
    if (config.trials > 100000) {
        throw std::invalid_argument("koashi-check: more than 1e5 trials");
    }
}

KoashiCheckOutcome run_koashi_check(const KoashiCheckConfig &config,
                                    const std::string &provenance) {
    validate_koashi(config);
    const bool has_identity = config.dim_a == 2 && config.dim_c == 2;
    const bool has_kw = has_identity && config.dim_b == 2;
    const double classical_tol =
        config.dim_b == 2 ? kClassicalTolQubit : kClassicalTolSampled;

    std::ostringstream csv;
    csv << "# " << provenance << "\n";
    csv << "trial,classical_residual,min_pt_eigenvalue,is_ppt,additivity_residual";
    if (has_identity) {
        csv << ",identity_residual";
    }
    if (has_kw) {
        csv << ",kw_residual";
    }
    csv << "\n";

    double max_classical = 0.0;
    double min_pt = std::numeric_limits<double>::infinity();
    double max_additivity = 0.0;
    double max_identity = 0.0;
    double max_kw = 0.0;
    std::size_t ppt_failures = 0;

    // Independent stream for the Haar states of the monogamy check.
    SplitMix64 kw_rng(config.seed ^ 0x9E3779B97F4A7C15ULL);

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t spec_seed = config.seed + trial;
        const ClassStateSpec spec =
            config.pure_spec
                ? single_term_spec(config.dim_a, config.dim_b, config.dim_c, spec_seed)
                : ClassStateSpec::random(config.dim_a, config.dim_b, config.dim_c,
                                         spec_seed);

        const AdditivityReport report = additivity_report(spec, kAdditivityCopies);
        const PptReport ppt = class_ac_ppt_check(spec);

        max_classical = std::max(max_classical, report.classical_residual);
        min_pt = std::min(min_pt, ppt.min_eigenvalue);
        max_additivity = std::max(max_additivity, report.additivity_residual);
        if (!ppt.is_ppt) {
            ++ppt_failures;
        }

        csv << trial << "," << format_number(report.classical_residual) << ","
            << format_number(ppt.min_eigenvalue) << "," << (ppt.is_ppt ? 1 : 0) << ","
            << format_number(report.additivity_residual);
        if (has_identity) {
            const double identity = report.identity_residual.value_or(0.0);
            max_identity = std::max(max_identity, identity);
            csv << "," << format_number(identity);
        }
        if (has_kw) {
            const StateVector psi =
                config.pure_spec ? purify_class(spec) : haar_state(8, kw_rng);
            const double kw = koashi_winter_residual(psi);
            max_kw = std::max(max_kw, kw);
            csv << "," << format_number(kw);
        }
        csv << "\n";
    }

    KoashiCheckOutcome outcome;
    outcome.csv = csv.str();

    const bool classical_ok = max_classical <= classical_tol;
    const bool ppt_ok = ppt_failures == 0 && min_pt >= kPtTol;
    const bool additivity_ok = max_additivity <= kAdditivityTol;
    const bool identity_ok = !has_identity || max_identity <= kIdentityTol;
    const bool kw_ok = !has_kw || max_kw <= kKwTol;
    outcome.ok = classical_ok && ppt_ok && additivity_ok && identity_ok && kw_ok;

    std::ostringstream summary;
    summary << "dims " << config.dim_a << " " << config.dim_b << " " << config.dim_c
            << "  trials " << config.trials << "  seed " << config.seed
            << (config.pure_spec ? "  pure-spec" : "") << "\n";
    summary << "classical vs S(A):      max residual " << format_short(max_classical)
            << " (tol " << format_short(classical_tol) << ") " << pass_fail(classical_ok)
            << "\n";
    summary << "partial transpose:      min eigenvalue " << format_short(min_pt)
            << " (tol " << format_short(kPtTol) << "), failures " << ppt_failures << " "
            << pass_fail(ppt_ok) << "\n";
    summary << "additivity (" << kAdditivityCopies << " copies): max residual "
            << format_short(max_additivity) << " (tol " << format_short(kAdditivityTol)
            << ") " << pass_fail(additivity_ok) << "\n";
    if (has_identity) {
        summary << "formation identity:     max residual " << format_short(max_identity)
                << " (tol " << format_short(kIdentityTol) << ") " << pass_fail(identity_ok)
                << "\n";
    }
    if (has_kw) {
        summary << "monogamy (Haar states): max residual " << format_short(max_kw)
                << " (tol " << format_short(kKwTol) << ") " << pass_fail(kw_ok) << "\n";
    }
    summary << "overall " << pass_fail(outcome.ok) << "\n";
    outcome.summary = summary.str();
    return outcome;
}

namespace {

bool parse_double(const std::string &text, double &value) {
    const char *begin = text.data();
    const char *end = begin + text.size();
    const auto result = std::from_chars(begin, end, value);
    return result.ec == std::errc{} && result.ptr == end && std::isfinite(value);
}

bool parse_bit(const std::string &text, int &value) {
    if (text == "0" || text == "1") {
        value = text[0] - '0';
        return true;
    }
    return false;
}

int usage_error(std::ostream &err, const std::string &message) {
    err << "qcorr: " << message << "\n";
    return 1;
}

/// Writes a document to a file, or to `out` when path is "-" or empty.
/// Returns false when the file cannot be written.
bool deliver(const std::string &document, const std::string &path, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << document;
        return true;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        return false;
    }
    file << document;
    file.flush();
    return file.good();
}

int run_discord(const std::vector<std::string> &tokens, std::ostream &out,
                std::ostream &err) {
    if (tokens.empty()) {
        return usage_error(err, "discord: expected werner F | bell a b | c c1 c2 c3");
    }
    CVector c{};
    std::string label;
    const std::string &kind = tokens[0];
    if (kind == "werner") {
        double f = 0.0;
        if (tokens.size() != 2 || !parse_double(tokens[1], f)) {
            return usage_error(err, "discord werner: expected one fidelity argument");
        }
        if (!(f >= 0.0 && f <= 1.0)) {
            return usage_error(err, "discord werner: fidelity must lie in [0, 1]");
        }
        c = werner_c(f);
        label = "werner(F=" + format_number(f) + ")";
    } else if (kind == "bell") {
        int a = 0;
        int b = 0;
        if (tokens.size() != 3 || !parse_bit(tokens[1], a) || !parse_bit(tokens[2], b)) {
            return usage_error(err, "discord bell: expected two bits");
        }
        c = c_from_state(pure_density(bell_state(a, b), {2, 2}));
        label = "bell(" + std::to_string(a) + "," + std::to_string(b) + ")";
    } else if (kind == "c") {
        std::array<double, 3> v{};
        if (tokens.size() != 4 || !parse_double(tokens[1], v[0]) ||
            !parse_double(tokens[2], v[1]) || !parse_double(tokens[3], v[2])) {
            return usage_error(err, "discord c: expected three correlation coefficients");
        }
        c = CVector{v[0], v[1], v[2]};
        const BellWeights weights = bell_weights_from_c(c);
        for (double w : weights) {
            if (w < -1e-10 || w > 1.0 + 1e-10) {
                return usage_error(
                    err, "discord c: coefficients give Bell weight " + format_number(w) +
                             ", outside the physical state space");
            }
        }
        label = "c(" + format_number(v[0]) + "," + format_number(v[1]) + "," +
                format_number(v[2]) + ")";
    } else {
        return usage_error(err, "discord: unknown state kind \"" + kind + "\"");
    }

    try {
        const Triple t = triple_from_c(c);
        out << "state: " << label << "\n";
        out << "method: analytic-bell-diagonal\n";
        out << "mutual_information = " << format_number(t.mutual) << "\n";
        out << "classical_correlation = " << format_number(t.classical) << "\n";
        out << "discord = " << format_number(t.discord) << "\n";
    } catch (const std::exception &e) {
        err << "qcorr: numerical violation: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

std::string join(const std::vector<std::string> &parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out.push_back(sep);
        }
        out += parts[i];
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Correlation and purification toolkit for small quantum states"};
    app.name("qcorr");
    app.set_version_flag("--version", std::string("qcorr ") + kVersion);
    app.require_subcommand(1);

    CLI::App *discord_cmd =
        app.add_subcommand("discord", "Report mutual information, classical correlation "
                                      "and discord for one two-qubit state");
    std::vector<std::string> discord_tokens;
    discord_cmd->add_option("spec", discord_tokens, "werner F | bell a b | c c1 c2 c3")
        ->expected(-1);

    CLI::App *sweep_cmd = app.add_subcommand(
        "sweep", "Correlation curves for one purification round across input fidelities");
    SweepConfig sweep;
    std::string preset;
    bool extended = false;
    std::vector<std::string> quantity_args;
    std::string output = "-";
    std::string output_dir;
    sweep_cmd->add_option("--preset", preset,
                          "fig1 (discord), fig2 (mutual information) or fig3 "
                          "(classical correlation); range [0.5,1], step 0.005");
    sweep_cmd->add_flag("--extended", extended, "Widen the preset range to [0,1]");
    CLI::Option *from_opt = sweep_cmd->add_option("--from", sweep.f_min, "Lowest fidelity");
    CLI::Option *to_opt = sweep_cmd->add_option("--to", sweep.f_max, "Highest fidelity");
    CLI::Option *step_opt =
        sweep_cmd->add_option("--step", sweep.step, "Fidelity grid spacing (default 0.005)");
    CLI::Option *quantities_opt =
        sweep_cmd
            ->add_option("--quantities", quantity_args,
                         "Subset of discord, mutual_information, classical_correlation")
            ->delimiter(',');
    sweep_cmd->add_flag("--verify", sweep.verify,
                        "Add |closed form - simulation| columns for chi and chi_prime");
    sweep_cmd->add_option("--output", output, "CSV destination; - writes to stdout");
    sweep_cmd->add_option("--output-dir", output_dir, "Directory prepended to --output");

    CLI::App *purify_cmd =
        app.add_subcommand("purify", "Iterate purification rounds from a start fidelity");
    double f0 = 0.0;
    std::size_t rounds = 0;
    std::string purify_csv_path;
    purify_cmd->add_option("--f0", f0, "Initial fidelity in [0, 1]")->required();
    purify_cmd->add_option("--rounds", rounds, "Number of rounds (>= 1)")->required();
    purify_cmd->add_option("--csv", purify_csv_path, "Also write the trace as CSV here");

    CLI::App *koashi_cmd = app.add_subcommand(
        "koashi-check", "Validate the additive-discord class on random specs");
    KoashiCheckConfig koashi;
    std::vector<std::size_t> dims;
    std::string koashi_csv_path;
    koashi_cmd->add_option("--dims", dims, "Subsystem dimensions d_A d_B d_C, each in [2,4]")
        ->expected(3)
        ->required();
    koashi_cmd->add_option("--trials", koashi.trials, "Random specs to draw (>= 1)")
        ->required();
    koashi_cmd->add_option("--seed", koashi.seed, "Base seed (default 42)");
    koashi_cmd->add_flag("--pure-spec", koashi.pure_spec,
                         "Use the single-term spec; every residual is exactly zero");
    koashi_cmd->add_option("--csv", koashi_csv_path, "Write per-trial residuals as CSV here");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    if (discord_cmd->parsed()) {
        return run_discord(discord_tokens, out, err);
    }

    if (sweep_cmd->parsed()) {
        if (!preset.empty()) {
            if (from_opt->count() > 0 || to_opt->count() > 0 || step_opt->count() > 0 ||
                quantities_opt->count() > 0) {
                return usage_error(
                    err, "sweep: --preset fixes the range and quantities; drop "
                         "--from/--to/--step/--quantities");
            }
            if (preset == "fig1") {
                sweep.quantities = {"discord"};
            } else if (preset == "fig2") {
                sweep.quantities = {"mutual_information"};
            } else if (preset == "fig3") {
                sweep.quantities = {"classical_correlation"};
            } else {
                return usage_error(err, "sweep: unknown preset \"" + preset + "\"");
            }
            sweep.f_min = extended ? 0.0 : 0.5;
            sweep.f_max = 1.0;
            sweep.step = 0.005;
        } else {
            if (extended) {
                return usage_error(err, "sweep: --extended requires --preset");
            }
            if (from_opt->count() == 0 || to_opt->count() == 0) {
                return usage_error(err, "sweep: need --preset or both --from and --to");
            }
            sweep.quantities = quantity_args;
        }
        if (output_dir.empty() == false && (output.empty() || output == "-")) {
            return usage_error(err, "sweep: --output-dir requires --output FILENAME");
        }

        sweep.provenance = "qcorr sweep preset=" + (preset.empty() ? "none" : preset) +
                           " extended=" + (extended ? "1" : "0") +
                           " from=" + format_number(sweep.f_min) +
                           " to=" + format_number(sweep.f_max) +
                           " step=" + format_number(sweep.step) + " quantities=" +
                           join(resolved_quantities(sweep), '+') +
                           " verify=" + (sweep.verify ? "1" : "0") + " version=" + kVersion;
        try {
            validate_sweep(sweep);
        } catch (const std::invalid_argument &e) {
            return usage_error(err, e.what());
        }

        std::string document;
        try {
            document = sweep_csv(sweep);
        } catch (const std::exception &e) {
            err << "qcorr: numerical violation: " << e.what() << "\n";
            return 2;
        }
        const std::string path =
            output_dir.empty() || output == "-" ? output : output_dir + "/" + output;
        if (!deliver(document, path, out)) {
            return usage_error(err, "sweep: cannot write \"" + path + "\"");
        }
        return 0;
    }

    if (purify_cmd->parsed()) {
        if (!(f0 >= 0.0 && f0 <= 1.0)) {
            return usage_error(err, "purify: --f0 must lie in [0, 1]");
        }
        if (rounds == 0 || rounds > 1000) {
            return usage_error(err, "purify: --rounds must lie in [1, 1000]");
        }
        PurificationTrace trace;
        try {
            trace = iterate(f0, rounds);
        } catch (const std::exception &e) {
            err << "qcorr: numerical violation: " << e.what() << "\n";
            return 2;
        }
        out << purify_table(trace);
        if (!purify_csv_path.empty()) {
            const std::string provenance = "qcorr purify f0=" + format_number(f0) +
                                           " rounds=" + std::to_string(rounds) +
                                           " version=" + kVersion;
            if (!deliver(purify_csv(trace, provenance), purify_csv_path, out)) {
                return usage_error(err, "purify: cannot write \"" + purify_csv_path + "\"");
            }
        }
        return 0;
    }

    if (koashi_cmd->parsed()) {
        koashi.dim_a = dims[0];
        koashi.dim_b = dims[1];
        koashi.dim_c = dims[2];
        try {
            validate_koashi(koashi);
        } catch (const std::invalid_argument &e) {
            return usage_error(err, e.what());
        }
        const std::string provenance =
            "qcorr koashi-check dims=" + std::to_string(koashi.dim_a) + "x" +
            std::to_string(koashi.dim_b) + "x" + std::to_string(koashi.dim_c) +
            " trials=" + std::to_string(koashi.trials) +
            " seed=" + std::to_string(koashi.seed) +
            " pure_spec=" + (koashi.pure_spec ? "1" : "0") + " version=" + kVersion;

        KoashiCheckOutcome outcome;
        try {
            outcome = run_koashi_check(koashi, provenance);
        } catch (const std::exception &e) {
            err << "qcorr: numerical violation: " << e.what() << "\n";
            return 2;
        }
        out << outcome.summary;
        if (!koashi_csv_path.empty()) {
            if (!deliver(outcome.csv, koashi_csv_path, out)) {
                return usage_error(err,
                                   "koashi-check: cannot write \"" + koashi_csv_path + "\"");
            }
        }
        if (!outcome.ok) {
            err << "qcorr: residuals exceeded their tolerances\n";
            return 2;
        }
        return 0;
    }

    return usage_error(err, "no subcommand given");
}

}  // namespace qcorr::cli
