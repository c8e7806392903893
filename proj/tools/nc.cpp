// Copyright 2026 The ncdist Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nc: nonclassicality distance indicator for qudit states.
//
//   nc kernel     --n 3 --zeta 0
//   nc indicator  --state rho.json --zeta 0.5 [--convention frobenius]
//   nc scan       --zeta-degrees 30 --resolution 200 --output scan.csv
//   nc polytope   --n 3 --zeta 1.0471975512
//   nc sample-min --state rho.json --zeta 0 --samples 100000 --seed 1

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "nc/core_types.hpp"
#include "nc/distance.hpp"
#include "nc/error.hpp"
#include "nc/geometry.hpp"
#include "nc/io.hpp"
#include "nc/scan.hpp"
#include "nc/sw_kernel.hpp"
#include "nc/wigner.hpp"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitNoConvergence = 3;

struct Options {
    std::optional<std::size_t> n;
    std::optional<double> zeta;
    std::optional<double> zeta_degrees;
    std::optional<std::string> pi;
    std::optional<std::uint64_t> seed;
    std::size_t samples = 10000;
    std::string state;
    std::size_t resolution = 200;
    std::string output = "-";
    std::string convention = "paper";
};

std::optional<double> zeta_of(const Options &o) {
    if (o.zeta && o.zeta_degrees) {
        throw nc::Error(nc::ErrorKind::InvalidArgument,
                        "--zeta and --zeta-degrees are mutually exclusive");
    }
    if (o.zeta_degrees) {
        return *o.zeta_degrees * std::numbers::pi / 180.0;
    }
    return o.zeta;
}

nc::io::KernelArgs kernel_args(const Options &o, bool seed_selects_kernel) {
    nc::io::KernelArgs args;
    args.n = o.n;
    args.zeta = zeta_of(o);
    if (o.pi) {
        args.pi = nc::io::parse_number_list(*o.pi);
    }
    if (seed_selects_kernel) {
        args.seed = o.seed;
    }
    return args;
}

void print(const nc::io::Json &j) { std::cout << j.dump(2) << '\n'; }

int run_kernel(const Options &o) {
    print(nc::io::kernel_json(nc::io::resolve_kernel(kernel_args(o, true))));
    return 0;
}

int run_indicator(const Options &o) {
    const nc::io::StateInput state = nc::io::load_state_file(o.state);
    nc::io::KernelArgs args = kernel_args(o, true);
    if (args.n && *args.n != state.n) {
        throw nc::Error(nc::ErrorKind::DimensionMismatch,
                        "--n disagrees with the state file");
    }
    args.n = state.n;
    const nc::KernelSpectrum kernel = nc::io::resolve_kernel(args);
    const nc::MetricConvention convention =
        nc::parse_convention(o.convention);
    const nc::Spectrum r = state.to_spectrum();
    if (r.n() == 3) {
        print(nc::io::indicator_json(nc::qutrit_distance(
            nc::chart_from_spectrum(r), nc::qutrit_zeta(kernel), convention)));
    } else {
        print(nc::io::indicator_json(
            nc::distance_general(r, kernel, convention)));
    }
    return 0;
}

int run_scan(const Options &o) {
    const std::optional<double> zeta = zeta_of(o);
    if (!zeta) {
        throw nc::Error(nc::ErrorKind::InvalidArgument,
                        "scan needs --zeta or --zeta-degrees");
    }
    nc::ScanOptions opt;
    opt.zeta = *zeta;
    opt.resolution = o.resolution;
    opt.convention = nc::parse_convention(o.convention);
    const std::string csv = nc::scan_csv(opt);
    if (o.output == "-") {
        std::cout << csv;
        return 0;
    }
    std::ofstream file(o.output, std::ios::binary);
    file << csv;
    file.close();
    if (!file) {
        throw nc::Error(nc::ErrorKind::InvalidArgument,
                        "cannot write " + o.output);
    }
    return 0;
}

int run_polytope(const Options &o) {
    const nc::KernelSpectrum kernel =
        nc::io::resolve_kernel(kernel_args(o, true));
    print(nc::io::polytope_json(nc::positivity_polytope(kernel)));
    return 0;
}

int run_sample_min(const Options &o) {
    const nc::io::StateInput state = nc::io::load_state_file(o.state);
    nc::io::KernelArgs args = kernel_args(o, false);
    args.n = state.n;
    const nc::KernelSpectrum kernel = nc::io::resolve_kernel(args);
    const nc::HermitianMatrix rho = state.to_matrix();
    const double analytic = nc::wigner_floor(state.to_spectrum(), kernel);
    const double sampled = nc::sampled_min(
        rho, kernel, {.samples = o.samples, .seed = o.seed.value_or(0)});
    nc::io::Json j;
    j["w_analytic"] = analytic;
    j["w_sampled"] = sampled;
    j["gap"] = std::max(0.0, sampled - analytic);
    print(j);
    return 0;
}

void add_kernel_flags(CLI::App *cmd, Options &o) {
    cmd->add_option("--n", o.n, "Dimension N")->check(CLI::Range(2, 64));
    cmd->add_option("--zeta", o.zeta, "Qutrit moduli angle in radians");
    cmd->add_option("--zeta-degrees", o.zeta_degrees,
                    "Qutrit moduli angle in degrees");
    cmd->add_option("--pi", o.pi, "Comma-separated kernel spectrum");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Nonclassicality distance indicator for finite-dimensional "
                 "quantum states"};
    app.require_subcommand(1);
    Options o;

    auto *kernel = app.add_subcommand("kernel", "Construct a kernel spectrum");
    add_kernel_flags(kernel, o);
    kernel->add_option("--seed", o.seed, "Random kernel seed (requires --n)");

    auto *indicator =
        app.add_subcommand("indicator", "Distance of a state to the classical set");
    add_kernel_flags(indicator, o);
    indicator->add_option("--seed", o.seed, "Random kernel seed");
    indicator->add_option("--state", o.state, "State JSON file")->required();
    indicator->add_option("--convention", o.convention, "paper | frobenius");

    auto *scan = app.add_subcommand("scan", "Qutrit chamber grid scan to CSV");
    scan->add_option("--zeta", o.zeta, "Qutrit moduli angle in radians");
    scan->add_option("--zeta-degrees", o.zeta_degrees,
                     "Qutrit moduli angle in degrees");
    scan->add_option("--resolution", o.resolution, "Grid points per axis");
    scan->add_option("--output", o.output, "CSV path, '-' for stdout");
    scan->add_option("--convention", o.convention, "paper | frobenius");

    auto *polytope =
        app.add_subcommand("polytope", "Vertices of the positivity polytope");
    add_kernel_flags(polytope, o);
    polytope->add_option("--seed", o.seed, "Random kernel seed (requires --n)");

    auto *sample = app.add_subcommand(
        "sample-min", "Monte-Carlo check of the Wigner floor");
    add_kernel_flags(sample, o);
    sample->add_option("--state", o.state, "State JSON file")->required();
    sample->add_option("--samples", o.samples, "Haar samples")
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", o.seed, "Sampling seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (kernel->parsed()) {
            return run_kernel(o);
        }
        if (indicator->parsed()) {
            return run_indicator(o);
        }
        if (scan->parsed()) {
            return run_scan(o);
        }
        if (polytope->parsed()) {
            return run_polytope(o);
        }
        return run_sample_min(o);
    } catch (const nc::Error &e) {
        std::cerr << "nc: " << e.what() << '\n';
        return e.kind() == nc::ErrorKind::NoConvergence ? kExitNoConvergence
                                                        : kExitInvalid;
    } catch (const std::exception &e) {
        std::cerr << "nc: " << e.what() << '\n';
        return kExitInvalid;
    }
}
