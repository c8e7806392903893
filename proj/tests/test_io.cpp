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


#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>

#include "catch_helpers.hpp"
#include "nc/io.hpp"
#include "nc/wigner.hpp"
#include "test_support.hpp"

using Catch::Approx;
using namespace nc;
using nc::testing::require_kind;
using nlohmann::json;

TEST_CASE("parse_state spectrum payload", "[io]") {
    const io::StateInput in =
        io::parse_state(json::parse(R"({"n": 3, "spectrum": [0.1, 0.7, 0.2]})"));
    REQUIRE(in.n == 3);
    REQUIRE(in.spectrum.has_value());
    REQUIRE_FALSE(in.matrix.has_value());
    const Spectrum s = in.to_spectrum();
    REQUIRE(s[0] == 0.7);
    REQUIRE(s[2] == 0.1);
    const HermitianMatrix m = in.to_matrix();
    REQUIRE(m.entries()(1, 1).real() == 0.2);
    REQUIRE(m.entries()(0, 1) == Complex(0.0, 0.0));
}

TEST_CASE("parse_state matrix payload", "[io]") {
    const json doc = json::parse(R"({
        "n": 2,
        "matrix_re": [[0.5, 0.0], [0.0, 0.5]],
        "matrix_im": [[0.0, 0.5], [-0.5, 0.0]]
    })");
    const io::StateInput in = io::parse_state(doc);
    REQUIRE(in.matrix.has_value());
    const Spectrum s = in.to_spectrum();
    REQUIRE(s[0] == Approx(1.0).margin(1e-12));
    REQUIRE(s[1] == Approx(0.0).margin(1e-12));

    // Round trip through a conjugated qutrit state.
    Rng rng = make_rng(5);
    const Spectrum r = testing::random_spectrum(3, rng);
    const HermitianMatrix rho = testing::conjugated(r.values(), haar_unitary(3, rng));
    json re = json::array();
    json im = json::array();
    for (int i = 0; i < 3; ++i) {
        json rr = json::array();
        json ii = json::array();
        for (int j = 0; j < 3; ++j) {
            rr.push_back(rho.entries()(i, j).real());
            ii.push_back(rho.entries()(i, j).imag());
        }
        re.push_back(rr);
        im.push_back(ii);
    }
    const Spectrum back = io::parse_state({{"n", 3}, {"matrix_re", re}, {"matrix_im", im}})
                              .to_spectrum();
    REQUIRE(euclidean_distance(back.values(), r.values()) <= 1e-12);
}

TEST_CASE("parse_state rejects bad documents", "[io]") {
    const auto reject = [](ErrorKind kind, const char *text) {
        INFO(text);
        require_kind(kind, [&] { (void)io::parse_state(json::parse(text)); });
    };
    reject(ErrorKind::InvalidArgument, R"([1, 2])");
    reject(ErrorKind::InvalidArgument, R"({"spectrum": [1, 0]})");
    reject(ErrorKind::InvalidArgument, R"({"n": 1, "spectrum": [1]})");
    reject(ErrorKind::InvalidArgument, R"({"n": 2})");
    reject(ErrorKind::InvalidArgument,
           R"({"n": 2, "spectrum": [1, 0], "matrix_re": [[1,0],[0,0]], "matrix_im": [[0,0],[0,0]]})");
    reject(ErrorKind::InvalidArgument, R"({"n": 2, "matrix_re": [[1,0],[0,0]]})");
    reject(ErrorKind::InvalidArgument, R"({"n": 2, "spectrum": ["a", 0]})");
    reject(ErrorKind::InvalidArgument,
           R"({"n": 2, "matrix_re": [[1,0]], "matrix_im": [[0,0],[0,0]]})");
    reject(ErrorKind::DimensionMismatch, R"({"n": 3, "spectrum": [0.5, 0.5]})");
    reject(ErrorKind::NotAState, R"({"n": 2, "spectrum": [0.7, 0.7]})");
    reject(ErrorKind::NotAState, R"({"n": 2, "spectrum": [1.5, -0.5]})");
    reject(ErrorKind::NonHermitian,
           R"({"n": 2, "matrix_re": [[0.5,0.1],[0.0,0.5]], "matrix_im": [[0,0],[0,0]]})");
    reject(ErrorKind::NotAState,
           R"({"n": 2, "matrix_re": [[1.5,0],[0,-0.5]], "matrix_im": [[0,0],[0,0]]})");
}

TEST_CASE("load_state_file", "[io]") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto good = dir / "nc_io_good.json";
    const auto bad = dir / "nc_io_bad.json";
    std::ofstream(good) << R"({"n": 3, "spectrum": [1, 0, 0]})";
    std::ofstream(bad) << R"({"n": 3, "spectrum": [1, 0, )";
    REQUIRE(io::load_state_file(good).to_spectrum()[0] == 1.0);
    require_kind(ErrorKind::InvalidArgument, [&] { (void)io::load_state_file(bad); });
    require_kind(ErrorKind::InvalidArgument,
                 [&] { (void)io::load_state_file(dir / "nc_io_missing.json"); });
    std::filesystem::remove(good);
    std::filesystem::remove(bad);
}

TEST_CASE("parse_number_list", "[io]") {
    REQUIRE(io::parse_number_list("2.0,0.5,-0.5,-1.0") ==
            std::vector<double>{2.0, 0.5, -0.5, -1.0});
    REQUIRE(io::parse_number_list("1, 1, \xE2\x88\x92" "1") ==
            std::vector<double>{1.0, 1.0, -1.0});
    REQUIRE(io::parse_number_list("1e-3") == std::vector<double>{1e-3});
    require_kind(ErrorKind::InvalidArgument, [] { (void)io::parse_number_list(""); });
    require_kind(ErrorKind::InvalidArgument, [] { (void)io::parse_number_list("1,,2"); });
    require_kind(ErrorKind::InvalidArgument, [] { (void)io::parse_number_list("1,x"); });
    require_kind(ErrorKind::InvalidArgument, [] { (void)io::parse_number_list("1,"); });
}

TEST_CASE("format_float", "[io]") {
    REQUIRE(io::format_float(0.0) == "0");
    REQUIRE(io::format_float(-0.0) == "0");
    REQUIRE(io::format_float(0.25) == "0.25");
    REQUIRE(io::format_float(-1.0) == "-1");
    REQUIRE(io::format_float(1.0 / 3.0) == "0.333333333333");
    REQUIRE(io::format_float(1e-20) == "1e-20");
    REQUIRE(io::format_float(std::sqrt(3.0) / 2.0) == "0.866025403784");
}

TEST_CASE("resolve_kernel", "[io]") {
    const KernelSpectrum k = io::resolve_kernel({.zeta = 0.0});
    REQUIRE(k[0] == Approx(1.0).margin(1e-15));
    REQUIRE(k[2] == Approx(-1.0).margin(1e-15));
    REQUIRE(io::resolve_kernel({.n = 3, .zeta = 0.5})[0] == qutrit_kernel(0.5)[0]);
    REQUIRE(io::resolve_kernel({.pi = std::vector<double>{1.0, 1.0, -1.0}})[2] == -1.0);
    REQUIRE(io::resolve_kernel({.n = 5, .seed = 2}).values().size() == 5);

    require_kind(ErrorKind::InvalidArgument, [] { (void)io::resolve_kernel({}); });
    require_kind(ErrorKind::InvalidArgument,
                 [] { (void)io::resolve_kernel({.zeta = 0.0, .seed = 1}); });
    require_kind(ErrorKind::InvalidArgument, [] { (void)io::resolve_kernel({.seed = 1}); });
    require_kind(ErrorKind::DimensionMismatch,
                 [] { (void)io::resolve_kernel({.n = 4, .zeta = 0.0}); });
    require_kind(ErrorKind::DimensionMismatch, [] {
        (void)io::resolve_kernel({.n = 4, .pi = std::vector<double>{1.0, 1.0, -1.0}});
    });
    require_kind(ErrorKind::MasterEquationViolated, [] {
        (void)io::resolve_kernel({.n = 4, .pi = std::vector<double>{2.0, 0.5, -0.5, -1.0}});
    });
    require_kind(ErrorKind::ModuliOutOfRange, [] { (void)io::resolve_kernel({.zeta = 2.0}); });
}

TEST_CASE("json outputs", "[io]") {
    const io::Json kj = io::kernel_json(qutrit_kernel(0.0));
    REQUIRE(kj["pi"].size() == 3);
    REQUIRE(kj.contains("residual_trace"));
    REQUIRE(kj.contains("residual_square"));

    const io::Json pj = io::polytope_json(positivity_polytope(qutrit_kernel(kZetaMax)));
    REQUIRE(pj["n"] == 3);
    REQUIRE(pj["vertices"].size() == 3);
    REQUIRE(pj["chart_vertices"].size() == 3);
    REQUIRE(pj["chart_vertices"][1][1].get<double>() == Approx(0.25).margin(1e-12));
    REQUIRE_FALSE(io::polytope_json(positivity_polytope(random_kernel(4, 1)))
                      .contains("chart_vertices"));

    const io::Json ij = io::indicator_json(qutrit_distance({0.0, 0.5}, kZetaMax));
    const std::vector<std::string> keys{"w", "classical", "distance_paper",
                                        "distance_frobenius", "region",
                                        "nearest_spectrum", "convention", "distance"};
    std::vector<std::string> got;
    for (const auto &item : ij.items()) {
        got.push_back(item.key());
    }
    REQUIRE(got == keys);
    REQUIRE(ij["region"] == "AQT");
    REQUIRE(ij["classical"] == false);
    REQUIRE(ij["convention"] == "paper");

    const io::Json gj = io::indicator_json(
        distance_general(Spectrum({1.0, 0.0, 0.0, 0.0}), random_kernel(4, 0)));
    REQUIRE(gj["region"].is_null());
}
