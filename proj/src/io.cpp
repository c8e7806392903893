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

#include "nc/io.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "nc/error.hpp"

namespace nc::io {

namespace {

[[noreturn]] void schema_error(const std::string &what) {
    throw Error(ErrorKind::InvalidArgument, "state file: " + what);
}

std::vector<std::vector<double>> read_rows(const nlohmann::json &doc,
                                           const char *key, std::size_t n) {
    const auto &m = doc.at(key);
    if (!m.is_array() || m.size() != n) {
        schema_error(std::string(key) + " must be an n x n array");
    }
    std::vector<std::vector<double>> rows;
    for (const auto &row : m) {
        if (!row.is_array() || row.size() != n) {
            schema_error(std::string(key) + " must be an n x n array");
        }
        std::vector<double> r;
        for (const auto &v : row) {
            if (!v.is_number()) {
                schema_error(std::string(key) + " entries must be numbers");
            }
            r.push_back(v.get<double>());
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace

Spectrum StateInput::to_spectrum() const {
    if (spectrum) {
        return Spectrum(*spectrum);
    }
    return spectrum_from_matrix(*matrix);
}

HermitianMatrix StateInput::to_matrix() const {
    if (matrix) {
        return *matrix;
    }
    const Spectrum s(*spectrum);
    return HermitianMatrix::diagonal(s.values());
}

StateInput parse_state(const nlohmann::json &doc) {
    if (!doc.is_object()) {
        schema_error("top level must be an object");
    }
    if (!doc.contains("n") || !doc["n"].is_number_integer() ||
        doc["n"].get<long long>() < 2) {
        schema_error("\"n\" must be an integer >= 2");
    }
    const auto n = static_cast<std::size_t>(doc["n"].get<long long>());
    const bool has_spectrum = doc.contains("spectrum");
    const bool has_re = doc.contains("matrix_re");
    const bool has_im = doc.contains("matrix_im");
    if (has_re != has_im) {
        schema_error("matrix_re and matrix_im must appear together");
    }
    if (has_spectrum == has_re) {
        schema_error("exactly one of \"spectrum\" or "
                     "\"matrix_re\"/\"matrix_im\" is required");
    }

    StateInput in;
    in.n = n;
    if (has_spectrum) {
        const auto &s = doc["spectrum"];
        if (!s.is_array()) {
            schema_error("\"spectrum\" must be an array");
        }
        std::vector<double> values;
        for (const auto &v : s) {
            if (!v.is_number()) {
                schema_error("spectrum entries must be numbers");
            }
            values.push_back(v.get<double>());
        }
        if (values.size() != n) {
            throw Error(ErrorKind::DimensionMismatch,
                        "spectrum has " + std::to_string(values.size()) +
                            " entries, n is " + std::to_string(n));
        }
        // Validate now so that errors surface at load time.
        (void)Spectrum(values);
        in.spectrum = std::move(values);
        return in;
    }

    const auto re = read_rows(doc, "matrix_re", n);
    const auto im = read_rows(doc, "matrix_im", n);
    const auto k = static_cast<Eigen::Index>(n);
    ComplexMatrix m(k, k);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                Complex(re[i][j], im[i][j]);
        }
    }
    in.matrix.emplace(std::move(m));
    (void)spectrum_from_matrix(*in.matrix);
    return in;
}

StateInput load_state_file(const std::filesystem::path &path) {
    std::ifstream file(path);
    if (!file) {
        throw Error(ErrorKind::InvalidArgument,
                    "cannot open state file " + path.string());
    }
    nlohmann::json doc;
    try {
        file >> doc;
    } catch (const nlohmann::json::parse_error &e) {
        schema_error(std::string("malformed JSON: ") + e.what());
    }
    return parse_state(doc);
}

KernelSpectrum resolve_kernel(const KernelArgs &args) {
    const int chosen = static_cast<int>(args.zeta.has_value()) +
                       static_cast<int>(args.pi.has_value()) +
                       static_cast<int>(args.seed.has_value());
    if (chosen != 1) {
        throw Error(ErrorKind::InvalidArgument,
                    "specify exactly one of --zeta/--zeta-degrees, --pi or "
                    "--seed for the kernel");
    }
    if (args.zeta) {
        if (args.n && *args.n != 3) {
            throw Error(ErrorKind::DimensionMismatch,
                        "--zeta selects a qutrit kernel and requires n = 3");
        }
        return qutrit_kernel(*args.zeta);
    }
    if (args.pi) {
        return kernel_from_spectrum(*args.pi, args.n.value_or(args.pi->size()));
    }
    if (!args.n) {
        throw Error(ErrorKind::InvalidArgument, "--seed requires --n");
    }
    return random_kernel(*args.n, *args.seed);
}

std::vector<double> parse_number_list(std::string_view text) {
    std::string clean;
    clean.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
        if (i + 2 < text.size() &&
            static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            clean.push_back('-');
            i += 2;
        } else if (text[i] != ' ') {
            clean.push_back(text[i]);
        }
    }
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= clean.size()) {
        const std::size_t end = std::min(clean.find(',', start), clean.size());
        const std::string token = clean.substr(start, end - start);
        char *stop = nullptr;
        const double v = std::strtod(token.c_str(), &stop);
        if (token.empty() || stop != token.c_str() + token.size()) {
            throw Error(ErrorKind::InvalidArgument,
                        "cannot parse number '" + token + "'");
        }
        out.push_back(v);
        start = end + 1;
    }
    return out;
}

std::string format_float(double v) {
    if (v == 0.0) {
        return "0";
    }
    char buf[32];
    for (int precision = 1; precision <= 12; ++precision) {
        std::snprintf(buf, sizeof buf, "%.*g", precision, v);
        if (std::strtod(buf, nullptr) == v) {
            return buf;
        }
    }
    return buf;
}

Json kernel_json(const KernelSpectrum &kernel) {
    Json j;
    j["pi"] = std::vector<double>(kernel.values().begin(),
                                  kernel.values().end());
    j["residual_trace"] = kernel.residual_trace();
    j["residual_square"] = kernel.residual_square();
    return j;
}

Json polytope_json(const Polytope &poly) {
    Json j;
    j["n"] = poly.n;
    Json verts = Json::array();
    for (const Spectrum &v : poly.vertices) {
        verts.push_back(std::vector<double>(v.values().begin(),
                                            v.values().end()));
    }
    j["vertices"] = std::move(verts);
    if (poly.n == 3) {
        Json chart = Json::array();
        for (const Spectrum &v : poly.vertices) {
            const QutritChart c = chart_from_spectrum(v);
            chart.push_back({c.xi3, c.xi8});
        }
        j["chart_vertices"] = std::move(chart);
    }
    return j;
}

Json indicator_json(const IndicatorResult &result) {
    Json j;
    j["w"] = result.floor;
    j["classical"] = result.classical;
    j["distance_paper"] = result.distance_paper;
    j["distance_frobenius"] = result.distance_frobenius;
    if (result.region) {
        j["region"] = std::string(to_string(*result.region));
    } else {
        j["region"] = nullptr;
    }
    j["nearest_spectrum"] = std::vector<double>(result.nearest.values().begin(),
                                                result.nearest.values().end());
    j["convention"] = std::string(to_string(result.convention));
    j["distance"] = result.distance();
    return j;
}

} // namespace nc::io
