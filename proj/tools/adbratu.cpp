// Licensed under the Apache License, Version 2.0 (the "License"); you
// may not use this file except in compliance with the License.  You
// may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied.  See the License for the specific language governing
// permissions and limitations under the License.

// Command-line harness around the differentiation engine: computes the
// Jacobian of the discretized explosion benchmark in any mode, prints the
// classic listings, and cross-verifies all modes against finite differences.

#include "adkit/bratu.hpp"
#include "adkit/coloring.hpp"
#include "adkit/finite_difference.hpp"
#include "adkit/forward_dense.hpp"
#include "adkit/forward_sparse.hpp"
#include "adkit/render.hpp"
#include "adkit/tape.hpp"
#include "adkit/tape_drivers.hpp"
#include "adkit/tape_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_bad_arguments = 2;
constexpr int exit_evaluation_error = 3;
constexpr int exit_io_error = 4;

struct Request {
    std::string mode;
    std::size_t dim = 7;
    double s = adkit::bratu_fixture_s;
    double t = adkit::bratu_fixture_t;
    std::string state_file;
    std::string format = "text";
    std::string tape_file;
    std::string save_tape_file;
};

std::vector<double> request_state(const Request& request)
{
    if (request.state_file.empty()) {
        return adkit::bratu_default_state(request.dim);
    }
    std::vector<double> state = adkit::load_state_file(request.state_file);
    if (state.size() != request.dim) {
        throw adkit::DimensionMismatch("state file holds " + std::to_string(state.size())
                                       + " values but --dim is " + std::to_string(request.dim));
    }
    return state;
}

std::vector<double> with_params(const Request& request, const std::vector<double>& state)
{
    std::vector<double> v = state;
    v.push_back(request.s);
    v.push_back(request.t);
    return v;
}

void print_matrix(const adkit::Matrix& m, adkit::OutputFormat format, const char* mode)
{
    switch (format) {
    case adkit::OutputFormat::Text:
        std::cout << adkit::render_matrix_text(m);
        break;
    case adkit::OutputFormat::Csv:
        std::cout << adkit::render_matrix_csv(m);
        break;
    case adkit::OutputFormat::Json:
        std::cout << adkit::render_matrix_json(m, mode);
        break;
    }
}

int run_dense(const Request& request)
{
    const adkit::BratuProblem problem(request.dim, request.s, request.t);
    const adkit::BratuResidual f(problem, true);
    const std::vector<double> v = with_params(request, request_state(request));
    const adkit::Matrix jac = adkit::dense_jacobian(f, v);
    print_matrix(jac, adkit::parse_output_format(request.format), "dense");
    return exit_ok;
}

int run_compressed(const Request& request)
{
    const adkit::BratuProblem problem(request.dim, request.s, request.t);
    const adkit::BratuResidual f(problem, true);
    const std::vector<double> v = with_params(request, request_state(request));

    const adkit::SparsityPattern pattern = adkit::pattern_jacobian(f, v);
    const adkit::CompressedJacobian compressed = adkit::compressed_jacobian(f, v, pattern);
    const adkit::SeedMatrix seed = adkit::build_cpr_seed(compressed.coloring);
    const auto reconstructed = adkit::reconstruct(compressed);

    const adkit::OutputFormat format = adkit::parse_output_format(request.format);
    if (format == adkit::OutputFormat::Json) {
        nlohmann::json doc;
        doc["mode"] = "compressed";
        doc["colors"] = compressed.coloring.num_colors;
        doc["column_colors"] = compressed.coloring.color;
        doc["seed"] = nlohmann::json::parse(adkit::render_matrix_json(seed, "seed"))["entries"];
        doc["compressed"] =
            nlohmann::json::parse(adkit::render_matrix_json(compressed.b, "b"))["entries"];
        doc["reconstructed"] = nlohmann::json::parse(
            adkit::render_sparse_json(reconstructed, pattern.cols, "rows"))["entries"];
        std::cout << doc.dump(2) << '\n';
        return exit_ok;
    }

    std::cout << "colors: " << compressed.coloring.num_colors << '\n';
    std::cout << "column colors:";
    for (std::size_t c : compressed.coloring.color) {
        std::cout << ' ' << c;
    }
    std::cout << '\n';
    std::cout << "seed (" << seed.rows() << "x" << seed.cols() << "):\n";
    std::cout << adkit::render_seed_text(seed);
    std::cout << "compressed jacobian (" << compressed.b.rows() << "x" << compressed.b.cols()
              << "):\n";
    if (format == adkit::OutputFormat::Csv) {
        std::cout << adkit::render_matrix_csv(compressed.b);
        std::cout << "reconstructed rows:\n" << adkit::render_sparse_csv(reconstructed);
    } else {
        std::cout << adkit::render_matrix_text(compressed.b);
        std::cout << "reconstructed rows:\n" << adkit::render_sparse_text(reconstructed);
    }
    return exit_ok;
}

int run_sparse(const Request& request)
{
    const adkit::BratuProblem problem(request.dim, request.s, request.t);
    const adkit::BratuResidual f(problem, false);
    const std::vector<double> x = request_state(request);
    const auto rows = adkit::sparse_jacobian(f, x);
    switch (adkit::parse_output_format(request.format)) {
    case adkit::OutputFormat::Text:
        std::cout << adkit::render_sparse_text(rows);
        break;
    case adkit::OutputFormat::Csv:
        std::cout << adkit::render_sparse_csv(rows);
        break;
    case adkit::OutputFormat::Json:
        std::cout << adkit::render_sparse_json(rows, request.dim, "sparse");
        break;
    }
    return exit_ok;
}

int run_pattern(const Request& request)
{
    const adkit::BratuProblem problem(request.dim, request.s, request.t);
    const adkit::BratuResidual f(problem, true);
    const std::vector<double> v = with_params(request, request_state(request));
    const adkit::SparsityPattern pattern = adkit::pattern_jacobian(f, v);
    switch (adkit::parse_output_format(request.format)) {
    case adkit::OutputFormat::Text:
        std::cout << adkit::render_pattern_text(pattern);
        break;
    case adkit::OutputFormat::Csv:
        std::cout << adkit::render_pattern_csv(pattern);
        break;
    case adkit::OutputFormat::Json:
        std::cout << adkit::render_pattern_json(pattern, "pattern");
        break;
    }
    return exit_ok;
}

adkit::Tape reverse_tape(const Request& request, const std::vector<double>& v)
{
    if (!request.tape_file.empty()) {
        return adkit::load_tape(request.tape_file, 1);
    }
    const adkit::BratuProblem problem(request.dim, request.s, request.t);
    return adkit::record_tape(1, adkit::BratuResidual(problem, true), v);
}

int run_reverse(const Request& request)
{
    const std::vector<double> v = with_params(request, request_state(request));
    const adkit::Tape tape = reverse_tape(request, v);
    if (!request.save_tape_file.empty()) {
        adkit::save_tape(tape, request.save_tape_file);
    }
    if (tape.num_independents() != v.size()) {
        throw adkit::DimensionMismatch("tape independents do not match --dim plus parameters");
    }

    // row-by-row accumulation: one vector-times-Jacobian product per output
    const std::size_t m = tape.num_dependents();
    adkit::Matrix jac(m, tape.num_independents());
    std::vector<double> weight(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        weight[i] = 1.0;
        const std::vector<double> row = adkit::vec_jac(tape, v, weight);
        weight[i] = 0.0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            jac(i, j) = row[j];
        }
    }
    print_matrix(jac, adkit::parse_output_format(request.format), "reverse");
    return exit_ok;
}

int run_verify(const Request& request)
{
    const adkit::BratuProblem problem(request.dim, request.s, request.t);
    const std::vector<double> x = request_state(request);
    const std::vector<double> v = with_params(request, x);
    const std::size_t dim = request.dim;

    const adkit::BratuResidual f(problem, true);
    const adkit::BratuResidual f_x(problem, false);

    const adkit::Matrix dense = adkit::dense_jacobian(f, v);

    const adkit::SparsityPattern pattern = adkit::pattern_jacobian(f, v);
    const auto compressed = adkit::compressed_jacobian(f, v, pattern);
    adkit::Matrix reconstructed(dim, dim + 2);
    for (std::size_t i = 0; const adkit::SparseDerivative& row : adkit::reconstruct(compressed)) {
        for (const adkit::SparseEntry& e : row.entries()) {
            reconstructed(i, e.index - 1) = e.value;
        }
        ++i;
    }

    adkit::Matrix sparse(dim, dim);
    for (std::size_t i = 0; const adkit::SparseDerivative& row : adkit::sparse_jacobian(f_x, x)) {
        for (const adkit::SparseEntry& e : row.entries()) {
            sparse(i, e.index - 1) = e.value;
        }
        ++i;
    }

    const adkit::Tape tape = adkit::record_tape(1, f, v);
    adkit::TapeEvaluator evaluator(tape);
    const adkit::Matrix tape_forward =
        evaluator.fov_forward(v, adkit::Matrix::identity(dim + 2)).jacobian_product;
    const adkit::Matrix tape_reverse = evaluator.fov_reverse(adkit::Matrix::identity(dim));

    const adkit::Matrix fd = adkit::fd_jacobian(f, v);

    struct Route {
        const char* name;
        const adkit::Matrix* jacobian;
    };
    const std::vector<Route> routes = {
        { "dense forward", &dense },
        { "compressed+reconstruct", &reconstructed },
        { "sparse forward", &sparse },
        { "tape fov_forward", &tape_forward },
        { "tape fov_reverse", &tape_reverse },
    };

    // the sparse route covers the x block only
    auto entry = [&](const adkit::Matrix& m, std::size_t i,
                     std::size_t j) -> std::optional<double> {
        if (m.cols() == dim && j >= dim) {
            return std::nullopt;
        }
        return m(i, j);
    };

    double worst_ad = 0.0;
    double worst_fd = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim + 2; ++j) {
            for (std::size_t a = 0; a < routes.size(); ++a) {
                const auto left = entry(*routes[a].jacobian, i, j);
                if (!left) {
                    continue;
                }
                worst_fd = std::max(worst_fd, std::abs(*left - fd(i, j)));
                for (std::size_t b = a + 1; b < routes.size(); ++b) {
                    const auto right = entry(*routes[b].jacobian, i, j);
                    if (!right) {
                        continue;
                    }
                    const double scale = std::max({ 1.0, std::abs(*left), std::abs(*right) });
                    worst_ad = std::max(worst_ad, std::abs(*left - *right) / scale);
                }
            }
        }
    }

    std::printf("routes compared: %zu (x block only for sparse forward)\n", routes.size());
    std::printf("max AD-vs-AD relative deviation: %.3e (threshold 1e-10)\n", worst_ad);
    std::printf("max AD-vs-FD absolute deviation: %.3e (threshold 1e-4)\n", worst_fd);
    const bool passed = worst_ad <= 1e-10 && worst_fd <= 1e-4;
    std::printf("verification %s\n", passed ? "PASSED" : "FAILED");
    return passed ? exit_ok : exit_verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app { "Jacobians of the discretized explosion benchmark in five modes" };
    Request request;
    app.add_option("--mode", request.mode, "dense|compressed|sparse|pattern|reverse|verify")
        ->required()
        ->check(CLI::IsMember({ "dense", "compressed", "sparse", "pattern", "reverse", "verify" }));
    app.add_option("--dim", request.dim, "number of interior grid points (default 7)")
        ->check(CLI::Range(std::size_t { 2 }, std::size_t { 10000000 }));
    app.add_option("--s", request.s, "source strength parameter (default 1.3)");
    app.add_option("--t", request.t, "source saturation parameter (default 0.245828)");
    app.add_option("--state", request.state_file,
                   "state vector file, one value per line (default: built-in profile)");
    app.add_option("--format", request.format, "text|csv|json (default text)")
        ->check(CLI::IsMember({ "text", "csv", "json" }));
    app.add_option("--tape", request.tape_file, "replay a saved tape instead of retracing");
    app.add_option("--save-tape", request.save_tape_file, "write the recorded tape to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_bad_arguments;
    }

    try {
        if (request.mode == "dense") {
            return run_dense(request);
        }
        if (request.mode == "compressed") {
            return run_compressed(request);
        }
        if (request.mode == "sparse") {
            return run_sparse(request);
        }
        if (request.mode == "pattern") {
            return run_pattern(request);
        }
        if (request.mode == "reverse") {
            return run_reverse(request);
        }
        return run_verify(request);
    } catch (const adkit::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const adkit::FormatError& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return exit_io_error;
    } catch (const adkit::DimensionMismatch& e) {
        std::cerr << "bad request: " << e.what() << '\n';
        return exit_bad_arguments;
    } catch (const adkit::Error& e) {
        std::cerr << "evaluation error: " << e.what() << '\n';
        return exit_evaluation_error;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_evaluation_error;
    }
}
