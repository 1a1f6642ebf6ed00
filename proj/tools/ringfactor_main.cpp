/*
   Copyright 2026 the ringfactor authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <complex>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"

#include "ringfactor/elementary.hpp"
#include "ringfactor/exponential.hpp"
#include "ringfactor/json_io.hpp"
#include "ringfactor/riemann.hpp"

using namespace ringfactor;

namespace {

constexpr int kExitVerifyFailed = 1;
constexpr int kExitInputError = 2;

std::string default_output(const std::string& input, const std::string& suffix) {
    auto dot = input.rfind('.');
    std::string stem = dot == std::string::npos ? input : input.substr(0, dot);
    return stem + suffix;
}

struct GridFlags {
    double tol = 1e-8;
    int grid_n = 200;
    double radius = 2.0;
    int near_root_points = 20;
    uint64_t seed = 0;
    int extra_samples = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tol", tol, "verification tolerance for the product residual")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--grid-n", grid_n, "number of disk sample points")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--radius", radius, "sampling disk radius")->check(CLI::PositiveNumber);
        cmd->add_option("--near-root-points", near_root_points,
                        "stress points near each denominator root");
        cmd->add_option("--seed", seed, "seed for the extra random sample points");
        cmd->add_option("--extra-samples", extra_samples,
                        "seeded random sample points added to the grid");
    }

    SampleGrid grid() const {
        SampleGrid g;
        g.disk_points = grid_n;
        g.radius = radius;
        g.near_root_points = near_root_points;
        if (extra_samples > 0) {
            std::mt19937_64 eng(seed);
            std::uniform_real_distribution<double> unit(0.0, 1.0);
            for (int k = 0; k < extra_samples; ++k) {
                double r = radius * std::sqrt(unit(eng));
                double th = 2.0 * 3.14159265358979323846 * unit(eng);
                g.extra.emplace_back(r * std::cos(th), r * std::sin(th));
            }
        }
        return g;
    }
};

void print_residuals(const ExpVerification& v) {
    std::cout << std::setprecision(17);
    std::cout << "product residual:      " << v.product_residual << "\n"
              << "discriminant residual: " << v.discriminant_residual << "\n"
              << "trace-sign residual:   " << v.trace_sign_residual << "\n"
              << "det-exp residual:      " << v.det_exp_residual << "\n";
}

/// Reads a matrix file, optionally reinterpreting it over another ring.
RingMatrix load_matrix(const std::string& input, const std::string& ring_override) {
    auto j = io::read_json_file(input);
    if (!ring_override.empty()) {
        try {
            j["ring"] = io::json::parse(ring_override);
        } catch (const std::exception&) {
            j["ring"] = ring_override; // bare ring names are not valid JSON
        }
    }
    return io::matrix_from_json(j);
}

int run_factor(const std::string& input, std::string output, const std::string& algorithm,
               const std::string& ring_override) {
    RingMatrix x = load_matrix(input, ring_override);
    FactorizationCertificate cert = [&] {
        if (algorithm == "gauss") return factor_field_gauss(x);
        if (algorithm == "euclid") return factor_euclidean(x);
        return x.dim() == 2 ? factor_bsr1_sl2(x) : factor_bsr1_sln(x);
    }();
    if (output.empty()) output = default_output(input, ".cert.json");
    io::write_json_file(output, io::factorization_to_json(cert));
    auto report = verify_factorization(cert);
    std::cout << "algorithm: " << cert.algorithm << "\n"
              << "factors:   " << cert.factors.size() << "\n"
              << "verify:    " << report.summary() << "\n"
              << "wrote " << output << "\n";
    return report.pass ? 0 : kExitVerifyFailed;
}

int run_exp_factor(const std::string& input, std::string output,
                   const std::string& ring_override) {
    RingMatrix x = load_matrix(input, ring_override);
    ExpCertificate cert = det(x).is_one() ? sl_to_exponentials(x) : gl_to_exponentials(x);
    if (output.empty()) output = default_output(input, ".cert.json");
    io::write_json_file(output, io::exp_certificate_to_json(cert));
    bool ok = replay_exp_certificate(cert) && exp_certificate_shape_ok(cert);
    std::cout << "logs:   " << cert.logs.size() << "\n"
              << "verify: " << (ok ? "PASS (exact replay)" : "FAIL") << "\n"
              << "wrote " << output << "\n";
    return ok ? 0 : kExitVerifyFailed;
}

int run_three_exp(const std::string& input, std::string output, const GridFlags& flags,
                  const std::string& ring_override) {
    RingMatrix x = load_matrix(input, ring_override);
    ThreeExpCertificate cert = three_exp_sl2(x);
    if (output.empty()) output = default_output(input, ".cert.json");
    io::write_json_file(output, io::three_exp_to_json(cert));
    auto v = verify_exp_certificate(cert, flags.grid());
    print_residuals(v);
    VerifyTolerances tol;
    tol.product = flags.tol;
    std::cout << "wrote " << output << "\n";
    return v.pass(tol) ? 0 : kExitVerifyFailed;
}

int run_homotopy(const std::string& input, std::string output, int grid_n, double radius,
                 double tol) {
    RingMatrix x = io::matrix_from_json(io::read_json_file(input));
    FuncMatrix f = func_matrix_from_poly(x);
    NullHomotopy path(f);
    if (output.empty()) output = default_output(input, ".path.csv");

    std::ofstream csv(output);
    if (!csv) fail(Errc::ParseError, "cannot open '" + output + "' for writing");
    csv << std::setprecision(17);
    const size_t n = path.dim();
    csv << "t,z_re,z_im";
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            csv << ",e" << i + 1 << j + 1 << "_re,e" << i + 1 << j + 1 << "_im";
    csv << ",det_residual\n";

    double worst = 0.0;
    for (int ti = 0; ti < grid_n; ++ti) {
        double t = grid_n == 1 ? 1.0 : static_cast<double>(ti) / (grid_n - 1);
        for (int zi = 0; zi < grid_n; ++zi) {
            double r = radius * std::sqrt((zi + 0.5) / grid_n);
            double th = zi * 2.39996322972865332;
            cplx z(r * std::cos(th), r * std::sin(th));
            auto v = path.eval(t, z);
            std::vector<cplx> w = v;
            cplx dt = 1.0;
            for (size_t k = 0; k < n; ++k) {
                size_t piv = k;
                for (size_t i = k + 1; i < n; ++i)
                    if (std::abs(w[i * n + k]) > std::abs(w[piv * n + k])) piv = i;
                if (piv != k) {
                    for (size_t j = 0; j < n; ++j) std::swap(w[piv * n + j], w[k * n + j]);
                    dt = -dt;
                }
                dt *= w[k * n + k];
                if (w[k * n + k] == cplx(0.0)) break;
                for (size_t i = k + 1; i < n; ++i) {
                    cplx mfac = w[i * n + k] / w[k * n + k];
                    for (size_t j = k; j < n; ++j) w[i * n + j] -= mfac * w[k * n + j];
                }
            }
            double resid = std::abs(dt - 1.0);
            worst = std::max(worst, resid);
            csv << t << "," << z.real() << "," << z.imag();
            for (cplx e : v) csv << "," << e.real() << "," << e.imag();
            csv << "," << resid << "\n";
        }
    }
    std::cout << std::setprecision(17) << "max det residual: " << worst << "\n"
              << "wrote " << output << "\n";
    return worst <= tol ? 0 : kExitVerifyFailed;
}

int run_verify(const std::string& input, const GridFlags& flags) {
    auto j = io::read_json_file(input);
    if (!j.is_object()) fail(Errc::ParseError, "certificate file must hold a JSON object");
    if (j.contains("factors")) {
        auto cert = io::factorization_from_json(j);
        auto report = verify_factorization(cert);
        std::cout << report.summary() << "\n";
        return report.pass ? 0 : kExitVerifyFailed;
    }
    if (j.contains("alpha_log")) {
        auto cert = io::three_exp_from_json(j);
        auto v = verify_exp_certificate(cert, flags.grid());
        print_residuals(v);
        VerifyTolerances tol;
        tol.product = flags.tol;
        bool ok = v.pass(tol);
        std::cout << (ok ? "PASS" : "FAIL") << "\n";
        return ok ? 0 : kExitVerifyFailed;
    }
    if (j.contains("logs")) {
        auto cert = io::exp_certificate_from_json(j);
        bool ok = replay_exp_certificate(cert);
        std::cout << (ok ? "PASS (exact replay)" : "FAIL: product of exponentials differs")
                  << "\n";
        return ok ? 0 : kExitVerifyFailed;
    }
    fail(Errc::ParseError, "unrecognized certificate layout (no 'factors' or 'logs' field)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact elementary/unipotent factorization of SL_n/GL_n matrices over "
                 "commutative rings, with exponential-product certificates"};
    app.require_subcommand(1);

    std::string input, output, algorithm = "bsr1", ring_override;
    GridFlags flags;
    int homotopy_grid = 50;
    double homotopy_radius = 1.0, homotopy_tol = 1e-12;

    auto* factor = app.add_subcommand("factor", "factor an SL_n matrix into unipotent factors");
    factor->add_option("input", input, "matrix JSON file")->required();
    factor->add_option("-o,--output", output, "certificate path (default <input>.cert.json)");
    factor->add_option("--algorithm", algorithm, "bsr1 | gauss | euclid")
        ->check(CLI::IsMember({"bsr1", "gauss", "euclid"}));
    factor->add_option("--ring", ring_override,
                       "reinterpret the entries over this ring descriptor");

    auto* expf = app.add_subcommand("exp-factor",
                                    "write a matrix as a product of exponentials (exact rings)");
    expf->add_option("input", input, "matrix JSON file")->required();
    expf->add_option("-o,--output", output, "certificate path");
    expf->add_option("--ring", ring_override,
                     "reinterpret the entries over this ring descriptor");

    auto* three = app.add_subcommand("three-exp",
                                     "3-exponential certificate for SL2 polynomial matrices");
    three->add_option("input", input, "matrix JSON file")->required();
    three->add_option("-o,--output", output, "certificate path");
    three->add_option("--ring", ring_override,
                      "reinterpret the entries over this ring descriptor");
    flags.attach(three);

    auto* hom = app.add_subcommand("homotopy", "sample the contraction path to the identity");
    hom->add_option("input", input, "matrix JSON file")->required();
    hom->add_option("-o,--output", output, "CSV path (default <input>.path.csv)");
    hom->add_option("--grid-n", homotopy_grid, "grid resolution in t and z")
        ->check(CLI::PositiveNumber);
    hom->add_option("--radius", homotopy_radius, "disk radius for z samples")
        ->check(CLI::PositiveNumber);
    hom->add_option("--tol", homotopy_tol, "determinant residual tolerance")
        ->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "re-check a certificate file");
    verify->add_option("input", input, "certificate JSON file")->required();
    flags.attach(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (factor->parsed()) return run_factor(input, output, algorithm, ring_override);
        if (expf->parsed()) return run_exp_factor(input, output, ring_override);
        if (three->parsed()) return run_three_exp(input, output, flags, ring_override);
        if (hom->parsed())
            return run_homotopy(input, output, homotopy_grid, homotopy_radius, homotopy_tol);
        if (verify->parsed()) return run_verify(input, flags);
    } catch (const RingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
