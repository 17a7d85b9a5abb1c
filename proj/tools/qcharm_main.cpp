// qcharm command-line front end.
//
// Subcommands: construct | verify | radius | counterexample | plot.
// Exit codes: 0 success / all checks pass, 1 a verified bound is violated,
// 2 invalid parameters, 3 unreadable or unwritable files.

#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcharm/bounds.hpp"
#include "qcharm/mapping.hpp"
#include "qcharm/mapping_io.hpp"
#include "qcharm/radii.hpp"
#include "qcharm/render.hpp"

namespace {

using nlohmann::json;
using namespace qcharm;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBadParams = 2;
constexpr int kExitIo = 3;

struct ConstructArgs {
    double alpha = 0.0;
    bool has_alpha = false;
    double lambda_re = 0.0;
    double lambda_im = 0.0;
    int n = 1;
    int order = kDefaultOrder;
    std::string schwarz_monomial;  // "c,m"
    int h_extremal_k = 0;
    double h_beta = 0.0;
    std::string h_coeffs_path;
    std::string output;
};

struct VerifyArgs {
    std::string mapping_path;
    std::string checks = "coeff,fekete,growth,area,distort,tail";
    std::string r_grid = "0.25,0.5,0.75,0.9";
};

struct CounterexampleArgs {
    double beta = 0.0;
    double s = 0.0;
    bool has_s = false;
};

struct PlotArgs {
    std::string mapping_path;
    RenderSpec spec;
    std::string format = "svg";
};

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(std::stod(item));
    }
    return out;
}

ComplexSeries load_coeff_series(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open coefficient file '" + path + "'");
    json j;
    in >> j;
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("coefficient file must hold a non-empty list of [re, im]");
    std::vector<Complex> c;
    for (const auto& item : j) c.emplace_back(item.at(0).get<double>(), item.at(1).get<double>());
    return ComplexSeries(std::move(c));
}

int run_construct(const ConstructArgs& a) {
    HarmonicMapping mapping{ComplexSeries::zero(0), ComplexSeries::zero(0), std::nullopt};
    const Complex lambda(a.lambda_re, a.lambda_im);

    if (!a.schwarz_monomial.empty()) {
        if (!a.has_alpha) throw std::invalid_argument("--schwarz-monomial requires --alpha");
        const auto comma = a.schwarz_monomial.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("--schwarz-monomial expects 'c,m'");
        const double c = std::stod(a.schwarz_monomial.substr(0, comma));
        const int m = std::stoi(a.schwarz_monomial.substr(comma + 1));
        const ClassParams params(a.alpha, lambda, a.n);
        mapping = from_schwarz(SchwarzFunction::monomial(Complex(c), m, a.order), params, a.order);
    } else if (a.h_extremal_k != 0) {
        if (!a.has_alpha) throw std::invalid_argument("--h-extremal requires --alpha");
        mapping = couple_g(extremal_h(a.h_extremal_k, a.alpha, a.order),
                           ClassParams(a.alpha, lambda, a.n));
    } else if (a.h_beta != 0.0) {
        ComplexSeries h = counterexample_h(a.h_beta, a.order);
        mapping = HarmonicMapping{h, ComplexSeries::zero(h.order()), std::nullopt};
    } else {
        ComplexSeries h = load_coeff_series(a.h_coeffs_path);
        if (a.has_alpha) {
            mapping = couple_g(h, ClassParams(a.alpha, lambda, a.n));
        } else {
            mapping = HarmonicMapping{h, ComplexSeries::zero(h.order()), std::nullopt};
            validate_mapping(mapping);
        }
    }

    save_mapping(mapping, a.output);

    json summary{{"output", a.output}, {"order", mapping.h.order()}};
    const double max_re = membership_max_re(mapping.h);
    summary["membership_max_re"] = max_re;
    if (mapping.params) {
        summary["K"] = qc_constant(*mapping.params);
        summary["membership_sampled_ok"] = max_re < mapping.params->alpha;
    } else {
        summary["K"] = nullptr;
        summary["membership_sampled_ok"] =
            a.has_alpha ? json(max_re < a.alpha) : json(nullptr);
    }
    std::cout << summary.dump() << '\n';
    return kExitOk;
}

int run_verify(const VerifyArgs& a) {
    const HarmonicMapping f = load_mapping(a.mapping_path, /*strict=*/false);
    std::set<std::string> checks;
    {
        std::stringstream ss(a.checks);
        std::string item;
        while (std::getline(ss, item, ',')) checks.insert(item);
    }
    const std::vector<double> radii_grid = parse_double_list(a.r_grid);

    std::vector<BoundReport> reports;
    if (f.params) {
        if (checks.count("coeff")) {
            reports.push_back(check_coeff_a(f));
            reports.push_back(check_coeff_b(f));
        }
        if (checks.count("fekete") && f.params->n == 1) {
            for (double delta : {-2.0, -1.0, 0.0, 1.0, 2.0})
                reports.push_back(check_fekete_szego(f, delta));
        }
        for (double r : radii_grid) {
            if (checks.count("growth")) {
                auto [lo, hi] = check_growth(f, r);
                reports.push_back(lo);
                reports.push_back(hi);
            }
            if (checks.count("area")) {
                auto [lo, hi] = check_area(f, r);
                reports.push_back(lo);
                reports.push_back(hi);
            }
            if (checks.count("distort")) {
                auto [lo, hi] = check_distortion(f, r);
                reports.push_back(lo);
                reports.push_back(hi);
            }
            if (checks.count("tail")) {
                for (int split : {2, 3, 4}) reports.push_back(check_tail_deriv(f, split, r));
            }
        }
    }

    bool all_ok = true;
    for (const BoundReport& r : reports) {
        std::cout << json(r).dump() << '\n';
        if (r.satisfied && !*r.satisfied) all_ok = false;
    }
    return all_ok ? kExitOk : kExitViolation;
}

int run_radius(const std::string& equation) {
    EquationId id;
    if (equation == "r1") id = EquationId::R1;
    else if (equation == "r2") id = EquationId::R2;
    else if (equation == "r3") id = EquationId::R3;
    else if (equation == "r4") id = EquationId::R4;
    else if (equation == "rc") id = EquationId::RC;
    else throw std::invalid_argument("--equation must be one of r1,r2,r3,r4,rc");
    std::cout << to_json(solve_radius(id)).dump() << '\n';
    return kExitOk;
}

int run_counterexample(const CounterexampleArgs& a) {
    const std::optional<double> s = a.has_s ? std::optional<double>(a.s) : std::nullopt;
    const auto [z1, z2] = collision_pair(a.beta, s);
    const double used_s = std::abs(Complex(1.0) - z1);
    const double value_diff =
        std::abs(counterexample_value(a.beta, z1) - counterexample_value(a.beta, z2));
    const double point_dist = std::abs(z1 - z2);
    json cert{{"beta", a.beta},
              {"s", used_s},
              {"z1", {z1.real(), z1.imag()}},
              {"z2", {z2.real(), z2.imag()}},
              {"value_diff", value_diff},
              {"point_dist", point_dist}};
    std::cout << cert.dump() << '\n';
    return (value_diff < 1e-10 && point_dist > 1e-2) ? kExitOk : kExitViolation;
}

int run_plot(PlotArgs& a) {
    const HarmonicMapping f = load_mapping(a.mapping_path, /*strict=*/false);
    if (a.format == "svg") a.spec.format = ImageFormat::SVG;
    else if (a.format == "ppm") a.spec.format = ImageFormat::PPM;
    else throw std::invalid_argument("--format must be svg or ppm");
    render_mapping(f, a.spec);
    std::cout << json{{"output", a.spec.output_path}}.dump() << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct, verify and draw quasiconformal close-to-convex harmonic mappings"};
    app.require_subcommand(1);

    ConstructArgs cons;
    CLI::App* construct = app.add_subcommand("construct", "Build a mapping and write it as JSON");
    CLI::Option* alpha_opt = construct->add_option("--alpha", cons.alpha, "alpha in (1, 3/2]");
    construct->add_option("--lambda-re", cons.lambda_re, "Re(lambda)");
    construct->add_option("--lambda-im", cons.lambda_im, "Im(lambda)");
    construct->add_option("--n", cons.n, "coupling degree n >= 1");
    construct->add_option("--order", cons.order, "series truncation order");
    auto* source = construct->add_option_group("source", "analytic-part source");
    source->add_option("--schwarz-monomial", cons.schwarz_monomial,
                       "'c,m': integral representation with w(t) = c t^m");
    source->add_option("--h-extremal", cons.h_extremal_k,
                       "k >= 2: coefficient-bound extremal analytic part");
    source->add_option("--h-beta", cons.h_beta,
                       "beta in (2,3): non-univalent example (free-form, g = 0)");
    source->add_option("--h-coeffs", cons.h_coeffs_path, "JSON file with h coefficients");
    source->require_option(1);
    construct->add_option("-o,--output", cons.output, "mapping JSON path")->required();

    VerifyArgs ver;
    CLI::App* verify = app.add_subcommand("verify", "Run bound checks; one JSON line each");
    verify->add_option("--mapping", ver.mapping_path, "mapping JSON path")->required();
    verify->add_option("--checks", ver.checks, "comma list: coeff,fekete,growth,area,distort,tail");
    verify->add_option("--r", ver.r_grid, "comma list of radii in (0,1)");

    std::string equation;
    CLI::App* radius = app.add_subcommand("radius", "Solve a partial-sum radius equation");
    radius->add_option("--equation", equation, "one of r1,r2,r3,r4,rc")->required();

    CounterexampleArgs cex;
    CLI::App* counterexample =
        app.add_subcommand("counterexample", "Collision certificate for the non-univalent example");
    counterexample->add_option("--beta", cex.beta, "beta in (2,3)")->required();
    CLI::Option* s_opt = counterexample->add_option("--s", cex.s, "ray parameter; default cos(pi/beta)");

    PlotArgs plot;
    CLI::App* plot_cmd = app.add_subcommand("plot", "Render the image of the disk");
    plot_cmd->add_option("--mapping", plot.mapping_path, "mapping JSON path")->required();
    plot_cmd->add_option("--rings", plot.spec.rings, "concentric circles");
    plot_cmd->add_option("--spokes", plot.spec.spokes, "radial lines");
    plot_cmd->add_option("--max-radius", plot.spec.max_radius, "outermost source radius < 1");
    plot_cmd->add_option("--samples", plot.spec.samples_per_curve, "samples per curve (>= 64)");
    plot_cmd->add_option("--format", plot.format, "svg or ppm");
    plot_cmd->add_option("--width", plot.spec.width, "raster width (ppm)");
    plot_cmd->add_option("--height", plot.spec.height, "raster height (ppm)");
    plot_cmd->add_option("-o,--output", plot.spec.output_path, "image path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadParams;
    }
    cons.has_alpha = alpha_opt->count() > 0;
    cex.has_s = s_opt->count() > 0;

    try {
        if (app.got_subcommand(construct)) return run_construct(cons);
        if (app.got_subcommand(verify)) return run_verify(ver);
        if (app.got_subcommand(radius)) return run_radius(equation);
        if (app.got_subcommand(counterexample)) return run_counterexample(cex);
        if (app.got_subcommand(plot_cmd)) return run_plot(plot);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    }
    return kExitBadParams;
}
