// Command-line front end for the slab-vacuum models.
//
// Usage:
//   casimir <model> [--d N] [--mu X] [--ell X] [--L X] [--b X] [--delta X]
//           [--m X] [--degeneracy X]
//           [--sweep param:start:stop:count:spacing]
//           [--tol X] [--abs-tol X] [--series-tol X]
//           [--format json|csv] [--out PATH]
//
// Exit codes: 0 success, 2 validation error, 3 non-convergence of any point
// (records are still emitted), 4 output I/O failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "casimir/run.hpp"

namespace {

bool parse_sweep(const std::string& text, casimir::SweepSpec& out, std::string& err) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 5) {
        err = "sweep must be param:start:stop:count:spacing";
        return false;
    }
    try {
        out.param = parts[0];
        out.start = std::stod(parts[1]);
        out.stop = std::stod(parts[2]);
        out.count = std::stoi(parts[3]);
    } catch (const std::exception&) {
        err = "sweep has a malformed number in '" + text + "'";
        return false;
    }
    if (parts[4] == "linear") out.log_spacing = false;
    else if (parts[4] == "log") out.log_spacing = true;
    else {
        err = "sweep spacing must be linear or log";
        return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Regularised vacuum energies of fields confined between parallel surfaces"};
    app.get_formatter()->column_width(40);

    std::string model;
    app.add_option("model", model,
                   "dirichlet-scalar | mit-fermion | boson-magnetic | fermion-magnetic | "
                   "kappa-energy | kappa-photon-rate")
        ->required();

    double d = -1, mu = -1, ell = -1, big_l = -1, b = -1, delta = -1, m = -1, degeneracy = -1;
    app.add_option("--d", d, "spatial dimensions (slab models)");
    app.add_option("--mu", mu, "dimensionless mass m*ell");
    app.add_option("--ell", ell, "plate separation");
    app.add_option("--L", big_l, "transverse size L");
    app.add_option("--b", b, "magnetic parameter eB*ell^2");
    app.add_option("--delta", delta, "deformation eta/ell");
    app.add_option("--m", m, "mass (kappa models, inverse length)");
    app.add_option("--degeneracy", degeneracy, "internal degrees of freedom factor");

    std::string sweep_text, format = "json", out_path;
    double tol = -1, abs_tol = -1, series_tol = -1;
    app.add_option("--sweep", sweep_text, "param:start:stop:count:{linear|log}");
    app.add_option("--tol", tol, "quadrature relative tolerance");
    app.add_option("--abs-tol", abs_tol, "quadrature absolute tolerance");
    app.add_option("--series-tol", series_tol, "series relative tolerance");
    app.add_option("--format", format, "json or csv");
    app.add_option("--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    casimir::RunRequest req;
    req.model = model;
    req.output_format = format;
    if (d >= 0) req.params["d"] = d;
    if (mu >= 0) req.params["mu"] = mu;
    if (ell >= 0) req.params["ell"] = ell;
    if (big_l >= 0) req.params["big_l"] = big_l;
    if (b >= 0) req.params["b"] = b;
    if (delta >= 0) req.params["delta"] = delta;
    if (m >= 0) req.params["m"] = m;
    if (degeneracy >= 0) req.params["degeneracy"] = degeneracy;
    if (tol > 0) req.quad.rel_tol = tol;
    if (abs_tol >= 0) req.quad.abs_tol = abs_tol;
    if (series_tol > 0) req.series.rel_tol = series_tol;

    if (!sweep_text.empty()) {
        casimir::SweepSpec sw;
        std::string err;
        if (!parse_sweep(sweep_text, sw, err)) {
            std::cerr << "error: " << err << "\n";
            return 2;
        }
        req.sweep = sw;
    }

    std::vector<casimir::RunRecord> records;
    try {
        records = casimir::run(req);
    } catch (const casimir::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            std::cerr << "error: cannot open output file '" << out_path << "'\n";
            return 4;
        }
        os = &file;
    }
    if (format == "csv") casimir::emit_csv(*os, req, records);
    else casimir::emit_json(*os, req, records);
    os->flush();
    if (!*os) {
        std::cerr << "error: write failure\n";
        return 4;
    }

    for (const auto& r : records)
        if (!r.converged) return 3;
    return 0;
}
