#pragma once

// Model dispatch for the command-line front end: request validation,
// parameter sweeps, and JSON/CSV emission.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "casimir/kappa.hpp"
#include "casimir/kernel.hpp"
#include "casimir/magnetic.hpp"
#include "casimir/quadrature.hpp"

namespace casimir {

inline constexpr const char* schema_version = "1";

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    std::string param;
    double start = 0.0;
    double stop = 0.0;
    int count = 2;
    bool log_spacing = false;
};

struct RunRequest {
    std::string model; // dirichlet-scalar, mit-fermion, boson-magnetic,
                       // fermion-magnetic, kappa-energy, kappa-photon-rate
    std::map<std::string, double> params;
    std::optional<SweepSpec> sweep;
    QuadratureSpec quad;
    SeriesSpec series;
    std::string output_format = "json"; // json or csv
};

struct RunRecord {
    std::string model;
    std::map<std::string, double> params; // resolved, defaults included
    double value = 0.0;                   // physical energy, or S
    double dimensionless = 0.0;           // e0, or S * ell^3 / L^2
    double error_estimate = 0.0;
    bool converged = false;
    long evaluations = 0;
    double wall_time_ms = 0.0;
    std::string note;
};

namespace run_detail {

inline double get(const std::map<std::string, double>& p, const std::string& key, double dflt) {
    auto it = p.find(key);
    return it == p.end() ? dflt : it->second;
}

inline bool has(const std::map<std::string, double>& p, const std::string& key) {
    return p.find(key) != p.end();
}

inline void require_positive(const std::map<std::string, double>& p, const std::string& key) {
    if (!has(p, key) || !(p.at(key) > 0.0))
        throw ValidationError("parameter '" + key + "' must be provided and > 0");
}

inline RunRecord run_single(const RunRequest& req, std::map<std::string, double> params) {
    RunRecord rec;
    rec.model = req.model;
    const auto t0 = std::chrono::steady_clock::now();

    if (req.model == "dirichlet-scalar" || req.model == "mit-fermion") {
        SlabConfig cfg;
        cfg.d = static_cast<int>(get(params, "d", 3));
        cfg.mu = get(params, "mu", 0.0);
        cfg.ell = get(params, "ell", 1.0);
        cfg.big_l = get(params, "big_l", 1.0);
        if (cfg.d < 1) throw ValidationError("parameter 'd' must be >= 1");
        if (cfg.mu < 0) throw ValidationError("parameter 'mu' must be >= 0");
        if (!(cfg.ell > 0)) throw ValidationError("parameter 'ell' must be > 0");
        if (!(cfg.big_l > 0)) throw ValidationError("parameter 'big_l' must be > 0");
        BoundaryKernel kernel;
        double degen;
        if (req.model == "dirichlet-scalar") {
            degen = get(params, "degeneracy", 1.0);
            kernel = dirichlet_scalar_kernel();
        } else {
            degen = get(params, "degeneracy", default_fermion_degeneracy(cfg.d));
            kernel = mit_fermion_kernel(cfg.mu);
        }
        if (!(degen > 0)) throw ValidationError("parameter 'degeneracy' must be > 0");
        kernel.degeneracy = degen;
        params["d"] = cfg.d;
        params["mu"] = cfg.mu;
        params["ell"] = cfg.ell;
        params["big_l"] = cfg.big_l;
        params["degeneracy"] = degen;
        const EnergyResult r = casimir_energy_slab(kernel, cfg, req.quad);
        rec.value = r.energy;
        rec.dimensionless = r.dimensionless_energy;
        rec.error_estimate = r.error_estimate;
        rec.converged = r.converged;
        rec.evaluations = r.evaluations;
    } else if (req.model == "boson-magnetic" || req.model == "fermion-magnetic") {
        require_positive(params, "b");
        MagneticConfig cfg;
        cfg.b = params.at("b");
        cfg.mu = get(params, "mu", 0.0);
        cfg.ell = get(params, "ell", 1.0);
        cfg.big_l = get(params, "big_l", 1.0);
        if (cfg.mu < 0) throw ValidationError("parameter 'mu' must be >= 0");
        if (!(cfg.ell > 0)) throw ValidationError("parameter 'ell' must be > 0");
        if (!(cfg.big_l > 0)) throw ValidationError("parameter 'big_l' must be > 0");
        params["mu"] = cfg.mu;
        params["ell"] = cfg.ell;
        params["big_l"] = cfg.big_l;
        const EnergyResult r = (req.model == "boson-magnetic")
                                   ? boson_energy_magnetic(cfg, req.series)
                                   : fermion_energy_magnetic(cfg, req.series, req.quad);
        rec.value = r.energy;
        rec.dimensionless = r.dimensionless_energy;
        rec.error_estimate = r.error_estimate;
        rec.converged = r.converged;
        rec.evaluations = r.evaluations;
    } else if (req.model == "kappa-energy" || req.model == "kappa-photon-rate") {
        require_positive(params, "delta");
        KappaConfig cfg;
        cfg.ell = get(params, "ell", 1.0);
        cfg.big_l = get(params, "big_l", 1.0);
        cfg.m = get(params, "m", 0.0);
        if (!(cfg.ell > 0)) throw ValidationError("parameter 'ell' must be > 0");
        if (!(cfg.big_l > 0)) throw ValidationError("parameter 'big_l' must be > 0");
        if (cfg.m < 0) throw ValidationError("parameter 'm' must be >= 0");
        cfg.eta = params.at("delta") * cfg.ell;
        params["ell"] = cfg.ell;
        params["big_l"] = cfg.big_l;
        params["m"] = cfg.m;
        if (req.model == "kappa-energy") {
            const EnergyResult r = kappa_casimir_energy(cfg, req.quad);
            rec.value = r.energy;
            rec.dimensionless = r.dimensionless_energy;
            rec.error_estimate = r.error_estimate;
            rec.converged = r.converged;
            rec.evaluations = r.evaluations;
        } else {
            const double s = photon_rate(cfg, req.series, req.quad);
            rec.converged = true;
            if (s < 1e-100) {
                rec.value = 0.0;
                rec.dimensionless = 0.0;
                rec.note = "underflow: S below 1e-100 reported as 0";
            } else {
                rec.value = s;
                rec.dimensionless = s * std::pow(cfg.ell, 3) / (cfg.big_l * cfg.big_l);
            }
        }
    } else {
        throw ValidationError("unknown model '" + req.model + "'");
    }

    rec.params = std::move(params);
    rec.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

inline int worker_threads() {
    const char* env = std::getenv("CASIMIR_THREADS");
    if (!env) return 1;
    const int n = std::atoi(env);
    return n <= 0 ? 1 : n;
}

} // namespace run_detail

/// Expand the sweep (if any) and compute one record per point.  Sweep points
/// may run on CASIMIR_THREADS workers; records come back in sweep order.
inline std::vector<RunRecord> run(const RunRequest& req) {
    req.quad.validate();
    req.series.validate();
    if (req.output_format != "json" && req.output_format != "csv")
        throw ValidationError("parameter 'format' must be json or csv");

    std::vector<std::map<std::string, double>> points;
    if (req.sweep) {
        const SweepSpec& sw = *req.sweep;
        if (sw.count < 2) throw ValidationError("parameter 'sweep' requires count >= 2");
        if (!(sw.start < sw.stop)) throw ValidationError("parameter 'sweep' requires start < stop");
        if (sw.log_spacing && !(sw.start > 0.0))
            throw ValidationError("parameter 'sweep' with log spacing requires start > 0");
        for (int i = 0; i < sw.count; ++i) {
            const double f = static_cast<double>(i) / (sw.count - 1);
            const double v = sw.log_spacing
                                 ? sw.start * std::pow(sw.stop / sw.start, f)
                                 : sw.start + (sw.stop - sw.start) * f;
            auto p = req.params;
            p[sw.param] = v;
            points.push_back(std::move(p));
        }
    } else {
        points.push_back(req.params);
    }

    std::vector<RunRecord> records(points.size());
    const int nthreads = std::min<int>(run_detail::worker_threads(), static_cast<int>(points.size()));
    if (nthreads <= 1) {
        for (std::size_t i = 0; i < points.size(); ++i)
            records[i] = run_detail::run_single(req, points[i]);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&, t] {
                try {
                    for (std::size_t i = t; i < points.size(); i += nthreads)
                        records[i] = run_detail::run_single(req, points[i]);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }
    return records;
}

namespace run_detail {

inline std::string num17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') (out += '\\') += c;
        else if (c == '\n') out += "\\n";
        else out += c;
    }
    return out;
}

} // namespace run_detail

/// JSON: one top-level object {schema_version, request, records:[...]};
/// numbers carry 17 significant digits.
inline void emit_json(std::ostream& os, const RunRequest& req, const std::vector<RunRecord>& records) {
    using run_detail::json_escape;
    using run_detail::num17;
    os << "{\n  \"schema_version\": \"" << schema_version << "\",\n";
    os << "  \"request\": {\"model\": \"" << json_escape(req.model) << "\", \"params\": {";
    bool first = true;
    for (const auto& [k, v] : req.params) {
        if (!first) os << ", ";
        os << "\"" << json_escape(k) << "\": " << num17(v);
        first = false;
    }
    os << "}";
    if (req.sweep) {
        os << ", \"sweep\": {\"param\": \"" << json_escape(req.sweep->param) << "\", \"start\": "
           << num17(req.sweep->start) << ", \"stop\": " << num17(req.sweep->stop)
           << ", \"count\": " << req.sweep->count << ", \"spacing\": \""
           << (req.sweep->log_spacing ? "log" : "linear") << "\"}";
    }
    os << "},\n  \"records\": [\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RunRecord& r = records[i];
        os << "    {\"model\": \"" << json_escape(r.model) << "\", \"params\": {";
        first = true;
        for (const auto& [k, v] : r.params) {
            if (!first) os << ", ";
            os << "\"" << json_escape(k) << "\": " << num17(v);
            first = false;
        }
        os << "}, \"value\": " << num17(r.value) << ", \"dimensionless\": " << num17(r.dimensionless)
           << ", \"error_estimate\": " << num17(r.error_estimate)
           << ", \"converged\": " << (r.converged ? "true" : "false")
           << ", \"evaluations\": " << r.evaluations
           << ", \"wall_time_ms\": " << run_detail::num17(r.wall_time_ms);
        if (!r.note.empty()) os << ", \"note\": \"" << json_escape(r.note) << "\"";
        os << "}" << (i + 1 < records.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
}

/// CSV: header row names the swept parameter (or "point") plus value, error,
/// and convergence columns; one data row per record.
inline void emit_csv(std::ostream& os, const RunRequest& req, const std::vector<RunRecord>& records) {
    using run_detail::num17;
    const std::string swept = req.sweep ? req.sweep->param : "point";
    os << swept << ",dimensionless,value,error_estimate,converged,evaluations,wall_time_ms\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
        const RunRecord& r = records[i];
        const double x = req.sweep ? r.params.at(req.sweep->param) : static_cast<double>(i);
        os << num17(x) << "," << num17(r.dimensionless) << "," << num17(r.value) << ","
           << num17(r.error_estimate) << "," << (r.converged ? "true" : "false") << ","
           << r.evaluations << "," << num17(r.wall_time_ms) << "\n";
    }
}

} // namespace casimir
