// sweep.hpp — Δ-convergence sweeps: exact effective Hamiltonian vs. the gadget
// target, traceless-part comparison with the identity offset reported aside.

#pragma once

#include "gadgetforge/sw/gadget.hpp"
#include "gadgetforge/util/parallel.hpp"

#include <json.hpp>

#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace gadgetforge::sw {

struct SweepRow {
    double delta = 0;
    double eps = 0;
    double eta = 0;
    double identity_offset = 0;
    bool rank_match = false;
    std::string note;
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double fitted_slope = 0;  // least-squares slope of log eps vs log delta (rank-matched rows)
    bool monotone = false;    // eps strictly decreasing across rank-matched rows
};

inline std::vector<double> log_spaced(double lo, double hi, int n) {
    if (n < 2 || lo <= 0 || hi <= lo) throw std::invalid_argument("log_spaced: need n >= 2, 0 < lo < hi");
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i) out[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return out;
}

inline std::vector<double> default_delta_sweep() { return log_spaced(1e2, 1e10, 9); }

inline Matrix traceless_part(const Matrix& a) {
    return a - (a.trace() / static_cast<double>(a.rows())) * Matrix::Identity(a.rows(), a.cols());
}

inline double spectral_norm(const Matrix& a) { return a.jacobiSvd().singularValues()(0); }

// For each Δ: exact effective Hamiltonian (well-scaled route), ε against the
// gadget target modulo identity, and the isometry-distance proxy η.
inline SweepResult convergence_sweep(const GadgetInstance& g, const std::vector<double>& deltas) {
    const int m = g.split.ground_dim;
    const Matrix h1 = g.h1.to_dense_matrix();
    const Matrix h2 = g.h2.to_dense_matrix();
    const Matrix h3 = g.h3.to_dense_matrix();
    const Matrix h4 = g.h4.to_dense_matrix();
    const Matrix target_tl = traceless_part(g.target_ground);
    const double target_tr = std::real(g.target_ground.trace()) / m;

    SweepResult out;
    out.rows.resize(deltas.size());
    util::parallel_for(static_cast<int>(deltas.size()), [&](int i) {
        const double delta = deltas[i];
        SweepRow row;
        row.delta = delta;
        const Matrix a = scaled_perturbation(h1, h2, h3, h4, delta, g.order);
        const ExactSWResult sw = exact_sw_scaled(g.split, a, delta);
        row.rank_match = sw.rank_match;
        row.note = sw.note;
        if (sw.rank_match) {
            row.eps = spectral_norm(traceless_part(sw.h_eff) - target_tl);
            row.identity_offset = std::real(sw.h_eff.trace()) / m - target_tr;
            row.eta = sw.eta;
        }
        out.rows[i] = std::move(row);
    });

    // slope fit and monotonicity over the usable rows
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int cnt = 0;
    out.monotone = true;
    double prev = -1;
    for (const SweepRow& r : out.rows) {
        if (!r.rank_match) continue;
        if (r.eps <= 0) continue;
        const double x = std::log10(r.delta), y = std::log10(r.eps);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++cnt;
        // ties at the numerical floor do not count as violations
        if (prev >= 0 && r.eps >= prev && r.eps > 1e-13) out.monotone = false;
        prev = r.eps;
    }
    out.fitted_slope = cnt >= 2 ? (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx) : 0.0;
    return out;
}

inline nlohmann::json sweep_to_json(const SweepResult& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : s.rows) {
        nlohmann::json j{{"delta", r.delta}, {"eps", r.eps}, {"eta", r.eta}};
        j["identity_offset"] = r.identity_offset;
        j["rank_match"] = r.rank_match;
        rows.push_back(std::move(j));
    }
    return nlohmann::json{{"rows", rows}, {"fitted_slope", s.fitted_slope}, {"monotone", s.monotone}};
}

inline std::string sweep_table(const SweepResult& s) {
    std::ostringstream os;
    os << std::scientific << std::setprecision(4);
    os << std::setw(12) << "delta" << std::setw(14) << "eps" << std::setw(14) << "eta" << std::setw(16)
       << "id-offset" << std::setw(8) << "ok" << '\n';
    for (const SweepRow& r : s.rows) {
        os << std::setw(12) << r.delta << std::setw(14) << r.eps << std::setw(14) << r.eta << std::setw(16)
           << r.identity_offset << std::setw(8) << (r.rank_match ? "yes" : "no") << '\n';
    }
    os << "fitted slope: " << std::fixed << std::setprecision(4) << s.fitted_slope
       << (s.monotone ? "  (monotone)" : "  (non-monotone)") << '\n';
    return os.str();
}

}  // namespace gadgetforge::sw
