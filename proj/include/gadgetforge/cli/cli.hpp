// cli.hpp — command-line orchestration: classify / gadget / sweep / simcheck /
// maxdcut jobs and the full verification suite, with deterministic JSON
// reports (timestamps live in a separate metadata field).

#pragma once

#include "gadgetforge/cert/simulation.hpp"
#include "gadgetforge/classify/classify.hpp"
#include "gadgetforge/cli/scenario.hpp"
#include "gadgetforge/suite/criteria.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>

namespace gadgetforge::cli {

inline json report_meta() {
    const auto now = std::chrono::system_clock::now().time_since_epoch();
    return json{{"tool", "gadgetforge"},
                {"version", "0.1.0"},
                {"timestamp_unix_ms", std::chrono::duration_cast<std::chrono::milliseconds>(now).count()}};
}

inline std::vector<double> parse_delta_sweep(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw CLI::ValidationError("--delta-sweep expects lo:hi:n");
    return sw::log_spaced(std::stod(spec.substr(0, c1)), std::stod(spec.substr(c1 + 1, c2 - c1 - 1)),
                          std::stoi(spec.substr(c2 + 1)));
}

// ----------------------------- classify ------------------------------------

inline int run_classify(const std::string& in, double tol, const std::string& out) {
    const InteractionSet set = load_interaction_set(load_json(in));
    classify::ClassificationVerdict verdict =
        (set.interactions.size() == 1 && set.interactions[0].arity == 2)
            ? classify::classify_two_qudit(set.interactions[0].op, tol)
            : classify::classify_interaction_set(
                  [&] {
                      std::vector<LocalOperator> ops;
                      for (const auto& it : set.interactions) ops.push_back(it.op);
                      return ops;
                  }(),
                  tol);
    json j = verdict.to_json();
    j["meta"] = report_meta();
    std::cout << "class: " << classify::to_string(verdict.cls) << "  (" << verdict.rule << ")\n";
    if (!out.empty()) write_json(out, j);
    return 0;
}

// ----------------------------- gadget run ----------------------------------

struct GadgetArgs {
    int d = 2;
    double theta = M_PI / 3;
    double alpha = 1.0;
    double beta = 1.0;
    double mu = 1.0;
    double tol = 1e-9;
    std::uint64_t seed = 0;
    std::string delta_sweep;
};

inline int run_gadget(const std::string& name, const GadgetArgs& a, const std::string& out) {
    gadgets::GadgetReport rep;
    std::optional<sw::GadgetInstance> instance;
    if (name == "aklt-su3") {
        auto g = gadgets::aklt_su3_gadget(a.tol);
        rep = g.report;
        instance = std::move(g.instance);
    } else if (name == "sud-logical") {
        rep = gadgets::sud_logical_qubit_gadget(a.d, a.tol).report;
    } else if (name == "sud-coupling") {
        auto g = gadgets::sud_coupling_gadget(a.d, std::max(a.tol, 1e-8));
        rep = g.report;
        if (g.instance) instance = std::move(*g.instance);
    } else if (name == "alt-sud") {
        rep = gadgets::alt_sud_reduction_gadget(a.d, a.mu, a.tol);
    } else if (name == "projector-chain") {
        util::Rng rng(a.seed);
        const Vector psi = util::random_state(static_cast<Index>(a.d) * a.d, rng);
        rep = gadgets::projector_gadget_chain(psi, a.d, a.tol, a.seed).report;
    } else if (name == "h-to-h2") {
        auto g = gadgets::h_to_h2_gadget(a.d, a.alpha, a.beta, a.tol);
        rep = g.report;
        instance = std::move(g.instance);
    } else if (name == "h-to-h2-interference") {
        rep = gadgets::h_to_h2_interference(a.d, a.tol);
    } else if (name == "qutrit-encoding") {
        rep = gadgets::qutrit_encoding_check(a.d, std::min(a.tol, 1e-10));
    } else if (name == "bbq-mediator") {
        rep = gadgets::bbq_mediator_gadget(a.theta, a.alpha, a.beta, a.tol);
    } else if (name == "bbq-logical") {
        rep = gadgets::bbq_logical_gadget(a.theta, a.tol);
    } else {
        std::cerr << "unknown gadget: " << name << "\n";
        return 2;
    }

    json j = rep.to_json();
    if (!a.delta_sweep.empty() && instance) {
        const sw::SweepResult sweep = sw::convergence_sweep(*instance, parse_delta_sweep(a.delta_sweep));
        j["sweep"] = sw::sweep_to_json(sweep);
        std::cout << sw::sweep_table(sweep);
    }
    j["meta"] = report_meta();
    if (!out.empty()) write_json(out, j);
    for (const auto& item : rep.checks.items)
        std::cout << (item.pass ? "pass  " : "FAIL  ") << item.name << "  (residual " << item.residual
                  << ", tol " << item.tolerance << ")\n";
    if (!rep.pass()) {
        for (const auto& item : rep.checks.items)
            if (!item.pass) std::cerr << "check failed: " << item.name << "\n";
        return 1;
    }
    return 0;
}

// ----------------------------- sweep ----------------------------------------

inline int run_sweep(const std::string& gadget, const GadgetArgs& a, const std::string& out) {
    std::optional<sw::GadgetInstance> instance;
    if (gadget == "aklt-su3") {
        instance = gadgets::aklt_su3_gadget(a.tol, std::sqrt(1.0 / 66.0)).instance;
    } else if (gadget == "h-to-h2") {
        instance = gadgets::h_to_h2_gadget(a.d, a.alpha, a.beta, a.tol).instance;
    } else if (gadget == "sud-coupling") {
        auto g = gadgets::sud_coupling_gadget(2, 1e-8);
        if (g.instance) instance = std::move(*g.instance);
    } else if (gadget == "sud-logical") {
        const auto g = gadgets::sud_logical_qubit_gadget(a.d, a.tol);
        instance = gadgets::sud_logical_first_order_instance(g, a.alpha, a.beta);
    } else {
        std::cerr << "no sweepable instance for gadget: " << gadget << "\n";
        return 2;
    }
    const std::vector<double> deltas =
        a.delta_sweep.empty() ? sw::default_delta_sweep() : parse_delta_sweep(a.delta_sweep);
    const sw::SweepResult sweep = sw::convergence_sweep(*instance, deltas);
    std::cout << sw::sweep_table(sweep);
    if (!out.empty()) {
        json j = sw::sweep_to_json(sweep);
        j["gadget"] = gadget;
        j["meta"] = report_meta();
        write_json(out, j);
    }
    return 0;
}

// ----------------------------- simcheck -------------------------------------

inline int run_simcheck(const std::string& hsim_path, const std::string& htarget_path,
                        const std::string& isometry_path, double delta, bool mod_identity,
                        const std::string& out) {
    const ManyBodyOperator hsim = io::operator_from_json(load_json(hsim_path));
    const ManyBodyOperator htarget = io::operator_from_json(load_json(htarget_path));
    const Matrix isometry = io::matrix_from_json(load_json(isometry_path));
    const cert::SimulationReport rep = cert::certify_simulation(hsim, htarget, isometry, delta, mod_identity);
    json j = rep.to_json();
    j["meta"] = report_meta();
    std::cout << "delta " << rep.delta << "  low-space dim " << rep.low_space_dim << "  rank match "
              << (rep.rank_match ? "yes" : "no");
    if (rep.rank_match) std::cout << "  eta " << rep.eta << "  eps " << rep.eps;
    std::cout << "\n";
    if (!out.empty()) write_json(out, j);
    return rep.rank_match ? 0 : 1;
}

// ----------------------------- maxdcut --------------------------------------

inline int run_maxdcut(const std::string& graph_path, int d, Index dense_limit, const std::string& out) {
    const catalog::Graph g = load_graph(load_json(graph_path));
    const ManyBodyOperator H = catalog::max_d_cut_hamiltonian(g, d, dense_limit);
    double ground = 0;
    if (H.is_dense()) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(H.dense(), Eigen::EigenvaluesOnly);
        ground = es.eigenvalues()(0);
    } else {
        auto apply = [&](const Vector& v) { return H.apply(v); };
        const LanczosResult lo = lanczos_extreme(apply, H.dim(), false);
        if (!lo.converged) throw std::runtime_error("maxdcut: sparse eigensolver did not converge");
        ground = lo.value;
    }
    const double classical = catalog::classical_min_uncut(g, d);
    json j{{"d", d},
           {"quantum_ground_energy", ground},
           {"classical_min_uncut_weight", classical},
           {"frustrated", ground > classical + 1e-9}};
    j["meta"] = report_meta();
    std::cout << "quantum ground energy " << ground << ", classical uncut optimum " << classical << "\n";
    if (!out.empty()) write_json(out, j);
    return 0;
}

// ----------------------------- suite -----------------------------------------

inline int run_paper_suite(std::uint64_t seed, const std::string& out) {
    const std::vector<suite::CriterionResult> results = suite::run_acceptance_suite({seed, true});
    bool all = true;
    json arr = json::array();
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  criterion " << r.index << ": " << r.name << "\n";
        if (!r.pass)
            for (const auto& it : r.items)
                if (!it.pass)
                    std::cerr << "  failed: " << it.name << " (residual " << it.residual << ", tol "
                              << it.tolerance << ")\n";
        all = all && r.pass;
        arr.push_back(r.to_json());
    }
    std::cout << (all ? "PASS" : "FAIL") << "  " << results.size() << " criteria\n";
    if (!out.empty()) {
        json j{{"criteria", arr}, {"pass", all}};
        j["meta"] = report_meta();
        write_json(out, j);
    }
    return all ? 0 : 1;
}

// ----------------------------- entry point -----------------------------------

inline int run(int argc, char** argv) {
    CLI::App app{"gadgetforge: qudit Hamiltonian gadgets, classification and simulation certificates"};
    app.require_subcommand(1);

    std::string in, out, graph, hsim, htarget, isometry, gadget_name, sweep_gadget;
    double tol = 1e-9, rank_tol = 1e-8, delta = 1e6;
    Index dense_limit = kDefaultDenseLimit;
    bool mod_identity = false;
    GadgetArgs gargs;

    auto* c_classify = app.add_subcommand("classify", "classify an interaction set");
    c_classify->add_option("--in", in, "interaction-set JSON file")->required();
    c_classify->add_option("--tol", rank_tol, "rank tolerance (relative)");
    c_classify->add_option("--out", out, "verdict JSON output");

    auto* c_gadget = app.add_subcommand("gadget", "build and verify a named gadget");
    auto* c_run = c_gadget->add_subcommand("run", "run a gadget verification");
    c_run->add_option("name", gadget_name, "gadget name")->required();
    c_run->add_option("--d", gargs.d, "local dimension");
    c_run->add_option("--theta", gargs.theta, "interaction angle");
    c_run->add_option("--alpha", gargs.alpha, "linear coefficient");
    c_run->add_option("--beta", gargs.beta, "quadratic coefficient");
    c_run->add_option("--mu", gargs.mu, "coupling ratio (alt-sud)");
    c_run->add_option("--tol", gargs.tol, "closed-form tolerance");
    c_run->add_option("--seed", gargs.seed, "random seed");
    c_run->add_option("--delta-sweep", gargs.delta_sweep, "lo:hi:n convergence sweep");
    c_run->add_option("--out", out, "report JSON output");

    auto* c_sweep = app.add_subcommand("sweep", "convergence sweep for a gadget instance");
    c_sweep->add_option("--gadget", sweep_gadget, "gadget name")->required();
    c_sweep->add_option("--d", gargs.d, "local dimension");
    c_sweep->add_option("--alpha", gargs.alpha, "linear coefficient");
    c_sweep->add_option("--beta", gargs.beta, "quadratic coefficient");
    c_sweep->add_option("--tol", gargs.tol, "closed-form tolerance");
    c_sweep->add_option("--delta-sweep", gargs.delta_sweep, "lo:hi:n (default 1e2:1e10:9)");
    c_sweep->add_option("--out", out, "sweep JSON output");

    auto* c_sim = app.add_subcommand("simcheck", "certify a low-energy simulation");
    c_sim->add_option("--hsim", hsim, "simulator operator JSON")->required();
    c_sim->add_option("--htarget", htarget, "target operator JSON")->required();
    c_sim->add_option("--isometry", isometry, "encoding isometry JSON")->required();
    c_sim->add_option("--delta", delta, "energy cut")->required();
    c_sim->add_flag("--mod-identity", mod_identity, "compare modulo identity");
    c_sim->add_option("--out", out, "report JSON output");

    auto* c_cut = app.add_subcommand("maxdcut", "quantum Max-d-Cut ground energy vs classical cut");
    c_cut->add_option("--graph", graph, "graph JSON file")->required();
    c_cut->add_option("--d", gargs.d, "local dimension");
    c_cut->add_option("--dense-limit", dense_limit, "dense diagonalisation limit");
    c_cut->add_option("--out", out, "report JSON output");

    auto* c_suite = app.add_subcommand("paper-suite", "run every acceptance criterion");
    c_suite->add_option("--seed", gargs.seed, "random seed");
    c_suite->add_option("--out", out, "summary JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (c_classify->parsed()) return run_classify(in, rank_tol, out);
        if (c_gadget->parsed() && c_run->parsed()) return run_gadget(gadget_name, gargs, out);
        if (c_sweep->parsed()) return run_sweep(sweep_gadget, gargs, out);
        if (c_sim->parsed()) return run_simcheck(hsim, htarget, isometry, delta, mod_identity, out);
        if (c_cut->parsed()) return run_maxdcut(graph, gargs.d, dense_limit, out);
        if (c_suite->parsed()) return run_paper_suite(gargs.seed, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace gadgetforge::cli
