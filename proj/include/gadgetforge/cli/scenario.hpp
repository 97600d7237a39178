// scenario.hpp — JSON scenario files consumed by the CLI: interaction sets,
// graphs, and the named-interaction resolver.

#pragma once

#include "gadgetforge/catalog/assembly.hpp"
#include "gadgetforge/core/json_io.hpp"

#include <fstream>
#include <string>
#include <vector>

namespace gadgetforge::cli {

using nlohmann::json;

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    json j;
    in >> j;
    return j;
}

inline void write_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << j.dump(2) << '\n';
}

inline catalog::Interaction resolve_interaction(const json& spec, int d) {
    const std::string name = spec.at("name").get<std::string>();
    std::vector<double> params;
    if (spec.contains("params"))
        for (const auto& p : spec.at("params")) params.push_back(p.get<double>());
    if (name == "heisenberg_sud") return catalog::heisenberg_sud(d);
    if (name == "alt_heisenberg_sud") return catalog::alt_heisenberg_sud(d);
    if (name == "heisenberg_su2") return catalog::heisenberg_su2(d);
    if (name == "sym_projector") return catalog::sym_projector(d);
    if (name == "aklt") return catalog::aklt_interaction();
    if (name == "bilinear_biquadratic") {
        if (params.empty()) throw std::runtime_error("bilinear_biquadratic needs params: [theta]");
        return catalog::bilinear_biquadratic(params[0]);
    }
    if (name == "state_projector") {
        if (!spec.contains("state")) throw std::runtime_error("state_projector needs a 'state' vector");
        const Vector psi = io::vector_from_json(spec.at("state"));
        return catalog::state_projector(psi, d);
    }
    if (name == "matrix") {
        if (!spec.contains("matrix")) throw std::runtime_error("explicit interaction needs 'matrix'");
        const ManyBodyOperator op = io::operator_from_json(spec.at("matrix"));
        if (op.local_dim() != d) throw std::runtime_error("interaction matrix has a different local dimension");
        return {"matrix", d, op.n_sites(), LocalOperator(d, op.n_sites(), op.to_dense_matrix()), params, false};
    }
    throw std::runtime_error("unknown interaction name: " + name);
}

struct InteractionSet {
    int d = 0;
    std::vector<catalog::Interaction> interactions;
    catalog::WeightedTermList terms;  // optional assembly section
};

// {"d": int, "interactions": [{"name", "params", "matrix"?, "state"?}, ...],
//  "terms": [{"i": [sites], "w": weight, "ref": index-or-name}, ...]}
inline InteractionSet load_interaction_set(const json& j) {
    InteractionSet set;
    set.d = j.at("d").get<int>();
    for (const auto& spec : j.at("interactions")) set.interactions.push_back(resolve_interaction(spec, set.d));
    if (j.contains("terms")) {
        int n_sites = 0;
        for (const auto& t : j.at("terms"))
            for (const auto& s : t.at("i")) n_sites = std::max(n_sites, s.get<int>() + 1);
        set.terms.n_sites = j.contains("n") ? j.at("n").get<int>() : n_sites;
        set.terms.local_dim = set.d;
        for (const auto& t : j.at("terms")) {
            std::vector<int> sites;
            for (const auto& s : t.at("i")) sites.push_back(s.get<int>());
            const double w = t.contains("w") ? t.at("w").get<double>() : 1.0;
            std::size_t ref = 0;
            if (t.contains("ref")) {
                if (t.at("ref").is_number()) {
                    ref = t.at("ref").get<std::size_t>();
                } else {
                    const std::string name = t.at("ref").get<std::string>();
                    ref = set.interactions.size();
                    for (std::size_t k = 0; k < set.interactions.size(); ++k)
                        if (set.interactions[k].name == name) ref = k;
                }
            }
            if (ref >= set.interactions.size()) throw std::runtime_error("term references an unknown interaction");
            set.terms.terms.push_back({set.interactions[ref], sites, w});
        }
    }
    return set;
}

// {"n": int, "edges": [[i, j, w], ...]}
inline catalog::Graph load_graph(const json& j) {
    catalog::Graph g;
    g.n_vertices = j.at("n").get<int>();
    for (const auto& e : j.at("edges"))
        g.edges.emplace_back(e[0].get<int>(), e[1].get<int>(), e.size() > 2 ? e[2].get<double>() : 1.0);
    return g;
}

}  // namespace gadgetforge::cli
