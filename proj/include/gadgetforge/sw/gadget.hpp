// gadget.hpp — Perturbative gadget instances: the scaled simulator, the
// order-specific validity conditions, and their diagnostic report.

#pragma once

#include "gadgetforge/sw/effective.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gadgetforge::sw {

struct ConditionItem {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ConditionReport {
    std::vector<ConditionItem> items;
    bool pass = true;

    void add(std::string name, double residual, double tolerance) {
        const bool ok = residual <= tolerance;
        items.push_back({std::move(name), residual, tolerance, ok});
        pass = pass && ok;
    }
};

class gadget_condition_error : public std::runtime_error {
public:
    explicit gadget_condition_error(const ConditionItem& item)
        : std::runtime_error("gadget condition violated: " + item.name + " (residual " +
                             std::to_string(item.residual) + ")"),
          condition(item.name) {}
    std::string condition;
};

// One perturbative gadget, ready for assembly and verification. The h3 slot
// carries the Δ^{1/3}-scaled block-diagonal term for order-3 gadgets.
struct GadgetInstance {
    int order = 0;
    ManyBodyOperator h0, h1, h2, h3, h4;
    BlockSplit split;
    double lambda_bound = 0.0;       // max perturbation norm Λ
    std::vector<int> site_map;       // logical → physical sites
    Matrix target_ground;            // m×m target on the ground block (e_minus basis)
    Matrix encoding;                 // dim×m isometry with range = ground space

    GadgetInstance(int ord, ManyBodyOperator h0_, ManyBodyOperator h1_, ManyBodyOperator h2_,
                   ManyBodyOperator h3_, ManyBodyOperator h4_, BlockSplit split_)
        : order(ord),
          h0(std::move(h0_)),
          h1(std::move(h1_)),
          h2(std::move(h2_)),
          h3(std::move(h3_)),
          h4(std::move(h4_)),
          split(std::move(split_)) {}
};

// Express an operator on the logical register as an m×m block in the split's
// ground basis, through the encoding isometry.
inline Matrix target_on_ground(const BlockSplit& split, const Matrix& encoding, const Matrix& target_logical) {
    const Matrix overlap = split.e_minus.adjoint() * encoding;  // m×m, unitary when ranges agree
    return overlap * target_logical * overlap.adjoint();
}

inline ConditionReport check_gadget_conditions(const GadgetInstance& g, double tolerance = 1e-8) {
    ConditionReport rep;
    const BlockSplit& s = g.split;
    const int m = s.ground_dim;
    const Index k = s.dim - m;
    auto split_of = [&](const ManyBodyOperator& op) { return s.to_split(op.to_dense_matrix()); };
    auto offdiag = [&](const Matrix& a) {
        return std::max(a.topRightCorner(m, k).norm(), a.bottomLeftCorner(k, m).norm());
    };
    const Matrix Rpp = s.plus_eigs.cwiseInverse().asDiagonal().toDenseMatrix().cast<cxd>();

    switch (g.order) {
        case 1:
            break;  // no block conditions at first order
        case 2: {
            const Matrix a1 = split_of(g.h1), a2 = split_of(g.h2);
            rep.add("h1 block-diagonal", offdiag(a1), tolerance);
            rep.add("(h2)_-- = 0", a2.topLeftCorner(m, m).norm(), tolerance);
            break;
        }
        case 3: {
            const Matrix a1 = split_of(g.h1), a2 = split_of(g.h2), a1p = split_of(g.h3);
            rep.add("h1 block-diagonal", offdiag(a1), tolerance);
            rep.add("h1' block-diagonal", offdiag(a1p), tolerance);
            rep.add("(h2)_-- = 0", a2.topLeftCorner(m, m).norm(), tolerance);
            const Matrix lhs = a1p.topLeftCorner(m, m);
            const Matrix rhs = a2.topRightCorner(m, k) * Rpp * a2.bottomLeftCorner(k, m);
            rep.add("(h1')_-- = (h2)_-+ R (h2)_+-", (lhs - rhs).norm(), tolerance);
            break;
        }
        case 4: {
            const Matrix a2 = split_of(g.h2), a3 = split_of(g.h3), a4 = split_of(g.h4);
            rep.add("h2 block-diagonal", offdiag(a2), tolerance);
            rep.add("h3 block-diagonal", offdiag(a3), tolerance);
            rep.add("(h4)_-- = 0", a4.topLeftCorner(m, m).norm(), tolerance);
            const Matrix h4r = a4.topRightCorner(m, k) * Rpp;
            const Matrix second = h4r * a4.bottomLeftCorner(k, m);
            rep.add("(h2)_-- = Pi_- h4 R h4 Pi_-", (a2.topLeftCorner(m, m) - second).norm(), tolerance);
            const Matrix third = h4r * a4.bottomRightCorner(k, k) * Rpp * a4.bottomLeftCorner(k, m);
            rep.add("(h3)_-- = -Pi_- h4 R h4 R h4 Pi_-", (a3.topLeftCorner(m, m) + third).norm(), tolerance);
            break;
        }
        default:
            throw std::invalid_argument("check_gadget_conditions: order must be 1..4");
    }
    if (g.lambda_bound > 0) {
        double worst = 0;
        for (const ManyBodyOperator* op : {&g.h1, &g.h2, &g.h3, &g.h4})
            if (op->dim() > 0) worst = std::max(worst, operator_norm(*op));
        rep.add("perturbation norms within Lambda", std::max(0.0, worst - g.lambda_bound),
                1e-9 * std::max(1.0, g.lambda_bound));
    }
    return rep;
}

// ΔH0 + the order-scaled perturbations, after validating the conditions.
inline ManyBodyOperator assemble_simulator(const GadgetInstance& g, double delta, double tolerance = 1e-8) {
    const ConditionReport rep = check_gadget_conditions(g, tolerance);
    for (const ConditionItem& item : rep.items)
        if (!item.pass) throw gadget_condition_error(item);
    ManyBodyOperator sim = g.h0 * cxd(delta) + g.h1;
    switch (g.order) {
        case 1:
            break;
        case 2:
            sim = sim + g.h2 * cxd(std::sqrt(delta));
            break;
        case 3:
            sim = sim + g.h2 * cxd(std::pow(delta, 2.0 / 3.0)) + g.h3 * cxd(std::cbrt(delta));
            break;
        case 4:
            sim = sim + g.h4 * cxd(std::pow(delta, 0.75)) + g.h2 * cxd(std::sqrt(delta)) +
                  g.h3 * cxd(std::pow(delta, 0.25));
            break;
        default:
            throw std::invalid_argument("assemble_simulator: order must be 1..4");
    }
    return sim;
}

}  // namespace gadgetforge::sw
