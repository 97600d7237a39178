// classify.hpp — The universality decision for interactions and interaction
// sets: either everything reduces to tensor powers of a common rank-1 witness
// form (the stoquastic class) or the set is universal with free 1-local terms.

#pragma once

#include "gadgetforge/classify/stoquastic.hpp"
#include "gadgetforge/classify/subinteractions.hpp"
#include "gadgetforge/classify/two_local.hpp"
#include "gadgetforge/core/spectral.hpp"
#include "gadgetforge/sw/gadget.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace gadgetforge::classify {

enum class UniversalityClass { LA_UNIVERSAL, LA_STOQUASTIC_UNIVERSAL, ONE_LOCAL_ONLY };

inline const char* to_string(UniversalityClass c) {
    switch (c) {
        case UniversalityClass::LA_UNIVERSAL:
            return "LA_UNIVERSAL";
        case UniversalityClass::LA_STOQUASTIC_UNIVERSAL:
            return "LA_STOQUASTIC_UNIVERSAL";
        default:
            return "ONE_LOCAL_ONLY";
    }
}

struct StoquasticWitnessData {
    Vector psi;
    double scale = 0;  // coefficient of (d|psi⟩⟨psi| − I)^{⊗2} in the 2-local part
};

struct ClassificationVerdict {
    UniversalityClass cls = UniversalityClass::ONE_LOCAL_ONLY;
    std::optional<StoquasticWitnessData> witness;
    std::string rule;  // which decision branch fired
    std::vector<sw::ConditionItem> residuals;
    bool borderline = false;

    nlohmann::json to_json() const {
        nlohmann::json j;
        j["class"] = to_string(cls);
        j["rule"] = rule;
        j["borderline"] = borderline;
        if (witness) {
            nlohmann::json w;
            nlohmann::json amps = nlohmann::json::array();
            for (Index i = 0; i < witness->psi.size(); ++i)
                amps.push_back({witness->psi(i).real(), witness->psi(i).imag()});
            w["psi"] = std::move(amps);
            w["scale"] = witness->scale;
            j["witness"] = std::move(w);
        }
        nlohmann::json res = nlohmann::json::array();
        for (const auto& item : residuals)
            res.push_back({{"id", item.name}, {"residual", item.residual}, {"tol", item.tolerance}});
        j["residuals"] = std::move(res);
        return j;
    }
};

namespace detail {

// Deterministic sign/scale normalisation: unit Frobenius norm, first entry of
// the canonical scan (diagonal, then upper-triangle real, then imaginary)
// made positive.
inline Matrix normalize_factor(const Matrix& A, double* sign_out = nullptr) {
    Matrix out = A / A.norm();
    double lead = 0;
    for (Index i = 0; i < out.rows() && lead == 0; ++i)
        if (std::abs(out(i, i).real()) > 1e-10) lead = out(i, i).real();
    if (lead == 0)
        for (Index r = 0; r < out.rows() && lead == 0; ++r)
            for (Index c = r + 1; c < out.cols() && lead == 0; ++c) {
                if (std::abs(out(r, c).real()) > 1e-10)
                    lead = out(r, c).real();
                else if (std::abs(out(r, c).imag()) > 1e-10)
                    lead = out(r, c).imag();
            }
    if (lead < 0) out = -out;
    if (sign_out) *sign_out = lead < 0 ? -1.0 : 1.0;
    return out;
}

// Does the traceless Hermitian A have the shape t(|psi⟩⟨psi| − I/d)? True iff
// its spectrum has exactly two clusters with multiplicities {1, d−1}.
inline std::optional<Vector> rank_one_projector_shape(const Matrix& A, double cluster_tol = 1e-8) {
    const SpectralDecomposition dec = spectral(A, cluster_tol * std::max(1.0, max_abs(A)));
    if (dec.clusters.size() != 2) return std::nullopt;
    if (dec.cluster_dim(0) == 1 && dec.cluster_dim(1) == A.rows() - 1) return Vector(dec.eigenvectors.col(0));
    if (dec.cluster_dim(1) == 1 && dec.cluster_dim(0) == A.rows() - 1)
        return Vector(dec.eigenvectors.col(A.rows() - 1));
    return std::nullopt;
}

}  // namespace detail

// Decision for a single two-qudit interaction.
inline ClassificationVerdict classify_two_qudit(const LocalOperator& H, double rank_tol = tol::rank_rel) {
    if (H.arity() != 2) throw std::invalid_argument("classify_two_qudit: arity must be 2");
    const int d = H.local_dim();
    const TwoLocalDecomposition dec = two_local_part(H, rank_tol);

    ClassificationVerdict v;
    v.borderline = dec.borderline;
    if (dec.rank_at_tol == 0) {
        v.cls = UniversalityClass::ONE_LOCAL_ONLY;
        v.rule = "2-local part vanishes";
        return v;
    }
    if (dec.rank_at_tol >= 2) {
        v.cls = UniversalityClass::LA_UNIVERSAL;
        v.rule = "2-local rank >= 2";
        return v;
    }

    // rank 1: factor H' = sigma A ⊗ B through the top singular pair
    const HermitianBasis basis = gell_mann_basis(d);
    Eigen::JacobiSVD<RMatrix> svd(dec.coefficient_matrix, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const double sigma = svd.singularValues()(0);
    Matrix A = Matrix::Zero(d, d), B = Matrix::Zero(d, d);
    for (int a = 0; a < basis.size(); ++a) {
        A += svd.matrixU()(a, 0) * basis.elements[a];
        B += svd.matrixV()(a, 0) * basis.elements[a];
    }
    A = detail::normalize_factor(A);
    B = detail::normalize_factor(B);

    // explicit symmetrisation test: rank of the coefficient matrix of A⊗B + B⊗A
    Matrix symm = Eigen::kroneckerProduct(A, B).eval() + Eigen::kroneckerProduct(B, A).eval();
    const int sym_rank = two_local_rank(LocalOperator(d, 2, (symm + symm.adjoint()) / 2.0), rank_tol);
    v.residuals.push_back({"symmetrised-rank", static_cast<double>(sym_rank), 1.5, sym_rank <= 1});
    if (sym_rank >= 2) {
        v.cls = UniversalityClass::LA_UNIVERSAL;
        v.rule = "factors linearly independent: symmetrised interaction has 2-local rank 2";
        return v;
    }

    // B ∝ A branch: decide on the spectral shape of A
    const auto psi = detail::rank_one_projector_shape(A);
    if (!psi) {
        const SpectralDecomposition adec = spectral(A);
        v.cls = UniversalityClass::LA_UNIVERSAL;
        v.rule = adec.clusters.size() >= 3
                     ? "product factor has three or more distinct eigenvalues"
                     : "product factor is not of rank-1 projector form";
        return v;
    }

    // witness form: fit H' = alpha (d|psi⟩⟨psi| − I)^{⊗2}, record alpha and its sign
    (void)sigma;
    v.cls = UniversalityClass::LA_STOQUASTIC_UNIVERSAL;
    v.rule = "2-local part is a tensor square of a rank-1 projector form";
    const Matrix W = (static_cast<double>(d) * (*psi) * psi->adjoint() - Matrix::Identity(d, d));
    const Matrix W2 = Eigen::kroneckerProduct(W, W).eval();
    const double fitted = std::real((dec.h_prime.matrix().cwiseProduct(W2.conjugate())).sum()) /
                          std::real((W2.cwiseProduct(W2.conjugate())).sum());
    const double resid = max_abs(dec.h_prime.matrix() - fitted * W2);
    const double rtol = 1e-8 * std::max(1.0, max_abs(dec.h_prime.matrix()));
    v.residuals.push_back({"witness-form residual", resid, rtol, resid <= rtol});
    v.witness = StoquasticWitnessData{*psi, fitted};
    return v;
}

// Decision for a set of interactions of any arity: the stoquastic class
// requires every ≥2-site component of every interaction to be proportional to
// (d|psi⟩⟨psi| − I)^{⊗|S|} with one common psi.
inline ClassificationVerdict classify_interaction_set(const std::vector<LocalOperator>& interactions,
                                                      double rank_tol = tol::rank_rel) {
    if (interactions.empty()) throw std::invalid_argument("classify_interaction_set: empty set");
    const int d = interactions.front().local_dim();
    for (const LocalOperator& H : interactions)
        if (H.local_dim() != d) throw std::invalid_argument("classify_interaction_set: mixed local dimensions");

    ClassificationVerdict v;
    struct Component {
        Matrix mat;
        int sites;
    };
    std::vector<Component> components;
    for (const LocalOperator& H : interactions) {
        if (H.arity() == 1) continue;
        for (auto& [support, comp] : extract_subinteractions(H))
            if (support.size() >= 2) components.push_back({comp.matrix(), static_cast<int>(support.size())});
    }
    if (components.empty()) {
        v.cls = UniversalityClass::ONE_LOCAL_ONLY;
        v.rule = "all interactions are 1-local";
        return v;
    }

    // candidate witness from the lowest-arity component; then verified globally
    std::optional<Vector> candidate;
    std::sort(components.begin(), components.end(),
              [](const Component& a, const Component& b) { return a.sites < b.sites; });
    for (const Component& comp : components) {
        // product structure across the first site
        const Index rest = pow_index(d, comp.sites - 1);
        Matrix reshaped(static_cast<Index>(d) * d, rest * rest);
        for (Index q1 = 0; q1 < d; ++q1)
            for (Index r1 = 0; r1 < rest; ++r1)
                for (Index q2 = 0; q2 < d; ++q2)
                    for (Index r2 = 0; r2 < rest; ++r2)
                        reshaped(q1 * d + q2, r1 * rest + r2) = comp.mat(q1 * rest + r1, q2 * rest + r2);
        Eigen::JacobiSVD<Matrix> svd(reshaped, Eigen::ComputeThinU);
        if (svd.singularValues().size() > 1 &&
            svd.singularValues()(1) > 1e-9 * svd.singularValues()(0)) {
            v.cls = UniversalityClass::LA_UNIVERSAL;
            v.rule = "a multi-site component is not a tensor power of a single-site factor";
            return v;
        }
        Matrix A(d, d);
        for (Index q1 = 0; q1 < d; ++q1)
            for (Index q2 = 0; q2 < d; ++q2) A(q1, q2) = svd.matrixU()(q1 * d + q2, 0);
        A = (A + A.adjoint()) / 2.0;
        A = detail::normalize_factor(A);
        const auto psi = detail::rank_one_projector_shape(A);
        if (!psi) {
            v.cls = UniversalityClass::LA_UNIVERSAL;
            v.rule = "a component factor is not of rank-1 projector form";
            return v;
        }
        if (!candidate) {
            candidate = psi;
        } else {
            const double overlap = std::abs((candidate->adjoint() * (*psi))(0));
            if (overlap < 1.0 - 1e-8) {
                v.cls = UniversalityClass::LA_UNIVERSAL;
                v.rule = "witness states differ between components";
                return v;
            }
        }
        // exact tensor-power verification against the normalised witness form
        const Matrix W = static_cast<double>(d) * (*candidate) * candidate->adjoint() - Matrix::Identity(d, d);
        Matrix Wk = Matrix::Identity(1, 1);
        for (int i = 0; i < comp.sites; ++i) Wk = Eigen::kroneckerProduct(Wk, W).eval();
        const double fitted =
            std::real((comp.mat.cwiseProduct(Wk.conjugate())).sum()) / std::real((Wk.cwiseProduct(Wk.conjugate())).sum());
        const double resid = max_abs(comp.mat - fitted * Wk);
        v.residuals.push_back({"component tensor-power residual", resid,
                               1e-8 * std::max(1.0, max_abs(comp.mat)), resid <= 1e-8 * std::max(1.0, max_abs(comp.mat))});
        if (!v.residuals.back().pass) {
            v.cls = UniversalityClass::LA_UNIVERSAL;
            v.rule = "a component deviates from the witness tensor power";
            return v;
        }
    }
    v.cls = UniversalityClass::LA_STOQUASTIC_UNIVERSAL;
    v.rule = "all multi-site components are tensor powers of one rank-1 projector form";
    v.witness = StoquasticWitnessData{*candidate, 1.0};
    return v;
}

}  // namespace gadgetforge::classify
