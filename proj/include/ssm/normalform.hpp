#pragma once

#include "ssm/mechsys.hpp"
#include "ssm/ode.hpp"
#include "ssm/polynomial.hpp"
#include "ssm/trajectory.hpp"

#include <Eigen/Dense>
#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ssm {

// ---------------------------------------------------------------- reduced field

/// xi' = W xi + N phi(xi), phi: real monomials of degree 2..order.
struct ReducedVectorField {
    Eigen::MatrixXd linear;
    MonomialBasis basis;
    Eigen::MatrixXd coeffs;  // dim x basis.size()
    int order = 1;
    bool unstable_linearization = false;
    double condition = 1.0;

    int dim() const noexcept { return static_cast<int>(linear.rows()); }
    Eigen::VectorXd evaluate(const Eigen::VectorXd& xi) const;
    Eigen::MatrixXd jacobian(const Eigen::VectorXd& xi) const;
    ode::Rhs rhs() const;
};

/// Fourth-order finite differences along rows: central inside, one-sided at
/// the two first and two last samples.
Eigen::MatrixXd finite_difference_derivative(const Eigen::MatrixXd& X, double dt);

ReducedVectorField fit_reduced_field(const std::vector<Trajectory>& reduced, int order,
                                     double condition_limit = 1e12);

nlohmann::json to_json(const ReducedVectorField& f);
ReducedVectorField reduced_field_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------- resonances

struct ResonanceHit {
    int outer_index = 0;  // index into Spectrum::eigenvalues
    Exponent k;           // multi-index over the 2m inner eigenvalues
    Complex defect;       // lambda_outer - <k, lambda_inner>
};

struct OuterResonanceReport {
    int spectral_quotient = 0;
    double tolerance = 0.0;
    std::vector<ResonanceHit> near_violations;
    bool ok() const noexcept { return near_violations.empty(); }
};

/// Checks lambda_l != <k, lambda_E> for eigenvalues outside the mode set and
/// 2 <= |k| <= spectral quotient. Near-violations: |defect| < tol_rel max|Im lambda|.
OuterResonanceReport check_outer_resonance(const Spectrum& spec, const std::vector<int>& mode_set,
                                           double tol_rel = 1e-3);

/// Kept nonlinear monomials per mode equation, exponents over (z1, z1bar, ..., zm, zmbar).
struct ResonanceSet {
    int modes = 0;
    int order = 0;
    double tol_rel = 0.05;
    std::vector<std::vector<Exponent>> kept;

    bool contains(int mode, const Exponent& k) const;
};

ResonanceSet select_resonant_monomials(const std::vector<Complex>& eigenvalues, int order, double tol_rel = 0.05);

// ---------------------------------------------------------------- normal form

/// Coordinates: real reduced xi = Re(T zeta), zeta modal; z = h_inv(zeta),
/// zeta = h(z); z' = n(z). Only one equation per conjugate pair is stored;
/// the conjugate equations follow by mirroring.
struct NormalFormModel {
    int modes = 0;
    int order = 1;
    std::vector<Complex> eigenvalues;  // Im > 0, increasing Im
    Eigen::MatrixXcd modal_change;     // T, columns (v1, conj v1, ...)
    CPolyMap h_inv;                    // m polys in 2m variables, linear part identity
    CPolyMap h;
    CPolyMap n;                        // includes the diagonal linear term
    ResonanceSet resonance;
    std::vector<double> cost_history;
    double composition_residual = 0.0;

    int vars() const noexcept { return 2 * modes; }

    Eigen::VectorXcd full_point(const Eigen::VectorXcd& modes_only) const;
    // xi -> z (full 2m vector)
    Eigen::VectorXcd to_normal(const Eigen::VectorXd& xi) const;
    // z -> xi
    Eigen::VectorXd from_normal(const Eigen::VectorXcd& z) const;
    // n_j(z) for each mode j
    Eigen::VectorXcd vector_field(const Eigen::VectorXcd& z) const;
};

enum class DerivativeSource { FiniteDifference, ReducedField };

struct NormalFormOptions {
    int order = 3;
    double tol_rel = 0.05;
    int max_iterations = 500;
    double relative_tolerance = 1e-10;
    int max_samples = 5000;
    bool refine = true;
    DerivativeSource derivatives = DerivativeSource::FiniteDifference;
    double modal_condition_limit = 1e8;
};

/// Samples in modal coordinates with their time derivatives, one per row.
struct ModalData {
    Eigen::MatrixXcd zeta;
    Eigen::MatrixXcd zeta_dot;
};

/// Least-squares conjugacy problem for fixed eigenvalues and resonance set.
/// Unknowns: nonresonant coefficients of h_inv (degree 2..order) and the
/// resonant coefficients of n.
class ConjugacyProblem {
public:
    ConjugacyProblem(std::vector<Complex> eigenvalues, const ResonanceSet& res, int order, ModalData data);

    int h_parameter_count() const noexcept { return real_h_params_; }
    const std::vector<std::vector<Exponent>>& h_monomials() const noexcept { return h_mons_; }

    Eigen::VectorXd pack_h(const CPolyMap& h_inv) const;
    CPolyMap unpack_h(const Eigen::VectorXd& p) const;

    // Residuals stacked as (sample, mode) complex values.
    Eigen::VectorXcd residual(const CPolyMap& h_inv, const CPolyMap& n) const;
    double cost(const CPolyMap& h_inv, const CPolyMap& n) const { return residual(h_inv, n).squaredNorm(); }
    // d(real-stacked residual) / d(packed h parameters); residual stacking [Re; Im].
    Eigen::MatrixXd h_jacobian(const CPolyMap& h_inv, const CPolyMap& n) const;
    // Optimal n (resonant coefficients) for the given h_inv.
    CPolyMap solve_n(const CPolyMap& h_inv) const;

private:
    std::vector<Complex> lambda_;
    ResonanceSet res_;
    int order_;
    int m_;
    ModalData data_;
    std::vector<std::vector<Exponent>> h_mons_;
    int real_h_params_ = 0;
    // Per mode: monomial values and their derivative along the data.
    std::vector<Eigen::MatrixXcd> phi_, dphi_;

    Eigen::MatrixXcd normal_coords(const CPolyMap& h_inv) const;
};

/// Order-by-order solve of the homological equation for h_inv and n given the
/// modal nonlinearity F (full 2m map).
void homological_solve(const std::vector<Complex>& eigenvalues, const CPolyMap& F, const ResonanceSet& res,
                       int order, CPolyMap& h_inv, CPolyMap& n);

/// zeta = h(z) from z = h_inv(zeta) by fixed-point series inversion.
CPolyMap invert_near_identity(const CPolyMap& h_inv_modes, int order);

/// Max coefficient of h(h_inv(zeta)) - zeta up to the given order.
double composition_residual(const CPolyMap& h_modes, const CPolyMap& h_inv_modes, int order);

/// Modal form of the reduced field: eigenvalues, T and F(zeta) = T^-1 N(T zeta).
struct ModalField {
    std::vector<Complex> eigenvalues;
    Eigen::MatrixXcd T;
    CPolyMap F;
};
ModalField modal_form(const ReducedVectorField& rvf, double condition_limit = 1e8);

NormalFormModel fit_normal_form(const ReducedVectorField& rvf, const std::vector<Trajectory>& reduced,
                                const NormalFormOptions& opt = {});

/// Core fit in modal coordinates; F may be empty (zero initial guess).
NormalFormModel fit_normal_form_modal(const std::vector<Complex>& eigenvalues, const Eigen::MatrixXcd& T,
                                      const CPolyMap& F, const ModalData& data, const ResonanceSet& res,
                                      const NormalFormOptions& opt);

nlohmann::json to_json(const NormalFormModel& nf);
NormalFormModel normal_form_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------- polar form

/// coeff * prod rho^rho_exp * exp(i phase . theta), a term of
/// S_j = rho_j' + i rho_j theta_j' = exp(-i theta_j) z_j'.
struct PolarTerm {
    Complex coeff;
    std::vector<int> rho_exp;
    std::vector<int> phase;
    Exponent source;
};

struct PolarModel {
    int modes = 0;
    std::vector<Complex> eigenvalues;
    std::vector<std::vector<PolarTerm>> terms;  // per mode, linear term first

    bool phase_coupled() const;
    Complex S(int j, const std::vector<double>& rho, const std::vector<double>& theta) const;
    // -Re(S_j)/rho_j and Im(S_j)/rho_j; rho_j > 0 unless no term is singular.
    double alpha(int j, const std::vector<double>& rho, const std::vector<double>& theta = {}) const;
    double omega(int j, const std::vector<double>& rho, const std::vector<double>& theta = {}) const;
    // d alpha_j / d rho_j and d omega_j / d rho_j along the single-mode backbone.
    double alpha_prime(int j, const std::vector<double>& rho, const std::vector<double>& theta = {}) const;
    double omega_prime(int j, const std::vector<double>& rho, const std::vector<double>& theta = {}) const;

    /// Cartesian field n_j(z) rebuilt from the terms.
    Complex cartesian(int j, const Eigen::VectorXcd& z_full) const;

    /// Human-readable equations, one line per rho_j' and theta_j'.
    std::string dump(int digits = 4) const;
};

PolarModel to_polar(const NormalFormModel& nf);

struct ModalForcing {
    std::vector<double> f;       // per mode
    std::vector<double> ratio;   // c_j, forcing frequency multiple per mode
    double omega = 0.0;
};

struct NormalFormTrajectory {
    std::vector<double> times;
    Eigen::MatrixXcd z;  // rows: samples, columns: modes
};

/// Integrates z_j' = n_j(z) - i f_j exp(i c_j Omega t) in polar form, or in
/// Cartesian form when an amplitude starts at zero.
NormalFormTrajectory evolve_normal_form(const PolarModel& pm, const Eigen::VectorXcd& z0,
                                        const std::vector<double>& times,
                                        std::optional<ModalForcing> forcing = std::nullopt);

}  // namespace ssm
