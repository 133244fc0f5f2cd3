#pragma once

// Numerical propagation in the comoving frame.
//
// With psi(x, t) = exp(i omega x^2/2 - omega t) phi(y, t), y = x exp(-2 omega t)
// and d tau = exp(-4 omega t) dt the dynamics reduce to the free equation
// i dphi/dtau = -phi_yy on the fixed interval [0, l0] with Dirichlet walls.
// That equation is stepped with Crank-Nicolson (Cayley form) on a 3-point
// Laplacian; discrete sine modes are exact eigenvectors, so no mode mixing
// occurs beyond rounding.

#include <span>
#include <vector>

#include "invosc/analytic.hpp"
#include "invosc/grid.hpp"
#include "invosc/quadrature.hpp"

namespace invosc {

inline constexpr int default_propagation_intervals = 2048;
inline constexpr int default_cn_steps = 4096;

struct ModeCoefficient {
    int n = 1;
    cplx amplitude = 1.0;
};

class ComovingField {
public:
    /// values.size() must be m + 1 with zero end values; throws Error(InvalidArgument) otherwise.
    ComovingField(const BoxConfig& box, int m, std::vector<cplx> values, double t_lab);

    const BoxConfig& box() const noexcept { return box_; }
    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const cplx> values() const noexcept { return values_; }
    double t_lab() const noexcept { return t_lab_; }

    /// Trapezoidal l2 norm, sqrt(dy * sum |phi_j|^2).
    double norm() const;

    /// Discrete projection onto sqrt(2/l0) sin(n pi y / l0).
    cplx mode_overlap(int n) const;

private:
    friend class CrankNicolsonStepper;
    friend ComovingField propagate_to(ComovingField field, double t_target, int steps);

    BoxConfig box_;
    Grid1D grid_;
    std::vector<cplx> values_;
    double t_lab_;
};

/// phi(y, 0) = sum c_n sqrt(2/l0) e^{i eps_n / 4 omega} sin(n pi y / l0); the phase
/// is omitted at omega = 0. Throws Error(InvalidSuperposition) for empty,
/// all-zero, duplicate or n < 1 input.
ComovingField init_mode_superposition(const BoxConfig& box, std::span<const ModeCoefficient> coeffs,
                                      int m = default_propagation_intervals);

/// Factored Crank-Nicolson step (I - i dtau/2 D) phi+ = (I + i dtau/2 D) phi for
/// a fixed grid and step. The tridiagonal matrix is constant, so elimination
/// factors are computed once.
class CrankNicolsonStepper {
public:
    CrankNicolsonStepper(const Grid1D& grid, double dtau);

    double dtau() const noexcept { return dtau_; }

    /// Advances interior values in place; end values stay zero.
    void advance(std::span<cplx> values) const;

    /// Advances the field in place by one step (lab time is not touched).
    void advance(ComovingField& field) const { advance(field.values_); }

private:
    // Elimination runs in extended precision; fields are stored as double.
    using wide = std::complex<long double>;

    double dtau_;
    wide diag_;
    wide off_;
    wide rhs_diag_;
    wide rhs_off_;
    std::vector<wide> c_prime_;
    std::vector<wide> inv_denom_;
    mutable std::vector<wide> rhs_;
};

/// One Crank-Nicolson step of size dtau (> 0).
ComovingField cn_step(const ComovingField& field, double dtau);

/// Advances to lab time t_target in `steps` uniform steps of reparameterized time.
/// Throws Error(InvalidTargetTime) unless t_target > field.t_lab().
ComovingField propagate_to(ComovingField field, double t_target, int steps);

struct LabField {
    Grid1D x_grid;
    std::vector<cplx> values;
    double t_lab;
};

/// psi(x_j, t) = exp(i omega x_j^2/2 - omega t) phi(y_j) on x_j = exp(2 omega t) y_j.
LabField lab_frame(const ComovingField& field);

/// Trapezoidal l2 norm of a lab-frame field.
double lab_norm(const LabField& field);

/// Trapezoidal l2 distance between a lab-frame field and an evaluator at its time.
double lab_l2_error(const LabField& field, const Evaluator& exact);

}  // namespace invosc
