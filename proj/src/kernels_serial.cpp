#include <algorithm>
#include <cmath>
#include <complex>

#include "invosc/error.hpp"
#include "invosc/kernels.hpp"
#include "stencil.hpp"

namespace invosc::kernels::serial {

namespace {

void require_odd(std::size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorCode::InvalidGrid, "Simpson's rule needs an even interval count");
}

}  // namespace

void second_derivative(std::span<const cplx> f, double h, std::span<cplx> out)
{
    if (f.size() < 6 || out.size() != f.size())
        throw Error(ErrorCode::InvalidGrid, "second derivative needs >= 6 points and matching output");
    const double scale = 1.0 / (12.0 * h * h);
    for (std::size_t j = 0; j < f.size(); ++j) out[j] = detail::second_difference_scaled(f, j) * scale;
}

void apply_hamiltonian(std::span<const cplx> f, const Grid1D& grid, double omega, std::span<cplx> out)
{
    if (f.size() != grid.size())
        throw Error(ErrorCode::InvalidGrid, "field does not match grid");
    second_derivative(f, grid.spacing(), out);
    const double w2 = omega * omega;
    for (std::size_t j = 0; j < f.size(); ++j) {
        const double x = grid.point(j);
        out[j] = -out[j] - w2 * x * x * f[j];
    }
}

cplx simpson(std::span<const cplx> f, double h)
{
    require_odd(f.size());
    cplx acc = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) acc += detail::simpson_weight(j, f.size()) * f[j];
    return acc * (h / 3.0);
}

cplx simpson_conj_product(std::span<const cplx> f, std::span<const cplx> g, double h)
{
    if (f.size() != g.size())
        throw Error(ErrorCode::IncompatibleGrids, "operands have different lengths");
    require_odd(f.size());
    cplx acc = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j)
        acc += detail::simpson_weight(j, f.size()) * (std::conj(f[j]) * g[j]);
    return acc * (h / 3.0);
}

double sum_abs2(std::span<const cplx> f, double h)
{
    double acc = 0.0;
    for (const cplx& v : f) acc += std::norm(v);
    return acc * h;
}

double schrodinger_residual_max(std::span<const cplx> minus, std::span<const cplx> now,
                                std::span<const cplx> plus, const Grid1D& grid,
                                double dt, double omega)
{
    const std::size_t n = grid.size();
    if (minus.size() != n || now.size() != n || plus.size() != n)
        throw Error(ErrorCode::InvalidGrid, "residual inputs do not match grid");
    const double h = grid.spacing();
    const double scale = 1.0 / (12.0 * h * h);
    const double w2 = omega * omega;
    const cplx i_over_2dt(0.0, 1.0 / (2.0 * dt));
    double worst = 0.0;
    for (std::size_t j = 2; j + 2 < n; ++j) {
        const double x = grid.point(j);
        const cplx r = i_over_2dt * (plus[j] - minus[j]) + detail::second_difference_scaled(now, j) * scale
                       + w2 * x * x * now[j];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace invosc::kernels::serial
