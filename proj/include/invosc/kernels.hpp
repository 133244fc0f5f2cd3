#pragma once

// Grid kernels in two flavours with identical signatures:
//
//   kernels::serial    plain loops; the reference the parallel code is tested against
//   kernels::parallel  OpenMP loops; reductions are summed over fixed-size chunks
//                      so results do not depend on the thread count
//
// All second derivatives are 4th order: 5-point central stencils in the interior
// and 6-point one-sided stencils at the two outermost points on each side.

#include <cstddef>
#include <span>

#include "invosc/analytic.hpp"
#include "invosc/grid.hpp"

namespace invosc::kernels {

/// Chunk length used by the parallel reductions.
inline constexpr std::size_t reduction_chunk = 1024;

/// Threads the parallel kernels will use (1 when built without OpenMP).
int max_threads() noexcept;

namespace serial {

template <class F>
void sample(const Grid1D& grid, F&& f, std::span<cplx> out)
{
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f(grid.point(j));
}

/// out = f'' on the full grid; f.size() >= 6.
void second_derivative(std::span<const cplx> f, double h, std::span<cplx> out);

/// out = -f'' - omega^2 x^2 f.
void apply_hamiltonian(std::span<const cplx> f, const Grid1D& grid, double omega, std::span<cplx> out);

/// Composite Simpson integral; f.size() must be odd.
cplx simpson(std::span<const cplx> f, double h);

/// Composite Simpson integral of conj(f) * g.
cplx simpson_conj_product(std::span<const cplx> f, std::span<const cplx> g, double h);

/// h * sum |f_j|^2 (trapezoid rule for fields that vanish at both ends).
double sum_abs2(std::span<const cplx> f, double h);

/// max over interior points j in [2, size - 3] of
/// |i (plus - minus) / (2 dt) + now'' + omega^2 x^2 now|.
double schrodinger_residual_max(std::span<const cplx> minus, std::span<const cplx> now,
                                std::span<const cplx> plus, const Grid1D& grid,
                                double dt, double omega);

}  // namespace serial

namespace parallel {

template <class F>
void sample(const Grid1D& grid, F&& f, std::span<cplx> out)
{
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) out[j] = f(grid.point(static_cast<std::size_t>(j)));
}

void second_derivative(std::span<const cplx> f, double h, std::span<cplx> out);
void apply_hamiltonian(std::span<const cplx> f, const Grid1D& grid, double omega, std::span<cplx> out);
cplx simpson(std::span<const cplx> f, double h);
cplx simpson_conj_product(std::span<const cplx> f, std::span<const cplx> g, double h);
double sum_abs2(std::span<const cplx> f, double h);
double schrodinger_residual_max(std::span<const cplx> minus, std::span<const cplx> now,
                                std::span<const cplx> plus, const Grid1D& grid,
                                double dt, double omega);

}  // namespace parallel

}  // namespace invosc::kernels
