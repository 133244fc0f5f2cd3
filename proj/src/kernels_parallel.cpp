#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "invosc/error.hpp"
#include "invosc/kernels.hpp"
#include "stencil.hpp"

namespace invosc::kernels {

int max_threads() noexcept
{
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

namespace parallel {

namespace {

void require_odd(std::size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw Error(ErrorCode::InvalidGrid, "Simpson's rule needs an even interval count");
}

std::ptrdiff_t chunk_count(std::size_t n)
{
    return static_cast<std::ptrdiff_t>((n + reduction_chunk - 1) / reduction_chunk);
}

// Sum term(j) over [0, n): partial sums per fixed chunk, then a serial pass in
// chunk order. The result is bit-identical for any thread count.
template <class T, class Term>
T chunked_sum(std::size_t n, Term term)
{
    const std::ptrdiff_t chunks = chunk_count(n);
    std::vector<T> partial(static_cast<std::size_t>(chunks), T{});
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t c = 0; c < chunks; ++c) {
        const std::size_t begin = static_cast<std::size_t>(c) * reduction_chunk;
        const std::size_t end = std::min(n, begin + reduction_chunk);
        T acc{};
        for (std::size_t j = begin; j < end; ++j) acc += term(j);
        partial[static_cast<std::size_t>(c)] = acc;
    }
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

}  // namespace

void second_derivative(std::span<const cplx> f, double h, std::span<cplx> out)
{
    if (f.size() < 6 || out.size() != f.size())
        throw Error(ErrorCode::InvalidGrid, "second derivative needs >= 6 points and matching output");
    const double scale = 1.0 / (12.0 * h * h);
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j)
        out[j] = detail::second_difference_scaled(f, static_cast<std::size_t>(j)) * scale;
}

void apply_hamiltonian(std::span<const cplx> f, const Grid1D& grid, double omega, std::span<cplx> out)
{
    if (f.size() != grid.size() || out.size() != f.size())
        throw Error(ErrorCode::InvalidGrid, "field does not match grid");
    second_derivative(f, grid.spacing(), out);
    const double w2 = omega * omega;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(f.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t j = 0; j < n; ++j) {
        const double x = grid.point(static_cast<std::size_t>(j));
        out[j] = -out[j] - w2 * x * x * f[j];
    }
}

cplx simpson(std::span<const cplx> f, double h)
{
    require_odd(f.size());
    const std::size_t n = f.size();
    return chunked_sum<cplx>(n, [&](std::size_t j) { return detail::simpson_weight(j, n) * f[j]; }) * (h / 3.0);
}

cplx simpson_conj_product(std::span<const cplx> f, std::span<const cplx> g, double h)
{
    if (f.size() != g.size())
        throw Error(ErrorCode::IncompatibleGrids, "operands have different lengths");
    require_odd(f.size());
    const std::size_t n = f.size();
    return chunked_sum<cplx>(n, [&](std::size_t j) {
               return detail::simpson_weight(j, n) * (std::conj(f[j]) * g[j]);
           }) * (h / 3.0);
}

double sum_abs2(std::span<const cplx> f, double h)
{
    return chunked_sum<double>(f.size(), [&](std::size_t j) { return std::norm(f[j]); }) * h;
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
    const std::ptrdiff_t last = static_cast<std::ptrdiff_t>(n) - 2;
    double worst = 0.0;
#pragma omp parallel for schedule(static) reduction(max : worst)
    for (std::ptrdiff_t j = 2; j < last; ++j) {
        const auto u = static_cast<std::size_t>(j);
        const double x = grid.point(u);
        const cplx r = i_over_2dt * (plus[u] - minus[u]) + detail::second_difference_scaled(now, u) * scale
                       + w2 * x * x * now[u];
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace parallel
}  // namespace invosc::kernels
