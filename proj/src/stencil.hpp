#pragma once

// Pointwise pieces shared by the serial and parallel kernels.

#include <cstddef>
#include <span>

#include "invosc/analytic.hpp"

namespace invosc::detail {

// 12 h^2 f''(x_j), 4th order.
inline cplx second_difference_scaled(std::span<const cplx> f, std::size_t j) noexcept
{
    const std::size_t last = f.size() - 1;
    if (j == 0)
        return 45.0 * f[0] - 154.0 * f[1] + 214.0 * f[2] - 156.0 * f[3] + 61.0 * f[4] - 10.0 * f[5];
    if (j == 1)
        return 10.0 * f[0] - 15.0 * f[1] - 4.0 * f[2] + 14.0 * f[3] - 6.0 * f[4] + f[5];
    if (j == last)
        return 45.0 * f[last] - 154.0 * f[last - 1] + 214.0 * f[last - 2] - 156.0 * f[last - 3]
               + 61.0 * f[last - 4] - 10.0 * f[last - 5];
    if (j == last - 1)
        return 10.0 * f[last] - 15.0 * f[last - 1] - 4.0 * f[last - 2] + 14.0 * f[last - 3]
               - 6.0 * f[last - 4] + f[last - 5];
    return -f[j - 2] + 16.0 * f[j - 1] - 30.0 * f[j] + 16.0 * f[j + 1] - f[j + 2];
}

// Composite Simpson weight (without h/3) of point j out of n points.
inline double simpson_weight(std::size_t j, std::size_t n) noexcept
{
    if (j == 0 || j == n - 1) return 1.0;
    return (j % 2 == 1) ? 4.0 : 2.0;
}

}  // namespace invosc::detail
