#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "invosc/analytic.hpp"

namespace invosc {

/// Uniform grid of m intervals (m + 1 points) over [x_min, x_max].
class Grid1D {
public:
    static constexpr int min_intervals = 8;

    /// Throws Error(InvalidGrid) if m < 8 or the interval is empty or non-finite.
    Grid1D(double x_min, double x_max, int m);

    double x_min() const noexcept { return x_min_; }
    double x_max() const noexcept { return x_max_; }
    int intervals() const noexcept { return m_; }
    std::size_t size() const noexcept { return static_cast<std::size_t>(m_) + 1; }
    double spacing() const noexcept { return spacing_; }

    // The last point is pinned to x_max so endpoints are reproduced exactly.
    double point(std::size_t j) const noexcept
    {
        return j == static_cast<std::size_t>(m_) ? x_max_ : x_min_ + static_cast<double>(j) * spacing_;
    }

    /// Same grid with both endpoints multiplied by factor (> 0).
    Grid1D scaled(double factor) const;

    bool operator==(const Grid1D&) const = default;

private:
    double x_min_;
    double x_max_;
    int m_;
    double spacing_;
};

/// Complex samples of a function on a grid.
class SampledField {
public:
    /// Throws Error(InvalidArgument) on a length mismatch or a non-finite sample.
    SampledField(Grid1D grid, std::vector<cplx> values);

    const Grid1D& grid() const noexcept { return grid_; }
    std::span<const cplx> values() const noexcept { return values_; }

private:
    Grid1D grid_;
    std::vector<cplx> values_;
};

}  // namespace invosc
