#include "invosc/grid.hpp"

#include <cmath>
#include <string>

#include "invosc/error.hpp"

namespace invosc {

Grid1D::Grid1D(double x_min, double x_max, int m)
    : x_min_(x_min), x_max_(x_max), m_(m), spacing_(0.0)
{
    if (m < min_intervals)
        throw Error(ErrorCode::InvalidGrid, "grid needs at least 8 intervals, got " + std::to_string(m));
    if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min))
        throw Error(ErrorCode::InvalidGrid, "grid bounds must be finite with x_max > x_min");
    spacing_ = (x_max - x_min) / m;
}

Grid1D Grid1D::scaled(double factor) const
{
    return Grid1D(x_min_ * factor, x_max_ * factor, m_);
}

SampledField::SampledField(Grid1D grid, std::vector<cplx> values)
    : grid_(grid), values_(std::move(values))
{
    if (values_.size() != grid_.size())
        throw Error(ErrorCode::InvalidArgument,
                    "field has " + std::to_string(values_.size()) + " samples, grid has " + std::to_string(grid_.size()));
    for (const cplx& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
            throw Error(ErrorCode::InvalidArgument, "field contains a non-finite sample");
    }
}

}  // namespace invosc
