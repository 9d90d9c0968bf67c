#include <arbk/theta_schedule.hpp>

#include <arbk/errors.hpp>

#include <cmath>
#include <string>

namespace arbk {

ThetaSchedule::ThetaSchedule(double theta0, Mode mode) : theta0_(theta0), theta_(theta0), mode_(mode)
{
    if (!(theta0 > 0.0 && theta0 <= 1.0)) {
        throw InvalidArgument("theta0 must lie in (0, 1], got " + std::to_string(theta0));
    }
}

void ThetaSchedule::advance() noexcept
{
    if (mode_ == Mode::accelerated) theta_ = next(theta_);
    ++k_;
}

double ThetaSchedule::next(double theta) noexcept
{
    // (sqrt(t^4 + 4t^2) - t^2) / 2 rationalized to 2t / (sqrt(t^2 + 4) + t);
    // the direct form loses digits to cancellation once theta is small.
    return 2.0 * theta / (std::sqrt(theta * theta + 4.0) + theta);
}

} // namespace arbk
