#pragma once
#include <cstdint>

namespace arbk {

/**
 * Momentum weights theta_0, theta_1, ... for the accelerated methods.
 *
 * Accelerated mode follows theta_{k+1} = (sqrt(theta_k^4 + 4 theta_k^2) - theta_k^2) / 2,
 * which keeps (1 - theta_{k+1}) / theta_{k+1}^2 = 1 / theta_k^2, is nonincreasing and
 * decays like 2 / k. Constant mode holds theta at theta_0 forever; with theta_0 = 1/m
 * this turns the accelerated Kaczmarz step back into the plain Bregman-Kaczmarz step.
 */
class ThetaSchedule
{
public:
    enum class Mode { accelerated, constant };

    /// Throws InvalidArgument unless 0 < theta0 <= 1.
    explicit ThetaSchedule(double theta0, Mode mode = Mode::accelerated);

    static ThetaSchedule constant(double theta0) { return ThetaSchedule(theta0, Mode::constant); }

    double theta() const noexcept { return theta_; }
    double theta0() const noexcept { return theta0_; }
    std::int64_t k() const noexcept { return k_; }
    Mode mode() const noexcept { return mode_; }

    void advance() noexcept;

    /// One application of the recurrence.
    static double next(double theta) noexcept;

private:
    double theta0_;
    double theta_;
    std::int64_t k_ = 0;
    Mode mode_;
};

} // namespace arbk
