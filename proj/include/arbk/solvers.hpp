#pragma once
#include <arbk/linear_system.hpp>
#include <arbk/metrics.hpp>
#include <arbk/potential.hpp>
#include <arbk/theta_schedule.hpp>

#include <cstdint>
#include <optional>
#include <string_view>

namespace arbk {

/// Bregman-Kaczmarz iterate: x = grad f*(x_star) after every step.
struct BkState
{
    Vector x_star;
    Vector x;
    std::int64_t k = 0;

    static BkState start(const Potential& pot, Vector x_star0);
};

/// Accelerated Bregman-Kaczmarz iterate. The coupling point c_k only
/// exists inside a step.
struct ArbkState
{
    Vector x_star;
    Vector t;
    ThetaSchedule theta;
    std::int64_t k = 0;

    /// t_0 = x_star0.
    static ArbkState start(Vector x_star0, ThetaSchedule theta);

    Vector primal(const Potential& pot) const { return pot.conjugate_gradient(x_star); }
};

/// Accelerated dual coordinate descent iterate, kept in R^m.
/// Each step forms A^T v, so it costs O(mn); used to cross-check ARBK.
struct AcdState
{
    Vector y;
    Vector z;
    ThetaSchedule theta;
    std::int64_t k = 0;

    /// z_0 = y0.
    static AcdState start(Vector y0, ThetaSchedule theta);

    Vector dual_image(const LinearSystem& sys) const { return sys.matrix().transpose() * y; }
};

// Single-row steps. All throw IndexOutOfRange for i outside [0, m).
// bk_step and arbk_step only touch row i and length-n vectors.

void bk_step(BkState& s, const LinearSystem& sys, const Potential& pot, Index i);
void arbk_step(ArbkState& s, const LinearSystem& sys, const Potential& pot, Index i);
void acd_step(AcdState& s, const LinearSystem& sys, const Potential& pot, Index i);

enum class Method { bk, arbk, acd_dual };

std::string_view method_name(Method m) noexcept;
/// Accepts "bk", "arbk", "acd-dual" (and "acd_dual"). Throws InvalidArgument otherwise.
Method parse_method(std::string_view name);

/// Stop after max_epochs, or earlier once the relative residual drops to
/// residual_tol. The full residual is evaluated once per epoch.
struct StoppingRule
{
    int max_epochs = 1;
    double residual_tol = 0.0;
};

struct RunOptions
{
    /// Defaults to 1/m.
    std::optional<double> theta0;
    /// Hold theta fixed at theta0 in the accelerated methods.
    bool constant_theta = false;
    /// Dual start y_0 in R^m; x*_0 = A^T y_0. Defaults to zero.
    std::optional<Vector> y0;
    /// Reference solution for rel_error and bregman; both are NaN without it.
    std::optional<Vector> reference;
};

struct RunResult
{
    Vector x;
    Vector x_star;
    std::int64_t iterations = 0;
    TrialLog log;
};

/**
 * Runs one method from x*_0 = A^T y_0 (zero by default), one epoch being m
 * sampled rows. Rows come from RowSampler(sys, seed), so equal seeds give
 * every method the same index stream. Metrics are logged at epoch 0 and
 * after every epoch.
 *
 * Throws InvalidArgument for a bad stopping rule or options, and NonFinite
 * if the iterate stops being finite.
 */
RunResult run(Method method, const LinearSystem& sys, const Potential& pot, std::uint64_t seed,
              const StoppingRule& stop, const RunOptions& options = {});

} // namespace arbk
