#pragma once
#include <arbk/linear_system.hpp>
#include <arbk/potential.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace arbk {

struct EpochMetrics
{
    double rel_residual = 0.0;
    double rel_error = 0.0;
    double bregman = 0.0;
};

/**
 * Convergence metrics of the iterate (x, x_star) against the reference x_hat:
 *   rel_residual = |Ax - b| / |b|, rel_error = |x - x_hat| / |x_hat|,
 *   bregman      = D_f^{x_star}(x, x_hat).
 * A zero b or x_hat leaves the corresponding norm unnormalized.
 * Throws DimensionMismatch on length disagreement.
 */
EpochMetrics compute_metrics(const LinearSystem& sys, const Potential& pot, const Eigen::Ref<const Vector>& x,
                             const Eigen::Ref<const Vector>& x_star, const Eigen::Ref<const Vector>& x_hat);

struct EpochRecord
{
    int epoch = 0;
    double rel_residual = 0.0;
    double rel_error = 0.0;
    double bregman = 0.0;
};

/// Per-epoch metrics of one seeded run. Epoch 0 is the starting point.
struct TrialLog
{
    std::string method;
    std::uint64_t seed = 0;
    std::vector<EpochRecord> records;
};

} // namespace arbk
