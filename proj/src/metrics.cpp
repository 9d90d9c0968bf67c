#include <arbk/metrics.hpp>

#include <arbk/errors.hpp>

namespace arbk {

EpochMetrics compute_metrics(const LinearSystem& sys, const Potential& pot, const Eigen::Ref<const Vector>& x,
                             const Eigen::Ref<const Vector>& x_star, const Eigen::Ref<const Vector>& x_hat)
{
    if (x.size() != sys.cols() || x_star.size() != sys.cols() || x_hat.size() != sys.cols()) {
        throw DimensionMismatch("metrics: iterate, subgradient and reference must all have length "
                                + std::to_string(sys.cols()));
    }
    const double b_norm = sys.rhs().norm();
    const double ref_norm = x_hat.norm();

    EpochMetrics out;
    out.rel_residual = sys.residual(x) / (b_norm > 0.0 ? b_norm : 1.0);
    out.rel_error = (x - x_hat).norm() / (ref_norm > 0.0 ? ref_norm : 1.0);
    out.bregman = pot.bregman_distance(BregmanPoint{x, x_star}, x_hat);
    return out;
}

} // namespace arbk
