#include <arbk/potential.hpp>

#include <arbk/errors.hpp>

#include <string>

namespace arbk {

Vector soft_shrink(const Eigen::Ref<const Vector>& x, double lambda)
{
    Vector out(x.size());
    for (Index j = 0; j < x.size(); ++j) out[j] = shrink(x[j], lambda);
    return out;
}

Potential::Potential(double lambda) : lambda_(lambda)
{
    if (!std::isfinite(lambda) || lambda < 0.0) {
        throw InvalidArgument("lambda must be finite and nonnegative, got " + std::to_string(lambda));
    }
}

double Potential::value(const Eigen::Ref<const Vector>& x) const
{
    return lambda_ * x.lpNorm<1>() + 0.5 * x.squaredNorm();
}

double Potential::conjugate_value(const Eigen::Ref<const Vector>& x_star) const
{
    double acc = 0.0;
    for (Index j = 0; j < x_star.size(); ++j) {
        const double s = shrink(x_star[j], lambda_);
        acc += s * s;
    }
    return 0.5 * acc;
}

Vector Potential::conjugate_gradient(const Eigen::Ref<const Vector>& x_star) const
{
    return soft_shrink(x_star, lambda_);
}

Vector Potential::subgradient(const Eigen::Ref<const Vector>& x) const
{
    Vector out(x.size());
    for (Index j = 0; j < x.size(); ++j) {
        const double s = x[j] > 0.0 ? 1.0 : (x[j] < 0.0 ? -1.0 : 0.0);
        out[j] = x[j] + lambda_ * s;
    }
    return out;
}

BregmanPoint Potential::at_primal(Vector x) const
{
    Vector x_star = subgradient(x);
    return {std::move(x), std::move(x_star)};
}

BregmanPoint Potential::at_dual(Vector x_star) const
{
    Vector x = conjugate_gradient(x_star);
    return {std::move(x), std::move(x_star)};
}

double Potential::bregman_distance(const BregmanPoint& from, const Eigen::Ref<const Vector>& y) const
{
    if (from.x_star.size() != y.size() || from.x.size() != y.size()) {
        throw DimensionMismatch("bregman_distance: point has length " + std::to_string(from.x_star.size())
                                + ", target has length " + std::to_string(y.size()));
    }
    const double d = conjugate_value(from.x_star) - from.x_star.dot(y) + value(y);
    // Rounding can push an exact zero slightly negative.
    return d < 0.0 ? 0.0 : d;
}

} // namespace arbk
