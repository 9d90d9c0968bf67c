#pragma once
#include <arbk/types.hpp>

#include <cmath>

namespace arbk {

/// Soft shrinkage of a single value: max{|v| - lambda, 0} * sign(v).
inline double shrink(double v, double lambda) noexcept
{
    if (v > lambda) return v - lambda;
    if (v < -lambda) return v + lambda;
    return 0.0;
}

/// Componentwise soft shrinkage S_lambda(x).
Vector soft_shrink(const Eigen::Ref<const Vector>& x, double lambda);

/// A primal point together with the subgradient that certifies it,
/// i.e. x_star is in the subdifferential of f at x.
struct BregmanPoint
{
    Vector x;
    Vector x_star;
};

/**
 * The sparsity-promoting potential f(x) = lambda * |x|_1 + 0.5 * |x|_2^2.
 *
 * f is 1-strongly convex; its conjugate is f*(x*) = 0.5 * |S_lambda(x*)|^2
 * with gradient S_lambda. With lambda = 0 everything collapses to the
 * quadratic f(x) = 0.5 * |x|^2 and the Bregman distance becomes the
 * halved squared Euclidean distance.
 *
 * Immutable after construction and safe to share between threads.
 */
class Potential
{
public:
    /// Throws InvalidArgument unless lambda is finite and nonnegative.
    explicit Potential(double lambda = 0.0);

    double lambda() const noexcept { return lambda_; }

    double value(const Eigen::Ref<const Vector>& x) const;
    double conjugate_value(const Eigen::Ref<const Vector>& x_star) const;
    Vector conjugate_gradient(const Eigen::Ref<const Vector>& x_star) const;

    /// Returns x + lambda * s with s_j = sign(x_j), and s_j = 0 where x_j = 0.
    Vector subgradient(const Eigen::Ref<const Vector>& x) const;

    /// Bregman point whose dual part is subgradient(x).
    BregmanPoint at_primal(Vector x) const;
    /// Bregman point whose primal part is conjugate_gradient(x_star).
    BregmanPoint at_dual(Vector x_star) const;

    /**
     * D_f^{x*}(x, y) evaluated in conjugate form f*(x*) - <x*, y> + f(y).
     * Only uses from.x_star; the result is >= 0.5 * |from.x - y|^2.
     * Throws DimensionMismatch when the lengths disagree.
     */
    double bregman_distance(const BregmanPoint& from, const Eigen::Ref<const Vector>& y) const;

private:
    double lambda_;
};

} // namespace arbk
