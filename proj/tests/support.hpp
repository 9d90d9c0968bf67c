#pragma once
// Test-only generators and independent oracles.
#include <arbk/linear_system.hpp>
#include <arbk/potential.hpp>
#include <arbk/rng.hpp>

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

namespace arbk::test {

inline Vector random_vector(Rng& rng, Index n, double scale = 1.0)
{
    Vector v(n);
    for (Index j = 0; j < n; ++j) v[j] = scale * rng.normal();
    return v;
}

inline RowMatrix random_matrix(Rng& rng, Index m, Index n)
{
    RowMatrix a(m, n);
    for (Index i = 0; i < m; ++i)
        for (Index j = 0; j < n; ++j) a(i, j) = rng.normal();
    return a;
}

/// Consistent system b = A x_true with Gaussian A and a scaled Gaussian x_true.
inline LinearSystem random_consistent_system(Rng& rng, Index m, Index n, double scale = 10.0)
{
    RowMatrix a = random_matrix(rng, m, n);
    Vector x_true = random_vector(rng, n, scale);
    Vector b = a * x_true;
    return LinearSystem(std::move(a), std::move(b));
}

/// Bregman distance straight from its definition f(y) - f(x) - <x*, y - x>.
inline double bregman_by_definition(double lambda, const Vector& x, const Vector& x_star, const Vector& y)
{
    auto f = [lambda](const Vector& v) {
        double l1 = 0.0, l2 = 0.0;
        for (Index j = 0; j < v.size(); ++j) {
            l1 += std::abs(v[j]);
            l2 += v[j] * v[j];
        }
        return lambda * l1 + 0.5 * l2;
    };
    return f(y) - f(x) - x_star.dot(y - x);
}

/// Naive triple-loop |Ax - b|.
inline double naive_residual(const RowMatrix& a, const Vector& b, const Vector& x)
{
    double acc = 0.0;
    for (Index i = 0; i < a.rows(); ++i) {
        double r = -b[i];
        for (Index j = 0; j < a.cols(); ++j) r += a(i, j) * x[j];
        acc += r * r;
    }
    return std::sqrt(acc);
}

/// Minimum-norm solution A^T y with y from a direct rank-revealing solve of
/// the dual normal equations A A^T y = b.
inline Vector min_norm_solution(const RowMatrix& a, const Vector& b)
{
    const Eigen::MatrixXd gram = a * a.transpose();
    const Vector y = gram.completeOrthogonalDecomposition().solve(b);
    return a.transpose() * y;
}

inline double median(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

inline std::filesystem::path scratch_dir(const std::string& name)
{
    auto dir = std::filesystem::path(ARBK_TEST_TMPDIR) / name;
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace arbk::test
