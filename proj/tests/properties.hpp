#pragma once
// Randomized property checks for the potential, shared by the unit and
// acceptance suites. Each returns the number of failing cases.
#include "support.hpp"

#include <cmath>

namespace arbk::test {

struct PropertyCase
{
    Rng rng;
    Index n;
    double lambda;

    explicit PropertyCase(std::uint64_t seed) : rng(seed)
    {
        n = 1 + static_cast<Index>(rng.next_u64() % 20);
        const double pick = rng.uniform();
        lambda = pick < 0.2 ? 0.0 : 3.0 * rng.uniform();
    }
};

inline int check_nonexpansive(int cases, std::uint64_t seed)
{
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        PropertyCase pc(seed + c);
        const Vector x = random_vector(pc.rng, pc.n, 3.0);
        const Vector y = random_vector(pc.rng, pc.n, 3.0);
        const double lhs = (soft_shrink(x, pc.lambda) - soft_shrink(y, pc.lambda)).norm();
        if (lhs > (x - y).norm() * (1.0 + 1e-15)) ++failures;
    }
    return failures;
}

/// Central differences of f* against S_lambda at h = 1e-5, tolerance 1e-6,
/// at points whose components stay at least 10h away from the kinks +-lambda.
inline int check_conjugate_gradient_fd(int cases, std::uint64_t seed)
{
    constexpr double h = 1e-5;
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        PropertyCase pc(seed + c);
        const Potential pot(pc.lambda);
        Vector x_star(pc.n);
        for (Index j = 0; j < pc.n; ++j) {
            double v;
            do {
                v = 3.0 * pc.rng.normal();
            } while (std::abs(v - pc.lambda) <= 10 * h || std::abs(v + pc.lambda) <= 10 * h);
            x_star[j] = v;
        }
        const Vector grad = pot.conjugate_gradient(x_star);
        for (Index j = 0; j < pc.n; ++j) {
            Vector up = x_star, down = x_star;
            up[j] += h;
            down[j] -= h;
            const double fd = (pot.conjugate_value(up) - pot.conjugate_value(down)) / (2 * h);
            if (std::abs(fd - grad[j]) > 1e-6) {
                ++failures;
                break;
            }
        }
    }
    return failures;
}

inline int check_fenchel_equality(int cases, std::uint64_t seed)
{
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        PropertyCase pc(seed + c);
        const Potential pot(pc.lambda);
        Vector x = random_vector(pc.rng, pc.n, 2.0);
        // Exact zeros exercise the s_j = 0 selection.
        for (Index j = 0; j < pc.n; ++j)
            if (pc.rng.uniform() < 0.2) x[j] = 0.0;
        const Vector x_star = pot.subgradient(x);
        const double gap = pot.value(x) + pot.conjugate_value(x_star) - x.dot(x_star);
        if (std::abs(gap) > 1e-10) ++failures;
    }
    return failures;
}

inline int check_bregman_lower_bound(int cases, std::uint64_t seed)
{
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        PropertyCase pc(seed + c);
        const Potential pot(pc.lambda);
        const BregmanPoint from = pot.at_dual(random_vector(pc.rng, pc.n, 3.0));
        const Vector y = random_vector(pc.rng, pc.n, 3.0);
        if (pot.bregman_distance(from, y) < 0.5 * (from.x - y).squaredNorm() - 1e-12) ++failures;
    }
    return failures;
}

inline int check_bregman_forms_agree(int cases, std::uint64_t seed)
{
    int failures = 0;
    for (int c = 0; c < cases; ++c) {
        PropertyCase pc(seed + c);
        const Potential pot(pc.lambda);
        const BregmanPoint from = pot.at_primal(random_vector(pc.rng, pc.n, 2.0));
        const Vector y = random_vector(pc.rng, pc.n, 2.0);
        const double conj = pot.bregman_distance(from, y);
        const double def = bregman_by_definition(pc.lambda, from.x, from.x_star, y);
        if (std::abs(conj - def) > 1e-10 * std::max(1.0, std::abs(def))) ++failures;
    }
    return failures;
}

inline int check_quadratic_collapse(int cases, std::uint64_t seed)
{
    int failures = 0;
    const Potential pot(0.0);
    for (int c = 0; c < cases; ++c) {
        PropertyCase pc(seed + c);
        const BregmanPoint from = pot.at_primal(random_vector(pc.rng, pc.n));
        const Vector y = random_vector(pc.rng, pc.n);
        if (std::abs(pot.bregman_distance(from, y) - 0.5 * (from.x - y).squaredNorm()) > 1e-12) ++failures;
    }
    return failures;
}

} // namespace arbk::test
