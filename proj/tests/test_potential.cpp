#include "properties.hpp"

#include <arbk/errors.hpp>
#include <arbk/potential.hpp>

#include <doctest.h>

using namespace arbk;
using doctest::Approx;

namespace {

Vector vec(std::initializer_list<double> v)
{
    Vector out(static_cast<Index>(v.size()));
    Index j = 0;
    for (double x : v) out[j++] = x;
    return out;
}

} // namespace

TEST_CASE("soft_shrink evaluates componentwise")
{
    CHECK(soft_shrink(vec({3, -1, 0.5}), 2.0) == vec({1, 0, 0}));
    CHECK(soft_shrink(vec({3, -1, 0.5}), 0.0) == vec({3, -1, 0.5}));
    CHECK(soft_shrink(vec({-5}), 1.5) == vec({-3.5}));
    CHECK(shrink(0.0, 0.0) == 0.0);
}

TEST_CASE("potential values")
{
    CHECK(Potential(2.0).value(vec({1, -1})) == Approx(5.0));
    CHECK(Potential(0.0).value(vec({3, 4})) == Approx(12.5));
    CHECK(Potential(1.0).value(Vector::Zero(3)) == 0.0);

    CHECK(Potential(2.0).conjugate_value(vec({3, -1})) == Approx(0.5));
    CHECK(Potential(0.0).conjugate_value(vec({3, 4})) == Approx(12.5));
    CHECK(Potential(5.0).conjugate_value(vec({1, 1})) == 0.0);
}

TEST_CASE("conjugate gradient is the shrinkage")
{
    CHECK(Potential(2.0).conjugate_gradient(vec({3, -1, 0.5})) == vec({1, 0, 0}));
    const Vector any = vec({0.3, -7, 2});
    CHECK(Potential(0.0).conjugate_gradient(any) == any);

    // Away from the kink the gradient at [1 + h, 0] is [h, 0]; compare with
    // central differences of f*.
    const Potential pot(1.0);
    const double h = 0.25;
    const Vector at = vec({1 + h, 0});
    const Vector g = pot.conjugate_gradient(at);
    CHECK(g[0] == Approx(h));
    CHECK(g[1] == 0.0);
    const double step = 1e-5;
    for (Index j = 0; j < 2; ++j) {
        Vector up = at, down = at;
        up[j] += step;
        down[j] -= step;
        CHECK((pot.conjugate_value(up) - pot.conjugate_value(down)) / (2 * step) == Approx(g[j]).epsilon(1e-8));
    }
}

TEST_CASE("subgradient selection")
{
    CHECK(Potential(2.0).subgradient(vec({1, 0, -3})) == vec({3, 0, -5}));
    CHECK(Potential(0.0).subgradient(vec({4, 5})) == vec({4, 5}));

    const Potential pot(1.0);
    const Vector x = vec({2});
    const Vector x_star = pot.subgradient(x);
    CHECK(x_star == vec({3}));
    CHECK(pot.value(x) == Approx(4.0));
    CHECK(pot.conjugate_value(x_star) == Approx(2.0));
    CHECK(pot.value(x) + pot.conjugate_value(x_star) == Approx(x.dot(x_star)));
}

TEST_CASE("bregman distance")
{
    SUBCASE("quadratic case is half the squared distance")
    {
        const Potential pot(0.0);
        CHECK(pot.bregman_distance({vec({1, 2}), vec({1, 2})}, vec({0, 0})) == Approx(2.5));
    }
    SUBCASE("distance to itself vanishes")
    {
        for (double lambda : {0.0, 0.5, 3.0}) {
            const Potential pot(lambda);
            const BregmanPoint p = pot.at_primal(vec({1.5, 0, -0.2}));
            CHECK(pot.bregman_distance(p, p.x) == Approx(0.0).epsilon(1e-14));
        }
    }
    SUBCASE("conjugate and definition forms agree")
    {
        const Potential pot(1.0);
        const BregmanPoint p{vec({2}), vec({3})};
        const double def = test::bregman_by_definition(1.0, p.x, p.x_star, vec({-1}));
        CHECK(def == Approx(6.5));
        CHECK(pot.bregman_distance(p, vec({-1})) == Approx(6.5));
    }
    SUBCASE("dimension mismatch")
    {
        const Potential pot(1.0);
        CHECK_THROWS_AS(pot.bregman_distance(pot.at_primal(vec({1, 2})), vec({1})), DimensionMismatch);
    }
}

TEST_CASE("negative or non-finite lambda is rejected")
{
    CHECK_THROWS_AS(Potential(-1.0), InvalidArgument);
    CHECK_THROWS_AS(Potential(std::nan("")), InvalidArgument);
}

TEST_CASE("potential properties on random inputs")
{
    CHECK(test::check_nonexpansive(300, 11) == 0);
    CHECK(test::check_conjugate_gradient_fd(300, 12) == 0);
    CHECK(test::check_fenchel_equality(300, 13) == 0);
    CHECK(test::check_bregman_lower_bound(300, 14) == 0);
    CHECK(test::check_bregman_forms_agree(300, 15) == 0);
    CHECK(test::check_quadratic_collapse(300, 16) == 0);
}
