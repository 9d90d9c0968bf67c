#include <arbk/solvers.hpp>

#include <arbk/errors.hpp>

#include <cmath>
#include <limits>
#include <string>

namespace arbk {

namespace {

void check_row(const LinearSystem& sys, Index i)
{
    if (i < 0 || i >= sys.rows()) {
        throw IndexOutOfRange("row index " + std::to_string(i) + " outside [0, " + std::to_string(sys.rows())
                              + ")");
    }
}

// a_i^T S_lambda(c) without materializing S_lambda(c).
template <class Row>
double row_dot_shrink(const Row& row, const Vector& c, double lambda)
{
    double acc = 0.0;
    for (Index j = 0; j < c.size(); ++j) acc += row[j] * shrink(c[j], lambda);
    return acc;
}

} // namespace

BkState BkState::start(const Potential& pot, Vector x_star0)
{
    Vector x = pot.conjugate_gradient(x_star0);
    return {std::move(x_star0), std::move(x), 0};
}

ArbkState ArbkState::start(Vector x_star0, ThetaSchedule theta)
{
    Vector t = x_star0;
    return {std::move(x_star0), std::move(t), theta, 0};
}

AcdState AcdState::start(Vector y0, ThetaSchedule theta)
{
    Vector z = y0;
    return {std::move(y0), std::move(z), theta, 0};
}

void bk_step(BkState& s, const LinearSystem& sys, const Potential& pot, Index i)
{
    check_row(sys, i);
    const auto a = sys.row(i);
    const double r = a.dot(s.x) - sys.rhs()[i];
    s.x_star.noalias() -= (r / sys.row_sq_norms()[i]) * a.transpose();
    const double lambda = pot.lambda();
    for (Index j = 0; j < s.x.size(); ++j) s.x[j] = shrink(s.x_star[j], lambda);
    ++s.k;
}

void arbk_step(ArbkState& s, const LinearSystem& sys, const Potential& pot, Index i)
{
    check_row(sys, i);
    const double theta = s.theta.theta();
    const double m_theta = static_cast<double>(sys.rows()) * theta;
    const auto a = sys.row(i);

    // x_star <- c_k = (1 - theta) x*_k + theta t_k
    s.x_star = (1.0 - theta) * s.x_star + theta * s.t;
    const double r = row_dot_shrink(a, s.x_star, pot.lambda()) - sys.rhs()[i];
    const double step = -r / (m_theta * sys.row_sq_norms()[i]);
    // t_{k+1} - t_k = step * a_i and x*_{k+1} = c_k + m theta_k (t_{k+1} - t_k)
    s.t.noalias() += step * a.transpose();
    s.x_star.noalias() += (m_theta * step) * a.transpose();

    s.theta.advance();
    ++s.k;
}

void acd_step(AcdState& s, const LinearSystem& sys, const Potential& pot, Index i)
{
    check_row(sys, i);
    const double theta = s.theta.theta();
    const double m_theta = static_cast<double>(sys.rows()) * theta;

    // y <- v_k = (1 - theta) y_k + theta z_k
    s.y = (1.0 - theta) * s.y + theta * s.z;
    const Vector c = sys.matrix().transpose() * s.y;
    const double r = row_dot_shrink(sys.row(i), c, pot.lambda()) - sys.rhs()[i];
    const double step = -r / (m_theta * sys.row_sq_norms()[i]);
    s.z[i] += step;
    s.y[i] += m_theta * step;

    s.theta.advance();
    ++s.k;
}

std::string_view method_name(Method m) noexcept
{
    switch (m) {
    case Method::bk: return "bk";
    case Method::arbk: return "arbk";
    case Method::acd_dual: return "acd-dual";
    }
    return "unknown";
}

Method parse_method(std::string_view name)
{
    if (name == "bk") return Method::bk;
    if (name == "arbk") return Method::arbk;
    if (name == "acd-dual" || name == "acd_dual") return Method::acd_dual;
    throw InvalidArgument("unknown method '" + std::string(name) + "' (expected bk, arbk or acd-dual)");
}

namespace {

// Uniform view over the three iterate types for the run loop.
struct Iterate
{
    Method method;
    std::optional<BkState> bk;
    std::optional<ArbkState> arbk;
    std::optional<AcdState> acd;

    void step(const LinearSystem& sys, const Potential& pot, Index i)
    {
        switch (method) {
        case Method::bk: bk_step(*bk, sys, pot, i); break;
        case Method::arbk: arbk_step(*arbk, sys, pot, i); break;
        case Method::acd_dual: acd_step(*acd, sys, pot, i); break;
        }
    }

    Vector x_star(const LinearSystem& sys) const
    {
        switch (method) {
        case Method::bk: return bk->x_star;
        case Method::arbk: return arbk->x_star;
        case Method::acd_dual: return acd->dual_image(sys);
        }
        return {};
    }
};

} // namespace

RunResult run(Method method, const LinearSystem& sys, const Potential& pot, std::uint64_t seed,
              const StoppingRule& stop, const RunOptions& options)
{
    if (stop.max_epochs < 1) throw InvalidArgument("max_epochs must be at least 1");
    if (!(stop.residual_tol >= 0.0)) throw InvalidArgument("residual_tol must be nonnegative");

    const Index m = sys.rows();
    const Index n = sys.cols();
    Vector y0 = options.y0.value_or(Vector::Zero(m));
    if (y0.size() != m) throw DimensionMismatch("y0 must have length " + std::to_string(m));
    if (options.reference && options.reference->size() != n) {
        throw DimensionMismatch("reference must have length " + std::to_string(n));
    }
    const double theta0 = options.theta0.value_or(1.0 / static_cast<double>(m));
    const ThetaSchedule schedule(theta0, options.constant_theta ? ThetaSchedule::Mode::constant
                                                                : ThetaSchedule::Mode::accelerated);

    Iterate it{method, {}, {}, {}};
    switch (method) {
    case Method::bk: it.bk = BkState::start(pot, sys.matrix().transpose() * y0); break;
    case Method::arbk: it.arbk = ArbkState::start(sys.matrix().transpose() * y0, schedule); break;
    case Method::acd_dual: it.acd = AcdState::start(std::move(y0), schedule); break;
    }

    RunResult result;
    result.log.method = std::string(method_name(method));
    result.log.seed = seed;

    const double b_norm = sys.rhs().norm();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    auto record = [&](int epoch, const Vector& x, const Vector& x_star) {
        if (!x_star.allFinite()) {
            throw NonFinite(result.log.method + ": iterate became non-finite in epoch " + std::to_string(epoch));
        }
        EpochRecord rec{epoch, 0.0, nan, nan};
        if (options.reference) {
            const EpochMetrics mt = compute_metrics(sys, pot, x, x_star, *options.reference);
            rec.rel_residual = mt.rel_residual;
            rec.rel_error = mt.rel_error;
            rec.bregman = mt.bregman;
        } else {
            rec.rel_residual = sys.residual(x) / (b_norm > 0.0 ? b_norm : 1.0);
        }
        result.log.records.push_back(rec);
        return rec.rel_residual;
    };

    RowSampler sampler(sys, seed);
    Vector x_star = it.x_star(sys);
    Vector x = pot.conjugate_gradient(x_star);
    double rel_res = record(0, x, x_star);
    for (int epoch = 1; epoch <= stop.max_epochs && rel_res > stop.residual_tol; ++epoch) {
        for (Index k = 0; k < m; ++k) it.step(sys, pot, sampler.next());
        result.iterations += m;
        x_star = it.x_star(sys);
        x = pot.conjugate_gradient(x_star);
        rel_res = record(epoch, x, x_star);
    }
    result.x = std::move(x);
    result.x_star = std::move(x_star);
    return result;
}

} // namespace arbk
