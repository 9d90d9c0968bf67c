#pragma once
#include <arbk/linear_system.hpp>
#include <arbk/metrics.hpp>
#include <arbk/solvers.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace arbk {

struct ProblemSpec
{
    Index m = 1;
    Index n = 1;
    double lambda = 0.0;
    std::uint64_t seed = 0;
};

/**
 * Synthetic consistent sparse-recovery instance.
 *
 * A has i.i.d. standard normal entries, y ~ N(0, I_m), x_hat = S_lambda(A^T y)
 * and b = A x_hat. Since x_hat = grad f*(A^T y) and A x_hat = b, x_hat is the
 * exact minimizer of f subject to Ax = b, and y is a dual solution.
 */
struct GeneratedProblem
{
    ProblemSpec spec;
    LinearSystem sys;
    Vector x_hat;
    Index sparsity = 0;
    /// The y that produced x_hat = grad f*(A^T y). It is a dual solution.
    /// Empty for problems loaded from disk.
    Vector y_hat;
};

/// Draws A row by row, then y, from Rng(spec.seed). Redraws y while x_hat = 0
/// and throws DegenerateTarget after 100 failed draws. Throws InvalidArgument
/// for m or n < 1 or a negative lambda.
GeneratedProblem generate(const ProblemSpec& spec);

/// sigma_max / sigma_min of A over its min(m, n) singular values.
double condition_number(const RowMatrix& a);

/// Largest dimension for which condition numbers are computed as metadata.
inline constexpr Index kConditionNumberLimit = 1000;

struct AggregateRow
{
    std::string method;
    int epoch = 0;
    std::string metric;
    double mean = 0.0;
    double median = 0.0;
    double min = 0.0;
    double max = 0.0;
};

/// Rows ordered by method, then epoch, then metric name (all ascending).
using AggregateTable = std::vector<AggregateRow>;

/// Metric column names in output order: bregman, rel_error, rel_residual.
const std::vector<std::string>& metric_names();

/**
 * Reduces trial logs to per-(method, epoch, metric) mean, median, min and max.
 * A trial that stopped early contributes its last record to the later epochs
 * of its method.
 */
AggregateTable aggregate(const std::vector<TrialLog>& logs);

struct TrialsConfig
{
    std::vector<Method> methods;
    int trials = 10;
    StoppingRule stop;
    std::uint64_t seed_base = 0;
    std::optional<double> theta0;
    bool constant_theta = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

struct TrialsResult
{
    AggregateTable table;
    /// Ordered by method (as given), then trial.
    std::vector<TrialLog> logs;
};

/**
 * Runs every method `trials` times on the same problem. Trial t uses the row
 * stream seeded with seed_base + t for every method, so methods are compared
 * on common random numbers. Trials run in parallel; the result does not
 * depend on the thread count.
 */
TrialsResult run_trials(const GeneratedProblem& problem, const TrialsConfig& config);

} // namespace arbk
