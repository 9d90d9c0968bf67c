#include <arbk/experiments.hpp>

#include <arbk/errors.hpp>
#include <arbk/potential.hpp>
#include <arbk/rng.hpp>

#include <Eigen/SVD>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace arbk {

namespace {

constexpr int kMaxTargetDraws = 100;

LinearSystem make_system(RowMatrix a, const Vector& x_hat)
{
    Vector b = a * x_hat;
    return LinearSystem(std::move(a), std::move(b));
}

} // namespace

GeneratedProblem generate(const ProblemSpec& spec)
{
    if (spec.m < 1 || spec.n < 1) throw InvalidArgument("m and n must be at least 1");
    const Potential pot(spec.lambda);

    Rng rng(spec.seed);
    RowMatrix a(spec.m, spec.n);
    for (Index i = 0; i < spec.m; ++i) {
        for (Index j = 0; j < spec.n; ++j) a(i, j) = rng.normal();
    }

    Vector y(spec.m);
    for (int attempt = 0; attempt < kMaxTargetDraws; ++attempt) {
        for (Index i = 0; i < spec.m; ++i) y[i] = rng.normal();
        Vector x_hat = pot.conjugate_gradient(a.transpose() * y);
        const Index nnz = (x_hat.array() != 0.0).count();
        if (nnz == 0) continue;
        LinearSystem sys = make_system(std::move(a), x_hat);
        return GeneratedProblem{spec, std::move(sys), std::move(x_hat), nnz, y};
    }
    throw DegenerateTarget("lambda = " + std::to_string(spec.lambda) + " shrinks A^T y to zero in "
                           + std::to_string(kMaxTargetDraws) + " draws");
}

double condition_number(const RowMatrix& a)
{
    Eigen::BDCSVD<Eigen::MatrixXd> svd(a);
    const Vector& s = svd.singularValues();
    return s[0] / s[s.size() - 1];
}

const std::vector<std::string>& metric_names()
{
    static const std::vector<std::string> names{"bregman", "rel_error", "rel_residual"};
    return names;
}

namespace {

double metric_of(const EpochRecord& r, std::size_t metric)
{
    switch (metric) {
    case 0: return r.bregman;
    case 1: return r.rel_error;
    default: return r.rel_residual;
    }
}

double median_of(std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

} // namespace

AggregateTable aggregate(const std::vector<TrialLog>& logs)
{
    std::map<std::string, std::vector<const TrialLog*>> by_method;
    for (const auto& log : logs) {
        if (!log.records.empty()) by_method[log.method].push_back(&log);
    }

    AggregateTable table;
    for (const auto& [method, group] : by_method) {
        int last_epoch = 0;
        for (const TrialLog* log : group) last_epoch = std::max(last_epoch, log->records.back().epoch);

        std::vector<std::size_t> cursor(group.size(), 0);
        std::vector<double> values(group.size());
        for (int epoch = 0; epoch <= last_epoch; ++epoch) {
            bool present = false;
            for (std::size_t t = 0; t < group.size(); ++t) {
                const auto& recs = group[t]->records;
                while (cursor[t] + 1 < recs.size() && recs[cursor[t] + 1].epoch <= epoch) ++cursor[t];
                present = present || recs[cursor[t]].epoch == epoch;
            }
            if (!present) continue;
            for (std::size_t metric = 0; metric < metric_names().size(); ++metric) {
                for (std::size_t t = 0; t < group.size(); ++t) {
                    values[t] = metric_of(group[t]->records[cursor[t]], metric);
                }
                AggregateRow row{method, epoch, metric_names()[metric], 0.0, median_of(values), 0.0, 0.0};
                double sum = 0.0;
                for (double v : values) sum += v;
                row.mean = sum / static_cast<double>(values.size());
                auto [lo, hi] = std::minmax_element(values.begin(), values.end());
                row.min = *lo;
                row.max = *hi;
                table.push_back(std::move(row));
            }
        }
    }
    return table;
}

TrialsResult run_trials(const GeneratedProblem& problem, const TrialsConfig& config)
{
    if (config.trials < 1) throw InvalidArgument("trials must be at least 1");
    if (config.methods.empty()) throw InvalidArgument("at least one method is required");

    const Potential pot(problem.spec.lambda);
    RunOptions options;
    options.theta0 = config.theta0;
    options.constant_theta = config.constant_theta;
    options.reference = problem.x_hat;

    const std::size_t per_method = static_cast<std::size_t>(config.trials);
    const std::size_t jobs = config.methods.size() * per_method;
    std::vector<TrialLog> logs(jobs);

    unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, jobs));

    std::atomic<std::size_t> next_job{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t job = next_job++; job < jobs; job = next_job++) {
            const Method method = config.methods[job / per_method];
            const std::uint64_t seed = config.seed_base + job % per_method;
            try {
                logs[job] = run(method, problem.sys, pot, seed, config.stop, options).log;
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
        worker();
    }
    if (failure) std::rethrow_exception(failure);

    TrialsResult result;
    result.table = aggregate(logs);
    result.logs = std::move(logs);
    return result;
}

} // namespace arbk
