#include <arbk/linear_system.hpp>

#include <arbk/errors.hpp>

#include <algorithm>
#include <string>

namespace arbk {

LinearSystem::LinearSystem(RowMatrix a, Vector b) : a_(std::move(a)), b_(std::move(b))
{
    if (a_.rows() < 1 || a_.cols() < 1) {
        throw DimensionMismatch("matrix must have at least one row and one column");
    }
    if (b_.size() != a_.rows()) {
        throw DimensionMismatch("right-hand side has length " + std::to_string(b_.size()) + ", expected "
                                + std::to_string(a_.rows()));
    }
    row_sq_norms_ = a_.rowwise().squaredNorm();
    for (Index i = 0; i < a_.rows(); ++i) {
        if (!(row_sq_norms_[i] > 0.0)) throw ZeroRow(static_cast<std::size_t>(i));
    }
    frob_sq_ = row_sq_norms_.sum();
}

double LinearSystem::residual(const Eigen::Ref<const Vector>& x) const
{
    if (x.size() != cols()) {
        throw DimensionMismatch("residual: x has length " + std::to_string(x.size()) + ", expected "
                                + std::to_string(cols()));
    }
    return (a_ * x - b_).norm();
}

RowSampler::RowSampler(const LinearSystem& sys, std::uint64_t seed)
    : probabilities_(sys.row_sq_norms() / sys.frob_sq()), rng_(seed)
{
    const auto& w = sys.row_sq_norms();
    cumulative_.resize(static_cast<std::size_t>(w.size()));
    double acc = 0.0;
    for (Index i = 0; i < w.size(); ++i) {
        acc += w[i];
        cumulative_[static_cast<std::size_t>(i)] = acc;
    }
}

Index RowSampler::next()
{
    const double target = rng_.uniform() * cumulative_.back();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
    if (it == cumulative_.end()) --it;
    return static_cast<Index>(it - cumulative_.begin());
}

} // namespace arbk
