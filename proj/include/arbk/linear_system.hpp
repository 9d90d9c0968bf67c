#pragma once
#include <arbk/rng.hpp>
#include <arbk/types.hpp>

#include <cstdint>
#include <vector>

namespace arbk {

/**
 * Dense consistent linear system Ax = b with cached row norms.
 *
 * Storage is row-major so that a single row is a contiguous read-only view;
 * row-action methods never copy a row. Every row must be nonzero.
 * Immutable after construction.
 */
class LinearSystem
{
public:
    /// Throws DimensionMismatch if b.size() != a.rows() or the matrix is empty,
    /// and ZeroRow(i) for the first row with zero norm.
    LinearSystem(RowMatrix a, Vector b);

    Index rows() const noexcept { return a_.rows(); }
    Index cols() const noexcept { return a_.cols(); }

    const RowMatrix& matrix() const noexcept { return a_; }
    const Vector& rhs() const noexcept { return b_; }
    const Vector& row_sq_norms() const noexcept { return row_sq_norms_; }
    double frob_sq() const noexcept { return frob_sq_; }

    auto row(Index i) const { return a_.row(i); }

    /// |Ax - b|_2. Throws DimensionMismatch if x.size() != cols().
    double residual(const Eigen::Ref<const Vector>& x) const;

private:
    RowMatrix a_;
    Vector b_;
    Vector row_sq_norms_;
    double frob_sq_ = 0.0;
};

/**
 * Draws row indices with probability |a_i|^2 / |A|_F^2.
 *
 * Sampling is inverse-CDF: one uniform u from Rng, scaled by the total mass,
 * located in the cumulative row-norm table by binary search. Equal seeds give
 * identical index streams. Single owner; not thread safe.
 */
class RowSampler
{
public:
    RowSampler(const LinearSystem& sys, std::uint64_t seed);

    Index next();

    Index size() const noexcept { return static_cast<Index>(cumulative_.size()); }
    const Vector& probabilities() const noexcept { return probabilities_; }

private:
    Vector probabilities_;
    std::vector<double> cumulative_;
    Rng rng_;
};

} // namespace arbk
