#pragma once
#include <cstddef>
#include <stdexcept>
#include <string>

namespace arbk {

class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error
{
public:
    using Error::Error;
};

class ZeroRow : public Error
{
public:
    explicit ZeroRow(std::size_t row)
        : Error("row " + std::to_string(row) + " has zero norm"), row_(row)
    {}
    std::size_t row() const noexcept { return row_; }

private:
    std::size_t row_;
};

class IndexOutOfRange : public Error
{
public:
    using Error::Error;
};

// An iterate left the finite range. Indicates a defect, not an expected path.
class NonFinite : public Error
{
public:
    using Error::Error;
};

class DegenerateTarget : public Error
{
public:
    using Error::Error;
};

class InvalidArgument : public Error
{
public:
    using Error::Error;
};

/// File system failure while reading or writing a file.
class IoError : public Error
{
public:
    using Error::Error;
};

/// Malformed input file contents (problem JSON, log CSV).
class FormatError : public Error
{
public:
    using Error::Error;
};

} // namespace arbk
