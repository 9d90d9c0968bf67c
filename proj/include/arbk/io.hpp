#pragma once
#include <arbk/experiments.hpp>
#include <arbk/metrics.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace arbk::io {

/// Throws IoError when the file cannot be read.
std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so a
/// failed write never leaves a partial file behind. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

/**
 * Problem file: one JSON object
 *   {"m": int, "n": int, "lambda": float, "a": [[...], ...], "b": [...], "x_hat": [...], "seed": int}
 * with `a` row-major. Doubles are written in shortest round-trip form.
 */
std::string problem_to_json(const GeneratedProblem& problem);

/// Throws FormatError on missing fields, wrong shapes or non-finite values,
/// and ZeroRow for a zero row in `a`.
GeneratedProblem problem_from_json(std::string_view text);

void save_problem(const std::filesystem::path& path, const GeneratedProblem& problem);
GeneratedProblem load_problem(const std::filesystem::path& path);

/// Header `epoch,rel_residual,rel_error,bregman`, one line per record.
std::string trial_csv(const TrialLog& log);

/// Header `method,epoch,metric,mean,median,min,max`, rows in table order.
std::string aggregate_csv(const AggregateTable& table);

/**
 * Parses either log format. A single-run log becomes an aggregate table whose
 * statistics all equal the logged value, labelled `method`. Throws FormatError
 * naming the offending column for a bad header, and on empty or malformed data.
 */
AggregateTable parse_log_csv(std::string_view text, std::string_view method = "run");

} // namespace arbk::io
