#include <arbk/io.hpp>

#include <arbk/errors.hpp>

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <vector>

namespace arbk::io {

namespace fs = std::filesystem;
using nlohmann::json;

std::string read_file(const fs::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("failed reading '" + path.string() + "'");
    return buf.str();
}

void write_file_atomic(const fs::path& path, std::string_view content)
{
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ignored;
            fs::remove(tmp, ignored);
            throw IoError("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        std::error_code ignored;
        fs::remove(tmp, ignored);
        throw IoError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
    }
}

std::string format_double(double v)
{
    return fmt::format("{}", v);
}

std::string problem_to_json(const GeneratedProblem& problem)
{
    const auto& a = problem.sys.matrix();
    json rows = json::array();
    for (Index i = 0; i < a.rows(); ++i) {
        rows.push_back(std::vector<double>(a.row(i).begin(), a.row(i).end()));
    }
    const auto& b = problem.sys.rhs();
    json doc;
    doc["m"] = a.rows();
    doc["n"] = a.cols();
    doc["lambda"] = problem.spec.lambda;
    doc["a"] = std::move(rows);
    doc["b"] = std::vector<double>(b.begin(), b.end());
    doc["x_hat"] = std::vector<double>(problem.x_hat.begin(), problem.x_hat.end());
    doc["seed"] = problem.spec.seed;
    return doc.dump() + "\n";
}

namespace {

double finite_number(const json& v, std::string_view what)
{
    if (!v.is_number()) throw FormatError(std::string(what) + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw FormatError(std::string(what) + " must be finite");
    return d;
}

Vector read_vector(const json& doc, const char* key, Index expected)
{
    if (!doc.contains(key) || !doc[key].is_array()) throw FormatError(std::string("missing array '") + key + "'");
    const json& arr = doc[key];
    if (static_cast<Index>(arr.size()) != expected) {
        throw FormatError(std::string("'") + key + "' has length " + std::to_string(arr.size()) + ", expected "
                          + std::to_string(expected));
    }
    Vector v(expected);
    for (Index i = 0; i < expected; ++i) v[i] = finite_number(arr[static_cast<std::size_t>(i)], key);
    return v;
}

std::int64_t read_int(const json& doc, const char* key)
{
    if (!doc.contains(key) || !doc[key].is_number_integer()) {
        throw FormatError(std::string("missing integer '") + key + "'");
    }
    return doc[key].get<std::int64_t>();
}

} // namespace

GeneratedProblem problem_from_json(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(std::string("problem file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("problem file must hold a JSON object");

    ProblemSpec spec;
    spec.m = read_int(doc, "m");
    spec.n = read_int(doc, "n");
    if (spec.m < 1 || spec.n < 1) throw FormatError("'m' and 'n' must be at least 1");
    if (!doc.contains("lambda")) throw FormatError("missing number 'lambda'");
    spec.lambda = finite_number(doc["lambda"], "lambda");
    if (spec.lambda < 0.0) throw FormatError("'lambda' must be nonnegative");
    if (!doc.contains("seed") || !doc["seed"].is_number_unsigned()) {
        throw FormatError("missing nonnegative integer 'seed'");
    }
    spec.seed = doc["seed"].get<std::uint64_t>();

    if (!doc.contains("a") || !doc["a"].is_array() || static_cast<Index>(doc["a"].size()) != spec.m) {
        throw FormatError("'a' must be an array of " + std::to_string(spec.m) + " rows");
    }
    RowMatrix a(spec.m, spec.n);
    for (Index i = 0; i < spec.m; ++i) {
        const json& row = doc["a"][static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Index>(row.size()) != spec.n) {
            throw FormatError("row " + std::to_string(i) + " of 'a' must have " + std::to_string(spec.n) + " entries");
        }
        for (Index j = 0; j < spec.n; ++j) a(i, j) = finite_number(row[static_cast<std::size_t>(j)], "a");
    }
    Vector b = read_vector(doc, "b", spec.m);
    Vector x_hat = read_vector(doc, "x_hat", spec.n);
    const Index nnz = (x_hat.array() != 0.0).count();
    return GeneratedProblem{spec, LinearSystem(std::move(a), std::move(b)), std::move(x_hat), nnz};
}

void save_problem(const fs::path& path, const GeneratedProblem& problem)
{
    write_file_atomic(path, problem_to_json(problem));
}

GeneratedProblem load_problem(const fs::path& path)
{
    return problem_from_json(read_file(path));
}

std::string trial_csv(const TrialLog& log)
{
    std::string out = "epoch,rel_residual,rel_error,bregman\n";
    for (const auto& r : log.records) {
        out += fmt::format("{},{},{},{}\n", r.epoch, format_double(r.rel_residual), format_double(r.rel_error),
                           format_double(r.bregman));
    }
    return out;
}

std::string aggregate_csv(const AggregateTable& table)
{
    std::string out = "method,epoch,metric,mean,median,min,max\n";
    for (const auto& r : table) {
        out += fmt::format("{},{},{},{},{},{},{}\n", r.method, r.epoch, r.metric, format_double(r.mean),
                           format_double(r.median), format_double(r.min), format_double(r.max));
    }
    return out;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::vector<std::string_view> lines_of(std::string_view text)
{
    std::vector<std::string_view> out;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) out.push_back(line);
    }
    return out;
}

double parse_double(std::string_view field, std::size_t line_no, std::string_view column)
{
    double v = 0.0;
    if (field == "nan") return std::nan("");
    if (field == "inf") return HUGE_VAL;
    if (field == "-inf") return -HUGE_VAL;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw FormatError("line " + std::to_string(line_no) + ": column '" + std::string(column)
                          + "' is not a number: '" + std::string(field) + "'");
    }
    return v;
}

int parse_epoch(std::string_view field, std::size_t line_no)
{
    int v = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
    if (ec != std::errc() || ptr != field.data() + field.size() || v < 0) {
        throw FormatError("line " + std::to_string(line_no) + ": column 'epoch' is not a nonnegative integer: '"
                          + std::string(field) + "'");
    }
    return v;
}

void check_header(const std::vector<std::string_view>& got, const std::vector<std::string_view>& want)
{
    for (std::size_t c = 0; c < want.size(); ++c) {
        if (c >= got.size()) throw FormatError("header is missing column '" + std::string(want[c]) + "'");
        if (got[c] != want[c]) {
            throw FormatError("unexpected header column '" + std::string(got[c]) + "' at position "
                              + std::to_string(c + 1) + " (expected '" + std::string(want[c]) + "')");
        }
    }
    if (got.size() > want.size()) {
        throw FormatError("unexpected header column '" + std::string(got[want.size()]) + "'");
    }
}

} // namespace

AggregateTable parse_log_csv(std::string_view text, std::string_view method)
{
    const auto lines = lines_of(text);
    if (lines.empty()) throw FormatError("log file is empty");
    const auto header = split(lines[0], ',');
    if (lines.size() < 2) throw FormatError("log file has a header but no data rows");

    static const std::vector<std::string_view> aggregate_header{"method", "epoch", "metric", "mean",
                                                                 "median", "min",   "max"};
    static const std::vector<std::string_view> trial_header{"epoch", "rel_residual", "rel_error", "bregman"};

    AggregateTable table;
    if (!header.empty() && header[0] == "method") {
        check_header(header, aggregate_header);
        for (std::size_t l = 1; l < lines.size(); ++l) {
            const auto f = split(lines[l], ',');
            if (f.size() != aggregate_header.size()) {
                throw FormatError("line " + std::to_string(l + 1) + ": expected 7 fields, got "
                                  + std::to_string(f.size()));
            }
            if (f[0].empty()) throw FormatError("line " + std::to_string(l + 1) + ": column 'method' is empty");
            const auto& names = metric_names();
            if (std::find(names.begin(), names.end(), f[2]) == names.end()) {
                throw FormatError("line " + std::to_string(l + 1) + ": column 'metric' has unknown value '"
                                  + std::string(f[2]) + "'");
            }
            table.push_back(AggregateRow{std::string(f[0]), parse_epoch(f[1], l + 1), std::string(f[2]),
                                         parse_double(f[3], l + 1, "mean"), parse_double(f[4], l + 1, "median"),
                                         parse_double(f[5], l + 1, "min"), parse_double(f[6], l + 1, "max")});
        }
        return table;
    }

    check_header(header, trial_header);
    for (std::size_t l = 1; l < lines.size(); ++l) {
        const auto f = split(lines[l], ',');
        if (f.size() != trial_header.size()) {
            throw FormatError("line " + std::to_string(l + 1) + ": expected 4 fields, got " + std::to_string(f.size()));
        }
        const int epoch = parse_epoch(f[0], l + 1);
        const double residual = parse_double(f[1], l + 1, "rel_residual");
        const double error = parse_double(f[2], l + 1, "rel_error");
        const double bregman = parse_double(f[3], l + 1, "bregman");
        const std::string name(method);
        table.push_back({name, epoch, "bregman", bregman, bregman, bregman, bregman});
        table.push_back({name, epoch, "rel_error", error, error, error, error});
        table.push_back({name, epoch, "rel_residual", residual, residual, residual, residual});
    }
    return table;
}

} // namespace arbk::io
