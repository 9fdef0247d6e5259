// SPDX-License-Identifier: Apache-2.0
#include "qce/reporting.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "qce/analytics.hpp"
#include "qce/error.hpp"

namespace qce {

namespace {

constexpr std::string_view kCsvHeader =
    "snr_db,trials,errors,ser,ci_half_width,bound_lower,bound_upper,bound_up1,bound_lb1,"
    "bound_floor";

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void bad_value(std::string_view key, std::string_view why) {
    throw Error(ErrorCode::config_error,
                "key '" + std::string(key) + "': " + std::string(why));
}

double parse_double_strict(std::string_view text, std::string_view key) {
    const std::string_view t = trim(text);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size() || !std::isfinite(value)) {
        bad_value(key, "'" + std::string(t) + "' is not a finite number");
    }
    return value;
}

std::int64_t parse_int_strict(std::string_view text, std::string_view key) {
    const std::string_view t = trim(text);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        bad_value(key, "'" + std::string(t) + "' is not an integer");
    }
    return value;
}

std::uint64_t parse_uint_strict(std::string_view text, std::string_view key) {
    const std::string_view t = trim(text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
        bad_value(key, "'" + std::string(t) + "' is not an unsigned integer");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

std::vector<double> parse_snr_grid(std::string_view value, std::string_view key) {
    std::vector<double> grid;
    if (value.find(':') != std::string_view::npos) {
        const auto parts = split(value, ':');
        if (parts.size() != 3) bad_value(key, "range form is lo:step:hi");
        const double lo = parse_double_strict(parts[0], key);
        const double step = parse_double_strict(parts[1], key);
        const double hi = parse_double_strict(parts[2], key);
        if (!(step > 0.0)) bad_value(key, "step must be positive");
        if (hi < lo - 1e-9) bad_value(key, "hi must not be below lo");
        for (double v = lo; v <= hi + 1e-9; v += step) grid.push_back(v);
    } else {
        for (const auto part : split(value, ',')) {
            if (trim(part).empty()) bad_value(key, "empty grid entry");
            grid.push_back(parse_double_strict(part, key));
        }
    }
    return grid;
}

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

std::string format_int(std::int64_t v) {
    std::array<char, 24> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    (void)ec;
    return std::string(buf.data(), ptr);
}

double parse_csv_double(std::string_view field, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::io_error,
                    "CSV line " + std::to_string(line_no) + ": bad numeric field '" +
                        std::string(field) + "'");
    }
    return value;
}

std::int64_t parse_csv_int(std::string_view field, std::size_t line_no) {
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw Error(ErrorCode::io_error,
                    "CSV line " + std::to_string(line_no) + ": bad integer field '" +
                        std::string(field) + "'");
    }
    return value;
}

} // namespace

void ExperimentSpec::validate() const {
    SystemConfig probe = base;
    if (levels.empty()) throw Error(ErrorCode::config_error, "no quantization levels configured");
    for (const QuantLevels& l : levels) {
        probe.quant_levels = l;
        probe.validate();
    }
    if (alpha_samples != 0 && alpha_samples < 10000) {
        throw Error(ErrorCode::config_error, "alpha_samples must be 0 or at least 10000");
    }
    if (fit_window && !(fit_window->first < fit_window->second)) {
        throw Error(ErrorCode::config_error, "fit_window must satisfy lo < hi");
    }
    if (run.min_errors < 0) throw Error(ErrorCode::config_error, "min_errors must be >= 0");
    if (run.workers < 0) throw Error(ErrorCode::config_error, "workers must be >= 0");
    if (out_dir.empty()) throw Error(ErrorCode::config_error, "output directory is empty");
}

void apply_config_entry(ExperimentSpec& spec, std::string_view raw_key, std::string_view raw_value) {
    const std::string_view key = trim(raw_key);
    const std::string_view value = trim(raw_value);
    if (key == "n") {
        spec.base.n_antennas = static_cast<int>(parse_int_strict(value, key));
    } else if (key == "m") {
        spec.base.psk_order = static_cast<int>(parse_int_strict(value, key));
    } else if (key == "l") {
        std::vector<QuantLevels> levels;
        for (const auto part : split(value, ',')) {
            const std::string_view p = trim(part);
            if (p == "inf") {
                levels.push_back(QuantLevels::ce_limit());
            } else {
                levels.push_back(QuantLevels::finite(parse_int_strict(p, key)));
            }
        }
        if (levels.empty()) bad_value(key, "needs at least one entry");
        spec.levels = std::move(levels);
    } else if (key == "snr_db") {
        spec.base.snr_grid_db = parse_snr_grid(value, key);
    } else if (key == "trials") {
        spec.base.trials = parse_int_strict(value, key);
    } else if (key == "seed") {
        spec.base.seed = parse_uint_strict(value, key);
    } else if (key == "min_errors") {
        spec.run.min_errors = parse_int_strict(value, key);
    } else if (key == "out") {
        if (value.empty()) bad_value(key, "output path is empty");
        spec.out_dir = std::string(value);
    } else if (key == "alpha_samples") {
        spec.alpha_samples = parse_int_strict(value, key);
    } else if (key == "fit_window") {
        const char sep = value.find(':') != std::string_view::npos ? ':' : ',';
        const auto parts = split(value, sep);
        if (parts.size() != 2) bad_value(key, "window form is lo:hi");
        spec.fit_window = std::make_pair(parse_double_strict(parts[0], key),
                                         parse_double_strict(parts[1], key));
    } else if (key == "workers") {
        spec.run.workers = static_cast<int>(parse_int_strict(value, key));
    } else if (key == "total_power") {
        spec.base.total_power = parse_double_strict(value, key);
    } else {
        throw Error(ErrorCode::config_error, "unknown key '" + std::string(key) + "'");
    }
}

void load_config_file(ExperimentSpec& spec, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot open config file '" + path.string() + "'");
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view = line;
        const std::size_t hash = view.find('#');
        if (hash != std::string_view::npos) view = view.substr(0, hash);
        view = trim(view);
        if (view.empty()) continue;
        const std::size_t eq = view.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorCode::config_error,
                        path.string() + " line " + std::to_string(line_no) +
                            ": expected key = value");
        }
        try {
            apply_config_entry(spec, view.substr(0, eq), view.substr(eq + 1));
        } catch (const Error& e) {
            throw Error(e.code(), path.string() + " line " + std::to_string(line_no) + ": " +
                                      e.what());
        }
    }
}

void emit_csv(const SerCurve& curve, const std::filesystem::path& path) {
    if (curve.points.empty()) {
        throw Error(ErrorCode::invalid_argument, "refusing to write an empty curve");
    }
    if (!curve.bounds.empty() && curve.bounds.size() != curve.points.size()) {
        throw Error(ErrorCode::invalid_argument, "bound columns do not match the points");
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "' for writing");
    }
    out << kCsvHeader << '\n';
    const bool has_bounds = !curve.bounds.empty();
    for (std::size_t i = 0; i < curve.points.size(); ++i) {
        const SerPoint& p = curve.points[i];
        out << format_double(p.snr_db) << ',' << format_int(p.trials) << ','
            << format_int(p.errors) << ',' << format_double(p.ser) << ','
            << format_double(p.ci_half_width);
        const BoundColumns cols = has_bounds ? curve.bounds[i] : BoundColumns{};
        for (const auto& field : {cols.lower, cols.upper, cols.up1, cols.lb1, cols.floor}) {
            out << ',';
            if (field) out << format_double(*field);
        }
        out << '\n';
    }
    if (!out) {
        throw Error(ErrorCode::io_error, "write to '" + path.string() + "' failed");
    }
}

SerCurve parse_csv(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::io_error, "cannot open '" + path.string() + "'");
    }
    std::string line;
    if (!std::getline(in, line) || trim(line) != kCsvHeader) {
        throw Error(ErrorCode::io_error, "'" + path.string() + "': missing or wrong CSV header");
    }
    SerCurve curve;
    bool any_bound = false;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view view = trim(line);
        if (view.empty()) continue;
        const auto fields = split(view, ',');
        if (fields.size() != 10) {
            throw Error(ErrorCode::io_error, "CSV line " + std::to_string(line_no) +
                                                 ": expected 10 fields, got " +
                                                 std::to_string(fields.size()));
        }
        SerPoint p;
        p.snr_db = parse_csv_double(fields[0], line_no);
        p.trials = parse_csv_int(fields[1], line_no);
        p.errors = parse_csv_int(fields[2], line_no);
        p.ser = parse_csv_double(fields[3], line_no);
        p.ci_half_width = parse_csv_double(fields[4], line_no);
        BoundColumns cols;
        const std::array<std::optional<double> BoundColumns::*, 5> members = {
            &BoundColumns::lower, &BoundColumns::upper, &BoundColumns::up1, &BoundColumns::lb1,
            &BoundColumns::floor};
        for (std::size_t f = 0; f < members.size(); ++f) {
            const std::string_view field = fields[5 + f];
            if (!field.empty()) {
                cols.*members[f] = parse_csv_double(field, line_no);
                any_bound = true;
            }
        }
        curve.points.push_back(p);
        curve.bounds.push_back(cols);
    }
    if (!any_bound) curve.bounds.clear();
    return curve;
}

std::string VariantSummary::to_line() const {
    std::ostringstream os;
    os.precision(4);
    os << "L=" << levels.label() << ": predicted diversity " << predicted.num;
    if (predicted.den != 1) os << '/' << predicted.den;
    if (fit) {
        os << ", fitted slope " << fit->slope << " over [" << fit->fit_window_db.first << ", "
           << fit->fit_window_db.second << "] dB";
    } else {
        os << ", fitted slope unavailable";
    }
    if (floor && floor->detected) {
        os << ", floor at SER " << floor->floor_ser;
    }
    return os.str();
}

ExperimentResult run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    std::error_code fs_error;
    std::filesystem::create_directories(spec.out_dir, fs_error);
    if (fs_error) {
        throw Error(ErrorCode::io_error,
                    "cannot create output directory '" + spec.out_dir + "': " +
                        fs_error.message());
    }
    const std::pair<double, double> window = spec.fit_window.value_or(
        std::make_pair(spec.base.snr_grid_db.front(), spec.base.snr_grid_db.back()));

    ExperimentResult result;
    std::vector<std::string> summary_rows;
    for (const QuantLevels& levels : spec.levels) {
        SystemConfig config = spec.base;
        config.quant_levels = levels;
        SerCurve curve = run_ser(config, spec.run);
        if (spec.alpha_samples > 0) curve = attach_bounds(std::move(curve), spec.alpha_samples);

        const std::filesystem::path csv_path =
            std::filesystem::path(spec.out_dir) / ("ser_L" + levels.label() + ".csv");
        emit_csv(curve, csv_path);

        VariantSummary summary;
        summary.levels = levels;
        summary.predicted = predicted_diversity(config);
        summary.csv_path = csv_path;
        try {
            summary.fit = fit_diversity(curve, window);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::insufficient_data) throw;
        }
        try {
            summary.floor = floor_detect(curve);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::insufficient_data) throw;
        }

        std::ostringstream row;
        row << levels.label() << ',' << format_double(summary.predicted.value()) << ',';
        if (summary.fit) {
            row << format_double(summary.fit->slope) << ','
                << format_double(summary.fit->fit_window_db.first) << ','
                << format_double(summary.fit->fit_window_db.second) << ','
                << format_double(summary.fit->residual_rms) << ',';
        } else {
            row << ",,,,";
        }
        if (summary.floor) {
            row << (summary.floor->detected ? '1' : '0') << ','
                << format_double(summary.floor->floor_ser);
        } else {
            row << ',';
        }
        summary_rows.push_back(row.str());

        result.files.push_back(csv_path);
        result.summaries.push_back(std::move(summary));
    }

    const std::filesystem::path summary_path =
        std::filesystem::path(spec.out_dir) / "summary.csv";
    std::ofstream out(summary_path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::io_error, "cannot open '" + summary_path.string() + "'");
    }
    out << "levels,predicted_diversity,fitted_slope,fit_window_lo_db,fit_window_hi_db,"
           "residual_rms,floor_detected,floor_ser\n";
    for (const std::string& row : summary_rows) out << row << '\n';
    if (!out) {
        throw Error(ErrorCode::io_error, "write to '" + summary_path.string() + "' failed");
    }
    result.files.push_back(summary_path);
    return result;
}

} // namespace qce
