#include "inversepoint/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "inversepoint/errors.hpp"
#include "inversepoint/stochastic.hpp"

namespace inversepoint::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

double parse_field(std::string_view field, std::size_t line, std::size_t column) {
    const auto t = trim(field);
    if (t.empty()) throw ParseError("empty field", line, column);
    // from_chars rejects a leading '+', which is still a valid decimal here.
    const auto body = t.front() == '+' ? t.substr(1) : t;
    double v = 0.0;
    const auto [end, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
    if (ec == std::errc::result_out_of_range) {
        throw ValidationError("value out of range: '" + std::string(t) + "'", line, column);
    }
    if (ec != std::errc{} || end != body.data() + body.size()) {
        throw ParseError("not a decimal number: '" + std::string(t) + "'", line, column);
    }
    if (!std::isfinite(v)) {
        throw ValidationError("non-finite entry '" + std::string(t) + "'", line, column);
    }
    if (v < 0.0) {
        throw ValidationError("negative entry " + std::string(t), line, column);
    }
    return v;
}

Matrix parse_csv(std::string_view text) {
    std::vector<double> entries;
    std::size_t width = 0;
    std::size_t rows = 0;
    std::size_t line_no = 0;
    std::size_t pending_blank = 0;

    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (trim(line).empty()) {
            ++pending_blank;
            continue;
        }
        if (pending_blank) {
            throw ParseError("blank line inside matrix", line_no - 1, 0);
        }

        std::size_t count = 0;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            const auto field = line.substr(start, comma == std::string_view::npos
                                                      ? std::string_view::npos
                                                      : comma - start);
            entries.push_back(parse_field(field, line_no, start + 1));
            ++count;
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        if (rows == 0) {
            width = count;
        } else if (count != width) {
            throw ValidationError("ragged row " + std::to_string(rows + 1) + ": expected " +
                                      std::to_string(width) + " values, got " +
                                      std::to_string(count),
                                  line_no, 0);
        }
        ++rows;
    }
    if (rows == 0) throw ParseError("empty input", 1, 0);
    if (rows != width) {
        throw ValidationError("matrix is not square: " + std::to_string(rows) + " rows of " +
                                  std::to_string(width) + " values",
                              line_no, 0);
    }
    return Matrix(rows, std::move(entries));
}

// Converts a byte offset reported by the JSON parser into line/column.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

Matrix parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = locate(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError("malformed JSON", line, column);
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("rows")) {
        throw ParseError("expected an object with keys \"n\" and \"rows\"", 1, 0);
    }
    const auto& jn = doc["n"];
    if (!jn.is_number_integer() || jn.get<long long>() < 1) {
        throw ValidationError("\"n\" must be a positive integer", 1, 0);
    }
    const auto n = static_cast<std::size_t>(jn.get<long long>());
    const auto& rows = doc["rows"];
    if (!rows.is_array() || rows.size() != n) {
        throw ValidationError("\"rows\" must be an array of " + std::to_string(n) + " rows", 1, 0);
    }
    std::vector<double> entries;
    entries.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != n) {
            throw ValidationError("ragged row " + std::to_string(i + 1) + ": expected " +
                                      std::to_string(n) + " values",
                                  i + 1, 0);
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!row[j].is_number()) {
                throw ValidationError("rows[" + std::to_string(i) + "][" + std::to_string(j) +
                                          "] is not a number",
                                      i + 1, j + 1);
            }
            const double v = row[j].get<double>();
            if (!std::isfinite(v) || v < 0.0) {
                throw ValidationError("rows[" + std::to_string(i) + "][" + std::to_string(j) +
                                          "] must be finite and nonnegative",
                                      i + 1, j + 1);
            }
            entries.push_back(v);
        }
    }
    return Matrix(n, std::move(entries));
}

void append_array(std::string& out, std::span<const double> values) {
    out += '[';
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k) out += ',';
        out += format_double(values[k]);
    }
    out += ']';
}

const char* boolean(bool b) { return b ? "true" : "false"; }

}  // namespace

Matrix parse_matrix(std::string_view text, MatrixFormat format) {
    return format == MatrixFormat::csv ? parse_csv(text) : parse_json(text);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    std::string s(buf);
    if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
    return s;
}

std::string emit_matrix(const Matrix& m, MatrixFormat format) {
    const std::size_t n = m.size();
    std::string out;
    if (format == MatrixFormat::csv) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (j) out += ',';
                out += format_double(m(i, j));
            }
            out += '\n';
        }
        return out;
    }
    out = "{\"n\":" + std::to_string(n) + ",\"rows\":[";
    for (std::size_t i = 0; i < n; ++i) {
        if (i) out += ',';
        append_array(out, m.row(i));
    }
    out += "]}\n";
    return out;
}

std::string classification_json(const Classification& c) {
    std::string out = "{";
    out += "\"nonnegative\":";
    out += boolean(c.nonnegative);
    out += ",\"positive_diagonal\":";
    out += boolean(c.positive_diagonal);
    out += ",\"primitive\":";
    out += boolean(c.primitive);
    out += ",\"contraction_condition\":";
    out += boolean(c.contraction_condition);
    out += ",\"contraction_constant\":";
    out += c.contraction_constant ? format_double(*c.contraction_constant) : "null";
    out += ",\"has_zero_row\":";
    out += boolean(c.has_zero_row);
    out += '}';
    return out;
}

std::string emit_result(const Matrix& m, const SolveResult& result, ResultFormat format,
                        bool include_trace) {
    std::string out;
    if (format == ResultFormat::tsv) {
        for (std::size_t i = 0; i < result.x.size(); ++i) {
            out += "x" + std::to_string(i + 1) + '\t' + format_double(result.x[i]) + '\n';
        }
        out += "residual\t" + format_double(result.residual) + '\n';
        return out;
    }

    const auto cert = certify(m, result.x);
    out = "{\"x\":";
    append_array(out, result.x.values());
    out += ",\"residual\":" + format_double(result.residual);
    out += ",\"iterations\":" + std::to_string(result.iterations);
    out += ",\"method\":\"" + std::string(method_name(result.method_used)) + '"';
    out += ",\"converged\":";
    out += boolean(result.converged);
    out += ",\"classification\":" + classification_json(result.classification);
    out += ",\"row_sums\":";
    append_array(out, cert.row_sums);
    if (include_trace) {
        out += ",\"trace\":";
        append_array(out, result.trace);
    }
    out += "}\n";
    return out;
}

}  // namespace inversepoint::io
