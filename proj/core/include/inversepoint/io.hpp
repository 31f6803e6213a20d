#pragma once

#include <string>
#include <string_view>

#include "inversepoint/classify.hpp"
#include "inversepoint/matrix.hpp"
#include "inversepoint/solver.hpp"

namespace inversepoint::io {

enum class MatrixFormat { csv, json };
enum class ResultFormat { json, tsv };

/// Parses a square nonnegative matrix.
///
/// CSV: n lines of n comma-separated decimals, no header, LF or CRLF line
/// endings. JSON: {"n": <int>, "rows": [[...], ...]}.
/// Throws ParseError for malformed text and ValidationError (a ParseError)
/// for negative, non-finite, ragged or non-square data.
Matrix parse_matrix(std::string_view text, MatrixFormat format);

/// Inverse of parse_matrix; entries are written with 17 significant digits.
std::string emit_matrix(const Matrix& m, MatrixFormat format);

/// Shortest "%.17g" rendering that is still a JSON floating-point literal
/// (1 -> "1.0").
std::string format_double(double v);

std::string classification_json(const Classification& c);

/// JSON keys: x, residual, iterations, method, converged, classification,
/// row_sums, plus trace when `include_trace` is set. TSV writes one
/// "x<i>\t<value>" line per coordinate followed by "residual\t<value>".
/// Row sums are those of diag(x) M diag(x).
std::string emit_result(const Matrix& m, const SolveResult& result, ResultFormat format,
                        bool include_trace = false);

}  // namespace inversepoint::io
