#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "matmeans/checks.hpp"
#include "matmeans/matrix.hpp"

namespace matmeans {

/// Shortest-width fixed formatting: 17 significant digits round-trip doubles
/// losslessly and keep result streams byte-stable.
std::string format_double17(double v);

/// "a", "a+bi" or "a-bi" with 17 significant digits; locale-independent.
std::string format_complex(Complex v);

/// Accepts "a", "a+bi", "a-bi", "bi"; '.' decimal separator regardless of
/// locale. PARSE_ERROR on anything else.
Complex parse_complex(std::string_view text);

/// Matrix text format: first line "n", then n lines of n whitespace-separated
/// complex entries.
std::string write_matrix_text(const Matrix& m);
Matrix parse_matrix_text(std::istream& in);

/// A witness pins one check execution: the trial parameters plus every input
/// matrix, enough for exact replay.
struct Witness {
  std::string check_id;
  TrialSpec spec;
  std::vector<Matrix> matrices;
};

void write_witness(std::ostream& out, const Witness& witness);
Witness read_witness(std::istream& in);

/// One self-delimiting JSON record per check execution.
std::string format_record(const CheckResult& result, const std::string& witness_path);

}  // namespace matmeans
