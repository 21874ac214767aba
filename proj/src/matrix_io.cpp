#include "matmeans/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace matmeans {

namespace {

/// Parses one double from the front of `text` with std::from_chars
/// (locale-independent); advances `text` past it.
double take_double(std::string_view& text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data())
    fail(ErrorCode::ParseError, "expected a number at '" + std::string(text) + "'");
  text.remove_prefix(static_cast<size_t>(ptr - text.data()));
  return value;
}

std::string expect_line(std::istream& in, const std::string& context) {
  std::string line;
  if (!std::getline(in, line)) fail(ErrorCode::ParseError, "unexpected end of input: " + context);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string take_key_value(std::istream& in, const std::string& key) {
  const std::string line = expect_line(in, key);
  if (line.rfind(key + " ", 0) != 0)
    fail(ErrorCode::ParseError, "expected '" + key + " ...', got '" + line + "'");
  return line.substr(key.size() + 1);
}

double parse_field_double(const std::string& text) {
  std::string_view view(text);
  if (view == "inf") return kSchattenInf;
  const double v = take_double(view);
  if (!view.empty()) fail(ErrorCode::ParseError, "trailing characters in '" + text + "'");
  return v;
}

}  // namespace

std::string format_double17(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_complex(Complex v) {
  if (v.imag() == 0.0) return format_double17(v.real());
  const char sign = v.imag() < 0.0 ? '-' : '+';
  return format_double17(v.real()) + sign + format_double17(std::abs(v.imag())) + "i";
}

Complex parse_complex(std::string_view text) {
  std::string_view rest = text;
  const double first = take_double(rest);
  if (rest.empty()) return Complex(first, 0.0);
  if (rest == "i") return Complex(0.0, first);
  if (rest.front() != '+' && rest.front() != '-')
    fail(ErrorCode::ParseError, "malformed complex entry '" + std::string(text) + "'");
  const double second = take_double(rest);
  if (rest != "i") fail(ErrorCode::ParseError, "malformed complex entry '" + std::string(text) + "'");
  return Complex(first, second);
}

std::string write_matrix_text(const Matrix& m) {
  std::string out = std::to_string(m.dim()) + "\n";
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) {
      if (j) out += ' ';
      out += format_complex(m(i, j));
    }
    out += '\n';
  }
  return out;
}

Matrix parse_matrix_text(std::istream& in) {
  const std::string header = expect_line(in, "matrix dimension");
  int n = 0;
  {
    const auto [ptr, ec] = std::from_chars(header.data(), header.data() + header.size(), n);
    if (ec != std::errc() || ptr != header.data() + header.size() || n < 1 || n > 64)
      fail(ErrorCode::ParseError, "bad matrix dimension line '" + header + "'");
  }
  Matrix m(n);
  for (int i = 0; i < n; ++i) {
    std::istringstream row(expect_line(in, "matrix row"));
    std::string token;
    for (int j = 0; j < n; ++j) {
      if (!(row >> token)) fail(ErrorCode::ParseError, "row " + std::to_string(i) + " too short");
      m(i, j) = parse_complex(token);
    }
    if (row >> token) fail(ErrorCode::ParseError, "row " + std::to_string(i) + " too long");
  }
  if (!m.all_finite()) fail(ErrorCode::ParseError, "matrix has non-finite entries");
  return m;
}

void write_witness(std::ostream& out, const Witness& witness) {
  out << "matmeans-witness v1\n";
  out << "check " << witness.check_id << "\n";
  const TrialSpec& s = witness.spec;
  out << "n " << s.n << "\n";
  out << "m " << s.m << "\n";
  out << "t " << format_double17(s.t) << "\n";
  out << "s " << format_double17(s.s) << "\n";
  out << "r " << format_double17(s.r) << "\n";
  out << "p " << format_double17(s.p) << "\n";
  out << "z " << format_double17(s.z.real()) << " " << format_double17(s.z.imag()) << "\n";
  out << "seed " << s.seed << "\n";
  out << "condition_target " << format_double17(s.condition_target) << "\n";
  out << "matrices " << witness.matrices.size() << "\n";
  for (const Matrix& m : witness.matrices) out << write_matrix_text(m);
}

Witness read_witness(std::istream& in) {
  if (expect_line(in, "header") != "matmeans-witness v1")
    fail(ErrorCode::ParseError, "not a matmeans witness file");
  Witness w;
  w.check_id = take_key_value(in, "check");
  w.spec.n = static_cast<int>(parse_field_double(take_key_value(in, "n")));
  w.spec.m = static_cast<int>(parse_field_double(take_key_value(in, "m")));
  w.spec.t = parse_field_double(take_key_value(in, "t"));
  w.spec.s = parse_field_double(take_key_value(in, "s"));
  w.spec.r = parse_field_double(take_key_value(in, "r"));
  w.spec.p = parse_field_double(take_key_value(in, "p"));
  {
    std::string_view z = take_key_value(in, "z");
    // two doubles separated by one space
    const std::string z_text(z);
    std::string_view rest(z_text);
    const double re = take_double(rest);
    if (rest.empty() || rest.front() != ' ')
      fail(ErrorCode::ParseError, "malformed z line");
    rest.remove_prefix(1);
    const double im = take_double(rest);
    if (!rest.empty()) fail(ErrorCode::ParseError, "malformed z line");
    w.spec.z = Complex(re, im);
  }
  {
    const std::string seed_text = take_key_value(in, "seed");
    uint64_t seed = 0;
    const auto [ptr, ec] =
        std::from_chars(seed_text.data(), seed_text.data() + seed_text.size(), seed);
    if (ec != std::errc() || ptr != seed_text.data() + seed_text.size())
      fail(ErrorCode::ParseError, "bad seed '" + seed_text + "'");
    w.spec.seed = seed;
  }
  w.spec.condition_target = parse_field_double(take_key_value(in, "condition_target"));
  const int count = static_cast<int>(parse_field_double(take_key_value(in, "matrices")));
  if (count < 1 || count > 16) fail(ErrorCode::ParseError, "bad matrix count");
  for (int i = 0; i < count; ++i) w.matrices.push_back(parse_matrix_text(in));
  return w;
}

std::string format_record(const CheckResult& result, const std::string& witness_path) {
  const TrialSpec& s = result.inputs;
  std::string line = "{\"check\":\"" + result.check_id + "\"";
  line += ",\"n\":" + std::to_string(s.n);
  line += ",\"t\":" + format_double17(s.t);
  line += ",\"s\":" + format_double17(s.s);
  line += ",\"r\":" + format_double17(s.r);
  line += s.p == kSchattenInf ? ",\"p\":\"inf\"" : ",\"p\":" + format_double17(s.p);
  line += ",\"z_re\":" + format_double17(s.z.real());
  line += ",\"z_im\":" + format_double17(s.z.imag());
  line += ",\"m\":" + std::to_string(s.m);
  line += ",\"seed\":" + std::to_string(s.seed);
  line += ",\"condition_target\":" + format_double17(s.condition_target);
  line += ",\"lhs\":" + format_double17(result.lhs);
  line += ",\"rhs\":" + format_double17(result.rhs);
  line += ",\"margin\":" + format_double17(result.margin);
  line += ",\"tolerance\":" + format_double17(result.tolerance);
  line += std::string(",\"verdict\":\"") + to_string(result.verdict) + "\"";
  if (!witness_path.empty()) line += ",\"witness\":\"" + witness_path + "\"";
  line += "}";
  return line;
}

}  // namespace matmeans
