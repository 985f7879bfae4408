// Copyright 2026 The tamewild Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "formats.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace tamewild::cli {
namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> content_lines(std::istream& in) {
  std::vector<Line> lines;
  std::string text;
  std::size_t number = 0;
  while (std::getline(in, text)) {
    ++number;
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos || text[first] == '#') continue;
    lines.push_back({number, text});
  }
  return lines;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& msg) {
  throw Error(Errc::Parse, source + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::int64_t> integers(const std::string& source, const Line& line) {
  std::vector<std::int64_t> out;
  std::istringstream ss(line.text);
  std::string tok;
  while (ss >> tok) {
    std::int64_t v = 0;
    const char* begin = tok.data();
    const char* end = tok.data() + tok.size();
    if (*begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || ptr != end) fail(source, line.number, "not an integer: '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

PrimeField field_from_header(const std::string& source, std::size_t line, std::int64_t p) {
  if (p < 2 || p > static_cast<std::int64_t>(PrimeField::kMaxModulus) ||
      !is_prime(static_cast<std::uint64_t>(p))) {
    fail(source, line, "modulus " + std::to_string(p) + " is not a prime <= 2^31");
  }
  return PrimeField(static_cast<std::uint32_t>(p));
}

std::optional<std::int64_t> to_int(std::string_view s) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Word parse_word(std::string_view w, std::size_t arity) {
  Word word;
  if (w == "1") return word;
  std::size_t pos = 0;
  if (w.empty()) throw Error(Errc::Parse, "empty monomial");
  while (pos < w.size()) {
    if (w[pos] != 'x') throw Error(Errc::Parse, "bad monomial '" + std::string(w) + "'");
    std::size_t end = pos + 1;
    while (end < w.size() && w[end] >= '0' && w[end] <= '9') ++end;
    const auto index = to_int(w.substr(pos + 1, end - pos - 1));
    if (!index) throw Error(Errc::Parse, "variable without an index in '" + std::string(w) + "'");
    if (*index < 1 || static_cast<std::size_t>(*index) > arity) {
      throw Error(Errc::Parse, "unknown variable x" + std::to_string(*index) + " (arity " +
                                   std::to_string(arity) + ")");
    }
    word.push_back(static_cast<std::uint8_t>(*index - 1));
    pos = end;
  }
  return word;
}

}  // namespace

MatrixFile parse_matrix_file(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = content_lines(in);
  if (lines.empty()) fail(source, 1, "missing header 'p n m a'");
  const auto header = integers(source, lines.front());
  if (header.size() != 4) fail(source, lines.front().number, "header must be 'p n m a'");
  const PrimeField field = field_from_header(source, lines.front().number, header[0]);
  for (std::size_t k = 1; k < 4; ++k) {
    if (header[k] < 1) fail(source, lines.front().number, "header counts must be >= 1");
  }
  const auto rows = static_cast<std::size_t>(header[1]);
  const auto cols = static_cast<std::size_t>(header[2]);
  const auto count = static_cast<std::size_t>(header[3]);
  if (rows * cols * count > 10'000'000) fail(source, lines.front().number, "declared body is too large");

  MatrixFile file{field, rows, cols, {}};
  std::size_t next = 1;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Fe> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i, ++next) {
      if (next >= lines.size()) {
        fail(source, lines.back().number, "expected " + std::to_string(rows * count) +
                                              " matrix rows, file ends early");
      }
      const auto values = integers(source, lines[next]);
      if (values.size() != cols) {
        fail(source, lines[next].number, "expected " + std::to_string(cols) + " entries, found " +
                                             std::to_string(values.size()));
      }
      for (std::int64_t v : values) entries.push_back(field(v));
    }
    file.matrices.emplace_back(rows, cols, field, std::move(entries));
  }
  if (next < lines.size()) fail(source, lines[next].number, "unexpected line after the last matrix");
  return file;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, path.string() + ": cannot open file");
  return parse_matrix_file(in, path.string());
}

void write_matrix_file(std::ostream& out, const std::vector<Matrix>& matrices) {
  const Matrix& first = matrices.front();
  out << first.field().modulus() << ' ' << first.rows() << ' ' << first.cols() << ' '
      << matrices.size() << '\n';
  for (const Matrix& m : matrices) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) out << (j ? " " : "") << m(i, j).value();
      out << '\n';
    }
  }
}

void write_matrix_file(std::ostream& out, const MatrixTuple& tuple) {
  write_matrix_file(out, tuple.parts());
}

NcPoly parse_nc_poly(std::string_view text, std::size_t arity, PrimeField field) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '\t' && c != '\r') s.push_back(c);
  }
  if (s.empty()) throw Error(Errc::Parse, "empty polynomial");
  NcPoly f(arity, field);
  if (s == "0") return f;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    bool had_sign = false;
    while (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      negative ^= s[pos] == '-';
      had_sign = true;
      ++pos;
    }
    if (pos != 0 && !had_sign) throw Error(Errc::Parse, "terms must be joined by '+'");
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    const std::string_view term = std::string_view(s).substr(pos, end - pos);
    if (term.empty()) throw Error(Errc::Parse, "dangling '+' in '" + s + "'");
    std::int64_t coeff = 1;
    std::string_view word = term;
    if (const auto star = term.find('*'); star != std::string_view::npos) {
      const auto c = to_int(term.substr(0, star));
      if (!c) throw Error(Errc::Parse, "bad coefficient in '" + std::string(term) + "'");
      coeff = *c;
      word = term.substr(star + 1);
    } else if (term.front() != 'x') {
      const auto c = to_int(term);
      if (!c) throw Error(Errc::Parse, "bad term '" + std::string(term) + "'");
      coeff = *c;
      word = "1";
    }
    f.add_term(parse_word(word, arity), field(negative ? -coeff : coeff));
    pos = end;
  }
  return f;
}

Transform parse_transform_file(std::istream& in, const std::string& source) {
  const std::vector<Line> lines = content_lines(in);
  if (lines.empty()) fail(source, 1, "missing header 'p a b'");
  const auto header = integers(source, lines.front());
  if (header.size() != 3) fail(source, lines.front().number, "header must be 'p a b'");
  const PrimeField field = field_from_header(source, lines.front().number, header[0]);
  if (header[1] < 1 || header[1] > 255 || header[2] < 1) {
    fail(source, lines.front().number, "arities must satisfy 1 <= a <= 255 and b >= 1");
  }
  const auto a = static_cast<std::size_t>(header[1]);
  const auto b = static_cast<std::size_t>(header[2]);
  if (lines.size() - 1 != b) {
    fail(source, lines.back().number, "expected " + std::to_string(b) + " polynomial lines, found " +
                                          std::to_string(lines.size() - 1));
  }
  std::vector<NcPoly> polys;
  for (std::size_t k = 1; k <= b; ++k) {
    try {
      polys.push_back(parse_nc_poly(lines[k].text, a, field));
    } catch (const Error& e) {
      fail(source, lines[k].number, e.what());
    }
  }
  return Transform(a, std::move(polys));
}

Transform read_transform_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, path.string() + ": cannot open file");
  return parse_transform_file(in, path.string());
}

void write_transform_file(std::ostream& out, const Transform& transform) {
  out << transform.field().modulus() << ' ' << transform.arity_in() << ' ' << transform.arity_out() << '\n';
  for (const NcPoly& f : transform.polys()) out << to_string(f) << '\n';
}

}  // namespace tamewild::cli
