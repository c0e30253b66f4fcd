#include "ppspace/io.hpp"

#include <charconv>
#include <cstdint>

#include "ppspace/errors.hpp"

namespace ppspace {

std::string serialize_structure(const IncidenceStructure& s) {
  const std::size_t n = s.point_count();
  const std::size_t m = s.plane_count();
  std::string out;
  out.reserve(32 + n * (m + 1));
  out += "INCIDENCE v1\n";
  out += "points " + std::to_string(n) + "\n";
  out += "planes " + std::to_string(m) + "\n";
  for (std::uint32_t p = 0; p < n; ++p) {
    const IndexSet& row = s.planes_through(p);
    for (std::uint32_t h = 0; h < m; ++h) out += row.test(h) ? '1' : '0';
    out += '\n';
  }
  return out;
}

namespace {

/// Pulls lines off the front of the text, tracking 1-based line numbers.
/// A line without a terminating LF is a shape error: the format mandates
/// one trailing LF per line and nothing after the last.
struct LineReader {
  std::string_view text;
  std::size_t pos = 0;
  std::size_t line_no = 0;

  bool at_end() const { return pos >= text.size(); }

  std::string_view next_line() {
    ++line_no;
    const std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      const std::string_view rest = text.substr(pos);
      throw ParseError(ParseError::Kind::shape, line_no, rest.size() + 1,
                       "line " + std::to_string(line_no) + " is not terminated by a line feed");
    }
    const std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    return line;
  }
};

std::size_t parse_count(std::string_view line, std::string_view keyword, std::size_t line_no) {
  const auto fail = [&](std::size_t column, const std::string& message) -> std::size_t {
    throw ParseError(ParseError::Kind::format, line_no, column, message);
  };
  const std::string expected_prefix = std::string(keyword) + " ";
  if (line.substr(0, expected_prefix.size()) != expected_prefix)
    return fail(1, "expected '" + std::string(keyword) + " <count>'");
  const std::string_view digits = line.substr(expected_prefix.size());
  if (digits.empty()) return fail(expected_prefix.size() + 1, "missing count");
  for (std::size_t i = 0; i < digits.size(); ++i)
    if (digits[i] < '0' || digits[i] > '9')
      return fail(expected_prefix.size() + i + 1, "count must be decimal digits");
  if (digits.size() > 1 && digits[0] == '0')
    return fail(expected_prefix.size() + 1, "count must not have leading zeros");
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    return fail(expected_prefix.size() + 1, "count out of range");
  return value;
}

}  // namespace

IncidenceStructure parse_structure(std::string_view text) {
  LineReader reader{text};

  if (reader.at_end())
    throw ParseError(ParseError::Kind::format, 1, 1, "empty document; expected 'INCIDENCE v1'");
  const std::string_view magic = reader.next_line();
  if (magic != "INCIDENCE v1")
    throw ParseError(ParseError::Kind::format, 1, 1, "bad magic/version; expected 'INCIDENCE v1'");

  if (reader.at_end())
    throw ParseError(ParseError::Kind::format, 2, 1, "missing 'points <n>' line");
  const std::size_t n = parse_count(reader.next_line(), "points", 2);
  if (reader.at_end())
    throw ParseError(ParseError::Kind::format, 3, 1, "missing 'planes <m>' line");
  const std::size_t m = parse_count(reader.next_line(), "planes", 3);

  // Resource guard, not a format rule: refuse documents whose declared
  // shape could not be backed by memory anyway.
  constexpr std::size_t kMaxSort = 1u << 20;
  constexpr std::size_t kMaxCells = 1u << 28;
  if (n > kMaxSort || m > kMaxSort || (m != 0 && n > kMaxCells / m))
    throw ParseError(ParseError::Kind::shape, n > kMaxSort ? 2 : 3, 1,
                     "declared shape exceeds the supported size");

  IncidenceBuilder builder(n, m);
  for (std::uint32_t p = 0; p < n; ++p) {
    if (reader.at_end())
      throw ParseError(ParseError::Kind::shape, reader.line_no + 1, 1,
                       "expected " + std::to_string(n) + " rows, found " + std::to_string(p));
    const std::string_view row = reader.next_line();
    if (row.size() != m)
      throw ParseError(ParseError::Kind::shape, reader.line_no,
                       std::min(row.size(), m) + 1,
                       "row " + std::to_string(p) + " (line " + std::to_string(reader.line_no) +
                           ") has " + std::to_string(row.size()) + " characters, expected " +
                           std::to_string(m));
    for (std::uint32_t h = 0; h < m; ++h) {
      const char c = row[h];
      if (c == '1')
        builder.set(p, h);
      else if (c != '0')
        throw ParseError(ParseError::Kind::content, reader.line_no, h + 1,
                         "character must be '0' or '1'");
    }
  }
  if (!reader.at_end())
    throw ParseError(ParseError::Kind::shape, reader.line_no + 1, 1,
                     "trailing content after the last row");
  return builder.build();
}

namespace {

void append_witness(std::string& out, const std::vector<WitnessElem>& witness) {
  out += " witness=(";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i != 0) out += ',';
    switch (witness[i].sort) {
      case WitnessElem::Sort::point: out += 'P'; break;
      case WitnessElem::Sort::plane: out += "pi"; break;
      case WitnessElem::Sort::line: out += "ln"; break;
    }
    out += std::to_string(witness[i].index);
  }
  out += ')';
}

}  // namespace

std::string format_report(const AxiomReport& report) {
  // Clause fixes the sort pattern of the witness tuple.
  std::vector<WitnessElem> typed;
  typed.reserve(report.witness.size());
  const bool a4 = report.clause == AxiomClause::A4;
  const bool on_points = report.clause == AxiomClause::A1_pt ||
                         report.clause == AxiomClause::A2_pt ||
                         report.clause == AxiomClause::A3_pt;
  for (std::size_t i = 0; i < report.witness.size(); ++i) {
    const bool point_elem = a4 ? i < 2 : on_points;
    typed.push_back({point_elem ? WitnessElem::Sort::point : WitnessElem::Sort::plane,
                     report.witness[i]});
  }

  std::string out{clause_name(report.clause)};
  out += report.pass ? " PASS" : " FAIL";
  if (!report.pass && !typed.empty()) append_witness(out, typed);
  out += " cases=" + std::to_string(report.checked_cases);
  return out;
}

std::string format_report(const TheoremReport& report) {
  std::string out = report.theorem;
  out += report.pass ? " PASS" : " FAIL";
  if (!report.pass && !report.witness.empty()) append_witness(out, report.witness);
  out += " cases=" + std::to_string(report.checked_cases);
  return out;
}

}  // namespace ppspace
