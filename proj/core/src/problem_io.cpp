#include "abelian/problem_io.hpp"

#include <optional>
#include <sstream>
#include <vector>

namespace abelian {

namespace {

struct Line {
  std::size_t number;
  std::string text;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view raw =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = raw.find_last_not_of(" \t\r");
      lines.push_back({number, std::string(raw.substr(first, last - first + 1))});
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

Vec parse_integers(const Line& line, std::string_view what) {
  Vec values;
  std::istringstream in(line.text);
  std::string token;
  while (in >> token) {
    try {
      values.emplace_back(token);
    } catch (const std::invalid_argument&) {
      throw ParseError(line.number, std::string(what) + ": '" + token + "' is not an integer");
    }
  }
  return values;
}

Vec expect_directive(const std::vector<Line>& lines, std::size_t& pos, const std::string& name) {
  if (pos >= lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().number, "missing " + name);
  const Line& line = lines[pos];
  if (line.text.rfind(name + ":", 0) != 0) throw ParseError(line.number, "missing " + name);
  Line payload{line.number, line.text.substr(name.size() + 1)};
  ++pos;
  return parse_integers(payload, name);
}

}  // namespace

ProblemFile parse_problem_file(std::string_view text) {
  const std::vector<Line> lines = significant_lines(text);
  std::size_t pos = 0;

  ProblemFile file;
  file.source_orders = expect_directive(lines, pos, "source");
  file.target_orders = expect_directive(lines, pos, "target");
  for (const auto& [name, orders] :
       {std::pair<const char*, const Vec*>{"source", &file.source_orders},
        {"target", &file.target_orders}}) {
    for (const auto& o : *orders)
      if (o < 0)
        throw ParseError(lines[0].number, std::string(name) + ": negative factor order");
  }

  if (pos >= lines.size() || lines[pos].text != "matrix:")
    throw ParseError(pos < lines.size() ? lines[pos].number : lines.back().number,
                     "missing matrix");
  ++pos;

  const std::size_t m = file.target_orders.size();
  const std::size_t n = file.source_orders.size();
  std::vector<Vec> rows;
  while (pos < lines.size() && lines[pos].text.find(':') == std::string::npos) {
    Vec row = parse_integers(lines[pos], "matrix row");
    if (row.size() != n)
      throw ParseError(lines[pos].number,
                       "matrix row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(n) + " (one per source factor)");
    rows.push_back(std::move(row));
    ++pos;
  }
  if (rows.size() != m) {
    const std::size_t where = pos < lines.size() ? lines[pos].number : lines.back().number;
    throw ParseError(where, "matrix has " + std::to_string(rows.size()) + " rows for " +
                                std::to_string(m) + " target factors");
  }
  file.matrix = Matrix::from_rows(rows);

  Vec rhs = expect_directive(lines, pos, "rhs");
  if (rhs.size() != m)
    throw ParseError(lines[pos - 1].number, "rhs has " + std::to_string(rhs.size()) +
                                                " entries, expected " + std::to_string(m));
  file.rhs = std::move(rhs);

  if (pos < lines.size()) throw ParseError(lines[pos].number, "unexpected trailing content");
  return file;
}

std::pair<Homomorphism, GroupElement> to_problem(const ProblemFile& file) {
  FgAbelianGroup source{file.source_orders};
  FgAbelianGroup target{file.target_orders};
  Homomorphism phi = make_homomorphism(std::move(source), target, file.matrix);
  if (const auto v = validate_hom(phi))
    throw ParseError(1, "invalid homomorphism at row " + std::to_string(v->row + 1) +
                            ", column " + std::to_string(v->col + 1) + ": " + v->reason);
  GroupElement b = make_element(target, file.rhs);
  return {std::move(phi), std::move(b)};
}

}  // namespace abelian
