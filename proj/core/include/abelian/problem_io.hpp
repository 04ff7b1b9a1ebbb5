#pragma once

#include "abelian/group.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace abelian {

/// Parsed text problem: factor orders, homomorphism matrix, right-hand side.
struct ProblemFile {
  std::vector<Int> source_orders;
  std::vector<Int> target_orders;
  Matrix matrix;
  Vec rhs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the line-oriented problem format:
///
///   source: 2 4        # factor orders of G; 0 = Z
///   target: 2 4        # factor orders of H
///   matrix:            # m rows, n columns; column j = image of generator j
///   0 1
///   2 0
///   rhs: 1 2
///
/// '#' starts a comment. Throws ParseError with the offending line number.
ProblemFile parse_problem_file(std::string_view text);

/// Builds the homomorphism and right-hand side, checking validity; the
/// rhs is reduced modulo the target orders. Throws ParseError with an
/// entry report when the matrix is not a homomorphism.
std::pair<Homomorphism, GroupElement> to_problem(const ProblemFile& file);

}  // namespace abelian
