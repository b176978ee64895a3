#ifndef KNOWWH_PARSE_HPP
#define KNOWWH_PARSE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "knowwh/formula.hpp"

namespace knowwh {

// Byte offsets into the input text, begin <= end.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public std::runtime_error {
public:
  ParseError(std::string message, SourceSpan span, std::vector<std::string> expected,
             const std::string& input);

  const SourceSpan& span() const { return span_; }
  const std::vector<std::string>& expected() const { return expected_; }
  int line() const { return line_; }
  int column() const { return column_; }

private:
  SourceSpan span_;
  std::vector<std::string> expected_;
  int line_ = 1;
  int column_ = 1;
};

// Grammar (precedence low to high: <->, ->, |, &, prefix operators):
//   atoms p, q2, ...; T; F; ~f; K{i} f; Kw{i} f; Kv{i}($c); Kv{i}(f, $c);
//   [f]g; [?f]g; [$c]g; <f>g; box{i} f; dia{i} f; box{i,$c} f;
//   box{i,$c}(f, g); dia{i,$c} f; dia{i,$c}(f, g); Kh(f, g); U f;
//   Kd{i}($c, $d).
// U, Kd, dia{i}, box{i,$c}, <f> and unary Kv are abbreviations and parse to
// their expansions.
Formula parse(const std::string& text);

}  // namespace knowwh

#endif
