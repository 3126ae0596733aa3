#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/rational.hpp"

namespace holozeta {

// Cursor over a text buffer shared by the small parsers in this library.
// Whitespace is skipped before every token.
class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space();
  bool at_end();
  // Next non-space character, or '\0' at the end.
  char peek();
  bool consume(char c);
  bool consume(std::string_view token);
  void expect(char c);
  // [A-Za-z_][A-Za-z0-9_]*
  std::optional<std::string> identifier();
  // Unsigned "p" or "p/q".
  std::optional<Rational> unsigned_rational();
  // Optionally signed integer.
  std::optional<std::int64_t> integer();
  std::size_t position() const { return pos_; }
  std::string_view rest() const { return text_.substr(pos_); }
  [[noreturn]] void fail(std::string const& msg) const;

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Splits on '\n', strips '#' comments and surrounding blanks, drops empty lines.
std::vector<std::string> content_lines(std::string_view text);
std::string trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::string read_file(std::string const& path);

}  // namespace holozeta
