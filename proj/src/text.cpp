#include "holozeta/text.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "holozeta/error.hpp"

namespace holozeta {

Rational parse_rational(std::string_view text) {
  Scanner s(text);
  bool neg = s.consume('-');
  if (!neg) s.consume('+');
  auto q = s.unsigned_rational();
  if (!q || !s.at_end()) throw ParseError("malformed rational '" + std::string(text) + "'");
  return neg ? Rational(-*q) : *q;
}

std::string to_string(Rational const& q) { return q.get_str(); }

void Scanner::skip_space() {
  while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
}

bool Scanner::at_end() {
  skip_space();
  return pos_ >= text_.size();
}

char Scanner::peek() {
  skip_space();
  return pos_ < text_.size() ? text_[pos_] : '\0';
}

bool Scanner::consume(char c) {
  if (peek() == c && c != '\0') {
    ++pos_;
    return true;
  }
  return false;
}

bool Scanner::consume(std::string_view token) {
  skip_space();
  if (text_.substr(pos_, token.size()) == token) {
    pos_ += token.size();
    return true;
  }
  return false;
}

void Scanner::expect(char c) {
  if (!consume(c)) fail(std::string("expected '") + c + "'");
}

std::optional<std::string> Scanner::identifier() {
  skip_space();
  auto start = pos_;
  if (pos_ >= text_.size() ||
      !(std::isalpha(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
    return std::nullopt;
  while (pos_ < text_.size() &&
         (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
    ++pos_;
  return std::string(text_.substr(start, pos_ - start));
}

namespace {
std::optional<std::string> digits(std::string_view text, std::size_t& pos) {
  auto start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) return std::nullopt;
  return std::string(text.substr(start, pos - start));
}
}  // namespace

std::optional<Rational> Scanner::unsigned_rational() {
  skip_space();
  auto num = digits(text_, pos_);
  if (!num) return std::nullopt;
  Rational q(mpz_class(*num), 1);
  auto save = pos_;
  skip_space();
  if (pos_ < text_.size() && text_[pos_] == '/') {
    ++pos_;
    skip_space();
    auto den = digits(text_, pos_);
    if (!den) fail("expected denominator");
    mpz_class d(*den);
    if (d == 0) fail("zero denominator");
    q = Rational(mpz_class(*num), d);
    q.canonicalize();
  } else {
    pos_ = save;
  }
  return q;
}

std::optional<std::int64_t> Scanner::integer() {
  skip_space();
  auto save = pos_;
  bool neg = false;
  if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
    neg = text_[pos_] == '-';
    ++pos_;
    skip_space();
  }
  auto d = digits(text_, pos_);
  if (!d) {
    pos_ = save;
    return std::nullopt;
  }
  if (d->size() > 18) fail("integer out of range");
  std::int64_t v = std::stoll(*d);
  return neg ? -v : v;
}

void Scanner::fail(std::string const& msg) const { throw ParseError(msg, pos_); }

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string> content_lines(std::string_view text) {
  std::vector<std::string> out;
  for (auto& raw : split(text, '\n')) {
    auto hash = raw.find('#');
    auto line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

std::string read_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace holozeta
