#include "holozeta/word.hpp"

#include <algorithm>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

namespace {

void push_reduced(std::vector<Letter>& out, Letter l) {
  if (!out.empty() && out.back() == l.inverse())
    out.pop_back();
  else
    out.push_back(l);
}

std::vector<Letter> reduce_letters(std::span<Letter const> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto const& l : letters) push_reduced(out, l);
  return out;
}

}  // namespace

Word::Word(std::span<Letter const> letters) : letters_(reduce_letters(letters)) {
  for (auto const& l : letters_)
    if (l.exp != 1 && l.exp != -1) throw ValidationError("letter exponent must be +1 or -1");
}

Word Word::generator(std::size_t gen, int exp) { return Word{Letter{gen, exp}}; }

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

std::int64_t Word::exponent_sum() const {
  std::int64_t s = 0;
  for (auto const& l : letters_) s += l.exp;
  return s;
}

bool Word::contains(std::size_t gen) const {
  return std::any_of(letters_.begin(), letters_.end(), [gen](Letter const& l) { return l.gen == gen; });
}

std::vector<std::size_t> Word::occurrences(std::size_t gen) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < letters_.size(); ++i)
    if (letters_[i].gen == gen) out.push_back(i);
  return out;
}

Word Word::subword(std::size_t begin, std::size_t end) const {
  Word w;
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(begin),
                    letters_.begin() + static_cast<std::ptrdiff_t>(end));
  return w;
}

Word operator*(Word const& a, Word const& b) {
  Word w = a;
  for (auto const& l : b.letters_) push_reduced(w.letters_, l);
  return w;
}

TrackedWord reduce_tracking(std::span<Letter const> letters, std::size_t position) {
  if (position >= letters.size()) throw ValidationError("tracked position out of range");
  auto prefix = reduce_letters(letters.subspan(0, position));
  auto suffix = reduce_letters(letters.subspan(position + 1));
  Letter b = letters[position];
  TrackedWord out;
  if ((!prefix.empty() && prefix.back() == b.inverse()) || (!suffix.empty() && suffix.front() == b.inverse())) {
    out.word = Word(letters);
    return out;
  }
  std::vector<Letter> all = prefix;
  all.push_back(b);
  all.insert(all.end(), suffix.begin(), suffix.end());
  out.word = Word(all);
  out.position = prefix.size();
  return out;
}

std::optional<std::size_t> find_generator(Alphabet const& alphabet, std::string_view name) {
  auto it = std::find(alphabet.begin(), alphabet.end(), name);
  if (it == alphabet.end()) return std::nullopt;
  return static_cast<std::size_t>(it - alphabet.begin());
}

Word parse_word(std::string_view text, Alphabet const& alphabet) {
  Scanner s(text);
  std::vector<Letter> letters;
  if (s.consume('1')) {
    if (!s.at_end()) s.fail("unexpected text after identity");
    return {};
  }
  bool need_factor = false;
  while (!s.at_end()) {
    auto name = s.identifier();
    if (!name) s.fail("expected generator name");
    auto g = find_generator(alphabet, *name);
    if (!g) throw LookupError("unknown generator '" + *name + "'");
    std::int64_t power = 1;
    if (s.consume('^')) {
      bool brace = s.consume('{');
      bool paren = !brace && s.consume('(');
      auto e = s.integer();
      if (!e) s.fail("expected exponent");
      if (brace) s.expect('}');
      if (paren) s.expect(')');
      power = *e;
    }
    Letter l{*g, power < 0 ? -1 : 1};
    for (std::int64_t k = 0; k < (power < 0 ? -power : power); ++k) letters.push_back(l);
    need_factor = s.consume('*');
  }
  if (need_factor) s.fail("dangling '*'");
  return Word(letters);
}

std::string to_string(Word const& w, Alphabet const& alphabet) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].gen >= alphabet.size()) throw LookupError("generator index out of range");
    if (i) out += " ";
    out += alphabet[w[i].gen];
    if (w[i].exp < 0) out += "^-1";
  }
  return out;
}

}  // namespace holozeta
