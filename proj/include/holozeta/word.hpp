#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace holozeta {

// Generator names, indexed by generator number.
using Alphabet = std::vector<std::string>;

struct Letter {
  std::size_t gen = 0;
  int exp = 1;  // +1 or -1

  Letter inverse() const { return {gen, -exp}; }
  friend auto operator<=>(Letter const&, Letter const&) = default;
};

// Freely reduced word in a free group.
class Word {
 public:
  Word() = default;
  // Reduces its argument.
  explicit Word(std::span<Letter const> letters);
  Word(std::initializer_list<Letter> letters) : Word(std::span<Letter const>(letters.begin(), letters.size())) {}
  static Word generator(std::size_t gen, int exp = 1);

  std::vector<Letter> const& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter const& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  std::int64_t exponent_sum() const;
  bool contains(std::size_t gen) const;
  std::vector<std::size_t> occurrences(std::size_t gen) const;
  // Letters [begin, end), already reduced.
  Word subword(std::size_t begin, std::size_t end) const;

  friend Word operator*(Word const& a, Word const& b);
  friend auto operator<=>(Word const&, Word const&) = default;

 private:
  std::vector<Letter> letters_;
};

// Free reduction that follows one distinguished letter.
struct TrackedWord {
  Word word;
  std::optional<std::size_t> position;  // empty when the letter cancelled
};

// The letter at `position` survives iff it cancels with neither the reduced
// prefix before it nor the reduced suffix after it; its new position is the
// length of the reduced prefix.
TrackedWord reduce_tracking(std::span<Letter const> letters, std::size_t position);

// Juxtaposed generators with optional "*" and integer powers:
// "x1 x3 x1^-1", "a*b^2*a^{-1}". "1" or "" is the identity.
Word parse_word(std::string_view text, Alphabet const& alphabet);
std::string to_string(Word const& w, Alphabet const& alphabet);

// Index of a generator name, or nullopt.
std::optional<std::size_t> find_generator(Alphabet const& alphabet, std::string_view name);

}  // namespace holozeta
