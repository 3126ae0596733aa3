#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/group_ring.hpp"
#include "holozeta/matrix.hpp"

namespace holozeta {

// Image of one generator: the matrix rho(x) and the exponent alpha(x), so that
// x maps to rho(x) * t^alpha(x).
struct GeneratorImage {
  QMatrix rho;
  std::int64_t alpha = 0;
  friend bool operator==(GeneratorImage const&, GeneratorImage const&) = default;
};

// Assignment of generator names to invertible rational matrices and integer
// exponents. An optional default image covers every name not listed.
class Representation {
 public:
  explicit Representation(std::size_t dim) : dim_(dim) {}
  // Every generator maps to the identity matrix times t.
  static Representation abelianization(std::size_t dim = 1);

  std::size_t dim() const noexcept { return dim_; }
  // Throws DimensionError on shape mismatch, ValidationError if singular.
  void set(std::string const& name, GeneratorImage image);
  void set_default(GeneratorImage image);
  bool defines(std::string const& name) const;
  GeneratorImage const& image(std::string const& name) const;
  std::map<std::string, GeneratorImage> const& explicit_images() const noexcept { return images_; }
  std::optional<GeneratorImage> const& default_image() const noexcept { return default_; }

 private:
  void check(GeneratorImage const& image) const;
  std::size_t dim_;
  std::map<std::string, GeneratorImage> images_;
  std::optional<GeneratorImage> default_;
};

// Evaluates the ring map Phi: group ring -> matrices over Q[t, 1/t] for words
// written in a fixed alphabet.
class Phi {
 public:
  Phi(Representation const& rep, Alphabet const& alphabet);

  std::size_t dim() const noexcept { return dim_; }
  GeneratorImage word_image(Word const& w) const;
  PolyMatrix operator()(Word const& w) const;
  PolyMatrix operator()(GroupRingElt const& e) const;

 private:
  GeneratorImage const& letter_image(Letter const& l) const;
  std::size_t dim_;
  Alphabet alphabet_;
  std::vector<std::optional<GeneratorImage>> forward_, backward_;
};

PolyMatrix apply_phi(GroupRingElt const& e, Representation const& rep, Alphabet const& alphabet);

// Block-diagonal sum; both sides must cover the same generator names.
Representation direct_sum(Representation const& a, Representation const& b);
// x -> P^-1 rho(x) P; P must be an invertible constant matrix.
Representation conjugate(Representation const& r, QMatrix const& p);

// Text form:
//   dim: 2
//   x1 = [[0, 1], [1, 0]] alpha=1
//   * = [[1, 0], [0, 1]] alpha=1     (default image)
Representation parse_representation(std::string_view text);
std::string to_string(Representation const& r);

}  // namespace holozeta
