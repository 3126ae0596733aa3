#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "holozeta/laurent.hpp"
#include "holozeta/matrix.hpp"

namespace holozeta::testing {

// Seed for randomized suites; HOLOZETA_SEED overrides the default.
inline std::uint64_t suite_seed() {
  if (char const* s = std::getenv("HOLOZETA_SEED")) return std::strtoull(s, nullptr, 10);
  return 20240611ULL;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(suite_seed());
  return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline Rational random_rational(int range = 4) {
  int num = uniform(-range, range);
  int den = uniform(1, 3);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline LaurentPoly random_laurent(int terms = 3, int exp_range = 3, int coeff_range = 4) {
  LaurentPoly p;
  int n = uniform(0, terms);
  for (int i = 0; i < n; ++i)
    p += LaurentPoly::monomial(random_rational(coeff_range), uniform(-exp_range, exp_range));
  return p;
}

inline LaurentPoly random_unit() {
  Rational c;
  do c = random_rational(3);
  while (c == 0);
  return LaurentPoly::monomial(c, uniform(-3, 3));
}

inline PolyMatrix random_poly_matrix(std::size_t r, std::size_t c, int terms = 2, int exp_range = 2) {
  PolyMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = random_laurent(terms, exp_range, 3);
  return m;
}

inline QMatrix random_invertible_qmatrix(std::size_t n) {
  while (true) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(2);
    if (det(m) != 0) return m;
  }
}

// Matrix with determinant a unit: random unit diagonal times a unipotent.
inline PolyMatrix random_unimodular(std::size_t n) {
  PolyMatrix l = PolyMatrix::identity(n), u = PolyMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = random_unit();
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = random_laurent(2, 1, 2);
      u(j, i) = random_laurent(2, 1, 2);
    }
  }
  return l * u;
}

}  // namespace holozeta::testing

#include "holozeta/group_ring.hpp"
#include "holozeta/representation.hpp"

namespace holozeta::testing {

inline Word random_word(std::size_t gens, int max_len = 6) {
  std::vector<Letter> letters;
  int n = uniform(0, max_len);
  for (int i = 0; i < n; ++i)
    letters.push_back({static_cast<std::size_t>(uniform(0, static_cast<int>(gens) - 1)), uniform(0, 1) ? 1 : -1});
  return Word(letters);
}

inline GroupRingElt random_group_ring(std::size_t gens, int terms = 3) {
  GroupRingElt e;
  int n = uniform(0, terms);
  for (int i = 0; i < n; ++i) e += GroupRingElt(random_word(gens, 4), random_rational(3));
  return e;
}

inline Alphabet numbered_alphabet(std::size_t n, std::string const& stem = "x") {
  Alphabet a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(stem + std::to_string(i + 1));
  return a;
}

inline Representation random_representation(Alphabet const& alphabet, std::size_t dim) {
  Representation r(dim);
  for (auto const& name : alphabet) r.set(name, {random_invertible_qmatrix(dim), uniform(-1, 2)});
  return r;
}

}  // namespace holozeta::testing

#include "holozeta/weighted_graph.hpp"

namespace holozeta::testing {

inline MatrixGraph random_matrix_graph(std::size_t max_vertices = 4, std::size_t max_edges = 6, std::size_t max_dim = 2) {
  MatrixGraph g;
  std::size_t n = static_cast<std::size_t>(uniform(1, static_cast<int>(max_vertices)));
  for (std::size_t i = 0; i < n; ++i)
    g.add_vertex("v" + std::to_string(i + 1), static_cast<std::size_t>(uniform(1, static_cast<int>(max_dim))));
  std::size_t m = static_cast<std::size_t>(uniform(0, static_cast<int>(max_edges)));
  for (std::size_t j = 0; j < m; ++j) {
    auto const& s = g.vertices()[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
    auto const& t = g.vertices()[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))];
    g.add_edge("e" + std::to_string(j + 1), s.id, t.id, random_poly_matrix(s.dim, t.dim, 2, 1));
  }
  return g;
}

inline GroupGraph random_group_graph(Alphabet const& alphabet, std::size_t max_edges = 6) {
  GroupGraph g(alphabet);
  for (auto const& a : alphabet) g.add_vertex(a);
  std::size_t n = alphabet.size();
  std::size_t m = static_cast<std::size_t>(uniform(0, static_cast<int>(max_edges)));
  for (std::size_t j = 0; j < m; ++j)
    g.add_edge("e" + std::to_string(j + 1), alphabet[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))],
               alphabet[static_cast<std::size_t>(uniform(0, static_cast<int>(n) - 1))], random_group_ring(n, 2));
  return g;
}

}  // namespace holozeta::testing

#include "holozeta/presentation.hpp"

namespace holozeta::testing {

// Presentation with free generators y1..ym and generators x1..xn defined by
// x_i = f_i(y, x_1..x_{i-1}), together with a representation respecting it.
struct RandomPresentation {
  BasedPresentation presentation;
  Representation rep{1};
};

inline RandomPresentation random_presentation(std::size_t free = 2, std::size_t defined = 2, std::size_t dim = 1) {
  Alphabet gens;
  for (std::size_t i = 0; i < free; ++i) gens.push_back("y" + std::to_string(i + 1));
  for (std::size_t i = 0; i < defined; ++i) gens.push_back("x" + std::to_string(i + 1));
  Representation rep(dim);
  for (std::size_t i = 0; i < free; ++i) rep.set(gens[i], {random_invertible_qmatrix(dim), uniform(-1, 1)});
  std::vector<Relation> rels;
  for (std::size_t i = 0; i < defined; ++i) {
    std::size_t x = free + i;
    Word f = random_word(x, 5);
    Alphabet known(gens.begin(), gens.begin() + static_cast<std::ptrdiff_t>(x));
    rep.set(gens[x], Phi(rep, known).word_image(f));
    rels.push_back({Word::generator(x) * f.inverse(), 0});
  }
  return {BasedPresentation(gens, rels), rep};
}

}  // namespace holozeta::testing
