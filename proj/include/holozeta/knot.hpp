#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "holozeta/word.hpp"

namespace holozeta {

// One passage of the knot through a crossing, in traversal order.
struct Passage {
  std::size_t crossing = 0;
  bool over = false;
  friend bool operator==(Passage const&, Passage const&) = default;
};

// Crossing in terms of arcs. Arcs are numbered from 0 along the orientation
// and the arc index increases by one each time the knot passes under a
// crossing; crossing a is the a-th under-passage, so under_in = a.
struct Crossing {
  int sign = 1;
  std::size_t under_in = 0;
  std::size_t under_out = 0;
  std::size_t over = 0;
  friend bool operator==(Crossing const&, Crossing const&) = default;
};

// Entry of a signed Gauss code with arbitrary crossing labels.
struct GaussEntry {
  long label = 0;
  bool over = false;
  int sign = 1;
};

// Oriented single-component knot diagram stored as a signed Gauss code with
// crossings numbered by the order of their under-passages. Construction
// checks that the code is realizable in the plane.
class KnotDiagram {
 public:
  // The crossingless unknot.
  KnotDiagram() = default;
  // Throws ValidationError if a crossing is not met exactly once over and
  // once under with one sign, or if the code is not planar.
  explicit KnotDiagram(std::vector<GaussEntry> const& code);

  std::size_t crossing_count() const noexcept { return signs_.size(); }
  std::size_t arc_count() const noexcept { return signs_.empty() ? 1 : signs_.size(); }
  std::vector<Passage> const& code() const noexcept { return code_; }
  std::vector<int> const& signs() const noexcept { return signs_; }
  Crossing crossing(std::size_t a) const;
  std::vector<Crossing> crossings() const;
  // Arc containing passage p.
  std::size_t arc_at(std::size_t p) const;
  // Positions of the over and under passages of crossing a.
  std::size_t over_position(std::size_t a) const;
  std::size_t under_position(std::size_t a) const;
  std::vector<GaussEntry> gauss_code() const;

  friend bool operator==(KnotDiagram const&, KnotDiagram const&) = default;

 private:
  std::vector<Passage> code_;
  std::vector<int> signs_;
};

// Number of faces of the diagram on the sphere, from the rotation system at
// the crossings. A code with n >= 1 crossings is planar iff it has n + 2 faces.
std::size_t face_count(std::vector<Passage> const& code, std::vector<int> const& signs);
bool is_planar(std::vector<Passage> const& code, std::vector<int> const& signs);

// A face as the list of segments on its boundary; segment s runs from
// passage s to passage s + 1 (cyclically).
std::vector<std::vector<std::size_t>> faces(KnotDiagram const& d);

// Equal up to the choice of starting point of the code.
bool same_diagram(KnotDiagram const& a, KnotDiagram const& b);

// Arc names x1 .. xn.
Alphabet arc_names(KnotDiagram const& d);

enum class MoveKind {
  R1_1,  // kink passing under then over: the over arc is the outgoing arc
  R1_2,  // kink passing over then under: the over arc is the incoming arc
  R2,
  R3,
};

enum class Direction { Forward, Backward };

struct ReidemeisterMove {
  MoveKind kind = MoveKind::R1_1;
  Direction direction = Direction::Forward;
  // Forward R1 and R2: insertion point, before passage `position`.
  std::size_t position = 0;
  // Forward R2: insertion point on the second strand, distinct from `position`.
  std::size_t second = 0;
  // Forward R1: sign of the new crossing. Forward R2: sign of the first new
  // crossing met at `position`; the other has the opposite sign.
  int sign = 1;
  // Forward R2: the strand at `position` passes over.
  bool first_over = true;
  // Forward R2: both strands meet the new crossings in the same order.
  bool parallel = true;
  // Backward R1 (one crossing), backward R2 (two) and R3 (three).
  std::vector<std::size_t> crossings;
};

// Applies a move. Throws InvalidMove if the local pattern does not match.
KnotDiagram reidemeister_apply(KnotDiagram const& d, ReidemeisterMove const& m);

// Every backward R1, backward R2 and R3 move that applies to d.
std::vector<ReidemeisterMove> r1_sites(KnotDiagram const& d);
std::vector<ReidemeisterMove> r2_sites(KnotDiagram const& d);
std::vector<ReidemeisterMove> r3_sites(KnotDiagram const& d);
// Every forward R2 move that applies to d.
std::vector<ReidemeisterMove> r2_insertions(KnotDiagram const& d);

// Closure of a braid on `strands` strands. Letter k > 0 is the positive
// crossing of strands k and k + 1, -k its inverse. Throws ValidationError if
// the closure has more than one component.
KnotDiagram braid_closure(std::vector<int> const& word, std::size_t strands);

// KnotAtlas PD code "X[i,j,k,l] ...", i the incoming under edge, read
// counterclockwise; "unknot" for the crossingless diagram.
KnotDiagram parse_pd(std::string_view text);
std::string to_pd(KnotDiagram const& d);
// Signed Gauss code "O1- U2- O3- U1- O2- U3-", or "unknot".
KnotDiagram parse_gauss(std::string_view text);
std::string to_string(KnotDiagram const& d);
// Either format, with '#' comments.
KnotDiagram parse_diagram(std::string_view text);

std::string to_string(ReidemeisterMove const& m);
// "r1-1 at 3 sign=-1", "r1-2 remove 0", "r2 at 1 5 over parallel sign=1",
// "r2 remove 0 1", "r3 0 1 2".
ReidemeisterMove parse_move(std::string_view text);

}  // namespace holozeta
