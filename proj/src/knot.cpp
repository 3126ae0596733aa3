#include "holozeta/knot.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

namespace {

// Code with crossings indexed 0..n-1 in any order.
struct RawCode {
  std::vector<Passage> code;
  std::vector<int> signs;
};

enum Role { OverIn, OverOut, UnderIn, UnderOut };

// Counterclockwise slot of each role around a crossing.
int slot(int sign, Role r) {
  static constexpr std::array<int, 4> positive{0, 2, 1, 3};
  static constexpr std::array<int, 4> negative{0, 2, 3, 1};
  return sign > 0 ? positive[r] : negative[r];
}

// Face orbits as lists of segments.
std::vector<std::vector<std::size_t>> face_orbits(std::vector<Passage> const& code, std::vector<int> const& signs) {
  std::size_t m = code.size();
  if (m == 0) return {{}, {}};
  std::size_t darts = 4 * signs.size();
  std::vector<std::size_t> partner(darts, darts), segment(darts, 0);
  for (std::size_t s = 0; s < m; ++s) {
    auto const& a = code[s];
    auto const& b = code[(s + 1) % m];
    auto from = 4 * a.crossing + static_cast<std::size_t>(slot(signs[a.crossing], a.over ? OverOut : UnderOut));
    auto to = 4 * b.crossing + static_cast<std::size_t>(slot(signs[b.crossing], b.over ? OverIn : UnderIn));
    partner[from] = to;
    partner[to] = from;
    segment[from] = segment[to] = s;
  }
  std::vector<bool> seen(darts, false);
  std::vector<std::vector<std::size_t>> result;
  for (std::size_t start = 0; start < darts; ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> face;
    std::size_t h = start;
    while (!seen[h]) {
      seen[h] = true;
      face.push_back(segment[h]);
      auto p = partner[h];
      h = p - p % 4 + (p % 4 + 1) % 4;
    }
    result.push_back(std::move(face));
  }
  return result;
}

bool has_face(RawCode const& raw, std::vector<std::size_t> segments) {
  std::sort(segments.begin(), segments.end());
  for (auto f : face_orbits(raw.code, raw.signs)) {
    std::sort(f.begin(), f.end());
    if (f == segments) return true;
  }
  return false;
}

RawCode raw_of(KnotDiagram const& d) { return {d.code(), d.signs()}; }

std::vector<GaussEntry> entries_of(RawCode const& raw) {
  std::vector<GaussEntry> out;
  out.reserve(raw.code.size());
  for (auto const& p : raw.code)
    out.push_back({static_cast<long>(p.crossing), p.over, raw.signs[p.crossing]});
  return out;
}

KnotDiagram build(RawCode const& raw, char const* move) {
  try {
    return KnotDiagram(entries_of(raw));
  } catch (ValidationError const& e) {
    throw InvalidMove(std::string(move) + ": " + e.what());
  }
}

// Drops the passages of the given crossings and renumbers the rest.
RawCode remove_crossings(RawCode const& raw, std::set<std::size_t> const& gone) {
  std::vector<std::size_t> index(raw.signs.size(), 0);
  RawCode out;
  for (std::size_t c = 0; c < raw.signs.size(); ++c)
    if (!gone.contains(c)) {
      index[c] = out.signs.size();
      out.signs.push_back(raw.signs[c]);
    }
  for (auto const& p : raw.code)
    if (!gone.contains(p.crossing)) out.code.push_back({index[p.crossing], p.over});
  return out;
}

std::string crossing_label(std::size_t c) { return "crossing " + std::to_string(c + 1); }

void check_crossing(KnotDiagram const& d, std::size_t c) {
  if (c >= d.crossing_count()) throw InvalidMove("no " + crossing_label(c));
}

// Segment from passage s to s + 1 if the two passages are adjacent in that order.
std::optional<std::size_t> segment_between(std::size_t from, std::size_t to, std::size_t m) {
  if ((from + 1) % m == to) return from;
  return std::nullopt;
}

std::optional<std::string> r2_backward_problem(KnotDiagram const& d, std::size_t a, std::size_t b) {
  if (a == b) return "the two crossings must differ";
  if (d.signs()[a] == d.signs()[b]) return "crossings of an R2 bigon have opposite signs";
  auto m = d.code().size();
  auto oa = d.over_position(a), ob = d.over_position(b);
  auto ua = d.under_position(a), ub = d.under_position(b);
  auto over_seg = segment_between(oa, ob, m);
  if (!over_seg) over_seg = segment_between(ob, oa, m);
  auto under_seg = segment_between(ua, ub, m);
  if (!under_seg) under_seg = segment_between(ub, ua, m);
  if (!over_seg || !under_seg) return "the crossings are not adjacent along both strands";
  if (!has_face(raw_of(d), {*over_seg, *under_seg})) return "the two strands do not bound a bigon";
  return std::nullopt;
}

struct R3Site {
  std::array<std::size_t, 3> segments;
};

std::optional<R3Site> find_r3_site(KnotDiagram const& d, std::array<std::size_t, 3> triple, std::string& why) {
  std::set<std::size_t> cs(triple.begin(), triple.end());
  if (cs.size() != 3) {
    why = "the three crossings must differ";
    return std::nullopt;
  }
  auto const& code = d.code();
  auto m = code.size();
  auto inner = [&](std::size_t s) {
    auto a = code[s].crossing, b = code[(s + 1) % m].crossing;
    return a != b && cs.contains(a) && cs.contains(b);
  };
  for (auto const& f : face_orbits(code, d.signs())) {
    if (f.size() != 3 || !std::all_of(f.begin(), f.end(), inner)) continue;
    std::set<std::pair<std::size_t, bool>> ends;
    int over_over = 0, under_under = 0;
    for (auto s : f) {
      auto const& p = code[s];
      auto const& q = code[(s + 1) % m];
      ends.insert({p.crossing, p.over});
      ends.insert({q.crossing, q.over});
      if (p.over && q.over) ++over_over;
      if (!p.over && !q.over) ++under_under;
    }
    if (ends.size() != 6) continue;
    if (over_over != 1 || under_under != 1) {
      why = "no strand passes over both of the others";
      return std::nullopt;
    }
    return R3Site{{f[0], f[1], f[2]}};
  }
  why = "the crossings do not bound a triangular face";
  return std::nullopt;
}

}  // namespace

KnotDiagram::KnotDiagram(std::vector<GaussEntry> const& code) {
  if (code.empty()) return;
  if (code.size() % 2 != 0) throw ValidationError("a Gauss code meets every crossing twice");
  struct Seen {
    int over = 0, under = 0, sign = 0;
  };
  std::map<long, Seen> seen;
  std::map<long, std::size_t> index;
  for (auto const& e : code) {
    if (e.sign != 1 && e.sign != -1) throw ValidationError("crossing signs must be +1 or -1");
    auto& s = seen[e.label];
    (e.over ? s.over : s.under) += 1;
    if (s.sign != 0 && s.sign != e.sign) throw ValidationError("crossing " + std::to_string(e.label) + " has two signs");
    s.sign = e.sign;
    if (!e.over && s.under == 1) {
      auto next = index.size();
      index[e.label] = next;
    }
  }
  for (auto const& [label, s] : seen)
    if (s.over != 1 || s.under != 1)
      throw ValidationError("crossing " + std::to_string(label) + " must be passed once over and once under");
  signs_.assign(seen.size(), 1);
  for (auto const& e : code) {
    auto c = index.at(e.label);
    signs_[c] = e.sign;
    code_.push_back({c, e.over});
  }
  if (!is_planar(code_, signs_)) throw ValidationError("diagram is not planar");
}

std::size_t KnotDiagram::arc_at(std::size_t p) const {
  if (signs_.empty()) return 0;
  std::size_t under = 0;
  for (std::size_t i = 0; i < p; ++i)
    if (!code_[i].over) ++under;
  return under % signs_.size();
}

std::size_t KnotDiagram::over_position(std::size_t a) const {
  for (std::size_t p = 0; p < code_.size(); ++p)
    if (code_[p].crossing == a && code_[p].over) return p;
  throw LookupError("no " + crossing_label(a));
}

std::size_t KnotDiagram::under_position(std::size_t a) const {
  for (std::size_t p = 0; p < code_.size(); ++p)
    if (code_[p].crossing == a && !code_[p].over) return p;
  throw LookupError("no " + crossing_label(a));
}

Crossing KnotDiagram::crossing(std::size_t a) const {
  if (a >= signs_.size()) throw LookupError("no " + crossing_label(a));
  auto n = signs_.size();
  return {signs_[a], a, (a + 1) % n, arc_at(over_position(a))};
}

std::vector<Crossing> KnotDiagram::crossings() const {
  std::vector<Crossing> out;
  for (std::size_t a = 0; a < signs_.size(); ++a) out.push_back(crossing(a));
  return out;
}

std::vector<GaussEntry> KnotDiagram::gauss_code() const { return entries_of({code_, signs_}); }

std::size_t face_count(std::vector<Passage> const& code, std::vector<int> const& signs) {
  return face_orbits(code, signs).size();
}

bool is_planar(std::vector<Passage> const& code, std::vector<int> const& signs) {
  return face_count(code, signs) == signs.size() + 2;
}

std::vector<std::vector<std::size_t>> faces(KnotDiagram const& d) { return face_orbits(d.code(), d.signs()); }

bool same_diagram(KnotDiagram const& a, KnotDiagram const& b) {
  if (a.crossing_count() != b.crossing_count()) return false;
  if (a.crossing_count() == 0) return true;
  auto entries = b.gauss_code();
  for (std::size_t r = 0; r < entries.size(); ++r) {
    std::rotate(entries.begin(), entries.begin() + 1, entries.end());
    if (KnotDiagram(entries) == a) return true;
  }
  return false;
}

Alphabet arc_names(KnotDiagram const& d) {
  Alphabet names;
  for (std::size_t i = 0; i < d.arc_count(); ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

KnotDiagram reidemeister_apply(KnotDiagram const& d, ReidemeisterMove const& m) {
  auto raw = raw_of(d);
  auto n = d.crossing_count();
  auto len = raw.code.size();
  switch (m.kind) {
    case MoveKind::R1_1:
    case MoveKind::R1_2: {
      bool under_first = m.kind == MoveKind::R1_1;
      if (m.direction == Direction::Forward) {
        if (m.position > len) throw InvalidMove("R1: position out of range");
        if (m.sign != 1 && m.sign != -1) throw InvalidMove("R1: sign must be +1 or -1");
        raw.signs.push_back(m.sign);
        std::vector<Passage> kink{{n, !under_first}, {n, under_first}};
        raw.code.insert(raw.code.begin() + static_cast<std::ptrdiff_t>(m.position), kink.begin(), kink.end());
        return build(raw, "R1");
      }
      if (m.crossings.size() != 1) throw InvalidMove("R1: expected one crossing");
      auto c = m.crossings[0];
      check_crossing(d, c);
      auto o = d.over_position(c), u = d.under_position(c);
      bool ok = under_first ? (u + 1) % len == o : (o + 1) % len == u;
      if (!ok) throw InvalidMove("R1: " + crossing_label(c) + " is not a kink of this kind");
      return build(remove_crossings(raw, {c}), "R1");
    }
    case MoveKind::R2: {
      if (m.direction == Direction::Backward) {
        if (m.crossings.size() != 2) throw InvalidMove("R2: expected two crossings");
        check_crossing(d, m.crossings[0]);
        check_crossing(d, m.crossings[1]);
        if (auto why = r2_backward_problem(d, m.crossings[0], m.crossings[1])) throw InvalidMove("R2: " + *why);
        return build(remove_crossings(raw, {m.crossings[0], m.crossings[1]}), "R2");
      }
      if (len == 0) throw InvalidMove("R2: the crossingless diagram has a single segment");
      if (m.position >= len || m.second >= len) throw InvalidMove("R2: position out of range");
      if (m.position == m.second) throw InvalidMove("R2: both strands lie on the same segment");
      if (m.sign != 1 && m.sign != -1) throw InvalidMove("R2: sign must be +1 or -1");
      auto a = n, b = n + 1;
      raw.signs.push_back(m.sign);
      raw.signs.push_back(-m.sign);
      std::vector<Passage> first{{a, m.first_over}, {b, m.first_over}};
      std::vector<Passage> second = m.parallel ? std::vector<Passage>{{a, !m.first_over}, {b, !m.first_over}}
                                               : std::vector<Passage>{{b, !m.first_over}, {a, !m.first_over}};
      auto hi = std::max(m.position, m.second), lo = std::min(m.position, m.second);
      auto const& at_hi = hi == m.position ? first : second;
      auto const& at_lo = hi == m.position ? second : first;
      raw.code.insert(raw.code.begin() + static_cast<std::ptrdiff_t>(hi), at_hi.begin(), at_hi.end());
      raw.code.insert(raw.code.begin() + static_cast<std::ptrdiff_t>(lo), at_lo.begin(), at_lo.end());
      if (!is_planar(raw.code, raw.signs)) throw InvalidMove("R2: the strands cannot meet with these orientations");
      // The two new segments must bound a bigon.
      auto total = raw.code.size();
      std::vector<std::size_t> inner;
      for (std::size_t s = 0; s < total; ++s) {
        auto x = raw.code[s].crossing, y = raw.code[(s + 1) % total].crossing;
        if (x != y && x >= n && y >= n) inner.push_back(s);
      }
      if (inner.size() != 2 || !has_face(raw, inner)) throw InvalidMove("R2: the strands do not bound a bigon");
      return build(raw, "R2");
    }
    case MoveKind::R3: {
      if (m.crossings.size() != 3) throw InvalidMove("R3: expected three crossings");
      for (auto c : m.crossings) check_crossing(d, c);
      std::string why;
      auto site = find_r3_site(d, {m.crossings[0], m.crossings[1], m.crossings[2]}, why);
      if (!site) throw InvalidMove("R3: " + why);
      for (auto s : site->segments) std::swap(raw.code[s], raw.code[(s + 1) % len]);
      return build(raw, "R3");
    }
  }
  throw InvalidMove("unknown move");
}

std::vector<ReidemeisterMove> r1_sites(KnotDiagram const& d) {
  std::vector<ReidemeisterMove> out;
  auto len = d.code().size();
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    auto o = d.over_position(c), u = d.under_position(c);
    ReidemeisterMove m;
    m.direction = Direction::Backward;
    m.crossings = {c};
    if ((u + 1) % len == o) {
      m.kind = MoveKind::R1_1;
      out.push_back(m);
    } else if ((o + 1) % len == u) {
      m.kind = MoveKind::R1_2;
      out.push_back(m);
    }
  }
  return out;
}

std::vector<ReidemeisterMove> r2_sites(KnotDiagram const& d) {
  std::vector<ReidemeisterMove> out;
  for (std::size_t a = 0; a < d.crossing_count(); ++a)
    for (std::size_t b = a + 1; b < d.crossing_count(); ++b)
      if (!r2_backward_problem(d, a, b)) {
        ReidemeisterMove m;
        m.kind = MoveKind::R2;
        m.direction = Direction::Backward;
        m.crossings = {a, b};
        out.push_back(m);
      }
  return out;
}

std::vector<ReidemeisterMove> r3_sites(KnotDiagram const& d) {
  std::vector<ReidemeisterMove> out;
  auto n = d.crossing_count();
  std::string why;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c)
        if (find_r3_site(d, {a, b, c}, why)) {
          ReidemeisterMove m;
          m.kind = MoveKind::R3;
          m.crossings = {a, b, c};
          out.push_back(m);
        }
  return out;
}

std::vector<ReidemeisterMove> r2_insertions(KnotDiagram const& d) {
  std::vector<ReidemeisterMove> out;
  auto len = d.code().size();
  for (std::size_t p = 0; p < len; ++p)
    for (std::size_t q = 0; q < len; ++q) {
      if (p == q) continue;
      for (bool over : {true, false})
        for (bool parallel : {true, false})
          for (int sign : {1, -1}) {
            ReidemeisterMove m;
            m.kind = MoveKind::R2;
            m.position = p;
            m.second = q;
            m.first_over = over;
            m.parallel = parallel;
            m.sign = sign;
            try {
              reidemeister_apply(d, m);
              out.push_back(m);
            } catch (InvalidMove const&) {
            }
          }
    }
  return out;
}

KnotDiagram braid_closure(std::vector<int> const& word, std::size_t strands) {
  if (strands == 0) throw ValidationError("a braid needs at least one strand");
  for (auto g : word)
    if (g == 0 || static_cast<std::size_t>(std::abs(g)) >= strands)
      throw ValidationError("braid letter " + std::to_string(g) + " out of range");
  std::vector<GaussEntry> code;
  std::size_t pos = 0;
  std::size_t rounds = 0;
  do {
    for (std::size_t i = 0; i < word.size(); ++i) {
      auto k = static_cast<std::size_t>(std::abs(word[i]));
      if (pos != k - 1 && pos != k) continue;
      bool right = pos == k;
      bool positive = word[i] > 0;
      code.push_back({static_cast<long>(i), positive ? right : !right, positive ? 1 : -1});
      pos = right ? k - 1 : k;
    }
    ++rounds;
  } while (pos != 0);
  if (rounds != strands) throw ValidationError("braid closure has more than one component");
  return KnotDiagram(code);
}

KnotDiagram parse_pd(std::string_view text) {
  Scanner s(text);
  if (s.at_end()) throw ParseError("empty diagram", 0);
  if (trim(text) == "unknot") return {};
  bool wrapped = s.consume("PD[");
  struct X {
    std::array<long, 4> v;
    std::size_t offset;
  };
  std::vector<X> xs;
  while (!s.at_end()) {
    if (wrapped && s.peek() == ']') break;
    s.consume(',');
    auto at = s.position();
    s.expect('X');
    s.expect('[');
    X x{{}, at};
    for (int i = 0; i < 4; ++i) {
      if (i > 0) s.expect(',');
      auto v = s.integer();
      if (!v || *v <= 0) s.fail("expected a positive edge label");
      x.v[static_cast<std::size_t>(i)] = *v;
    }
    s.expect(']');
    xs.push_back(x);
  }
  if (wrapped) s.expect(']');
  if (!s.at_end()) s.fail("trailing input");
  if (xs.empty()) throw ParseError("empty diagram", 0);
  auto m = static_cast<long>(2 * xs.size());
  std::map<long, int> uses;
  for (auto const& x : xs)
    for (auto v : x.v) {
      if (v > m) throw ParseError("edge label " + std::to_string(v) + " exceeds twice the crossing count", x.offset);
      ++uses[v];
    }
  for (long e = 1; e <= m; ++e)
    if (uses[e] != 2) throw ParseError("open strand at edge " + std::to_string(e));
  auto succ = [m](long e) { return e % m + 1; };
  std::vector<std::optional<GaussEntry>> passages(static_cast<std::size_t>(m));
  auto place = [&](long e_in, GaussEntry g, std::size_t offset) {
    auto& slot = passages[static_cast<std::size_t>(e_in - 1)];
    if (slot) throw ParseError("ambiguous orientation at edge " + std::to_string(e_in), offset);
    slot = g;
  };
  for (std::size_t c = 0; c < xs.size(); ++c) {
    auto [i, j, k, l] = xs[c].v;
    if (k != succ(i)) throw ParseError("under strand is not oriented from i to k", xs[c].offset);
    bool forward = j == succ(l), backward = l == succ(j);
    if (!forward && !backward) throw ParseError("over strand labels are not consecutive", xs[c].offset);
    if (forward && backward) forward = l != i;  // one crossing: the over strand enters on the other edge
    int sign = forward ? 1 : -1;
    place(i, {static_cast<long>(c), false, sign}, xs[c].offset);
    place(forward ? l : j, {static_cast<long>(c), true, sign}, xs[c].offset);
  }
  std::vector<GaussEntry> code;
  for (auto const& p : passages) code.push_back(*p);
  try {
    return KnotDiagram(code);
  } catch (ValidationError const& e) {
    throw ParseError(e.what());
  }
}

std::string to_pd(KnotDiagram const& d) {
  if (d.crossing_count() == 0) return "unknot";
  auto m = d.code().size();
  auto in = [&](std::size_t p) { return p + 1; };
  auto out = [&](std::size_t p) { return (p + 1) % m + 1; };
  std::string s;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    auto u = d.under_position(c), o = d.over_position(c);
    std::size_t j = d.signs()[c] > 0 ? out(o) : in(o);
    std::size_t l = d.signs()[c] > 0 ? in(o) : out(o);
    if (!s.empty()) s += ' ';
    s += "X[" + std::to_string(in(u)) + "," + std::to_string(j) + "," + std::to_string(out(u)) + "," +
         std::to_string(l) + "]";
  }
  return s;
}

KnotDiagram parse_gauss(std::string_view text) {
  Scanner s(text);
  if (s.at_end()) throw ParseError("empty diagram", 0);
  if (trim(text) == "unknot") return {};
  std::vector<GaussEntry> code;
  while (!s.at_end()) {
    s.consume(',');
    GaussEntry e;
    if (s.consume('O'))
      e.over = true;
    else if (s.consume('U'))
      e.over = false;
    else
      s.fail("expected 'O' or 'U'");
    auto label = s.integer();
    if (!label || *label <= 0) s.fail("expected a positive crossing label");
    e.label = *label;
    if (s.consume('+'))
      e.sign = 1;
    else if (s.consume('-'))
      e.sign = -1;
    else
      s.fail("expected a crossing sign");
    code.push_back(e);
  }
  try {
    return KnotDiagram(code);
  } catch (ValidationError const& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(KnotDiagram const& d) {
  if (d.crossing_count() == 0) return "unknot";
  std::string s;
  for (auto const& p : d.code()) {
    if (!s.empty()) s += ' ';
    s += (p.over ? "O" : "U") + std::to_string(p.crossing + 1) + (d.signs()[p.crossing] > 0 ? "+" : "-");
  }
  return s;
}

KnotDiagram parse_diagram(std::string_view text) {
  std::string t;
  for (auto const& line : content_lines(text)) t += line + " ";
  t = trim(t);
  if (t.find('X') != std::string::npos) return parse_pd(t);
  return parse_gauss(t);
}

std::string to_string(ReidemeisterMove const& m) {
  auto crossings = [&] {
    std::string s;
    for (auto c : m.crossings) s += " " + std::to_string(c + 1);
    return s;
  };
  switch (m.kind) {
    case MoveKind::R1_1:
    case MoveKind::R1_2: {
      std::string name = m.kind == MoveKind::R1_1 ? "r1-1" : "r1-2";
      if (m.direction == Direction::Backward) return name + " remove" + crossings();
      return name + " at " + std::to_string(m.position) + " sign=" + std::to_string(m.sign);
    }
    case MoveKind::R2:
      if (m.direction == Direction::Backward) return "r2 remove" + crossings();
      return "r2 at " + std::to_string(m.position) + " " + std::to_string(m.second) +
             (m.first_over ? " over" : " under") + (m.parallel ? " parallel" : " antiparallel") +
             " sign=" + std::to_string(m.sign);
    case MoveKind::R3:
      return "r3" + crossings();
  }
  return "";
}

ReidemeisterMove parse_move(std::string_view text) {
  auto words = split(trim(text), ' ');
  words.erase(std::remove(words.begin(), words.end(), std::string()), words.end());
  if (words.empty()) throw ParseError("empty move");
  auto number = [&](std::string const& w) -> std::size_t {
    try {
      std::size_t used = 0;
      auto v = std::stoul(w, &used);
      if (used != w.size()) throw ParseError("expected a number, got '" + w + "'");
      return v;
    } catch (std::logic_error const&) {
      throw ParseError("expected a number, got '" + w + "'");
    }
  };
  auto crossing = [&](std::string const& w) {
    auto v = number(w);
    if (v == 0) throw ParseError("crossings are numbered from 1");
    return v - 1;
  };
  auto sign_of = [&](std::string const& w) {
    if (w == "sign=1" || w == "sign=+1") return 1;
    if (w == "sign=-1") return -1;
    throw ParseError("expected sign=1 or sign=-1, got '" + w + "'");
  };
  ReidemeisterMove m;
  auto const& head = words[0];
  if (head == "r1-1" || head == "r1-2") {
    m.kind = head == "r1-1" ? MoveKind::R1_1 : MoveKind::R1_2;
    if (words.size() == 3 && words[1] == "remove") {
      m.direction = Direction::Backward;
      m.crossings = {crossing(words[2])};
    } else if (words.size() == 4 && words[1] == "at") {
      m.position = number(words[2]);
      m.sign = sign_of(words[3]);
    } else {
      throw ParseError("expected '" + head + " at P sign=S' or '" + head + " remove C'");
    }
  } else if (head == "r2") {
    m.kind = MoveKind::R2;
    if (words.size() == 4 && words[1] == "remove") {
      m.direction = Direction::Backward;
      m.crossings = {crossing(words[2]), crossing(words[3])};
    } else if (words.size() == 7 && words[1] == "at") {
      m.position = number(words[2]);
      m.second = number(words[3]);
      if (words[4] != "over" && words[4] != "under") throw ParseError("expected 'over' or 'under'");
      m.first_over = words[4] == "over";
      if (words[5] != "parallel" && words[5] != "antiparallel") throw ParseError("expected 'parallel' or 'antiparallel'");
      m.parallel = words[5] == "parallel";
      m.sign = sign_of(words[6]);
    } else {
      throw ParseError("expected 'r2 at P Q over|under parallel|antiparallel sign=S' or 'r2 remove A B'");
    }
  } else if (head == "r3") {
    m.kind = MoveKind::R3;
    if (words.size() != 4) throw ParseError("expected 'r3 A B C'");
    m.crossings = {crossing(words[1]), crossing(words[2]), crossing(words[3])};
  } else {
    throw ParseError("unknown move '" + head + "'");
  }
  return m;
}

}  // namespace holozeta
