#include "holozeta/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

namespace {

bool valid_name(std::string const& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

std::string rel_label(std::size_t i) { return "relation " + std::to_string(i + 1); }

}  // namespace

BasedPresentation::BasedPresentation(Alphabet generators, std::vector<Relation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  std::set<std::string> names;
  for (auto const& g : generators_) {
    if (!valid_name(g)) throw ValidationError("invalid generator name '" + g + "'");
    if (!names.insert(g).second) throw ValidationError("duplicate generator '" + g + "'");
  }
  std::set<std::size_t> bases;
  for (std::size_t i = 0; i < relations_.size(); ++i) {
    auto const& r = relations_[i];
    if (r.word.empty()) throw ValidationError(rel_label(i) + " is trivial");
    for (auto const& l : r.word.letters())
      if (l.gen >= generators_.size()) throw ValidationError(rel_label(i) + " uses an unknown generator");
    if (!r.base) continue;
    if (*r.base >= r.word.size()) throw ValidationError(rel_label(i) + " has its base point out of range");
    if (!bases.insert(r.word[*r.base].gen).second)
      throw ValidationError("base generator '" + generators_[r.word[*r.base].gen] + "' is used twice");
  }
}

std::size_t BasedPresentation::generator(std::string_view name) const {
  auto g = find_generator(generators_, name);
  if (!g) throw LookupError("unknown generator '" + std::string(name) + "'");
  return *g;
}

std::optional<std::size_t> BasedPresentation::base_generator(std::size_t i) const {
  auto const& r = relations_.at(i);
  if (!r.base) return std::nullopt;
  return r.word[*r.base].gen;
}

Word solve_for_base(Word const& r, std::size_t position) {
  if (position >= r.size()) throw ValidationError("base point position out of range");
  Word w = r;
  if (w[position].exp < 0) {
    w = w.inverse();
    position = w.size() - 1 - position;
  }
  // r rotated to x g with g the letters after x cyclically; x g = 1 gives x = g^-1.
  std::vector<Letter> rest(w.letters().begin() + static_cast<std::ptrdiff_t>(position) + 1, w.letters().end());
  rest.insert(rest.end(), w.letters().begin(), w.letters().begin() + static_cast<std::ptrdiff_t>(position));
  return Word(rest).inverse();
}

SolvedRelation solved_form(BasedPresentation const& p, std::size_t relation) {
  auto const& r = p.relations().at(relation);
  if (!r.base) throw ValidationError(rel_label(relation) + " has no base point");
  return {r.word[*r.base].gen, solve_for_base(r.word, *r.base)};
}

bool AssumptionReport::all_certified() const {
  return std::all_of(entries.begin(), entries.end(), [](AssumptionEntry const& e) { return e.certified; });
}

AssumptionReport check_assumption(std::vector<SolvedRelation> const& relations, Alphabet const& alphabet,
                                  Representation const& rep) {
  AssumptionReport report;
  Phi phi(rep, alphabet);
  for (std::size_t i = 0; i < relations.size(); ++i) {
    AssumptionEntry e;
    e.relation = i;
    try {
      auto d = fox_derivative(relations[i].rhs, relations[i].generator);
      e.image = phi(GroupRingElt::one() - d);
      e.certified = !e.image.is_zero();
    } catch (Error const&) {
      e.certified = false;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

AssumptionReport check_assumption(BasedPresentation const& p, Representation const& rep) {
  AssumptionReport report;
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    if (!p.relations()[i].base) {
      report.entries.push_back({i, false, {}});
      continue;
    }
    auto sub = check_assumption({solved_form(p, i)}, p.generators(), rep);
    sub.entries[0].relation = i;
    report.entries.push_back(sub.entries[0]);
  }
  return report;
}

namespace {

Relation track(std::vector<Letter> const& letters, std::optional<std::size_t> base, std::size_t i) {
  Relation out;
  if (base) {
    auto t = reduce_tracking(letters, *base);
    if (!t.position) throw InvalidMove("base point of " + rel_label(i) + " cancelled");
    out.word = t.word;
    out.base = t.position;
  } else {
    out.word = Word(letters);
  }
  if (out.word.empty()) throw InvalidMove(rel_label(i) + " became trivial");
  return out;
}

std::vector<Letter> concat(std::initializer_list<Word const*> parts) {
  std::vector<Letter> out;
  for (auto const* w : parts) out.insert(out.end(), w->letters().begin(), w->letters().end());
  return out;
}

void check_word(Word const& w, std::size_t n) {
  for (auto const& l : w.letters())
    if (l.gen >= n) throw InvalidMove("move word uses an unknown generator");
}

}  // namespace

BasedPresentation tietze_apply(BasedPresentation const& p, TietzeMove const& m) {
  auto gens = p.generators();
  auto rels = p.relations();
  auto need_rel = [&](std::size_t i) {
    if (i >= rels.size()) throw InvalidMove("no " + rel_label(i));
  };
  check_word(m.word, gens.size());
  switch (m.kind) {
    case TietzeKind::InvertRelation: {
      need_rel(m.relation);
      auto& r = rels[m.relation];
      if (r.base) r.base = r.word.size() - 1 - *r.base;
      r.word = r.word.inverse();
      break;
    }
    case TietzeKind::ConjugateRelation: {
      need_rel(m.relation);
      auto& r = rels[m.relation];
      auto winv = m.word.inverse();
      std::optional<std::size_t> shifted;
      if (r.base) shifted.emplace(r.base.value() + m.word.size());
      r = track(concat({&m.word, &r.word, &winv}), shifted, m.relation);
      break;
    }
    case TietzeKind::MultiplyRelations: {
      need_rel(m.relation);
      need_rel(m.other);
      if (m.relation == m.other) throw InvalidMove("a relation cannot be multiplied by itself");
      if (m.sign != 1 && m.sign != -1) throw InvalidMove("multiplication sign must be +1 or -1");
      auto& r = rels[m.relation];
      auto rk = m.sign > 0 ? rels[m.other].word : rels[m.other].word.inverse();
      auto winv = m.word.inverse();
      r = track(concat({&r.word, &m.word, &rk, &winv}), r.base, m.relation);
      break;
    }
    case TietzeKind::AddGenerator: {
      if (!valid_name(m.generator)) throw InvalidMove("invalid generator name '" + m.generator + "'");
      if (find_generator(gens, m.generator)) throw InvalidMove("generator '" + m.generator + "' already exists");
      std::size_t x = gens.size();
      gens.push_back(m.generator);
      auto xw = Word::generator(x) * m.word.inverse();
      rels.push_back({xw, 0});
      break;
    }
    case TietzeKind::RemoveGenerator: {
      auto x = find_generator(gens, m.generator);
      if (!x) throw InvalidMove("no generator '" + m.generator + "'");
      std::optional<std::size_t> owner;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        auto occ = rels[i].word.occurrences(*x);
        if (occ.empty()) continue;
        if (owner || occ.size() != 1 || rels[i].base != occ[0])
          throw InvalidMove("generator '" + m.generator + "' is not defined by a single relation");
        owner = i;
      }
      if (!owner) throw InvalidMove("generator '" + m.generator + "' has no defining relation");
      rels.erase(rels.begin() + static_cast<std::ptrdiff_t>(*owner));
      gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(*x));
      for (auto& r : rels) {
        auto letters = r.word.letters();
        for (auto& l : letters)
          if (l.gen > *x) --l.gen;
        r.word = Word(letters);
      }
      break;
    }
  }
  try {
    return BasedPresentation(gens, rels);
  } catch (ValidationError const& e) {
    throw InvalidMove(e.what());
  }
}

TietzeMove formal_inverse(BasedPresentation const& before, TietzeMove const& m) {
  TietzeMove inv = m;
  switch (m.kind) {
    case TietzeKind::InvertRelation:
      break;
    case TietzeKind::ConjugateRelation:
      inv.word = m.word.inverse();
      break;
    case TietzeKind::MultiplyRelations:
      inv.sign = -m.sign;
      break;
    case TietzeKind::AddGenerator:
      inv.kind = TietzeKind::RemoveGenerator;
      inv.word = Word();
      break;
    case TietzeKind::RemoveGenerator: {
      // Re-adding puts the generator and its relation last.
      auto x = before.generator(m.generator);
      for (std::size_t i = 0; i < before.relations().size(); ++i)
        if (before.base_generator(i) == x) {
          auto f = solve_for_base(before.relations()[i].word, *before.relations()[i].base);
          auto letters = f.letters();
          for (auto& l : letters)
            if (l.gen > x) --l.gen;
          inv.kind = TietzeKind::AddGenerator;
          inv.word = Word(letters);
          return inv;
        }
      throw InvalidMove("generator '" + m.generator + "' has no defining relation");
    }
  }
  return inv;
}

BasedPresentation rebase(BasedPresentation const& p, std::size_t relation, std::size_t new_position) {
  if (relation >= p.relations().size()) throw InvalidMove("no " + rel_label(relation));
  auto rels = p.relations();
  auto& r = rels[relation];
  if (!r.base) throw InvalidMove(rel_label(relation) + " has no base point");
  if (new_position >= r.word.size()) throw InvalidMove("new base position out of range");
  if (r.word[new_position].gen != r.word[*r.base].gen)
    throw InvalidMove("unsupported rebase: the new base point uses a different generator");
  r.base = new_position;
  return BasedPresentation(p.generators(), rels);
}

GroupGraph build_group_weighted_graph(BasedPresentation const& p) {
  GroupGraph g(p.generators());
  for (auto const& name : p.generators()) g.add_vertex(name);
  for (std::size_t i = 0; i < p.relations().size(); ++i) {
    auto solved = solved_form(p, i);
    auto const& src = p.generators()[solved.generator];
    for (std::size_t j = 0; j < p.generators().size(); ++j) {
      auto d = fox_derivative(solved.rhs, j);
      if (d.is_zero()) continue;
      g.add_edge("r" + std::to_string(i + 1) + ":" + p.generators()[j], src, p.generators()[j], d);
    }
  }
  return g;
}

namespace {

struct RelationKey {
  std::vector<std::pair<std::string, int>> letters;
  std::string base_name;
  std::size_t base_ordinal = 0;
  bool has_base = false;
  friend auto operator<=>(RelationKey const&, RelationKey const&) = default;
};

std::size_t occurrence_ordinal(Word const& w, std::size_t position) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < position; ++i)
    if (w[i].gen == w[position].gen) ++k;
  return k;
}

std::multiset<RelationKey> relation_keys(BasedPresentation const& p) {
  std::multiset<RelationKey> out;
  for (auto const& r : p.relations()) {
    RelationKey k;
    for (auto const& l : r.word.letters()) k.letters.emplace_back(p.generators()[l.gen], l.exp);
    if (r.base) {
      k.has_base = true;
      k.base_name = p.generators()[r.word[*r.base].gen];
      k.base_ordinal = occurrence_ordinal(r.word, *r.base);
    }
    out.insert(k);
  }
  return out;
}

}  // namespace

bool same_presentation(BasedPresentation const& a, BasedPresentation const& b) {
  std::set<std::string> ga(a.generators().begin(), a.generators().end());
  std::set<std::string> gb(b.generators().begin(), b.generators().end());
  return ga == gb && relation_keys(a) == relation_keys(b);
}

Representation extend_representation(Representation const& rep, BasedPresentation const& before, TietzeMove const& m) {
  if (m.kind != TietzeKind::AddGenerator) return rep;
  Representation out = rep;
  out.set(m.generator, Phi(rep, before.generators()).word_image(m.word));
  return out;
}

TietzeReport verify_tietze_script(BasedPresentation const& start, std::vector<TietzeMove> const& moves,
                                  BasedPresentation const* expected, Representation const& rep) {
  TietzeReport report;
  auto current = start;
  auto current_rep = rep;
  auto zeta = [&](BasedPresentation const& p, Representation const& r) {
    return zeta_reciprocal(build_group_weighted_graph(p), r);
  };
  try {
    report.steps.push_back({zeta(current, current_rep), true, true});
  } catch (Error const& e) {
    report.failed_step = 0;
    report.message = std::string("starting presentation: ") + e.what();
    report.final_presentation = current;
    return report;
  }
  auto const z0 = report.steps[0].zeta;
  bool zeta_ok = true;
  for (std::size_t i = 0; i < moves.size(); ++i) {
    try {
      auto next_rep = extend_representation(current_rep, current, moves[i]);
      current = tietze_apply(current, moves[i]);
      current_rep = next_rep;
      TietzeStepCheck c;
      c.zeta = zeta(current, current_rep);
      c.exactly_equal = c.zeta == z0;
      c.equal_up_to_units = equal_up_to_units(c.zeta, z0);
      if (!c.equal_up_to_units && zeta_ok) {
        zeta_ok = false;
        report.message = "step " + std::to_string(i + 1) + " changed the zeta function";
      }
      report.steps.push_back(c);
    } catch (Error const& e) {
      report.failed_step = i + 1;
      report.message = "step " + std::to_string(i + 1) + ": " + e.what();
      report.final_presentation = current;
      return report;
    }
  }
  report.final_presentation = current;
  report.matches_expected = expected ? same_presentation(current, *expected) : true;
  if (!report.matches_expected && report.message.empty())
    report.message = "final presentation differs from the expected one";
  report.ok = zeta_ok && report.matches_expected;
  return report;
}

std::string to_string(Relation const& r, Alphabet const& alphabet) {
  std::string out;
  for (std::size_t i = 0; i < r.word.size(); ++i) {
    if (i) out += " * ";
    out += alphabet.at(r.word[i].gen);
    if (r.word[i].exp < 0) out += "^-1";
  }
  if (r.base)
    out += "  base: " + alphabet.at(r.word[*r.base].gen) + "@" + std::to_string(occurrence_ordinal(r.word, *r.base));
  return out;
}

std::string to_string(BasedPresentation const& p) {
  std::string out = "gens:";
  for (auto const& g : p.generators()) out += " " + g;
  out += "\n";
  for (auto const& r : p.relations()) out += "rel: " + to_string(r, p.generators()) + "\n";
  return out;
}

BasedPresentation parse_presentation(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty() || lines[0].rfind("gens:", 0) != 0) throw ParseError("presentation must start with 'gens:'");
  Alphabet gens;
  for (auto& g : split(trim(lines[0].substr(5)), ' '))
    if (!g.empty()) gens.push_back(g);
  std::vector<Relation> rels;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto where = " on line " + std::to_string(i + 1);
    auto const& line = lines[i];
    if (line.rfind("rel:", 0) != 0) throw ParseError("expected 'rel:'" + where);
    auto body = line.substr(4);
    auto bpos = body.find("base:");
    Relation r;
    try {
      r.word = parse_word(body.substr(0, bpos), gens);
      if (bpos != std::string::npos) {
        auto base_text = trim(body.substr(bpos + 5));
        auto at = base_text.find('@');
        auto name = trim(base_text.substr(0, at));
        std::size_t ordinal = 0;
        if (at != std::string::npos) {
          Scanner s(base_text.substr(at + 1));
          auto k = s.integer();
          if (!k || *k < 0 || !s.at_end()) throw ParseError("bad occurrence ordinal" + where);
          ordinal = static_cast<std::size_t>(*k);
        }
        auto g = find_generator(gens, name);
        if (!g) throw ParseError("unknown base generator '" + name + "'" + where);
        auto occ = r.word.occurrences(*g);
        if (ordinal >= occ.size()) throw ParseError("base occurrence " + base_text + " does not exist" + where);
        r.base = occ[ordinal];
      }
    } catch (ParseError const&) {
      throw;
    } catch (Error const& e) {
      throw ParseError(std::string(e.what()) + where);
    }
    rels.push_back(r);
  }
  try {
    return BasedPresentation(gens, rels);
  } catch (ValidationError const& e) {
    throw ParseError(e.what());
  }
}

namespace {

std::size_t relation_ref(std::string const& tok, std::size_t count, std::string const& where) {
  if (tok.size() < 2 || tok[0] != 'r') throw ParseError("expected a relation reference like r1" + where);
  Scanner s(std::string_view(tok).substr(1));
  auto k = s.integer();
  if (!k || !s.at_end() || *k < 1 || static_cast<std::size_t>(*k) > count)
    throw ParseError("no relation " + tok + where);
  return static_cast<std::size_t>(*k - 1);
}

}  // namespace

std::vector<TietzeMove> parse_tietze_script(std::string_view text, BasedPresentation const& start) {
  std::vector<TietzeMove> out;
  auto current = start;
  auto lines = content_lines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    auto where = " on line " + std::to_string(li + 1);
    std::vector<std::string> tok;
    for (auto& t : split(lines[li], ' '))
      if (!t.empty()) tok.push_back(t);
    auto rest_after = [&](std::size_t k) {
      std::string s;
      for (std::size_t i = k; i < tok.size(); ++i) s += tok[i] + " ";
      return s;
    };
    TietzeMove m;
    auto n = current.relations().size();
    try {
      if (tok[0] == "invert" && tok.size() == 2) {
        m.kind = TietzeKind::InvertRelation;
        m.relation = relation_ref(tok[1], n, where);
      } else if (tok[0] == "conjugate" && tok.size() >= 4 && tok[2] == "by") {
        m.kind = TietzeKind::ConjugateRelation;
        m.relation = relation_ref(tok[1], n, where);
        m.word = parse_word(rest_after(3), current.generators());
      } else if (tok[0] == "multiply" && tok.size() >= 3) {
        m.kind = TietzeKind::MultiplyRelations;
        m.relation = relation_ref(tok[1], n, where);
        m.other = relation_ref(tok[2], n, where);
        std::size_t end = tok.size();
        if (tok.back() == "inverse") {
          m.sign = -1;
          --end;
        }
        if (end > 3) {
          if (tok[3] != "by") throw ParseError("expected 'by <word>'" + where);
          std::string w;
          for (std::size_t i = 4; i < end; ++i) w += tok[i] + " ";
          m.word = parse_word(w, current.generators());
        }
      } else if (tok[0] == "add-generator" && tok.size() >= 4 && tok[2] == "=") {
        m.kind = TietzeKind::AddGenerator;
        m.generator = tok[1];
        m.word = parse_word(rest_after(3), current.generators());
      } else if (tok[0] == "remove-generator" && tok.size() == 2) {
        m.kind = TietzeKind::RemoveGenerator;
        m.generator = tok[1];
      } else {
        throw ParseError("unrecognized move '" + lines[li] + "'" + where);
      }
      current = tietze_apply(current, m);
    } catch (ParseError const&) {
      throw;
    } catch (InvalidMove const&) {
      // Leave invalid moves for the caller to report; later lines cannot be
      // resolved against a presentation that was not produced.
      out.push_back(m);
      return out;
    } catch (Error const& e) {
      throw ParseError(std::string(e.what()) + where);
    }
    out.push_back(m);
  }
  return out;
}

std::string to_string(TietzeMove const& m, Alphabet const& alphabet) {
  auto r = [](std::size_t i) { return "r" + std::to_string(i + 1); };
  switch (m.kind) {
    case TietzeKind::InvertRelation:
      return "invert " + r(m.relation);
    case TietzeKind::ConjugateRelation:
      return "conjugate " + r(m.relation) + " by " + to_string(m.word, alphabet);
    case TietzeKind::MultiplyRelations:
      return "multiply " + r(m.relation) + " " + r(m.other) + (m.word.empty() ? "" : " by " + to_string(m.word, alphabet)) +
             (m.sign < 0 ? " inverse" : "");
    case TietzeKind::AddGenerator:
      return "add-generator " + m.generator + " = " + to_string(m.word, alphabet);
    case TietzeKind::RemoveGenerator:
      return "remove-generator " + m.generator;
  }
  return "?";
}

}  // namespace holozeta
