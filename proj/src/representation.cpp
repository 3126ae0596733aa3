#include "holozeta/representation.hpp"

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

Representation Representation::abelianization(std::size_t dim) {
  Representation r(dim);
  r.set_default({QMatrix::identity(dim), 1});
  return r;
}

void Representation::check(GeneratorImage const& image) const {
  if (image.rho.rows() != dim_ || image.rho.cols() != dim_)
    throw DimensionError("generator image has the wrong size");
  if (det(image.rho) == 0) throw ValidationError("non-invertible generator image");
}

void Representation::set(std::string const& name, GeneratorImage image) {
  check(image);
  images_[name] = std::move(image);
}

void Representation::set_default(GeneratorImage image) {
  check(image);
  default_ = std::move(image);
}

bool Representation::defines(std::string const& name) const { return images_.count(name) || default_; }

GeneratorImage const& Representation::image(std::string const& name) const {
  auto it = images_.find(name);
  if (it != images_.end()) return it->second;
  if (default_) return *default_;
  throw LookupError("representation does not define generator '" + name + "'");
}

Phi::Phi(Representation const& rep, Alphabet const& alphabet)
    : dim_(rep.dim()), alphabet_(alphabet), forward_(alphabet.size()), backward_(alphabet.size()) {
  for (std::size_t g = 0; g < alphabet.size(); ++g) {
    if (!rep.defines(alphabet[g])) continue;
    auto const& img = rep.image(alphabet[g]);
    forward_[g] = img;
    backward_[g] = GeneratorImage{*inverse(img.rho), -img.alpha};
  }
}

GeneratorImage const& Phi::letter_image(Letter const& l) const {
  if (l.gen >= forward_.size() || !forward_[l.gen])
    throw LookupError("representation does not define generator '" +
                      (l.gen < alphabet_.size() ? alphabet_[l.gen] : std::to_string(l.gen)) + "'");
  return l.exp > 0 ? *forward_[l.gen] : *backward_[l.gen];
}

GeneratorImage Phi::word_image(Word const& w) const {
  GeneratorImage out{QMatrix::identity(dim_), 0};
  for (auto const& l : w.letters()) {
    auto const& img = letter_image(l);
    out.rho = out.rho * img.rho;
    out.alpha += img.alpha;
  }
  return out;
}

PolyMatrix Phi::operator()(Word const& w) const {
  auto img = word_image(w);
  return PolyMatrix::from_rational(img.rho, img.alpha);
}

PolyMatrix Phi::operator()(GroupRingElt const& e) const {
  PolyMatrix out(dim_, dim_);
  for (auto const& [w, c] : e.terms()) {
    auto img = word_image(w);
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = 0; j < dim_; ++j)
        if (img.rho(i, j) != 0) out(i, j) += LaurentPoly::monomial(c * img.rho(i, j), img.alpha);
  }
  return out;
}

PolyMatrix apply_phi(GroupRingElt const& e, Representation const& rep, Alphabet const& alphabet) {
  return Phi(rep, alphabet)(e);
}

namespace {

GeneratorImage block_sum(GeneratorImage const& a, GeneratorImage const& b) {
  if (a.alpha != b.alpha) throw ValidationError("direct sum needs equal exponents on each generator");
  std::size_t n = a.rho.rows(), m = b.rho.rows();
  QMatrix r(n + m, n + m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a.rho(i, j);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) r(n + i, n + j) = b.rho(i, j);
  return {r, a.alpha};
}

}  // namespace

Representation direct_sum(Representation const& a, Representation const& b) {
  Representation out(a.dim() + b.dim());
  if (a.default_image().has_value() != b.default_image().has_value())
    throw ValidationError("generator mismatch in direct sum");
  if (a.default_image()) out.set_default(block_sum(*a.default_image(), *b.default_image()));
  for (auto const& [name, img] : a.explicit_images()) {
    if (!b.defines(name)) throw ValidationError("generator mismatch in direct sum: '" + name + "'");
    out.set(name, block_sum(img, b.image(name)));
  }
  for (auto const& [name, img] : b.explicit_images()) {
    if (!a.defines(name)) throw ValidationError("generator mismatch in direct sum: '" + name + "'");
    out.set(name, block_sum(a.image(name), img));
  }
  return out;
}

Representation conjugate(Representation const& r, QMatrix const& p) {
  if (p.rows() != r.dim() || p.cols() != r.dim()) throw DimensionError("conjugating matrix has the wrong size");
  auto pinv = inverse(p);
  if (!pinv) throw ValidationError("conjugating matrix is singular");
  Representation out(r.dim());
  if (r.default_image()) out.set_default({*pinv * r.default_image()->rho * p, r.default_image()->alpha});
  for (auto const& [name, img] : r.explicit_images()) out.set(name, {*pinv * img.rho * p, img.alpha});
  return out;
}

Representation parse_representation(std::string_view text) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty representation");
  Scanner head(lines[0]);
  if (!head.consume("dim") || !head.consume(':')) throw ParseError("representation must start with 'dim:'");
  auto d = head.integer();
  if (!d || *d <= 0 || !head.at_end()) throw ParseError("bad dimension");
  Representation rep(static_cast<std::size_t>(*d));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const& line = lines[i];
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'name = matrix alpha=k' on line " + std::to_string(i + 1));
    auto name = trim(std::string_view(line).substr(0, eq));
    auto rest = std::string_view(line).substr(eq + 1);
    auto apos = rest.rfind("alpha");
    if (apos == std::string::npos) throw ParseError("missing alpha on line " + std::to_string(i + 1));
    auto mat = parse_rational_matrix(rest.substr(0, apos));
    Scanner as(rest.substr(apos + 5));
    as.expect('=');
    auto alpha = as.integer();
    if (!alpha || !as.at_end()) throw ParseError("bad alpha on line " + std::to_string(i + 1));
    GeneratorImage img{mat, *alpha};
    try {
      if (name == "*")
        rep.set_default(img);
      else
        rep.set(name, img);
    } catch (DimensionError const& e) {
      throw ParseError(std::string(e.what()) + " on line " + std::to_string(i + 1));
    }
  }
  return rep;
}

std::string to_string(Representation const& r) {
  std::string out = "dim: " + std::to_string(r.dim()) + "\n";
  for (auto const& [name, img] : r.explicit_images())
    out += name + " = " + to_string(img.rho) + " alpha=" + std::to_string(img.alpha) + "\n";
  if (r.default_image())
    out += "* = " + to_string(r.default_image()->rho) + " alpha=" + std::to_string(r.default_image()->alpha) + "\n";
  return out;
}

}  // namespace holozeta
