#include "holozeta/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "holozeta/error.hpp"
#include "holozeta/text.hpp"

namespace holozeta {

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix operator*(QMatrix const& a, QMatrix const& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  QMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

std::optional<QMatrix> inverse(QMatrix const& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of non-square matrix");
  std::size_t n = m.rows();
  QMatrix a = m, inv = QMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Rational p = a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) /= p;
      inv(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == 0) continue;
      Rational f = a(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Rational det(QMatrix const& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of non-square matrix");
  std::size_t n = m.rows();
  QMatrix a = m;
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      d = -d;
    }
    d *= a(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col) == 0) continue;
      Rational f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return d;
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

PolyMatrix PolyMatrix::from_rational(QMatrix const& rho, std::int64_t alpha) {
  PolyMatrix m(rho.rows(), rho.cols());
  for (std::size_t i = 0; i < rho.rows(); ++i)
    for (std::size_t j = 0; j < rho.cols(); ++j) m(i, j) = LaurentPoly::monomial(rho(i, j), alpha);
  return m;
}

PolyMatrix PolyMatrix::from_rows(std::vector<std::vector<LaurentPoly>> const& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  PolyMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](LaurentPoly const& p) { return p.is_zero(); });
}

LaurentPoly PolyMatrix::trace() const {
  if (!is_square()) throw DimensionError("trace of non-square matrix");
  LaurentPoly t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

PolyMatrix PolyMatrix::transposed() const {
  PolyMatrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, PolyMatrix const& m) {
  if (r0 + m.rows_ > rows_ || c0 + m.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) (*this)(r0 + i, c0 + j) = m(i, j);
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) throw DimensionError("block out of range");
  PolyMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

PolyMatrix PolyMatrix::minor_matrix(std::size_t row, std::size_t col) const {
  PolyMatrix m(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, r = 0; i < rows_; ++i) {
    if (i == row) continue;
    for (std::size_t j = 0, c = 0; j < cols_; ++j) {
      if (j == col) continue;
      m(r, c++) = (*this)(i, j);
    }
    ++r;
  }
  return m;
}

PolyMatrix& PolyMatrix::operator+=(PolyMatrix const& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

PolyMatrix& PolyMatrix::operator-=(PolyMatrix const& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

PolyMatrix operator*(PolyMatrix const& a, PolyMatrix const& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      auto const& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

PolyMatrix operator*(LaurentPoly const& s, PolyMatrix m) {
  for (auto& x : m.data_) x = s * x;
  return m;
}

PolyMatrix PolyMatrix::operator-() const {
  PolyMatrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

LaurentPoly det(PolyMatrix const& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  PolyMatrix a = m;
  // Shift each row into Q[t]; the determinant picks up t^-shift.
  std::int64_t total_shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    bool any = false;
    std::int64_t low = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (!a(i, j).is_zero()) {
        low = any ? std::min(low, a(i, j).low_degree()) : a(i, j).low_degree();
        any = true;
      }
    if (!any) return {};
    if (low != 0) {
      for (std::size_t j = 0; j < n; ++j) a(i, j) = a(i, j).shifted(-low);
      total_shift += low;
    }
  }
  LaurentPoly prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k).is_zero()) ++piv;
      if (piv == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)).exact_div(prev);
      a(i, k) = LaurentPoly();
    }
    prev = a(k, k);
  }
  auto d = a(n - 1, n - 1).shifted(total_shift);
  return sign < 0 ? -d : d;
}

LaurentPoly det_cofactor(PolyMatrix const& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  LaurentPoly d;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    auto term = m(0, j) * det_cofactor(m.minor_matrix(0, j));
    if (j % 2 == 0)
      d += term;
    else
      d -= term;
  }
  return d;
}

std::optional<PolyMatrix> inverse(PolyMatrix const& m) {
  auto d = det(m);
  auto dinv = d.unit_inverse();
  if (!dinv) return std::nullopt;
  std::size_t n = m.rows();
  PolyMatrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = *dinv;
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto c = det(m.minor_matrix(j, i));
      inv(i, j) = ((i + j) % 2 == 0 ? c : -c) * *dinv;
    }
  return inv;
}

std::vector<LaurentPoly> det_one_minus_coefficients(PolyMatrix const& w) {
  if (!w.is_square()) throw DimensionError("characteristic coefficients of non-square matrix");
  std::size_t n = w.rows();
  std::vector<LaurentPoly> c(n + 1);
  c[0] = 1;
  // Faddeev-LeVerrier: M_k = W M_{k-1} + c_{k-1} I, c_k = -tr(W M_k) / k.
  PolyMatrix mk(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = w * mk;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[k - 1];
    c[k] = LaurentPoly(Rational(-1, static_cast<long>(k))) * (w * mk).trace();
  }
  return c;
}

namespace {

// Splits "[a, b, c]" into entry texts; returns the offset past ']'.
std::vector<std::string> bracket_entries(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (depth == 0 && (c == ',' || c == ']')) {
      out.push_back(trim(cur));
      cur.clear();
      if (c == ']') {
        ++pos;
        if (out.size() == 1 && out[0].empty()) out.clear();
        return out;
      }
      continue;
    }
    if (c == '[' || c == '{' || c == '(') ++depth;
    if (c == ']' || c == '}' || c == ')') --depth;
    cur += c;
  }
  throw ParseError("unterminated '['", pos);
}

template <typename Entry, typename ParseEntry>
std::vector<std::vector<Entry>> parse_nested(std::string_view text, ParseEntry parse_entry) {
  std::size_t pos = 0;
  auto rows = bracket_entries(text, pos);
  if (!trim(text.substr(pos)).empty()) throw ParseError("trailing text after matrix", pos);
  std::vector<std::vector<Entry>> out;
  for (auto const& row : rows) {
    std::size_t p = 0;
    std::vector<Entry> r;
    for (auto const& e : bracket_entries(row, p)) {
      if (e.empty()) throw ParseError("empty matrix entry");
      r.push_back(parse_entry(e));
    }
    if (!trim(std::string_view(row).substr(p)).empty()) throw ParseError("trailing text in matrix row");
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

PolyMatrix parse_poly_matrix(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw ParseError("empty matrix literal");
  if (t.front() != '[') return PolyMatrix::scalar(parse_laurent(t));
  auto rows = parse_nested<LaurentPoly>(t, [](std::string const& e) { return parse_laurent(e); });
  try {
    return PolyMatrix::from_rows(rows);
  } catch (DimensionError const& e) {
    throw ParseError(e.what());
  }
}

std::string to_string(PolyMatrix const& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + to_string(m(i, j));
    out += "]";
  }
  return out + "]";
}

QMatrix parse_rational_matrix(std::string_view text) {
  auto t = trim(text);
  if (t.empty()) throw ParseError("empty matrix literal");
  if (t.front() != '[') {
    QMatrix m(1, 1);
    m(0, 0) = parse_rational(t);
    return m;
  }
  auto rows = parse_nested<Rational>(t, [](std::string const& e) { return parse_rational(e); });
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  QMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw ParseError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::string to_string(QMatrix const& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).get_str();
    out += "]";
  }
  return out + "]";
}

}  // namespace holozeta
