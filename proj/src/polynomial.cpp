#include "relsig/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace relsig {

namespace {

// Shared canonical renderer. Terms arrive as (exponent tuple, coefficient)
// and are printed in graded-lexicographic order: ascending total degree,
// ties broken by descending exponent of the earlier variable.
struct RenderTerm {
  std::vector<std::size_t> exps;
  Rational coeff;
};

std::string render_terms(std::vector<RenderTerm> terms,
                         const std::vector<std::string_view>& vars) {
  if (terms.empty()) return "0";
  std::sort(terms.begin(), terms.end(),
            [](const RenderTerm& a, const RenderTerm& b) {
              std::size_t ga = 0, gb = 0;
              for (std::size_t e : a.exps) ga += e;
              for (std::size_t e : b.exps) gb += e;
              if (ga != gb) return ga < gb;
              return a.exps > b.exps;
            });
  std::string out;
  bool first = true;
  for (const RenderTerm& term : terms) {
    const bool negative = term.coeff < 0;
    const Rational mag = negative ? Rational(-term.coeff) : term.coeff;
    std::string mono;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      if (term.exps[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars[v];
      if (term.exps[v] > 1) mono += "^" + std::to_string(term.exps[v]);
    }
    std::string body;
    if (mono.empty())
      body = relsig::to_string(mag);
    else if (mag == 1)
      body = mono;
    else
      body = relsig::to_string(mag) + "*" + mono;
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly
// ---------------------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(Rational value) {
  return UniPoly(std::vector<Rational>{std::move(value)});
}

UniPoly UniPoly::monomial(std::size_t degree, Rational coeff) {
  std::vector<Rational> coeffs(degree + 1);
  coeffs[degree] = std::move(coeff);
  return UniPoly(std::move(coeffs));
}

Rational UniPoly::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational UniPoly::evaluate(const Rational& at) const {
  Rational acc = 0;
  for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * at + coeffs_[k];
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return UniPoly();
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    out[k - 1] = coeffs_[k] * Rational(k);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::reflect(std::size_t bound) const {
  if (is_zero()) return UniPoly();
  if (degree() > bound)
    throw std::invalid_argument("reflect: degree exceeds the window bound");
  std::vector<Rational> out(bound + 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out[bound - k] = coeffs_[k];
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shift_plus_1() const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j <= i; ++j)
      out[j] += coeffs_[i] * Rational(binomial(static_cast<unsigned>(i),
                                               static_cast<unsigned>(j)));
  }
  return UniPoly(std::move(out));
}

Rational UniPoly::integrate01() const {
  Rational acc = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    acc += coeffs_[k] / Rational(k + 1);
  return acc;
}

UniPoly UniPoly::pow(unsigned exponent) const {
  UniPoly result = UniPoly::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

UniPoly UniPoly::operator+(const UniPoly& other) const {
  std::vector<Rational> out(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t k = 0; k < out.size(); ++k)
    out[k] = coefficient(k) + other.coefficient(k);
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& other) const {
  return *this + (-other);
}

UniPoly UniPoly::operator*(const UniPoly& other) const {
  if (is_zero() || other.is_zero()) return UniPoly();
  std::vector<Rational> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator*(const Rational& scale) const {
  std::vector<Rational> out(coeffs_);
  for (Rational& c : out) c *= scale;
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const { return *this * Rational(-1); }

std::string UniPoly::to_string(std::string_view var) const {
  std::vector<RenderTerm> terms;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) terms.push_back({{k}, coeffs_[k]});
  return render_terms(std::move(terms), {var});
}

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

BiPoly::BiPoly(std::vector<std::vector<Rational>> coeffs) {
  std::size_t max_i = 0, max_j = 0;
  bool any = false;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < coeffs[i].size(); ++j)
      if (coeffs[i][j] != 0) {
        any = true;
        max_i = std::max(max_i, i);
        max_j = std::max(max_j, j);
      }
  if (!any) return;
  coeffs_.assign(max_i + 1, std::vector<Rational>(max_j + 1));
  for (std::size_t i = 0; i <= max_i; ++i)
    for (std::size_t j = 0; j <= max_j && j < coeffs[i].size(); ++j)
      coeffs_[i][j] = std::move(coeffs[i][j]);
}

Rational BiPoly::coefficient(std::size_t i, std::size_t j) const {
  if (i >= coeffs_.size() || j >= coeffs_.front().size()) return Rational(0);
  return coeffs_[i][j];
}

BiPoly BiPoly::derivative_x() const {
  if (coeffs_.size() <= 1) return BiPoly();
  std::vector<std::vector<Rational>> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i];
    for (Rational& c : out[i - 1]) c *= Rational(i);
  }
  return BiPoly(std::move(out));
}

BiPoly BiPoly::reflect_x(std::size_t bound) const {
  if (is_zero()) return BiPoly();
  if (deg_x() > bound)
    throw std::invalid_argument("reflect_x: degree exceeds the window bound");
  std::vector<std::vector<Rational>> out(
      bound + 1, std::vector<Rational>(coeffs_.front().size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out[bound - i] = coeffs_[i];
  return BiPoly(std::move(out));
}

BiPoly BiPoly::shift_x_plus_1() const {
  if (is_zero()) return BiPoly();
  std::vector<std::vector<Rational>> out(
      coeffs_.size(), std::vector<Rational>(coeffs_.front().size()));
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t r = 0; r <= i; ++r) {
      const Rational weight(binomial(static_cast<unsigned>(i),
                                     static_cast<unsigned>(r)));
      for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
        if (coeffs_[i][j] != 0) out[r][j] += coeffs_[i][j] * weight;
    }
  return BiPoly(std::move(out));
}

TriPoly BiPoly::compose_affine_x(const UniPoly& scale,
                                 const Rational& offset) const {
  if (is_zero()) return TriPoly();
  const std::size_t nx = coeffs_.size();       // x-degree + 1
  const std::size_t nz = coeffs_.front().size();
  // Powers of the substitution pieces: scale(t)^j and offset^e.
  std::vector<UniPoly> scale_pow(nx);
  scale_pow[0] = UniPoly::constant(1);
  for (std::size_t j = 1; j < nx; ++j) scale_pow[j] = scale_pow[j - 1] * scale;
  std::vector<Rational> offset_pow(nx);
  offset_pow[0] = 1;
  for (std::size_t e = 1; e < nx; ++e) offset_pow[e] = offset_pow[e - 1] * offset;

  const std::size_t nt = scale.is_zero() ? 1 : (nx - 1) * scale.degree() + 1;
  std::vector<std::vector<std::vector<Rational>>> out(
      nt, std::vector<std::vector<Rational>>(nx, std::vector<Rational>(nz)));
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      const Rational factor =
          Rational(binomial(static_cast<unsigned>(i),
                            static_cast<unsigned>(j))) *
          offset_pow[i - j];
      if (factor == 0) continue;
      const UniPoly& tp = scale_pow[j];
      for (std::size_t td = 0; td <= tp.degree(); ++td) {
        const Rational tc = tp.coefficient(td);
        if (tc == 0) continue;
        for (std::size_t zc = 0; zc < nz; ++zc)
          if (coeffs_[i][zc] != 0)
            out[td][j][zc] += coeffs_[i][zc] * factor * tc;
      }
    }
  return TriPoly(std::move(out));
}

UniPoly BiPoly::coefficient_of_x(std::size_t k) const {
  if (k >= coeffs_.size()) return UniPoly();
  return UniPoly(coeffs_[k]);
}

UniPoly BiPoly::evaluate_x(const Rational& at) const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> out(coeffs_.front().size());
  Rational xp = 1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < out.size(); ++j)
      if (coeffs_[i][j] != 0) out[j] += coeffs_[i][j] * xp;
    xp *= at;
  }
  return UniPoly(std::move(out));
}

Rational BiPoly::evaluate(const Rational& x, const Rational& z) const {
  return evaluate_x(x).evaluate(z);
}

UniPoly BiPoly::diagonal() const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> out(deg_x() + deg_z() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
      out[i + j] += coeffs_[i][j];
  return UniPoly(std::move(out));
}

UniPoly BiPoly::integrate_x01() const {
  if (is_zero()) return UniPoly();
  std::vector<Rational> out(coeffs_.front().size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j)
      if (coeffs_[i][j] != 0) out[j] += coeffs_[i][j] / Rational(i + 1);
  return UniPoly(std::move(out));
}

std::string BiPoly::to_string(std::string_view var_x,
                              std::string_view var_z) const {
  std::vector<RenderTerm> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
      if (coeffs_[i][j] != 0) terms.push_back({{i, j}, coeffs_[i][j]});
  return render_terms(std::move(terms), {var_x, var_z});
}

// ---------------------------------------------------------------------------
// TriPoly
// ---------------------------------------------------------------------------

TriPoly::TriPoly(std::vector<std::vector<std::vector<Rational>>> coeffs) {
  std::size_t max_a = 0, max_b = 0, max_c = 0;
  bool any = false;
  for (std::size_t a = 0; a < coeffs.size(); ++a)
    for (std::size_t b = 0; b < coeffs[a].size(); ++b)
      for (std::size_t c = 0; c < coeffs[a][b].size(); ++c)
        if (coeffs[a][b][c] != 0) {
          any = true;
          max_a = std::max(max_a, a);
          max_b = std::max(max_b, b);
          max_c = std::max(max_c, c);
        }
  if (!any) return;
  coeffs_.assign(max_a + 1,
                 std::vector<std::vector<Rational>>(
                     max_b + 1, std::vector<Rational>(max_c + 1)));
  for (std::size_t a = 0; a <= max_a; ++a)
    for (std::size_t b = 0; b <= max_b && b < coeffs[a].size(); ++b)
      for (std::size_t c = 0; c <= max_c && c < coeffs[a][b].size(); ++c)
        coeffs_[a][b][c] = std::move(coeffs[a][b][c]);
}

Rational TriPoly::coefficient(std::size_t a, std::size_t b,
                              std::size_t c) const {
  if (a >= coeffs_.size() || b >= coeffs_.front().size() ||
      c >= coeffs_.front().front().size())
    return Rational(0);
  return coeffs_[a][b][c];
}

TriPoly TriPoly::times_x() const {
  if (is_zero()) return TriPoly();
  std::vector<std::vector<std::vector<Rational>>> out(coeffs_.size());
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    out[a].resize(coeffs_[a].size() + 1,
                  std::vector<Rational>(coeffs_[a].front().size()));
    for (std::size_t b = 0; b < coeffs_[a].size(); ++b)
      out[a][b + 1] = coeffs_[a][b];
  }
  return TriPoly(std::move(out));
}

TriPoly TriPoly::reflect_t(std::size_t bound) const {
  if (is_zero()) return TriPoly();
  if (deg_t() > bound)
    throw std::invalid_argument("reflect_t: degree exceeds the window bound");
  std::vector<std::vector<std::vector<Rational>>> out(
      bound + 1,
      std::vector<std::vector<Rational>>(
          coeffs_.front().size(),
          std::vector<Rational>(coeffs_.front().front().size())));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    out[bound - a] = coeffs_[a];
  return TriPoly(std::move(out));
}

BiPoly TriPoly::substitute_z_equals_t() const {
  if (is_zero()) return BiPoly();
  std::vector<std::vector<Rational>> out(
      deg_t() + deg_z() + 1, std::vector<Rational>(deg_x() + 1));
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < coeffs_[a].size(); ++b)
      for (std::size_t c = 0; c < coeffs_[a][b].size(); ++c)
        if (coeffs_[a][b][c] != 0) out[a + c][b] += coeffs_[a][b][c];
  return BiPoly(std::move(out));
}

Rational TriPoly::evaluate(const Rational& t, const Rational& x,
                           const Rational& z) const {
  Rational acc = 0;
  Rational tp = 1;
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    Rational xp = 1;
    for (std::size_t b = 0; b < coeffs_[a].size(); ++b) {
      Rational zp = 1;
      for (std::size_t c = 0; c < coeffs_[a][b].size(); ++c) {
        if (coeffs_[a][b][c] != 0) acc += coeffs_[a][b][c] * tp * xp * zp;
        zp *= z;
      }
      xp *= x;
    }
    tp *= t;
  }
  return acc;
}

std::string TriPoly::to_string(std::string_view var_t, std::string_view var_x,
                               std::string_view var_z) const {
  std::vector<RenderTerm> terms;
  for (std::size_t a = 0; a < coeffs_.size(); ++a)
    for (std::size_t b = 0; b < coeffs_[a].size(); ++b)
      for (std::size_t c = 0; c < coeffs_[a][b].size(); ++c)
        if (coeffs_[a][b][c] != 0)
          terms.push_back({{a, b, c}, coeffs_[a][b][c]});
  return render_terms(std::move(terms), {var_t, var_x, var_z});
}

// ---------------------------------------------------------------------------
// MultilinearPoly
// ---------------------------------------------------------------------------

MultilinearPoly::MultilinearPoly(unsigned var_count,
                                 std::map<Mask, Rational> terms)
    : var_count_(var_count) {
  if (var_count > kMaxComponents)
    throw std::invalid_argument("too many variables");
  const Mask full = full_mask(var_count);
  for (auto& [mask, coeff] : terms) {
    if (mask & ~full)
      throw std::invalid_argument("monomial mask outside the variable range");
    if (coeff != 0) terms_.emplace(mask, std::move(coeff));
  }
}

Rational MultilinearPoly::coefficient(Mask a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultilinearPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() < var_count_)
    throw std::invalid_argument("evaluation point has too few coordinates");
  Rational acc = 0;
  for (const auto& [mask, coeff] : terms_) {
    Rational prod = coeff;
    for (Mask rest = mask; rest;) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(rest));
      prod *= point[b];
      rest &= rest - 1;
    }
    acc += prod;
  }
  return acc;
}

Rational MultilinearPoly::evaluate_vertex(Mask a) const {
  Rational acc = 0;
  for (const auto& [mask, coeff] : terms_)
    if ((mask & ~a) == 0) acc += coeff;
  return acc;
}

MultilinearPoly MultilinearPoly::partial_derivative(unsigned component) const {
  if (component < 1 || component > var_count_)
    throw std::invalid_argument("variable index out of range");
  const Mask bit = Mask{1} << (component - 1);
  std::map<Mask, Rational> out;
  for (const auto& [mask, coeff] : terms_)
    if (mask & bit) out[mask ^ bit] += coeff;
  return MultilinearPoly(var_count_, std::move(out));
}

std::string MultilinearPoly::to_string() const {
  // Graded order with ties broken by the ascending component tuple, e.g.
  // x1*x2*x4 prints before x1*x3*x4.
  std::vector<Mask> masks;
  masks.reserve(terms_.size());
  for (const auto& [mask, coeff] : terms_) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const unsigned pa = popcount(a), pb = popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    const Mask low = (a ^ b) & -(a ^ b);
    return (a & low) != 0;
  });
  std::string out;
  bool first = true;
  for (Mask mask : masks) {
    const Rational& coeff = terms_.at(mask);
    const bool negative = coeff < 0;
    const Rational mag = negative ? Rational(-coeff) : coeff;
    std::string mono;
    for (unsigned c : components_from_mask(mask)) {
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(c);
    }
    std::string body;
    if (mono.empty())
      body = relsig::to_string(mag);
    else if (mag == 1)
      body = mono;
    else
      body = relsig::to_string(mag) + "*" + mono;
    if (first) {
      out += negative ? "-" + body : body;
      first = false;
    } else {
      out += negative ? " - " + body : " + " + body;
    }
  }
  return out.empty() ? "0" : out;
}

BiPoly identify(const MultilinearPoly& h, Mask m_set) {
  if (m_set & ~full_mask(h.var_count()))
    throw std::invalid_argument("identification set outside the variables");
  const unsigned m = popcount(m_set);
  const unsigned r = h.var_count() - m;
  std::vector<std::vector<Rational>> out(m + 1, std::vector<Rational>(r + 1));
  for (const auto& [mask, coeff] : h.terms())
    out[popcount(mask & m_set)][popcount(mask & ~m_set)] += coeff;
  return BiPoly(std::move(out));
}

UniPoly diagonal(const MultilinearPoly& h) {
  std::vector<Rational> out(h.var_count() + 1);
  for (const auto& [mask, coeff] : h.terms()) out[popcount(mask)] += coeff;
  return UniPoly(std::move(out));
}

}  // namespace relsig
