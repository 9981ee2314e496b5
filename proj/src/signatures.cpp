#include "relsig/signatures.hpp"

#include <stdexcept>

namespace relsig {

namespace {

// t^p (1-t)^q as an exact polynomial.
UniPoly beta_kernel(unsigned p, unsigned q) {
  return UniPoly::monomial(p) * UniPoly({Rational(1), Rational(-1)}).pow(q);
}

}  // namespace

Rational Subsignature::total() const {
  Rational sum = 0;
  for (const Rational& v : values) sum += v;
  return sum;
}

Subsignature samaniego_signature(const MultilinearPoly& h,
                                 SignatureSteps* steps) {
  const unsigned n = h.var_count();
  if (n == 0) throw std::invalid_argument("system has no components");
  const UniPoly h_diag = diagonal(h);
  const UniPoly g = h_diag.derivative();
  const UniPoly reflected = g.reflect(n - 1);
  const UniPoly shifted = reflected.shift_plus_1();
  Subsignature s;
  s.module_set = full_mask(n);
  s.values.reserve(n);
  for (unsigned k = 1; k <= n; ++k)
    s.values.push_back(shifted.coefficient(k - 1) /
                       Rational(Int(k) * binomial(n, k)));
  if (steps) *steps = {h_diag, g, reflected, shifted};
  return s;
}

Subsignature subsignature(const MultilinearPoly& h, Mask module_set,
                          SubsignatureSteps* steps) {
  if (module_set == 0)
    throw std::invalid_argument("module set must not be empty");
  const unsigned m = popcount(module_set);
  const BiPoly h_xz = identify(h, module_set);
  const BiPoly g = h_xz.derivative_x();
  const BiPoly reflected = g.reflect_x(m - 1);
  const BiPoly shifted = reflected.shift_x_plus_1();
  Subsignature s;
  s.module_set = module_set;
  s.values.reserve(m);
  std::vector<UniPoly> cs;
  cs.reserve(m);
  for (unsigned k = 1; k <= m; ++k) {
    UniPoly c = shifted.coefficient_of_x(k - 1);
    s.values.push_back((beta_kernel(m - k, k - 1) * c).integrate01());
    cs.push_back(std::move(c));
  }
  if (steps) *steps = {h_xz, g, reflected, shifted, std::move(cs)};
  return s;
}

Rational barlow_proschan(const MultilinearPoly& h, unsigned component) {
  return diagonal(h.partial_derivative(component)).integrate01();
}

UniPoly c_coefficient_direct(const BiPoly& g, unsigned k, unsigned m) {
  if (k < 1 || k > m) throw std::out_of_range("rank k must be in 1..m");
  if (!g.is_zero() && g.deg_x() > m - 1)
    throw std::invalid_argument("x-degree of g exceeds m-1");
  return g.reflect_x(m - 1).shift_x_plus_1().coefficient_of_x(k - 1);
}

UniPoly c_coefficient_taylor(const BiPoly& g, unsigned k, unsigned m,
                             TaylorCenter center) {
  if (k < 1 || k > m) throw std::out_of_range("rank k must be in 1..m");
  if (!g.is_zero() && g.deg_x() > m - 1)
    throw std::invalid_argument("x-degree of g exceeds m-1");
  const unsigned upper = center == TaylorCenter::at_one ? k - 1 : m - k;
  const Rational at = center == TaylorCenter::at_one ? 1 : 0;
  UniPoly acc;
  BiPoly current = g;
  Rational inv_factorial = 1;
  for (unsigned i = 0; i <= upper; ++i) {
    if (i > 0) {
      current = current.derivative_x();
      inv_factorial /= Rational(i);
    }
    const UniPoly taylor = current.evaluate_x(at) * inv_factorial;
    Rational weight;
    if (center == TaylorCenter::at_one) {
      weight = Rational(binomial(m - 1 - i, m - k));
      if (i & 1) weight = -weight;
    } else {
      weight = Rational(binomial(m - 1 - i, k - 1));
    }
    acc = acc + taylor * weight;
  }
  return acc;
}

SignatureGenFn genfunc(const MultilinearPoly& h, Mask module_set,
                       GenFnSteps* steps) {
  if (module_set == 0)
    throw std::invalid_argument("module set must not be empty");
  const unsigned m = popcount(module_set);
  const BiPoly h_xz = identify(h, module_set);
  const BiPoly g = h_xz.derivative_x();
  const BiPoly reflected = g.reflect_x(m - 1);
  // x <- (t-1)x + 1, then multiply through by x.
  const TriPoly f =
      reflected.compose_affine_x(UniPoly({Rational(-1), Rational(1)}),
                                 Rational(1))
          .times_x();
  const BiPoly collapsed = f.reflect_t(m - 1).substitute_z_equals_t();
  SignatureGenFn result;
  result.module_set = module_set;
  result.gen = collapsed.integrate_x01();
  if (steps) *steps = {h_xz, g, reflected, f};
  return result;
}

Subsignature subsignature_modular(const StructureFunction& phi,
                                  const ModuleSplit& split) {
  if (!verify_module_split(phi, split))
    throw std::invalid_argument(
        "the split does not factor the structure function");
  const unsigned m = popcount(split.module_set);
  const Subsignature module_sig =
      samaniego_signature(reliability_polynomial(split.chi));
  const MultilinearPoly h_psi = reliability_polynomial(split.psi);
  const UniPoly macro_derivative =
      diagonal(h_psi.partial_derivative(split.macro_index));
  Subsignature s;
  s.module_set = split.module_set;
  s.values.reserve(m);
  for (unsigned k = 1; k <= m; ++k) {
    // Beta(m-k+1, k) density in closed form: k*C(m,k) * t^(m-k) (1-t)^(k-1).
    const Rational mean =
        Rational(Int(k) * binomial(m, k)) *
        (beta_kernel(m - k, k - 1) * macro_derivative).integrate01();
    s.values.push_back(module_sig.values[k - 1] * mean);
  }
  return s;
}

}  // namespace relsig
