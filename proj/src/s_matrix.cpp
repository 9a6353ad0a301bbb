#include "sdual/s_matrix.hpp"

#include "sdual/weyl.hpp"

#include <cstdlib>
#include <mutex>
#include <stdexcept>

namespace sdual {

namespace {

std::recursive_mutex precision_mutex;

Complex mul(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Complex conj(const Complex& a) { return {a.re, -a.im}; }
Real abs2(const Complex& a) { return a.re * a.re + a.im * a.im; }

// |P / k Q^vee|^{-1/2} = (k^r det C / prod d_i)^{-1/2}
Real normalization(const RootDatum& d, int k)
{
  Rational v = d.cartan_determinant;
  for (const Rational& di : d.symmetrizer) v /= di;
  for (int i = 0; i < d.rank(); ++i) v *= k;
  return 1 / boost::multiprecision::sqrt(Real(numerator_of(v)) / Real(denominator_of(v)));
}

}  // namespace

PrecisionScope::PrecisionScope(int digits) : lock_(precision_mutex), saved_(Real::default_precision())
{
  if (digits < 10 || digits > 2000) throw std::invalid_argument("precision must be between 10 and 2000 digits");
  Real::default_precision(digits + 10);
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

int default_precision_digits()
{
  if (const char* env = std::getenv("SDUAL_PRECISION")) {
    try {
      const int v = std::stoi(env);
      if (v >= 10 && v <= 2000) return v;
    } catch (const std::exception&) {
    }
  }
  return 50;
}

SMatrix s_matrix(const RootDatum& d, int level, int digits)
{
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  if (weyl_group_order(d) > kMaxWeylGroupForSMatrix)
    throw std::invalid_argument("Weyl group of " + d.algebra.name() +
                                " is too large for the full S-matrix; use the vacuum-row product formula instead");
  PrecisionScope scope(digits);
  const int k = level + dual_coxeter(d);
  const std::int64_t period = d.form_denominator * k;  // phase = exp(-2 pi i X / period), X scaled
  const std::vector<WeylElement> W = weyl_group_elements(d, kMaxWeylGroupForSMatrix);

  const Real two_pi = 2 * acos(Real(-1));
  std::vector<Complex> roots_of_unity(period);
  for (std::int64_t j = 0; j < period; ++j) {
    const Real angle = -two_pi * j / period;
    roots_of_unity[j] = {cos(angle), sin(angle)};
  }

  SMatrix m;
  m.algebra = d.algebra;
  m.level = level;
  m.digits = digits;
  m.basis = level_weights(d, level);
  const std::size_t n = m.basis.size();

  // i^{|Delta+|}
  Complex prefactor{0, 0};
  switch (d.positive_roots.size() % 4) {
  case 0: prefactor.re = 1; break;
  case 1: prefactor.im = 1; break;
  case 2: prefactor.re = -1; break;
  default: prefactor.im = -1; break;
  }
  const Real norm = normalization(d, k);
  prefactor.re *= norm;
  prefactor.im *= norm;

  std::vector<std::vector<Labels>> images(n);
  for (std::size_t a = 0; a < n; ++a) {
    Labels x = m.basis[a].labels;
    for (int& v : x) ++v;
    for (const WeylElement& w : W) images[a].push_back(act(w, x));
  }

  m.s.assign(n, std::vector<Complex>(n, Complex{0, 0}));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      Labels y = m.basis[b].labels;
      for (int& v : y) ++v;
      std::vector<std::int64_t> count(period, 0);
      for (std::size_t e = 0; e < W.size(); ++e) {
        std::int64_t X = d.scaled_inner(images[a][e], y) % period;
        if (X < 0) X += period;
        count[X] += W[e].sign;
      }
      Complex sum{0, 0};
      for (std::int64_t j = 0; j < period; ++j)
        if (count[j]) {
          sum.re += count[j] * roots_of_unity[j].re;
          sum.im += count[j] * roots_of_unity[j].im;
        }
      m.s[a][b] = mul(prefactor, sum);
      m.s[b][a] = m.s[a][b];
    }
  return m;
}

std::vector<Real> s_matrix_vacuum_row(const RootDatum& d, int level, int digits)
{
  if (level < 1) throw std::invalid_argument("level must be >= 1");
  PrecisionScope scope(digits);
  const int k = level + dual_coxeter(d);
  const Real pi = acos(Real(-1));
  const Real norm = normalization(d, k);
  std::vector<Real> out;
  for (const Weight& w : level_weights(d, level)) {
    Labels x = w.labels;
    for (int& v : x) ++v;
    Real prod = norm;
    for (const Labels& a : d.positive_root_labels) {
      const Real angle = pi * d.scaled_inner(x, a) / (d.form_denominator * static_cast<std::int64_t>(k));
      prod *= 2 * sin(angle);
    }
    out.push_back(prod);
  }
  return out;
}

Real unitarity_residual(const SMatrix& m)
{
  PrecisionScope scope(m.digits);
  const std::size_t n = m.basis.size();
  Real worst = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Complex acc{i == j ? Real(-1) : Real(0), 0};
      for (std::size_t l = 0; l < n; ++l) {
        const Complex p = mul(m.s[i][l], conj(m.s[j][l]));
        acc.re += p.re;
        acc.im += p.im;
      }
      const Real r = sqrt(abs2(acc));
      if (r > worst) worst = r;
    }
  return worst;
}

Real symmetry_residual(const SMatrix& m)
{
  PrecisionScope scope(m.digits);
  Real worst = 0;
  for (std::size_t i = 0; i < m.basis.size(); ++i)
    for (std::size_t j = 0; j < m.basis.size(); ++j) {
      const Complex diff{m.s[i][j].re - m.s[j][i].re, m.s[i][j].im - m.s[j][i].im};
      const Real r = sqrt(abs2(diff));
      if (r > worst) worst = r;
    }
  return worst;
}

Real quantum_dimension(const SMatrix& m, int index)
{
  PrecisionScope scope(m.digits);
  const Complex& a = m.s[0][index];
  const Complex& b = m.s[0][0];
  return (a.re * b.re + a.im * b.im) / abs2(b);
}

VerlindeFusion verlinde_formula_fusion(const SMatrix& m)
{
  PrecisionScope scope(m.digits);
  const std::size_t n = m.basis.size();
  VerlindeFusion out;
  out.max_rounding_error = 0;
  out.max_imaginary_part = 0;
  out.table.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(n, 0)));
  std::vector<Complex> inv_vac(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Real den = abs2(m.s[0][a]);
    inv_vac[a] = {m.s[0][a].re / den, -m.s[0][a].im / den};
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Complex acc{0, 0};
        for (std::size_t a = 0; a < n; ++a) {
          const Complex t = mul(mul(m.s[i][a], m.s[j][a]), mul(conj(m.s[k][a]), inv_vac[a]));
          acc.re += t.re;
          acc.im += t.im;
        }
        const Real r = round(acc.re);
        const Real err = abs(acc.re - r);
        if (err > out.max_rounding_error) out.max_rounding_error = err;
        if (abs(acc.im) > out.max_imaginary_part) out.max_imaginary_part = abs(acc.im);
        out.table[i][j][k] = r.convert_to<std::int64_t>();
      }
  return out;
}

}  // namespace sdual
