#include "redfib/polynomial.hpp"

#include <algorithm>
#include <complex>
#include <set>
#include <stdexcept>

#include "redfib/numtheory.hpp"

namespace redfib {

Poly::Poly(const Rational& constant) {
  if (constant != 0) m_c.push_back(constant);
}

Poly::Poly(std::vector<Rational> ascending) : m_c(std::move(ascending)) { trim(); }

Poly Poly::linear(const Rational& a0, const Rational& a1) {
  return Poly(std::vector<Rational>{a0, a1});
}

void Poly::trim() {
  while (!m_c.empty() && m_c.back() == 0) m_c.pop_back();
}

const Rational& Poly::leading() const {
  if (m_c.empty()) throw std::domain_error("Poly::leading: zero polynomial");
  return m_c.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Poly::eval_real(const Real& x) const {
  Real acc = 0;
  for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

double Poly::eval_double(double x) const {
  double acc = 0;
  for (auto it = m_c.rbegin(); it != m_c.rend(); ++it) acc = acc * x + to_double(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (m_c.size() <= 1) return Poly();
  std::vector<Rational> d(m_c.size() - 1);
  for (std::size_t k = 1; k < m_c.size(); ++k) d[k - 1] = m_c[k] * Rational(k);
  return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& other) {
  if (m_c.size() < other.m_c.size()) m_c.resize(other.m_c.size());
  for (std::size_t k = 0; k < other.m_c.size(); ++k) m_c[k] += other.m_c[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  if (m_c.size() < other.m_c.size()) m_c.resize(other.m_c.size());
  for (std::size_t k = 0; k < other.m_c.size(); ++k) m_c[k] -= other.m_c[k];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rational> prod(a.m_c.size() + b.m_c.size() - 1);
  for (std::size_t i = 0; i < a.m_c.size(); ++i) {
    if (a.m_c[i] == 0) continue;
    for (std::size_t j = 0; j < b.m_c.size(); ++j)
      if (b.m_c[j] != 0) prod[i + j] += a.m_c[i] * b.m_c[j];
  }
  return Poly(std::move(prod));
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    m_c.clear();
    return *this;
  }
  for (Rational& c : m_c) c *= s;
  return *this;
}

void Poly::divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  if (den.is_zero()) throw std::domain_error("Poly::divmod: division by zero polynomial");
  std::vector<Rational> r = num.m_c;
  const int dd = den.degree();
  std::vector<Rational> q(num.degree() >= dd ? num.degree() - dd + 1 : 0);
  for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
    if (r[k] == 0) continue;
    const Rational factor = r[k] / den.m_c.back();
    q[k - dd] = factor;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= factor * den.m_c[j];
  }
  quot = Poly(std::move(q));
  rem = Poly(std::move(r));
}

IntPoly to_integer(const Poly& p) {
  IntPoly out;
  if (p.is_zero()) return out;
  BigInt l = 1;
  for (const Rational& c : p.coeffs()) {
    const BigInt d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  out.c.reserve(p.coeffs().size());
  for (const Rational& c : p.coeffs()) out.c.push_back(numerator(c) * (l / denominator(c)));
  return out;
}

BigInt eval_scaled(const IntPoly& p, const BigInt& num, const BigInt& den) {
  if (p.c.empty()) return BigInt(0);
  BigInt acc = p.c.back();
  BigInt dpow = 1;
  for (int k = static_cast<int>(p.c.size()) - 2; k >= 0; --k) {
    dpow *= den;
    acc = acc * num + p.c[k] * dpow;
  }
  return acc;
}

int sign_at(const IntPoly& p, const Rational& x) {
  return eval_scaled(p, numerator(x), denominator(x)).sign();
}

namespace {

// Positive-scalar normalization: divide by |leading|. Multiplying a chain
// element by a positive constant never changes a sign variation count.
Poly positive_normalize(Poly p) {
  if (p.is_zero()) return p;
  Rational l = p.leading();
  if (l < 0) l = -l;
  p *= Rational(1) / l;
  return p;
}

Poly poly_gcd(Poly a, Poly b) {
  a = positive_normalize(std::move(a));
  b = positive_normalize(std::move(b));
  while (!b.is_zero()) {
    Poly q, r;
    Poly::divmod(a, b, q, r);
    a = std::move(b);
    b = positive_normalize(std::move(r));
  }
  return a;
}

Poly poly_div_exact(const Poly& num, const Poly& den) {
  Poly q, r;
  Poly::divmod(num, den, q, r);
  if (!r.is_zero()) throw std::domain_error("poly_div_exact: division was not exact");
  return q;
}

}  // namespace

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 1) return p;
  const Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return poly_div_exact(p, g);
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, int>> factors;
  if (p.degree() <= 0) return factors;
  // Yun's algorithm.
  Poly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) {
    factors.emplace_back(p, 1);
    return factors;
  }
  Poly c = poly_div_exact(p, g);
  Poly d = poly_div_exact(p.derivative(), g) - c.derivative();
  int mult = 1;
  while (c.degree() > 0) {
    Poly a = poly_gcd(c, d);
    if (a.degree() > 0) factors.emplace_back(a, mult);
    c = poly_div_exact(c, a);
    d = poly_div_exact(d, a) - c.derivative();
    ++mult;
  }
  return factors;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain;
  if (p.is_zero()) return chain;
  chain.push_back(p);
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(d);
  while (true) {
    Poly q, r;
    Poly::divmod(chain[chain.size() - 2], chain.back(), q, r);
    if (r.is_zero()) break;
    r *= Rational(-1);
    chain.push_back(positive_normalize(std::move(r)));
  }
  return chain;
}

int sign_variations_at(const std::vector<Poly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const Poly& p : chain) {
    const int s = p(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int count_roots_half_open(const std::vector<Poly>& chain, const Rational& a, const Rational& b) {
  if (!(a < b)) throw std::invalid_argument("count_roots_half_open: requires a < b");
  return sign_variations_at(chain, a) - sign_variations_at(chain, b);
}

Rational cauchy_bound(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("cauchy_bound: needs degree >= 1");
  Rational lead = p.leading();
  if (lead < 0) lead = -lead;
  Rational best = 0;
  for (int k = 0; k < p.degree(); ++k) {
    Rational a = p.coeff(k);
    if (a < 0) a = -a;
    a /= lead;
    if (a > best) best = a;
  }
  return best + 1;
}

std::vector<Rational> rational_roots(const Poly& p, std::uint64_t divisor_cap) {
  std::vector<Rational> roots;
  if (p.degree() < 1) return roots;
  IntPoly ip = to_integer(p);
  // Strip roots at zero first.
  std::size_t shift = 0;
  while (shift < ip.c.size() && ip.c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(Rational(0));
    ip.c.erase(ip.c.begin(), ip.c.begin() + shift);
  }
  if (ip.c.size() <= 1) return roots;

  BigInt a0 = ip.c.front();
  BigInt an = ip.c.back();
  if (a0 < 0) a0 = -a0;
  if (an < 0) an = -an;
  // Best effort: skip the search when the endpoints are too large to factor
  // by trial division quickly. Callers treat the result as a pre-pass only.
  const BigInt cap_bound = BigInt(divisor_cap) * BigInt(divisor_cap);
  if (a0 > cap_bound || an > cap_bound) return roots;

  const std::vector<std::uint64_t> ps = divisors(a0.convert_to<std::uint64_t>());
  const std::vector<std::uint64_t> qs = divisors(an.convert_to<std::uint64_t>());
  std::set<Rational> seen;
  for (std::uint64_t q : qs)
    for (std::uint64_t num : ps) {
      const Rational cand{BigInt(num), BigInt(q)};
      for (int s = 0; s < 2; ++s) {
        const Rational x = s == 0 ? cand : -cand;
        if (seen.count(x)) continue;
        seen.insert(x);
        if (sign_at(ip, x) == 0) roots.push_back(x);
      }
    }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<RootInterval> isolate_real_roots(const Poly& p) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  const Poly sf = squarefree_part(p);
  if (sf.degree() < 1) return out;
  const IntPoly isf = to_integer(sf);
  const std::vector<Poly> chain = sturm_chain(sf);
  const Rational bound = cauchy_bound(sf);

  struct Segment {
    Rational a, b;
    int count;
  };
  std::vector<Segment> stack;
  const int total = count_roots_half_open(chain, -bound, bound);
  if (total > 0) stack.push_back({-bound, bound, total});

  while (!stack.empty()) {
    const Segment seg = stack.back();
    stack.pop_back();
    if (seg.count == 1) {
      if (sign_at(isf, seg.b) == 0) {
        out.push_back({seg.b, seg.b, true});
      } else {
        out.push_back({seg.a, seg.b, false});
      }
      continue;
    }
    const Rational mid = (seg.a + seg.b) / 2;
    const int left = count_roots_half_open(chain, seg.a, mid);
    const int right = seg.count - left;
    if (left > 0) stack.push_back({seg.a, mid, left});
    if (right > 0) stack.push_back({mid, seg.b, right});
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) { return x.lo < y.lo; });
  return out;
}

RootInterval refine_root(const IntPoly& p, RootInterval iv, const Rational& width) {
  if (iv.exact) return iv;
  int hi_sign = sign_at(p, iv.hi);
  if (hi_sign == 0) return {iv.hi, iv.hi, true};
  while (iv.hi - iv.lo > width) {
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int s = sign_at(p, mid);
    if (s == 0) return {mid, mid, true};
    if (s == hi_sign)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
  return iv;
}

std::vector<std::pair<double, double>> all_roots_numeric(const Poly& p) {
  const int deg = p.degree();
  std::vector<std::pair<double, double>> out;
  if (deg < 1) return out;
  using C = std::complex<double>;
  std::vector<C> coeff(deg + 1);
  const double lead = to_double(p.leading());
  for (int k = 0; k <= deg; ++k) coeff[k] = C(to_double(p.coeff(k)) / lead, 0.0);

  const double radius = to_double(cauchy_bound(p));
  std::vector<C> roots(deg);
  const C seed(0.4, 0.9);
  C power(1.0, 0.0);
  for (int k = 0; k < deg; ++k) {
    power *= seed;
    roots[k] = power * radius;
  }
  const auto eval = [&](const C& z) {
    C acc(0, 0);
    for (int k = deg; k >= 0; --k) acc = acc * z + coeff[k];
    return acc;
  };
  for (int iter = 0; iter < 2000; ++iter) {
    double moved = 0.0;
    for (int k = 0; k < deg; ++k) {
      C denom(1, 0);
      for (int j = 0; j < deg; ++j)
        if (j != k) denom *= roots[k] - roots[j];
      const C delta = eval(roots[k]) / denom;
      roots[k] -= delta;
      moved = std::max(moved, std::abs(delta));
    }
    if (moved < 1e-14 * std::max(1.0, radius)) break;
  }
  out.reserve(deg);
  for (const C& r : roots) out.emplace_back(r.real(), r.imag());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace redfib
