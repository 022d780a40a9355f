#include "lowlying/chebyshev.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lowlying {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// Semicircle moments M_0..M_max.
std::vector<Rational> moments(long max_degree) {
  std::vector<Rational> m(static_cast<std::size_t>(max_degree + 1));
  for (long d = 0; d <= max_degree; d += 2) m[static_cast<std::size_t>(d)] = Rational(catalan(d / 2));
  return m;
}

// Depth-first walk over strictly decreasing chains k_0 > k_1 > ... > k_j >= 1
// starting at k0. The visitor receives (j, weight, k_j) where weight is
// (-1)^j prod_{i<j} C(2k_i, k_i - k_{i+1}).
void walk_chains(long k0, const std::function<void(long, const Integer&, long)>& visit) {
  std::function<void(long, long, const Integer&)> rec = [&](long depth, long k, const Integer& weight) {
    visit(depth, weight, k);
    for (long next = k - 1; next >= 1; --next) {
      Integer w = -weight * binomial(2 * k, k - next);
      rec(depth + 1, next, w);
    }
  };
  rec(0, k0, Integer(1));
}

} // namespace

ChebExpansion::ChebExpansion(std::map<long, Rational> coeffs) {
  for (auto& [j, c] : coeffs) {
    if (j < 0) throw std::invalid_argument("ChebExpansion: negative index");
    c.canonicalize();
    if (sgn(c) != 0) coeffs_.emplace(j, c);
  }
}

ChebExpansion ChebExpansion::from_poly(const ExactPoly& p) {
  std::map<long, Rational> out;
  for (long j = 0; j <= p.degree(); ++j) {
    Rational c = inner_product(p, cheb_poly(j));
    if (sgn(c) != 0) out.emplace(j, std::move(c));
  }
  return ChebExpansion(std::move(out));
}

Rational ChebExpansion::coeff(long j) const {
  auto it = coeffs_.find(j);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

ExactPoly ChebExpansion::to_poly() const {
  ExactPoly out;
  for (const auto& [j, c] : coeffs_) out += cheb_poly(j) * c;
  return out;
}

ExactPoly cheb_poly(long n) {
  require(n >= -2, "cheb_poly: n must be >= -2");
  if (n < 0) return {};
  ExactPoly prev = ExactPoly::constant(1);
  if (n == 0) return prev;
  ExactPoly cur = ExactPoly::t();
  const ExactPoly t = ExactPoly::t();
  for (long k = 1; k < n; ++k) {
    ExactPoly next = t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Rational inner_product(const ExactPoly& p, const ExactPoly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  const auto m = moments(p.degree() + q.degree());
  Rational sum = 0;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (sgn(p.coeffs()[i]) == 0) continue;
    for (std::size_t j = (i % 2); j < q.coeffs().size(); j += 2) {
      sum += p.coeffs()[i] * q.coeffs()[j] * m[i + j];
    }
  }
  return sum;
}

ChebExpansion linearize_power(long w, long r) {
  require(w >= 0 && r >= 0, "linearize_power: arguments must be non-negative");
  const ExactPoly power = cheb_poly(r).pow(static_cast<unsigned>(w));
  std::map<long, Rational> out;
  for (long j = 0; j <= r * w; ++j) {
    Rational c = inner_product(power, cheb_poly(j));
    if (sgn(c) != 0) out.emplace(j, std::move(c));
  }
  return ChebExpansion(std::move(out));
}

ExactPoly monomial_expansion(long l) {
  require(l >= 0, "monomial_expansion: l must be >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(l + 1));
  for (long u = l % 2; u <= l; u += 2) {
    Integer b = binomial((l + u) / 2, u);
    if (((l - u) / 2) % 2 != 0) b = -b;
    c[static_cast<std::size_t>(u)] = Rational(b);
  }
  return ExactPoly(std::move(c));
}

ExactPoly verify_S3(long n, long r) {
  require(n >= 1 && r >= 1, "verify_S3: n and r must be >= 1");
  ExactPoly lhs;
  for (long j = r % 2; j <= r; j += 2) lhs += cheb_poly(j * n) - cheb_poly(j * n - 2);

  const ExactPoly base = cheb_poly(n - 2);
  ExactPoly rhs;
  ExactPoly power = ExactPoly::constant(1);
  for (long j = 0; j <= r; ++j) {
    ExactPoly term = power * cheb_poly(n * (r - j));
    if (j % 2 == 0) rhs += term;
    else rhs -= term;
    power = power * base;
  }
  return lhs - rhs;
}

ExactPoly pair_chain_identity(long k0) {
  require(k0 >= 1, "pair_chain_identity: k0 must be >= 1");
  ExactPoly chain;
  walk_chains(k0, [&](long, const Integer& weight, long kj) {
    ExactPoly brace = ExactPoly::monomial(static_cast<std::size_t>(2 * kj)) -
                      ExactPoly::constant(Rational(binomial(2 * kj, kj)));
    chain += brace * Rational(weight);
  });
  return chain - (cheb_poly(2 * k0) - cheb_poly(2 * k0 - 2));
}

ExactPoly odd_identity(long K) {
  require(K >= 1, "odd_identity: K must be >= 1");
  ExactPoly inner = ExactPoly::constant(1);
  for (long k0 = 1; k0 <= K; ++k0) {
    ExactPoly diff = cheb_poly(2 * k0) - cheb_poly(2 * k0 - 2);
    if (k0 % 2 == 0) inner += diff;
    else inner -= diff;
  }
  ExactPoly rhs = ExactPoly::t() * inner;
  if (K % 2 != 0) rhs = -rhs;
  return cheb_poly(2 * K + 1) - cheb_poly(2 * K - 1) - rhs;
}

Rational vanishing_chain_sum(long k0) {
  require(k0 >= 1, "vanishing_chain_sum: k0 must be >= 1");
  Rational sum = 0;
  walk_chains(k0, [&](long, const Integer& weight, long kj) {
    sum += Rational(Integer(weight * binomial(2 * kj, kj) * kj), Integer(kj + 1));
  });
  sum.canonicalize();
  return sum;
}

Rational miller_coeff(long K, long k) {
  require(K >= 0 && k >= 0 && k <= K, "miller_coeff: need 0 <= k <= K");
  if ((K - k) % 2 != 0) return 0;
  if (K == 0) return 0;
  const auto sign = [](long e) { return e % 2 == 0 ? 1 : -1; };
  Rational out;
  if (K % 2 == 0) {
    const long half = K / 2;
    if (k == 0) return Rational(2 * sign(half));
    const long L = k / 2;
    out = Rational(Integer(Integer(2 * sign(half + L) * half) * factorial(half + L - 1)),
                   Integer(factorial(2 * L) * factorial(half - L)));
  } else {
    const long half = (K - 1) / 2;
    const long L = (k - 1) / 2;
    out = Rational(Integer(Integer(sign(half + L) * K) * factorial(half + L)),
                   Integer(factorial(2 * L + 1) * factorial(half - L)));
  }
  out.canonicalize();
  return out;
}

ExactPoly miller_identity_check(long K) {
  require(K >= 1, "miller_identity_check: K must be >= 1");
  std::vector<Rational> c(static_cast<std::size_t>(K + 1));
  for (long k = K % 2; k <= K; k += 2) c[static_cast<std::size_t>(k)] = miller_coeff(K, k);
  return ExactPoly(std::move(c)) - (cheb_poly(K) - cheb_poly(K - 2));
}

double chebyshev_value(long n, double x) {
  if (n < -2) throw std::invalid_argument("chebyshev_value: n must be >= -2");
  if (n < 0) return 0.0;
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = x;
  for (long k = 1; k < n; ++k) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

} // namespace lowlying
