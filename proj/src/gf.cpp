#include "dlv/gf.hpp"

#include <algorithm>

namespace dlv {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// dense polynomial over F_p, ascending coefficients, no trailing zeros
using Poly = std::vector<int>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly mul_mod_p(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  return trim(std::move(c));
}

// remainder of a by monic b
Poly rem(Poly a, const Poly& b, int p) {
  a = trim(std::move(a));
  while (a.size() >= b.size()) {
    int lead = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      int v = a[shift + i] - lead * b[i] % p;
      a[shift + i] = ((v % p) + p) % p;
    }
    a = trim(std::move(a));
  }
  return a;
}

Poly decode(int x, int p) {
  Poly a;
  while (x) {
    a.push_back(x % p);
    x /= p;
  }
  return a;
}

int encode(const Poly& a, int p) {
  int x = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) x = x * p + *it;
  return x;
}

bool is_irreducible(const Poly& f, int p) {
  int deg = static_cast<int>(f.size()) - 1;
  if (deg <= 0) return false;
  if (deg == 1) return true;
  // trial division by all monic polynomials of degree 1..deg/2
  for (int d = 1; 2 * d <= deg; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int low = 0; low < count; ++low) {
      Poly g = decode(low, p);
      g.resize(d + 1, 0);
      g[d] = 1;
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

GaloisField::GaloisField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p)) throw std::invalid_argument("GF characteristic must be prime");
  if (k < 1) throw std::invalid_argument("GF degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxSize)
      throw std::invalid_argument("GF size capped at " + std::to_string(kMaxSize));
  }
  q_ = static_cast<int>(q);

  // smallest monic irreducible of degree k
  Poly f;
  int lowcount = 1;
  for (int i = 0; i < k; ++i) lowcount *= p;
  for (int low = 0;; ++low) {
    if (low >= lowcount) throw DefectError("no irreducible polynomial found");
    f = decode(low, p);
    f.resize(k + 1, 0);
    f[k] = 1;
    if (is_irreducible(f, p)) break;
  }
  modulus_ = f;

  // find a primitive element and fill the log tables
  auto mul_raw = [&](int a, int b) {
    return encode(rem(mul_mod_p(decode(a, p), decode(b, p), p), f, p), p);
  };
  std::vector<int> prime_factors;
  int t = q_ - 1;
  for (int d = 2; d * d <= t; ++d)
    if (t % d == 0) {
      prime_factors.push_back(d);
      while (t % d == 0) t /= d;
    }
  if (t > 1) prime_factors.push_back(t);
  auto pow_raw = [&](int a, int e) {
    int r = 1;
    while (e) {
      if (e & 1) r = mul_raw(r, a);
      a = mul_raw(a, a);
      e >>= 1;
    }
    return r;
  };
  int g = 0;
  if (q_ == 2) {
    g = 1;
  } else {
    for (int cand = 2; cand < q_; ++cand) {
      bool primitive = true;
      for (int ell : prime_factors)
        if (pow_raw(cand, (q_ - 1) / ell) == 1) {
          primitive = false;
          break;
        }
      if (primitive) {
        g = cand;
        break;
      }
    }
  }
  if (g == 0) throw DefectError("no primitive element found");

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  int cur = 1;
  for (int e = 0; e < q_ - 1; ++e) {
    exp_[e] = static_cast<Elem>(cur);
    log_[cur] = e;
    cur = mul_raw(cur, g);
  }
  if (cur != 1) throw DefectError("primitive element order mismatch");

  frob_.assign(q_, 0);
  for (int x = 0; x < q_; ++x) frob_[x] = static_cast<Elem>(pow_raw(x, p));
}

GaloisField::Elem GaloisField::neg(Elem a) const {
  if (p_ == 2) return a;
  int out = 0, mult = 1, x = a;
  for (int i = 0; i < k_; ++i) {
    int digit = x % p_;
    x /= p_;
    out += ((p_ - digit) % p_) * mult;
    mult *= p_;
  }
  return static_cast<Elem>(out);
}

GaloisField::Elem GaloisField::add_digitwise(Elem a, Elem b) const {
  int out = 0, mult = 1, x = a, y = b;
  for (int i = 0; i < k_; ++i) {
    int digit = (x % p_ + y % p_) % p_;
    x /= p_;
    y /= p_;
    out += digit * mult;
    mult *= p_;
  }
  return static_cast<Elem>(out);
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? one() : zero();
  std::uint64_t le = (static_cast<std::uint64_t>(log_[a]) * (e % (q_ - 1))) %
                     (q_ - 1);
  return exp_[le];
}

}  // namespace dlv
