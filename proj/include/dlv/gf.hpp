#pragma once

// Small finite fields F_{p^k}, p^k <= 4096, for the brute-force flag model.
//
// Elements are indices 0..p^k-1 encoding polynomial coefficient vectors in
// base p over F_p[x]/(f), f the lexicographically smallest monic
// irreducible of degree k.  Multiplication and inversion run through
// discrete-log tables for a fixed primitive element; addition is digitwise
// (an xor when p = 2).

#include <cstdint>
#include <vector>

#include "dlv/common.hpp"

namespace dlv {

class GaloisField {
 public:
  using Elem = std::uint16_t;
  static constexpr int kMaxSize = 4096;

  GaloisField(int p, int k);

  int p() const { return p_; }
  int degree() const { return k_; }
  int size() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const {
    if (p_ == 2) return a ^ b;
    return add_digitwise(a, b);
  }
  Elem neg(Elem a) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::invalid_argument("division by zero in GF");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  Elem pow(Elem a, std::uint64_t e) const;
  // x -> x^p
  Elem frobenius(Elem a) const { return frob_[a]; }
  Elem frobenius_iter(Elem a, int times) const {
    for (int i = 0; i < times; ++i) a = frob_[a];
    return a;
  }

  // coefficients of the modulus polynomial, ascending, length k+1
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  Elem add_digitwise(Elem a, Elem b) const;
  int p_, k_, q_;
  std::vector<int> modulus_;
  std::vector<Elem> exp_, frob_;
  std::vector<int> log_;
};

}  // namespace dlv
