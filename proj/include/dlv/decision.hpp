#pragma once

// The decision layer: F-stable parabolic closures, the irreducibility
// verdict, and the component-count polynomial.
//
// X_I(w) is irreducible exactly when W_I w is not contained in a proper
// F-stable standard parabolic subgroup, i.e. when the union of pi-orbits
// meeting I and the support of w is all of S.  When it is not, the verdict
// carries the minimal F-stable obstruction J and the number of irreducible
// components as a polynomial in formal q: the count of F-stable type-J
// parabolics, one power q^ell(x) per F-fixed minimal coset representative
// x of W/W_J.  The component-count formula is a derived corollary of the
// fibration over the F-stable type-J flags, not a restatement of the
// verdict; records carry derived=true for it.

#include <cstdint>
#include <vector>

#include "dlv/coxeter.hpp"
#include "dlv/twist.hpp"

namespace dlv {

// Polynomial in a formal variable q with integer coefficients, ascending.
struct QPolynomial {
  std::vector<std::int64_t> coeffs;

  static QPolynomial one() { return {{1}}; }
  void add_term(int degree, std::int64_t c);
  void trim();
  bool is_one() const { return coeffs.size() == 1 && coeffs[0] == 1; }
  std::int64_t eval(std::int64_t q) const;
  std::string to_string() const;  // e.g. "1 + 2q + q^3"

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

// Orbits of the twist on S (partition, ordered by smallest member).
inline std::vector<GenSet> f_orbits(const Twist& F) { return F.orbits(); }

// The union of pi-orbits meeting I and the support of w: the smallest
// F-stable J with W_I w contained in W_J.
GenSet f_closure(GenSet I, const GroupElement& w, const Twist& F);

// The smallest F-stable J containing the whole double coset W_I w W_F(I).
// When the coset fits under the size guard this enumerates it and unions
// supports; otherwise it falls back to the closed form through the minimal
// coset representative.  force_enumeration propagates the GuardError
// instead of falling back.
GenSet remark2_closure(GenSet I, const GroupElement& w, const Twist& F,
                       bool force_enumeration = false);

// Sum of q^ell(x) over the F-fixed minimal coset representatives of W/W_J,
// J the closure of (I, w); the polynomial 1 when irreducible.
QPolynomial component_count_poly(GenSet I, const GroupElement& w,
                                 const Twist& F);

struct IrredVerdict {
  bool irreducible;
  GenSet closure;           // minimal F-stable parabolic type containing W_I w
  GenSet witness;           // = closure when reducible (the obstruction)
  QPolynomial component_poly;
};

IrredVerdict decide_irreducible(GenSet I, const GroupElement& w, const Twist& F);

}  // namespace dlv
