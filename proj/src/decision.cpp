#include "dlv/decision.hpp"

#include <sstream>

#include "dlv/parabolic.hpp"

namespace dlv {

void QPolynomial::add_term(int degree, std::int64_t c) {
  if (degree >= static_cast<int>(coeffs.size())) coeffs.resize(degree + 1, 0);
  coeffs[degree] += c;
}

void QPolynomial::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  if (coeffs.empty()) coeffs.push_back(0);
}

std::int64_t QPolynomial::eval(std::int64_t q) const {
  std::int64_t v = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * q + *it;
  return v;
}

std::string QPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t d = 0; d < coeffs.size(); ++d) {
    if (coeffs[d] == 0) continue;
    if (!first) os << " + ";
    if (d == 0 || coeffs[d] != 1) os << coeffs[d];
    if (d == 1) os << "q";
    if (d > 1) os << "q^" << d;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

namespace {

GenSet orbit_closure(GenSet seed, const Twist& F) {
  GenSet out;
  for (const GenSet& orbit : F.orbits())
    if (!(orbit & seed).empty()) out = out | orbit;
  return out;
}

}  // namespace

GenSet f_closure(GenSet I, const GroupElement& w, const Twist& F) {
  return orbit_closure(I | w.support(), F);
}

GenSet remark2_closure(GenSet I, const GroupElement& w, const Twist& F,
                       bool force_enumeration) {
  GenSet FI = F.apply(I);
  if (force_enumeration) {
    GenSet sup;
    for (const GroupElement& x : double_coset_elements(I, w, FI))
      sup = sup | x.support();
    return orbit_closure(sup, F);
  }
  try {
    GenSet sup;
    for (const GroupElement& x : double_coset_elements(I, w, FI))
      sup = sup | x.support();
    return orbit_closure(sup, F);
  } catch (const GuardError&) {
    // closed form: the union of supports over W_I d W_FI is
    // I u supp(d) u F(I)
    GroupElement d = min_double_coset_rep(I, w, FI);
    return orbit_closure(I | d.support() | FI, F);
  }
}

QPolynomial component_count_poly(GenSet I, const GroupElement& w,
                                 const Twist& F) {
  const CoxeterSystem& W = F.system();
  GenSet J = f_closure(I, w, F);
  if (J == GenSet::full(W.rank())) return QPolynomial::one();
  QPolynomial poly;
  for (const GroupElement& x : min_coset_reps(W, J))
    if (F.apply(x) == x) poly.add_term(x.length(), 1);
  poly.trim();
  return poly;
}

IrredVerdict decide_irreducible(GenSet I, const GroupElement& w,
                                const Twist& F) {
  const CoxeterSystem& W = F.system();
  GenSet J = f_closure(I, w, F);
  IrredVerdict v;
  v.closure = J;
  v.irreducible = (J == GenSet::full(W.rank()));
  v.witness = v.irreducible ? GenSet{} : J;
  v.component_poly =
      v.irreducible ? QPolynomial::one() : component_count_poly(I, w, F);
  return v;
}

}  // namespace dlv
