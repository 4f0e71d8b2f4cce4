#pragma once

// Standard parabolic subgroups W_I and double cosets W_I \ W / W_J:
// minimal and maximal representatives, enumeration, and the minimal coset
// representatives W^J of W / W_J.
//
// All enumerating operations take a hard size guard (see common.hpp); the
// representative computations are closed-form and never enumerate.

#include <vector>

#include "dlv/coxeter.hpp"

namespace dlv {

// Elements of the standard parabolic subgroup W_I, by breadth-first closure.
std::vector<GroupElement> parabolic_elements(const CoxeterSystem& W, GenSet I);

// The unique minimal-length element of W_I w W_J.
GroupElement min_double_coset_rep(GenSet I, const GroupElement& w, GenSet J);

// K = J of d^{-1} I d: the subset {t in J : d t d^{-1} in I}.  For d the
// minimal double-coset representative, W_K = d^{-1} W_I d intersected with
// W_J (Kilmoyer), which the maximal-element formula relies on.
GenSet coset_intersection_type(GenSet I, const GroupElement& d, GenSet J);

// Exact element set of W_I d W_J (d need not be minimal).
std::vector<GroupElement> double_coset_elements(GenSet I, const GroupElement& d,
                                                GenSet J);

// The unique maximal-length element v of W_I w W_J, via the closed form
// v = w0(I) d w0(K) w0(J) with d minimal and K as above.  The length
// identity ell(v) = ell(w0 I) + ell(d) + ell(w0 J) - ell(w0 K) is checked
// and a DefectError raised if it fails.
GroupElement max_double_coset_element(GenSet I, const GroupElement& w, GenSet J);

// Minimal-length representatives of W / W_J, each the unique minimum of its
// coset; sorted by (length, normal-form word).
std::vector<GroupElement> min_coset_reps(const CoxeterSystem& W, GenSet J);

}  // namespace dlv
