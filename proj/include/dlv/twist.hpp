#pragma once

// Twists: the automorphism of (W, S) induced by a Steinberg endomorphism F.
//
// A twist is a permutation pi of S preserving the Coxeter matrix.  Graph
// twists (2A_n, 2D_n, 3D4, 2E6, factor swaps) also preserve the Cartan
// matrix; the exotic twists 2B2, 2G2, 2F4 preserve only the Coxeter matrix
// (they exchange long and short roots).  For exotic twists the formal
// variable q of the component-count polynomial denotes p^{(2m+1)/2}, so
// q^2 is an odd power of p; this is metadata only, the decision layer works
// entirely at the level of W.

#include <string>
#include <vector>

#include "dlv/coxeter.hpp"

namespace dlv {

class Twist {
 public:
  enum class Kind { Untwisted, Graph, Exotic };

  // Accepts "id", "2A<n>", "2D<n>", "3D4", "2E6", "2B2", "2G2", "2F4", and
  // products of "swap(a,b)" terms (optionally comma-separated).  Named
  // twists require the matching single-component type; swaps are validated
  // against the Coxeter matrix.
  static Twist parse(const CoxeterSystem& W, const std::string& spec);

  static Twist untwisted(const CoxeterSystem& W);

  const CoxeterSystem& system() const { return W_; }
  int apply(int s) const { return pi_[s - 1]; }
  GenSet apply(GenSet I) const;
  // The automorphism of W: apply pi letterwise to a reduced word.
  GroupElement apply(const GroupElement& w) const;

  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::Untwisted; }
  // Smallest d >= 1 with pi^d = id (F^delta is then an untwisted Frobenius).
  int delta() const { return delta_; }
  std::string q_semantics() const;
  const std::string& spec() const { return spec_; }

  // Orbits of pi on S, each as a GenSet, ordered by smallest member.
  std::vector<GenSet> orbits() const;

 private:
  Twist(CoxeterSystem W, std::vector<int> pi, std::string spec);
  CoxeterSystem W_;
  std::vector<int> pi_;  // pi_[s-1] = image of s, 1-based
  Kind kind_;
  int delta_;
  std::string spec_;
};

}  // namespace dlv
