#pragma once

// Finite Coxeter/Weyl group engine.
//
// A group is built from a Cartan type string ("A3", "B2xA1", "D4", ...) or
// an explicit Coxeter matrix ("matrix:[[1,3],[3,1]]").  Elements are stored
// by their action on the set of positive roots as a signed permutation
// table: entry i holds the signed index of the image of the i-th positive
// root.  This gives exact equality, O(N) multiplication and an O(1) read of
// descents, with N the number of positive roots.
//
// Crystallographic components enumerate their root systems by the usual
// closure of the simple roots under the simple reflections (integer
// coordinates in the simple-root basis).  Dihedral components I2(m) with
// m = 5 or m >= 7 have no crystallographic root system; their signed
// permutation tables are built directly from the rotation action on m
// abstract positive roots.
//
// Generator labels are 1-based and follow Bourbaki numbering (see README).

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "dlv/common.hpp"

namespace dlv {

// A subset of the generator set S, as a bitmask over 1-based labels.
struct GenSet {
  std::uint32_t bits = 0;

  GenSet() = default;
  explicit GenSet(std::uint32_t b) : bits(b) {}
  static GenSet full(int rank) {
    return GenSet(rank >= 32 ? ~0u : ((1u << rank) - 1));
  }
  static GenSet of(std::initializer_list<int> labels) {
    GenSet g;
    for (int s : labels) g.add(s);
    return g;
  }

  bool contains(int s) const { return bits >> (s - 1) & 1u; }
  GenSet& add(int s) {
    bits |= 1u << (s - 1);
    return *this;
  }
  bool empty() const { return bits == 0; }
  int count() const { return __builtin_popcount(bits); }
  bool subset_of(GenSet o) const { return (bits & ~o.bits) == 0; }
  std::vector<int> to_vector() const {
    std::vector<int> v;
    for (int s = 1; s <= 32; ++s)
      if (contains(s)) v.push_back(s);
    return v;
  }

  friend GenSet operator|(GenSet a, GenSet b) { return GenSet(a.bits | b.bits); }
  friend GenSet operator&(GenSet a, GenSet b) { return GenSet(a.bits & b.bits); }
  friend bool operator==(GenSet a, GenSet b) { return a.bits == b.bits; }
  friend bool operator!=(GenSet a, GenSet b) { return a.bits != b.bits; }
};

// A word in the generators, by 1-based label.
using Word = std::vector<int>;

namespace detail {
struct CoxData;
}

class GroupElement;

class CoxeterSystem {
 public:
  // Accepts "A3", "B2xA1", "I2(7)", "matrix:[[1,3],[3,1]]", "matrix:[]".
  // Rejects infinite or unknown types, naming the offending sub-matrix.
  static CoxeterSystem parse(const std::string& spec);

  int rank() const;
  // Coxeter matrix entry m(s,t), 1-based labels.
  int coxeter_m(int s, int t) const;
  // Normalized type, e.g. "A3xA1" or "I2(5)".
  const std::string& type_name() const;
  std::uint64_t order() const;  // |W|
  int num_positive_roots() const;
  // All components admit a crystallographic root system (no I2(5), I2(7),...).
  bool crystallographic() const;
  // Coordinates of the i-th positive root in the simple-root basis; empty
  // for roots of non-crystallographic dihedral components.
  const std::vector<int>& positive_root(int i) const;

  GroupElement identity() const;
  GroupElement generator(int s) const;
  GroupElement from_word(std::span<const int> word) const;
  GroupElement from_word(const Word& word) const;

  // The longest element of the standard parabolic subgroup W_I.
  GroupElement longest_element(GenSet I) const;
  GroupElement longest_element() const;

  bool same_group(const CoxeterSystem& o) const;

  const std::shared_ptr<const detail::CoxData>& data() const { return d_; }

 private:
  explicit CoxeterSystem(std::shared_ptr<const detail::CoxData> d)
      : d_(std::move(d)) {}
  std::shared_ptr<const detail::CoxData> d_;
};

class GroupElement {
 public:
  GroupElement() = default;

  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  GroupElement operator*(const GroupElement& o) const;
  GroupElement inverse() const;

  // w * s and s * w; cheaper than building a generator element.
  GroupElement mul_gen_right(int s) const;
  GroupElement mul_gen_left(int s) const;

  // ell(ws) < ell(w), resp. ell(sw) < ell(w).
  bool right_descent(int s) const;
  bool left_descent(int s) const;
  // Smallest-label descent, or 0 for the identity.
  int first_right_descent() const;
  int first_left_descent() const;

  // Normal form: recursively strip the smallest-label left descent.  The
  // result is reduced and evaluates back to the element.
  Word reduced_word() const;
  // The set of generators occurring in any reduced word.
  GenSet support() const;

  bool operator==(const GroupElement& o) const;
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  std::size_t hash() const;

  const std::shared_ptr<const detail::CoxData>& data() const { return d_; }

 private:
  friend class CoxeterSystem;
  std::shared_ptr<const detail::CoxData> d_;
  std::vector<std::int16_t> img_;  // signed 1-based positive-root images
  int len_ = 0;

  GroupElement(std::shared_ptr<const detail::CoxData> d,
               std::vector<std::int16_t> img);
  void require_same_group(const GroupElement& o) const;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& w) const { return w.hash(); }
};

// Bruhat order u <= v by the descent recursion (lifting property).
bool bruhat_leq(const GroupElement& u, const GroupElement& v);

// (length, normal-form word) lexicographic order; total on each group.
bool element_order_less(const GroupElement& a, const GroupElement& b);

}  // namespace dlv
