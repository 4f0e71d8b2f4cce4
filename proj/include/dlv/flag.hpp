#pragma once

// Brute-force flag geometry for GL_n over small finite fields.
//
// A partial flag is a chain of subspaces of F^n stored as reduced
// row-echelon bases (one canonical matrix per subspace).  The type of a
// flag is its dimension sequence; as a subset of the simple reflections of
// W(A_{n-1}), type I corresponds to the dimensions {d : s_d not in I}, so
// full flags have type I = empty.
//
// The Frobenius map raises entries to the q-th power (q the base field
// inside the working field F_{q^m}); the unitary variant composes this with
// the conjugate-orthogonal complement for the antidiagonal Hermitian form
// and reverses the dimension sequence, so applying it twice is the
// entrywise q^2 power.
//
// Relative position of two flags is the double coset of the Weyl group
// computed from the full-flag refinement: for full flags the permutation w
// with w(j) = i exactly when dim(V_i n V'_j) jumps at (i,j).

#include <optional>
#include <vector>

#include "dlv/coxeter.hpp"
#include "dlv/gf.hpp"
#include "dlv/parabolic.hpp"

namespace dlv {

// Row-major matrix over a GaloisField; rows are vectors of F^n.
struct GfMatrix {
  int rows = 0, cols = 0;
  std::vector<GaloisField::Elem> a;

  GfMatrix() = default;
  GfMatrix(int r, int c) : rows(r), cols(c), a(r * c, 0) {}
  GaloisField::Elem& at(int r, int c) { return a[r * cols + c]; }
  GaloisField::Elem at(int r, int c) const { return a[r * cols + c]; }
  static GfMatrix identity(int n);
  friend bool operator==(const GfMatrix&, const GfMatrix&) = default;
};

// In-place reduced row echelon form; returns the rank.  Zero rows are
// dropped, so the result is the canonical basis of the row space.
int rref(const GaloisField& F, GfMatrix& m);
GfMatrix stack(const GfMatrix& top, const GfMatrix& bottom);
GfMatrix matmul(const GaloisField& F, const GfMatrix& x, const GfMatrix& y);
GfMatrix matinv(const GaloisField& F, const GfMatrix& x);  // throws if singular
GfMatrix transpose(const GfMatrix& x);
// basis of {v : v . r = 0 for all rows r}
GfMatrix null_space(const GaloisField& F, const GfMatrix& m);
bool is_invertible(const GaloisField& F, GfMatrix m);

struct PartialFlag {
  std::vector<int> dims;          // strictly increasing, 1 <= d < n
  std::vector<GfMatrix> spaces;   // RREF bases, spaces[i].rows == dims[i]
  int n = 0;

  friend bool operator==(const PartialFlag&, const PartialFlag&) = default;
};

struct PartialFlagHash {
  std::size_t operator()(const PartialFlag& f) const;
};

// W(A_{n-1}) element <-> permutation of {1..n} in one-line notation, with
// s_i mapping to the adjacent transposition (i, i+1).
std::vector<int> permutation_of(const GroupElement& w, int n);
GroupElement element_of_permutation(const CoxeterSystem& Wa,
                                    const std::vector<int>& sigma);

class FlagModel {
 public:
  // GL_n flags over F_{q^m} with q = p^k; unitary composes the arithmetic
  // Frobenius with the Hermitian duality.
  FlagModel(int n, int p, int k, int m, bool unitary);

  int n() const { return n_; }
  int base_q() const { return base_q_; }
  int ext_m() const { return m_; }
  bool unitary() const { return unitary_; }
  const GaloisField& field() const { return field_; }
  const CoxeterSystem& weyl() const { return weyl_; }

  // dims {d : s_d not in I}; I must fit in rank n-1
  std::vector<int> dims_of_type(GenSet I) const;
  GenSet type_of_dims(const std::vector<int>& dims) const;
  // induced action of F on types: identity, or reversal for unitary
  GenSet twisted_type(GenSet I) const;
  int twist_gen(int s) const;  // induced permutation of S(A_{n-1})

  PartialFlag standard_flag(GenSet I) const;  // V_d = <e_1..e_d>
  PartialFlag flag_of_matrix(const GfMatrix& g, GenSet I) const;  // g . standard

  PartialFlag frobenius(const PartialFlag& f) const;
  // entrywise x -> x^{q^power}, no duality
  PartialFlag arithmetic_frobenius(const PartialFlag& f, int power) const;
  GfMatrix frobenius_matrix(const GfMatrix& g) const;  // group-level F

  std::vector<PartialFlag> enumerate_flags(GenSet I) const;
  std::vector<PartialFlag> enumerate_flags(const std::vector<int>& dims) const;

  // minimal representative of the double coset W_I x W_J indexing the
  // GL_n-orbit of the pair (types I of f1, J of f2)
  GroupElement relative_position(const PartialFlag& f1,
                                 const PartialFlag& f2) const;

  // drop the subspaces of f not in type J (J must contain f's type)
  PartialFlag truncate(const PartialFlag& f, GenSet J) const;

  // flags f of type I over F_{q^m} with (f, F(f)) in position W_I w W_F(I)
  std::vector<PartialFlag> dl_points(GenSet I, const GroupElement& w) const;

  // tuples (B_1..B_len) of full flags with consecutive positions in
  // {1, s_i} and (B_len, F(B_1)) in {1, s_len}
  std::vector<std::vector<PartialFlag>> hatX_points(const Word& seq) const;

  // the padding map between compactified tuples: repeat B_k up to position
  // indices[k], then fill with F(B_1) up to length target_len
  std::vector<PartialFlag> subsequence_map(const std::vector<PartialFlag>& tuple,
                                           const std::vector<int>& indices,
                                           int target_len) const;

  // all invertible n x n matrices over the working field (guarded)
  std::vector<GfMatrix> group_elements() const;
  // elements stabilizing the standard flag of type I
  std::vector<GfMatrix> parabolic_matrices(GenSet I) const;
  GfMatrix permutation_matrix(const GroupElement& w) const;

  // the set P_I w P_J inside GL_n(F) equals the union of Bruhat cells
  // B x B over x in W_I w W_J
  bool cell_decomposition_check(GenSet I, const GroupElement& w, GenSet J) const;

 private:
  int n_, base_q_, m_;
  bool unitary_;
  GaloisField field_;
  CoxeterSystem weyl_;
  int base_k_;

  GfMatrix reverse_conjugate(const GfMatrix& m) const;  // rows -> J(row^q)
  PartialFlag refine_to_full(const PartialFlag& f) const;
  std::vector<GfMatrix> superspaces(const GfMatrix& space, int target_dim,
                                    std::uint64_t guard) const;
};

}  // namespace dlv
