#include "dlv/parabolic.hpp"

#include <algorithm>
#include <unordered_set>

#include "dlv/coxeter_detail.hpp"

namespace dlv {

namespace {

int rank_of(const GroupElement& w) { return w.data()->rank; }

}  // namespace

std::vector<GroupElement> parabolic_elements(const CoxeterSystem& W, GenSet I) {
  std::vector<GroupElement> todo{W.identity()};
  std::unordered_set<GroupElement, GroupElementHash> seen{W.identity()};
  const std::uint64_t guard = size_guard();
  for (std::size_t i = 0; i < todo.size(); ++i) {
    for (int s : I.to_vector()) {
      GroupElement next = todo[i].mul_gen_right(s);
      if (seen.insert(next).second) {
        if (todo.size() + 1 > guard)
          throw GuardError("parabolic subgroup enumeration exceeds the size "
                           "guard; use the decision-level operations instead");
        todo.push_back(std::move(next));
      }
    }
  }
  return todo;
}

GroupElement min_double_coset_rep(GenSet I, const GroupElement& w, GenSet J) {
  // the minimum is the unique element with no left descent in I and no
  // right descent in J; greedy stripping reaches it
  GroupElement d = w;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int s : I.to_vector())
      if (d.left_descent(s)) {
        d = d.mul_gen_left(s);
        moved = true;
      }
    for (int s : J.to_vector())
      if (d.right_descent(s)) {
        d = d.mul_gen_right(s);
        moved = true;
      }
  }
  return d;
}

GenSet coset_intersection_type(GenSet I, const GroupElement& d, GenSet J) {
  GenSet K;
  GroupElement dinv = d.inverse();
  int r = rank_of(d);
  for (int t : J.to_vector()) {
    GroupElement conj = d.mul_gen_right(t) * dinv;  // d t d^{-1}
    if (conj.length() != 1) continue;
    for (int s = 1; s <= r; ++s)
      if (I.contains(s) && conj.right_descent(s)) {
        K.add(t);
        break;
      }
  }
  return K;
}

std::vector<GroupElement> double_coset_elements(GenSet I, const GroupElement& d,
                                                GenSet J) {
  // breadth-first closure under left multiplication by I and right
  // multiplication by J
  std::vector<GroupElement> todo{d};
  std::unordered_set<GroupElement, GroupElementHash> seen{d};
  const std::uint64_t guard = size_guard();
  for (std::size_t i = 0; i < todo.size(); ++i) {
    auto push = [&](GroupElement next) {
      if (seen.insert(next).second) {
        if (todo.size() + 1 > guard)
          throw GuardError("double coset enumeration exceeds the size guard; "
                           "use the decision-level operations instead");
        todo.push_back(std::move(next));
      }
    };
    for (int s : I.to_vector()) push(todo[i].mul_gen_left(s));
    for (int s : J.to_vector()) push(todo[i].mul_gen_right(s));
  }
  return todo;
}

GroupElement max_double_coset_element(GenSet I, const GroupElement& w, GenSet J) {
  GroupElement d = min_double_coset_rep(I, w, J);
  GenSet K = coset_intersection_type(I, d, J);

  // w0 of a parabolic, without a CoxeterSystem handle: greedy ascent
  auto longest = [&](GenSet L) {
    GroupElement v = d * d.inverse();  // identity of the right group
    bool moved = true;
    while (moved) {
      moved = false;
      for (int s : L.to_vector())
        if (!v.right_descent(s)) {
          v = v.mul_gen_right(s);
          moved = true;
        }
    }
    return v;
  };

  GroupElement w0I = longest(I), w0J = longest(J), w0K = longest(K);
  GroupElement v = w0I * d * w0K * w0J;
  int expect = w0I.length() + d.length() + w0J.length() - w0K.length();
  if (v.length() != expect)
    throw DefectError(
        "maximal double coset element length check failed: got " +
        std::to_string(v.length()) + ", expected " + std::to_string(expect) +
        "; the intersection type is not behaving as a standard parabolic");
  return v;
}

std::vector<GroupElement> min_coset_reps(const CoxeterSystem& W, GenSet J) {
  // W^J = elements with no right descent in J; closed under taking left
  // ascents from shorter members, so breadth-first closure stays inside it
  std::vector<GroupElement> todo{W.identity()};
  std::unordered_set<GroupElement, GroupElementHash> seen{W.identity()};
  const std::uint64_t guard = size_guard();
  for (std::size_t i = 0; i < todo.size(); ++i) {
    for (int s = 1; s <= W.rank(); ++s) {
      GroupElement next = todo[i].mul_gen_left(s);
      if (next.length() < todo[i].length()) continue;
      bool minimal = true;
      for (int t : J.to_vector())
        if (next.right_descent(t)) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      if (seen.insert(next).second) {
        if (todo.size() + 1 > guard)
          throw GuardError("coset representative enumeration exceeds the size "
                           "guard; use the decision-level operations instead");
        todo.push_back(std::move(next));
      }
    }
  }
  std::sort(todo.begin(), todo.end(), element_order_less);
  return todo;
}

}  // namespace dlv
