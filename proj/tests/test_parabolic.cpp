#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <unordered_set>

#include "dlv/parabolic.hpp"
#include "oracles.hpp"

using namespace dlv;

namespace {

std::vector<GenSet> all_subsets(int rank) {
  std::vector<GenSet> out;
  for (std::uint32_t bits = 0; bits < (1u << rank); ++bits)
    out.push_back(GenSet{bits});
  return out;
}

}  // namespace

TEST_CASE("parabolic subgroup enumeration") {
  auto A3 = CoxeterSystem::parse("A3");
  CHECK(parabolic_elements(A3, GenSet{}).size() == 1);
  CHECK(parabolic_elements(A3, GenSet::of({1})).size() == 2);
  CHECK(parabolic_elements(A3, GenSet::of({1, 2})).size() == 6);
  CHECK(parabolic_elements(A3, GenSet::of({1, 3})).size() == 4);
  CHECK(parabolic_elements(A3, GenSet::full(3)).size() == 24);
}

TEST_CASE("minimal double coset representative") {
  auto A2 = CoxeterSystem::parse("A2");
  GroupElement w0 = A2.longest_element();

  // empty types: w itself
  for (const auto& w : oracle::enumerate_group(A2))
    CHECK(min_double_coset_rep(GenSet{}, w, GenSet{}) == w);

  // w inside W_I: identity
  CHECK(min_double_coset_rep(GenSet::of({1}), A2.generator(1), GenSet{})
            .is_identity());
  CHECK(min_double_coset_rep(GenSet::full(2), w0, GenSet::full(2))
            .is_identity());

  // I={1}, J={2}, w = w0: enumerate and take the minimum
  auto coset = double_coset_elements(GenSet::of({1}), w0, GenSet::of({2}));
  auto min_it = std::min_element(coset.begin(), coset.end(),
                                 [](const auto& a, const auto& b) {
                                   return a.length() < b.length();
                                 });
  GroupElement d = min_double_coset_rep(GenSet::of({1}), w0, GenSet::of({2}));
  CHECK(d == *min_it);
  CHECK(d == A2.generator(2) * A2.generator(1));
  CHECK(d.length() == 2);
}

TEST_CASE("double coset element sets") {
  auto A2 = CoxeterSystem::parse("A2");
  GroupElement s2 = A2.generator(2);
  auto coset =
      double_coset_elements(GenSet::of({1}), s2, GenSet::of({1}));
  std::unordered_set<GroupElement, GroupElementHash> got(coset.begin(),
                                                         coset.end());
  GroupElement s1 = A2.generator(1);
  std::unordered_set<GroupElement, GroupElementHash> want{
      s2, s1 * s2, s2 * s1, s1 * s2 * s1};
  CHECK(got == want);

  CHECK(double_coset_elements(GenSet{}, s2, GenSet{}).size() == 1);
  CHECK(double_coset_elements(GenSet::full(2), s2, GenSet::full(2)).size() ==
        6);
}

TEST_CASE("double cosets partition the group") {
  for (const char* type : {"A3", "B3", "B2", "G2"}) {
    auto W = CoxeterSystem::parse(type);
    for (GenSet I : all_subsets(W.rank()))
      for (GenSet J : all_subsets(W.rank())) {
        std::unordered_set<GroupElement, GroupElementHash> reps;
        std::size_t total = 0;
        for (const auto& w : oracle::enumerate_group(W)) {
          GroupElement d = min_double_coset_rep(I, w, J);
          if (reps.insert(d).second)
            total += double_coset_elements(I, d, J).size();
        }
        CHECK(total == W.order());
      }
  }
}

TEST_CASE("maximal double coset element: closed form vs enumeration") {
  auto A2 = CoxeterSystem::parse("A2");
  GroupElement s2 = A2.generator(2);
  GroupElement v = max_double_coset_element(GenSet::of({1}), s2, GenSet::of({1}));
  CHECK(v == A2.generator(1) * s2 * A2.generator(1));

  for (const auto& w : oracle::enumerate_group(A2)) {
    CHECK(max_double_coset_element(GenSet{}, w, GenSet{}) == w);
    CHECK(max_double_coset_element(GenSet::full(2), w, GenSet::full(2)) ==
          A2.longest_element());
  }

  for (const char* type : {"A2", "B2", "A3", "B3", "G2"}) {
    auto W = CoxeterSystem::parse(type);
    auto elements = oracle::enumerate_group(W);
    for (GenSet I : all_subsets(W.rank()))
      for (GenSet J : all_subsets(W.rank()))
        for (const auto& w : elements) {
          GroupElement v2 = max_double_coset_element(I, w, J);
          auto coset = double_coset_elements(I, w, J);
          int max_len = 0;
          for (const auto& x : coset) max_len = std::max(max_len, x.length());
          CHECK(v2.length() == max_len);
          CHECK(std::find(coset.begin(), coset.end(), v2) != coset.end());
        }
  }
}

TEST_CASE("length identity for the maximal element") {
  auto B3 = CoxeterSystem::parse("B3");
  for (GenSet I : all_subsets(3))
    for (GenSet J : all_subsets(3))
      for (const auto& w : oracle::enumerate_group(B3)) {
        GroupElement d = min_double_coset_rep(I, w, J);
        GenSet K = coset_intersection_type(I, d, J);
        GroupElement v = max_double_coset_element(I, w, J);
        CHECK(v.length() == B3.longest_element(I).length() + d.length() +
                                B3.longest_element(J).length() -
                                B3.longest_element(K).length());
      }
}

TEST_CASE("minimal coset representatives") {
  auto A2 = CoxeterSystem::parse("A2");
  auto reps = min_coset_reps(A2, GenSet::of({1}));
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].length() == 0);
  CHECK(reps[1].length() == 1);
  CHECK(reps[2].length() == 2);

  CHECK(min_coset_reps(A2, GenSet::full(2)).size() == 1);
  CHECK(min_coset_reps(A2, GenSet{}).size() == 6);

  for (const char* type : {"A3", "B3", "G2", "A1xA1"}) {
    auto W = CoxeterSystem::parse(type);
    for (GenSet J : all_subsets(W.rank())) {
      auto r = min_coset_reps(W, J);
      // |W^J| * |W_J| = |W|
      CHECK(r.size() * parabolic_elements(W, J).size() == W.order());
      // each rep is the unique minimum of its coset
      std::unordered_set<GroupElement, GroupElementHash> rep_set(r.begin(),
                                                                 r.end());
      CHECK(rep_set.size() == r.size());
      for (const auto& x : r)
        for (const auto& b : parabolic_elements(W, J))
          if (!b.is_identity()) CHECK((x * b).length() > x.length());
      // sorted by (length, word)
      CHECK(std::is_sorted(r.begin(), r.end(), element_order_less));
    }
  }
}

TEST_CASE("size guard rejects huge enumerations") {
  auto E7 = CoxeterSystem::parse("E7");
  CHECK_THROWS_AS((void)min_coset_reps(E7, GenSet{}), GuardError);
  // decision-scale operations still work on E7
  GroupElement w0 = E7.longest_element();
  CHECK(w0.length() == 63);
  GenSet E6sub = GenSet::of({1, 2, 3, 4, 5, 6});
  CHECK(min_coset_reps(E7, E6sub).size() == 2903040 / 51840);
}
