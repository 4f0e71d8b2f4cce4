#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dlv/coxeter.hpp"
#include "oracles.hpp"

using namespace dlv;

TEST_CASE("construction of small types") {
  auto A2 = CoxeterSystem::parse("A2");
  CHECK(A2.order() == 6);
  CHECK(A2.num_positive_roots() == 3);
  CHECK(A2.coxeter_m(1, 2) == 3);

  auto B2 = CoxeterSystem::parse("B2");
  CHECK(B2.order() == 8);
  CHECK(B2.longest_element().length() == 4);

  auto A1A1 = CoxeterSystem::parse("A1xA1");
  CHECK(A1A1.order() == 4);
  CHECK(A1A1.coxeter_m(1, 2) == 2);

  auto G2 = CoxeterSystem::parse("G2");
  CHECK(G2.order() == 12);
  CHECK(G2.num_positive_roots() == 6);

  auto D4 = CoxeterSystem::parse("D4");
  CHECK(D4.order() == 192);
  CHECK(D4.num_positive_roots() == 12);
  // Bourbaki D4: node 2 is the center
  CHECK(D4.coxeter_m(1, 2) == 3);
  CHECK(D4.coxeter_m(3, 2) == 3);
  CHECK(D4.coxeter_m(4, 2) == 3);
  CHECK(D4.coxeter_m(1, 3) == 2);

  auto F4 = CoxeterSystem::parse("F4");
  CHECK(F4.order() == 1152);
  CHECK(F4.longest_element().length() == 24);

  auto E6 = CoxeterSystem::parse("E6");
  CHECK(E6.order() == 51840);
  CHECK(E6.num_positive_roots() == 36);
}

TEST_CASE("matrix input and rejection") {
  auto W = CoxeterSystem::parse("matrix:[[1,3],[3,1]]");
  CHECK(W.order() == 6);
  CHECK(W.type_name() == "A2");

  auto B3 = CoxeterSystem::parse("matrix:[[1,3,2],[3,1,4],[2,4,1]]");
  CHECK(B3.order() == 48);
  CHECK(B3.type_name() == "B3");

  // affine A2 tilde: all bonds 3 in a triangle -> infinite
  CHECK_THROWS_WITH_AS(
      CoxeterSystem::parse("matrix:[[1,3,3],[3,1,3],[3,3,1]]"),
      doctest::Contains("sub-matrix"), std::invalid_argument);
  // H3 is finite but unsupported
  CHECK_THROWS_WITH_AS(
      CoxeterSystem::parse("matrix:[[1,5,2],[5,1,3],[2,3,1]]"),
      doctest::Contains("H3"), std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::parse("matrix:[[1,2],[3,1]]"),
                  std::invalid_argument);
  CHECK_THROWS_AS(CoxeterSystem::parse("Z5"), ParseError);
  CHECK_THROWS_AS(CoxeterSystem::parse("A9"), std::invalid_argument);

  // rank 0 degenerate group
  auto W0 = CoxeterSystem::parse("matrix:[]");
  CHECK(W0.rank() == 0);
  CHECK(W0.order() == 1);
  CHECK(W0.identity().is_identity());
}

TEST_CASE("dihedral fallback I2(m)") {
  auto W = CoxeterSystem::parse("I2(5)");
  CHECK(W.order() == 10);
  CHECK(W.num_positive_roots() == 5);
  CHECK_FALSE(W.crystallographic());
  CHECK(W.longest_element().length() == 5);
  // (st)^5 = e
  GroupElement st = W.generator(1) * W.generator(2);
  GroupElement p = W.identity();
  for (int i = 0; i < 5; ++i) p = p * st;
  CHECK(p.is_identity());
  CHECK((W.generator(1) * W.generator(1)).is_identity());

  auto I7 = CoxeterSystem::parse("matrix:[[1,7],[7,1]]");
  CHECK(I7.order() == 14);
  CHECK(oracle::enumerate_group(I7).size() == 14);
}

TEST_CASE("multiplication, inversion, length basics") {
  auto A2 = CoxeterSystem::parse("A2");
  GroupElement s1 = A2.generator(1), s2 = A2.generator(2);
  CHECK((s1 * s1).is_identity());
  CHECK(((s1 * s2) * (s2 * s1)).is_identity());
  CHECK((s1 * s2).length() == 2);
  CHECK(A2.identity().length() == 0);
  CHECK(A2.longest_element().length() == 3);

  auto B3 = CoxeterSystem::parse("B3");
  CHECK(B3.longest_element().length() == 9);
  CHECK(B3.num_positive_roots() == 9);

  auto A1 = CoxeterSystem::parse("A1");
  CHECK_THROWS_AS((void)(A2.generator(1) * A1.generator(1)),
                  std::invalid_argument);
}

TEST_CASE("type A agrees with the symmetric group model") {
  for (int n : {2, 3, 4}) {
    auto W = CoxeterSystem::parse("A" + std::to_string(n - 1));
    oracle::PermOracle sym{n};
    auto elements = oracle::enumerate_group(W);
    CHECK(elements.size() == W.order());
    std::set<oracle::PermOracle::Perm> perms;
    for (const auto& w : elements) {
      Word word = w.reduced_word();
      auto p = sym.of_word(word);
      perms.insert(p);
      CHECK(w.length() == oracle::PermOracle::inversions(p));
      CHECK(W.from_word(word) == w);
      CHECK(static_cast<int>(word.size()) == w.length());
    }
    CHECK(perms.size() == elements.size());  // faithful
  }
}

TEST_CASE("crystallographic length equals root inversion count") {
  // ell(w) is defined as the word length; the table representation counts
  // positive roots sent negative, and the normal form must agree
  for (const char* type : {"A3", "B3", "G2", "D4"}) {
    auto W = CoxeterSystem::parse(type);
    for (const auto& w : oracle::enumerate_group(W))
      CHECK(static_cast<int>(w.reduced_word().size()) == w.length());
  }
}

TEST_CASE("reduced word normal form is deterministic and minimal-lex") {
  auto A2 = CoxeterSystem::parse("A2");
  GroupElement w0 = A2.longest_element();
  CHECK(w0.reduced_word() == Word{1, 2, 1});

  auto B2 = CoxeterSystem::parse("B2");
  for (const auto& w : oracle::enumerate_group(B2)) {
    Word nf = w.reduced_word();
    CHECK(B2.from_word(nf) == w);
    auto all = oracle::all_reduced_words(B2, w);
    CHECK(*std::min_element(all.begin(), all.end()) == nf);
  }
}

TEST_CASE("support is independent of the reduced word") {
  auto B3 = CoxeterSystem::parse("B3");
  for (const auto& w : oracle::enumerate_group(B3)) {
    GenSet sup = w.support();
    for (const auto& word : oracle::all_reduced_words(B3, w)) {
      GenSet other;
      for (int s : word) other.add(s);
      CHECK(other == sup);
    }
  }
  CHECK(B3.identity().support().empty());
  CHECK(CoxeterSystem::parse("A2").longest_element().support() ==
        GenSet::of({1, 2}));
}

TEST_CASE("bruhat order matches the subword oracle exhaustively") {
  for (const char* type : {"A1", "A2", "A3", "B2", "B3", "G2", "A1xA1"}) {
    auto W = CoxeterSystem::parse(type);
    auto elements = oracle::enumerate_group(W);
    for (const auto& v : elements) {
      auto interval = oracle::subword_interval(v, W);
      for (const auto& u : elements) {
        bool expect = interval.count(u) > 0;
        CHECK(bruhat_leq(u, v) == expect);
      }
    }
  }
}

TEST_CASE("bruhat order specific values") {
  auto A2 = CoxeterSystem::parse("A2");
  GroupElement s1 = A2.generator(1), s2 = A2.generator(2);
  CHECK(bruhat_leq(s1, s2 * s1));
  CHECK_FALSE(bruhat_leq(s1, s2));
  for (const auto& v : oracle::enumerate_group(A2)) {
    CHECK(bruhat_leq(A2.identity(), v));
    CHECK(bruhat_leq(v, A2.longest_element()));
  }
}

TEST_CASE("w0 antiautomorphism and inversion properties") {
  for (const char* type : {"A3", "B3", "G2"}) {
    auto W = CoxeterSystem::parse(type);
    GroupElement w0 = W.longest_element();
    auto elements = oracle::enumerate_group(W);
    for (const auto& w : elements) {
      CHECK(w.length() + (w * w0).length() == w0.length());
      CHECK((w * w.inverse()).is_identity());
      CHECK(w.inverse().length() == w.length());
    }
    for (const auto& u : elements)
      for (const auto& v : elements)
        CHECK(bruhat_leq(u, v) == bruhat_leq(w0 * v, w0 * u));
  }
}

TEST_CASE("longest elements of parabolic subgroups") {
  auto A3 = CoxeterSystem::parse("A3");
  CHECK(A3.longest_element(GenSet{}).is_identity());
  CHECK(A3.longest_element(GenSet::of({2})) == A3.generator(2));
  GroupElement w0 = A3.longest_element(GenSet::full(3));
  CHECK(w0.length() == 6);
  CHECK((w0 * w0).is_identity());
  // w0({1,3}) = s1 s3
  CHECK(A3.longest_element(GenSet::of({1, 3})) ==
        A3.generator(1) * A3.generator(3));
}

TEST_CASE("descents match length changes") {
  auto B3 = CoxeterSystem::parse("B3");
  for (const auto& w : oracle::enumerate_group(B3))
    for (int s = 1; s <= 3; ++s) {
      CHECK(w.right_descent(s) == (w.mul_gen_right(s).length() < w.length()));
      CHECK(w.left_descent(s) == (w.mul_gen_left(s).length() < w.length()));
      CHECK(w.mul_gen_right(s) == w * B3.generator(s));
      CHECK(w.mul_gen_left(s) == B3.generator(s) * w);
    }
}

TEST_CASE("positive roots of crystallographic systems") {
  auto A2 = CoxeterSystem::parse("A2");
  std::set<std::vector<int>> roots;
  for (int i = 0; i < A2.num_positive_roots(); ++i)
    roots.insert(A2.positive_root(i));
  CHECK(roots == std::set<std::vector<int>>{{1, 0}, {0, 1}, {1, 1}});

  auto G2 = CoxeterSystem::parse("G2");
  CHECK(G2.num_positive_roots() == 6);
  for (int i = 0; i < 2; ++i) {
    std::vector<int> simple(2, 0);
    simple[i] = 1;
    CHECK(G2.positive_root(i) == simple);
  }
}
