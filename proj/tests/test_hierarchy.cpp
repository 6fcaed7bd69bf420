#include "support.hpp"

#include <doctest.h>

using namespace varfn;
using namespace varfn::test;

TEST_CASE("profiles across the maxlen family") {
  auto a = abvc();

  HierarchyProfile p2 = profile(instantiate(a, "prefix", with_m(2)), Family::A, 6, 4);
  CHECK(p2.k_kind == HierarchyProfile::KKind::Infinite);
  CHECK(*p2.degree == Rational(0));

  HierarchyProfile g2 = profile(instantiate(a, "indexer", with_m(2)), Family::A, 6, 4);
  REQUIRE(g2.k_kind == HierarchyProfile::KKind::Finite);
  CHECK(g2.k == 2);
  CHECK(*g2.degree == Rational(1, 4));
  CHECK(g2.per_m[0].second.passed());
  CHECK(g2.per_m[1].second.passed());
  CHECK(g2.per_m[2].second.passed());
  CHECK(g2.per_m[3].second.refuted);
  CHECK(g2.per_m[3].second.cex->y == w(*a, "aaa"));

  FnParams pa;
  pa.letter = Letter::symbolic("a");
  HierarchyProfile outside = profile(instantiate(a, "empty_to_letter", pa), Family::A, 3, 2);
  CHECK(outside.k_kind == HierarchyProfile::KKind::OutsideHierarchy);
  CHECK(!outside.degree.has_value());

  // Levels beyond the quantifier bound are not meaningful.
  CHECK_THROWS_AS(profile(instantiate(a, "identity"), Family::A, 3, 5), ConfigError);
}

TEST_CASE("mean profiles: primed drops at level 1, plain at level 2") {
  auto n = num01();
  auto m = instantiate(n, "mean");

  HierarchyProfile primed = profile(m, Family::Pprime, 4, 2);
  CHECK(primed.per_m[0].second.passed());
  CHECK(primed.per_m[1].second.refuted);

  HierarchyProfile plain = profile(m, Family::P, 4, 2);
  CHECK(plain.per_m[0].second.passed());
  CHECK(plain.per_m[1].second.passed());
  CHECK(plain.per_m[2].second.refuted);
  REQUIRE(plain.k_kind == HierarchyProfile::KKind::Finite);
  CHECK(plain.k == 1);
  CHECK(*plain.degree == Rational(1, 2));
}

TEST_CASE("profiles never flip back to passed as m grows") {
  auto a = abvc();
  FnParams swap_ab;
  swap_ab.perm = {{"a", "b"}, {"b", "a"}};
  FnParams pa;
  pa.letter = Letter::symbolic("a");
  std::vector<VariadicFn> fns = {
      instantiate(a, "indexer", with_m(1)), instantiate(a, "prefix", with_m(1)),
      instantiate(a, "letterwise_perm", swap_ab), instantiate(a, "prefix_plus_prev", with_m(1)),
      instantiate(a, "empty_to_letter", pa)};
  for (const auto& fn : fns) {
    for (Family family : {Family::A, Family::Aprime, Family::P, Family::Pprime}) {
      HierarchyProfile p = profile(fn, family, 4, 3);
      bool seen_refuted = false;
      for (const auto& [m, verdict] : p.per_m) {
        if (seen_refuted) CHECK(verdict.refuted);
        seen_refuted = seen_refuted || verdict.refuted;
      }
    }
  }
}

TEST_CASE("implication-family profiles are invariant under output renaming") {
  auto a = abvc();
  auto g1 = instantiate(a, "indexer", with_m(1));

  // Injective renaming of output values into an opaque namespace.
  auto renamed = g1;
  renamed.name = "renamed";
  auto inner = g1.eval;
  renamed.eval = [inner](const Word& word) {
    OutputValue v = inner(word);
    return OutputValue::opaque("r:" + v.text());
  };

  for (Family family : {Family::P, Family::Pprime}) {
    HierarchyProfile p = profile(g1, family, 4, 3);
    HierarchyProfile q = profile(renamed, family, 4, 3);
    REQUIRE(p.per_m.size() == q.per_m.size());
    for (std::size_t i = 0; i < p.per_m.size(); ++i) {
      CHECK(p.per_m[i].second.passed() == q.per_m[i].second.passed());
    }
    CHECK(p.k_kind == q.k_kind);
  }
}

TEST_CASE("plain substitution membership implies plain implication membership per level") {
  auto a = abvc();
  FnParams fab;
  fab.word = w(*a, "ab");
  std::vector<VariadicFn> fns = {instantiate(a, "prefix", with_m(1)),
                                 instantiate(a, "indexer", with_m(1)),
                                 instantiate(a, "factor_marker", fab)};
  for (const auto& fn : fns) {
    for (int m = 0; m <= 2; ++m) {
      DomainSet d = maxlen(a, m);
      if (check_eq1(fn, d, CheckMode::Plain, 4, 4).passed()) {
        CHECK(check_eq2(fn, d, CheckMode::Plain, 4).passed());
      }
    }
  }
}

TEST_CASE("separation search over exhaustive tables") {
  auto a = ab();
  DomainSet d1 = maxlen(a, 1);
  SeparationResult r =
      separation_search(Family::A, Family::Aprime, d1, exhaustive_table_generator(a, 2, 2), 3);
  REQUIRE(r.found);
  // Verify the separation from scratch.
  CheckVerdict plain = check_eq1(*r.separator, d1, CheckMode::Plain, 3, 3);
  CheckVerdict primed = check_eq1(*r.separator, d1, CheckMode::Primed, 3, 3);
  CHECK(plain.passed() != primed.passed());
  CHECK(r.member_of == (plain.passed() ? Family::A : Family::Aprime));

  // Deterministic: the same search lands on the same candidate.
  SeparationResult again =
      separation_search(Family::A, Family::Aprime, d1, exhaustive_table_generator(a, 2, 2), 3);
  CHECK(again.candidates_tried == r.candidates_tried);
  CHECK(again.separator->name == r.separator->name);
}

TEST_CASE("separation search over explicit candidates") {
  auto n = ab01();
  DomainSet d0 = maxlen(n, 0);

  auto id = instantiate(n, "identity");
  SeparationResult none = separation_search(Family::A, Family::A, d0, explicit_generator({id}), 3);
  CHECK(!none.found);

  // The mean lies in both implication classes at level 0, so it cannot
  // separate them; the empty-word patch does.
  auto m = instantiate(n, "mean");
  FnParams pa;
  pa.letter = Letter::symbolic("a");
  auto e = instantiate(n, "empty_to_letter", pa);

  SeparationResult mean_only =
      separation_search(Family::P, Family::Pprime, d0, explicit_generator({m}), 3);
  CHECK(!mean_only.found);

  SeparationResult r =
      separation_search(Family::P, Family::Pprime, d0, explicit_generator({id, m, e}), 3);
  REQUIRE(r.found);
  CHECK(r.separator->name == e.name);
  CHECK(r.member_of == Family::P);
  CHECK(r.refuted_in == Family::Pprime);
}
