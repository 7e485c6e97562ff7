#include "doctest.h"

#include <vector>

#include "fkwalk/hfset.hpp"
#include "hfs_golden.hpp"

using namespace fkwalk;

TEST_CASE("naturals render byte-identically to the golden listings") {
  for (int k = 0; k <= 10; ++k)
    CHECK(render(von_neumann_natural(k)) == golden::kNaturals[k]);
}

TEST_CASE("cumulative power sets render byte-identically to the golden listings") {
  for (int k = 0; k <= 4; ++k)
    CHECK(render(cumulative_power_set(HFSet(), k)) == golden::kCumulativePowerSets[k]);
}

TEST_CASE("parse canonicalizes order, duplicates, and whitespace") {
  CHECK(render(parse("{{{}},{}}")) == "{{},{{}}}");
  CHECK(render(parse("{ {}, {}, { {} } }")) == "{{},{{}}}");
  CHECK(parse("{}") == HFSet());
}

TEST_CASE("parse errors carry the offending position") {
  CHECK_THROWS_AS(parse("{{}"), ParseError);
  CHECK_THROWS_AS(parse("{},{}"), ParseError);
  CHECK_THROWS_AS(parse("nope"), ParseError);
  try {
    parse("{{},x}");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("render round trips") {
  for (const char* text : {"{}", "{{}}", "{{},{{}},{{},{{}}}}", "{{{{}}}}"}) {
    const HFSet s = parse(text);
    CHECK(parse(render(s)) == s);
  }
}

TEST_CASE("membership on naturals is the strict order") {
  std::vector<HFSet> nat;
  for (int k = 0; k <= 10; ++k) nat.push_back(von_neumann_natural(k));
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n) {
      CHECK(is_member(nat[m], nat[n]) == (m < n));
      CHECK(is_subset(nat[m], nat[n]) == (m <= n));
    }
}

TEST_CASE("set algebra on naturals") {
  const HFSet three = von_neumann_natural(3), five = von_neumann_natural(5);
  CHECK(set_intersection(three, five) == three);
  CHECK(set_union(three, five) == five);
  CHECK(successor(three) == von_neumann_natural(4));
  CHECK(insert(three, three) == von_neumann_natural(4));
  CHECK(power_set(von_neumann_natural(2)).cardinality() == 4);
  CHECK(power_set(parse("{{},{{}},{{{}}}}")).cardinality() == 8);
}

TEST_CASE("peano arithmetic matches machine integers up to 16") {
  std::vector<HFSet> nat;
  for (int k = 0; k <= 16; ++k) nat.push_back(von_neumann_natural(k));
  CHECK(nat_add(nat[2], nat[3]) == nat[5]);
  CHECK(nat_mul(nat[3], nat[4]) == nat[12]);
  CHECK(nat_exp(nat[2], nat[4]) == nat[16]);
  CHECK(nat_exp(nat[0], nat[0]) == nat[1]);
  CHECK(nat_mul(nat[0], nat[7]) == nat[0]);
  CHECK_THROWS_AS(nat_add(parse("{{{}}}"), nat[1]), DomainError);
}

TEST_CASE("natural and ordinal predicates") {
  for (int k = 0; k <= 12; ++k) {
    CHECK(is_natural(von_neumann_natural(k)));
    CHECK(is_ordinal(von_neumann_natural(k)));
  }
  CHECK(!is_natural(parse("{{{}}}")));
  CHECK(!is_ordinal(parse("{{{}}}")));          // not transitive
  CHECK(!is_ordinal(parse("{{},{{}},{{{}}}}")));  // trichotomy fails
}

TEST_CASE("canonical order is a strict total order on all sets of rank <= 3") {
  const std::vector<HFSet> all = cumulative_power_set(HFSet(), 4).elements();
  REQUIRE(all.size() == 16);
  for (const HFSet& a : all)
    for (const HFSet& b : all) {
      const int ab = HFSet::compare(a, b), ba = HFSet::compare(b, a);
      CHECK(((ab < 0 && ba > 0) || (ab > 0 && ba < 0) || (ab == 0 && ba == 0)));
      CHECK((ab == 0) == (render(a) == render(b)));  // extensionality
      for (const HFSet& c : all)
        if (ab < 0 && HFSet::compare(b, c) < 0) CHECK(HFSet::compare(a, c) < 0);
    }
}

TEST_CASE("no constructed set is a member of itself") {
  const HFSet rank3 = cumulative_power_set(HFSet(), 4);
  for (const HFSet& s : rank3.elements()) CHECK(!is_member(s, s));
  const HFSet big = von_neumann_natural(12);
  CHECK(!is_member(big, big));
}

TEST_CASE("node budgets stop runaway constructions") {
  CHECK_THROWS(von_neumann_natural(17));
  CHECK_THROWS_AS(cumulative_power_set(HFSet(), 5), ResourceError);
  CHECK_THROWS_AS(nat_mul(von_neumann_natural(16), von_neumann_natural(16)), ResourceError);
}

TEST_CASE("cardinality, rank, and node counts") {
  const HFSet four = von_neumann_natural(4);
  CHECK(four.cardinality() == 4);
  CHECK(four.rank() == 4);
  CHECK(HFSet().rank() == 0);
  CHECK(HFSet().node_count() == 1);
  CHECK(parse("{{}}").node_count() == 2);
}
