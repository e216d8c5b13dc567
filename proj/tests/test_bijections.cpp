#include "doctest.h"

#include "discloc/bijections.hpp"
#include "discloc/error.hpp"
#include "support.hpp"

using namespace discloc;

TEST_SUITE("bijections") {
  TEST_CASE("suite holds on every admissible corpus category") {
    for (const auto& name : testing::bicomplete_names()) {
      CAPTURE(name);
      auto c = testing::load(name);
      auto rep = run_bijection_suite(c);
      for (const Verdict* v : rep.verdicts()) {
        CAPTURE(v->check);
        CAPTURE(v->detail);
        CHECK(v->holds);
      }
      CHECK(rep.holds());
      auto n = rep.poset.structures.size();
      CHECK(rep.monads.size() == n);
      CHECK(rep.order_edges_checked == n * n);
    }
  }

  TEST_CASE("hypotheses are enforced") {
    CHECK_THROWS_AS(run_bijection_suite(testing::load("pointed_sets2")), HypothesisError);
  }
}
