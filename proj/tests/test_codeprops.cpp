#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "ddc/codeprops.hpp"
#include "test_util.hpp"

using namespace ddc;
using testutil::make_bordered;
using testutil::make_pure;

namespace {

const std::vector<long> kS15 = {1, 3, 4, 5, 7, 12, 13};  // a coset splitting class of 15

}  // namespace

TEST_SUITE("codeprops") {
  TEST_CASE("exhaustive distance of the [30,15,8] workhorse code") {
    DdcCode code = make_pure(2, 15, kS15, 0, 0, 1);
    DistanceResult r = min_distance_exhaustive(code);
    CHECK(r.distance == 8);
    CHECK(r.distance_exact);
    CHECK(r.min_words == 450);
    CHECK(r.min_words_exact);
  }

  TEST_CASE("accelerated search equals the exhaustive oracle and counts words") {
    DdcCode code = make_pure(2, 15, kS15, 0, 0, 1);
    DistanceResult r = min_distance_accelerated(code);
    CHECK(r.distance == 8);
    CHECK(r.distance_exact);
    CHECK(r.min_words == 450);
    CHECK(r.min_words_exact);

    AcceleratedOptions no_count;
    no_count.count_min_words = false;
    DistanceResult fast = min_distance_accelerated(code, no_count);
    CHECK(fast.distance == 8);
    CHECK(fast.distance_exact);
    CHECK(!fast.min_words_exact);
  }

  TEST_CASE("pruned search reports an upper bound, never a wrong exact value") {
    DdcCode code = make_pure(2, 15, kS15, 0, 0, 1);
    AcceleratedOptions prune;
    prune.count_min_words = false;
    prune.prune_below = 8;  // true distance is not below 8: must stay exact
    DistanceResult exact = min_distance_accelerated(code, prune);
    CHECK(exact.distance == 8);
    CHECK(exact.distance_exact);

    prune.prune_below = 9;  // a weight-8 word trips the cutoff
    DistanceResult bound = min_distance_accelerated(code, prune);
    CHECK(!bound.distance_exact);
    CHECK(bound.distance >= 8);  // reported value is a real codeword weight
  }

  TEST_CASE("weight distribution: (I | I) doubles message weights") {
    DdcCode code = make_pure(2, 3, {1}, 1, 0, 0);  // D = I
    WeightDistribution wd = weight_distribution(code);
    CHECK(wd.counts == std::vector<uint64_t>{1, 0, 3, 0, 3, 0, 1});
    CHECK(wd.length == 6);
    CHECK(wd.q == 2);
  }

  TEST_CASE("extended-Hamming bordered code: distribution, MacWilliams fixed point, Type II") {
    DdcCode code = make_bordered(2, 3, {1}, 0, 1, 1, 0, 1, 1);
    WeightDistribution wd = weight_distribution(code);
    CHECK(wd.counts == std::vector<uint64_t>{1, 0, 0, 0, 14, 0, 0, 0, 1});
    WeightDistribution dual = macwilliams(wd, 4);
    CHECK(dual == wd);

    DistanceResult r = min_distance_exhaustive(code);
    CHECK(r.distance == 4);
    CHECK(r.min_words == 14);

    DualityClass dc = classify(code);
    CHECK(dc.self_dual_euclidean);
    CHECK(dc.binary_type == BinaryType::type_ii);
    REQUIRE(dc.formally_self_dual.has_value());
    CHECK(*dc.formally_self_dual);
    CHECK(!dc.self_dual_hermitian.has_value());  // not GF(4)
  }

  TEST_CASE("hexacode: Hermitian self-dual [6,3,4] over GF(4)") {
    DdcCode code = make_pure(4, 3, {1}, /*r=*/2, /*s=*/1, /*t=*/1);  // circ(w,1,1)
    DistanceResult r = min_distance_exhaustive(code);
    CHECK(r.distance == 4);
    CHECK(r.min_words == 45);
    WeightDistribution wd = weight_distribution(code);
    CHECK(wd.counts == std::vector<uint64_t>{1, 0, 0, 0, 45, 0, 18});

    DualityClass dc = classify(code);
    REQUIRE(dc.self_dual_hermitian.has_value());
    CHECK(*dc.self_dual_hermitian);
    CHECK(!dc.self_dual_euclidean);
    CHECK(dc.binary_type == BinaryType::none);
  }

  TEST_CASE("MacWilliams involution and input validation") {
    DdcCode code = make_pure(3, 5, {1, 4}, 0, 1, 2);
    WeightDistribution wd = weight_distribution(code);
    WeightDistribution dual = macwilliams(wd, 5);
    WeightDistribution back = macwilliams(dual, 5);  // dual of [10,5] is [10,5]
    CHECK(back == wd);

    WeightDistribution bad = wd;
    bad.counts[1] += 1;  // sum no longer equals q^k
    CHECK_THROWS_AS((void)macwilliams(bad, 5), std::invalid_argument);
  }

  TEST_CASE("budget guards throw instead of running forever") {
    DdcCode code = make_pure(2, 15, kS15, 0, 0, 1);
    CHECK_THROWS_AS((void)min_distance_exhaustive(code, /*budget=*/1024), BudgetExceeded);
    CHECK_THROWS_AS((void)weight_distribution(code, /*budget=*/1024), BudgetExceeded);
  }

  TEST_CASE("worker count never changes results") {
    DdcCode code = make_pure(2, 15, kS15, 1, 0, 1);
    WeightDistribution wd1 = weight_distribution(code, kDefaultBudget, 1);
    WeightDistribution wd3 = weight_distribution(code, kDefaultBudget, 3);
    CHECK(wd1 == wd3);

    AcceleratedOptions one, four;
    one.workers = 1;
    four.workers = 4;
    DistanceResult r1 = min_distance_accelerated(code, one);
    DistanceResult r4 = min_distance_accelerated(code, four);
    CHECK(r1.distance == r4.distance);
    CHECK(r1.min_words == r4.min_words);
  }

  TEST_CASE("accelerated engine matches the exhaustive oracle on random codes") {
    std::mt19937 rng(42);
    for (int i = 0; i < 25; ++i) {
      DdcCode code = testutil::random_ddc(rng);
      CAPTURE(i);
      CAPTURE(code.length());
      CAPTURE(code.circulant.field->q());
      DistanceResult ex = min_distance_exhaustive(code, uint64_t{1} << 20);
      DistanceResult ac = min_distance_accelerated(code);
      CHECK(ex.distance == ac.distance);
      CHECK(ac.distance_exact);
      CHECK(ex.min_words == ac.min_words);
      CHECK(ac.min_words_exact);
    }
  }

  TEST_CASE("analyze picks the method by budget and reports duality") {
    DdcCode code = make_pure(2, 15, kS15, 0, 0, 1);
    CodeReport small = analyze(code);
    CHECK(small.method == "exhaustive");
    CHECK(small.distance == 8);
    CHECK(small.min_words == 450);
    REQUIRE(small.duality.formally_self_dual.has_value());
    CHECK(*small.duality.formally_self_dual);
    CHECK(!small.duality.self_dual_euclidean);

    AnalyzeOptions tight;
    tight.budget = 16;  // forces the accelerated engine and skips the wd test
    CodeReport big = analyze(code, tight);
    CHECK(big.method == "accelerated");
    CHECK(big.distance == 8);
    CHECK(big.min_words == 450);
    CHECK(big.min_words_exact);
    CHECK(!big.duality.formally_self_dual.has_value());
  }

  TEST_CASE("classify invariants across a parameter sweep") {
    for (int q : {2, 3, 4, 5}) {
      for (int r = 0; r < q; ++r) {
        DdcCode code = make_pure(q, 7, {1, 2, 4}, r, 1, q - 1);
        DualityClass dc = classify(code, /*wd_budget=*/0);
        CHECK(dc.self_dual_hermitian.has_value() == (q == 4));
        if (dc.binary_type != BinaryType::none) {
          CHECK(q == 2);
          CHECK(dc.self_dual_euclidean);
        }
        CHECK(!dc.formally_self_dual.has_value());  // wd_budget = 0 skips the test
      }
    }
  }
}
