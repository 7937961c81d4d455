#include <doctest.h>

#include "mcc/bounds.hpp"
#include "mcc/search.hpp"
#include "oracles.hpp"

using namespace mcc;

namespace {

long long witness_max(const SearchResult& r) {
  return max_mono_component(r.witness)->component.edge_count;
}

}  // namespace

TEST_CASE("search examples") {
  const auto m32 = brute_force_min_max_component(3, 2);
  CHECK(m32.value == 2);
  CHECK(witness_max(m32) == 2);

  const auto m33 = brute_force_min_max_component(3, 3);
  CHECK(m33.value == 1);
  CHECK(witness_max(m33) == 1);

  const auto m43 = brute_force_min_max_component(4, 3);
  CHECK(m43.value == 1);
  CHECK(m43.witness.is_full());
  CHECK(witness_max(m43) == 1);

  CHECK(brute_force_min_max_component(2, 3).value == 1);
  CHECK(brute_force_min_max_component(5, 1).value == 10);
}

TEST_CASE("search agrees with unpruned enumeration") {
  for (int n = 2; n <= 5; ++n) {
    for (int k = 1; k <= 3; ++k) {
      if (n == 5 && k == 3) continue;  // 3^10 colorings: covered by the acceptance run
      const auto r = brute_force_min_max_component(n, k);
      CAPTURE(n);
      CAPTURE(k);
      CHECK(r.value == oracle::min_max_component(n, k));
      CHECK(witness_max(r) == r.value);
    }
  }
}

TEST_CASE("search value and witness do not depend on jobs") {
  for (auto [n, k] : {std::pair{5, 2}, std::pair{5, 3}, std::pair{6, 2}}) {
    const auto one = brute_force_min_max_component(n, k, {1, 7, 3});
    const auto many = brute_force_min_max_component(n, k, {3, 7, 3});
    CHECK(one.value == many.value);
    CHECK(one.witness == many.witness);
  }
}

TEST_CASE("search respects the bounds") {
  for (int n = 2; n <= 6; ++n) {
    for (int k = 2; k <= 3; ++k) {
      if (n == 6 && k == 3) continue;
      const auto r = brute_force_min_max_component(n, k);
      CHECK(Rational(r.value) >= density_square_bound(n, k));
      CHECK(Rational(r.value) >= lower_bound(n, k));
    }
  }
}

TEST_CASE("search guard") {
  CHECK_THROWS_AS(brute_force_min_max_component(8, 3), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min_max_component(5, 4), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min_max_component(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_min_max_component(4, 0), std::invalid_argument);
  CHECK(brute_force_min_max_component(4, 4, {1, 7, 4}).value == 1);
}

TEST_CASE("known values table") {
  for (const auto& known : kKnownValues) {
    CHECK(known.value >= ceil(lower_bound(known.n, known.k)));
  }
}
