#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "oracle.hpp"
#include "prodsum/primes.hpp"
#include "prodsum/profiles.hpp"
#include "prodsum/smallest_k.hpp"

using prodsum::u64;

TEST_CASE("kmax_bound fixtures and defining inequality") {
  CHECK(prodsum::kmax_bound(2) == 2);
  CHECK(prodsum::kmax_bound(13) == 2);
  CHECK(prodsum::kmax_bound(14) == 3);
  CHECK(prodsum::kmax_bound(19) == 3);
  CHECK(prodsum::kmax_bound(97) == 6);
  CHECK(prodsum::kmax_bound(~u64{0}) == 63);

  for (u64 p : prodsum::shared_prime_table().primes_up_to(100000)) {
    unsigned kmax = prodsum::kmax_bound(p);
    if (kmax >= 3) {
      REQUIRE((u64{1} << kmax) + kmax + 3 <= p);
      unsigned log2p = 0;
      for (u64 v = p; v > 1; v >>= 1) ++log2p;
      REQUIRE(kmax <= log2p);
    }
    if (kmax < 63) REQUIRE((u64{1} << (kmax + 1)) + kmax + 4 > p);
  }
}

TEST_CASE("solver fixtures") {
  auto r97 = prodsum::smallest_k_direct(97);
  CHECK(r97.k == 4);
  CHECK(prodsum::format_witness(r97.witness) == "2^2*3*7");
  CHECK(prodsum::b_value(r97.witness) == 97);

  CHECK_FALSE(prodsum::smallest_k_direct(101).found());
  CHECK(prodsum::smallest_k_profiles(101).k == 0);

  auto r89 = prodsum::smallest_k_profiles(89);
  CHECK(r89.k == 3);
  CHECK(prodsum::format_witness(r89.witness) == "2*3*12");

  auto r19 = prodsum::smallest_k_direct(19);
  CHECK(r19.k == 3);
  CHECK(prodsum::format_witness(r19.witness) == "2^2*3");

  auto r23 = prodsum::smallest_k_profiles(23);
  CHECK(r23.k == 4);
  CHECK(prodsum::profile_pairs_string(r23.witness) == "2^4");

  for (u64 p : {2, 3, 5, 7, 13}) {
    CHECK_FALSE(prodsum::smallest_k_direct(p).found());
    CHECK_FALSE(prodsum::smallest_k_profiles(p).found());
  }
}

TEST_CASE("composite and zero arguments are rejected") {
  CHECK_THROWS_AS(prodsum::smallest_k_direct(100), prodsum::not_prime);
  CHECK_THROWS_AS(prodsum::smallest_k_direct(1), prodsum::not_prime);
  CHECK_THROWS_AS(prodsum::smallest_k_profiles(0), prodsum::not_prime);
}

TEST_CASE("the two solvers agree on k and witness for all primes below 2000") {
  for (u64 p : prodsum::shared_prime_table().primes_up_to(2000)) {
    INFO("p = " << p);
    auto direct = prodsum::smallest_k_direct(p);
    auto profiles = prodsum::smallest_k_profiles(p);
    REQUIRE(direct == profiles);
    if (direct.found()) {
      REQUIRE(direct.witness.arity() == direct.k);
      REQUIRE(prodsum::b_value(direct.witness) == p);
      REQUIRE(direct.witness.entries().front().first >= 2);
    }
  }
}

TEST_CASE("solver matches the unrestricted naive search below 500") {
  // The library searches parts >= 2 only; the oracle allows ones, so this
  // also checks that allowing ones never finds a smaller arity.
  for (u64 p : prodsum::shared_prime_table().primes_up_to(500)) {
    INFO("p = " << p);
    REQUIRE(prodsum::smallest_k_direct(p).k == oracle::naive_smallest_k(p));
  }
}

TEST_CASE("reported witness is the canonical minimum among its arity") {
  for (u64 p : prodsum::shared_prime_table().primes_up_to(600)) {
    auto result = prodsum::smallest_k_direct(p);
    if (!result.found()) continue;
    u64 n = p + result.k - 3;
    for (const auto& rep : prodsum::enumerate_representations(n, result.k, 2)) {
      auto other = prodsum::MultiplicityProfile::from_parts(rep.parts);
      INFO("p = " << p);
      REQUIRE_FALSE(prodsum::profile_less(other, result.witness));
    }
  }
}

TEST_CASE("a found arity is minimal even among representations with ones") {
  for (u64 p : prodsum::shared_prime_table().primes_up_to(2000)) {
    auto result = prodsum::smallest_k_direct(p);
    if (result.k <= 3) continue;
    for (unsigned j = 3; j < result.k; ++j) {
      INFO("p = " << p << ", j = " << j);
      REQUIRE(prodsum::count_representations(p + j - 3, j) == 0);
    }
  }
}

TEST_CASE("s_sequence matches the published first terms") {
  const std::vector<unsigned> expected = {0, 0, 0, 0, 0, 0, 0, 3, 4, 3, 0, 0, 4, 0, 3, 0,
                                          3, 3, 0, 4, 3, 3, 4, 3, 4, 0, 3, 5, 3, 4, 3};
  CHECK(prodsum::s_sequence(31) == expected);
  CHECK(prodsum::s_sequence(1) == std::vector<unsigned>{0});
}

TEST_CASE("s_sequence is independent of the thread count") {
  CHECK(prodsum::s_sequence(200, 1) == prodsum::s_sequence(200, 4));
}
