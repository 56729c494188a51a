#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "prodsum/forms.hpp"
#include "prodsum/profiles.hpp"

using prodsum::MultiplicityProfile;
using prodsum::u64;

namespace {
MultiplicityProfile prof(std::vector<MultiplicityProfile::Entry> entries) {
  return MultiplicityProfile(std::move(entries));
}
}  // namespace

TEST_CASE("profile construction validates its entries") {
  CHECK_NOTHROW(prof({{2, 2}, {3, 1}, {7, 1}}));
  CHECK_NOTHROW(prof({}));
  CHECK_THROWS_AS(prof({{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(prof({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(prof({{3, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(prof({{2, 1}, {2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(prof({{2, 0}}), std::invalid_argument);
}

TEST_CASE("grouping parts and expanding back") {
  std::vector<u64> parts{2, 2, 3, 7};
  auto p = MultiplicityProfile::from_parts(parts);
  CHECK(p.entries() == std::vector<MultiplicityProfile::Entry>{{2, 2}, {3, 1}, {7, 1}});
  CHECK(p.arity() == 4);
  CHECK(p.max_value() == 7);
  CHECK(p.to_parts() == parts);
}

TEST_CASE("b_value fixtures") {
  CHECK(prodsum::b_value(prof({{2, 3}})) == 14);
  CHECK(prodsum::b_value(prof({{2, 2}, {3, 1}, {7, 1}})) == 97);
  CHECK(prodsum::b_value(prof({{2, 1}, {3, 3}})) == 64);
  CHECK(prodsum::b_value(prof({{2, 1}, {3, 1}, {12, 1}})) == 89);
}

TEST_CASE("b_value equals eval_form shifted by arity") {
  // B(profile) = eval(parts) - k + 3 for the expanded k-tuple.
  for (u64 n : {19, 64, 89, 97, 120, 200, 500}) {
    for (unsigned k : {3u, 4u, 5u}) {
      for (const auto& rep : prodsum::enumerate_representations(n, k, 2)) {
        auto p = MultiplicityProfile::from_parts(rep.parts);
        REQUIRE(prodsum::b_value(p) == prodsum::eval_form(rep) - k + 3);
      }
    }
  }
}

TEST_CASE("b_value overflow is reported") {
  CHECK_THROWS_AS(prodsum::b_value(prof({{2, 64}})), std::overflow_error);
  CHECK_THROWS_AS(prodsum::b_value(prof({{~u64{0}, 2}})), std::overflow_error);
}

TEST_CASE("canonical witness order") {
  auto a = prof({{2, 1}, {3, 1}, {12, 1}});  // arity 3, max 12
  auto b = prof({{2, 2}, {17, 1}});          // arity 3, max 17
  auto c = prof({{2, 4}});                   // arity 4
  CHECK(prodsum::profile_less(a, b));
  CHECK_FALSE(prodsum::profile_less(b, a));
  CHECK(prodsum::profile_less(a, c));
  CHECK(prodsum::profile_less(b, c));
  CHECK_FALSE(prodsum::profile_less(a, a));

  // equal arity and max value: entry sequences decide
  auto d = prof({{2, 1}, {5, 1}, {7, 1}});
  auto e = prof({{3, 1}, {4, 1}, {7, 1}});
  CHECK(prodsum::profile_less(d, e));
  CHECK_FALSE(prodsum::profile_less(e, d));
}

TEST_CASE("witness formatting") {
  CHECK(prodsum::format_witness(prof({{2, 2}, {3, 1}, {7, 1}})) == "2^2*3*7");
  CHECK(prodsum::format_witness(prof({{2, 3}})) == "2^3");
  CHECK(prodsum::format_witness(prof({{5, 1}})) == "5");
  CHECK(prodsum::format_witness(prof({})).empty());
}

TEST_CASE("pairs string round trip") {
  auto p = prof({{2, 2}, {3, 1}, {7, 1}});
  CHECK(prodsum::profile_pairs_string(p) == "2^2,3^1,7^1");
  CHECK(prodsum::profile_from_pairs_string("2^2,3^1,7^1") == p);
  CHECK(prodsum::profile_from_pairs_string("12^1") == prof({{12, 1}}));
}

TEST_CASE("malformed pairs strings are rejected") {
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("2*3"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("2^"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("^2"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("2^0"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("1^2"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("3^1,2^1"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("a^1"), std::invalid_argument);
  CHECK_THROWS_AS(prodsum::profile_from_pairs_string("2^1,,3^1"), std::invalid_argument);
}
