#include <doctest.h>

#include "rankone/compact_duals.hpp"
#include "rankone/error.hpp"
#include "rankone/ktype_search.hpp"

using namespace rankone;

namespace {
HighestWeight W(int n, std::vector<std::int64_t> e) { return HighestWeight::validate(n, std::move(e)); }
Rational Q(long p, long q) { return Rational(p) / q; }

// Direct double-free evaluation of the sum with the half-integer shift written
// as (2 tau_j + d + 1 - 2j) / 2.
Rational lambda_oracle(const HighestWeight& tau, int d) {
  Rational acc = 0;
  for (int j = 1; j <= (d + 1) / 2; ++j) {
    Rational x = Rational(2 * tau[j - 1] + d + 1 - 2 * j) / 2;
    acc += x * x;
  }
  return acc;
}
}  // namespace

TEST_CASE("lambda_tau examples") {
  CHECK(lambda_tau(W(3, {0}), 2) == Q(1, 4));
  CHECK(lambda_tau(W(3, {1}), 2) == Q(9, 4));
  CHECK(lambda_tau(W(4, {0, 0}), 3) == 1);
  CHECK(lambda_tau(W(4, {1, 0}), 3) == 4);
  CHECK(lambda_tau(W(2, {0}), 1) == 0);
  CHECK(lambda_tau(W(2, {3}), 1) == 9);
  CHECK(lambda_tau(W(2, {-3}), 1) == 9);
}

TEST_CASE("lambda_tau agrees with the rational oracle and is non-negative") {
  for (int d = 1; d <= 7; ++d) {
    for (const auto& tau : enumerate_weights(d + 1, 4)) {
      CHECK(lambda_tau(tau, d) == lambda_oracle(tau, d));
      CHECK(lambda_tau(tau, d) >= 0);
    }
  }
}

TEST_CASE("witness examples") {
  CHECK(construct_witness_ktype(W(4, {2, -1}), 4) == W(5, {2, 1}));
  CHECK(construct_witness_ktype(W(3, {2}), 3) == W(4, {2, 0}));
  CHECK(construct_witness_ktype(W(1, {}), 1) == W(2, {0}));
  CHECK(construct_witness_ktype(W(2, {-3}), 2) == W(3, {3}));
}

TEST_CASE("witness contains sigma and its dual") {
  for (int d = 1; d <= 7; ++d) {
    for (const auto& sigma : enumerate_weights(d, 3)) {
      const auto tau = construct_witness_ktype(sigma, d);
      CHECK(branches_to(tau, sigma));
      CHECK(branches_to(tau, dual(sigma)));
    }
  }
}

TEST_CASE("minimal_ktypes examples") {
  auto r = minimal_ktypes(W(2, {1}), 2, 4);
  CHECK(r.minimizers == std::vector{W(3, {1})});
  CHECK(r.min_lambda == Q(9, 4));
  CHECK(r.witness.is_minimal_over_bound);
  CHECK(r.witness.lambda_value == Q(9, 4));

  r = minimal_ktypes(W(3, {1}), 3, 3);
  CHECK(std::find(r.minimizers.begin(), r.minimizers.end(), W(4, {1, 0})) != r.minimizers.end());
  CHECK(r.min_lambda == 4);
  CHECK(r.witness.contains_sigma);
  CHECK(r.witness.contains_sigma_dual);

  r = minimal_ktypes(W(2, {0}), 2, 2);
  CHECK(r.minimizers == std::vector{W(3, {0})});
  CHECK(r.min_lambda == Q(1, 4));
}

TEST_CASE("minimal_ktypes rejects too-small bounds") {
  try {
    minimal_ktypes(W(2, {3}), 2, 2);
    FAIL("expected an exception");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::BoundTooSmall || e.code() == ErrorCode::EmptyCandidateSet));
  }
}

TEST_CASE("witness attains the minimum and larger bounds never lower it") {
  for (int d = 1; d <= 6; ++d) {
    for (const auto& sigma : enumerate_weights(d, 3)) {
      const auto b = default_search_bound(sigma);
      const auto r = minimal_ktypes(sigma, d, b);
      CHECK(r.witness.is_minimal_over_bound);
      CHECK(r.witness.lambda_value == r.min_lambda);
      if (d <= 4) {
        const auto wider = minimal_ktypes(sigma, d, b + 2);
        CHECK(wider.min_lambda == r.min_lambda);
      }
    }
  }
}

TEST_CASE("lambda depends only on the first ceil(d/2) entries") {
  // For even d the weight length d/2 equals ceil(d/2), for odd d (d+1)/2 does;
  // every entry enters. Dual changes only the sign of the last entry for n = d+1
  // with 4 not dividing n, which changes lambda unless that entry is zero.
  for (int d = 1; d <= 7; ++d) {
    for (const auto& tau : enumerate_weights(d + 1, 3)) {
      CHECK(static_cast<int>(tau.rank()) == (d + 1) / 2);
      if (tau.rank() && tau.entries().back() == 0) CHECK(lambda_tau(dual(tau), d) == lambda_tau(tau, d));
    }
  }
}
