#pragma once

// Minimal K-types for K = SO(d+1) relative to an M = SO(d) type.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rankone/compact_duals.hpp"

namespace rankone {

using Rational = boost::multiprecision::cpp_rational;

// sum_{j=1}^{ceil(d/2)} (tau_j + (d+1-2j)/2)^2, exactly.
Rational lambda_tau(const HighestWeight& tau, int d);

// The explicit K-type containing both sigma and dual(sigma):
//   even d: (s_1, ..., s_{d/2-1}, |s_{d/2}|)
//   odd d:  (s_1, ..., s_{(d-1)/2}, 0)
HighestWeight construct_witness_ktype(const HighestWeight& sigma, int d);

struct WitnessReport {
  HighestWeight sigma;
  HighestWeight tau;
  Rational lambda_value;
  bool contains_sigma = false;
  bool contains_sigma_dual = false;
  bool is_minimal_over_bound = false;
  std::int64_t search_bound = 0;
};

struct MinimalKTypes {
  std::vector<HighestWeight> minimizers;  // lexicographic
  Rational min_lambda;
  std::size_t candidates_scanned = 0;
  WitnessReport witness;
};

// Default scan bound used by the CLI and the acceptance suite.
std::int64_t default_search_bound(const HighestWeight& sigma);

// Brute-force minimisation of lambda over every tau (first entry <= bound)
// that contains both sigma and dual(sigma).
// Throws Error{BoundTooSmall | EmptyCandidateSet}.
MinimalKTypes minimal_ktypes(const HighestWeight& sigma, int d, std::int64_t bound);

}  // namespace rankone
