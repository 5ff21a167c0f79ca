#include "rankone/ktype_search.hpp"

#include <algorithm>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

namespace {

void require_m_type(const HighestWeight& sigma, int d) {
  if (d < 1 || sigma.n() != d) {
    std::ostringstream os;
    os << "expected an SO(" << d << ") weight, got " << sigma.to_string();
    throw Error(ErrorCode::GroupMismatch, os.str());
  }
}

}  // namespace

Rational lambda_tau(const HighestWeight& tau, int d) {
  if (tau.n() != d + 1) {
    std::ostringstream os;
    os << "expected an SO(" << d + 1 << ") weight, got " << tau.to_string();
    throw Error(ErrorCode::GroupMismatch, os.str());
  }
  const std::size_t terms = static_cast<std::size_t>((d + 1) / 2);
  BigInt four_lambda = 0;
  for (std::size_t j = 1; j <= terms; ++j) {
    const BigInt twice = BigInt(2 * tau[j - 1]) + (d + 1 - 2 * static_cast<int>(j));
    four_lambda += twice * twice;
  }
  return Rational(four_lambda, BigInt(4));
}

HighestWeight construct_witness_ktype(const HighestWeight& sigma, int d) {
  require_m_type(sigma, d);
  std::vector<std::int64_t> e = sigma.entries();
  if (d % 2 == 0) {
    e.back() = e.back() < 0 ? -e.back() : e.back();
  } else {
    e.push_back(0);
  }
  return HighestWeight::validate(d + 1, std::move(e));
}

std::int64_t default_search_bound(const HighestWeight& sigma) {
  std::int64_t top = 0;
  for (auto v : sigma.entries()) top = std::max(top, v < 0 ? -v : v);
  return top + 3;
}

MinimalKTypes minimal_ktypes(const HighestWeight& sigma, int d, std::int64_t bound) {
  require_m_type(sigma, d);
  const HighestWeight sigma_dual = dual(sigma);
  const auto candidates = enumerate_ktypes_containing(sigma, bound);

  MinimalKTypes out{.minimizers = {},
                    .min_lambda = 0,
                    .candidates_scanned = 0,
                    .witness = WitnessReport{sigma, construct_witness_ktype(sigma, d), 0}};
  bool have_min = false;
  for (const auto& tau : candidates) {
    if (!branches_to(tau, sigma_dual)) continue;
    ++out.candidates_scanned;
    Rational lam = lambda_tau(tau, d);
    if (!have_min || lam < out.min_lambda) {
      out.min_lambda = lam;
      out.minimizers.clear();
      have_min = true;
    }
    if (lam == out.min_lambda) out.minimizers.push_back(tau);
  }
  if (!have_min) {
    std::ostringstream os;
    os << "no K-type with first entry <= " << bound << " contains " << sigma.to_string()
       << " and its dual";
    throw Error(ErrorCode::EmptyCandidateSet, os.str());
  }

  WitnessReport& w = out.witness;
  w.lambda_value = lambda_tau(w.tau, d);
  w.contains_sigma = branches_to(w.tau, sigma);
  w.contains_sigma_dual = branches_to(w.tau, sigma_dual);
  w.is_minimal_over_bound = (w.lambda_value == out.min_lambda);
  w.search_bound = bound;
  return out;
}

}  // namespace rankone
