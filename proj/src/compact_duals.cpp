#include "rankone/compact_duals.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "rankone/error.hpp"

namespace rankone {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::WrongLength: return "wrong_length";
    case ErrorCode::OrderingViolation: return "ordering_violation";
    case ErrorCode::GroupMismatch: return "group_mismatch";
    case ErrorCode::NotContained: return "not_contained";
    case ErrorCode::BoundTooSmall: return "bound_too_small";
    case ErrorCode::EmptyCandidateSet: return "empty_candidate_set";
    case ErrorCode::DomainError: return "domain_error";
    case ErrorCode::PoleEncountered: return "pole_encountered";
    case ErrorCode::Overflow: return "overflow";
    case ErrorCode::SingularPoint: return "singular_point";
    case ErrorCode::SupportOutsideInterval: return "support_outside_interval";
    case ErrorCode::GridHitsAtom: return "grid_hits_atom";
    case ErrorCode::InvalidModel: return "invalid_model";
    case ErrorCode::ParseError: return "parse_error";
  }
  return "unknown";
}

namespace {

std::int64_t iabs(std::int64_t v) { return v < 0 ? -v : v; }

struct Range {
  std::int64_t lo;
  std::int64_t hi;
};

// Cartesian product of integer ranges, emitted in lexicographic order.
template <class Emit>
void for_each_tuple(const std::vector<Range>& ranges, Emit&& emit) {
  for (const Range& r : ranges)
    if (r.lo > r.hi) return;
  std::vector<std::int64_t> cur(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) cur[i] = ranges[i].lo;
  while (true) {
    emit(cur);
    std::size_t k = ranges.size();
    while (k > 0) {
      --k;
      if (cur[k] < ranges[k].hi) {
        ++cur[k];
        for (std::size_t j = k + 1; j < ranges.size(); ++j) cur[j] = ranges[j].lo;
        break;
      }
      if (k == 0) return;
    }
    if (ranges.empty()) return;
  }
}

}  // namespace

bool is_valid_weight(int n, const std::vector<std::int64_t>& e) noexcept {
  if (n < 1) return false;
  const std::size_t m = static_cast<std::size_t>(n / 2);
  if (e.size() != m) return false;
  if (m == 0) return true;
  if (n % 2 == 1) {
    for (std::size_t i = 0; i + 1 < m; ++i)
      if (e[i] < e[i + 1]) return false;
    return e[m - 1] >= 0;
  }
  if (m == 1) return true;
  for (std::size_t i = 0; i + 2 < m; ++i)
    if (e[i] < e[i + 1]) return false;
  return e[m - 2] >= iabs(e[m - 1]);
}

HighestWeight HighestWeight::validate(int n, std::vector<std::int64_t> entries) {
  if (n < 1) throw Error(ErrorCode::DomainError, "SO(n) requires n >= 1");
  const std::size_t m = static_cast<std::size_t>(n / 2);
  if (entries.size() != m) {
    std::ostringstream os;
    os << "SO(" << n << ") weights have " << m << " entries, got " << entries.size();
    throw Error(ErrorCode::WrongLength, os.str());
  }
  if (!is_valid_weight(n, entries)) {
    std::ostringstream os;
    os << "entries violate the SO(" << n << ") dominance ordering";
    throw Error(ErrorCode::OrderingViolation, os.str());
  }
  return HighestWeight(n, std::move(entries));
}

HighestWeight HighestWeight::trivial(int n) {
  return validate(n, std::vector<std::int64_t>(static_cast<std::size_t>(std::max(n, 0) / 2), 0));
}

bool HighestWeight::is_trivial() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v == 0; });
}

std::string HighestWeight::to_string() const {
  std::ostringstream os;
  os << "SO(" << n_ << ")(";
  for (std::size_t i = 0; i < entries_.size(); ++i) os << (i ? "," : "") << entries_[i];
  os << ")";
  return os.str();
}

HighestWeight dual(const HighestWeight& w) {
  if (w.n() % 2 == 1 || w.n() % 4 == 0) return w;
  auto e = w.entries();
  e.back() = -e.back();
  return HighestWeight::validate(w.n(), std::move(e));
}

bool is_self_dual(const HighestWeight& w) { return dual(w) == w; }

bool branches_to(const HighestWeight& tau, const HighestWeight& sigma) {
  if (tau.n() < 2 || sigma.n() != tau.n() - 1) {
    std::ostringstream os;
    os << "cannot restrict " << tau.to_string() << " to " << sigma.to_string();
    throw Error(ErrorCode::GroupMismatch, os.str());
  }
  const auto& t = tau.entries();
  const auto& s = sigma.entries();
  const std::size_t m = t.size();
  if (tau.n() % 2 == 0) {
    // t_1 >= s_1 >= t_2 >= ... >= t_{m-1} >= s_{m-1} >= |t_m|
    for (std::size_t j = 0; j + 1 < m; ++j) {
      if (t[j] < s[j]) return false;
      const std::int64_t next = (j + 2 < m) ? t[j + 1] : iabs(t[m - 1]);
      if (s[j] < next) return false;
    }
    return true;
  }
  // t_1 >= s_1 >= ... >= s_{m-1} >= t_m >= |s_m|
  for (std::size_t j = 0; j < m; ++j) {
    if (j + 1 < m) {
      if (t[j] < s[j] || s[j] < t[j + 1]) return false;
    } else if (t[j] < iabs(s[j])) {
      return false;
    }
  }
  return true;
}

std::vector<HighestWeight> branching_set(const HighestWeight& tau) {
  if (tau.n() < 2) throw Error(ErrorCode::DomainError, "branching requires n >= 2");
  const auto& t = tau.entries();
  const std::size_t m = t.size();
  std::vector<Range> ranges;
  if (tau.n() % 2 == 0) {
    for (std::size_t j = 0; j + 1 < m; ++j)
      ranges.push_back({(j + 2 < m) ? t[j + 1] : iabs(t[m - 1]), t[j]});
  } else {
    for (std::size_t j = 0; j + 1 < m; ++j) ranges.push_back({t[j + 1], t[j]});
    if (m > 0) ranges.push_back({-t[m - 1], t[m - 1]});
  }
  std::vector<HighestWeight> out;
  for_each_tuple(ranges, [&](const std::vector<std::int64_t>& e) {
    out.push_back(HighestWeight::validate(tau.n() - 1, e));
  });
  return out;
}

BigInt dimension(const HighestWeight& w) {
  const int n = w.n();
  const auto& e = w.entries();
  const std::size_t m = e.size();
  if (n <= 2) return 1;
  // Shifted coordinates l = lambda + rho, doubled in the odd case so that
  // everything stays integral.
  std::vector<BigInt> l(m), r(m);
  const bool odd = (n % 2 == 1);
  for (std::size_t i = 0; i < m; ++i) {
    const auto rho = odd ? static_cast<std::int64_t>(2 * (m - i) - 1)
                         : static_cast<std::int64_t>(m - i - 1);
    l[i] = BigInt(odd ? 2 * e[i] : e[i]) + rho;
    r[i] = rho;
  }
  BigInt num = 1, den = 1;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      num *= (l[i] - l[j]) * (l[i] + l[j]);
      den *= (r[i] - r[j]) * (r[i] + r[j]);
    }
    if (odd) {
      num *= l[i];
      den *= r[i];
    }
  }
  return num / den;
}

std::vector<HighestWeight> enumerate_ktypes_containing(const HighestWeight& sigma,
                                                       std::int64_t bound) {
  const auto& s = sigma.entries();
  std::int64_t largest = 0;
  for (auto v : s) largest = std::max(largest, iabs(v));
  if (bound < largest) {
    std::ostringstream os;
    os << "bound " << bound << " is below max |entry| " << largest << " of "
       << sigma.to_string();
    throw Error(ErrorCode::BoundTooSmall, os.str());
  }
  const int n = sigma.n() + 1;
  const std::size_t m = static_cast<std::size_t>(n / 2);
  std::vector<Range> ranges(m);
  if (n % 2 == 0) {
    // sigma has m-1 entries: t_1 >= s_1 >= t_2 >= ... >= s_{m-1} >= |t_m|
    if (m == 1) {
      ranges[0] = {-bound, bound};
    } else {
      ranges[0] = {s[0], bound};
      for (std::size_t j = 1; j + 1 < m; ++j) ranges[j] = {s[j], s[j - 1]};
      ranges[m - 1] = {-s[m - 2], s[m - 2]};
    }
  } else {
    // sigma has m entries: t_1 >= s_1 >= ... >= s_{m-1} >= t_m >= |s_m|
    for (std::size_t j = 0; j < m; ++j) {
      const std::int64_t lo = (j + 1 == m) ? iabs(s[j]) : s[j];
      const std::int64_t hi = (j == 0) ? bound : s[j - 1];
      ranges[j] = {lo, hi};
    }
  }
  std::vector<HighestWeight> out;
  for_each_tuple(ranges, [&](const std::vector<std::int64_t>& e) {
    if (is_valid_weight(n, e)) out.push_back(HighestWeight::validate(n, e));
  });
  return out;
}

std::vector<HighestWeight> enumerate_weights(int n, std::int64_t bound) {
  const std::size_t m = static_cast<std::size_t>(n / 2);
  std::vector<Range> ranges(m, Range{-bound, bound});
  std::vector<HighestWeight> out;
  for_each_tuple(ranges, [&](const std::vector<std::int64_t>& e) {
    if (is_valid_weight(n, e)) out.push_back(HighestWeight::validate(n, e));
  });
  return out;
}

}  // namespace rankone
