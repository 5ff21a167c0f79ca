#pragma once

// Highest-weight labels for the irreducible representations of SO(n).
//
// SO(2m+1): (t_1, ..., t_m) with t_1 >= ... >= t_m >= 0.
// SO(2m), m >= 2: (t_1, ..., t_m) with t_1 >= ... >= t_{m-1} >= |t_m|.
// SO(2): a single unconstrained integer. SO(1): the empty tuple.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace rankone {

using BigInt = boost::multiprecision::cpp_int;

class HighestWeight {
 public:
  // Throws Error{WrongLength | OrderingViolation}.
  static HighestWeight validate(int n, std::vector<std::int64_t> entries);

  static HighestWeight trivial(int n);

  int n() const noexcept { return n_; }
  std::size_t rank() const noexcept { return entries_.size(); }
  const std::vector<std::int64_t>& entries() const noexcept { return entries_; }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }

  bool is_trivial() const noexcept;
  std::string to_string() const;

  // Lexicographic on entries within the same n.
  friend auto operator<=>(const HighestWeight&, const HighestWeight&) = default;
  friend bool operator==(const HighestWeight&, const HighestWeight&) = default;

 private:
  HighestWeight(int n, std::vector<std::int64_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  int n_ = 1;
  std::vector<std::int64_t> entries_;
};

// Non-throwing check of the ordering constraints.
bool is_valid_weight(int n, const std::vector<std::int64_t>& entries) noexcept;

HighestWeight dual(const HighestWeight& w);
bool is_self_dual(const HighestWeight& w);

// True iff sigma (a weight of SO(n-1)) occurs in tau (a weight of SO(n)).
// Throws Error{GroupMismatch} when sigma.n() != tau.n() - 1.
bool branches_to(const HighestWeight& tau, const HighestWeight& sigma);

// All SO(n-1) constituents of tau, each once, in lexicographic order.
std::vector<HighestWeight> branching_set(const HighestWeight& tau);

// Weyl dimension, exact.
BigInt dimension(const HighestWeight& w);

// All SO(n+1) weights tau containing sigma whose largest entry is at most
// `bound` (for SO(2) the single entry ranges over [-bound, bound]).
// Lexicographic order. Throws Error{BoundTooSmall} if bound < max |sigma_j|.
std::vector<HighestWeight> enumerate_ktypes_containing(const HighestWeight& sigma,
                                                       std::int64_t bound);

// Every valid SO(n) weight whose entries are bounded by `bound` in absolute
// value, in lexicographic order.
std::vector<HighestWeight> enumerate_weights(int n, std::int64_t bound);

}  // namespace rankone
