#pragma once

// Weighted sums over all subsets T of up to 64 items:
//
//   sum_T (prod_{i not in T} alpha_i)(prod_{i in T} beta_i) d^{e(T)}
//
// split into tagged buckets. Subsets are visited in reflected Gray-code order
// by a depth-first walk that shares prefix weight products. Items whose
// weights are not monomials are kept out of the prefix product and folded in
// once per bucket at the end, so each visited subset costs one monomial add.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "mgb/ring.hpp"

namespace mgb::detail {

struct SubsetTerm {
  std::size_t tag;
  int d_exponent;
};

class SubsetSum {
 public:
  static constexpr std::size_t kMaxDeferred = 8;

  SubsetSum(std::span<const LaurentPoly> alpha, std::span<const LaurentPoly> beta)
      : alpha_(alpha), beta_(beta) {
    for (std::size_t i = 0; i < alpha_.size(); ++i) {
      const bool simple = alpha_[i].size() <= 1 && beta_[i].size() <= 1;
      if (!simple && deferred_.size() < kMaxDeferred) {
        deferred_slot_.push_back(static_cast<int>(deferred_.size()));
        deferred_.push_back(i);
      } else {
        deferred_slot_.push_back(-1);
      }
    }
  }

  /// `visit(mask)` returns the bucket for subset `mask` (bit i set iff item i
  /// is in T), or nullopt to drop it. Subsets with a zero weight product are
  /// never visited.
  template <class Visit>
  void run(Visit&& visit) {
    walk(0, 0, 0, LaurentPoly(1), false, visit);
  }

  std::uint64_t visited() const { return visited_; }

  /// Sum of every bucket carrying `tag`.
  LaurentPoly total(std::size_t tag) const {
    LaurentPoly out;
    std::map<std::uint32_t, LaurentPoly> by_choice;
    for (const auto& [key, sum] : buckets_) {
      const auto& [t, e, choice] = key;
      if (t != tag) continue;
      by_choice[choice] += sum * LaurentPoly::var("d", e);
    }
    for (const auto& [choice, sum] : by_choice) {
      LaurentPoly factor(1);
      for (std::size_t k = 0; k < deferred_.size(); ++k) {
        const std::size_t i = deferred_[k];
        factor *= ((choice >> k) & 1U) ? beta_[i] : alpha_[i];
      }
      out += sum * factor;
    }
    return out;
  }

 private:
  template <class Visit>
  void walk(std::size_t i, std::uint64_t mask, std::uint32_t choice, const LaurentPoly& prefix,
            bool reflected, Visit& visit) {
    if (i == alpha_.size()) {
      std::optional<SubsetTerm> term = visit(mask);
      ++visited_;
      if (term) buckets_[{term->tag, term->d_exponent, choice}] += prefix;
      return;
    }
    // Reflected Gray order: unreflected visits 0 then 1, reflected 1 then 0;
    // the second child is always reflected.
    const int first = reflected ? 1 : 0;
    for (int pass = 0; pass < 2; ++pass) {
      const int in_t = pass == 0 ? first : 1 - first;
      const LaurentPoly& w = in_t ? beta_[i] : alpha_[i];
      if (w.is_zero()) continue;
      const std::uint64_t next_mask = mask | (static_cast<std::uint64_t>(in_t) << i);
      const int slot = deferred_slot_[i];
      if (slot >= 0) {
        const std::uint32_t next_choice = choice | (static_cast<std::uint32_t>(in_t) << slot);
        walk(i + 1, next_mask, next_choice, prefix, pass == 1, visit);
      } else {
        walk(i + 1, next_mask, choice, prefix * w, pass == 1, visit);
      }
    }
  }

  std::span<const LaurentPoly> alpha_;
  std::span<const LaurentPoly> beta_;
  std::vector<std::size_t> deferred_;
  std::vector<int> deferred_slot_;
  std::map<std::tuple<std::size_t, int, std::uint32_t>, LaurentPoly> buckets_;
  std::uint64_t visited_ = 0;
};

}  // namespace mgb::detail
