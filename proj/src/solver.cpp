// Copyright 2026 The vmauction Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vmauction/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <numeric>

namespace vmauction {

namespace {

constexpr int kWordBits = 64;

inline int word_count(int bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool get_bit(const std::uint64_t* words, int bit) {
  return (words[bit / kWordBits] >> (bit % kWordBits)) & 1u;
}

inline void set_bit(std::uint64_t* words, int bit) {
  words[bit / kWordBits] |= std::uint64_t{1} << (bit % kWordBits);
}

// Column-compressed view of one solve: prices and demands may come from the
// base instance or from a perturbed copy, everything else from the base.
struct DpInput {
  int n = 0;
  int kd = 0;
  int users = 0;
  const Money* prices = nullptr;
  const double* demands = nullptr;
  const double* capacities = nullptr;
  std::vector<int> user;  // bid -> user index
  // Users with two or more bids, and the index of their last bid. A lone
  // bid can never conflict with itself, so such users stay out of the
  // dominance masks.
  std::vector<std::pair<int, int>> multi_bid_users;
};

DpInput make_input(const AuctionInstance& instance, const Money* prices,
                   const double* demands) {
  DpInput in;
  in.n = instance.bid_count();
  in.kd = instance.dimension_count();
  in.users = instance.user_count();
  in.prices = prices;
  in.demands = demands;
  in.capacities = instance.capacities().data();
  in.user.resize(in.n);
  for (int i = 0; i < in.n; ++i) in.user[i] = instance.user_of_bid(i);
  for (int u = 0; u < instance.user_count(); ++u) {
    const auto& bids = instance.user_bids()[u];
    if (bids.size() < 2) continue;
    in.multi_bid_users.emplace_back(
        u, *std::max_element(bids.begin(), bids.end()));
  }
  return in;
}

// Struct-of-arrays entry storage for one DP stage.
struct Store {
  std::size_t count = 0;
  int kd = 0, xw = 0, ww = 0;
  std::vector<Money> welfare;
  std::vector<double> usage;
  std::vector<std::uint64_t> xbits;
  std::vector<std::uint64_t> wbits;

  void reset(int kd_, int xw_, int ww_) {
    kd = kd_;
    xw = xw_;
    ww = ww_;
    clear();
  }

  void clear() {
    count = 0;
    welfare.clear();
    usage.clear();
    xbits.clear();
    wbits.clear();
  }

  const double* usage_of(std::size_t e) const { return usage.data() + e * kd; }
  const std::uint64_t* x_of(std::size_t e) const { return xbits.data() + e * xw; }
  const std::uint64_t* w_of(std::size_t e) const { return wbits.data() + e * ww; }

  void push_empty() {
    welfare.push_back(0.0);
    usage.insert(usage.end(), kd, 0.0);
    xbits.insert(xbits.end(), xw, 0);
    wbits.insert(wbits.end(), ww, 0);
    ++count;
  }

  void push_copy(const Store& from, std::size_t e) {
    welfare.push_back(from.welfare[e]);
    usage.insert(usage.end(), from.usage_of(e), from.usage_of(e) + kd);
    xbits.insert(xbits.end(), from.x_of(e), from.x_of(e) + xw);
    wbits.insert(wbits.end(), from.w_of(e), from.w_of(e) + ww);
    ++count;
  }

  void push_extended(const Store& from, std::size_t e, const DpInput& in,
                     int bid) {
    push_copy(from, e);
    const std::size_t me = count - 1;
    welfare[me] += in.prices[bid];
    double* u = usage.data() + me * kd;
    const double* row = in.demands + static_cast<std::size_t>(bid) * in.kd;
    for (int j = 0; j < kd; ++j) u[j] += row[j];
    set_bit(xbits.data() + me * xw, bid);
    set_bit(wbits.data() + me * ww, in.user[bid]);
  }
};

inline bool fits(const Store& store, std::size_t e, const DpInput& in, int bid) {
  if (get_bit(store.w_of(e), in.user[bid])) return false;
  const double* u = store.usage_of(e);
  const double* row = in.demands + static_cast<std::size_t>(bid) * in.kd;
  for (int j = 0; j < in.kd; ++j) {
    if (u[j] + row[j] > in.capacities[j]) return false;
  }
  return true;
}

// x-vector lexicographic order: the first differing bid index decides, and
// the entry rejecting that bid is smaller. Bit b of word b/64 is bid b.
inline bool x_lex_less(const std::uint64_t* a, const std::uint64_t* b, int xw) {
  for (int w = 0; w < xw; ++w) {
    const std::uint64_t diff = a[w] ^ b[w];
    if (diff) {
      const int bit = std::countr_zero(diff);
      return ((a[w] >> bit) & 1u) == 0;
    }
  }
  return false;
}

class ParetoDp {
 public:
  ParetoDp(const DpInput& in, const SolveOptions& options)
      : in_(in), options_(options) {
    const int xw = std::max(1, word_count(in.n));
    const int ww = std::max(1, word_count(in.users));
    cur_.reset(in.kd, xw, ww);
    cand_.reset(in.kd, xw, ww);
    next_.reset(in.kd, xw, ww);
    mask_.assign(ww, 0);
  }

  void run() {
    cur_.clear();
    cur_.push_empty();
    stats_ = SolveStats{};
    for (int i = 0; i < in_.n; ++i) {
      build_candidates(i);
      build_active_mask(i);
      prune();
      cur_.clear();
      for (std::uint32_t e : kept_) next_.push_copy(cand_, e);
      std::swap(cur_, next_);
      next_.clear();
      stats_.stage_sizes.push_back(cur_.count);
      if (cur_.count > options_.front_cap) {
        throw SolverCapError(static_cast<std::size_t>(i) + 1, cur_.count,
                             options_.front_cap);
      }
    }
    stats_.work_units =
        stats_.dominance_comparisons * static_cast<std::uint64_t>(in_.kd + 1);
  }

  const Store& front() const { return cur_; }
  const SolveStats& stats() const { return stats_; }

 private:
  void build_candidates(int bid) {
    cand_.clear();
    for (std::size_t e = 0; e < cur_.count; ++e) cand_.push_copy(cur_, e);
    for (std::size_t e = 0; e < cur_.count; ++e) {
      if (fits(cur_, e, in_, bid)) cand_.push_extended(cur_, e, in_, bid);
    }
  }

  void build_active_mask(int stage) {
    std::fill(mask_.begin(), mask_.end(), 0);
    for (const auto& [user, last_bid] : in_.multi_bid_users) {
      if (last_bid > stage) set_bit(mask_.data(), user);
    }
  }

  bool winners_subset(std::size_t a, std::size_t b) const {
    const std::uint64_t* wa = cand_.w_of(a);
    const std::uint64_t* wb = cand_.w_of(b);
    for (int w = 0; w < cand_.ww; ++w) {
      if (wa[w] & mask_[w] & ~wb[w]) return false;
    }
    return true;
  }

  bool winners_equal(std::size_t a, std::size_t b) const {
    return std::memcmp(cand_.w_of(a), cand_.w_of(b),
                       sizeof(std::uint64_t) * cand_.ww) == 0;
  }

  void prune() {
    order_.resize(cand_.count);
    std::iota(order_.begin(), order_.end(), 0u);
    std::sort(order_.begin(), order_.end(),
              [this](std::uint32_t a, std::uint32_t b) {
                if (cand_.welfare[a] != cand_.welfare[b]) {
                  return cand_.welfare[a] > cand_.welfare[b];
                }
                const double* ua = cand_.usage_of(a);
                const double* ub = cand_.usage_of(b);
                for (int j = 0; j < cand_.kd; ++j) {
                  if (ua[j] != ub[j]) return ua[j] < ub[j];
                }
                return x_lex_less(cand_.x_of(a), cand_.x_of(b), cand_.xw);
              });

    kept_.clear();
    for (std::uint32_t c : order_) {
      bool drop = false;
      const double* uc = cand_.usage_of(c);
      for (std::uint32_t k : kept_) {
        ++stats_.dominance_comparisons;
        const double* uk = cand_.usage_of(k);
        bool all_le = true;
        bool strict = cand_.welfare[k] > cand_.welfare[c];
        for (int j = 0; j < cand_.kd; ++j) {
          if (uk[j] > uc[j]) {
            all_le = false;
            break;
          }
          if (uk[j] < uc[j]) strict = true;
        }
        if (!all_le) continue;
        if (strict) {
          if (winners_subset(k, c)) {
            drop = true;
            break;
          }
        } else if (winners_equal(k, c)) {
          // Exact value tie; the kept entry sorts lex-smaller.
          drop = true;
          break;
        }
      }
      if (!drop) kept_.push_back(c);
    }
  }

  const DpInput& in_;
  const SolveOptions& options_;
  Store cur_, cand_, next_;
  std::vector<std::uint64_t> mask_;
  std::vector<std::uint32_t> order_;
  std::vector<std::uint32_t> kept_;
  SolveStats stats_;
};

ParetoEntry materialize(const Store& store, std::size_t e,
                        const AuctionInstance& instance) {
  ParetoEntry entry;
  entry.welfare = store.welfare[e];
  entry.usage.assign(store.usage_of(e), store.usage_of(e) + store.kd);
  entry.x = Allocation(instance.bid_count());
  for (int i = 0; i < instance.bid_count(); ++i) {
    if (get_bit(store.x_of(e), i)) {
      entry.x[i] = 1;
      entry.winner_users.push_back(instance.user_of_bid(i));
    }
  }
  std::sort(entry.winner_users.begin(), entry.winner_users.end());
  entry.winner_users.erase(
      std::unique(entry.winner_users.begin(), entry.winner_users.end()),
      entry.winner_users.end());
  return entry;
}

void verify_entry_sums(const ParetoEntry& entry, const DpInput& in) {
  Money welfare = 0.0;
  std::vector<double> usage(in.kd, 0.0);
  for (int i = 0; i < in.n; ++i) {
    if (!entry.x[i]) continue;
    welfare += in.prices[i];
    const double* row = in.demands + static_cast<std::size_t>(i) * in.kd;
    for (int j = 0; j < in.kd; ++j) usage[j] += row[j];
  }
  if (welfare != entry.welfare || usage != entry.usage) {
    throw ContractError("pareto entry caches drifted from recomputation");
  }
}

ParetoResult run_front(const AuctionInstance& instance, const DpInput& in,
                       const SolveOptions& options) {
  ParetoDp dp(in, options);
  dp.run();
  ParetoResult result;
  result.stats = dp.stats();
  result.front.reserve(dp.front().count);
  for (std::size_t e = 0; e < dp.front().count; ++e) {
    result.front.push_back(materialize(dp.front(), e, instance));
    if (options.verify_sums) verify_entry_sums(result.front.back(), in);
  }
  return result;
}

ExactSolution run_exact(const AuctionInstance& instance, const DpInput& in,
                        const SolveOptions& options) {
  ParetoDp dp(in, options);
  dp.run();
  ExactSolution solution;
  solution.stats = dp.stats();
  // The prune orders entries by welfare descending with deterministic
  // tie-breaks, so the optimum is the first entry.
  ParetoEntry best = materialize(dp.front(), 0, instance);
  if (options.verify_sums) verify_entry_sums(best, in);
  solution.x = std::move(best.x);
  solution.welfare = best.welfare;
  return solution;
}

void check_prices(const AuctionInstance& instance,
                  std::span<const Money> prices) {
  if (static_cast<int>(prices.size()) != instance.bid_count()) {
    throw ContractError("solver: price vector length mismatch");
  }
}

}  // namespace

bool dominates(const ParetoEntry& a, const ParetoEntry& b) {
  if (a.usage.size() != b.usage.size() || a.x.size() != b.x.size()) {
    throw ContractError("dominates: entries from different stages");
  }
  bool strict = a.welfare > b.welfare;
  if (a.welfare < b.welfare) return false;
  for (std::size_t j = 0; j < a.usage.size(); ++j) {
    if (a.usage[j] > b.usage[j]) return false;
    if (a.usage[j] < b.usage[j]) strict = true;
  }
  return strict;
}

ParetoResult pareto_front(const AuctionInstance& instance,
                          std::span<const Money> prices,
                          const SolveOptions& options) {
  check_prices(instance, prices);
  return run_front(instance,
                   make_input(instance, prices.data(),
                              instance.demand_matrix().data()),
                   options);
}

ParetoResult pareto_front(const PerturbedInstance& perturbed,
                          const SolveOptions& options) {
  return run_front(*perturbed.base,
                   make_input(*perturbed.base, perturbed.prices.data(),
                              perturbed.demands.data()),
                   options);
}

ExactSolution solve_exact(const AuctionInstance& instance,
                          std::span<const Money> prices,
                          const SolveOptions& options) {
  check_prices(instance, prices);
  return run_exact(instance,
                   make_input(instance, prices.data(),
                              instance.demand_matrix().data()),
                   options);
}

ExactSolution solve_exact(const PerturbedInstance& perturbed,
                          const SolveOptions& options) {
  return run_exact(*perturbed.base,
                   make_input(*perturbed.base, perturbed.prices.data(),
                              perturbed.demands.data()),
                   options);
}

}  // namespace vmauction
