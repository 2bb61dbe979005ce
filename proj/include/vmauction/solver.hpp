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

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "vmauction/model.hpp"
#include "vmauction/perturb.hpp"

namespace vmauction {

struct SolveOptions {
  // Abort (SolverCapError) instead of letting a stage front exhaust memory.
  std::size_t front_cap = 5'000'000;
  // Recompute each returned entry's welfare/usage from scratch and compare
  // against the carried running sums.
  bool verify_sums = false;
};

struct ParetoEntry {
  Allocation x;
  Money welfare = 0.0;
  std::vector<double> usage;
  std::vector<int> winner_users;  // user indices winning a bid under x
};

/// Dominance between stage entries: at least as much welfare, no more usage
/// in any dimension, and strictly better in at least one of those K*D + 1
/// comparisons. User sets play no role here.
bool dominates(const ParetoEntry& a, const ParetoEntry& b);

struct SolveStats {
  // Internal front size after each stage's prune.
  std::vector<std::size_t> stage_sizes;
  // Pairwise dominance-predicate evaluations across all prune passes.
  std::uint64_t dominance_comparisons = 0;
  // comparisons * (K*D + 1): each comparison touches every criterion once.
  std::uint64_t work_units = 0;
};

struct ParetoResult {
  std::vector<ParetoEntry> front;  // stage-N entries, dominance-filtered
  SolveStats stats;
};

struct ExactSolution {
  Allocation x;
  Money welfare = 0.0;
  SolveStats stats;
};

// Dynamic program over bid prefixes. Stage i extends every surviving entry
// with accept/reject of bid i, drops infeasible extensions, and prunes.
//
// With exclusive-OR bid groups, pruning by plain dominance can discard a
// prefix whose only strong completions go through a user the dominating
// entry has already consumed. The per-stage prune therefore only drops an
// entry when the dominating entry's winner set, restricted to users that
// still have bids in later stages, is a subset of the dropped entry's; a
// final plain-dominance pass then reduces stage N to the true Pareto set.
// Entries identical in welfare, usage and winner set are collapsed to the
// lexicographically smallest accept vector.
//
// The returned front is deterministic. solve_exact picks the max-welfare
// front entry, breaking ties by smaller usage (lexicographic over
// dimensions) and then by lexicographically smaller accept vector.
ParetoResult pareto_front(const AuctionInstance& instance,
                          std::span<const Money> prices,
                          const SolveOptions& options = {});
ParetoResult pareto_front(const PerturbedInstance& perturbed,
                          const SolveOptions& options = {});

ExactSolution solve_exact(const AuctionInstance& instance,
                          std::span<const Money> prices,
                          const SolveOptions& options = {});
ExactSolution solve_exact(const PerturbedInstance& perturbed,
                          const SolveOptions& options = {});

}  // namespace vmauction
