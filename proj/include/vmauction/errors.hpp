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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace vmauction {

/// Malformed input data (instance files, catalogs, bid contents).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied parameter is outside its documented domain.
class ParameterError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An API precondition was violated (dimension mismatches and the like).
class ContractError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Pareto front grew past the configured cap; carries where it happened.
class SolverCapError : public std::runtime_error {
 public:
  SolverCapError(std::size_t stage, std::size_t front_size, std::size_t cap)
      : std::runtime_error("pareto front cap exceeded at stage " +
                           std::to_string(stage) + ": " +
                           std::to_string(front_size) + " entries (cap " +
                           std::to_string(cap) + ")"),
        stage(stage),
        front_size(front_size),
        cap(cap) {}

  std::size_t stage;
  std::size_t front_size;
  std::size_t cap;
};

/// The sampling distribution would need negative residual mass on the zero
/// allocation. `deficit` is the (negative) remainder.
class InvalidDistributionError : public std::runtime_error {
 public:
  explicit InvalidDistributionError(double deficit)
      : std::runtime_error("allocation distribution invalid: zero-vector mass " +
                           std::to_string(deficit)),
        deficit(deficit) {}

  double deficit;
};

/// A singleton allocation in the distribution support violates capacity.
class InfeasibleBasisError : public std::runtime_error {
 public:
  explicit InfeasibleBasisError(std::vector<int> bids)
      : std::runtime_error("basis allocations infeasible for " +
                           std::to_string(bids.size()) + " bid(s)"),
        bids(std::move(bids)) {}

  std::vector<int> bids;
};

}  // namespace vmauction
