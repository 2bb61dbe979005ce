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
#include "vmauction/rng.hpp"

namespace vmauction {

// Noise for one smoothed run: K*D rows of N i.i.d. uniforms on [0, eps/N].
// Row 0 perturbs the objective; rows 1..K*D-1 perturb the demand rows of
// every constraint dimension except the unperturbed one (by default the
// last flat dimension). With K*D = 1 only the objective row is meaningful.
struct ThetaDraw {
  double epsilon = 0.0;
  int bid_count = 0;        // N
  int dimension_count = 0;  // K*D
  std::vector<double> values;  // row-major, dimension_count x bid_count
  std::uint64_t seed = 0;

  double objective(int bid) const { return values[bid]; }
  double constraint(int row, int bid) const {
    return values[static_cast<std::size_t>(row) * bid_count + bid];
  }

  static ThetaDraw zero(double epsilon, int bid_count, int dimension_count);
};

/// i.i.d. uniform draws on [0, eps/N]; reproducible from the seed.
ThetaDraw draw_thetas(double epsilon, int bid_count, int dimension_count,
                      std::uint64_t seed);
ThetaDraw draw_thetas(double epsilon, int bid_count, int dimension_count,
                      RngStream& stream);

// Perturbed coefficients, non-owning view of the base instance:
//   price_i   -> (1 - eps/2) * price_i + theta^0_i * (sum of prices) / N
//   demand_ij -> demand_ij + theta^j_i * (column sum of j) / N
// for all dimensions j except `unperturbed_dimension`; capacities unchanged.
// Demands only grow, so perturbed-feasible allocations stay base-feasible.
struct PerturbedInstance {
  const AuctionInstance* base = nullptr;
  std::vector<Money> prices;      // N perturbed prices
  std::vector<double> demands;    // N x K*D perturbed demand matrix
  ThetaDraw theta;
  int unperturbed_dimension = 0;

  std::span<const double> demand_row(int bid) const {
    const int kd = base->dimension_count();
    return {demands.data() + static_cast<std::size_t>(bid) * kd,
            static_cast<std::size_t>(kd)};
  }
};

/// unperturbed_dimension < 0 selects the default, the last flat dimension.
/// Theta rows 1..K*D-1 map onto the remaining dimensions in ascending order.
PerturbedInstance perturb_instance(const AuctionInstance& instance,
                                   ThetaDraw theta,
                                   int unperturbed_dimension = -1);

/// Same perturbation applied to an external price vector (used for marginal
/// auction runs where one price is zeroed out).
PerturbedInstance perturb_instance(const AuctionInstance& instance,
                                   std::span<const Money> prices,
                                   ThetaDraw theta,
                                   int unperturbed_dimension = -1);

/// Adjoint action of the price-perturbation matrix on an allocation:
/// component i of the result is (1 - eps/2) x_i + (sum_j theta^0_j x_j) / N.
FractionalAllocation apply_P_transpose(const Allocation& x,
                                       const ThetaDraw& theta);

}  // namespace vmauction
