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

#include "vmauction/perturb.hpp"

namespace vmauction {

namespace {

void check_theta_params(double epsilon, int bid_count, int dimension_count) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
    throw ParameterError("theta draw: epsilon must be in (0, 1)");
  }
  if (bid_count < 1) {
    throw ParameterError("theta draw: bid count must be >= 1");
  }
  if (dimension_count < 1) {
    throw ParameterError("theta draw: dimension count must be >= 1");
  }
}

}  // namespace

ThetaDraw ThetaDraw::zero(double epsilon, int bid_count, int dimension_count) {
  ThetaDraw draw;
  draw.epsilon = epsilon;
  draw.bid_count = bid_count;
  draw.dimension_count = dimension_count;
  draw.values.assign(
      static_cast<std::size_t>(bid_count) * dimension_count, 0.0);
  return draw;
}

ThetaDraw draw_thetas(double epsilon, int bid_count, int dimension_count,
                      RngStream& stream) {
  check_theta_params(epsilon, bid_count, dimension_count);
  ThetaDraw draw;
  draw.epsilon = epsilon;
  draw.bid_count = bid_count;
  draw.dimension_count = dimension_count;
  draw.seed = stream.seed();
  const double hi = epsilon / bid_count;
  draw.values.resize(static_cast<std::size_t>(bid_count) * dimension_count);
  for (double& v : draw.values) v = stream.uniform01() * hi;
  return draw;
}

ThetaDraw draw_thetas(double epsilon, int bid_count, int dimension_count,
                      std::uint64_t seed) {
  RngStream stream(seed);
  return draw_thetas(epsilon, bid_count, dimension_count, stream);
}

PerturbedInstance perturb_instance(const AuctionInstance& instance,
                                   ThetaDraw theta,
                                   int unperturbed_dimension) {
  return perturb_instance(instance, std::span<const Money>(instance.prices()),
                          std::move(theta), unperturbed_dimension);
}

PerturbedInstance perturb_instance(const AuctionInstance& instance,
                                   std::span<const Money> prices,
                                   ThetaDraw theta,
                                   int unperturbed_dimension) {
  const int n = instance.bid_count();
  const int kd = instance.dimension_count();
  if (theta.bid_count != n || theta.dimension_count != kd) {
    throw ContractError("perturb_instance: theta dimensions do not match");
  }
  if (static_cast<int>(prices.size()) != n) {
    throw ContractError("perturb_instance: price vector length mismatch");
  }
  if (unperturbed_dimension < 0) unperturbed_dimension = kd - 1;
  if (unperturbed_dimension >= kd) {
    throw ParameterError("perturb_instance: unperturbed dimension out of range");
  }

  PerturbedInstance out;
  out.base = &instance;
  out.unperturbed_dimension = unperturbed_dimension;

  Money price_sum = 0.0;
  for (Money b : prices) price_sum += b;
  const double scale = 1.0 - theta.epsilon / 2.0;
  out.prices.resize(n);
  for (int i = 0; i < n; ++i) {
    out.prices[i] = scale * prices[i] + theta.objective(i) * price_sum / n;
  }

  out.demands = instance.demand_matrix();
  int theta_row = 1;
  for (int j = 0; j < kd; ++j) {
    if (j == unperturbed_dimension) continue;
    double column_sum = 0.0;
    for (int i = 0; i < n; ++i) {
      column_sum += instance.demand_matrix()[static_cast<std::size_t>(i) * kd + j];
    }
    for (int i = 0; i < n; ++i) {
      out.demands[static_cast<std::size_t>(i) * kd + j] +=
          theta.constraint(theta_row, i) * column_sum / n;
    }
    ++theta_row;
  }
  out.theta = std::move(theta);
  return out;
}

FractionalAllocation apply_P_transpose(const Allocation& x,
                                       const ThetaDraw& theta) {
  if (static_cast<int>(x.size()) != theta.bid_count) {
    throw ContractError("apply_P_transpose: dimension mismatch");
  }
  const int n = theta.bid_count;
  double weighted = 0.0;
  for (int j = 0; j < n; ++j) {
    if (x[j]) weighted += theta.objective(j);
  }
  FractionalAllocation out;
  out.x.resize(n);
  const double scale = 1.0 - theta.epsilon / 2.0;
  for (int i = 0; i < n; ++i) {
    out.x[i] = scale * (x[i] ? 1.0 : 0.0) + weighted / n;
  }
  return out;
}

}  // namespace vmauction
