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

#include "vmauction/payments.hpp"

#include "vmauction/text.hpp"

namespace vmauction {

Money vcg_payment(const AuctionInstance& instance,
                  const AllocateOptions& options, int bid,
                  const AllocateResult& main_run, std::uint64_t seed,
                  AllocateTrace* marginal_trace) {
  if (bid < 0 || bid >= instance.bid_count()) {
    throw ContractError("vcg_payment: bid index out of range");
  }
  std::vector<Money> marginal_prices = instance.prices();
  marginal_prices[bid] = 0.0;
  AllocateResult marginal =
      allocate_with_prices(instance, marginal_prices, options, seed);
  if (marginal_trace != nullptr) *marginal_trace = std::move(marginal.trace);

  Money others_without_bid = 0.0;
  for (int j = 0; j < instance.bid_count(); ++j) {
    if (marginal.y[j]) others_without_bid += marginal_prices[j];
  }
  Money others_with_bid = 0.0;
  for (int j = 0; j < instance.bid_count(); ++j) {
    if (j != bid && main_run.y[j]) others_with_bid += instance.prices()[j];
  }
  return others_without_bid - others_with_bid;
}

AuctionOutcome run_auction(const AuctionInstance& instance,
                           const AllocateOptions& options, std::uint64_t seed,
                           bool keep_marginal_traces) {
  AuctionOutcome outcome;
  outcome.seed = seed;
  RngStream master(seed);

  AllocateResult main_run =
      allocate(instance, options, master.derive("main").seed());
  outcome.y = main_run.y;

  const int n = instance.bid_count();
  outcome.payments_realized.resize(n);
  outcome.payments_charged.resize(n);
  if (keep_marginal_traces) outcome.marginal_traces.resize(n);
  RngStream marginal_root = master.derive("marginal");
  for (int i = 0; i < n; ++i) {
    AllocateTrace* trace =
        keep_marginal_traces ? &outcome.marginal_traces[i] : nullptr;
    const Money p = vcg_payment(instance, options, i, main_run,
                                marginal_root.derive(i).seed(), trace);
    outcome.payments_realized[i] = p;
    outcome.payments_charged[i] = outcome.y[i] ? p : 0.0;
  }
  outcome.trace = std::move(main_run.trace);
  return outcome;
}

std::string outcome_csv(const AuctionOutcome& outcome,
                        const AuctionInstance& instance) {
  std::string out =
      "bid_id,user_id,price,won,payment_realized,payment_charged,seed\n";
  for (int i = 0; i < instance.bid_count(); ++i) {
    out += format_int(i);
    out += ',';
    out += instance.bids()[i].user_id;
    out += ',';
    out += format_double(instance.prices()[i]);
    out += ',';
    out += outcome.y[i] ? '1' : '0';
    out += ',';
    out += format_double(outcome.payments_realized[i]);
    out += ',';
    out += format_double(outcome.payments_charged[i]);
    out += ',';
    out += format_uint(outcome.seed);
    out += '\n';
  }
  return out;
}

}  // namespace vmauction
