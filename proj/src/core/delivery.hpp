#pragma once

#include "core/model.hpp"
#include "core/placement.hpp"

#include <optional>
#include <vector>

namespace scl {

// Users served in round j: the j-th user of every cache that still has one.
struct Round {
    int index = 0;
    std::vector<int> users;  // original user ids, ordered by descending cache population
};

// One XOR multicast. cache_set is the full (t+1)-subset Q in original cache
// labels; targets/summands list only the caches of Q that serve a user this
// round, aligned pairwise and ordered by original cache label.
struct Transmission {
    int round = 0;
    std::vector<int> cache_set;
    std::vector<int> targets;          // chi_Q, the users that decode from this message
    std::vector<int> target_caches;    // cache of each target, aligned with targets
    std::vector<SubfileId> summands;   // aligned with targets
    Bytes payload;                     // empty unless payload mode

    std::size_t fanout() const { return targets.size(); }
};

struct DeliveryResult {
    std::vector<Round> rounds;
    std::vector<Transmission> transmissions;
    Rat delay{Int(0)};
    std::vector<bool> per_user_ok;  // indexed by user - 1
    // Subfiles each user obtained from the broadcast (its cached ones excluded).
    std::vector<std::vector<SubfileId>> decoded;  // indexed by user - 1

    bool all_ok() const;
    std::string to_json() const;
};

// Cache ranking used by the delivery rounds: rank r (1-based) maps to the
// original label of the r-th most populated cache, ties by original label.
std::vector<int> cache_order_by_population(const Association& assoc);

std::vector<Round> rounds(const Association& assoc);

std::vector<Transmission> transmissions_for_round(const Round& round, const Association& assoc,
                                                  const Demand& d, int t);

// What user k learns from one transmission. Verifies k is targeted and that
// every interfering summand sits in k's cache; payload mode also returns the
// decoded bytes.
std::pair<SubfileId, Bytes> decode(int user, const Transmission& tx, const Placement& p,
                                   const Association& assoc);

struct DeliveryOptions {
    long payload_file_len = 0;  // 0 = symbolic run, no payloads
    std::uint64_t seed = 0;
};

// Runs the full scheme: placement, rounds, XOR transmissions, per-user
// decoding, and recovery verification. Works for any demand, repeated
// file requests included.
DeliveryResult run_delivery(const Instance& inst, const Association& assoc, const Demand& d,
                            const DeliveryOptions& opts = {});

// Per-round transmission count: binom(Lambda, t+1) - binom(Lambda - served, t+1).
Int round_transmission_count(const Profile& profile, int t, int round_index);

// Total delay of the scheme in file units:
//   sum_{r=1}^{Lambda-t} L_r * binom(Lambda-r, t) / binom(Lambda, t).
Rat closed_form_delay(const Profile& profile, int num_caches, int t);

}  // namespace scl
