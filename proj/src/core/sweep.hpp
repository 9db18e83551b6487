#pragma once

#include "core/model.hpp"
#include "core/rational.hpp"

#include <string>
#include <vector>

namespace scl {

enum class SweepFormat { csv, json };

// One delay curve request: evaluate the optimal tradeoff for each profile
// at each gamma. An empty gamma list means the anchor grid 0, 1/Lambda,
// ..., 1. With all_partitions set, `profiles` is ignored and every integer
// partition of K into at most Lambda parts is swept, most skewed first.
struct SweepSpec {
    long num_users = 0;
    int num_caches = 0;
    std::vector<std::vector<long>> profiles;
    bool all_partitions = false;
    std::vector<Rat> gammas;
    SweepFormat format = SweepFormat::csv;
};

struct SweepRow {
    Profile profile;
    Rat gamma;
    Rat value;
};

// Rows in canonical order: profiles as given (or partition order), gammas
// ascending within each profile.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// CSV with header profile,gamma,gamma_exact,T_star,T_star_exact; decimals
// carry 12 significant digits. Byte deterministic for a fixed spec.
std::string sweep_to_csv(const std::vector<SweepRow>& rows);
std::string sweep_to_json(const std::vector<SweepRow>& rows);

std::string sweep_output(const SweepSpec& spec);

}  // namespace scl
