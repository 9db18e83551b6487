#pragma once

#include "core/model.hpp"
#include "core/rational.hpp"

#include <vector>

namespace scl {

// Lambda users, each with its own cache, jointly requesting K files.
// Request slots 1..K are partitioned among the users; slot k asks for
// file demand[k-1].
struct MultiRequestInstance {
    int num_files;                           // N
    Rat cache_size;                          // M
    std::vector<std::vector<int>> requests;  // per user: its slots, ordered
    std::vector<int> demand;                 // files by slot, length K
};

// The equivalent shared-cache problem: one virtual user per request slot,
// attached to the cache of the physical user holding that slot.
struct MappedInstance {
    Instance instance;
    Association association;
    Demand demand;
};

MappedInstance to_shared_cache(const MultiRequestInstance& mri);

// Optimal total delay for serving all requests, as a function of the
// request-count profile. Identical to the shared-cache optimum.
Rat multirequest_t_star(const Profile& profile, int num_caches, const Rat& gamma);

}  // namespace scl
