#include "core/multirequest.hpp"

#include "core/bounds.hpp"

namespace scl {

MappedInstance to_shared_cache(const MultiRequestInstance& mri) {
    const int num_slots = static_cast<int>(mri.demand.size());
    const int num_caches = static_cast<int>(mri.requests.size());
    Instance instance(mri.num_files, num_slots, num_caches, mri.cache_size);
    Association association(mri.requests, num_slots);
    Demand demand(mri.demand, mri.num_files);
    return {std::move(instance), std::move(association), std::move(demand)};
}

Rat multirequest_t_star(const Profile& profile, int num_caches, const Rat& gamma) {
    return t_star(profile, num_caches, gamma);
}

}  // namespace scl
