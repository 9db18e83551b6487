#pragma once

#include "core/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace scl {

enum class Errc {
    invalid_argument,
    parse_error,
    non_integer_t,
    indivisible_length,
    not_targeted,
    missing_side_info,
    cyclic_subgraph,
    class_too_large,
    graph_too_large,
    io_error,
};

const char* errc_name(Errc e);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

// Problem parameters. File, user and cache indices are 1-based throughout,
// matching the external JSON format.
class Instance {
public:
    // Requires N >= K (more files than users), Lambda <= K, 0 <= M <= N.
    Instance(int num_files, int num_users, int num_caches, Rat cache_size);

    int num_files() const { return num_files_; }
    int num_users() const { return num_users_; }
    int num_caches() const { return num_caches_; }
    const Rat& cache_size() const { return cache_size_; }
    Rat gamma() const { return cache_size_ / Rat(Int(num_files_)); }

    // Lambda * gamma if it is a non-negative integer, else throws non_integer_t.
    int integer_t() const;
    bool has_integer_t() const;

private:
    int num_files_;
    int num_users_;
    int num_caches_;
    Rat cache_size_;
};

// Which users each cache serves. Lists are ordered: position j identifies
// "the j-th user of the cache", which the delivery rounds rely on. The
// lists must partition {1..K}; empty lists are legal.
class Association {
public:
    Association(std::vector<std::vector<int>> users_per_cache, int num_users);

    int num_caches() const { return static_cast<int>(users_.size()); }
    int num_users() const { return num_users_; }
    const std::vector<int>& users_of(int cache) const { return users_[cache - 1]; }
    const std::vector<std::vector<int>>& lists() const { return users_; }
    int cache_of(int user) const { return cache_of_[user - 1]; }

private:
    std::vector<std::vector<int>> users_;
    std::vector<int> cache_of_;
    int num_users_;
};

// Sorted histogram of an association: counts descending, summing to K.
class Profile {
public:
    Profile(std::vector<long> counts_desc);

    int num_caches() const { return static_cast<int>(counts_.size()); }
    long count(int rank) const { return counts_[rank - 1]; }  // rank 1 = most populated
    const std::vector<long>& counts() const { return counts_; }
    long num_users() const;
    bool is_uniform() const;
    std::string to_string() const;  // "3-2-2-1"

private:
    std::vector<long> counts_;
};

Profile profile_of(const Association& assoc);

// Same profile extended with zero counts to exactly num_caches entries.
Profile padded_profile(const Profile& profile, int num_caches);

// Cache lambda serves the consecutive run of profile.count(lambda) users.
Association canonical_association(const Profile& profile);

// Every way to spread num_users users over num_caches caches, one
// representative per cache-relabeling class: blocks ordered by smallest
// member, unused caches last.
std::vector<Association> associations_up_to_relabeling(int num_users, int num_caches);

class Demand {
public:
    Demand(std::vector<int> files, int num_files);

    int num_users() const { return static_cast<int>(files_.size()); }
    int file_of(int user) const { return files_[user - 1]; }
    const std::vector<int>& files() const { return files_; }
    bool is_worst_case() const;  // all entries distinct

private:
    std::vector<int> files_;
};

// The demand grouped by cache: block lambda lists the files requested by
// the users of cache lambda, in that cache's user order.
class ReorderedDemand {
public:
    explicit ReorderedDemand(std::vector<std::vector<int>> blocks);

    int num_caches() const { return static_cast<int>(blocks_.size()); }
    const std::vector<int>& block(int cache) const { return blocks_[cache - 1]; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    std::vector<int> flattened() const;

private:
    std::vector<std::vector<int>> blocks_;
};

ReorderedDemand reorder_demand(const Association& assoc, const Demand& d);

// Parsed form of the JSON instance file; see README for the schema.
struct InstanceFile {
    Instance instance;
    Association association;
    Demand demand;
    bool multirequest = false;
};

InstanceFile instance_from_json(const std::string& json_text);
InstanceFile instance_from_json_file(const std::string& path);

}  // namespace scl
