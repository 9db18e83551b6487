#pragma once

#include "core/model.hpp"
#include "core/rational.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace scl {

// Subfile sizes of the converse: one non-negative rational per (file, T)
// pair, T any subset of the caches encoded as a bitmask (bit c-1 = cache c).
// These are free variables; the factories below produce the two assignments
// the oracles need. Sizes of a well-formed map sum to 1 per file.
class SizeMap {
public:
    SizeMap(int num_files, int num_caches);  // all zero

    int num_files() const { return num_files_; }
    int num_caches() const { return num_caches_; }
    unsigned num_masks() const { return 1u << num_caches_; }

    const Rat& get(int file, unsigned mask) const;
    void set(int file, unsigned mask, Rat value);

    // True iff every file's sizes are non-negative and sum to 1.
    bool is_normalized() const;

    // x_i = total size stored in exactly i caches, i = 0..Lambda.
    std::vector<Rat> aggregate_by_level() const;

private:
    int num_files_;
    int num_caches_;
    std::vector<Rat> sizes_;
};

// Scheme-shaped sizes: 1/binom(Lambda,t) on every |T| = t, zero elsewhere.
SizeMap scheme_sizes(int num_files, int num_caches, int t);

// Deterministic pseudorandom normalized sizes (same seed, same map).
SizeMap random_sizes(int num_files, int num_caches, uint64_t seed);

// One requested subfile: user j of cache `cache` wants file `file`, and the
// node stands for that file's piece cached exactly at the caches in `mask`
// (never including `cache` itself).
struct GraphNode {
    int cache;
    int j;
    int file;
    unsigned mask;
};

// Side-information graph of the converse. Nodes are materialized in a fixed
// deterministic order (cache, then j, then label lexicographically); edges
// follow the rule u -> v iff cache(v) is in label(u) and are computed on
// demand rather than stored.
class SideInfoGraph {
public:
    SideInfoGraph(const Association& assoc, const Demand& d, SizeMap sizes);

    int num_nodes() const { return static_cast<int>(nodes_.size()); }
    const GraphNode& node(int idx) const { return nodes_[idx]; }
    const std::vector<GraphNode>& nodes() const { return nodes_; }
    int num_caches() const { return assoc_.num_caches(); }
    const Association& association() const { return assoc_; }
    const SizeMap& sizes() const { return sizes_; }
    Rat node_size(int idx) const;

    bool has_edge(int u, int v) const;
    int index_of(int cache, int j, unsigned mask) const;  // -1 when absent

private:
    Association assoc_;
    SizeMap sizes_;
    std::vector<GraphNode> nodes_;
    std::map<std::tuple<int, int, unsigned>, int> index_;
};

// Caches ordered by descending population, ties by cache index.
// (Same ordering the delivery rounds use; re-exported here for the
// converse construction.)
std::vector<int> converse_cache_order(const Association& assoc);

// Acyclic-subgraph node selection: with sigma = order (a permutation of the
// caches), rank r contributes nodes (sigma(r), j, T) for every user j of
// cache sigma(r) and every T avoiding sigma(1..r). The result is checked to
// be acyclic and the call throws cyclic_subgraph if it is not.
std::vector<int> acyclic_subgraph_nodes(const SideInfoGraph& g, const std::vector<int>& order);
std::vector<int> acyclic_subgraph_nodes(const SideInfoGraph& g);  // population order

// True iff the subgraph induced by node_subset has a topological order.
bool is_acyclic(const SideInfoGraph& g, const std::vector<int>& node_subset);

// Total size of an acyclic node subset; throws cyclic_subgraph otherwise.
Rat cutset_bound(const SideInfoGraph& g, const std::vector<int>& node_subset);

inline constexpr long long kDefaultClassCap = 10'000'000;

// One member of the averaging class for a profile: a base demand of
// distinct files split into blocks of the profile's lengths, dealt to the
// caches by a permutation. `perm` lists caches by rank (rank r's block has
// the r-th largest length), so it is also the sorting order the acyclic
// subgraph of this member must use.
struct ClassElement {
    std::vector<int> perm;
    Association assoc;
    Demand demand;
};

Int demand_class_size(const Profile& profile, int num_files, int num_caches);

// Calls fn for each of the P(N,K) * Lambda! class members, in a fixed
// deterministic order. Throws class_too_large above the cap.
void for_each_class_element(const Profile& profile, int num_files, int num_caches,
                            const std::function<void(const ClassElement&)>& fn,
                            long long cap = kDefaultClassCap);

// Average of the acyclic-subgraph cut-set bound over the whole class,
// with each member's subgraph built from its own dealing permutation.
Rat averaged_converse(const Profile& profile, int num_files, int num_caches, const SizeMap& sizes,
                      long long cap = kDefaultClassCap);

// Brute-force count of how often the subfile (file, mask) appears in the
// class members' acyclic subgraphs. Oracle for the counting formula.
Int count_subfile_appearances(const Profile& profile, int num_files, int num_caches, int file,
                              unsigned mask, long long cap = kDefaultClassCap);

// Same count for every subfile in one pass: result[file-1][mask].
std::vector<std::vector<Int>> count_all_subfile_appearances(const Profile& profile, int num_files,
                                                            int num_caches,
                                                            long long cap = kDefaultClassCap);

inline constexpr int kDefaultMaisCap = 20;

// Exhaustive maximum-total-size acyclic induced subgraph, searched within
// `candidates` (all nodes by default). Throws graph_too_large when the
// candidate count exceeds the cap.
std::pair<std::vector<int>, Rat> brute_force_mais(const SideInfoGraph& g,
                                                  const std::vector<int>& candidates,
                                                  int node_cap = kDefaultMaisCap);
std::pair<std::vector<int>, Rat> brute_force_mais(const SideInfoGraph& g,
                                                  int node_cap = kDefaultMaisCap);

}  // namespace scl
