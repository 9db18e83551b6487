#include "core/indexcoding.hpp"

#include "core/combinatorics.hpp"
#include "core/delivery.hpp"

#include <algorithm>
#include <bit>
#include <random>

namespace scl {

namespace {

void emit_subsets(const std::vector<int>& allowed, std::size_t start, unsigned current,
                  std::vector<unsigned>& out) {
    for (std::size_t k = start; k < allowed.size(); ++k) {
        const unsigned next = current | (1u << (allowed[k] - 1));
        out.push_back(next);
        emit_subsets(allowed, k + 1, next, out);
    }
}

// All subsets of `allowed` (ascending cache list) as masks, ordered
// lexicographically by their sorted element lists: {} < {1} < {1,2} < {2}.
std::vector<unsigned> lex_subsets(const std::vector<int>& allowed) {
    std::vector<unsigned> out;
    out.push_back(0u);
    emit_subsets(allowed, 0, 0u, out);
    return out;
}

std::vector<int> dedupe(const std::vector<int>& idxs) {
    std::vector<int> v = idxs;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void check_permutation(const std::vector<int>& order, int num_caches) {
    if (static_cast<int>(order.size()) != num_caches)
        throw Error(Errc::invalid_argument, "order must list every cache once");
    std::vector<bool> seen(num_caches + 1, false);
    for (int c : order) {
        if (c < 1 || c > num_caches || seen[c])
            throw Error(Errc::invalid_argument, "order must list every cache once");
        seen[c] = true;
    }
}

}  // namespace

SizeMap::SizeMap(int num_files, int num_caches) : num_files_(num_files), num_caches_(num_caches) {
    if (num_files < 1 || num_caches < 1 || num_caches > 20)
        throw Error(Errc::invalid_argument, "size map needs N >= 1 and 1 <= Lambda <= 20");
    sizes_.assign(static_cast<std::size_t>(num_files) << num_caches, Rat(Int(0)));
}

const Rat& SizeMap::get(int file, unsigned mask) const {
    if (file < 1 || file > num_files_ || mask >= num_masks())
        throw Error(Errc::invalid_argument, "subfile outside size map");
    return sizes_[(static_cast<std::size_t>(file - 1) << num_caches_) | mask];
}

void SizeMap::set(int file, unsigned mask, Rat value) {
    if (file < 1 || file > num_files_ || mask >= num_masks())
        throw Error(Errc::invalid_argument, "subfile outside size map");
    if (value < Rat(Int(0))) throw Error(Errc::invalid_argument, "sizes must be non-negative");
    sizes_[(static_cast<std::size_t>(file - 1) << num_caches_) | mask] = std::move(value);
}

bool SizeMap::is_normalized() const {
    const Rat one(Int(1));
    for (int n = 1; n <= num_files_; ++n) {
        Rat total(Int(0));
        for (unsigned mask = 0; mask < num_masks(); ++mask) total += get(n, mask);
        if (total != one) return false;
    }
    return true;
}

std::vector<Rat> SizeMap::aggregate_by_level() const {
    std::vector<Rat> x(num_caches_ + 1, Rat(Int(0)));
    for (int n = 1; n <= num_files_; ++n)
        for (unsigned mask = 0; mask < num_masks(); ++mask) x[std::popcount(mask)] += get(n, mask);
    return x;
}

SizeMap scheme_sizes(int num_files, int num_caches, int t) {
    if (t < 0 || t > num_caches) throw Error(Errc::invalid_argument, "t must lie in [0, Lambda]");
    SizeMap sizes(num_files, num_caches);
    const Rat share(Int(1), binom(num_caches, t));
    for (int n = 1; n <= num_files; ++n)
        for (unsigned mask = 0; mask < sizes.num_masks(); ++mask)
            if (std::popcount(mask) == t) sizes.set(n, mask, share);
    return sizes;
}

SizeMap random_sizes(int num_files, int num_caches, uint64_t seed) {
    SizeMap sizes(num_files, num_caches);
    for (int n = 1; n <= num_files; ++n) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<uint64_t>(n));
        std::vector<long> nums(sizes.num_masks());
        long total = 0;
        for (auto& v : nums) {
            v = static_cast<long>(rng() % 100);
            total += v;
        }
        if (total == 0) {
            nums[0] = 1;
            total = 1;
        }
        for (unsigned mask = 0; mask < sizes.num_masks(); ++mask)
            if (nums[mask] != 0) sizes.set(n, mask, make_rat(nums[mask], total));
    }
    return sizes;
}

SideInfoGraph::SideInfoGraph(const Association& assoc, const Demand& d, SizeMap sizes)
    : assoc_(assoc), sizes_(std::move(sizes)) {
    if (sizes_.num_caches() != assoc_.num_caches())
        throw Error(Errc::invalid_argument, "size map does not match cache count");
    if (d.num_users() != assoc_.num_users())
        throw Error(Errc::invalid_argument, "demand does not match user count");
    const int lambda = assoc_.num_caches();
    for (int cache = 1; cache <= lambda; ++cache) {
        std::vector<int> allowed;
        for (int c = 1; c <= lambda; ++c)
            if (c != cache) allowed.push_back(c);
        const auto masks = lex_subsets(allowed);
        const auto& users = assoc_.users_of(cache);
        for (int j = 1; j <= static_cast<int>(users.size()); ++j) {
            const int file = d.file_of(users[j - 1]);
            if (file < 1 || file > sizes_.num_files())
                throw Error(Errc::invalid_argument, "demanded file outside size map");
            for (unsigned mask : masks) {
                index_[{cache, j, mask}] = static_cast<int>(nodes_.size());
                nodes_.push_back({cache, j, file, mask});
            }
        }
    }
}

Rat SideInfoGraph::node_size(int idx) const {
    const GraphNode& n = nodes_[idx];
    return sizes_.get(n.file, n.mask);
}

bool SideInfoGraph::has_edge(int u, int v) const {
    if (u == v) return false;
    return (nodes_[u].mask >> (nodes_[v].cache - 1)) & 1u;
}

int SideInfoGraph::index_of(int cache, int j, unsigned mask) const {
    auto it = index_.find({cache, j, mask});
    return it == index_.end() ? -1 : it->second;
}

std::vector<int> converse_cache_order(const Association& assoc) {
    return cache_order_by_population(assoc);
}

std::vector<int> acyclic_subgraph_nodes(const SideInfoGraph& g, const std::vector<int>& order) {
    const int lambda = g.num_caches();
    check_permutation(order, lambda);
    std::vector<int> result;
    std::vector<bool> banned(lambda + 1, false);
    for (int rank = 1; rank <= lambda; ++rank) {
        const int cache = order[rank - 1];
        banned[cache] = true;
        std::vector<int> allowed;
        for (int c = 1; c <= lambda; ++c)
            if (!banned[c]) allowed.push_back(c);
        const auto masks = lex_subsets(allowed);
        const int users = static_cast<int>(g.association().users_of(cache).size());
        for (int j = 1; j <= users; ++j)
            for (unsigned mask : masks) {
                const int idx = g.index_of(cache, j, mask);
                if (idx < 0) throw Error(Errc::invalid_argument, "graph is missing a node");
                result.push_back(idx);
            }
    }
    if (!is_acyclic(g, result))
        throw Error(Errc::cyclic_subgraph, "population-ordered subgraph has a cycle");
    return result;
}

std::vector<int> acyclic_subgraph_nodes(const SideInfoGraph& g) {
    return acyclic_subgraph_nodes(g, converse_cache_order(g.association()));
}

bool is_acyclic(const SideInfoGraph& g, const std::vector<int>& node_subset) {
    const std::vector<int> nodes = dedupe(node_subset);
    for (int idx : nodes)
        if (idx < 0 || idx >= g.num_nodes())
            throw Error(Errc::invalid_argument, "node index out of range");
    const int n = static_cast<int>(nodes.size());
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.has_edge(nodes[a], nodes[b])) ++indeg[b];
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) stack.push_back(v);
    int seen = 0;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++seen;
        for (int w = 0; w < n; ++w)
            if (g.has_edge(nodes[v], nodes[w]) && --indeg[w] == 0) stack.push_back(w);
    }
    return seen == n;
}

Rat cutset_bound(const SideInfoGraph& g, const std::vector<int>& node_subset) {
    const std::vector<int> nodes = dedupe(node_subset);
    if (!is_acyclic(g, nodes))
        throw Error(Errc::cyclic_subgraph, "cut-set bound needs an acyclic subset");
    Rat total(Int(0));
    for (int idx : nodes) total += g.node_size(idx);
    return total;
}

Int demand_class_size(const Profile& profile, int num_files, int num_caches) {
    const Profile p = padded_profile(profile, num_caches);
    return perm(num_files, p.num_users()) * factorial(num_caches);
}

void for_each_class_element(const Profile& profile, int num_files, int num_caches,
                            const std::function<void(const ClassElement&)>& fn, long long cap) {
    const Profile p = padded_profile(profile, num_caches);
    const long num_users = p.num_users();
    if (num_files < num_users)
        throw Error(Errc::invalid_argument, "need at least as many files as users");
    if (demand_class_size(p, num_files, num_caches) > Int(cap))
        throw Error(Errc::class_too_large, "demand class exceeds enumeration cap");

    std::vector<long> prefix(num_caches + 1, 0);
    for (int r = 1; r <= num_caches; ++r) prefix[r] = prefix[r - 1] + p.count(r);

    std::vector<int> base;
    base.reserve(num_users);
    std::vector<bool> used(num_files + 1, false);
    std::function<void()> walk = [&]() {
        if (static_cast<long>(base.size()) == num_users) {
            for_each_permutation(num_caches, [&](const std::vector<int>& pi) {
                std::vector<int> rank_of(num_caches + 1);
                for (int r = 1; r <= num_caches; ++r) rank_of[pi[r - 1]] = r;
                std::vector<std::vector<int>> lists(num_caches);
                std::vector<int> files;
                files.reserve(num_users);
                int next_user = 1;
                for (int cache = 1; cache <= num_caches; ++cache) {
                    const int r = rank_of[cache];
                    for (long pos = prefix[r - 1]; pos < prefix[r]; ++pos) {
                        lists[cache - 1].push_back(next_user++);
                        files.push_back(base[pos]);
                    }
                }
                const ClassElement element{
                    pi, Association(std::move(lists), static_cast<int>(num_users)),
                    Demand(std::move(files), num_files)};
                fn(element);
            });
            return;
        }
        for (int n = 1; n <= num_files; ++n) {
            if (used[n]) continue;
            used[n] = true;
            base.push_back(n);
            walk();
            base.pop_back();
            used[n] = false;
        }
    };
    walk();
}

Rat averaged_converse(const Profile& profile, int num_files, int num_caches, const SizeMap& sizes,
                      long long cap) {
    if (sizes.num_caches() != num_caches)
        throw Error(Errc::invalid_argument, "size map does not match cache count");
    Rat sum(Int(0));
    for_each_class_element(
        profile, num_files, num_caches,
        [&](const ClassElement& element) {
            const SideInfoGraph g(element.assoc, element.demand, sizes);
            sum += cutset_bound(g, acyclic_subgraph_nodes(g, element.perm));
        },
        cap);
    return sum / Rat(demand_class_size(profile, num_files, num_caches));
}

Int count_subfile_appearances(const Profile& profile, int num_files, int num_caches, int file,
                              unsigned mask, long long cap) {
    if (file < 1 || file > num_files) throw Error(Errc::invalid_argument, "file out of range");
    if (mask >= (1u << num_caches)) throw Error(Errc::invalid_argument, "label out of range");
    return count_all_subfile_appearances(profile, num_files, num_caches, cap)[file - 1][mask];
}

std::vector<std::vector<Int>> count_all_subfile_appearances(const Profile& profile, int num_files,
                                                            int num_caches, long long cap) {
    const SizeMap zero_sizes(num_files, num_caches);
    std::vector<std::vector<Int>> counts(num_files, std::vector<Int>(1u << num_caches, Int(0)));
    for_each_class_element(
        profile, num_files, num_caches,
        [&](const ClassElement& element) {
            const SideInfoGraph g(element.assoc, element.demand, zero_sizes);
            for (int idx : acyclic_subgraph_nodes(g, element.perm)) {
                const GraphNode& node = g.node(idx);
                ++counts[node.file - 1][node.mask];
            }
        },
        cap);
    return counts;
}

std::pair<std::vector<int>, Rat> brute_force_mais(const SideInfoGraph& g,
                                                  const std::vector<int>& candidates,
                                                  int node_cap) {
    const std::vector<int> cand = dedupe(candidates);
    for (int idx : cand)
        if (idx < 0 || idx >= g.num_nodes())
            throw Error(Errc::invalid_argument, "node index out of range");
    const int n = static_cast<int>(cand.size());
    if (n > node_cap) throw Error(Errc::graph_too_large, "too many nodes for exhaustive search");

    std::vector<Rat> suffix(n + 1, Rat(Int(0)));
    for (int k = n - 1; k >= 0; --k) suffix[k] = suffix[k + 1] + g.node_size(cand[k]);

    std::vector<int> chosen, best;
    Rat cur(Int(0)), best_val(Int(0));
    std::function<void(int)> walk = [&](int k) {
        if (cur > best_val || (cur == best_val && chosen.size() > best.size())) {
            best_val = cur;
            best = chosen;
        }
        if (k == n) return;
        if (cur + suffix[k] < best_val) return;
        chosen.push_back(cand[k]);
        if (is_acyclic(g, chosen)) {
            cur += g.node_size(cand[k]);
            walk(k + 1);
            cur -= g.node_size(cand[k]);
        }
        chosen.pop_back();
        walk(k + 1);
    };
    walk(0);
    return {best, best_val};
}

std::pair<std::vector<int>, Rat> brute_force_mais(const SideInfoGraph& g, int node_cap) {
    std::vector<int> all(g.num_nodes());
    for (int k = 0; k < g.num_nodes(); ++k) all[k] = k;
    return brute_force_mais(g, all, node_cap);
}

}  // namespace scl
