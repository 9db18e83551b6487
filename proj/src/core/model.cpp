#include "core/model.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include <json.hpp>

namespace scl {

const char* errc_name(Errc e) {
    switch (e) {
        case Errc::invalid_argument: return "InvalidArgument";
        case Errc::parse_error: return "ParseError";
        case Errc::non_integer_t: return "NonIntegerT";
        case Errc::indivisible_length: return "IndivisibleLength";
        case Errc::not_targeted: return "NotTargeted";
        case Errc::missing_side_info: return "MissingSideInfo";
        case Errc::cyclic_subgraph: return "CyclicSubgraph";
        case Errc::class_too_large: return "ClassTooLarge";
        case Errc::graph_too_large: return "GraphTooLarge";
        case Errc::io_error: return "IoError";
    }
    return "Unknown";
}

Instance::Instance(int num_files, int num_users, int num_caches, Rat cache_size)
    : num_files_(num_files), num_users_(num_users), num_caches_(num_caches),
      cache_size_(std::move(cache_size)) {
    if (num_files_ < 1 || num_users_ < 1 || num_caches_ < 1)
        throw Error(Errc::invalid_argument, "N, K and Lambda must be positive");
    if (num_files_ < num_users_)
        throw Error(Errc::invalid_argument, "need at least as many files as users (N >= K)");
    if (num_caches_ > num_users_)
        throw Error(Errc::invalid_argument, "more caches than users (Lambda > K)");
    if (cache_size_ < Rat(Int(0)) || cache_size_ > Rat(Int(num_files_)))
        throw Error(Errc::invalid_argument, "cache size M must satisfy 0 <= M <= N");
}

bool Instance::has_integer_t() const {
    const Rat t = gamma() * Rat(Int(num_caches_));
    return t.denominator() == 1;
}

int Instance::integer_t() const {
    const Rat t = gamma() * Rat(Int(num_caches_));
    if (t.denominator() != 1)
        throw Error(Errc::non_integer_t,
                    "Lambda*gamma = " + rat_to_string(t) +
                        " is not an integer; use the memory-sharing envelope instead");
    return t.numerator().convert_to<int>();
}

Association::Association(std::vector<std::vector<int>> users_per_cache, int num_users)
    : users_(std::move(users_per_cache)), num_users_(num_users) {
    if (users_.empty()) throw Error(Errc::invalid_argument, "association needs at least one cache");
    cache_of_.assign(num_users_, 0);
    for (int cache = 1; cache <= num_caches(); ++cache) {
        for (int user : users_[cache - 1]) {
            if (user < 1 || user > num_users_)
                throw Error(Errc::invalid_argument,
                            "user index " + std::to_string(user) + " out of range");
            if (cache_of_[user - 1] != 0)
                throw Error(Errc::invalid_argument,
                            "user " + std::to_string(user) + " appears in two caches");
            cache_of_[user - 1] = cache;
        }
    }
    for (int user = 1; user <= num_users_; ++user)
        if (cache_of_[user - 1] == 0)
            throw Error(Errc::invalid_argument,
                        "user " + std::to_string(user) + " is not assigned to any cache");
}

Profile::Profile(std::vector<long> counts_desc) : counts_(std::move(counts_desc)) {
    if (counts_.empty()) throw Error(Errc::invalid_argument, "empty profile");
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 0) throw Error(Errc::invalid_argument, "negative profile entry");
        if (i > 0 && counts_[i] > counts_[i - 1])
            throw Error(Errc::invalid_argument, "profile must be sorted descending");
    }
}

long Profile::num_users() const {
    long sum = 0;
    for (long c : counts_) sum += c;
    return sum;
}

bool Profile::is_uniform() const {
    for (long c : counts_)
        if (c != counts_[0]) return false;
    return true;
}

std::string Profile::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) s += '-';
        s += std::to_string(counts_[i]);
    }
    return s;
}

Profile profile_of(const Association& assoc) {
    std::vector<long> counts;
    counts.reserve(assoc.num_caches());
    for (const auto& list : assoc.lists()) counts.push_back(static_cast<long>(list.size()));
    std::sort(counts.begin(), counts.end(), std::greater<>());
    return Profile(std::move(counts));
}

Profile padded_profile(const Profile& profile, int num_caches) {
    if (profile.num_caches() > num_caches)
        throw Error(Errc::invalid_argument, "profile has more parts than caches");
    if (profile.num_caches() == num_caches) return profile;
    std::vector<long> counts = profile.counts();
    counts.resize(num_caches, 0);
    return Profile(std::move(counts));
}

Association canonical_association(const Profile& profile) {
    std::vector<std::vector<int>> lists(profile.num_caches());
    int next = 1;
    for (int cache = 1; cache <= profile.num_caches(); ++cache)
        for (long j = 0; j < profile.count(cache); ++j) lists[cache - 1].push_back(next++);
    return Association(std::move(lists), static_cast<int>(profile.num_users()));
}

std::vector<Association> associations_up_to_relabeling(int num_users, int num_caches) {
    if (num_users < 1 || num_caches < 1)
        throw Error(Errc::invalid_argument, "need at least one user and one cache");
    std::vector<Association> out;
    std::vector<int> cache_of(num_users);
    std::function<void(int, int)> walk = [&](int user, int used) {
        if (user == num_users) {
            std::vector<std::vector<int>> lists(num_caches);
            for (int u = 0; u < num_users; ++u) lists[cache_of[u] - 1].push_back(u + 1);
            out.emplace_back(std::move(lists), num_users);
            return;
        }
        const int limit = std::min(num_caches, used + 1);
        for (int c = 1; c <= limit; ++c) {
            cache_of[user] = c;
            walk(user + 1, std::max(used, c));
        }
    };
    walk(0, 0);
    return out;
}

Demand::Demand(std::vector<int> files, int num_files) : files_(std::move(files)) {
    if (files_.empty()) throw Error(Errc::invalid_argument, "empty demand");
    for (int f : files_)
        if (f < 1 || f > num_files)
            throw Error(Errc::invalid_argument, "file index " + std::to_string(f) + " out of range");
}

bool Demand::is_worst_case() const {
    std::set<int> seen(files_.begin(), files_.end());
    return seen.size() == files_.size();
}

ReorderedDemand::ReorderedDemand(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {}

std::vector<int> ReorderedDemand::flattened() const {
    std::vector<int> out;
    for (const auto& b : blocks_) out.insert(out.end(), b.begin(), b.end());
    return out;
}

ReorderedDemand reorder_demand(const Association& assoc, const Demand& d) {
    if (d.num_users() != assoc.num_users())
        throw Error(Errc::invalid_argument, "demand length does not match user count");
    std::vector<std::vector<int>> blocks(assoc.num_caches());
    for (int cache = 1; cache <= assoc.num_caches(); ++cache)
        for (int user : assoc.users_of(cache)) blocks[cache - 1].push_back(d.file_of(user));
    return ReorderedDemand(std::move(blocks));
}

namespace {

Rat rat_from_json(const nlohmann::json& j, const char* field) {
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw Error(Errc::parse_error, std::string(field) + ": " + e.what());
        }
    }
    throw Error(Errc::parse_error,
                std::string(field) + " must be an integer or a \"p/q\" string");
}

}  // namespace

InstanceFile instance_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("invalid JSON: ") + e.what());
    }
    try {
        for (const char* field : {"N", "K", "Lambda", "M", "association", "demand"})
            if (!j.contains(field))
                throw Error(Errc::parse_error, std::string("missing field ") + field);
        const int n = j.at("N").get<int>();
        const int k = j.at("K").get<int>();
        const int lambda = j.at("Lambda").get<int>();
        const Rat m = rat_from_json(j.at("M"), "M");
        auto lists = j.at("association").get<std::vector<std::vector<int>>>();
        auto files = j.at("demand").get<std::vector<int>>();
        bool multi = false;
        if (j.contains("mode")) {
            const auto mode = j.at("mode").get<std::string>();
            if (mode == "multirequest") multi = true;
            else if (mode != "shared-cache")
                throw Error(Errc::parse_error, "unknown mode: " + mode);
        }
        if (static_cast<int>(lists.size()) != lambda)
            throw Error(Errc::parse_error, "association must have exactly Lambda lists");
        if (static_cast<int>(files.size()) != k)
            throw Error(Errc::parse_error, "demand must have exactly K entries");
        InstanceFile out{Instance(n, k, lambda, m), Association(std::move(lists), k),
                         Demand(std::move(files), n), multi};
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse_error, std::string("bad instance file: ") + e.what());
    }
}

InstanceFile instance_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::io_error, "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return instance_from_json(ss.str());
}

}  // namespace scl
