#include "core/delivery.hpp"

#include "core/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace scl {

namespace {

std::string bytes_to_hex(const Bytes& b) {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(b.size() * 2);
    for (auto byte : b) {
        s += digits[byte >> 4];
        s += digits[byte & 0xF];
    }
    return s;
}

}  // namespace

bool DeliveryResult::all_ok() const {
    return std::all_of(per_user_ok.begin(), per_user_ok.end(), [](bool b) { return b; });
}

std::string DeliveryResult::to_json() const {
    nlohmann::json j;
    j["transmissions"] = nlohmann::json::array();
    for (const auto& tx : transmissions) {
        nlohmann::json t;
        t["round"] = tx.round;
        t["Q"] = tx.cache_set;
        t["chi_Q"] = tx.targets;
        std::vector<std::string> summands;
        for (const auto& id : tx.summands) summands.push_back(id.to_string());
        t["summands"] = summands;
        if (!tx.payload.empty()) t["payload_hex"] = bytes_to_hex(tx.payload);
        j["transmissions"].push_back(std::move(t));
    }
    j["delay"] = rat_to_string(delay);
    j["per_user_ok"] = per_user_ok;
    return j.dump(2);
}

std::vector<int> cache_order_by_population(const Association& assoc) {
    std::vector<int> order(assoc.num_caches());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return assoc.users_of(a).size() > assoc.users_of(b).size();
    });
    return order;
}

std::vector<Round> rounds(const Association& assoc) {
    const auto order = cache_order_by_population(assoc);
    const std::size_t max_pop = assoc.users_of(order[0]).size();
    std::vector<Round> out;
    for (std::size_t j = 1; j <= max_pop; ++j) {
        Round r;
        r.index = static_cast<int>(j);
        for (int cache : order) {
            const auto& users = assoc.users_of(cache);
            if (users.size() >= j) r.users.push_back(users[j - 1]);
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<Transmission> transmissions_for_round(const Round& round, const Association& assoc,
                                                  const Demand& d, int t) {
    const int lambda = assoc.num_caches();
    const auto order = cache_order_by_population(assoc);
    const int j = round.index;

    std::vector<Transmission> out;
    // Q ranges over (t+1)-subsets of cache ranks, lexicographically; the
    // subfile labels below are in original cache labels.
    for (const auto& ranks : subsets_of_size(lambda, t + 1)) {
        std::vector<int> caches;  // original labels of Q, ascending
        caches.reserve(ranks.size());
        for (int r : ranks) caches.push_back(order[r - 1]);
        std::sort(caches.begin(), caches.end());

        Transmission tx;
        tx.round = j;
        tx.cache_set = caches;
        for (int cache : caches) {
            const auto& users = assoc.users_of(cache);
            if (static_cast<int>(users.size()) < j) continue;
            const int user = users[j - 1];
            std::vector<int> label;
            label.reserve(t);
            for (int other : caches)
                if (other != cache) label.push_back(other);
            tx.targets.push_back(user);
            tx.target_caches.push_back(cache);
            tx.summands.push_back(SubfileId{d.file_of(user), std::move(label)});
        }
        if (!tx.targets.empty()) out.push_back(std::move(tx));
    }
    return out;
}

std::pair<SubfileId, Bytes> decode(int user, const Transmission& tx, const Placement& p,
                                   const Association& assoc) {
    const auto it = std::find(tx.targets.begin(), tx.targets.end(), user);
    if (it == tx.targets.end())
        throw Error(Errc::not_targeted,
                    "user " + std::to_string(user) + " is not served by this transmission");
    const std::size_t idx = static_cast<std::size_t>(it - tx.targets.begin());
    const int cache = assoc.cache_of(user);

    Bytes decoded = tx.payload;
    for (std::size_t i = 0; i < tx.summands.size(); ++i) {
        if (i == idx) continue;
        if (!p.cache_holds(cache, tx.summands[i]))
            throw Error(Errc::missing_side_info,
                        "summand " + tx.summands[i].to_string() + " is not in cache " +
                            std::to_string(cache));
        if (!decoded.empty()) decoded = xor_bytes(decoded, p.subfile_bytes(tx.summands[i]));
    }
    return {tx.summands[idx], std::move(decoded)};
}

DeliveryResult run_delivery(const Instance& inst, const Association& assoc, const Demand& d,
                            const DeliveryOptions& opts) {
    if (assoc.num_caches() != inst.num_caches() || assoc.num_users() != inst.num_users())
        throw Error(Errc::invalid_argument, "association does not match the instance");
    if (d.num_users() != inst.num_users())
        throw Error(Errc::invalid_argument, "demand does not match the instance");

    const int t = inst.integer_t();
    Placement p = place(inst);
    if (opts.payload_file_len > 0) p = attach_payloads(std::move(p), opts.payload_file_len, opts.seed);

    DeliveryResult result;
    result.rounds = rounds(assoc);
    result.decoded.resize(inst.num_users());
    // Broadcast-decoded bytes per user, keyed by subfile label.
    std::vector<std::map<std::vector<int>, Bytes>> decoded_bytes(inst.num_users());
    const long slice = p.has_payloads() ? p.file_len() / p.subfiles_per_file() : 0;

    for (const auto& round : result.rounds) {
        for (auto& tx : transmissions_for_round(round, assoc, d, t)) {
            if (p.has_payloads()) {
                Bytes payload(slice, 0);
                for (const auto& id : tx.summands) payload = xor_bytes(payload, p.subfile_bytes(id));
                tx.payload = std::move(payload);
            }
            for (int user : tx.targets) {
                auto [id, bytes] = decode(user, tx, p, assoc);
                if (p.has_payloads()) decoded_bytes[user - 1][id.label] = std::move(bytes);
                result.decoded[user - 1].push_back(std::move(id));
            }
            result.transmissions.push_back(std::move(tx));
        }
    }

    // Recovery check: cached subfiles plus decoded ones must cover the
    // requested file. In payload mode the file is reassembled from the
    // cache slices and the XOR-decoded bytes, then compared bit for bit.
    result.per_user_ok.assign(inst.num_users(), false);
    const auto all_labels = subsets_of_size(inst.num_caches(), t);
    for (int user = 1; user <= inst.num_users(); ++user) {
        const int cache = assoc.cache_of(user);
        const int file = d.file_of(user);
        std::set<std::vector<int>> have;
        for (const auto& label : all_labels)
            if (std::find(label.begin(), label.end(), cache) != label.end()) have.insert(label);
        for (const auto& id : result.decoded[user - 1])
            if (id.file == file) have.insert(id.label);
        bool ok = have.size() == all_labels.size();
        if (ok && p.has_payloads()) {
            Bytes assembled;
            for (const auto& label : all_labels) {
                const bool cached =
                    std::find(label.begin(), label.end(), cache) != label.end();
                if (cached) {
                    Bytes part = p.subfile_bytes(SubfileId{file, label});
                    assembled.insert(assembled.end(), part.begin(), part.end());
                } else {
                    auto it = decoded_bytes[user - 1].find(label);
                    if (it == decoded_bytes[user - 1].end()) {
                        ok = false;
                        break;
                    }
                    assembled.insert(assembled.end(), it->second.begin(), it->second.end());
                }
            }
            ok = ok && assembled == p.file_bytes(file);
        }
        result.per_user_ok[user - 1] = ok;
    }

    result.delay = Rat(Int(static_cast<long>(result.transmissions.size())),
                       Int(p.subfiles_per_file()));
    return result;
}

Int round_transmission_count(const Profile& profile, int t, int round_index) {
    const int lambda = profile.num_caches();
    long served = 0;
    for (int rank = 1; rank <= lambda; ++rank)
        if (profile.count(rank) >= round_index) ++served;
    return binom(lambda, t + 1) - binom(lambda - served, t + 1);
}

Rat closed_form_delay(const Profile& profile, int num_caches, int t) {
    if (num_caches != profile.num_caches())
        throw Error(Errc::invalid_argument, "profile length does not match cache count");
    if (t < 0 || t > num_caches)
        throw Error(Errc::invalid_argument, "t must lie in [0, Lambda]");
    Int num = 0;
    for (int r = 1; r <= num_caches - t; ++r)
        num += Int(profile.count(r)) * binom(num_caches - r, t);
    return Rat(num, binom(num_caches, t));
}

}  // namespace scl
