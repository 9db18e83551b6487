#include "core/placement.hpp"

#include "core/combinatorics.hpp"

#include <algorithm>
#include <random>

#include <json.hpp>

namespace scl {

std::string SubfileId::to_string() const {
    std::string s = std::to_string(file) + ":{";
    for (std::size_t i = 0; i < label.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(label[i]);
    }
    s += '}';
    return s;
}

Placement::Placement(int num_files, int num_caches, int t)
    : num_files_(num_files), num_caches_(num_caches), t_(t) {
    if (t_ < 0 || t_ > num_caches_)
        throw Error(Errc::invalid_argument, "t must lie in [0, Lambda]");
    subfiles_per_file_ = binom(num_caches_, t_).convert_to<long>();
}

Rat Placement::subfile_size() const { return Rat(Int(1), Int(subfiles_per_file_)); }

bool Placement::cache_holds(int cache, const SubfileId& id) const {
    return std::find(id.label.begin(), id.label.end(), cache) != id.label.end();
}

std::vector<SubfileId> Placement::cache_contents(int cache) const {
    std::vector<SubfileId> out;
    const auto labels = subsets_of_size(num_caches_, t_);
    for (int n = 1; n <= num_files_; ++n)
        for (const auto& label : labels)
            if (std::find(label.begin(), label.end(), cache) != label.end())
                out.push_back(SubfileId{n, label});
    return out;
}

const Bytes& Placement::file_bytes(int file) const {
    if (!has_payloads()) throw Error(Errc::invalid_argument, "placement has no payloads");
    return payloads_[file - 1];
}

Bytes Placement::subfile_bytes(const SubfileId& id) const {
    const Bytes& whole = file_bytes(id.file);
    const long slice = file_len_ / subfiles_per_file_;
    const long offset = subset_rank(num_caches_, id.label) * slice;
    return Bytes(whole.begin() + offset, whole.begin() + offset + slice);
}

std::string Placement::dump_json() const {
    nlohmann::json j = nlohmann::json::object();
    for (int cache = 1; cache <= num_caches_; ++cache) {
        std::vector<std::string> entries;
        for (const auto& id : cache_contents(cache)) entries.push_back(id.to_string());
        j[std::to_string(cache)] = entries;
    }
    return j.dump(2);
}

Placement place(const Instance& inst) {
    return Placement(inst.num_files(), inst.num_caches(), inst.integer_t());
}

Placement attach_payloads(Placement p, long file_len, std::uint64_t seed) {
    if (file_len <= 0 || file_len % p.subfiles_per_file_ != 0)
        throw Error(Errc::indivisible_length,
                    "file length " + std::to_string(file_len) + " is not divisible into " +
                        std::to_string(p.subfiles_per_file_) + " subfiles");
    p.file_len_ = file_len;
    p.payloads_.assign(p.num_files_, Bytes());
    for (int n = 1; n <= p.num_files_; ++n) {
        // One generator per file so contents do not depend on N.
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(n));
        Bytes& buf = p.payloads_[n - 1];
        buf.resize(file_len);
        for (long i = 0; i < file_len; ++i) buf[i] = static_cast<std::uint8_t>(rng() & 0xFF);
    }
    return p;
}

Bytes xor_bytes(const Bytes& a, const Bytes& b) {
    if (a.size() != b.size())
        throw Error(Errc::invalid_argument, "XOR of unequal-length payloads");
    Bytes out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
    return out;
}

}  // namespace scl
