#pragma once

#include "core/model.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace scl {

// One subfile of the scheme's subpacketization: file n restricted to the
// caches in `label`, where |label| = t and label is sorted ascending.
struct SubfileId {
    int file = 0;
    std::vector<int> label;

    auto operator<=>(const SubfileId&) const = default;
    std::string to_string() const;  // "n:{a,b}"
};

using Bytes = std::vector<std::uint8_t>;

// Uncoded placement for integer t = Lambda*gamma: every file is split into
// binom(Lambda, t) equal subfiles, cache lambda stores those whose label
// contains lambda. Depends only on (N, Lambda, t), never on the
// association or the demand.
class Placement {
public:
    Placement(int num_files, int num_caches, int t);

    int num_files() const { return num_files_; }
    int num_caches() const { return num_caches_; }
    int t() const { return t_; }
    long subfiles_per_file() const { return subfiles_per_file_; }
    Rat subfile_size() const;  // in file units

    bool cache_holds(int cache, const SubfileId& id) const;
    // Z_lambda in deterministic order: files ascending, labels lexicographic.
    std::vector<SubfileId> cache_contents(int cache) const;

    // Payload mode.
    bool has_payloads() const { return file_len_ > 0; }
    long file_len() const { return file_len_; }
    const Bytes& file_bytes(int file) const;
    Bytes subfile_bytes(const SubfileId& id) const;

    std::string dump_json() const;  // cache index -> ["n:{T}", ...]

private:
    friend Placement attach_payloads(Placement p, long file_len, std::uint64_t seed);

    int num_files_;
    int num_caches_;
    int t_;
    long subfiles_per_file_;
    long file_len_ = 0;
    std::vector<Bytes> payloads_;  // indexed by file - 1 when in payload mode
};

// Throws non_integer_t unless Lambda*gamma is a non-negative integer.
Placement place(const Instance& inst);

// Fills in deterministic pseudorandom file contents; subfiles become
// contiguous equal slices in lexicographic label order. Throws
// indivisible_length unless binom(Lambda,t) divides file_len.
Placement attach_payloads(Placement p, long file_len, std::uint64_t seed);

Bytes xor_bytes(const Bytes& a, const Bytes& b);

}  // namespace scl
