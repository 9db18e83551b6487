#include "scl/scl.h"

#include "core/bounds.hpp"
#include "core/combinatorics.hpp"
#include "core/delivery.hpp"
#include "core/model.hpp"
#include "core/multirequest.hpp"
#include "core/sweep.hpp"
#include "core/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>
#include <vector>

struct scl_instance {
    scl::InstanceFile file;
};

struct scl_transcript {
    scl::DeliveryResult result;
};

namespace {

thread_local std::string g_last_error;

scl_status status_of(scl::Errc code) {
    switch (code) {
        case scl::Errc::invalid_argument: return SCL_ERR_INVALID_ARGUMENT;
        case scl::Errc::parse_error: return SCL_ERR_PARSE;
        case scl::Errc::non_integer_t: return SCL_ERR_NON_INTEGER_T;
        case scl::Errc::indivisible_length: return SCL_ERR_INDIVISIBLE_LENGTH;
        case scl::Errc::not_targeted: return SCL_ERR_NOT_TARGETED;
        case scl::Errc::missing_side_info: return SCL_ERR_MISSING_SIDE_INFO;
        case scl::Errc::cyclic_subgraph: return SCL_ERR_CYCLIC_SUBGRAPH;
        case scl::Errc::class_too_large: return SCL_ERR_CLASS_TOO_LARGE;
        case scl::Errc::graph_too_large: return SCL_ERR_GRAPH_TOO_LARGE;
        case scl::Errc::io_error: return SCL_ERR_IO;
    }
    return SCL_ERR_INTERNAL;
}

template <typename Fn>
scl_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SCL_OK;
    } catch (const scl::Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::invalid_argument& e) {
        g_last_error = e.what();
        return SCL_ERR_PARSE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SCL_ERR_INTERNAL;
    }
}

scl_status fail_invalid(const char* what) {
    g_last_error = what;
    return SCL_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

scl_status give_string(const std::string& s, char** out) {
    *out = dup_string(s);
    if (*out == nullptr) {
        g_last_error = "out of memory";
        return SCL_ERR_INTERNAL;
    }
    return SCL_OK;
}

scl::Profile profile_from(const long* profile, int num_caches) {
    if (profile == nullptr || num_caches < 1)
        throw scl::Error(scl::Errc::invalid_argument, "profile array required");
    return scl::Profile(std::vector<long>(profile, profile + num_caches));
}

}  // namespace

extern "C" {

const char* scl_status_name(scl_status status) {
    switch (status) {
        case SCL_OK: return "Ok";
        case SCL_ERR_INVALID_ARGUMENT: return "InvalidArgument";
        case SCL_ERR_PARSE: return "ParseError";
        case SCL_ERR_NON_INTEGER_T: return "NonIntegerT";
        case SCL_ERR_INDIVISIBLE_LENGTH: return "IndivisibleLength";
        case SCL_ERR_NOT_TARGETED: return "NotTargeted";
        case SCL_ERR_MISSING_SIDE_INFO: return "MissingSideInfo";
        case SCL_ERR_CYCLIC_SUBGRAPH: return "CyclicSubgraph";
        case SCL_ERR_CLASS_TOO_LARGE: return "ClassTooLarge";
        case SCL_ERR_GRAPH_TOO_LARGE: return "GraphTooLarge";
        case SCL_ERR_IO: return "IoError";
        case SCL_ERR_INTERNAL: return "Internal";
    }
    return "Unknown";
}

const char* scl_last_error(void) { return g_last_error.c_str(); }

void scl_string_free(char* s) { std::free(s); }

scl_status scl_instance_from_json(const char* json_text, scl_instance** out) {
    if (json_text == nullptr || out == nullptr) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = new scl_instance{scl::instance_from_json(json_text)}; });
}

scl_status scl_instance_from_file(const char* path, scl_instance** out) {
    if (path == nullptr || out == nullptr) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] { *out = new scl_instance{scl::instance_from_json_file(path)}; });
}

void scl_instance_free(scl_instance* inst) { delete inst; }

int scl_instance_num_files(const scl_instance* inst) {
    return inst == nullptr ? -1 : inst->file.instance.num_files();
}

int scl_instance_num_users(const scl_instance* inst) {
    return inst == nullptr ? -1 : inst->file.instance.num_users();
}

int scl_instance_num_caches(const scl_instance* inst) {
    return inst == nullptr ? -1 : inst->file.instance.num_caches();
}

int scl_instance_is_multirequest(const scl_instance* inst) {
    return inst == nullptr ? -1 : (inst->file.multirequest ? 1 : 0);
}

scl_status scl_instance_integer_t(const scl_instance* inst, int* out) {
    if (inst == nullptr || out == nullptr) return fail_invalid("null argument");
    return guarded([&] { *out = inst->file.instance.integer_t(); });
}

scl_status scl_instance_profile(const scl_instance* inst, long* profile) {
    if (inst == nullptr || profile == nullptr) return fail_invalid("null argument");
    return guarded([&] {
        const scl::Profile p = scl::profile_of(inst->file.association);
        for (int r = 1; r <= p.num_caches(); ++r) profile[r - 1] = p.count(r);
    });
}

scl_status scl_simulate(const scl_instance* inst, long payload_file_len, uint64_t seed,
                        scl_transcript** out) {
    if (inst == nullptr || out == nullptr) return fail_invalid("null argument");
    *out = nullptr;
    return guarded([&] {
        scl::DeliveryOptions opts;
        opts.payload_file_len = payload_file_len;
        opts.seed = seed;
        if (payload_file_len < 0) {
            const int t = inst->file.instance.integer_t();
            opts.payload_file_len =
                16 * scl::binom(inst->file.instance.num_caches(), t).convert_to<long>();
        }
        *out = new scl_transcript{scl::run_delivery(inst->file.instance, inst->file.association,
                                                    inst->file.demand, opts)};
    });
}

void scl_transcript_free(scl_transcript* tr) { delete tr; }

int scl_transcript_num_transmissions(const scl_transcript* tr) {
    return tr == nullptr ? -1 : static_cast<int>(tr->result.transmissions.size());
}

int scl_transcript_all_ok(const scl_transcript* tr) {
    return tr == nullptr ? -1 : (tr->result.all_ok() ? 1 : 0);
}

scl_status scl_transcript_delay(const scl_transcript* tr, char** out) {
    if (tr == nullptr || out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] { text = scl::rat_to_string(tr->result.delay); });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_transcript_to_json(const scl_transcript* tr, char** out) {
    if (tr == nullptr || out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] { text = tr->result.to_json(); });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_closed_form_delay(const long* profile, int num_caches, int t, char** out) {
    if (out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] {
        text = scl::rat_to_string(
            scl::closed_form_delay(profile_from(profile, num_caches), num_caches, t));
    });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_t_star(const long* profile, int num_caches, const char* gamma, char** out) {
    if (gamma == nullptr || out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] {
        text = scl::rat_to_string(scl::t_star(profile_from(profile, num_caches), num_caches,
                                              scl::rat_from_string(gamma)));
    });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_uniform_t_star(long num_users, int num_caches, const char* gamma, char** out) {
    if (gamma == nullptr || out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] {
        text = scl::rat_to_string(
            scl::uniform_t_star(num_users, num_caches, scl::rat_from_string(gamma)));
    });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_lp_lower_bound(const long* profile, int num_caches, long num_files,
                              const char* mem, char** out) {
    if (mem == nullptr || out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] {
        text = scl::rat_to_string(scl::lp_lower_bound(profile_from(profile, num_caches),
                                                      num_files, num_caches,
                                                      scl::rat_from_string(mem)));
    });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_multirequest_t_star(const long* profile, int num_caches, const char* gamma,
                                   char** out) {
    if (gamma == nullptr || out == nullptr) return fail_invalid("null argument");
    std::string text;
    const scl_status rc = guarded([&] {
        text = scl::rat_to_string(scl::multirequest_t_star(profile_from(profile, num_caches),
                                                           num_caches,
                                                           scl::rat_from_string(gamma)));
    });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_sweep(long num_users, int num_caches, const long* profiles, int num_profiles,
                     int as_json, char** out) {
    if (out == nullptr) return fail_invalid("null argument");
    if (num_profiles < 0 || (num_profiles > 0 && profiles == nullptr))
        return fail_invalid("profile rows required");
    std::string text;
    const scl_status rc = guarded([&] {
        scl::SweepSpec spec;
        spec.num_users = num_users;
        spec.num_caches = num_caches;
        spec.format = as_json != 0 ? scl::SweepFormat::json : scl::SweepFormat::csv;
        if (num_profiles == 0) {
            spec.all_partitions = true;
        } else {
            for (int row = 0; row < num_profiles; ++row)
                spec.profiles.emplace_back(profiles + static_cast<long>(row) * num_caches,
                                           profiles + static_cast<long>(row + 1) * num_caches);
        }
        text = scl::sweep_output(spec);
    });
    if (rc != SCL_OK) return rc;
    return give_string(text, out);
}

scl_status scl_verify(int max_users, int max_caches, int max_files, char** report_json,
                      int* all_ok) {
    if (report_json == nullptr) return fail_invalid("null argument");
    std::string text;
    bool ok = false;
    const scl_status rc = guarded([&] {
        scl::VerifyCaps caps;
        caps.max_users = max_users;
        caps.max_caches = max_caches;
        caps.max_files = max_files;
        const scl::VerifyReport report = scl::run_verify(caps);
        text = scl::verify_report_to_json(report);
        ok = report.all_ok();
    });
    if (rc != SCL_OK) return rc;
    if (all_ok != nullptr) *all_ok = ok ? 1 : 0;
    return give_string(text, report_json);
}

}  // extern "C"
