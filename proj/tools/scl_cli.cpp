#include "scl/scl.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;

[[noreturn]] void die(const std::string& what) {
    std::cerr << "error: " << what << "\n";
    std::exit(kExitError);
}

void check(scl_status rc, const std::string& context) {
    if (rc != SCL_OK)
        die(context + ": " + scl_status_name(rc) + " (" + scl_last_error() + ")");
}

std::string take_string(char* s) {
    std::string copy = s == nullptr ? "" : s;
    scl_string_free(s);
    return copy;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot open " + path + " for writing");
    out << content;
    if (!out) die("cannot write " + path);
}

uint64_t seed_from_env() {
    const char* env = std::getenv("SCL_SEED");
    if (env == nullptr || *env == '\0') return 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end == nullptr || *end != '\0') die("SCL_SEED must be a non-negative integer");
    return value;
}

// "3-2-2-1,8" -> one row per comma-separated profile, dash-separated
// counts, padded with zeros to num_caches entries.
std::vector<long> parse_profiles(const std::string& text, int num_caches, int& num_profiles) {
    std::vector<long> flat;
    num_profiles = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(start, comma - start);
        if (item.empty()) die("empty profile in --profiles");
        std::vector<long> counts;
        std::size_t pos = 0;
        while (pos <= item.size()) {
            std::size_t dash = item.find('-', pos);
            if (dash == std::string::npos) dash = item.size();
            const std::string digits = item.substr(pos, dash - pos);
            if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
                die("bad profile entry '" + item + "'");
            counts.push_back(std::stol(digits));
            pos = dash + 1;
            if (dash == item.size()) break;
        }
        if (static_cast<int>(counts.size()) > num_caches)
            die("profile '" + item + "' has more parts than caches");
        counts.resize(num_caches, 0);
        flat.insert(flat.end(), counts.begin(), counts.end());
        ++num_profiles;
        if (comma == text.size()) break;
        start = comma + 1;
    }
    return flat;
}

int cmd_simulate(const std::string& instance_path, const std::string& out_path,
                 long payload_bytes) {
    scl_instance* inst = nullptr;
    check(scl_instance_from_file(instance_path.c_str(), &inst), "loading " + instance_path);

    scl_transcript* tr = nullptr;
    const scl_status rc = scl_simulate(inst, payload_bytes, seed_from_env(), &tr);
    if (rc != SCL_OK) {
        scl_instance_free(inst);
        die("simulate: " + std::string(scl_status_name(rc)) + " (" + scl_last_error() + ")");
    }

    char* json = nullptr;
    check(scl_transcript_to_json(tr, &json), "rendering transcript");
    write_file(out_path, take_string(json));

    char* delay_str = nullptr;
    check(scl_transcript_delay(tr, &delay_str), "reading delay");
    const std::string delay = take_string(delay_str);

    const int num_caches = scl_instance_num_caches(inst);
    std::vector<long> profile(num_caches, 0);
    check(scl_instance_profile(inst, profile.data()), "reading profile");
    int t = 0;
    check(scl_instance_integer_t(inst, &t), "reading t");
    char* formula_str = nullptr;
    check(scl_closed_form_delay(profile.data(), num_caches, t, &formula_str), "closed form");
    const std::string formula = take_string(formula_str);

    const bool ok = scl_transcript_all_ok(tr) == 1;
    const int transmissions = scl_transcript_num_transmissions(tr);
    scl_transcript_free(tr);
    scl_instance_free(inst);

    std::cout << transmissions << " transmissions, delay " << delay << ", "
              << (ok ? "all users recovered" : "recovery FAILED") << "\n";
    if (!ok) return kExitMismatch;
    if (delay != formula) {
        std::cerr << "error: delay " << delay << " does not match closed form " << formula
                  << "\n";
        return kExitMismatch;
    }
    return 0;
}

int cmd_sweep(long num_users, int num_caches, const std::string& profiles_arg,
              const std::string& out_path, const std::string& format) {
    if (format != "csv" && format != "json") die("--format must be csv or json");
    std::vector<long> flat;
    int num_profiles = 0;
    if (profiles_arg != "all") flat = parse_profiles(profiles_arg, num_caches, num_profiles);
    char* out = nullptr;
    check(scl_sweep(num_users, num_caches, num_profiles == 0 ? nullptr : flat.data(),
                    num_profiles, format == "json" ? 1 : 0, &out),
          "sweep");
    write_file(out_path, take_string(out));
    return 0;
}

int cmd_verify(int max_users, int max_caches, int max_files, const std::string& out_path) {
    char* report = nullptr;
    int all_ok = 0;
    check(scl_verify(max_users, max_caches, max_files, &report, &all_ok), "verify");
    const std::string text = take_string(report);
    write_file(out_path, text);
    std::cout << (all_ok == 1 ? "all checks passed" : "CHECKS FAILED, see " + out_path) << "\n";
    return all_ok == 1 ? 0 : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coded caching with shared caches: simulator, bounds, cross-checks"};
    app.require_subcommand(1);

    auto* simulate = app.add_subcommand("simulate", "Run placement and delivery on an instance");
    std::string instance_path, sim_out;
    long payload_bytes = -1;
    simulate->add_option("--instance", instance_path, "Instance JSON file")->required();
    simulate->add_option("--out", sim_out, "Transcript JSON output")->required();
    simulate->add_option("--payload-bytes", payload_bytes,
                         "Bytes per file (0 = bookkeeping only, negative = auto)");

    auto* sweep = app.add_subcommand("sweep", "Tabulate optimal delay curves");
    long sweep_users = 0;
    int sweep_caches = 0;
    std::string profiles_arg, sweep_out, sweep_format = "csv";
    sweep->add_option("--k", sweep_users, "Number of users")->required();
    sweep->add_option("--caches", sweep_caches, "Number of caches")->required();
    sweep->add_option("--profiles", profiles_arg, "Comma-separated profiles like 3-2-1, or all")
        ->required();
    sweep->add_option("--out", sweep_out, "Output file")->required();
    sweep->add_option("--format", sweep_format, "csv or json");

    auto* verify = app.add_subcommand("verify", "Cross-check the library against its oracles");
    int max_users = 6, max_caches = 4, max_files = 6;
    std::string verify_out;
    verify->add_option("--max-users", max_users, "Largest user count to test");
    verify->add_option("--max-caches", max_caches, "Largest cache count to test");
    verify->add_option("--max-files", max_files, "Largest file count to test");
    verify->add_option("--out", verify_out, "Report JSON output")->required();

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) return cmd_simulate(instance_path, sim_out, payload_bytes);
    if (sweep->parsed()) return cmd_sweep(sweep_users, sweep_caches, profiles_arg, sweep_out,
                                          sweep_format);
    if (verify->parsed()) return cmd_verify(max_users, max_caches, max_files, verify_out);
    return kExitError;
}
