#ifndef SCL_H
#define SCL_H

/* Shared-cache coded caching: scheme simulator and exact bounds.
 *
 * Conventions:
 *   - Rationals cross this boundary as "p/q" strings ("11/6", "0/1").
 *     Inputs also accept bare integers ("2"). Returned strings are heap
 *     allocated; release them with scl_string_free.
 *   - Profiles are arrays of per-cache user counts, sorted descending,
 *     one entry per cache.
 *   - Every function that can fail returns an scl_status; the message of
 *     the most recent failure on the calling thread is available from
 *     scl_last_error.
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum scl_status {
    SCL_OK = 0,
    SCL_ERR_INVALID_ARGUMENT = 1,
    SCL_ERR_PARSE = 2,
    SCL_ERR_NON_INTEGER_T = 3,
    SCL_ERR_INDIVISIBLE_LENGTH = 4,
    SCL_ERR_NOT_TARGETED = 5,
    SCL_ERR_MISSING_SIDE_INFO = 6,
    SCL_ERR_CYCLIC_SUBGRAPH = 7,
    SCL_ERR_CLASS_TOO_LARGE = 8,
    SCL_ERR_GRAPH_TOO_LARGE = 9,
    SCL_ERR_IO = 10,
    SCL_ERR_INTERNAL = 11
} scl_status;

const char* scl_status_name(scl_status status);
const char* scl_last_error(void);

void scl_string_free(char* s);

/* ---- Instances ------------------------------------------------------- */

typedef struct scl_instance scl_instance;

scl_status scl_instance_from_json(const char* json_text, scl_instance** out);
scl_status scl_instance_from_file(const char* path, scl_instance** out);
void scl_instance_free(scl_instance* inst);

/* Accessors return -1 on a null handle. */
int scl_instance_num_files(const scl_instance* inst);
int scl_instance_num_users(const scl_instance* inst);
int scl_instance_num_caches(const scl_instance* inst);
int scl_instance_is_multirequest(const scl_instance* inst);

/* Number of caches holding each bit of a file; fails when Lambda*M/N is
 * not an integer. */
scl_status scl_instance_integer_t(const scl_instance* inst, int* out);

/* Fills profile[0..num_caches-1] with the association's sorted counts. */
scl_status scl_instance_profile(const scl_instance* inst, long* profile);

/* ---- Delivery -------------------------------------------------------- */

typedef struct scl_transcript scl_transcript;

/* Runs placement and delivery. payload_file_len > 0 attaches that many
 * deterministic pseudorandom bytes per file (seeded by `seed`) and checks
 * recovery bit for bit; 0 checks subfile bookkeeping only; negative picks
 * a small length divisible by the subpacketization. */
scl_status scl_simulate(const scl_instance* inst, long payload_file_len, uint64_t seed,
                        scl_transcript** out);
void scl_transcript_free(scl_transcript* tr);

int scl_transcript_num_transmissions(const scl_transcript* tr);
/* 1 when every user recovered its file, else 0 (-1 on null). */
int scl_transcript_all_ok(const scl_transcript* tr);
scl_status scl_transcript_delay(const scl_transcript* tr, char** out);
scl_status scl_transcript_to_json(const scl_transcript* tr, char** out);

/* ---- Bounds ---------------------------------------------------------- */

scl_status scl_closed_form_delay(const long* profile, int num_caches, int t, char** out);
scl_status scl_t_star(const long* profile, int num_caches, const char* gamma, char** out);
scl_status scl_uniform_t_star(long num_users, int num_caches, const char* gamma, char** out);
scl_status scl_lp_lower_bound(const long* profile, int num_caches, long num_files,
                              const char* mem, char** out);
scl_status scl_multirequest_t_star(const long* profile, int num_caches, const char* gamma,
                                   char** out);

/* ---- Sweeps and cross-checks ----------------------------------------- */

/* Tradeoff rows for the given profiles (flattened row-major, num_caches
 * entries each) at the anchor grid 0, 1/Lambda, ..., 1. profiles NULL
 * with num_profiles 0 sweeps every partition of num_users into at most
 * num_caches parts. as_json 0 emits CSV, nonzero JSON. */
scl_status scl_sweep(long num_users, int num_caches, const long* profiles, int num_profiles,
                     int as_json, char** out);

/* Runs the oracle cross-check battery and returns its JSON report.
 * all_ok (optional) receives 1 when every check passed. */
scl_status scl_verify(int max_users, int max_caches, int max_files, char** report_json,
                      int* all_ok);

#ifdef __cplusplus
}
#endif

#endif /* SCL_H */
