/* C API of the spinning cavity-magnon entanglement simulator.
 *
 * All functions returning spincav_status leave a human-readable message for
 * the calling thread in spincav_last_error() on failure. Strings returned
 * through char** out-parameters are owned by the caller and must be released
 * with spincav_string_free(). Result payloads are JSON (or CSV for sweeps in
 * csv format); frequencies are reported as ordinary f = omega/2pi in MHz.
 */
#ifndef SPINCAV_H
#define SPINCAV_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SPINCAV_API __declspec(dllexport)
#else
#define SPINCAV_API __attribute__((visibility("default")))
#endif

typedef enum spincav_status {
    SPINCAV_OK = 0,
    SPINCAV_ERR_INVALID_ARG = 1,
    SPINCAV_ERR_IO = 2,
    SPINCAV_ERR_CONFIG = 3,     /* malformed config or violated invariant */
    SPINCAV_ERR_DOMAIN = 4,     /* input outside model assumptions */
    SPINCAV_ERR_SINGULAR = 5,   /* numerically singular linear system */
    SPINCAV_ERR_NO_CONVERGENCE = 6,
    SPINCAV_ERR_UNSTABLE = 7,   /* no steady state exists */
    SPINCAV_ERR_NO_ROOT = 8,
    SPINCAV_ERR_NUMERIC = 9
} spincav_status;

/* Opaque handle holding a parsed config and its derived parameter set. */
typedef struct spincav_params spincav_params;

SPINCAV_API const char* spincav_version(void);
SPINCAV_API const char* spincav_status_name(spincav_status status);
SPINCAV_API const char* spincav_last_error(void);
SPINCAV_API void spincav_string_free(char* text);

SPINCAV_API spincav_status spincav_params_load(const char* path, spincav_params** out);
SPINCAV_API spincav_status spincav_params_from_json(const char* json_text,
                                                    spincav_params** out);
SPINCAV_API spincav_status spincav_params_to_json(const spincav_params* params,
                                                  char** json_out);
SPINCAV_API void spincav_params_free(spincav_params* params);

/* options_json (may be NULL for defaults):
 *   {"mode": "shift"|"self-consistent",   default chosen from the kerr variant
 *    "epsilon0_MHz": x | "power_mW": x,   drive; kerr drive power is the fallback
 *    "n_starts": n, "rotate_m1_real": bool}                                   */
SPINCAV_API spincav_status spincav_steady_state(const spincav_params* params,
                                                const char* options_json,
                                                char** json_out);

SPINCAV_API spincav_status spincav_stability(const spincav_params* params,
                                             char** json_out);

/* pair: "m1m2" (default if NULL), "am1" or "am2". Instability is reported in
 * the payload (stable=false, null E_N), not as an error. */
SPINCAV_API spincav_status spincav_entangle(const spincav_params* params,
                                            const char* pair, char** json_out);

SPINCAV_API spincav_status spincav_resonance(const spincav_params* params,
                                             char** json_out);

/* spec_json:
 *   {"preset": "fig1a"}
 * or
 *   {"axes": [{"parameter": "delta_m1", "min": -12, "max": 8, "points": 81},
 *             ...one or two axes...],
 *    "pair": "m1m2",
 *    "format": "json"|"csv",          default json
 *    "flip": "sagnac"|"kerr",         optional paired +/- sweep (json only)
 *    "max_workers": n}                optional worker cap                     */
SPINCAV_API spincav_status spincav_sweep(const spincav_params* params,
                                         const char* spec_json, char** out);

SPINCAV_API spincav_status spincav_presets(char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* SPINCAV_H */
