/* C API for the delta-kick cooling toolkit.
 *
 * All functions return dkc_status; on failure dkc_last_error() gives a
 * thread-local human-readable message. Handles are opaque and must be
 * released with dkc_scenario_free.
 */
#ifndef DKC_H
#define DKC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dkc_status {
    DKC_OK = 0,
    DKC_ERR_INTERNAL = 1,
    DKC_ERR_CONFIG = 2,  /* bad config / bad arguments */
    DKC_ERR_PHYSICS = 3, /* grid overflow, degenerate lens, resource limits */
} dkc_status;

typedef struct dkc_scenario dkc_scenario;

const char* dkc_version(void);

/* Thread-local message for the most recent failing call. */
const char* dkc_last_error(void);

/* Parse a scenario config from a file or from text. */
dkc_status dkc_scenario_open(const char* path, dkc_scenario** out);
dkc_status dkc_scenario_parse(const char* text, dkc_scenario** out);

/* Apply a "key = value" override (same paths as the config file). */
dkc_status dkc_scenario_set(dkc_scenario* sc, const char* key, const char* value);

void dkc_scenario_free(dkc_scenario* sc);

/* Run one command (design | simulate | sweep | sensitivity | wigner) and
 * write the data files plus manifest.txt into out_dir. */
dkc_status dkc_run(dkc_scenario* sc, const char* command, const char* out_dir,
                   int threads);

/* Emit the data behind one of the bundled figure presets
 * (fig1 | fig2 | fig4 | fig5) into out_dir. */
dkc_status dkc_reproduce(const char* figure, const char* out_dir, int threads);

/* Designed kick strengths for the scenario's widths and expansion time.
 * Writes up to capacity strengths into out and the count into n_out. */
dkc_status dkc_design_strengths(dkc_scenario* sc, double* out, int capacity,
                                int* n_out);

/* Ideal harmonic kick strength omega0^2 t_f / (1 + omega0^2 t_f^2). */
dkc_status dkc_harmonic_strength(double t_f, double* out);

#ifdef __cplusplus
}
#endif

#endif /* DKC_H */
