/* C interface to the paramconn engine.
 *
 * All functions returning int use the shared status codes:
 *   0  success
 *   2  validation error (malformed config, value out of contract)
 *   3  capacity error (rank beyond the enumeration bounds)
 *   4  chain certificate failed verification
 *   5  report witness failed verification
 *   6  selftest failure
 * On any nonzero status, pconn_last_error() describes the failure for the
 * calling thread. Strings returned through char** are heap-allocated and must
 * be released with pconn_string_free().
 */
#ifndef PARAMCONN_H
#define PARAMCONN_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pconn_setup pconn_setup;

/* Raw setup JSON for a named preset ("sl2", "sl6-q7", "sl2-outer"). */
int pconn_preset_json(const char* name, char** out_json);

/* Validates and normalizes a raw setup config (JSON text). */
int pconn_setup_from_json(const char* json_text, pconn_setup** out);
void pconn_setup_free(pconn_setup* setup);

/* Normalized setup echo as JSON. */
int pconn_setup_json(const pconn_setup* setup, char** out_json);

/* Component partition report. mode is "direct" or "exact"; jobs <= 0 selects
 * hardware parallelism. */
int pconn_components_json(const pconn_setup* setup, const char* mode, int jobs,
                          char** out_json);

/* Certified chain from w (disjoint-cycle notation) to the base vertex. */
int pconn_chain_json(const pconn_setup* setup, const char* w_cycles,
                     char** out_json);

/* Re-verifies every edge witness in a serialized component report. */
int pconn_verify_report_json(const char* report_json);

/* Cocycle group of a torus-action config; reports rank, invariant factors and
 * the connectedness verdict. */
int pconn_torus_json(const char* config_json, char** out_json);

/* Congruence sweep plus golden-value suite. */
int pconn_selftest(void);

/* Message of the most recent failure on this thread; empty string if none. */
const char* pconn_last_error(void);

void pconn_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* PARAMCONN_H */
