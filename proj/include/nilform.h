/* nilform C API: exact invariant-form calculus on nilmanifolds with
 * invariant complex structures.
 *
 * The library is driven by JSON requests. A request names a command and
 * carries the input objects inline:
 *
 *   {
 *     "command": "obstruct",
 *     "algebra": {"n": 4, "params": ["a1"], "d": {"4": "a1*e[1,2|]"}},
 *     "metric":  {"metric": "diagonal"},
 *     "curve":   {"curve_param": "t", "phi": {"1|1": "t*a1"}},
 *     "subs":    {"a1": "1/2+i"}
 *   }
 *
 * Commands: validate, classify, metric-check, integrability, bc, bc-class,
 * harmonic, obstruct, theorem-check, jet-check, pullback. The response is a
 * JSON document, byte-deterministic for a fixed request.
 *
 * Status codes: 0 ok, 2 parse error, 3 math-domain error (singular operator,
 * vanishing denominator, non-integrable point, ...), 4 refused (rank
 * questions over symbolic parameters).
 */
#ifndef NILFORM_H
#define NILFORM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nf_session nf_session;

/* Create/destroy a session. Sessions are independent; one session may run
 * any number of requests sequentially. */
nf_session* nf_session_new(void);
void nf_session_free(nf_session* s);

/* Run one request. On return, *response_json points to a NUL-terminated JSON
 * document (a result on status 0, an error report otherwise); release it with
 * nf_free. Returns the status code. `s` may be NULL for one-shot use, in
 * which case error state is not retained. */
int nf_run(nf_session* s, const char* request_json, char** response_json);

/* Message of the last failing request on this session, or "" if none. The
 * pointer stays valid until the next nf_run on the same session. */
const char* nf_last_error(const nf_session* s);

void nf_free(char* p);

const char* nf_version(void);

#ifdef __cplusplus
}
#endif

#endif /* NILFORM_H */
