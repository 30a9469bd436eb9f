/* C interface to the multigraded filtration engine.
 *
 * Handles are opaque; every function that can fail returns an mgfil_status
 * and leaves a human-readable message in mgfil_last_error() (thread-local,
 * valid until the next call on the same thread).  Buffers returned through
 * out-parameters are owned by the caller and released with mgfil_buffer_free.
 */
#ifndef MGFIL_H
#define MGFIL_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mgfil_status {
  MGFIL_OK = 0,
  MGFIL_ERR_PARSE = 1,
  MGFIL_ERR_INVALID_ARGUMENT = 2,
  MGFIL_ERR_UNSUPPORTED = 3,
  MGFIL_ERR_INTERNAL = 4
} mgfil_status;

/* mirrors the CLI exit codes: 0 consistent, 2 not-applicable, 3 inconsistent */
typedef enum mgfil_verdict {
  MGFIL_VERDICT_CONSISTENT = 0,
  MGFIL_VERDICT_NOT_APPLICABLE = 2,
  MGFIL_VERDICT_INCONSISTENT = 3
} mgfil_verdict;

typedef struct mgfil_document mgfil_document;
typedef struct mgfil_bundle mgfil_bundle;

typedef struct mgfil_options {
  int box;     /* <= 0: use the document's value */
  int margin;  /* <  0: use the document's value */
  int offset;  /* <= 0: use the document's value */
  int threads; /* worker threads for box sweeps; <= 0 means 1 */
} mgfil_options;

void mgfil_options_init(mgfil_options* opt);

/* Parse an analysis document (see docs/specfile.md). */
mgfil_status mgfil_document_parse(const char* text, size_t len, mgfil_document** out);
void mgfil_document_free(mgfil_document* doc);

/* command: NULL/empty for the document's own, else one of
 * verify-all | hilbert | reductions | postulation | huneke | h1 */
mgfil_status mgfil_run(const mgfil_document* doc, const char* command,
                       const mgfil_options* opt, mgfil_bundle** out);
void mgfil_bundle_free(mgfil_bundle* bundle);

mgfil_verdict mgfil_bundle_verdict(const mgfil_bundle* bundle);

/* format: table | structured | plotdata.  *out receives a NUL-terminated
 * buffer of *out_len bytes (excluding the terminator). */
mgfil_status mgfil_emit(const mgfil_bundle* bundle, const char* format, char** out,
                        size_t* out_len);
void mgfil_buffer_free(char* buffer);

const char* mgfil_last_error(void);
const char* mgfil_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MGFIL_H */
