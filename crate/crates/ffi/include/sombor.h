#ifndef SOMBOR_H
#define SOMBOR_H

#include <stddef.h>
#include <stdint.h>

// Result codes shared by every entry point.
typedef enum SomborStatus {
  SOMBOR_STATUS_OK = 0,
  SOMBOR_STATUS_NULL_POINTER = 1,
  SOMBOR_STATUS_INVALID_UTF8 = 2,
  // unknown family/kind/relation code or n out of range
  SOMBOR_STATUS_INVALID_ARGUMENT = 3,
  // no closed-form entry covers the cell
  SOMBOR_STATUS_NOT_COVERED = 4,
  SOMBOR_STATUS_NO_CONVERGENCE = 5,
  // `written` holds the required length
  SOMBOR_STATUS_BUFFER_TOO_SMALL = 6,
  SOMBOR_STATUS_INTERNAL = 7,
} SomborStatus;

// Opaque graph handle; release with [`sombor_graph_free`].
typedef struct SomborGraph SomborGraph;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Builds the `relation` super `kind` graph of the group `family` with parameter `n`.
//
// # Safety
// String arguments must be NUL-terminated; `out` must be writable.
enum SomborStatus sombor_graph_build(const char *family,
                                     uint32_t n,
                                     const char *kind,
                                     const char *relation,
                                     struct SomborGraph **out);

// # Safety
// `g` must come from [`sombor_graph_build`] and not be used afterwards.
void sombor_graph_free(struct SomborGraph *g);

// Vertex count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t sombor_graph_order(const struct SomborGraph *g);

// Edge count, or 0 for a null handle.
//
// # Safety
// `g` must be null or a live handle.
size_t sombor_graph_size(const struct SomborGraph *g);

// Writes the group name (e.g. "SD24") into `buf` including the NUL.
//
// # Safety
// `buf` must hold `capacity` bytes; `written` must be writable.
enum SomborStatus sombor_graph_group(const struct SomborGraph *g,
                                     char *buf,
                                     size_t capacity,
                                     size_t *written);

// Sombor eigenvalues in ascending order. Call with `capacity` 0 to learn
// the required length from `written`.
//
// # Safety
// `out` must hold `capacity` doubles; `written` must be writable.
enum SomborStatus sombor_graph_spectrum(const struct SomborGraph *g,
                                        double *out,
                                        size_t capacity,
                                        size_t *written);

// Verifies the cell against its primary closed-form entry (or `source`, if
// non-null) with default tolerances. The JSON report is returned in `out`
// and must be released with [`sombor_string_free`]. An uncovered cell
// returns `NotCovered`.
//
// # Safety
// String arguments must be NUL-terminated (or null for `source`); `out` must be writable.
enum SomborStatus sombor_verify_json(const char *family,
                                     uint32_t n,
                                     const char *kind,
                                     const char *relation,
                                     const char *source,
                                     char **out);

// # Safety
// `s` must be null or a string returned by this library.
void sombor_string_free(char *s);

// Message for the last failure on this thread ("" after a success). The
// pointer stays valid until the next call into the library.
const char *sombor_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SOMBOR_H */
