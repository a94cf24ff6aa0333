#ifndef TWIN_HANOI_H
#define TWIN_HANOI_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TwinHanoiStatus {
  TWIN_HANOI_STATUS_OK = 0,
  /**
   * Malformed configuration, peg, size or argument.
   */
  TWIN_HANOI_STATUS_INVALID_INPUT = 1,
  /**
   * Coupled configurations with different common-prefix lengths.
   */
  TWIN_HANOI_STATUS_INCOMPATIBLE = 2,
  /**
   * The request exceeds a size limit.
   */
  TWIN_HANOI_STATUS_CAPACITY_EXCEEDED = 3,
  TWIN_HANOI_STATUS_NULL_POINTER = 4,
  /**
   * A verification suite ran and at least one check failed.
   */
  TWIN_HANOI_STATUS_VERIFICATION_FAILED = 5,
  TWIN_HANOI_STATUS_INTERNAL = 6,
} TwinHanoiStatus;

/**
 * Opaque move sequence.
 */
typedef struct TwinHanoiMoveSeq TwinHanoiMoveSeq;

typedef struct TwinHanoiClosedForms {
  uint64_t a;
  uint64_t d;
  uint64_t m;
  /**
   * Floor of 11/3 * 2^n.
   */
  uint64_t gp_bound;
  uint64_t small_diam;
} TwinHanoiClosedForms;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Owned by the
 * library; valid until the next call on the same thread.
 */
const char *twin_hanoi_last_error(void);

/**
 * The twin-tower switching sequence on `n` disks (`alt` selects the second form, n >= 3).
 *
 * # Safety
 * `out` must be valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_tts(uint32_t n, bool alt, struct TwinHanoiMoveSeq **out);

/**
 * The small-disk shift sequence on `n` disks (`alt` needs even n >= 4).
 *
 * # Safety
 * `out` must be valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_sds(uint32_t n, bool alt, struct TwinHanoiMoveSeq **out);

/**
 * The shortest sequence from `x^n` to `y^n`.
 *
 * # Safety
 * `out` must be valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_corner(uint8_t x,
                                       uint8_t y,
                                       uint32_t n,
                                       struct TwinHanoiMoveSeq **out);

/**
 * A path between two single-tower configurations such as `"2120"`.
 *
 * # Safety
 * `from` and `to` are NUL-terminated strings; `out` is valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_transform(const char *from,
                                          const char *to,
                                          struct TwinHanoiMoveSeq **out);

/**
 * A sequence between two compatible coupled configurations `"top,bottom"`.
 *
 * # Safety
 * `from` and `to` are NUL-terminated strings; `out` is valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_solve_twin(const char *from,
                                           const char *to,
                                           struct TwinHanoiMoveSeq **out);

/**
 * Exact distance between two configurations; `coupled` selects `"top,bottom"` input.
 *
 * # Safety
 * `from` and `to` are NUL-terminated strings; `out` is valid for writing.
 */
enum TwinHanoiStatus twin_hanoi_distance(const char *from,
                                         const char *to,
                                         bool coupled,
                                         uint32_t *out);

/**
 * Closed-form values for `n` disks (`1 <= n <= 60`).
 *
 * # Safety
 * `out` must be valid for writing.
 */
enum TwinHanoiStatus twin_hanoi_closed_forms(uint32_t n, struct TwinHanoiClosedForms *out);

/**
 * Runs a verification suite (`"lemma"`, `"tts"`, `"sds"`, `"structure"`, `"gp"` or `"all"`)
 * and writes its JSON report. Returns `VerificationFailed` (with the report
 * still written) when a check fails.
 *
 * # Safety
 * `suite` is a NUL-terminated string; `out_json` is valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_verify(const char *suite,
                                       uint32_t max_n,
                                       uint32_t samples,
                                       uint64_t seed,
                                       char **out_json);

/**
 * Number of moves in `seq` (0 for null).
 *
 * # Safety
 * `seq` is null or a live handle.
 */
size_t twin_hanoi_seq_len(const struct TwinHanoiMoveSeq *seq);

/**
 * The sequence as text, right to left unless `applied_order`; free with
 * [`twin_hanoi_string_free`]. Null when `seq` is null.
 *
 * # Safety
 * `seq` is null or a live handle.
 */
char *twin_hanoi_seq_render(const struct TwinHanoiMoveSeq *seq, bool applied_order);

/**
 * Applies `seq` to a configuration (`"0120"`) or coupled configuration (`"0120,2201"`).
 *
 * # Safety
 * `seq` is a live handle, `config` a NUL-terminated string, `out` valid for writing a pointer.
 */
enum TwinHanoiStatus twin_hanoi_seq_apply(const struct TwinHanoiMoveSeq *seq,
                                          const char *config,
                                          char **out);

/**
 * Packed code of a configuration, as used in distance-cache files.
 *
 * # Safety
 * `config` is a NUL-terminated string; `out` is valid for writing.
 */
enum TwinHanoiStatus twin_hanoi_state_code(const char *config, uint64_t *out);

/**
 * # Safety
 * `seq` is null or a handle not yet freed.
 */
void twin_hanoi_seq_free(struct TwinHanoiMoveSeq *seq);

/**
 * # Safety
 * `s` is null or a string returned by this library and not yet freed.
 */
void twin_hanoi_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TWIN_HANOI_H */
