/* C interface to the ntt library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every function returns an ntt_status; on failure
 * ntt_last_error() describes the problem (thread-local, valid until the next
 * call on the same thread). Strings returned through char** out-parameters
 * are heap-allocated and must be released with ntt_string_free. */

#ifndef NTT_H
#define NTT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define NTT_API __declspec(dllexport)
#else
#define NTT_API __attribute__((visibility("default")))
#endif

typedef enum ntt_status {
  NTT_OK = 0,
  NTT_ERR_ARGUMENT = 1,  /* null pointer, bad option or invalid config */
  NTT_ERR_SYNTAX = 2,    /* malformed text */
  NTT_ERR_SCHEMA = 3,    /* well-formed text with the wrong shape */
  NTT_ERR_INVARIANT = 4, /* a law such as d-squared = 0 fails */
  NTT_ERR_REFERENCE = 5, /* a name does not resolve */
  NTT_ERR_IO = 6,
  NTT_ERR_INTERNAL = 7
} ntt_status;

typedef struct ntt_document ntt_document;
typedef struct ntt_report ntt_report;

NTT_API const char* ntt_version(void);
NTT_API const char* ntt_last_error(void);
NTT_API void ntt_string_free(char* s);

/* Documents */
NTT_API ntt_status ntt_document_parse(const char* text, ntt_document** out);
NTT_API ntt_status ntt_document_load(const char* path, ntt_document** out);
NTT_API void ntt_document_free(ntt_document* doc);
NTT_API ntt_status ntt_document_serialize(const ntt_document* doc, char** out);

/* Operations. Each returns a new document holding the inputs it used and
 * the objects and maps it constructed. */

/* Maps <map>.e : X -> <map>.C and <map>.m : <map>.C -> Y for the t_shift
 * torsion theory, with the homotopy <map>.witness from m o e to the map. */
NTT_API ntt_status ntt_factor(const ntt_document* doc, const char* map, int shift, ntt_document** out);
/* side is "ge" (tau_>=at, map <object>.ge -> object) or "lt"
 * (tau_<at, map object -> <object>.lt). */
NTT_API ntt_status ntt_truncate(const ntt_document* doc, const char* object, int at, const char* side,
                                ntt_document** out);
/* Stages <map>.stage<i> with maps <map>.tower<i>; the stage degrees are
 * listed in the "tower" parameter. */
NTT_API ntt_status ntt_postnikov(const ntt_document* doc, const char* map, ntt_document** out);
/* Writes the six normality conditions as a JSON object. */
NTT_API ntt_status ntt_normality(const ntt_document* doc, const char* object, int shift, char** out_json);

/* Property suite. config_json may be NULL or "" for the defaults. */
NTT_API ntt_status ntt_suite_run(const char* config_json, ntt_report** out);
NTT_API ntt_status ntt_report_parse(const char* json, ntt_report** out);
NTT_API void ntt_report_free(ntt_report* report);
/* Sets *ok to 1 when every property passed and to 0 otherwise. */
NTT_API ntt_status ntt_report_ok(const ntt_report* report, int* ok);
NTT_API ntt_status ntt_report_to_json(const ntt_report* report, char** out);
NTT_API ntt_status ntt_report_to_text(const ntt_report* report, char** out);
/* Re-checks the counterexample stored for a property; *reproduced is 1 when
 * the failure recurs. */
NTT_API ntt_status ntt_report_replay(const ntt_report* report, const char* property, int* reproduced,
                                     char** detail);

#ifdef __cplusplus
}
#endif

#endif
