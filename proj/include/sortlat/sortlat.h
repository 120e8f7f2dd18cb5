#ifndef SORTLAT_H
#define SORTLAT_H

/* C interface to libsortlat. Strings returned through char** are owned by the
 * caller and released with sortlat_free. On failure a message is available
 * from sortlat_last_error() on the calling thread. */

#include <stddef.h>

#if defined(_WIN32)
#define SORTLAT_API __declspec(dllexport)
#else
#define SORTLAT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sortlat_status {
  SORTLAT_OK = 0,
  SORTLAT_ERR_NULL = 1,
  SORTLAT_ERR_PARSE = 2,
  SORTLAT_ERR_INVALID_ARGUMENT = 3,
  SORTLAT_ERR_CAP_REQUIRED = 4,
  SORTLAT_ERR_CAP_EXCEEDED = 5,
  SORTLAT_ERR_LIMIT_EXCEEDED = 6,
  SORTLAT_ERR_INVARIANT = 7,
  SORTLAT_ERR_INTERNAL = 8
} sortlat_status;

enum {
  SORTLAT_SUITE_SB = 1,
  SORTLAT_SUITE_MOBIUS = 2,
  SORTLAT_SUITE_PROPERTIES = 4,
  SORTLAT_SUITE_ANTIMATROID = 8,
  SORTLAT_SUITE_BIRKHOFF = 16,
  SORTLAT_SUITE_ALL = 31
};

typedef struct sortlat_lattice sortlat_lattice;

SORTLAT_API const char* sortlat_last_error(void);
SORTLAT_API const char* sortlat_status_string(sortlat_status status);
SORTLAT_API void sortlat_free(char* s);

/* Minimal polynomial of 2cos(pi/n). */
SORTLAT_API sortlat_status sortlat_field_minpoly(int n, char** out);

/* Rank of a diagram spec ("A3", "I2(5)", "tC2", "rank=3; 1-2; 2-3:4"). */
SORTLAT_API sortlat_status sortlat_diagram_rank(const char* diagram, int* rank);

/* Acyclic orientations, one per line: "1,2,3<TAB>s1→s2 s2→s3". */
SORTLAT_API sortlat_status sortlat_coxeter_elements(const char* diagram, char** out);

/* gamma: comma-separated permutation of 1..n, or NULL for 1,2,...,n.
 * cap < 0 means no cap; infinite groups require a cap. */
SORTLAT_API sortlat_status sortlat_lattice_create(const char* diagram, const char* gamma, int cap,
                                                  sortlat_lattice** out);
SORTLAT_API void sortlat_lattice_destroy(sortlat_lattice* lattice);

SORTLAT_API sortlat_status sortlat_lattice_counts(const sortlat_lattice* lattice, size_t* elements,
                                                  size_t* edges);
SORTLAT_API sortlat_status sortlat_lattice_element_word(const sortlat_lattice* lattice, size_t index,
                                                        char** out);
SORTLAT_API sortlat_status sortlat_lattice_dot(const sortlat_lattice* lattice, char** out);
SORTLAT_API sortlat_status sortlat_lattice_json(const sortlat_lattice* lattice, char** out);
SORTLAT_API sortlat_status sortlat_lattice_text(const sortlat_lattice* lattice, char** out);

/* Runs the selected suites. *passed is 1 when every theorem-backed check holds. */
SORTLAT_API sortlat_status sortlat_lattice_verify(const sortlat_lattice* lattice, unsigned suites, int* passed,
                                                  char** report);

/* Conjecture scan over every Coxeter element of a finite group.
 * *sound: pattern implies non-distributive everywhere; *consistent: also the converse. */
SORTLAT_API sortlat_status sortlat_scan(const char* diagram, int json, int* sound, int* consistent, char** out);

/* Compares the library against the brute-force oracles for one Coxeter element. */
SORTLAT_API sortlat_status sortlat_oracle_diff(const char* diagram, const char* gamma, int cap, int* agree,
                                               char** report);

#ifdef __cplusplus
}
#endif

#endif
