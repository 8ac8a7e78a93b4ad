#ifndef HOMPOIS_H
#define HOMPOIS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(HOMPOIS_BUILDING)
#define HP_API __attribute__((visibility("default")))
#else
#define HP_API
#endif

/* Every function returns an hp_status. On failure hp_last_error() describes
 * the problem; for HP_ERR_PRECONDITION and HP_ERR_POSTCONDITION the failing
 * check is available from hp_last_error_report(). Output handles are only
 * written on success and are owned by the caller. */
typedef enum {
  HP_OK = 0,
  HP_ERR_PARSE = 1,
  HP_ERR_DIMENSION = 2,
  HP_ERR_MISSING = 3,
  HP_ERR_UNBOUND = 4,
  HP_ERR_ARGUMENT = 5,
  HP_ERR_PRECONDITION = 6,
  HP_ERR_POSTCONDITION = 7,
  HP_ERR_IO = 8,
  HP_ERR_INTERNAL = 9
} hp_status;

typedef struct hp_algebra hp_algebra;
typedef struct hp_module hp_module;
typedef struct hp_matrix hp_matrix;
typedef struct hp_matrix_list hp_matrix_list;
typedef struct hp_coalgebra hp_coalgebra;
typedef struct hp_report hp_report;

/* Error state (per thread). */
HP_API const char* hp_last_error(void);
/* New handle to the report attached to the last error, or NULL. */
HP_API hp_report* hp_last_error_report(void);

/* Witness cap for reports produced by this thread; 0 restores the default. */
HP_API void hp_set_max_witnesses(size_t n);

HP_API void hp_string_free(char* s);

/* Documents. `params` is "k=v,k2=v2" or NULL; text is JSON. */
HP_API hp_status hp_algebra_parse(const char* text, const char* params, hp_algebra** out);
HP_API hp_status hp_algebra_serialize(const hp_algebra* a, char** out);
HP_API size_t hp_algebra_dim(const hp_algebra* a);
/* Named map of the algebra (e.g. "alpha", "D") as a matrix. */
HP_API hp_status hp_algebra_map(const hp_algebra* a, const char* name, hp_matrix** out);
HP_API void hp_algebra_free(hp_algebra* a);

HP_API hp_status hp_module_parse(const char* text, const char* params, hp_module** out);
HP_API hp_status hp_module_serialize(const hp_module* m, char** out);
HP_API void hp_module_free(hp_module* m);

HP_API hp_status hp_matrix_parse(const char* text, const char* params, hp_matrix** out);
HP_API hp_status hp_matrix_serialize(const hp_matrix* m, char** out);
HP_API void hp_matrix_free(hp_matrix* m);

HP_API size_t hp_matrix_list_size(const hp_matrix_list* l);
HP_API const hp_matrix* hp_matrix_list_get(const hp_matrix_list* l, size_t i);
/* {"count": n, "basis": [matrices...]} */
HP_API hp_status hp_matrix_list_serialize(const hp_matrix_list* l, const char* key, char** out);
HP_API void hp_matrix_list_free(hp_matrix_list* l);

HP_API hp_status hp_coalgebra_parse(const char* text, const char* params, hp_coalgebra** out);
HP_API hp_status hp_coalgebra_serialize(const hp_coalgebra* c, char** out);
HP_API void hp_coalgebra_free(hp_coalgebra* c);

/* Reports. */
HP_API int hp_report_passed(const hp_report* r);
HP_API size_t hp_report_failures(const hp_report* r);
/* Human-readable text, or with as_json != 0 the document
 * {command, inputs, verdict, witnesses, sub_reports, flags, notes}. */
HP_API hp_status hp_report_render(const hp_report* r, int as_json, const char* command, const char* const* inputs,
                                  size_t n_inputs, char** out);
HP_API void hp_report_free(hp_report* r);

/* Class names: comm-hom-assoc, hom-lie, hom-poisson, transposed-hom-poisson
 * (alias transposed-poisson), hom-pre-lie, hom-pre-lie-poisson. */

/* Axioms. */
HP_API hp_status hp_check_class(const hp_algebra* a, const char* cls, hp_report** out);
HP_API hp_status hp_check_consequences(const hp_algebra* a, hp_report** out);
HP_API hp_status hp_check_poisson_intersection(const hp_algebra* a, hp_report** out);
HP_API hp_status hp_check_multiplicative(const hp_algebra* a, const char* op, hp_report** out);
HP_API hp_status hp_check_derivation(const hp_algebra* a, const char* op, const hp_matrix* d, hp_report** out);
/* ops: comma-separated op names. */
HP_API hp_status hp_check_morphism(const hp_algebra* src, const hp_algebra* dst, const hp_matrix* f, const char* ops,
                                   hp_report** out);

/* Constructions. */
HP_API hp_status hp_yau_twist(const hp_algebra* a, const char* cls, const hp_matrix* g, hp_algebra** out);
HP_API hp_status hp_compose_twist(const hp_algebra* a, const char* cls, const hp_matrix* g, hp_algebra** out);
HP_API hp_status hp_derived_algebra(const hp_algebra* a, const char* cls, unsigned n, int type, hp_algebra** out);
/* h is an expression over basis names, e.g. "e1+e2". */
HP_API hp_status hp_alpha_h_twist(const hp_algebra* a, const char* h, hp_algebra** out);
HP_API hp_status hp_bracket_from_derivation(const hp_algebra* a, const hp_matrix* d, hp_algebra** out);
HP_API hp_status hp_bracket_from_two_derivations(const hp_algebra* a, const hp_matrix* d1, const hp_matrix* d2,
                                                 hp_algebra** out);
HP_API hp_status hp_tensor_product(const hp_algebra* a1, const hp_algebra* a2, const char* cls, hp_algebra** out);
HP_API hp_status hp_sub_adjacent(const hp_algebra* a, const char* cls, hp_algebra** out);
HP_API hp_status hp_twisting_report(const hp_algebra* a, const hp_matrix* g, hp_report** out);

/* Representations. */
HP_API hp_status hp_check_module(const hp_algebra* a, const hp_module* m, const char* cls, hp_report** out);
HP_API hp_status hp_regular_module(const hp_algebra* a, const char* cls, hp_module** out);
HP_API hp_status hp_semidirect_product(const hp_algebra* a, const hp_module* m, const char* cls, hp_algebra** out);
HP_API hp_status hp_dual_representation(const hp_algebra* a, const hp_module* m, hp_module** dual,
                                        hp_report** report);
HP_API hp_status hp_bimodule_from_morphism(const hp_algebra* src, const hp_algebra* dst, const hp_matrix* f,
                                           hp_module** out);
HP_API hp_status hp_twisted_bimodule(const hp_algebra* a, const hp_module* m, const hp_matrix* g_alg,
                                     const hp_matrix* g_mod, hp_algebra** alg_out, hp_module** mod_out);
HP_API hp_status hp_rep_commutator(const hp_algebra* a, const hp_module* m, const char* cls, hp_module** out);

/* Matched pairs: ab is A acting on B, ba is B acting on A. */
HP_API hp_status hp_check_matched_pair(const hp_algebra* a, const hp_algebra* b, const hp_module* ab,
                                       const hp_module* ba, const char* cls, hp_report** out);
HP_API hp_status hp_build_double(const hp_algebra* a, const hp_algebra* b, const hp_module* ab, const hp_module* ba,
                                 const char* cls, hp_algebra** out);
HP_API hp_status hp_check_double_symmetry(const hp_algebra* a, const hp_algebra* b, const hp_module* ab,
                                          const hp_module* ba, const char* cls, hp_report** out);

/* Duality. */
HP_API hp_status hp_coadjoint_actions(const hp_algebra* a, hp_module** out);
HP_API hp_status hp_check_invariant_form(const hp_algebra* a, const hp_matrix* form, hp_report** out);
HP_API hp_status hp_build_double_dual(const hp_algebra* a, const hp_algebra* a_star, hp_algebra** out);
HP_API hp_status hp_check_manin_triple(const hp_algebra* a, const hp_algebra* a_star, hp_report** out);
/* The coalgebra must carry comultiplications "delta" and "Delta". */
HP_API hp_status hp_check_bialgebra(const hp_algebra* a, const hp_coalgebra* c, hp_report** out);
HP_API hp_status hp_equivalence_report(const hp_algebra* a, const hp_algebra* a_star, hp_report** out);

/* Operators. */
HP_API hp_status hp_check_o_operator(const hp_algebra* a, const hp_module* m, const hp_matrix* t, const char* cls,
                                     hp_report** out);
HP_API hp_status hp_check_rota_baxter(const hp_algebra* a, const hp_matrix* r, const char* cls, hp_report** out);
HP_API hp_status hp_induced_products(const hp_algebra* a, const hp_module* m, const hp_matrix* t, const char* cls,
                                     hp_algebra** out);
HP_API hp_status hp_o_operator_is_morphism(const hp_algebra* a, const hp_module* m, const hp_matrix* t,
                                           const char* cls, hp_report** out);
HP_API hp_status hp_compatible_pre_lie(const hp_algebra* a, const hp_module* m, const hp_matrix* t,
                                       hp_algebra** out);
HP_API hp_status hp_rota_baxter_induced(const hp_algebra* a, const hp_matrix* r, hp_algebra** out);
/* commuting_with: map name or NULL. */
HP_API hp_status hp_derivation_space(const hp_algebra* a, const char* op, const char* commuting_with,
                                     hp_matrix_list** out);

/* Catalog. */
HP_API size_t hp_catalog_size(void);
HP_API const char* hp_catalog_id(size_t i);
/* One line per entry: id, class, description. */
HP_API hp_status hp_catalog_list(char** out);
/* Symbolic document when params is NULL, otherwise the instantiated algebra. */
HP_API hp_status hp_catalog_show(const char* id, const char* params, char** out);
HP_API hp_status hp_catalog_algebra(const char* id, const char* params, hp_algebra** out);
HP_API hp_status hp_catalog_class(const char* id, const char** cls);

#ifdef __cplusplus
}
#endif

#endif
