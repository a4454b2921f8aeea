/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef BHE_H
#define BHE_H

#pragma once

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BheStatistics {
  BHE_STATISTICS_BOSON = 0,
  BHE_STATISTICS_FERMION = 1,
} BheStatistics;

/**
 * Result codes.
 */
typedef enum BheStatus {
  BHE_STATUS_OK = 0,
  BHE_STATUS_NULL_POINTER = 1,
  BHE_STATUS_DOMAIN = 2,
  BHE_STATUS_NAKED_SINGULARITY = 3,
  BHE_STATUS_SUPERRADIANT = 4,
  BHE_STATUS_TRUNCATION = 5,
  BHE_STATUS_NOT_SYMMETRIC = 6,
  BHE_STATUS_NO_CONVERGENCE = 7,
  BHE_STATUS_PANIC = 8,
} BheStatus;

/**
 * Opaque (4+n)-dimensional singly rotating black hole.
 */
typedef struct BheRotating BheRotating;

/**
 * Opaque d-dimensional Schwarzschild black hole.
 */
typedef struct BheSchwarzschild BheSchwarzschild;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or NULL. The pointer
 * stays valid until the next call into this library on the same thread.
 */
const char *bhe_last_error_message(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *bhe_version(void);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle pointer.
 */
enum BheStatus bhe_schwarzschild_new(uint32_t d, double r_h, struct BheSchwarzschild **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle pointer.
 */
enum BheStatus bhe_schwarzschild_from_mass(uint32_t d, double mass, struct BheSchwarzschild **out);

/**
 * # Safety
 * `h` must be NULL or a handle from `bhe_schwarzschild_*` not yet freed.
 */
void bhe_schwarzschild_free(struct BheSchwarzschild *h);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_schwarzschild_horizon_radius(const struct BheSchwarzschild *h, double *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_schwarzschild_mass(const struct BheSchwarzschild *h, double *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_schwarzschild_surface_gravity(const struct BheSchwarzschild *h, double *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_schwarzschild_temperature(const struct BheSchwarzschild *h, double *out);

/**
 * Tortoise coordinate r_* at radius r > r_h.
 *
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_schwarzschild_tortoise(const struct BheSchwarzschild *h, double r, double *out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle pointer.
 */
enum BheStatus bhe_rotating_new(uint32_t n, double mu, double a, struct BheRotating **out);

/**
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle pointer.
 */
enum BheStatus bhe_rotating_from_horizon(uint32_t n,
                                         double r_h,
                                         double a_star,
                                         struct BheRotating **out);

/**
 * # Safety
 * `h` must be NULL or a handle from `bhe_rotating_*` not yet freed.
 */
void bhe_rotating_free(struct BheRotating *h);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_rotating_horizon_radius(const struct BheRotating *h, double *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_rotating_surface_gravity(const struct BheRotating *h, double *out);

/**
 * # Safety
 * `h` must be a live handle and `out` a valid pointer to one double.
 */
enum BheStatus bhe_rotating_angular_velocity(const struct BheRotating *h, double *out);

/**
 * # Safety
 * `h` must be a live handle; `mass` and `angular_momentum` valid pointers.
 */
enum BheStatus bhe_rotating_mass_and_spin(const struct BheRotating *h,
                                          double *mass,
                                          double *angular_momentum);

/**
 * Squeezing parameter r for effective frequency ω̃ and surface gravity κ.
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_squeezing(double omega_eff,
                             double kappa,
                             enum BheStatistics statistics,
                             double *out);

/**
 * Mean occupation 1/(e^{2π ω̃/κ} ∓ 1).
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_occupation(double omega_eff,
                              double kappa,
                              enum BheStatistics statistics,
                              double *out);

/**
 * Closed-form logarithmic negativity.
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_log_negativity(double omega_eff,
                                  double kappa,
                                  enum BheStatistics statistics,
                                  double tol,
                                  double *out);

/**
 * Closed-form teleportation fidelity ((1 − e^{−π ω̃/κ})³ for bosons,
 * cos²r for fermions).
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_fidelity(double omega_eff,
                            double kappa,
                            enum BheStatistics statistics,
                            double *out);

/**
 * Bosonic fidelity cosh⁻⁶r obtained by constructing Bob's state.
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_fidelity_boson_construction(double r, double *out);

/**
 * Closed-form E_N from the squeezing parameter r.
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_log_negativity_from_r(double r,
                                         enum BheStatistics statistics,
                                         double tol,
                                         double *out);

/**
 * E_N from the spectrum of the partial transpose of the truncated state
 * (`n_trunc` is ignored for fermions).
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_oracle_log_negativity(double r,
                                         enum BheStatistics statistics,
                                         uintptr_t n_trunc,
                                         double *out);

/**
 * Bosonic E_N with each term of the state partially transposed on its own.
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_oracle_log_negativity_blockwise(double r, uintptr_t n_trunc, double *out);

/**
 * Teleportation fidelity from Bob's constructed state, for the input qubit
 * cos θ |0⟩ + sin θ |1⟩ and measurement outcome (i, j).
 *
 * # Safety
 * `out` must be a valid pointer to one double.
 */
enum BheStatus bhe_oracle_teleport_fidelity(double r,
                                            enum BheStatistics statistics,
                                            double theta,
                                            uint8_t i,
                                            uint8_t j,
                                            uintptr_t n_trunc,
                                            double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BHE_H */
