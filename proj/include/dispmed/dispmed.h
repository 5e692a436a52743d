/*
 * Copyright 2026 The dispmed Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libdispmed.
 *
 * Objects are opaque handles created by dm_*_create functions and released
 * with the matching dm_*_free. Every fallible call returns a dm_status; on
 * failure dm_last_error() describes the problem for the calling thread.
 * All units are SI; frequencies are imaginary-axis frequencies in rad/s.
 */
#ifndef DISPMED_H
#define DISPMED_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DISPMED_BUILDING)
#    define DM_API __declspec(dllexport)
#  else
#    define DM_API __declspec(dllimport)
#  endif
#else
#  define DM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dm_status {
  DM_OK = 0,
  DM_ERR_INVALID_ARGUMENT = 1,
  DM_ERR_RANGE = 2,
  DM_ERR_DIVERGENT = 3,
  DM_ERR_CONVERGENCE = 4,
  DM_ERR_SINGULAR = 5,
  DM_ERR_INTERNAL = 6
} dm_status;

typedef enum dm_stress { DM_ABRAHAM = 0, DM_MAXWELL = 1 } dm_stress;

typedef enum dm_extrapolation { DM_EXTRAPOLATE_CLAMP = 0, DM_EXTRAPOLATE_ERROR = 1 } dm_extrapolation;

typedef struct dm_response dm_response;
typedef struct dm_polarisability dm_polarisability;
typedef struct dm_system dm_system;

/* scale <= 0 selects the dominant resonance of the inputs. */
typedef struct dm_quadrature {
  double scale;
  double relative_tolerance;
  int max_doublings;
} dm_quadrature;

typedef struct dm_breakdown {
  double electric;
  double magnetic;
  double total;
  double error;
} dm_breakdown;

typedef struct dm_montecarlo {
  uint64_t samples;
  uint64_t seed;
  unsigned chunks;
  unsigned workers;
} dm_montecarlo;

typedef struct dm_expansion {
  double chi1_chi2;
  double chi1_chi;
  double chi2_chi;
  double chi_chi;
  double chi1_chi2_chi;
  double error[5];
  double third_order_ratio;
  double degree2_deviation[4];
  int hamaker_match;
  int three_particle_match;
} dm_expansion;

DM_API const char* dm_version(void);
DM_API const char* dm_last_error(void);
DM_API const char* dm_status_name(dm_status s);

DM_API dm_quadrature dm_quadrature_default(void);
DM_API dm_montecarlo dm_montecarlo_default(void);

/* Response functions (permittivity / permeability). */
DM_API dm_status dm_response_constant(double value, dm_response** out);
/* n oscillators given as parallel arrays (plasma strength, resonance, damping). */
DM_API dm_status dm_response_oscillators(const double* plasma, const double* resonance,
                                         const double* damping, size_t n, dm_response** out);
DM_API dm_status dm_response_table(const double* xi, const double* value, size_t n,
                                   dm_extrapolation rule, dm_response** out);
DM_API dm_status dm_response_scaled(const dm_response* r, double factor, dm_response** out);
DM_API dm_status dm_response_clone(const dm_response* r, dm_response** out);
DM_API void dm_response_free(dm_response* r);
DM_API dm_status dm_response_eval(const dm_response* r, double xi, double* out);
DM_API dm_status dm_response_susceptibility(const dm_response* r, double xi, double* out);
DM_API dm_status dm_response_validate_decay(const dm_response* r, double xi_max, int* out);

/* Molecular polarisabilities: sums of Lorentz terms. */
DM_API dm_status dm_polarisability_lorentz(const double* static_value, const double* resonance,
                                           const double* damping, size_t n,
                                           dm_polarisability** out);
DM_API void dm_polarisability_free(dm_polarisability* p);
DM_API dm_status dm_polarisability_eval(const dm_polarisability* p, double xi, double* out);
DM_API dm_status dm_clausius_mossotti(double density, const dm_polarisability* p, double xi,
                                      double* chi);

/* Two spheres in a medium. The system copies the response functions. */
DM_API dm_status dm_system_create(double radius1, const dm_response* eps1, const dm_response* mu1,
                                  double radius2, const dm_response* eps2, const dm_response* mu2,
                                  const dm_response* eps_medium, const dm_response* mu_medium,
                                  double separation, dm_system** out);
DM_API void dm_system_free(dm_system* s);
DM_API dm_status dm_system_dual(const dm_system* s, dm_system** out);
DM_API dm_status dm_system_with_separation(const dm_system* s, double separation, dm_system** out);
/* Both radii set to `radius`. */
DM_API dm_status dm_system_with_radius(const dm_system* s, double radius, dm_system** out);
/* Medium susceptibilities scaled by `factor`. */
DM_API dm_status dm_system_with_medium_scaled(const dm_system* s, double factor, dm_system** out);
DM_API dm_status dm_system_radii(const dm_system* s, double* radius1, double* radius2);
DM_API dm_status dm_system_separation(const dm_system* s, double* separation);
DM_API dm_status dm_system_medium_permittivity(const dm_system* s, double xi, double* out);

/* sphere is 1 or 2. */
DM_API dm_status dm_excess_alpha(const dm_system* s, int sphere, double xi, double* out);
DM_API dm_status dm_excess_beta(const dm_system* s, int sphere, double xi, double* out);

DM_API dm_status dm_c6_integrand(const dm_system* s, dm_stress choice, double xi, double* out);
DM_API dm_status dm_c6(const dm_system* s, dm_stress choice, const dm_quadrature* q,
                       dm_breakdown* out);
DM_API dm_status dm_c3_integrand(const dm_system* s, int sphere, dm_stress choice, double xi,
                                 double* out);
DM_API dm_status dm_c3(const dm_system* s, int sphere, dm_stress choice, const dm_quadrature* q,
                       dm_breakdown* out);
DM_API double dm_potential(double c6, double separation);
DM_API double dm_force(double c6, double separation);

/* Two-sphere C6 formula with molecular polarisabilities, in the system's medium. */
DM_API dm_status dm_c6_molecular(const dm_polarisability* a, const dm_polarisability* b,
                                 const dm_system* medium_from, dm_stress choice,
                                 const dm_quadrature* q, double* out);

/* Microscopic potentials. Positions are xyz triples. */
DM_API dm_status dm_vdw_coefficient(const dm_polarisability* a, const dm_polarisability* b,
                                    const dm_quadrature* q, double* out);
DM_API dm_status dm_vdw_coefficient_in_medium(const dm_polarisability* a,
                                              const dm_polarisability* b,
                                              const dm_system* medium_from,
                                              const dm_quadrature* q, double* out);
DM_API dm_status dm_vdw_pair(const dm_polarisability* a, const dm_polarisability* b,
                             double distance, const dm_quadrature* q, double* out);
DM_API dm_status dm_at_kernel(const double p0[3], const double p1[3], const double p2[3],
                              double* out);
DM_API dm_status dm_axilrod_teller(const dm_polarisability* a, const dm_polarisability* b,
                                   const dm_polarisability* c, const double p0[3],
                                   const double p1[3], const double p2[3], const dm_quadrature* q,
                                   double* out);
/* Species given by number density and polarisability (sphere 1, sphere 2, medium). */
DM_API dm_status dm_c6_hamaker(double density1, const dm_polarisability* p1, double density2,
                               const dm_polarisability* p2, double density,
                               const dm_polarisability* p, double radius1, double radius2,
                               const dm_quadrature* q, double* value, double* error);
DM_API dm_status dm_c6_threeparticle(double density1, const dm_polarisability* p1,
                                     double density2, const dm_polarisability* p2,
                                     double density, const dm_polarisability* p, double radius1,
                                     double radius2, const dm_quadrature* q, double* value,
                                     double* error);

/* Oracles. */
typedef double (*dm_integrand)(double xi, void* user);
/* On DM_ERR_CONVERGENCE value/error still hold the best estimate. */
DM_API dm_status dm_integrate(dm_integrand f, void* user, const dm_quadrature* q, double* value,
                              double* error);
DM_API dm_status dm_hamaker_lattice_sum(double radius1, double radius2, double separation,
                                        double pitch, double* out);
DM_API dm_status dm_hamaker_sphere_geometry(double radius1, double radius2, double separation,
                                            double* out);
DM_API double dm_lattice_volume_error_bound(double radius, double pitch);
DM_API dm_status dm_at_medium_mc(double separation, double radius1, double radius2,
                                 const dm_montecarlo* mc, double* estimate, double* std_error);
DM_API double dm_at_medium_point_limit(double separation);
DM_API dm_status dm_expand_c6_integrand(double radius1, double radius2, dm_stress choice,
                                        double h, dm_expansion* out);
DM_API double dm_hamaker_monomial_scale(double radius1, double radius2);

#ifdef __cplusplus
}
#endif

#endif /* DISPMED_H */
