// Copyright 2026 The dispmed Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dispmed/dispmed.h"

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "dispmed/dispersion.hpp"
#include "dispmed/errors.hpp"
#include "dispmed/microscopic.hpp"
#include "dispmed/oracles.hpp"

struct dm_response {
  dispmed::ResponseFunction fn;
};

struct dm_polarisability {
  dispmed::MolecularPolarisability fn;
};

struct dm_system {
  dispmed::TwoSphereSystem sys;
};

namespace {

using namespace dispmed;

thread_local std::string last_error;

template <class F>
dm_status guard(F&& body) {
  try {
    body();
    last_error.clear();
    return DM_OK;
  } catch (const ConvergenceError& e) {
    last_error = e.what();
    return DM_ERR_CONVERGENCE;
  } catch (const InvalidArgument& e) {
    last_error = e.what();
    return DM_ERR_INVALID_ARGUMENT;
  } catch (const RangeError& e) {
    last_error = e.what();
    return DM_ERR_RANGE;
  } catch (const DivergentIntegral& e) {
    last_error = e.what();
    return DM_ERR_DIVERGENT;
  } catch (const SingularGeometry& e) {
    last_error = e.what();
    return DM_ERR_SINGULAR;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DM_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DM_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DM_ERR_INTERNAL;
  }
}

template <class T>
const T& deref(const T* p, const char* what) {
  if (!p)
    throw InvalidArgument(std::string("null ") + what);
  return *p;
}

template <class T>
T& out_ref(T* p) {
  if (!p)
    throw InvalidArgument("null output pointer");
  return *p;
}

StressChoice to_choice(dm_stress c) {
  switch (c) {
  case DM_ABRAHAM:
    return StressChoice::Abraham;
  case DM_MAXWELL:
    return StressChoice::Maxwell;
  }
  throw InvalidArgument("unknown stress choice");
}

QuadratureSpec to_spec(const dm_quadrature* q) {
  const dm_quadrature c = q ? *q : dm_quadrature_default();
  QuadratureSpec spec;
  if (c.scale > 0.0)
    spec.scale = c.scale;
  spec.relative_tolerance = c.relative_tolerance;
  spec.max_doublings = c.max_doublings;
  return spec;
}

const SphereSpec& pick_sphere(const dm_system* s, int sphere) {
  const auto& sys = deref(s, "system").sys;
  if (sphere == 1)
    return sys.sphere1;
  if (sphere == 2)
    return sys.sphere2;
  throw InvalidArgument("sphere index must be 1 or 2");
}

dm_breakdown to_c(const CoefficientBreakdown& b) {
  return {b.electric_term, b.magnetic_term, b.total, b.quadrature_error_estimate};
}

template <class T, class... Args>
void emit(T** out, Args&&... args) {
  if (!out)
    throw InvalidArgument("null output handle");
  *out = new T{std::forward<Args>(args)...};
}

MolecularSpecies species(double density, const dm_polarisability* p) {
  return {density, deref(p, "polarisability").fn};
}

} // namespace

extern "C" {

const char* dm_version(void) { return "1.0.0"; }

const char* dm_last_error(void) { return last_error.c_str(); }

const char* dm_status_name(dm_status s) {
  switch (s) {
  case DM_OK:
    return "ok";
  case DM_ERR_INVALID_ARGUMENT:
    return "invalid argument";
  case DM_ERR_RANGE:
    return "range error";
  case DM_ERR_DIVERGENT:
    return "divergent integral";
  case DM_ERR_CONVERGENCE:
    return "convergence error";
  case DM_ERR_SINGULAR:
    return "singular geometry";
  case DM_ERR_INTERNAL:
    return "internal error";
  }
  return "unknown";
}

dm_quadrature dm_quadrature_default(void) {
  const QuadratureSpec spec;
  return {0.0, spec.relative_tolerance, spec.max_doublings};
}

dm_montecarlo dm_montecarlo_default(void) {
  const MonteCarloSpec spec;
  return {spec.samples, spec.seed, spec.chunks, 1u};
}

dm_status dm_response_constant(double value, dm_response** out) {
  return guard([&] { emit(out, ResponseFunction::constant(value)); });
}

dm_status dm_response_oscillators(const double* plasma, const double* resonance,
                                  const double* damping, size_t n, dm_response** out) {
  return guard([&] {
    if (n > 0 && (!plasma || !resonance || !damping))
      throw InvalidArgument("null oscillator arrays");
    std::vector<Oscillator> terms;
    for (size_t k = 0; k < n; ++k)
      terms.emplace_back(plasma[k], resonance[k], damping[k]);
    emit(out, ResponseFunction::oscillators(std::move(terms)));
  });
}

dm_status dm_response_table(const double* xi, const double* value, size_t n, dm_extrapolation rule,
                            dm_response** out) {
  return guard([&] {
    if (n > 0 && (!xi || !value))
      throw InvalidArgument("null table arrays");
    const auto r = rule == DM_EXTRAPOLATE_ERROR ? Extrapolation::Error : Extrapolation::ClampToUnity;
    emit(out, ResponseFunction::tabulated({xi, xi + n}, {value, value + n}, r));
  });
}

dm_status dm_response_scaled(const dm_response* r, double factor, dm_response** out) {
  return guard([&] { emit(out, deref(r, "response").fn.scaled(factor)); });
}

dm_status dm_response_clone(const dm_response* r, dm_response** out) {
  return guard([&] { emit(out, deref(r, "response").fn); });
}

void dm_response_free(dm_response* r) { delete r; }

dm_status dm_response_eval(const dm_response* r, double xi, double* out) {
  return guard([&] { out_ref(out) = eval_response(deref(r, "response").fn, xi); });
}

dm_status dm_response_susceptibility(const dm_response* r, double xi, double* out) {
  return guard([&] { out_ref(out) = susceptibility(deref(r, "response").fn, xi); });
}

dm_status dm_response_validate_decay(const dm_response* r, double xi_max, int* out) {
  return guard([&] { out_ref(out) = validate_decay(deref(r, "response").fn, xi_max) ? 1 : 0; });
}

dm_status dm_polarisability_lorentz(const double* static_value, const double* resonance,
                                    const double* damping, size_t n, dm_polarisability** out) {
  return guard([&] {
    if (n > 0 && (!static_value || !resonance || !damping))
      throw InvalidArgument("null polarisability arrays");
    std::vector<MolecularPolarisability::Term> terms;
    for (size_t k = 0; k < n; ++k)
      terms.push_back({static_value[k], resonance[k], damping[k]});
    emit(out, MolecularPolarisability(std::move(terms)));
  });
}

void dm_polarisability_free(dm_polarisability* p) { delete p; }

dm_status dm_polarisability_eval(const dm_polarisability* p, double xi, double* out) {
  return guard([&] { out_ref(out) = deref(p, "polarisability").fn(xi); });
}

dm_status dm_clausius_mossotti(double density, const dm_polarisability* p, double xi,
                               double* chi) {
  return guard([&] { out_ref(chi) = clausius_mossotti_dilute(species(density, p), xi); });
}

dm_status dm_system_create(double radius1, const dm_response* eps1, const dm_response* mu1,
                           double radius2, const dm_response* eps2, const dm_response* mu2,
                           const dm_response* eps_medium, const dm_response* mu_medium,
                           double separation, dm_system** out) {
  return guard([&] {
    TwoSphereSystem sys{
        {radius1, deref(eps1, "sphere1 permittivity").fn, deref(mu1, "sphere1 permeability").fn},
        {radius2, deref(eps2, "sphere2 permittivity").fn, deref(mu2, "sphere2 permeability").fn},
        {deref(eps_medium, "medium permittivity").fn, deref(mu_medium, "medium permeability").fn},
        separation};
    sys.validate();
    emit(out, std::move(sys));
  });
}

void dm_system_free(dm_system* s) { delete s; }

dm_status dm_system_dual(const dm_system* s, dm_system** out) {
  return guard([&] { emit(out, duality_transform(deref(s, "system").sys)); });
}

dm_status dm_system_with_separation(const dm_system* s, double separation, dm_system** out) {
  return guard([&] {
    auto sys = deref(s, "system").sys;
    sys.separation = separation;
    sys.validate();
    emit(out, std::move(sys));
  });
}

dm_status dm_system_with_radius(const dm_system* s, double radius, dm_system** out) {
  return guard([&] {
    auto sys = deref(s, "system").sys;
    sys.sphere1.radius = radius;
    sys.sphere2.radius = radius;
    sys.validate();
    emit(out, std::move(sys));
  });
}

dm_status dm_system_with_medium_scaled(const dm_system* s, double factor, dm_system** out) {
  return guard([&] {
    auto sys = deref(s, "system").sys;
    sys.medium.permittivity = sys.medium.permittivity.scaled(factor);
    sys.medium.permeability = sys.medium.permeability.scaled(factor);
    emit(out, std::move(sys));
  });
}

dm_status dm_system_radii(const dm_system* s, double* radius1, double* radius2) {
  return guard([&] {
    const auto& sys = deref(s, "system").sys;
    out_ref(radius1) = sys.sphere1.radius;
    out_ref(radius2) = sys.sphere2.radius;
  });
}

dm_status dm_system_separation(const dm_system* s, double* separation) {
  return guard([&] { out_ref(separation) = deref(s, "system").sys.separation; });
}

dm_status dm_system_medium_permittivity(const dm_system* s, double xi, double* out) {
  return guard([&] { out_ref(out) = deref(s, "system").sys.medium.permittivity.value(xi); });
}

dm_status dm_excess_alpha(const dm_system* s, int sphere, double xi, double* out) {
  return guard([&] {
    out_ref(out) = excess_alpha(pick_sphere(s, sphere), s->sys.medium, xi);
  });
}

dm_status dm_excess_beta(const dm_system* s, int sphere, double xi, double* out) {
  return guard([&] {
    out_ref(out) = excess_beta(pick_sphere(s, sphere), s->sys.medium, xi);
  });
}

dm_status dm_c6_integrand(const dm_system* s, dm_stress choice, double xi, double* out) {
  return guard([&] {
    const auto& sys = deref(s, "system").sys;
    out_ref(out) = c6_integrand(sys.sphere1, sys.sphere2, sys.medium, to_choice(choice), xi);
  });
}

dm_status dm_c6(const dm_system* s, dm_stress choice, const dm_quadrature* q, dm_breakdown* out) {
  return guard([&] { out_ref(out) = to_c(c6(deref(s, "system").sys, to_choice(choice), to_spec(q))); });
}

dm_status dm_c3_integrand(const dm_system* s, int sphere, dm_stress choice, double xi,
                          double* out) {
  return guard([&] {
    out_ref(out) = c3_integrand(pick_sphere(s, sphere), s->sys.medium, to_choice(choice), xi);
  });
}

dm_status dm_c3(const dm_system* s, int sphere, dm_stress choice, const dm_quadrature* q,
                dm_breakdown* out) {
  return guard([&] {
    out_ref(out) = to_c(c3(pick_sphere(s, sphere), s->sys.medium, to_choice(choice), to_spec(q)));
  });
}

double dm_potential(double c6_total, double separation) {
  return separation > 0.0 ? potential(c6_total, separation) : 0.0;
}

double dm_force(double c6_total, double separation) {
  return separation > 0.0 ? force_magnitude(c6_total, separation) : 0.0;
}

dm_status dm_c6_molecular(const dm_polarisability* a, const dm_polarisability* b,
                          const dm_system* medium_from, dm_stress choice, const dm_quadrature* q,
                          double* out) {
  return guard([&] {
    out_ref(out) = c6_molecular(deref(a, "polarisability").fn, deref(b, "polarisability").fn,
                                deref(medium_from, "system").sys.medium, to_choice(choice),
                                to_spec(q))
                       .value;
  });
}

dm_status dm_vdw_coefficient(const dm_polarisability* a, const dm_polarisability* b,
                             const dm_quadrature* q, double* out) {
  return guard([&] {
    out_ref(out) =
        vdw_coefficient(deref(a, "polarisability").fn, deref(b, "polarisability").fn, to_spec(q));
  });
}

dm_status dm_vdw_coefficient_in_medium(const dm_polarisability* a, const dm_polarisability* b,
                                       const dm_system* medium_from, const dm_quadrature* q,
                                       double* out) {
  return guard([&] {
    out_ref(out) = vdw_coefficient_in_medium(deref(a, "polarisability").fn,
                                             deref(b, "polarisability").fn,
                                             deref(medium_from, "system").sys.medium.permittivity,
                                             to_spec(q));
  });
}

dm_status dm_vdw_pair(const dm_polarisability* a, const dm_polarisability* b, double distance,
                      const dm_quadrature* q, double* out) {
  return guard([&] {
    out_ref(out) = vdw_pair(deref(a, "polarisability").fn, deref(b, "polarisability").fn,
                            distance, to_spec(q));
  });
}

namespace {
TripletGeometry triplet(const double* p0, const double* p1, const double* p2) {
  if (!p0 || !p1 || !p2)
    throw InvalidArgument("null position");
  return {{Vec3{p0[0], p0[1], p0[2]}, Vec3{p1[0], p1[1], p1[2]}, Vec3{p2[0], p2[1], p2[2]}}};
}
} // namespace

dm_status dm_at_kernel(const double p0[3], const double p1[3], const double p2[3], double* out) {
  return guard([&] { out_ref(out) = at_kernel(triplet(p0, p1, p2)); });
}

dm_status dm_axilrod_teller(const dm_polarisability* a, const dm_polarisability* b,
                            const dm_polarisability* c, const double p0[3], const double p1[3],
                            const double p2[3], const dm_quadrature* q, double* out) {
  return guard([&] {
    out_ref(out) = axilrod_teller(deref(a, "polarisability").fn, deref(b, "polarisability").fn,
                                  deref(c, "polarisability").fn, triplet(p0, p1, p2), to_spec(q));
  });
}

dm_status dm_c6_hamaker(double density1, const dm_polarisability* p1, double density2,
                        const dm_polarisability* p2, double density, const dm_polarisability* p,
                        double radius1, double radius2, const dm_quadrature* q, double* value,
                        double* error) {
  return guard([&] {
    const auto prof = ChiProfile::from_species(species(density1, p1), species(density2, p2),
                                               species(density, p));
    const auto r = c6_hamaker(prof, radius1, radius2, to_spec(q));
    out_ref(value) = r.value;
    if (error)
      *error = r.error;
  });
}

dm_status dm_c6_threeparticle(double density1, const dm_polarisability* p1, double density2,
                              const dm_polarisability* p2, double density,
                              const dm_polarisability* p, double radius1, double radius2,
                              const dm_quadrature* q, double* value, double* error) {
  return guard([&] {
    const auto prof = ChiProfile::from_species(species(density1, p1), species(density2, p2),
                                               species(density, p));
    const auto r = c6_threeparticle(prof, radius1, radius2, to_spec(q));
    out_ref(value) = r.value;
    if (error)
      *error = r.error;
  });
}

dm_status dm_integrate(dm_integrand f, void* user, const dm_quadrature* q, double* value,
                       double* error) {
  return guard([&] {
    if (!f)
      throw InvalidArgument("null integrand");
    try {
      const auto r = integrate_semiinfinite([&](double xi) { return f(xi, user); }, to_spec(q));
      out_ref(value) = r.value;
      if (error)
        *error = r.error;
    } catch (const ConvergenceError& e) {
      out_ref(value) = e.best_estimate();
      if (error)
        *error = e.error_estimate();
      throw;
    }
  });
}

dm_status dm_hamaker_lattice_sum(double radius1, double radius2, double separation, double pitch,
                                 double* out) {
  return guard([&] { out_ref(out) = hamaker_lattice_sum(radius1, radius2, separation, pitch); });
}

dm_status dm_hamaker_sphere_geometry(double radius1, double radius2, double separation,
                                     double* out) {
  return guard([&] { out_ref(out) = hamaker_sphere_geometry(radius1, radius2, separation); });
}

double dm_lattice_volume_error_bound(double radius, double pitch) {
  return lattice_volume_error_bound(radius, pitch);
}

dm_status dm_at_medium_mc(double separation, double radius1, double radius2,
                          const dm_montecarlo* mc, double* estimate, double* std_error) {
  return guard([&] {
    const dm_montecarlo c = mc ? *mc : dm_montecarlo_default();
    const MonteCarloSpec spec{c.samples, c.seed, c.chunks};
    const auto r = at_medium_mc(separation, radius1, radius2, spec, c.workers);
    out_ref(estimate) = r.estimate;
    if (std_error)
      *std_error = r.standard_error;
  });
}

double dm_at_medium_point_limit(double separation) { return at_medium_point_limit(separation); }

dm_status dm_expand_c6_integrand(double radius1, double radius2, dm_stress choice, double h,
                                 dm_expansion* out) {
  return guard([&] {
    const auto rep = verify_consistency(to_choice(choice), h, radius1, radius2);
    const auto& e = rep.expansion;
    dm_expansion& o = out_ref(out);
    o.chi1_chi2 = e.chi1_chi2;
    o.chi1_chi = e.chi1_chi;
    o.chi2_chi = e.chi2_chi;
    o.chi_chi = e.chi_chi;
    o.chi1_chi2_chi = e.chi1_chi2_chi;
    for (int k = 0; k < 5; ++k)
      o.error[k] = e.error[k];
    o.third_order_ratio = e.third_order_ratio;
    for (int k = 0; k < 4; ++k)
      o.degree2_deviation[k] = rep.degree2_deviation[k];
    o.hamaker_match = rep.hamaker_match ? 1 : 0;
    o.three_particle_match = rep.three_particle_match ? 1 : 0;
  });
}

double dm_hamaker_monomial_scale(double radius1, double radius2) {
  return hamaker_monomial_scale(radius1, radius2);
}

} // extern "C"
