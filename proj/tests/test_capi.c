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

#include <math.h>
#include <stdio.h>
#include <string.h>

#include "dispmed/dispmed.h"

static int failures = 0;

#define CHECK(cond)                                                   \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: CHECK(%s) failed\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define CHECK_OK(call) CHECK((call) == DM_OK)

static double rel(double a, double b) { return fabs(a - b) / fabs(b); }

static double arctan_kernel(double xi, void* user) {
  const double a = *(const double*)user;
  return a * a / (a * a + xi * xi);
}

static dm_response* oscillator(double wp, double w0) {
  dm_response* r = NULL;
  const double g = 0.0;
  CHECK_OK(dm_response_oscillators(&wp, &w0, &g, 1, &r));
  return r;
}

static void test_errors(void) {
  dm_response* r = NULL;
  CHECK(dm_response_constant(0.5, &r) == DM_ERR_INVALID_ARGUMENT);
  CHECK(r == NULL);
  CHECK(strlen(dm_last_error()) > 0);
  CHECK(dm_response_constant(2.0, NULL) == DM_ERR_INVALID_ARGUMENT);
  CHECK(strcmp(dm_status_name(DM_ERR_DIVERGENT), "divergent integral") == 0);
  CHECK(strlen(dm_version()) > 0);

  const double xi[2] = {1e15, 1e16}, v[2] = {2.0, 1.5};
  CHECK_OK(dm_response_table(xi, v, 2, DM_EXTRAPOLATE_ERROR, &r));
  double out = 0.0;
  CHECK(dm_response_eval(r, 2e16, &out) == DM_ERR_RANGE);
  CHECK_OK(dm_response_eval(r, 1e16, &out));
  CHECK(out == 1.5);
  dm_response_free(r);
  dm_response_free(NULL);
}

static void test_two_spheres(void) {
  dm_response* eps = oscillator(1e16, 1e16);
  dm_response* one = NULL;
  CHECK_OK(dm_response_constant(1.0, &one));
  dm_system* sys = NULL;
  CHECK_OK(dm_system_create(1e-9, eps, one, 1e-9, eps, one, one, one, 1e-8, &sys));

  const dm_quadrature q = dm_quadrature_default();
  dm_breakdown a, m;
  CHECK_OK(dm_c6(sys, DM_ABRAHAM, &q, &a));
  CHECK_OK(dm_c6(sys, DM_MAXWELL, &q, &m));
  CHECK(rel(a.total, -5.708037397731963e-74) < 1e-9);
  CHECK(rel(m.total, a.total) < 1e-12);
  CHECK(a.magnetic == 0.0);
  CHECK(rel(dm_potential(-6.4e-75, 1e-8), -6.4e-27) < 1e-13);
  CHECK(rel(dm_force(-7e-75, 1e-8), -4.2e-18) < 1e-13);

  double alpha = 0.0;
  CHECK_OK(dm_excess_alpha(sys, 1, 0.0, &alpha));
  CHECK(alpha > 0.0);
  CHECK(dm_excess_alpha(sys, 3, 0.0, &alpha) == DM_ERR_INVALID_ARGUMENT);

  dm_system* dual = NULL;
  CHECK_OK(dm_system_dual(sys, &dual));
  dm_breakdown d;
  CHECK_OK(dm_c6(dual, DM_ABRAHAM, &q, &d));
  CHECK(d.electric == 0.0);
  CHECK(rel(d.total, a.total) < 1e-12);

  dm_system* near = NULL;
  CHECK(dm_system_with_separation(sys, 1.5e-9, &near) == DM_ERR_INVALID_ARGUMENT);
  CHECK(near == NULL);

  dm_breakdown c3;
  CHECK_OK(dm_c3(sys, 1, DM_ABRAHAM, &q, &c3));
  CHECK(c3.total < 0.0);

  dm_response* two = NULL;
  CHECK_OK(dm_response_constant(2.0, &two));
  dm_system* bad = NULL;
  CHECK_OK(dm_system_create(1e-9, two, one, 1e-9, eps, one, one, one, 1e-8, &bad));
  CHECK(dm_c6(bad, DM_ABRAHAM, &q, &a) == DM_ERR_DIVERGENT);

  dm_system_free(bad);
  dm_system_free(dual);
  dm_system_free(sys);
  dm_response_free(two);
  dm_response_free(one);
  dm_response_free(eps);
}

static void test_oracles(void) {
  const dm_quadrature q = dm_quadrature_default();
  double a = 1e16, value = 0.0, error = 0.0;
  CHECK_OK(dm_integrate(arctan_kernel, &a, &q, &value, &error));
  CHECK(rel(value, 3.14159265358979323846 * a / 2.0) < 1e-9);

  dm_expansion ex;
  CHECK_OK(dm_expand_c6_integrand(1e-9, 1e-9, DM_MAXWELL, 1e-3, &ex));
  CHECK(fabs(ex.third_order_ratio - 2.5) < 1e-6);
  CHECK(ex.hamaker_match == 1);
  CHECK(ex.three_particle_match == 0);
  CHECK(dm_expand_c6_integrand(1e-9, 1e-9, DM_ABRAHAM, 0.5, &ex) == DM_ERR_INVALID_ARGUMENT);

  const double p0[3] = {0, 0, 0}, p1[3] = {1, 0, 0}, p2[3] = {0.5, 0.8660254037844386, 0};
  double k = 0.0;
  CHECK_OK(dm_at_kernel(p0, p1, p2, &k));
  CHECK(fabs(k - 1.375) < 1e-12);
  CHECK(dm_at_kernel(p0, p0, p2, &k) == DM_ERR_SINGULAR);

  dm_montecarlo mc = dm_montecarlo_default();
  mc.samples = 20000;
  mc.chunks = 8;
  double e1, s1, e2, s2;
  CHECK_OK(dm_at_medium_mc(2e-8, 1e-9, 1e-9, &mc, &e1, &s1));
  mc.workers = 3;
  CHECK_OK(dm_at_medium_mc(2e-8, 1e-9, 1e-9, &mc, &e2, &s2));
  CHECK(e1 == e2 && s1 == s2);

  double g = 0.0;
  CHECK(dm_hamaker_lattice_sum(1e-9, 1e-9, 1e-8, 2e-10, &g) == DM_ERR_INVALID_ARGUMENT);
  CHECK_OK(dm_hamaker_lattice_sum(1e-9, 1e-9, 1e-8, 1e-10, &g));
  CHECK(g > 0.0);
}

static void test_molecular(void) {
  const double a0 = 8.8541878128e-42, w0 = 1e16, g = 0.0;
  dm_polarisability* p = NULL;
  CHECK_OK(dm_polarisability_lorentz(&a0, &w0, &g, 1, &p));
  const dm_quadrature q = dm_quadrature_default();
  double vdw = 0.0, pair = 0.0, two = 0.0;
  CHECK_OK(dm_vdw_coefficient(p, p, &q, &vdw));
  CHECK_OK(dm_vdw_pair(p, p, 1e-9, &q, &pair));
  CHECK(rel(pair, vdw / 1e-54) < 1e-14);

  dm_response* one = NULL;
  CHECK_OK(dm_response_constant(1.0, &one));
  dm_system* vac = NULL;
  CHECK_OK(dm_system_create(1e-9, one, one, 1e-9, one, one, one, one, 1e-8, &vac));
  CHECK_OK(dm_c6_molecular(p, p, vac, DM_ABRAHAM, &q, &two));
  CHECK(rel(two, vdw) < 1e-12);

  double chi = 0.0;
  CHECK_OK(dm_clausius_mossotti(1e27, p, 0.0, &chi));
  CHECK(rel(chi, 1e-3) < 1e-12);

  dm_system_free(vac);
  dm_response_free(one);
  dm_polarisability_free(p);
}

int main(void) {
  test_errors();
  test_two_spheres();
  test_oracles();
  test_molecular();
  if (failures)
    fprintf(stderr, "%d check(s) failed\n", failures);
  else
    printf("all C API checks passed\n");
  return failures ? 1 : 0;
}
