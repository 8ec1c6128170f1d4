#pragma once

// Independent oracles for the test suite.  Everything here is deliberately
// decoupled from the library's own solvers: eigenvalues come from a P1
// Galerkin discretization with Sylvester-inertia bisection (no shooting, no
// root scans), so agreement between the two is meaningful evidence.

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sturm/grid_function.hpp"
#include "sturm/types.hpp"

namespace oracle {

using sturm::GridFunction;
using sturm::Index;
using sturm::Vector;

inline double l2_diff(const GridFunction& a, const GridFunction& b) {
  GridFunction d = a;
  d -= b;
  return d.norm();
}

// ---------------------------------------------------------------------------
// P1 finite-element eigenvalue oracle.
//
// Weak form of the regularized operator: t(y, w) = int y'w' - int sigma (yw)'.
// The quasi-Neumann condition y^[1](1) = 0 is this form's natural boundary
// condition, so only essential (Dirichlet) constraints are ever imposed.
// sigma enters cell-constant; with M a multiple of sigma's sample count each
// element sits inside one sigma cell and - int sigma (yw)' collapses to exact
// nodal jump terms (the delta potentials q = sigma' live at cell boundaries).
// ---------------------------------------------------------------------------

namespace detail {

struct Tridiag {
  Vector main;  // size n
  Vector off;   // size n-1
};

// Number of eigenvalues of the pencil (A, B) strictly below t: the sign count
// of the LDL^T recurrence for A - t B (Sylvester's law of inertia).
inline long inertia_below(const Tridiag& A, const Tridiag& B, double t) {
  const Index n = A.main.size();
  long count = 0;
  double prev = 1.0;
  for (Index i = 0; i < n; ++i) {
    double d = A.main[i] - t * B.main[i];
    if (i > 0) {
      const double e = A.off[i - 1] - t * B.off[i - 1];
      d -= e * e / prev;
    }
    if (d == 0.0) d = -1e-300;  // pivot exactly on an eigenvalue: nudge down
    if (d < 0.0) ++count;
    prev = d;
  }
  return count;
}

// k-th (1-based) generalized eigenvalue by inertia-count bisection.
inline double eigenvalue_by_bisection(const Tridiag& A, const Tridiag& B,
                                      long k, double lo, double hi) {
  while (inertia_below(A, B, lo) >= k) lo -= std::max(1.0, std::abs(lo));
  while (inertia_below(A, B, hi) < k) hi += std::max(1.0, std::abs(hi));
  for (int it = 0; it < 200 && hi - lo > 1e-12 * std::max(1.0, std::abs(hi));
       ++it) {
    const double mid = 0.5 * (lo + hi);
    if (inertia_below(A, B, mid) >= k)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

// First `count` eigenvalues on a mesh of M cells; neumann = true selects the
// quasi-Neumann problem (free right node), false the Dirichlet one.
inline Vector fem_eigenvalues(const GridFunction& sigma, int count,
                              bool neumann, long M) {
  const Index P = sigma.size();
  if (M % P != 0) throw std::invalid_argument("mesh must refine sigma's grid");
  const double h = 1.0 / static_cast<double>(M);
  const Vector sig = sigma.real_values();
  auto cell_sigma = [&](long c) { return sig[(c * P) / M]; };  // cell c (0-based)

  // Full (M+1)-node assembly, then strike essential rows/cols.
  Vector amain = Vector::Constant(M + 1, 2.0 / h);
  amain[0] = amain[M] = 1.0 / h;
  Vector aoff = Vector::Constant(M, -1.0 / h);
  // int sigma (yw)' = sum_c sigma_c [(yw)(x_c) - (yw)(x_{c-1})]; subtract its
  // nodal coefficients from the stiffness diagonal.
  amain[0] -= -cell_sigma(0);
  amain[M] -= cell_sigma(M - 1);
  for (long j = 1; j < M; ++j) amain[j] -= cell_sigma(j - 1) - cell_sigma(j);

  Vector bmain = Vector::Constant(M + 1, 4.0 * h / 6.0);
  bmain[0] = bmain[M] = 2.0 * h / 6.0;
  Vector boff = Vector::Constant(M, h / 6.0);

  const Index lo = 1;                       // always Dirichlet at x = 0
  const Index hi = neumann ? M + 1 : M;     // drop node M unless natural BC
  detail::Tridiag A{amain.segment(lo, hi - lo), aoff.segment(lo, hi - lo - 1)};
  detail::Tridiag B{bmain.segment(lo, hi - lo), boff.segment(lo, hi - lo - 1)};

  Vector out(count);
  const double smax = sig.cwiseAbs().maxCoeff();
  double lower = -4.0 * smax * smax - 4.0 * smax - 1.0;
  for (long k = 1; k <= count; ++k) {
    const double guess = sturm::kPi * sturm::kPi * (k + 1) * (k + 1) + 10.0;
    out[k - 1] = detail::eigenvalue_by_bisection(A, B, k, lower, guess);
    lower = out[k - 1];
  }
  return out;
}

// Richardson extrapolation over meshes (M, 2M): the P1 eigenvalue error is
// O(h^2), so (4 E_{2M} - E_M)/3 cancels the leading term.
inline Vector fem_eigenvalues_richardson(const GridFunction& sigma, int count,
                                         bool neumann, long M) {
  const Vector coarse = fem_eigenvalues(sigma, count, neumann, M);
  const Vector fine = fem_eigenvalues(sigma, count, neumann, 2 * M);
  return (4.0 * fine - coarse) / 3.0;
}

// k-th positive root of tan w = w (k >= 1), bracketed in (k pi, k pi + pi/2);
// computed on g(w) = sin w - w cos w which shares the roots but has no poles.
inline double tan_equals_omega_root(int k) {
  auto g = [](double w) { return std::sin(w) - w * std::cos(w); };
  double lo = k * sturm::kPi + 1e-9, hi = k * sturm::kPi + sturm::kPi / 2 - 1e-9;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(lo) * g(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracle
