"""Normality of the connection: Kostant codifferential, homogeneity, solver.

Curvature, being horizontal, descends to an alternating 2-cochain on
g_- = g_{-2} + g_{-1} with values in the full algebra.  The codifferential
implemented here pairs the g_- basis with its trace-form dual inside
g_1 + g_2 and satisfies the chain property (it squares to zero); the
canonical connection's curvature lies in its kernel for every lambda.

The solver rederives the closed-form connection map from scratch: with the
negative-degree components pinned to the normalized first-column form, the
fifteen remaining real coefficients are determined by requiring every
curvature value to sit in filtration degree >= 1 and the contact-plane slot
to vanish, plus one gauge condition that removes the residual freedom of
conjugating by exp of the top graded slot.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    TOL_ALG,
    E_U,
    E_V,
    F_M2,
    F_X1,
    F_XI,
    G_MINUS_BASIS,
    K_BASIS,
    P_BASIS,
    P_PLUS_DUAL,
    KVector,
    bracket_g,
    bracket_k,
    g_minus_coordinates,
    graded_part,
    k_coordinates,
    proj_g_minus,
    random_g,
)
from .cartan import K_PAIRS, CurvatureForm, PhiMap, curvature, phi_closed_form

#: Index pairs of G_MINUS_BASIS spanning the 2-vectors of g_-.
SLOT_PAIRS = ((0, 1), (0, 2), (1, 2))

#: Degrees of the G_MINUS_BASIS entries.
_MINUS_DEGREES = (-2, -1, -1)

#: Homogeneity degrees a 2-cochain on g_- can carry: value degree d on a
#: slot of total degree i + j contributes to homogeneity d - i - j.
HOMOGENEITY_RANGE = tuple(range(0, 6))


def _zero() -> np.ndarray:
    return np.zeros((3, 3), dtype=complex)


@dataclass(frozen=True)
class Cochain2:
    """Alternating bilinear map on g_- with values in g, stored on SLOT_PAIRS."""

    values: tuple

    def evaluate(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        cx, cy = g_minus_coordinates(x), g_minus_coordinates(y)
        out = _zero()
        for (a, b), val in zip(SLOT_PAIRS, self.values):
            out = out + (cx[a] * cy[b] - cx[b] * cy[a]) * val
        return out

    def max_abs(self) -> float:
        return max(float(np.abs(v).max()) for v in self.values)


@dataclass(frozen=True)
class Cochain1:
    """Linear map g_- -> g, stored by its values on G_MINUS_BASIS."""

    values: tuple

    def evaluate(self, x: np.ndarray) -> np.ndarray:
        cx = g_minus_coordinates(x)
        out = _zero()
        for c, val in zip(cx, self.values):
            out = out + c * val
        return out

    def max_abs(self) -> float:
        return max(float(np.abs(v).max()) for v in self.values)


def zero_cochain2() -> Cochain2:
    return Cochain2(values=(_zero(), _zero(), _zero()))


def curvature_to_cochain(kappa: CurvatureForm, phi: PhiMap) -> Cochain2:
    """Re-index a curvature form through the identification su(2) ~ g_-.

    The identification is X -> proj_{g_-}(phi(X)); the resulting cochain
    evaluates identically to kappa on corresponding arguments.
    """
    m = phi.minus_matrix()
    if abs(np.linalg.det(m)) < 1e-12:
        raise ValueError("the g_- identification induced by phi is singular")
    inv = np.linalg.inv(m)
    # kappa re-expressed: psi(xi_a, xi_b) = sum over k-basis pairs of
    # inv-coordinates, using bilinearity and antisymmetry.
    values = []
    for a, b in SLOT_PAIRS:
        out = _zero()
        for (i, j), val in zip(K_PAIRS, kappa.values):
            out = out + (inv[i, a] * inv[j, b] - inv[i, b] * inv[j, a]) * val
        values.append(out)
    return Cochain2(values=tuple(values))


def kostant_codiff2(psi: Cochain2) -> Cochain1:
    """Codifferential on 2-cochains.

    With {xi_a} the g_- basis and {Z^a} its trace-form dual in g_1 + g_2,

        (d* psi)(X) = sum_a [Z^a, psi(xi_a, X)]
                      + 1/2 sum_a psi(proj_{g_-}([Z^a, X]), xi_a).

    This weight and sign make d* o d* vanish identically, which the test
    suite checks on random cochains alongside the kernel membership of the
    canonical curvature.
    """
    values = []
    for x in G_MINUS_BASIS:
        acc = _zero()
        for xi, zd in zip(G_MINUS_BASIS, P_PLUS_DUAL):
            acc = acc + bracket_g(zd, psi.evaluate(xi, x))
            acc = acc + 0.5 * psi.evaluate(proj_g_minus(bracket_g(zd, x)), xi)
        values.append(acc)
    return Cochain1(values=tuple(values))


def kostant_codiff1(psi: Cochain1) -> np.ndarray:
    """Codifferential on 1-cochains: sum_a [Z^a, psi(xi_a)]."""
    acc = _zero()
    for xi, zd in zip(G_MINUS_BASIS, P_PLUS_DUAL):
        acc = acc + bracket_g(zd, psi.evaluate(xi))
    return acc


def homogeneity_components(psi: Cochain2) -> dict:
    """Split psi by homogeneity; the parts sum back to psi.

    The degree-L component keeps, on a slot of total degree i + j, exactly
    the value components in g_{i+j+L}.
    """
    out = {ell: [_zero(), _zero(), _zero()] for ell in HOMOGENEITY_RANGE}
    for slot, (a, b) in enumerate(SLOT_PAIRS):
        total = _MINUS_DEGREES[a] + _MINUS_DEGREES[b]
        for d in range(-2, 3):
            ell = d - total
            if ell in out:
                out[ell][slot] = out[ell][slot] + graded_part(psi.values[slot], d)
    return {ell: Cochain2(values=tuple(vals)) for ell, vals in out.items()}


def is_regular(psi: Cochain2, tol: float = TOL_ALG) -> bool:
    """True iff every homogeneity component of degree <= 0 vanishes."""
    scale = max(1.0, psi.max_abs())
    comps = homogeneity_components(psi)
    return all(
        comps[ell].max_abs() < tol * scale for ell in HOMOGENEITY_RANGE if ell <= 0
    )


def is_normal(psi: Cochain2, tol: float) -> bool:
    """True iff the codifferential of psi vanishes below tol (max entry)."""
    return kostant_codiff2(psi).max_abs() < tol


class SolveError(RuntimeError):
    """Raised when the connection solver fails to converge or to isolate."""


@dataclass(frozen=True)
class SolveResult:
    phi: PhiMap
    coefficients: np.ndarray
    iterations: int
    residual: float


def _ansatz_images(lam: float, coeffs: np.ndarray) -> tuple:
    # Fixed negative-degree parts: phi(E_t) = F_M2 + ..., the contact plane
    # mapped through x = sqrt(lam) u + i v / sqrt(lam).
    sl = np.sqrt(lam)
    fixed = (np.asarray(F_M2), sl * np.asarray(F_X1), np.asarray(F_XI) / sl)
    images = []
    for i, base in enumerate(fixed):
        img = base.copy()
        for c, b in zip(coeffs[5 * i : 5 * i + 5], P_BASIS):
            img = img + c * b
        images.append(img)
    return tuple(images)


def _phi_from_coefficients(lam: float, coeffs: np.ndarray) -> PhiMap:
    return PhiMap(images=_ansatz_images(lam, coeffs), lam=lam)


def _raw_curvature(images: tuple, x: KVector, y: KVector) -> np.ndarray:
    def apply(v: KVector) -> np.ndarray:
        t, u, w = k_coordinates(v)
        return t * images[0] + u * images[1] + w * images[2]

    return bracket_g(apply(x), apply(y)) - apply(bracket_k(x, y))


def solver_residual(lam: float, coeffs: np.ndarray) -> np.ndarray:
    """Constraint system for the connection coefficients.

    Eighteen curvature equations: the degree -2, -1 and 0 components of the
    curvature must vanish on all three slots (5 real each), and the degree 1
    and 2 components must vanish on the contact-plane slot (3 real).  One
    more equation pins the gauge: the real diagonal component of the image
    of E_t is zero, which removes the one-parameter freedom of conjugating
    by exponentials of the top graded slot (that conjugation changes no
    negative-degree component, so the curvature conditions alone leave a
    curve of solutions).
    """
    images = _ansatz_images(lam, coeffs)
    res = []
    for a, b in K_PAIRS:
        k = _raw_curvature(images, K_BASIS[a], K_BASIS[b])
        res += [k[2, 0].imag, k[1, 0].real, k[1, 0].imag, k[0, 0].real, k[0, 0].imag]
    k_uv = _raw_curvature(images, E_U, E_V)
    res += [k_uv[0, 1].real, k_uv[0, 1].imag, k_uv[0, 2].imag]
    res.append(coeffs[0])
    return np.array(res)


def _solver_jacobian(lam: float, coeffs: np.ndarray) -> np.ndarray:
    # The residual is quadratic in the coefficients, so a unit central
    # difference per coordinate reproduces the Jacobian exactly.
    n = coeffs.size
    cols = []
    for j in range(n):
        dx = np.zeros(n)
        dx[j] = 1.0
        cols.append(
            0.5 * (solver_residual(lam, coeffs + dx) - solver_residual(lam, coeffs - dx))
        )
    return np.column_stack(cols)


def solve_phi_detailed(
    lam: float,
    init: np.ndarray | None = None,
    *,
    tol: float = 1e-12,
    max_iter: int = 50,
) -> SolveResult:
    """Gauss-Newton iteration on the constraint system, seeded at zero.

    Damps by step halving if a full step fails to reduce the residual, and
    verifies at the solution that the Jacobian has full column rank, so the
    reported point is isolated.
    """
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    x = np.zeros(15) if init is None else np.asarray(init, dtype=float).copy()
    if x.shape != (15,):
        raise ValueError("init must provide 15 coefficients")
    res = solver_residual(lam, x)
    for iteration in range(max_iter):
        norm = float(np.abs(res).max())
        if norm < tol:
            jac = _solver_jacobian(lam, x)
            sv = np.linalg.svd(jac, compute_uv=False)
            if sv[-1] < 1e-6 * sv[0]:
                raise SolveError(
                    f"rank-deficient constraint system at the solution (lam={lam})"
                )
            return SolveResult(
                phi=_phi_from_coefficients(lam, x),
                coefficients=x,
                iterations=iteration,
                residual=norm,
            )
        jac = _solver_jacobian(lam, x)
        step, *_ = np.linalg.lstsq(jac, -res, rcond=None)
        damp = 1.0
        for _ in range(30):
            trial = x + damp * step
            trial_res = solver_residual(lam, trial)
            if float(np.abs(trial_res).max()) < norm:
                x, res = trial, trial_res
                break
            damp *= 0.5
        else:
            raise SolveError(f"stalled at residual {norm:.3e} (lam={lam})")
    raise SolveError(
        f"no convergence after {max_iter} iterations "
        f"(lam={lam}, residual {float(np.abs(res).max()):.3e})"
    )


def solve_phi(
    lam: float,
    init: np.ndarray | None = None,
    *,
    tol: float = 1e-12,
    max_iter: int = 50,
) -> PhiMap:
    """Rederive the connection map from the curvature conditions alone."""
    return solve_phi_detailed(lam, init, tol=tol, max_iter=max_iter).phi


def normality_residual(lam: float) -> float:
    """Max entry of the codifferential of the canonical curvature cochain."""
    phi = phi_closed_form(lam)
    psi = curvature_to_cochain(curvature(phi), phi)
    return kostant_codiff2(psi).max_abs()


def complex_linear_degree4(w_coefficient: complex) -> Cochain2:
    """The harmonic degree-4 shape: values in g_1, complex linear on g_{-1}.

    Sends (F_M2, x) to the g_1 element with top entry w_coefficient * x,
    where x runs over the complexified degree -1 slot, and vanishes on the
    g_{-1} wedge.  These cochains span the kernel direction that the
    canonical curvature occupies.
    """
    def g1_of(w: complex) -> np.ndarray:
        out = _zero()
        out[0, 1] = w
        out[1, 2] = -np.conj(w)
        return out

    return Cochain2(
        values=(g1_of(w_coefficient), g1_of(1j * w_coefficient), _zero())
    )


def random_cochain2(rng: np.random.Generator, scale: float = 1.0) -> Cochain2:
    return Cochain2(values=tuple(random_g(rng, scale) for _ in range(3)))
