"""The canonical Cartan connection data for the CR family on SU(2).

The connection on the trivial bundle SU(2) x P is determined by a single
linear map phi from su(2) into su(2,1), evaluated here in closed form for
every deformation parameter lambda > 0.  Its curvature reduces to the
algebraic expression [phi(X), phi(Y)] - phi([X, Y]), which this module
computes both by brute-force brackets and from the explicit formula, the
two serving as independent cross-checks of each other.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    TOL_ALG,
    E_U,
    E_V,
    KVector,
    K_BASIS,
    bracket_g,
    bracket_k,
    filtration_degree,
    graded_part,
    g_minus_coordinates,
    is_in_g,
    in_p,
    k_coordinates,
    proj_g_minus,
)
from .groups import ad_g, p_inverse

#: Index pairs of K_BASIS spanning the 2-vectors: (E_t, E_u), (E_t, E_v), (E_u, E_v).
K_PAIRS = ((0, 1), (0, 2), (1, 2))


def _check_positive(lam: float) -> float:
    lam = float(lam)
    if not lam > 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    return lam


def phi_lambda_matrix(lam: float, x: KVector) -> np.ndarray:
    """Closed-form value of the canonical connection map at (t, z).

    The value is the su(2,1) matrix whose first column is
    (c1 i t, sqrt(lam) u + i v / sqrt(lam), i t) with the remaining entries
    forced by membership in the algebra and the coefficients

        c1 = (1 + lam^2) / (4 lam)
        c2 = (5 - 3 lam^2) / (4 sqrt(lam))
        c3 = (3 - 5 lam^2) / (4 lam sqrt(lam))
        c4 = (-15 + 34 lam^2 - 15 lam^4) / (16 lam^2).
    """
    lam = _check_positive(lam)
    t, u, v = x.t, x.z.real, x.z.imag
    sl = np.sqrt(lam)
    c1 = (1 + lam**2) / (4 * lam)
    c2 = (5 - 3 * lam**2) / (4 * sl)
    c3 = (3 - 5 * lam**2) / (4 * lam * sl)
    c4 = (-15 + 34 * lam**2 - 15 * lam**4) / (16 * lam**2)
    return np.array(
        [
            [c1 * 1j * t, -c2 * u - c3 * 1j * v, c4 * 1j * t],
            [sl * u + 1j * v / sl, -2 * c1 * 1j * t, c2 * u - c3 * 1j * v],
            [1j * t, -sl * u + 1j * v / sl, c1 * 1j * t],
        ],
        dtype=complex,
    )


@dataclass(frozen=True)
class PhiMap:
    """Linear map su(2) -> su(2,1), stored by its values on K_BASIS.

    Valid maps land in the algebra, send the contact plane into g^{-1}
    (zero degree -2 part for the images of E_u and E_v) and induce a real
    linear isomorphism onto g / p.
    """

    images: tuple
    lam: float | None = None

    def __post_init__(self):
        if len(self.images) != 3:
            raise ValueError("a PhiMap stores exactly three basis images")
        for img in self.images:
            if not is_in_g(img):
                raise ValueError("image is not in su(2,1)")
        for img in self.images[1:]:
            if np.abs(graded_part(img, -2)).max() >= TOL_ALG * max(
                1.0, np.abs(img).max()
            ):
                raise ValueError("contact-plane image has a degree -2 part")
        if abs(np.linalg.det(self.minus_matrix())) < 1e-8:
            raise ValueError("map does not induce an isomorphism onto g/p")

    def __call__(self, x: KVector) -> np.ndarray:
        t, u, v = k_coordinates(x)
        return t * self.images[0] + u * self.images[1] + v * self.images[2]

    def minus_matrix(self) -> np.ndarray:
        """3x3 real matrix of X -> proj_{g_-}(phi(X)) in the fixed bases."""
        return np.column_stack(
            [g_minus_coordinates(proj_g_minus(img)) for img in self.images]
        )


def phi_closed_form(lam: float) -> PhiMap:
    """The canonical connection map for deformation parameter lam."""
    lam = _check_positive(lam)
    return PhiMap(
        images=tuple(phi_lambda_matrix(lam, b) for b in K_BASIS),
        lam=lam,
    )


@dataclass(frozen=True)
class CurvatureForm:
    """Alternating bilinear map su(2) x su(2) -> su(2,1), stored on K_PAIRS."""

    values: tuple

    def evaluate(self, x: KVector, y: KVector) -> np.ndarray:
        cx, cy = k_coordinates(x), k_coordinates(y)
        out = np.zeros((3, 3), dtype=complex)
        for (a, b), val in zip(K_PAIRS, self.values):
            out = out + (cx[a] * cy[b] - cx[b] * cy[a]) * val
        return out


def curvature(phi: PhiMap) -> CurvatureForm:
    """Brute-force curvature [phi(X), phi(Y)] - phi([X, Y]) on basis pairs."""
    values = []
    for a, b in K_PAIRS:
        x, y = K_BASIS[a], K_BASIS[b]
        values.append(bracket_g(phi(x), phi(y)) - phi(bracket_k(x, y)))
    return CurvatureForm(values=tuple(values))


def curvature_closed_form(lam: float, x: KVector, y: KVector) -> np.ndarray:
    """Explicit curvature formula; computes no bracket.

    The value on ((it, 0), (0, u + iv)) has a single independent entry,

        kappa[0, 1] = -(3 t (lam^4 - 1) / (2 lam^2 sqrt(lam))) (v - i lam u),

    mirrored to kappa[1, 2] by membership in the algebra, and the general
    value follows from the reduction
    kappa((it,z), (it',z')) = kappa((it,0), (0,z')) - kappa((it',0), (0,z)).
    """
    lam = _check_positive(lam)

    def mixed(t: float, z: complex) -> np.ndarray:
        u, v = z.real, z.imag
        c = 3 * t * (lam**4 - 1) / (2 * lam**2 * np.sqrt(lam))
        out = np.zeros((3, 3), dtype=complex)
        out[0, 1] = -c * (v - 1j * lam * u)
        out[1, 2] = c * (v + 1j * lam * u)
        return out

    return mixed(x.t, y.z) - mixed(y.t, x.z)


def harmonic_curvature(kappa: CurvatureForm, tol: float = TOL_ALG) -> complex:
    """The complex coefficient of the curvature in the degree 1 slot.

    All values must have filtration degree at least 1.  The coefficient
    reported is the (0, 1) entry of the value on (E_t, E_u); by complex
    linearity in the contact direction this single number determines the
    whole degree 1 component.  The convention is tied to the fixed matrix
    presentation of the basis.
    """
    for val in kappa.values:
        if filtration_degree(val, tol) < 1:
            raise ValueError("curvature has components below filtration degree 1")
    return complex(kappa.values[0][0, 1])


def induced_cr_structure(phi: PhiMap) -> tuple:
    """Identification of the contact plane with g_{-1} and the pulled-back J.

    Returns the 2x2 real matrix of X -> degree -1 part of phi(X) on the
    basis (E_u, E_v) (coordinates in the x = 1, x = i directions), together
    with the pullback of multiplication by i through it.
    """
    cols = []
    for b in (E_U, E_V):
        img = phi(b)
        x_entry = graded_part(img, -1)[1, 0]
        cols.append([x_entry.real, x_entry.imag])
    m = np.array(cols).T
    if abs(np.linalg.det(m)) < 1e-12:
        raise ValueError("induced map on the contact plane is singular")
    mult_i = np.array([[0.0, -1.0], [1.0, 0.0]])
    j = np.linalg.solve(m, mult_i @ m)
    return m, j


def omega_eval(phi: PhiMap, g: np.ndarray, x: KVector, a: np.ndarray) -> np.ndarray:
    """The Cartan connection on the trivial bundle: Ad(g^{-1}) phi(X) + A."""
    if not in_p(a):
        raise ValueError("second argument must lie in p")
    return ad_g(p_inverse(g), phi(x)) + a


def phi_is_homomorphism_defect(phi: PhiMap) -> float:
    """Max entry magnitude of [phi(X), phi(Y)] - phi([X, Y]) over basis pairs."""
    kappa = curvature(phi)
    return max(float(np.abs(v).max()) for v in kappa.values)


__all__ = [
    "K_PAIRS",
    "PhiMap",
    "CurvatureForm",
    "phi_lambda_matrix",
    "phi_closed_form",
    "curvature",
    "curvature_closed_form",
    "harmonic_curvature",
    "induced_cr_structure",
    "omega_eval",
    "phi_is_homomorphism_defect",
]
