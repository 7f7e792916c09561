"""Group-level operations: SU(2), the parabolic P in SU(2,1), and adjoints.

P is represented concretely inside SU(2,1) (stabilizer of the isotropic line
through the first basis vector), so its elements are upper triangular
matrices preserving the Hermitian form.  Center quotients are invisible to
every adjoint computation done here.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .algebra import (
    FORM,
    TOL_ALG,
    KVector,
    G_BASIS_BY_DEGREE,
    _scale,
    graded_part,
    is_in_g,
    kvector_from_matrix,
    proj_g_minus,
    random_p,
)


def exp_k(x: KVector) -> np.ndarray:
    """Exponential of su(2), in closed form.

    For the represented matrix m one has m^2 = -(t^2 + |z|^2) id, so
    exp(m) = cos(theta) id + sinc(theta) m with theta = |(t, z)|.
    """
    theta = x.norm()
    return np.cos(theta) * np.eye(2, dtype=complex) + np.sinc(theta / np.pi) * x.as_matrix()


def is_k_group_element(m: np.ndarray, tol: float = TOL_ALG) -> bool:
    """Unitary with determinant one, within tolerance."""
    if np.abs(m.conj().T @ m - np.eye(2)).max() >= tol * _scale(m) ** 2:
        return False
    return abs(np.linalg.det(m) - 1.0) < tol * _scale(m) ** 2


def k_inverse(k: np.ndarray) -> np.ndarray:
    return k.conj().T


def ad_k(k: np.ndarray, x: KVector) -> KVector:
    """Adjoint action of SU(2): k x k^{-1}, re-expressed as a KVector."""
    return kvector_from_matrix(k @ x.as_matrix() @ k.conj().T)


def exp_p(a: np.ndarray, tol: float = TOL_ALG) -> np.ndarray:
    """Exponential of an element of p.

    For a in g_1 + g_2 the series terminates: such matrices are strictly
    upper triangular, so a^3 = 0 and exp(a) = id + a + a^2/2.  A general
    p-element goes through scipy's scaling-and-squaring.
    """
    if not is_in_g(a, tol):
        raise ValueError("matrix is not in su(2,1)")
    if np.abs(proj_g_minus(a)).max() >= tol * _scale(a):
        raise ValueError("matrix has components below degree 0; not in p")
    if np.abs(graded_part(a, 0)).max() < tol * _scale(a):
        return np.eye(3, dtype=complex) + a + 0.5 * (a @ a)
    return scipy.linalg.expm(a)


def is_p_group_element(m: np.ndarray, tol: float = TOL_ALG) -> bool:
    """Form-preserving, determinant one, stabilizing the first basis line."""
    s = tol * _scale(m) ** 2
    if np.abs(m.conj().T @ FORM @ m - FORM).max() >= s:
        return False
    if abs(np.linalg.det(m) - 1.0) >= s:
        return False
    return max(abs(m[1, 0]), abs(m[2, 0])) < tol * _scale(m)


def p_inverse(p: np.ndarray) -> np.ndarray:
    # From the form invariance p^dagger FORM p = FORM and FORM^2 = id.
    return FORM @ p.conj().T @ FORM


def ad_g(p: np.ndarray, a: np.ndarray) -> np.ndarray:
    """Adjoint action p a p^{-1} on su(2,1)."""
    return p @ a @ p_inverse(p)


@dataclass(frozen=True)
class PDecomposition:
    """Unique factorization p = g0 exp(z1) exp(z2) with Ad(g0) grading-preserving."""

    g0: np.ndarray
    z1: np.ndarray
    z2: np.ndarray

    def recompose(self) -> np.ndarray:
        return self.g0 @ exp_p(self.z1) @ exp_p(self.z2)


def decompose_p(p: np.ndarray, tol: float = TOL_ALG) -> PDecomposition:
    """Split a P element into its grading-preserving and unipotent factors.

    The unipotent part n = g0^{-1} p has unit diagonal, so the entries of
    z1 and z2 can be read off directly: n = id + z1 + (z2 + z1^2/2), and
    the nilpotency of g_1 + g_2 makes this exact.
    """
    if not is_p_group_element(p, tol):
        raise ValueError("matrix does not satisfy the P-group invariants")
    c, d = p[0, 0], p[1, 1]
    w = p[0, 1] / c
    z1 = np.zeros((3, 3), dtype=complex)
    z1[0, 1] = w
    z1[1, 2] = -np.conj(w)
    # consistency of the two g_1 entries of n
    if abs(p[1, 2] / d + np.conj(w)) >= tol * _scale(p):
        raise ValueError("matrix does not satisfy the P-group invariants")
    top = p[0, 2] / c + 0.5 * abs(w) ** 2
    if abs(top.real) >= tol * _scale(p):
        raise ValueError("matrix does not satisfy the P-group invariants")
    z2 = np.zeros((3, 3), dtype=complex)
    z2[0, 2] = 1j * top.imag
    g0 = np.diag([c, d, p[2, 2]]).astype(complex)
    out = PDecomposition(g0=g0, z1=z1, z2=z2)
    if np.abs(out.recompose() - p).max() >= tol * _scale(p):
        raise ValueError("decomposition failed to recompose the input")
    return out


def g0_to_complex(g0: np.ndarray, tol: float = TOL_ALG) -> complex:
    """The scalar by which Ad(g0) acts on g^{-1}/p, for grading-preserving g0.

    Read off the action on the degree -1 slot; the action is complex linear,
    so the single scalar determines it.
    """
    for degree, basis in G_BASIS_BY_DEGREE.items():
        for b in basis:
            image = ad_g(g0, b)
            off = image - graded_part(image, degree)
            if np.abs(off).max() >= tol * max(_scale(image), _scale(b)):
                raise ValueError("Ad(g0) does not preserve the grading")
    scalar = complex(ad_g(g0, G_BASIS_BY_DEGREE[-1][0])[1, 0])
    if abs(scalar) < tol:
        raise ValueError("degenerate action on g_{-1}")
    return scalar


def random_p_element(rng: np.random.Generator, scale: float = 0.5) -> np.ndarray:
    """Random element of P near the identity, as exp of a random p-element."""
    return exp_p(random_p(rng, scale))
