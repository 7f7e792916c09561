"""Tractor bundles as trivialized function spaces, and their connections.

Since the underlying bundle is trivial, sections of the tractor bundle for
a representation V are plain functions from SU(2) to V, and the covariant
derivative along a left-invariant field reduces to

    (left-invariant derivative of f along X) + rho(phi_lambda(X)) o f.

The derivative is approximated by a central difference along the flow
k -> k exp(s X), which is exact to second order in the step.  Transport
along such flows is a constant-coefficient linear ODE, integrated with
classical RK4 and checked against the matrix-exponential solution.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
import scipy.linalg

from .algebra import FORM, KVector, bracket_g, bracket_k
from .cartan import curvature_closed_form, phi_lambda_matrix
from .groups import ad_k, exp_k, k_inverse


@dataclass(frozen=True)
class Representation:
    """A representation of su(2,1) given by its infinitesimal action."""

    tag: str
    apply: Callable[[np.ndarray, np.ndarray], np.ndarray]


#: Defining action on C^3.
STANDARD = Representation(tag="standard", apply=lambda a, v: a @ v)

#: Adjoint action on the algebra itself.
ADJOINT = Representation(tag="adjoint", apply=bracket_g)

REPRESENTATIONS = {rep.tag: rep for rep in (STANDARD, ADJOINT)}


def hermitian_pairing(v: np.ndarray, w: np.ndarray) -> complex:
    """The signature-(2,1) pairing <v, w> = conj(w)^T FORM v."""
    return complex(np.conj(w) @ (FORM @ v))


def right_field_section(lam: float, x: KVector) -> Callable[[np.ndarray], np.ndarray]:
    """Adjoint-tractor section representing the right-invariant field of x.

    Returns the function k -> phi_lambda(Ad(k^{-1}) x); these sections are
    the infinitesimal generators of the left translations.
    """
    def f(k: np.ndarray) -> np.ndarray:
        return phi_lambda_matrix(lam, ad_k(k_inverse(k), x))

    return f


def adjoint_tractor_of_right_field(lam: float, x: KVector, k: np.ndarray) -> np.ndarray:
    """Value at k of the adjoint-tractor section of the right field of x."""
    return right_field_section(lam, x)(k)


def tractor_derivative(
    lam: float,
    rep: Representation,
    f: Callable[[np.ndarray], np.ndarray],
    x: KVector,
    k: np.ndarray,
    h: float = 1e-4,
) -> np.ndarray:
    """Covariant derivative of the section f along the left-invariant field of x.

    The left-invariant derivative is the central difference of f along
    s -> k exp_k(s x), accurate to O(h^2).
    """
    if not h > 0:
        raise ValueError("step must be positive")
    diff = (f(k @ exp_k(h * x)) - f(k @ exp_k(-h * x))) / (2.0 * h)
    return diff + rep.apply(phi_lambda_matrix(lam, x), f(k))


def lie_derivative_identity_check(
    lam: float, y: KVector, z: KVector, h: float = 1e-4
) -> float:
    """Residual of d/dt phi(Ad(exp(t y))^{-1} z) at 0 against -phi([y, z])."""
    def at(t: float) -> np.ndarray:
        return phi_lambda_matrix(lam, ad_k(k_inverse(exp_k(t * y)), z))

    diff = (at(h) - at(-h)) / (2.0 * h)
    target = -phi_lambda_matrix(lam, bracket_k(y, z))
    return float(np.abs(diff - target).max())


def infinitesimal_automorphism_check(
    lam: float, x: KVector, y: KVector, k: np.ndarray, h: float = 1e-4
) -> float:
    """Residual of the infinitesimal automorphism equation at k.

    The covariant derivative of the right-field section of x along the
    left-invariant field of y must equal the curvature contracted with
    (y, Ad(k^{-1}) x).
    """
    lhs = tractor_derivative(lam, ADJOINT, right_field_section(lam, x), y, k, h)
    rhs = curvature_closed_form(lam, y, ad_k(k_inverse(k), x))
    return float(np.abs(lhs - rhs).max())


def parallel_transport(
    lam: float,
    rep: Representation,
    x: KVector,
    v0: np.ndarray,
    s_max: float,
    steps: int,
) -> np.ndarray:
    """Transport v0 along the flow of the left-invariant field of x.

    Integrates v' = -rho(phi_lambda(x)) v with classical RK4 over
    [0, s_max] in the given number of steps.
    """
    if steps < 1:
        raise ValueError("steps must be at least 1")
    m = phi_lambda_matrix(lam, x)

    def rate(v: np.ndarray) -> np.ndarray:
        return -rep.apply(m, v)

    v = np.array(v0, dtype=complex)
    h = float(s_max) / steps
    for _ in range(steps):
        k1 = rate(v)
        k2 = rate(v + 0.5 * h * k1)
        k3 = rate(v + 0.5 * h * k2)
        k4 = rate(v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return v


def transport_oracle(
    lam: float, rep: Representation, x: KVector, v0: np.ndarray, s_max: float
) -> np.ndarray:
    """Exact transport for the constant-coefficient system."""
    m = phi_lambda_matrix(lam, x)
    v0 = np.asarray(v0, dtype=complex)
    if rep.tag == "standard":
        return scipy.linalg.expm(-s_max * m) @ v0
    if rep.tag == "adjoint":
        e = scipy.linalg.expm(-s_max * m)
        return e @ v0 @ np.linalg.inv(e)
    raise ValueError(f"no exact transport available for representation {rep.tag!r}")


def tractor_function_constant(value: np.ndarray) -> Callable[[np.ndarray], np.ndarray]:
    """The constant section k -> value."""
    v = np.array(value, dtype=complex)
    return lambda k: v.copy()


__all__ = [
    "Representation",
    "STANDARD",
    "ADJOINT",
    "REPRESENTATIONS",
    "hermitian_pairing",
    "right_field_section",
    "adjoint_tractor_of_right_field",
    "tractor_derivative",
    "lie_derivative_identity_check",
    "infinitesimal_automorphism_check",
    "parallel_transport",
    "transport_oracle",
    "tractor_function_constant",
]
