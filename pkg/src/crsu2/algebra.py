"""Dense complex linear algebra for su(2) and su(2,1) with the contact grading.

su(2) elements are stored as pairs (t, z) standing for the skew-Hermitian
traceless matrix ``[[i t, -conj(z)], [z, -i t]]``.  su(2,1) is realized with
respect to the Hermitian form

    <z, w> = z0 conj(w2) + z2 conj(w0) + z1 conj(w1)

of signature (2, 1), whose matrix has ones in the two corners and the center.
In this realization the algebra carries the five-step grading

    [[ g0   g1   g2 ]
     [ g-1  g0   g1 ]
     [ g-2  g-1  g0 ]]

with real dimensions 1, 2, 2, 2, 1 for degrees -2..2, and the filtration
g^i = g_i + ... + g_2.  The parabolic subalgebra is p = g^0.

All scalars are double precision.  Membership and vanishing predicates use
the relative tolerance TOL_ALG (scaled by the largest entry magnitude, with
a floor of 1 so that numerically-zero matrices behave as zero).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TOL_ALG = 1e-10

#: Sentinel filtration degree of the zero matrix (it lies in every g^i).
FILTRATION_ZERO = 3

GRADES = (-2, -1, 0, 1, 2)

#: Matrix entries occupied by each graded slot.
_BLOCKS = {
    -2: ((2, 0),),
    -1: ((1, 0), (2, 1)),
    0: ((0, 0), (1, 1), (2, 2)),
    1: ((0, 1), (1, 2)),
    2: ((0, 2),),
}


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


#: Matrix of the signature-(2,1) Hermitian form.
FORM = np.zeros((3, 3), dtype=complex)
FORM[0, 2] = FORM[2, 0] = FORM[1, 1] = 1.0
FORM = _frozen(FORM)


@dataclass(frozen=True)
class KVector:
    """Element (t, z) of su(2): the matrix [[i t, -conj(z)], [z, -i t]]."""

    t: float
    z: complex

    def __post_init__(self):
        object.__setattr__(self, "t", float(self.t))
        object.__setattr__(self, "z", complex(self.z))

    def as_matrix(self) -> np.ndarray:
        return np.array(
            [[1j * self.t, -np.conj(self.z)], [self.z, -1j * self.t]],
            dtype=complex,
        )

    def __add__(self, other: "KVector") -> "KVector":
        return KVector(self.t + other.t, self.z + other.z)

    def __sub__(self, other: "KVector") -> "KVector":
        return KVector(self.t - other.t, self.z - other.z)

    def __neg__(self) -> "KVector":
        return KVector(-self.t, -self.z)

    def __mul__(self, s: float) -> "KVector":
        return KVector(s * self.t, s * self.z)

    __rmul__ = __mul__

    def norm(self) -> float:
        return float(np.hypot(self.t, abs(self.z)))


def kvector_from_matrix(m: np.ndarray) -> KVector:
    """Read a KVector off a skew-Hermitian traceless 2x2 matrix."""
    return KVector(m[0, 0].imag, m[1, 0])


@dataclass(frozen=True)
class GradedElement:
    """Graded parts of an su(2,1) element, indexed by degree -2..2."""

    parts: tuple

    def part(self, degree: int) -> np.ndarray:
        return self.parts[degree + 2]

    def total(self) -> np.ndarray:
        out = np.zeros((3, 3), dtype=complex)
        for p in self.parts:
            out = out + p
        return out


def _entry(i: int, j: int, value: complex) -> np.ndarray:
    m = np.zeros((3, 3), dtype=complex)
    m[i, j] = value
    return m


# Basis of su(2), in the fixed order E_t, E_u, E_v.
E_T = KVector(1.0, 0.0)
E_U = KVector(0.0, 1.0)
E_V = KVector(0.0, 1j)
K_BASIS = (E_T, E_U, E_V)

# Basis of su(2,1), degree-major.  Within a degree the order is: the real
# parameter direction first (x = 1, w = 1, alpha = 1), then the imaginary
# one (x = i, w = i, beta = 1); the one-dimensional slots carry i at their
# single entry.
F_M2 = _frozen(_entry(2, 0, 1j))
F_X1 = _frozen(_entry(1, 0, 1.0) + _entry(2, 1, -1.0))
F_XI = _frozen(_entry(1, 0, 1j) + _entry(2, 1, 1j))
F_A = _frozen(np.diag([1.0, 0.0, -1.0]).astype(complex))
F_B = _frozen(np.diag([1j, -2j, 1j]))
F_W1 = _frozen(_entry(0, 1, 1.0) + _entry(1, 2, -1.0))
F_WI = _frozen(_entry(0, 1, 1j) + _entry(1, 2, 1j))
F_P2 = _frozen(_entry(0, 2, 1j))

G_BASIS_BY_DEGREE = {
    -2: (F_M2,),
    -1: (F_X1, F_XI),
    0: (F_A, F_B),
    1: (F_W1, F_WI),
    2: (F_P2,),
}
G_BASIS = (F_M2, F_X1, F_XI, F_A, F_B, F_W1, F_WI, F_P2)
G_BASIS_DEGREES = (-2, -1, -1, 0, 0, 1, 1, 2)

G_MINUS_BASIS = (F_M2, F_X1, F_XI)
P_BASIS = (F_A, F_B, F_W1, F_WI, F_P2)
P_PLUS_BASIS = (F_W1, F_WI, F_P2)


def bracket_k(x: KVector, y: KVector) -> KVector:
    """Commutator in su(2), e.g. [(0,1), (0,i)] = (-2, 0)."""
    t = 2.0 * (x.z * np.conj(y.z)).imag
    z = 2j * (y.t * x.z - x.t * y.z)
    return KVector(t, z)


def contact_form(x: KVector) -> float:
    """The contact functional alpha(t, z) = t; its kernel is the CR plane."""
    return x.t


def j_lambda(lam: float, x: KVector) -> KVector:
    """The deformed complex structure on the contact plane.

    Maps (0, u + iv) to (0, -v/lam + i lam u).  Defined only on the kernel
    of the contact form, for lam > 0.
    """
    if lam <= 0:
        raise ValueError(f"lambda must be positive, got {lam}")
    if abs(x.t) > TOL_ALG * max(1.0, abs(x.z)):
        raise ValueError("j_lambda is only defined on the contact plane (t = 0)")
    u, v = x.z.real, x.z.imag
    return KVector(0.0, complex(-v / lam, lam * u))


def j_lambda_matrix(lam: float) -> np.ndarray:
    """Matrix of j_lambda on the contact plane in the basis (E_u, E_v)."""
    cols = []
    for b in (E_U, E_V):
        y = j_lambda(lam, b)
        cols.append([y.z.real, y.z.imag])
    return np.array(cols).T


def bracket_g(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Matrix commutator on su(2,1)."""
    return a @ b - b @ a


def trace_form(a: np.ndarray, b: np.ndarray) -> float:
    """Invariant pairing trace(ab); real for arguments in the algebra."""
    return float(np.trace(a @ b).real)


def _scale(a: np.ndarray) -> float:
    return max(1.0, float(np.abs(a).max()))


def is_in_g(a: np.ndarray, tol: float = TOL_ALG) -> bool:
    """Membership test: traceless and skew-adjoint for the Hermitian form."""
    s = tol * _scale(a)
    if abs(np.trace(a)) >= s:
        return False
    return float(np.abs(a.conj().T @ FORM + FORM @ a).max()) < s


def graded_part(a: np.ndarray, degree: int) -> np.ndarray:
    """Entries of a in the given graded slot (no membership check)."""
    out = np.zeros((3, 3), dtype=complex)
    for i, j in _BLOCKS[degree]:
        out[i, j] = a[i, j]
    return out


def grade(a: np.ndarray, tol: float = TOL_ALG) -> GradedElement:
    """Split a into its five graded parts; rejects matrices outside su(2,1)."""
    if not is_in_g(a, tol):
        raise ValueError("matrix is not in su(2,1)")
    return GradedElement(tuple(graded_part(a, d) for d in GRADES))


def filtration_degree(a: np.ndarray, tol: float = TOL_ALG) -> int:
    """Largest i with a in g^i; FILTRATION_ZERO for the zero matrix."""
    s = tol * _scale(a)
    for d in GRADES:
        if np.abs(graded_part(a, d)).max() >= s:
            return d
    return FILTRATION_ZERO


def proj_g_minus(a: np.ndarray) -> np.ndarray:
    """Projection onto g_{-2} + g_{-1} along p."""
    return graded_part(a, -2) + graded_part(a, -1)


def in_p(a: np.ndarray, tol: float = TOL_ALG) -> bool:
    """True iff a lies in the parabolic p = g_0 + g_1 + g_2."""
    return is_in_g(a, tol) and float(np.abs(proj_g_minus(a)).max()) < tol * _scale(a)


# Coordinates with respect to the fixed bases.  The eight real g-coordinates
# are read straight off the parametrizing entries, in G_BASIS order:
# (phi; Re x, Im x; alpha, beta; Re w, Im w; psi).

def g_coordinates(a: np.ndarray) -> np.ndarray:
    return np.array(
        [
            a[2, 0].imag,
            a[1, 0].real,
            a[1, 0].imag,
            a[0, 0].real,
            a[0, 0].imag,
            a[0, 1].real,
            a[0, 1].imag,
            a[0, 2].imag,
        ]
    )


def g_from_coordinates(c) -> np.ndarray:
    out = np.zeros((3, 3), dtype=complex)
    for ci, b in zip(c, G_BASIS):
        out = out + ci * b
    return out


def k_coordinates(x: KVector) -> np.ndarray:
    return np.array([x.t, x.z.real, x.z.imag])


def g_minus_coordinates(a: np.ndarray) -> np.ndarray:
    """Real coordinates of the g_- part of a in G_MINUS_BASIS order."""
    return np.array([a[2, 0].imag, a[1, 0].real, a[1, 0].imag])


def g_minus_from_coordinates(c) -> np.ndarray:
    out = np.zeros((3, 3), dtype=complex)
    for ci, b in zip(c, G_MINUS_BASIS):
        out = out + ci * b
    return out


def _dual_basis() -> tuple:
    # Solve the 3x3 pairing system so that trace_form(G_MINUS_BASIS[i], dual[j])
    # is exactly the identity up to solve precision.
    pairing = np.array(
        [[trace_form(gm, pp) for pp in P_PLUS_BASIS] for gm in G_MINUS_BASIS]
    )
    inv = np.linalg.inv(pairing)
    duals = []
    for i in range(3):
        d = np.zeros((3, 3), dtype=complex)
        for j in range(3):
            d = d + inv[j, i] * P_PLUS_BASIS[j]
        duals.append(_frozen(d))
    return tuple(duals)


#: Elements of g_1 + g_2 dual to G_MINUS_BASIS under trace_form.
P_PLUS_DUAL = _dual_basis()


def random_k(rng: np.random.Generator, scale: float = 1.0) -> KVector:
    t, u, v = rng.uniform(-scale, scale, 3)
    return KVector(t, complex(u, v))


def random_g(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    return g_from_coordinates(rng.uniform(-scale, scale, 8))


def random_p(rng: np.random.Generator, scale: float = 1.0) -> np.ndarray:
    out = np.zeros((3, 3), dtype=complex)
    for c, b in zip(rng.uniform(-scale, scale, 5), P_BASIS):
        out = out + c * b
    return out
