"""Named verification suites over every module, plus the report builders.

Each suite runs seeded randomized and deterministic checks and returns
CheckRecord lists; run_verify aggregates all of them at a configured set of
deformation parameters.  The run_* functions return plain JSON-ready dicts
with the stable shape {"config": ..., "records": [...], "summary": ...}
(plus command-specific payload keys), which the HTTP service exposes and
the CLI renders.
"""

from __future__ import annotations

import numpy as np

from . import algebra, cartan, groups, normalization, tractor
from .algebra import (
    E_T,
    G_BASIS,
    G_BASIS_DEGREES,
    G_MINUS_BASIS,
    GRADES,
    K_BASIS,
    P_BASIS,
    P_PLUS_DUAL,
    KVector,
    bracket_g,
    bracket_k,
    contact_form,
    filtration_degree,
    g_coordinates,
    graded_part,
    j_lambda,
    j_lambda_matrix,
    random_g,
    random_k,
    random_p,
    trace_form,
)
from .reports import Report, make_record, serialize_complex, serialize_matrix

DEFAULT_LAMBDAS = (0.5, 1.0, 2.0)
DEFAULT_FD_STEP = 1e-4
DEFAULT_STEPS = 1000
DEFAULT_SOLVER_TOL = 1e-12
DEFAULT_MAX_ITER = 50


def _tol(default: float, override: float | None) -> float:
    return default if override is None else override


def _scaled(value: float, *arrays) -> float:
    scale = max([1.0] + [float(np.abs(a).max()) for a in arrays])
    return float(value) / scale


def _membership_defect(a: np.ndarray) -> float:
    s = max(1.0, float(np.abs(a).max()))
    return max(
        abs(np.trace(a)),
        float(np.abs(a.conj().T @ algebra.FORM + algebra.FORM @ a).max()),
    ) / s


def _check_lambdas(lambdas) -> list:
    out = [float(l) for l in lambdas]
    if not out:
        raise ValueError("at least one lambda is required")
    for lam in out:
        if not lam > 0:
            raise ValueError(f"lambda must be positive, got {lam}")
    return out


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------

def algebra_suite(rng: np.random.Generator, tol: float | None = None) -> list:
    records = []

    worst = 0.0
    for _ in range(200):
        x, y, z = (random_k(rng) for _ in range(3))
        cyc = (
            bracket_k(bracket_k(x, y), z)
            + bracket_k(bracket_k(y, z), x)
            + bracket_k(bracket_k(z, x), y)
        )
        scale = max(1.0, x.norm()) * max(1.0, y.norm()) * max(1.0, z.norm())
        worst = max(worst, cyc.norm() / scale)
    records.append(
        make_record("algebra.jacobi_k", {"samples": 200}, worst, _tol(1e-12, tol))
    )

    worst = 0.0
    for _ in range(200):
        a, b, c = (random_g(rng) for _ in range(3))
        cyc = (
            bracket_g(bracket_g(a, b), c)
            + bracket_g(bracket_g(b, c), a)
            + bracket_g(bracket_g(c, a), b)
        )
        scale = np.prod([max(1.0, float(np.abs(m).max())) for m in (a, b, c)])
        worst = max(worst, float(np.abs(cyc).max()) / scale)
    records.append(
        make_record("algebra.jacobi_g", {"samples": 200}, worst, _tol(1e-12, tol))
    )

    worst = 0.0
    for a, da in zip(G_BASIS, G_BASIS_DEGREES):
        for b, db in zip(G_BASIS, G_BASIS_DEGREES):
            br = bracket_g(a, b)
            for d in GRADES:
                if d != da + db:
                    worst = max(worst, float(np.abs(graded_part(br, d)).max()))
    records.append(
        make_record(
            "algebra.grading_bracket_compatibility",
            {"pairs": "basis"},
            worst,
            _tol(1e-12, tol),
        )
    )

    worst = max(
        _membership_defect(bracket_g(random_g(rng), random_g(rng))) for _ in range(50)
    )
    records.append(
        make_record("algebra.bracket_closure", {"samples": 50}, worst, _tol(1e-10, tol))
    )

    levi = np.zeros((2, 2))
    minus_one = G_MINUS_BASIS[1:]
    for i, a in enumerate(minus_one):
        for j, b in enumerate(minus_one):
            levi[i, j] = algebra.g_minus_coordinates(bracket_g(a, b))[0]
    records.append(
        make_record(
            "algebra.levi_bracket_nondegenerate",
            {"basis": "g_{-1}"},
            abs(float(np.linalg.det(levi))),
            1e-6,
            kind="min",
        )
    )

    worst = 0.0
    for a, da in zip(G_BASIS, G_BASIS_DEGREES):
        for b, db in zip(G_BASIS, G_BASIS_DEGREES):
            if da + db != 0:
                worst = max(worst, abs(trace_form(a, b)))
    records.append(
        make_record(
            "algebra.trace_form_grading_orthogonal",
            {"pairs": "basis"},
            worst,
            _tol(1e-13, tol),
        )
    )

    pairing = np.array(
        [[trace_form(gm, d) for d in P_PLUS_DUAL] for gm in G_MINUS_BASIS]
    )
    records.append(
        make_record(
            "algebra.dual_basis_identity",
            {"basis": "g_-"},
            float(np.abs(pairing - np.eye(3)).max()),
            _tol(1e-13, tol),
        )
    )

    return records


def _j_lambda_records(lam: float, rng: np.random.Generator, tol: float | None) -> list:
    worst_sq = 0.0
    worst_levi = 0.0
    for _ in range(25):
        x = KVector(0.0, complex(*rng.uniform(-1, 1, 2)))
        y = KVector(0.0, complex(*rng.uniform(-1, 1, 2)))
        jx, jy = j_lambda(lam, x), j_lambda(lam, y)
        worst_sq = max(worst_sq, (j_lambda(lam, jx) + x).norm())
        worst_levi = max(
            worst_levi,
            abs(contact_form(bracket_k(jx, jy)) - contact_form(bracket_k(x, y))),
        )
    return [
        make_record(
            f"algebra.j_lambda_squares_to_minus_id[lam={lam:g}]",
            {"lam": lam, "samples": 25},
            worst_sq,
            _tol(1e-12, tol),
        ),
        make_record(
            f"algebra.j_lambda_preserves_levi_pairing[lam={lam:g}]",
            {"lam": lam, "samples": 25},
            worst_levi,
            _tol(1e-12, tol),
        ),
    ]


def _ad_series(a: np.ndarray, b: np.ndarray, terms: int = 40) -> np.ndarray:
    out = b.copy()
    term = b.copy()
    for n in range(1, terms):
        term = bracket_g(a, term) / n
        out = out + term
        if float(np.abs(term).max()) < 1e-18:
            break
    return out


def groups_suite(rng: np.random.Generator, tol: float | None = None) -> list:
    records = []

    worst = 0.0
    for _ in range(50):
        k = groups.exp_k(random_k(rng, 2.0))
        worst = max(
            worst,
            float(np.abs(k.conj().T @ k - np.eye(2)).max()),
            abs(np.linalg.det(k) - 1.0),
        )
    records.append(
        make_record("groups.exp_k_lands_in_su2", {"samples": 50}, worst, _tol(1e-12, tol))
    )

    worst = 0.0
    for _ in range(100):
        a = random_p(rng, 0.7)
        b = random_g(rng)
        lhs = groups.ad_g(groups.exp_p(a), b)
        worst = max(worst, _scaled(float(np.abs(lhs - _ad_series(a, b)).max()), b))
    records.append(
        make_record(
            "groups.ad_exp_matches_exp_ad", {"samples": 100}, worst, _tol(1e-9, tol)
        )
    )

    violations = 0.0
    for _ in range(100):
        p = groups.random_p_element(rng)
        for basis_el in G_BASIS:
            before = filtration_degree(basis_el)
            after = filtration_degree(groups.ad_g(p, basis_el))
            violations = max(violations, float(before - after))
    records.append(
        make_record(
            "groups.ad_preserves_filtration",
            {"samples": 100},
            violations,
            0.5,
        )
    )

    worst = 0.0
    for _ in range(50):
        p = groups.random_p_element(rng)
        dec = groups.decompose_p(p)
        worst = max(worst, _scaled(float(np.abs(dec.recompose() - p).max()), p))
    records.append(
        make_record(
            "groups.decompose_recompose_roundtrip",
            {"samples": 50},
            worst,
            _tol(1e-10, tol),
        )
    )

    z1 = random_p(rng, 0.8)
    z1 = graded_part(z1, 1)
    dec = groups.decompose_p(groups.exp_p(z1))
    uniq = max(
        float(np.abs(dec.g0 - np.eye(3)).max()),
        float(np.abs(dec.z1 - z1).max()),
        float(np.abs(dec.z2).max()),
    )
    records.append(
        make_record("groups.decompose_unique_factors", {"case": "exp(g_1)"}, uniq, _tol(1e-10, tol))
    )

    worst = 0.0
    for _ in range(25):
        g0a = groups.decompose_p(groups.random_p_element(rng)).g0
        g0b = groups.decompose_p(groups.random_p_element(rng)).g0
        sa, sb = groups.g0_to_complex(g0a), groups.g0_to_complex(g0b)
        worst = max(worst, abs(groups.g0_to_complex(g0a @ g0b) - sa * sb))
        linear = groups.ad_g(g0a, algebra.F_XI)[1, 0]
        worst = max(worst, abs(linear - 1j * sa))
    records.append(
        make_record(
            "groups.g0_scalar_homomorphism_complex_linear",
            {"samples": 25},
            worst,
            _tol(1e-10, tol),
        )
    )

    return records


def cartan_suite(
    lambdas, rng: np.random.Generator, tol: float | None = None
) -> list:
    records = []
    lambdas = _check_lambdas(lambdas)

    for lam in lambdas:
        phi = cartan.phi_closed_form(lam)
        kappa = cartan.curvature(phi)

        records.append(
            make_record(
                f"cartan.phi_images_in_algebra[lam={lam:g}]",
                {"lam": lam},
                max(_membership_defect(img) for img in phi.images),
                _tol(1e-10, tol),
            )
        )

        scale = max(1.0, max(float(np.abs(v).max()) for v in kappa.values))
        low = 0.0
        for v in kappa.values:
            for d in (-2, -1, 0):
                low = max(low, float(np.abs(graded_part(v, d)).max()))
        records.append(
            make_record(
                f"cartan.curvature_in_filtration_degree_1[lam={lam:g}]",
                {"lam": lam},
                low / scale,
                _tol(1e-10, tol),
            )
        )
        records.append(
            make_record(
                f"cartan.curvature_vanishes_on_contact_plane[lam={lam:g}]",
                {"lam": lam},
                float(np.abs(kappa.values[2]).max()) / scale,
                _tol(1e-10, tol),
            )
        )

        worst = 0.0
        for (a, b), val in zip(cartan.K_PAIRS, kappa.values):
            closed = cartan.curvature_closed_form(lam, K_BASIS[a], K_BASIS[b])
            worst = max(worst, _scaled(float(np.abs(val - closed).max()), closed))
        records.append(
            make_record(
                f"cartan.closed_form_matches_bracket_oracle[lam={lam:g}]",
                {"lam": lam},
                worst,
                _tol(1e-9, tol),
            )
        )

        _, j_pulled = cartan.induced_cr_structure(phi)
        records.append(
            make_record(
                f"cartan.induced_structure_is_j_lambda[lam={lam:g}]",
                {"lam": lam},
                float(np.abs(j_pulled - j_lambda_matrix(lam)).max()),
                _tol(1e-12, tol),
            )
        )

        coef = abs(cartan.harmonic_curvature(kappa))
        if abs(lam - 1.0) < 1e-9:
            records.append(
                make_record(
                    f"cartan.obstruction_vanishes_at_unit[lam={lam:g}]",
                    {"lam": lam},
                    coef,
                    _tol(1e-12, tol),
                )
            )
        else:
            records.append(
                make_record(
                    f"cartan.obstruction_bounded_away_from_zero[lam={lam:g}]",
                    {"lam": lam},
                    coef,
                    0.01,
                    kind="min",
                )
            )

        worst_eq = 0.0
        for _ in range(25):
            g, h = groups.random_p_element(rng), groups.random_p_element(rng)
            x = random_k(rng)
            a = random_p(rng)
            lhs = cartan.omega_eval(phi, g @ h, x, groups.ad_g(groups.p_inverse(h), a))
            rhs = groups.ad_g(groups.p_inverse(h), cartan.omega_eval(phi, g, x, a))
            worst_eq = max(worst_eq, _scaled(float(np.abs(lhs - rhs).max()), lhs, rhs))
        records.append(
            make_record(
                f"cartan.omega_equivariance[lam={lam:g}]",
                {"lam": lam, "samples": 25},
                worst_eq,
                _tol(1e-10, tol),
            )
        )

        worst_f = 0.0
        for _ in range(25):
            a = random_p(rng)
            out = cartan.omega_eval(phi, np.eye(3, dtype=complex), KVector(0.0, 0.0), a)
            worst_f = max(worst_f, _scaled(float(np.abs(out - a).max()), a))
        records.append(
            make_record(
                f"cartan.omega_reproduces_fundamental_fields[lam={lam:g}]",
                {"lam": lam, "samples": 25},
                worst_f,
                _tol(1e-10, tol),
            )
        )

        min_det = np.inf
        for _ in range(20):
            g = groups.random_p_element(rng)
            cols = [
                g_coordinates(cartan.omega_eval(phi, g, b, np.zeros((3, 3), dtype=complex)))
                for b in K_BASIS
            ]
            cols += [
                g_coordinates(cartan.omega_eval(phi, g, KVector(0.0, 0.0), pb))
                for pb in P_BASIS
            ]
            min_det = min(min_det, abs(np.linalg.det(np.column_stack(cols))))
        records.append(
            make_record(
                f"cartan.omega_coframe_nonsingular[lam={lam:g}]",
                {"lam": lam, "samples": 20},
                float(min_det),
                1e-8,
                kind="min",
            )
        )

        records.extend(_j_lambda_records(lam, rng, tol))

    records.append(
        make_record(
            "cartan.unit_parameter_map_is_homomorphism",
            {"lam": 1.0},
            cartan.phi_is_homomorphism_defect(cartan.phi_closed_form(1.0)),
            _tol(1e-12, tol),
        )
    )

    worst = 0.0
    for lam in rng.uniform(0.1, 10.0, 20):
        phi = cartan.phi_closed_form(lam)
        kappa = cartan.curvature(phi)
        for (a, b), val in zip(cartan.K_PAIRS, kappa.values):
            closed = cartan.curvature_closed_form(lam, K_BASIS[a], K_BASIS[b])
            worst = max(worst, _scaled(float(np.abs(val - closed).max()), closed))
    records.append(
        make_record(
            "cartan.closed_form_oracle_random_lambdas",
            {"samples": 20, "range": [0.1, 10.0]},
            worst,
            _tol(1e-9, tol),
        )
    )

    return records


def normalization_suite(
    lambdas, rng: np.random.Generator, tol: float | None = None,
    solver_tol: float = DEFAULT_SOLVER_TOL, max_iter: int = DEFAULT_MAX_ITER,
) -> list:
    records = []
    lambdas = _check_lambdas(lambdas)

    worst = 0.0
    for _ in range(100):
        psi = normalization.random_cochain2(rng)
        dd = normalization.kostant_codiff1(normalization.kostant_codiff2(psi))
        worst = max(worst, float(np.abs(dd).max()) / max(1.0, psi.max_abs()))
    records.append(
        make_record(
            "normalization.codifferential_squares_to_zero",
            {"samples": 100},
            worst,
            _tol(1e-10, tol),
        )
    )

    worst = 0.0
    for w in (1.0, 1j):
        psi = normalization.complex_linear_degree4(w)
        worst = max(worst, normalization.kostant_codiff2(psi).max_abs())
    records.append(
        make_record(
            "normalization.harmonic_degree4_in_kernel",
            {"span": "complex-linear maps"},
            worst,
            _tol(1e-10, tol),
        )
    )

    for lam in lambdas:
        phi = cartan.phi_closed_form(lam)
        psi = normalization.curvature_to_cochain(cartan.curvature(phi), phi)
        records.append(
            make_record(
                f"normalization.curvature_cochain_normal[lam={lam:g}]",
                {"lam": lam},
                normalization.kostant_codiff2(psi).max_abs(),
                _tol(1e-9, tol),
            )
        )

        comps = normalization.homogeneity_components(psi)
        low = max(
            comps[ell].max_abs()
            for ell in normalization.HOMOGENEITY_RANGE
            if ell < 4
        )
        records.append(
            make_record(
                f"normalization.curvature_homogeneity_ge_4[lam={lam:g}]",
                {"lam": lam},
                low / max(1.0, psi.max_abs()),
                _tol(1e-10, tol),
            )
        )

        deg4 = comps[4]
        stray = float(np.abs(deg4.values[2]).max())
        for slot in (0, 1):
            v = deg4.values[slot]
            stray = max(stray, float(np.abs(v - graded_part(v, 1)).max()))
        records.append(
            make_record(
                f"normalization.curvature_degree4_maps_to_g1[lam={lam:g}]",
                {"lam": lam},
                stray / max(1.0, psi.max_abs()),
                _tol(1e-10, tol),
            )
        )

        try:
            result = normalization.solve_phi_detailed(
                lam, tol=solver_tol, max_iter=max_iter
            )
            reference = cartan.phi_closed_form(lam)
            deviation = max(
                float(np.abs(a - b).max())
                for a, b in zip(result.phi.images, reference.images)
            )
            records.append(
                make_record(
                    f"normalization.solver_matches_closed_form[lam={lam:g}]",
                    {"lam": lam},
                    deviation,
                    _tol(1e-8, tol),
                )
            )
            records.append(
                make_record(
                    f"normalization.solver_residual[lam={lam:g}]",
                    {"lam": lam},
                    result.residual,
                    solver_tol,
                )
            )
            _, j_solved = cartan.induced_cr_structure(result.phi)
            records.append(
                make_record(
                    f"normalization.solver_reproduces_j_lambda[lam={lam:g}]",
                    {"lam": lam},
                    float(np.abs(j_solved - j_lambda_matrix(lam)).max()),
                    _tol(1e-8, tol),
                )
            )
        except normalization.SolveError:
            records.append(
                make_record(
                    f"normalization.solver_matches_closed_form[lam={lam:g}]",
                    {"lam": lam},
                    np.inf,
                    _tol(1e-8, tol),
                )
            )

    return records


def tractor_suite(
    lambdas,
    rng: np.random.Generator,
    tol: float | None = None,
    fd_step: float = DEFAULT_FD_STEP,
    steps: int = DEFAULT_STEPS,
) -> list:
    records = []
    lambdas = _check_lambdas(lambdas)

    worst = 0.0
    for _ in range(100):
        a, b = random_g(rng), random_g(rng)
        br = bracket_g(a, b)
        target_v = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        target_m = random_g(rng)
        for rep, target in ((tractor.STANDARD, target_v), (tractor.ADJOINT, target_m)):
            lhs = rep.apply(br, target)
            rhs = rep.apply(a, rep.apply(b, target)) - rep.apply(b, rep.apply(a, target))
            worst = max(worst, _scaled(float(np.abs(lhs - rhs).max()), lhs, rhs))
    records.append(
        make_record(
            "tractor.representation_property",
            {"samples": 100, "representations": ["standard", "adjoint"]},
            worst,
            _tol(1e-11, tol),
        )
    )

    y0 = KVector(0.3, complex(0.7, -0.2))
    z0 = KVector(-0.4, complex(0.1, 0.5))
    lam0 = lambdas[0]
    r_coarse = tractor.lie_derivative_identity_check(lam0, y0, z0, h=2e-3)
    r_fine = tractor.lie_derivative_identity_check(lam0, y0, z0, h=1e-3)
    records.append(
        make_record(
            "tractor.lie_derivative_fd_order_2",
            {"lam": lam0, "h": [2e-3, 1e-3]},
            abs(r_coarse / r_fine - 4.0),
            0.8,
        )
    )

    k0 = groups.exp_k(KVector(0.4, complex(-0.3, 0.6)))
    x0 = KVector(0.8, complex(0.2, -0.5))
    a_coarse = tractor.infinitesimal_automorphism_check(lam0, x0, y0, k0, h=2e-3)
    a_fine = tractor.infinitesimal_automorphism_check(lam0, x0, y0, k0, h=1e-3)
    records.append(
        make_record(
            "tractor.automorphism_fd_order_2",
            {"lam": lam0, "h": [2e-3, 1e-3]},
            abs(a_coarse / a_fine - 4.0),
            0.8,
        )
    )

    for lam in lambdas:
        worst = 0.0
        for _ in range(20):
            y, z = random_k(rng), random_k(rng)
            worst = max(worst, tractor.lie_derivative_identity_check(lam, y, z, h=fd_step))
        records.append(
            make_record(
                f"tractor.lie_derivative_identity[lam={lam:g}]",
                {"lam": lam, "samples": 20, "h": fd_step},
                worst,
                _tol(1e-6, tol),
            )
        )

        worst = 0.0
        for _ in range(50):
            x, y = random_k(rng), random_k(rng)
            k = groups.exp_k(random_k(rng, 2.0))
            worst = max(
                worst,
                tractor.infinitesimal_automorphism_check(lam, x, y, k, h=fd_step),
            )
        records.append(
            make_record(
                f"tractor.infinitesimal_automorphism[lam={lam:g}]",
                {"lam": lam, "samples": 50, "h": fd_step},
                worst,
                _tol(1e-6, tol),
            )
        )

        direction = E_T
        v = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        w = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        v_end = tractor.parallel_transport(lam, tractor.STANDARD, direction, v, 2 * np.pi, steps)
        w_end = tractor.parallel_transport(lam, tractor.STANDARD, direction, w, 2 * np.pi, steps)
        drift = abs(
            tractor.hermitian_pairing(v_end, w_end) - tractor.hermitian_pairing(v, w)
        )
        records.append(
            make_record(
                f"tractor.transport_conserves_pairing[lam={lam:g}]",
                {"lam": lam, "steps": steps, "s_max": "2pi"},
                drift,
                _tol(1e-8, tol),
            )
        )

        rk = tractor.parallel_transport(lam, tractor.STANDARD, direction, v, 1.0, steps)
        exact = tractor.transport_oracle(lam, tractor.STANDARD, direction, v, 1.0)
        records.append(
            make_record(
                f"tractor.transport_matches_exponential[lam={lam:g}]",
                {"lam": lam, "steps": steps, "s_max": 1.0},
                float(np.abs(rk - exact).max()),
                _tol(1e-10, tol),
            )
        )

        m0 = random_g(rng)
        rk_adj = tractor.parallel_transport(lam, tractor.ADJOINT, direction, m0, 1.0, steps)
        exact_adj = tractor.transport_oracle(lam, tractor.ADJOINT, direction, m0, 1.0)
        records.append(
            make_record(
                f"tractor.adjoint_transport_matches_conjugation[lam={lam:g}]",
                {"lam": lam, "steps": steps, "s_max": 1.0},
                float(np.abs(rk_adj - exact_adj).max()),
                _tol(1e-9, tol),
            )
        )

    return records


# ---------------------------------------------------------------------------
# report builders
# ---------------------------------------------------------------------------

def run_verify(
    lambdas=DEFAULT_LAMBDAS,
    seed: int = 0,
    tol: float | None = None,
    fd_step: float = DEFAULT_FD_STEP,
    steps: int = DEFAULT_STEPS,
) -> dict:
    """Run every invariant suite at the configured parameter set."""
    lambdas = _check_lambdas(lambdas)
    config = {
        "command": "verify",
        "lambdas": lambdas,
        "seed": seed,
        "tol": tol,
        "fd_step": fd_step,
        "steps": steps,
    }
    rng = np.random.default_rng(seed)
    report = Report(config=config)
    report.extend(algebra_suite(rng, tol))
    report.extend(groups_suite(rng, tol))
    report.extend(cartan_suite(lambdas, rng, tol))
    report.extend(normalization_suite(lambdas, rng, tol))
    report.extend(tractor_suite(lambdas, rng, tol, fd_step, steps))
    return report.to_dict()


def run_curvature(lambdas=(2.0,), tol: float | None = None) -> dict:
    """Curvature on all basis pairs, closed form next to the bracket oracle."""
    lambdas = _check_lambdas(lambdas)
    config = {"command": "curvature", "lambdas": lambdas, "tol": tol}
    report = Report(config=config)
    evaluations = []
    pair_names = ("Et^Eu", "Et^Ev", "Eu^Ev")
    for lam in lambdas:
        phi = cartan.phi_closed_form(lam)
        kappa = cartan.curvature(phi)
        pairs = []
        worst = 0.0
        for name, (a, b), val in zip(pair_names, cartan.K_PAIRS, kappa.values):
            closed = cartan.curvature_closed_form(lam, K_BASIS[a], K_BASIS[b])
            worst = max(worst, _scaled(float(np.abs(val - closed).max()), closed))
            pairs.append(
                {
                    "pair": name,
                    "closed_form": serialize_matrix(closed),
                    "bracket_oracle": serialize_matrix(val),
                }
            )
        harmonic = cartan.harmonic_curvature(kappa)
        evaluations.append(
            {
                "lambda": lam,
                "pairs": pairs,
                "harmonic_coefficient": serialize_complex(harmonic),
                "obstruction_magnitude": abs(harmonic),
            }
        )
        report.records.append(
            make_record(
                f"curvature.closed_form_matches_oracle[lam={lam:g}]",
                {"lam": lam},
                worst,
                _tol(1e-9, tol),
            )
        )
    out = report.to_dict()
    out["evaluations"] = evaluations
    return out


def run_sweep(
    lambda_from: float,
    lambda_to: float,
    samples: int,
    seed: int = 0,
) -> dict:
    """Obstruction magnitude and normality residual over a parameter range."""
    if not (lambda_from > 0 and lambda_to > 0):
        raise ValueError("sweep range must lie in (0, inf)")
    if samples < 2:
        raise ValueError("sweep needs at least 2 samples")
    config = {
        "command": "sweep",
        "lambda_from": float(lambda_from),
        "lambda_to": float(lambda_to),
        "samples": int(samples),
        "seed": seed,
    }
    rows = []
    for lam in np.linspace(lambda_from, lambda_to, samples):
        lam = float(lam)
        phi = cartan.phi_closed_form(lam)
        kappa = cartan.curvature(phi)
        rows.append(
            {
                "lambda": lam,
                "obstruction_magnitude": abs(cartan.harmonic_curvature(kappa)),
                "normality_residual": normalization.normality_residual(lam),
            }
        )
    report = Report(config=config)
    out = report.to_dict()
    out["rows"] = rows
    return out


def run_solve(
    lambdas=DEFAULT_LAMBDAS,
    seed: int = 0,
    tol: float = DEFAULT_SOLVER_TOL,
    max_iter: int = DEFAULT_MAX_ITER,
) -> dict:
    """Rederive the connection map at each parameter and compare to closed form."""
    lambdas = _check_lambdas(lambdas)
    config = {
        "command": "solve",
        "lambdas": lambdas,
        "seed": seed,
        "tol": tol,
        "max_iter": max_iter,
    }
    rng = np.random.default_rng(seed)
    report = Report(config=config)
    solves = []
    for lam in lambdas:
        init = rng.uniform(-0.3, 0.3, 15)
        try:
            result = normalization.solve_phi_detailed(
                lam, init, tol=tol, max_iter=max_iter
            )
        except normalization.SolveError as err:
            solves.append({"lambda": lam, "error": str(err)})
            report.records.append(
                make_record(
                    f"solve.converged[lam={lam:g}]", {"lam": lam, "seed": seed}, np.inf, tol
                )
            )
            continue
        reference = cartan.phi_closed_form(lam)
        deviation = max(
            float(np.abs(a - b).max())
            for a, b in zip(result.phi.images, reference.images)
        )
        solves.append(
            {
                "lambda": lam,
                "iterations": result.iterations,
                "residual": result.residual,
                "max_deviation_from_closed_form": deviation,
            }
        )
        report.records.append(
            make_record(
                f"solve.residual[lam={lam:g}]",
                {"lam": lam, "seed": seed},
                result.residual,
                tol,
            )
        )
        report.records.append(
            make_record(
                f"solve.matches_closed_form[lam={lam:g}]",
                {"lam": lam, "seed": seed},
                deviation,
                1e-8,
            )
        )
    out = report.to_dict()
    out["solves"] = solves
    return out


def run_transport(
    lambdas=(2.0,),
    steps: int = DEFAULT_STEPS,
    seed: int = 0,
    tol: float | None = None,
) -> dict:
    """Parallel-transport demos with conservation and oracle residuals."""
    lambdas = _check_lambdas(lambdas)
    if steps < 1:
        raise ValueError("steps must be at least 1")
    config = {"command": "transport", "lambdas": lambdas, "steps": steps, "seed": seed}
    rng = np.random.default_rng(seed)
    report = Report(config=config)
    runs = []
    for lam in lambdas:
        v = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        w = rng.uniform(-1, 1, 3) + 1j * rng.uniform(-1, 1, 3)
        v_end = tractor.parallel_transport(lam, tractor.STANDARD, E_T, v, 2 * np.pi, steps)
        w_end = tractor.parallel_transport(lam, tractor.STANDARD, E_T, w, 2 * np.pi, steps)
        drift = abs(
            tractor.hermitian_pairing(v_end, w_end) - tractor.hermitian_pairing(v, w)
        )
        rk = tractor.parallel_transport(lam, tractor.STANDARD, E_T, v, 1.0, steps)
        exact = tractor.transport_oracle(lam, tractor.STANDARD, E_T, v, 1.0)
        oracle_dev = float(np.abs(rk - exact).max())
        runs.append(
            {
                "lambda": lam,
                "pairing_drift": drift,
                "oracle_deviation": oracle_dev,
            }
        )
        report.records.append(
            make_record(
                f"transport.conserves_pairing[lam={lam:g}]",
                {"lam": lam, "steps": steps, "seed": seed},
                drift,
                _tol(1e-8, tol),
            )
        )
        report.records.append(
            make_record(
                f"transport.matches_exponential[lam={lam:g}]",
                {"lam": lam, "steps": steps, "seed": seed},
                oracle_dev,
                _tol(1e-10, tol),
            )
        )
    out = report.to_dict()
    out["runs"] = runs
    return out
