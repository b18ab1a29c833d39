"""Run every structural check on one ideal and collect the reports."""
from __future__ import annotations

from .cw import (build_cw, grid_for_depth, verify_cellular, verify_face_poset,
                 verify_incidence_complex, verify_subcomplex_acyclicity)
from .ideal import MonomialIdeal, exchange_violations
from .monomial import DEFAULT_PRIME
from .oracle import compare_betti
from .poset import (AdmissiblePoset, verify_diamond, verify_el_shelling,
                    verify_falling_chains, verify_order)
from .report import Report
from .resolution import (build_ek_resolution, build_resolution, compare_builders,
                         verify_complex, verify_exact, verify_minimal, verify_multigrading)
from .topology import verify_cone_coefficients, verify_cycles, verify_spheres

DEPTHS = ("quick", "full", "exhaustive")


def stability_report(N: MonomialIdeal) -> Report:
    report = Report("stability", checked=len(N.gens))
    for g, i, moved in exchange_violations(N):
        report.fail(f"{N.fmt(g)} -> {N.fmt(moved)} (exchange into x_{i}) is not in the ideal")
    return report


def run_all(N: MonomialIdeal, p: int = DEFAULT_PRIME, depth: str = "full", seed: int = 0):
    if depth not in DEPTHS:
        raise ValueError(f"unknown depth {depth!r}")
    reports = [stability_report(N)]
    if not reports[0]:
        return reports
    P = AdmissiblePoset(N)
    F = build_resolution(P, p)
    X = build_cw(P)
    reports += [
        verify_order(P, unreduced=depth == "exhaustive"),
        verify_el_shelling(P),
        verify_diamond(P),
        verify_falling_chains(P),
        verify_cycles(P),
        verify_spheres(P, p),
        verify_cone_coefficients(P),
        compare_builders(F, build_ek_resolution(N, p)),
        verify_complex(F),
        verify_minimal(F),
        verify_multigrading(F),
        verify_exact(N, F, depth, seed),
        compare_betti(N, F, depth, seed),
        verify_cellular(F, X),
        verify_incidence_complex(X, p),
        verify_face_poset(P, X),
        verify_subcomplex_acyclicity(X, p, grid_for_depth(X, depth, seed)),
    ]
    return reports
