"""Ordering-domain tunneling analysis for strongly interacting 1D particles.

Thin pure-python layer over the compiled ``_nearunitary`` extension: trap
specifications are passed as dictionaries and structured results come back
as dictionaries decoded from the extension's JSON output.
"""

from __future__ import annotations

import json
from typing import Sequence

import _nearunitary as _core

__all__ = [
    "harmonic_trap",
    "box_trap",
    "custom_trap",
    "orderings",
    "tunneling_matrix",
    "spectral_report",
    "bond_coefficients",
    "single_particle_energies",
    "slater_eval",
    "ed_spectrum",
    "multiplet_comparison",
    "cycles_to_image",
]


def harmonic_trap() -> dict:
    return {"kind": "harmonic"}


def box_trap(length: float) -> dict:
    return {"kind": "box", "L": float(length)}


def custom_trap(x: Sequence[float], v: Sequence[float]) -> dict:
    return {"kind": "custom", "x": list(map(float, x)), "V": list(map(float, v))}


def orderings(num_particles: int) -> dict:
    """Wells in lexicographic order, letter labels (N=3), tagged edges."""
    return json.loads(_core.orderings_json(num_particles))


def tunneling_matrix(num_particles: int, rates: Sequence[float]):
    """Dense tunneling operator as a numpy array (N! x N!)."""
    return _core.tunneling_matrix(num_particles, list(map(float, rates)))


def spectral_report(
    num_particles: int,
    rates: Sequence[float],
    cluster_tol: float | None = None,
    with_shift: bool = False,
) -> dict:
    """Clustered tunneling eigenvalues with irrep and parity labels."""
    return json.loads(
        _core.spectral_report_json(
            num_particles, list(map(float, rates)), cluster_tol, with_shift
        )
    )


def bond_coefficients(
    trap: dict, level: Sequence[int], g: float, rel_tol: float = 1e-7
) -> dict:
    """Quadrature coupling coefficients t_1..t_{N-1} for one multiplet."""
    return json.loads(
        _core.bond_coefficients_json(json.dumps(trap), list(level), g, rel_tol)
    )


def single_particle_energies(trap: dict, count: int) -> list[float]:
    return list(_core.single_particle_energies(json.dumps(trap), count))


def slater_eval(trap: dict, level: Sequence[int], x: Sequence[float]) -> float:
    return _core.slater_eval(json.dumps(trap), list(level), list(map(float, x)))


def ed_spectrum(
    trap: dict, num_particles: int, g: float, cutoff: int, level: Sequence[int]
) -> list[float]:
    """Lowest exact-diagonalization eigenvalues in the truncated basis."""
    return list(
        _core.ed_spectrum(json.dumps(trap), num_particles, g, cutoff, list(level))
    )


def multiplet_comparison(
    trap: dict,
    num_particles: int,
    g_samples: Sequence[float],
    cutoff: int,
    level: Sequence[int],
) -> dict:
    """ED multiplet versus the tunneling prediction at each sampled coupling."""
    return json.loads(
        _core.multiplet_comparison_json(
            json.dumps(trap),
            num_particles,
            list(map(float, g_samples)),
            cutoff,
            list(level),
        )
    )


def cycles_to_image(cycles: str, num_particles: int) -> list[int]:
    """Parse cycle notation such as "(12)(3)" into a 1-based image vector."""
    return list(_core.cycles_to_image(cycles, num_particles))
