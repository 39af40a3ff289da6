"""Smoke tests for the python layer: bindings load, results round-trip, and
error classes map onto python exceptions."""

import math

import pytest

import nearunitary as nu


def test_orderings_hexagon():
    data = nu.orderings(3)
    assert data["N"] == 3
    assert len(data["wells"]) == 6
    letters = {w["letter"] for w in data["wells"]}
    assert letters == set("ABCDEF")
    assert len(data["edges"]) == 6
    assert {e["bond"] for e in data["edges"]} == {1, 2}


def test_tunneling_matrix_and_report():
    t = nu.tunneling_matrix(3, [1.0, 1.0])
    assert t.shape == (6, 6)
    assert abs(t + t.T - 2 * t).max() < 1e-15  # symmetric

    report = nu.spectral_report(3, [1.0, 1.0])
    eigs = sorted(
        c["eigenvalue"] for c in report["clusters"] for _ in range(c["multiplicity"])
    )
    assert eigs == pytest.approx([-6, -5, -5, -3, -3, -2], abs=1e-10)
    lowest = report["clusters"][0]
    assert lowest["irreps"] == {"trivial": 1}
    assert lowest["parity"] == "even"

    shifted = nu.spectral_report(3, [1.0, 1.0], with_shift=True)
    assert shifted["clusters"][-1]["eigenvalue"] == pytest.approx(0.0, abs=1e-12)


def test_bond_coefficients_harmonic():
    coeffs = nu.bond_coefficients(nu.harmonic_trap(), [0, 1, 2], g=10.0)
    values = coeffs["values"]
    assert len(values) == 2
    assert values[0] > 0
    assert values[1] == pytest.approx(values[0], rel=1e-4)
    doubled = nu.bond_coefficients(nu.harmonic_trap(), [0, 1, 2], g=20.0)
    assert doubled["values"][0] == pytest.approx(values[0] / 2, rel=1e-12)


def test_two_particle_exact_coefficient():
    coeffs = nu.bond_coefficients(nu.harmonic_trap(), [0, 1], g=10.0)
    assert coeffs["values"][0] == pytest.approx(
        math.sqrt(2 / math.pi) / 10.0, rel=1e-5
    )


def test_single_particle_energies_and_slater():
    energies = nu.single_particle_energies(nu.harmonic_trap(), 4)
    assert energies == pytest.approx([0.5, 1.5, 2.5, 3.5])
    box = nu.single_particle_energies(nu.box_trap(1.0), 2)
    assert box[1] / box[0] == pytest.approx(4.0)
    # coincident coordinates sit on a node
    assert nu.slater_eval(nu.harmonic_trap(), [0, 1, 2], [0.3, 0.3, 1.0]) == (
        pytest.approx(0.0, abs=1e-14)
    )


def test_ed_spectrum_smoke():
    spectrum = nu.ed_spectrum(
        nu.harmonic_trap(), num_particles=2, g=0.01, cutoff=10, level=[0, 1]
    )
    assert spectrum[0] == pytest.approx(1.0 + 0.01 / math.sqrt(2 * math.pi), rel=1e-4)
    assert spectrum == sorted(spectrum)


def test_multiplet_comparison_smoke():
    cmp = nu.multiplet_comparison(
        nu.harmonic_trap(), num_particles=3, g_samples=[20.0], cutoff=8, level=[0, 1, 2]
    )
    assert cmp["e_infinity"] == pytest.approx(4.5)
    sample = cmp["samples"][0]
    assert len(sample["ed_energies"]) == 6
    assert len(sample["rates"]) == 2


def test_cycles():
    assert nu.cycles_to_image("(12)", 3) == [2, 1, 3]
    assert nu.cycles_to_image("()", 2) == [1, 2]


def test_error_mapping():
    with pytest.raises(ValueError):
        nu.tunneling_matrix(1, [])
    with pytest.raises(ValueError):
        nu.bond_coefficients(nu.harmonic_trap(), [0, 1, 2], g=-1.0)
    with pytest.raises(ValueError):
        nu.ed_spectrum(nu.harmonic_trap(), 5, 1.0, 8, [0, 1, 2, 3, 4])
