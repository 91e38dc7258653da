"""Ring presentations: Hilbert data, Krull dimension, the zero ring."""

import pytest

from habw import (
    MalformedInputError,
    PolyRing,
    PrimeField,
    RingPresentation,
    ZeroRingError,
    hilbert_function,
    make_ring,
)

F = PrimeField(32003)


def test_hilbert_polynomial_ring(ring2):
    assert [ring2.hilbert(d) for d in range(4)] == [1, 2, 3, 4]
    assert hilbert_function(ring2, 1) == 2


def test_hilbert_dual_numbers(dual_numbers):
    assert [dual_numbers.hilbert(d) for d in range(4)] == [1, 1, 0, 0]


def test_hilbert_node_curve(node_curve):
    assert node_curve.hilbert(3) == 2  # x^3 and y^3 survive


def test_krull_dimensions(ring3, fat_point):
    assert ring3.krull_dim() == 3
    assert fat_point.krull_dim() == 0
    amb = PolyRing(F, ["x", "y", "z"])
    x, y, _z = amb.gens()
    assert RingPresentation(amb, [x * y]).krull_dim() == 2


def test_zero_ring_detection():
    amb = PolyRing(F, ["x"])
    with pytest.raises(ZeroRingError):
        RingPresentation(amb, [amb.one()])
    ring = RingPresentation(amb, [amb.one()], allow_zero=True)
    assert ring.is_zero_ring
    assert ring.krull_dim() == -1
    with pytest.raises(ZeroRingError):
        ring.require_nonzero()


def test_nf_of_one_in_nonzero_ring(dual_numbers):
    assert dual_numbers.nf(dual_numbers.ambient.one()) == dual_numbers.ambient.one()


def test_inhomogeneous_ideal_rejected():
    amb = PolyRing(F, ["x", "y"])
    x, y = amb.gens()
    with pytest.raises(MalformedInputError):
        RingPresentation(amb, [x**2 + y])


def test_ground_field_as_ring():
    R = make_ring(F, [])
    assert R.krull_dim() == 0
    assert R.hilbert(0) == 1
    assert R.hilbert(1) == 0
    assert R.is_artinian()
    assert R.top_degree() == 0


def test_top_degree(fat_point, ci_point):
    assert fat_point.top_degree() == 1
    assert ci_point.top_degree() == 2


def test_weighted_ring_hilbert():
    R = make_ring(F, ["x", "y"], weights=(1, 2))
    # degree 2: x^2 and y
    assert R.hilbert(2) == 2
    assert R.hilbert(1) == 1


def test_make_ring_with_string_ideal():
    R = make_ring(F, ["x", "y"], ideal=["x^2 - y^2"])
    assert R.krull_dim() == 1
