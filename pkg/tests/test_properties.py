"""Structural invariants checked across the whole property battery.

Each test sweeps every algebra in the battery (catalog entries plus seeded
random hemisemidirect products) so a failure names the offending algebra.
"""

import pytest

from leibnizalg import verification

ALGEBRAS = verification.property_algebras()


def test_battery_composition():
    names = [name for name, _ in ALGEBRAS]
    assert len(ALGEBRAS) == 31
    assert len(set(names)) == len(names)
    assert sum(1 for n in names if n.startswith("random-")) == 25


def test_battery_is_deterministic():
    again = verification.property_algebras()
    assert [name for name, _ in again] == [name for name, _ in ALGEBRAS]
    assert all(s.c == t.c for (_, s), (_, t) in zip(again, ALGEBRAS))


def test_every_battery_algebra_validates():
    for name, t in ALGEBRAS:
        assert t.is_left_leibniz, name


@pytest.mark.parametrize(
    "predicate",
    [p for _, p in verification.PROPERTY_PREDICATES],
    ids=[name for name, _ in verification.PROPERTY_PREDICATES])
def test_invariant_holds_on_every_battery_algebra(predicate):
    failed = [name for name, t in ALGEBRAS if not predicate(t)]
    assert not failed
