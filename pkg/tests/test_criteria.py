import random

import pytest

from srsq import (
    GF2,
    complex_of_ideal,
    condition3_check,
    cycle_complex,
    depth2_criterion,
    edge_ideal,
    explore_random,
    four_path,
    complete_graph,
    new_complex,
    paper_audit,
    path_complex,
    phantom_pentagon,
    random_pure_complex,
    rp2,
    s2_criterion,
    simplex_complex,
    stanley_reisner,
    symbolic2_equals_square,
    symbolic_power,
    symbolic_square_depth_report,
)
from helpers import brute_nonfaces


def three_points():
    return complex_of_ideal(edge_ideal(complete_graph(3)))


# -- diameter criterion ------------------------------------------------------------

def test_depth2_criterion():
    assert depth2_criterion(rp2()) == depth2_criterion(rp2())
    assert depth2_criterion(rp2()).holds and depth2_criterion(rp2()).diameter == 1
    assert depth2_criterion(phantom_pentagon(2)).holds
    assert depth2_criterion(phantom_pentagon(4)).holds
    r = depth2_criterion(path_complex(6))
    assert not r.holds and r.diameter == 5
    with pytest.raises(ValueError):
        depth2_criterion(three_points())  # dim 0


# -- (S2) criterion -----------------------------------------------------------------

def test_s2_criterion():
    assert s2_criterion(rp2()).holds
    assert s2_criterion(cycle_complex(5)).holds
    r = s2_criterion(path_complex(6))
    assert not r.holds and r.witness_face == ()
    with pytest.raises(ValueError):
        s2_criterion(new_complex(3, [(1, 2), (3,)]))  # not pure


# -- the non-face triple condition -----------------------------------------------------

def brute_condition3(delta):
    """Direct triple loop, the independent oracle (tiny n only)."""
    nf = brute_nonfaces(delta)
    if not nf:
        return True
    for f1 in nf:
        for f2 in nf:
            for f3 in nf:
                u, w = f1 | f2 | f3, f1 & f2 & f3
                if not any(
                    g1 & ~u == 0 and g2 & ~u == 0 and (g1 & g2) & ~w == 0
                    for g1 in nf
                    for g2 in nf
                ):
                    return False
    return True


def test_condition3_triangle_fails():
    r = condition3_check(three_points())
    assert not r.holds
    assert r.witness is not None and len(r.witness) == 3


def test_condition3_pentagon_and_simplex():
    assert condition3_check(cycle_complex(5)).holds
    assert condition3_check(simplex_complex(4)).holds  # vacuous: no non-faces


def test_condition3_bound():
    from srsq import disjoint_pentagons

    with pytest.raises(ValueError):
        condition3_check(disjoint_pentagons(2))  # n = 10 over the default bound


def test_condition3_against_direct_loop():
    rng = random.Random(67)
    for _ in range(25):
        n = rng.randint(3, 4)
        d = random_pure_complex(rng, n)
        assert condition3_check(d).holds == brute_condition3(d)
    assert condition3_check(three_points()).holds == brute_condition3(three_points())


def test_condition3_equivalent_to_power_equality():
    rng = random.Random(71)
    for _ in range(60):
        n = rng.randint(3, 7)
        d = random_pure_complex(rng, n)
        I = stanley_reisner(d)
        eq = I.power(2) == symbolic_power(d, 2)
        assert condition3_check(d).holds == eq
        assert symbolic2_equals_square(I).equal == eq


# -- diameter vs symbolic-square depth ----------------------------------------------------

def test_depth2_equivalence_random():
    rng = random.Random(73)
    for _ in range(30):
        n = rng.randint(3, 7)
        d = random_pure_complex(rng, n)
        deep = symbolic_square_depth_report(d, GF2).depth >= 2
        assert depth2_criterion(d).holds == deep


# -- audits -----------------------------------------------------------------------------

def test_pentagon_audit():
    report = paper_audit(cycle_complex(5))
    assert report.violations == ()
    assert report.cm_square_battery
    assert report.sym2.equal
    assert report.condition3 is not None and report.condition3.holds
    assert report.s2 is not None and report.s2.holds
    assert all(r.is_gorenstein for r in report.gorenstein.values())


def test_rp2_audit_matches_expected_shape():
    report = paper_audit(rp2())
    assert report.violations == ()
    assert report.s2.holds
    assert not report.sym2.equal
    assert not report.condition3.holds
    assert not report.cm_square_battery
    assert not any(r.is_gorenstein for r in report.gorenstein.values())
    assert {f.name: r.is_cm for f, r in report.cm_symbolic_square.items()} == {
        "Q": False,
        "F2": False,
    }


def test_four_path_audit():
    report = paper_audit(four_path())
    assert report.violations == ()
    assert not report.cm_square_battery
    assert not any(r.is_gorenstein for r in report.gorenstein.values())


def test_nonpure_audit_skips_s2():
    d = new_complex(3, [(1, 2), (3,)])
    report = paper_audit(d)
    assert report.s2 is None
    assert report.violations == ()


def test_explore_deterministic_and_clean():
    a = explore_random(5, 12, 5)
    b = explore_random(5, 12, 5)
    assert len(a) == len(b) == 12
    for ra, rb in zip(a, b):
        assert ra.delta == rb.delta
        assert ra.violations == rb.violations == ()


def test_random_pure_complex_properties():
    rng = random.Random(79)
    for _ in range(30):
        n = rng.randint(3, 7)
        d = random_pure_complex(rng, n)
        assert d.is_pure() and d.n == n and d.dim >= 1
        assert d.support == (1 << n) - 1
