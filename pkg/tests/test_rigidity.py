from hypothesis import given, settings, strategies as st

from coxrigid.classify import is_spherical, maximal_spherical_subsets
from coxrigid.diagram import CoxeterDiagram, dihedral, path_232, claw_232, label_of, linear
from coxrigid.rigidity import (EVEN, FINITE, MAIN, check_condition_1, check_condition_2,
                               check_condition_3, counts_by_pair, rigidity_report)

from strategies import diagrams, renamings

EVEN_LABELS = st.sampled_from([2, 4, 6, 8, float("inf")])


def test_condition_1():
    assert check_condition_1(path_232()).holds
    c = check_condition_1(linear([3, 3]))
    assert not c.holds and ("s1", "s2") in c.witnesses
    assert check_condition_1(linear([4, 6])).holds


def test_condition_2():
    assert check_condition_2(path_232()).holds
    path = CoxeterDiagram("abc", [("a", "b", 3), ("b", "c", 3)])
    c = check_condition_2(path)
    assert not c.holds and c.witnesses == (("a", "b", "c"),)
    assert check_condition_2(linear([4, 4])).holds


def test_condition_3():
    c = check_condition_3(path_232())
    assert not c.holds and c.counts == ((("x2", "x3"), 3),)
    assert check_condition_3(dihedral(5)).counts == ((("a", "b"), 1),)
    assert check_condition_3(dihedral(5)).holds
    c = check_condition_3(claw_232())
    assert not c.holds and counts_by_pair(rigidity_report(claw_232())) == {("x2", "x3"): 3}


def test_report_path_and_claw():
    for d in (path_232(), claw_232()):
        r = rigidity_report(d)
        assert r.condition1.holds and r.condition2.holds and not r.condition3.holds
        assert not r.is_even and not r.is_finite
        assert r.applicable_theorems == frozenset()


def test_report_even_infinite():
    d = CoxeterDiagram("abc", [("a", "b", 4), ("b", "c", 6)])
    assert rigidity_report(d).applicable_theorems == {EVEN, MAIN}


def test_report_i2_5():
    assert rigidity_report(dihedral(5)).applicable_theorems == {FINITE, MAIN}


def _witnesses_sound(d, r):
    maximal = {m.vertices for m in maximal_spherical_subsets(d)}
    for p in r.condition1.witnesses:
        assert label_of(d, *p) % 2 == 1 and p not in maximal
        assert is_spherical(d, p)
    for s, t, u in r.condition2.witnesses:
        assert len({s, t, u}) == 3
        assert label_of(d, s, t) % 2 == 1 and label_of(d, t, u) % 2 == 1
    for p, hits in r.condition3.meeting:
        assert all(set(T) & set(p) and T in maximal for T in hits)
    for p in r.condition3.witnesses:
        assert sum(1 for T in maximal if set(T) & set(p)) > 2


@settings(max_examples=60, deadline=None)
@given(diagrams(max_size=5))
def test_report_invariants(d):
    r = rigidity_report(d)
    assert (MAIN in r.applicable_theorems) == r.main_conditions_hold
    assert (EVEN in r.applicable_theorems) == r.is_even
    assert (FINITE in r.applicable_theorems) == r.is_finite
    _witnesses_sound(d, r)


@settings(max_examples=40, deadline=None)
@given(st.data())
def test_isomorphism_invariance(data):
    d = data.draw(diagrams(max_size=5))
    e = d.rename(data.draw(renamings(d)))
    r1, r2 = rigidity_report(d), rigidity_report(e)
    assert (r1.condition1.holds, r1.condition2.holds, r1.condition3.holds) == \
        (r2.condition1.holds, r2.condition2.holds, r2.condition3.holds)
    assert r1.applicable_theorems == r2.applicable_theorems
    assert sorted(c for _, c in r1.condition3.counts) == sorted(c for _, c in r2.condition3.counts)


@settings(max_examples=40, deadline=None)
@given(diagrams(max_size=6, labels=EVEN_LABELS))
def test_even_diagrams_satisfy_conditions(d):
    r = rigidity_report(d)
    assert r.is_even and r.main_conditions_hold
