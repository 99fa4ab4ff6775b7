import pytest

from coxrigid import lab
from coxrigid.diagram import (CoxeterDiagram, diagram_isomorphic, dihedral, dihedral_times_a1,
                              path_232, label_of, linear, odd_components)
from coxrigid.errors import CapExceeded, NoValidPsi
from coxrigid.rigidity import rigidity_report

from conftest import CORPUS, i2_times_a1, product_a1
from oracles import enumerate_matrices, key, reflection_keys, word_matrix


def table(d):
    return lab.enumerate_elements(d)


def records_of(d):
    t = table(d)
    return t, lab.find_coxeter_generating_sets(t)


def gens(t):
    return list(t.generators.values())


def test_enumerate_examples():
    assert len(table(dihedral(3))) == 6
    t = table(CoxeterDiagram(["a"]))
    assert t.elements == [(), ("a",)]
    with pytest.raises(CapExceeded):
        lab.enumerate_elements(path_232(), cap=10000)


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_table_laws_and_oracle(name):
    d = CORPUS[name]
    t = table(d)
    assert lab.check_group_laws(t)
    # the product table agrees with matrix multiplication
    mats = {i: word_matrix(d, e) for i, e in enumerate(t.elements)}
    keys = {key(m): i for i, m in mats.items()}
    assert len(keys) == len(t) == len(enumerate_matrices(d))
    for i in range(0, len(t), 3):
        for j in range(len(t)):
            assert keys[key(mats[i] @ mats[j])] == t.mul(i, j)


def test_reflection_set_examples():
    t = table(dihedral(6))
    assert len(lab.reflection_set(t, gens(t))) == 6
    t = table(i2_times_a1(3))
    assert len(lab.reflection_set(t, gens(t))) == 4
    t = table(product_a1(2))
    assert len(lab.reflection_set(t, gens(t))) == 2


@pytest.mark.parametrize("m", range(3, 9))
def test_dihedral_has_m_reflections(m):
    t = table(dihedral(m))
    assert len(lab.reflection_set(t, gens(t))) == m


@pytest.mark.parametrize("name", sorted(CORPUS))
def test_reflection_set_matches_matrix_oracle(name):
    d = CORPUS[name]
    t = table(d)
    got = {key(word_matrix(d, t.elements[i])) for i in lab.reflection_set(t, gens(t))}
    assert got == reflection_keys(d)


def test_direct_product_reflections_are_disjoint_union():
    d = i2_times_a1(5)
    t = table(d)
    left = lab.reflection_set(t, [t.generators["a"], t.generators["b"]])
    right = lab.reflection_set(t, [t.generators["c"]])
    assert not left & right
    assert left | right == lab.reflection_set(t, gens(t))
    assert (len(left), len(right)) == (5, 1)


def test_generating_sets_i2_3():
    t, recs = records_of(dihedral(3))
    assert len(recs) == 3
    refl = lab.reflection_set(t, gens(t))
    for r in recs:
        assert len(r.generators) == 2 and set(r.generators) <= refl
        assert [m for *_, m in r.diagram.edges] == [3]


def test_generating_sets_i2_6():
    t, recs = records_of(dihedral(6))
    two = [r for r in recs if len(r.generators) == 2]
    three = [r for r in recs if len(r.generators) == 3]
    assert two and all(r.diagram.edges[0][2] == 6 for r in two)
    assert three and all(diagram_isomorphic(r.diagram, dihedral_times_a1(3)) for r in three)


def test_generating_sets_trivial_group():
    t, recs = records_of(CoxeterDiagram([]))
    assert len(t) == 1
    assert [r.generators for r in recs] == [()]


def test_generating_set_records_are_certified(corpus_diagram):
    t, recs = records_of(corpus_diagram)
    std = lab.standard_record(t)
    assert std in recs
    for r in recs:
        assert all(t.orders[g] == 2 for g in r.generators)
        assert len(t.subgroup(r.generators)) == len(t)
        assert all(label_of(r.diagram, r.vertex_of[g], r.vertex_of[h]) == t.orders[t.mul(g, h)]
                   for g in r.generators for h in r.generators if g != h)


def test_generating_sets_search_cap():
    t = table(linear([3, 3]))  # order 24
    assert lab.find_coxeter_generating_sets(t, max_size=1) == []
    with pytest.raises(CapExceeded):
        lab.find_coxeter_generating_sets(t, max_order=20)


def test_empirical_rigidity_i2_6():
    t, recs = records_of(dihedral(6))
    ex = lab.empirical_reflection_rigidity(t, recs)
    assert ex.passed
    sizes = {len(c.reflections): {len(r.generators) for r in c.records} for c in ex.classes}
    assert sizes[6] == {2} and sizes[4] == {3}


def test_empirical_rigidity_small():
    for d in (i2_times_a1(3), CoxeterDiagram(["a"])):
        assert lab.empirical_reflection_rigidity(*records_of(d)).passed


def test_empirical_rigidity_detects_violation():
    t, recs = records_of(dihedral(6))
    a, b = recs[0], next(r for r in recs if len(r.generators) == 3)
    fake = lab.GeneratingSetRecord(b.generators, b.diagram, a.reflections, b.vertex_of, t)
    assert not lab.empirical_reflection_rigidity(t, [a, fake]).passed
    assert not lab.verify_size_lemma([a, fake])


def test_size_lemma():
    assert lab.verify_size_lemma(records_of(dihedral(6))[1])
    assert lab.verify_size_lemma(records_of(dihedral(5))[1])
    assert lab.verify_size_lemma(records_of(dihedral(5))[1][:1])


def test_conjugacy_lemma_examples():
    t = table(dihedral_times_a1(3))
    assert lab.generator_conjugacy_classes(t) == [("a", "b"), ("c",)]
    assert lab.verify_conjugacy_lemma(dihedral_times_a1(3), t)
    t = table(dihedral(4))
    assert lab.generator_conjugacy_classes(t) == [("a",), ("b",)]
    t = table(dihedral(3))
    assert lab.generator_conjugacy_classes(t) == [("a", "b")]


def test_conjugacy_lemma_corpus(corpus_diagram):
    t = table(corpus_diagram)
    assert lab.generator_conjugacy_classes(t) == odd_components(corpus_diagram)


def _record_named(recs, *names):
    return next(r for r in recs if r.diagram.vertices == tuple(sorted(names)))


def test_correspondence_examples():
    t, recs = records_of(dihedral(6))
    three = next(r for r in recs if len(r.generators) == 3)
    [wit] = lab.verify_max_spherical_correspondence(dihedral(6), three)
    assert wit.conjugator == 0 and wit.subset == ("a", "b")
    assert wit.correspondent == three.diagram.vertices
    assert wit.holds(t)

    t, recs = records_of(dihedral(3))
    rec = _record_named(recs, "a", "a.b.a")
    [wit] = lab.verify_max_spherical_correspondence(dihedral(3), rec)
    assert wit.conjugator == 0 and wit.correspondent == ("a", "a.b.a")


def test_correspondence_cross_pairs_i2_3_a1():
    t, recs = records_of(i2_times_a1(3))
    for r1 in recs:
        for r2 in recs:
            for wit in lab.max_spherical_correspondence(r1, r2):
                assert wit.holds(t)


def test_condition_transfer():
    d = dihedral(5)
    t, recs = records_of(d)
    rec = _record_named(recs, "a", "a.b.a")
    assert rec.diagram.edges[0][2] == 5
    assert lab.verify_condition_transfer(d, rec)
    for d in (dihedral(7), dihedral(4), product_a1(3)):
        t, recs = records_of(d)
        std = lab.standard_record(t)
        same = [r for r in recs if r.reflections == std.reflections]
        assert same and all(lab.verify_condition_transfer(d, r) for r in same)


def test_condition_transfer_preconditions():
    t, recs = records_of(linear([3, 3]))  # A3 fails condition (1)
    with pytest.raises(ValueError):
        lab.verify_condition_transfer(linear([3, 3]), recs[0])
    t, recs = records_of(dihedral(6))
    other = next(r for r in recs if len(r.generators) == 3)
    with pytest.raises(ValueError):
        lab.verify_condition_transfer(dihedral(6), other)


def test_construct_psi_examples():
    d = dihedral(5)
    t, recs = records_of(d)
    rec = _record_named(recs, "a", "a.b.a")
    assert lab.construct_psi(d, rec) == {"a": "a", "b": "a.b.a"}
    assert lab.construct_psi(d, lab.standard_record(t)) == {"a": "a", "b": "b"}


@pytest.mark.parametrize("d", [dihedral(7), dihedral(4), product_a1(3), i2_times_a1(4)], ids=str)
def test_construct_psi_certified(d):
    assert rigidity_report(d).main_conditions_hold
    t, recs = records_of(d)
    std = lab.standard_record(t)
    for rec in recs:
        if rec.reflections != std.reflections:
            continue
        psi = lab.construct_psi(d, rec)
        assert sorted(psi.values()) == list(rec.diagram.vertices)
        for s in d.vertices:
            for u in d.vertices:
                assert label_of(d, s, u) == label_of(rec.diagram, psi[s], psi[u])
            # rule (i): psi(s) is conjugate to s
            assert rec.element_of[psi[s]] in lab.reflection_set(t, [t.generators[s]])


def test_construct_psi_raises_when_impossible():
    # forge a record whose diagram has the wrong label; no bijection can match it
    d = dihedral(5)
    t, recs = records_of(d)
    rec = _record_named(recs, "a", "a.b.a")
    forged = lab.GeneratingSetRecord(rec.generators, dihedral(3, ("a", "a.b.a")), rec.reflections,
                                     rec.vertex_of, t)
    with pytest.raises(NoValidPsi):
        lab.construct_psi(d, forged)


@pytest.mark.parametrize("k", [3, 5])
def test_example1(k):
    r = lab.example1_report(k)
    assert r.order_left == r.order_right == 4 * k
    assert r.isomorphism_verified
    assert (r.reflections_left, r.reflections_right) == (2 * k, k + 1)
    assert r.reflection_compatible == 0 and r.isomorphisms_checked > 0
    assert r.passed


def test_example1_rejects_even_k():
    with pytest.raises(ValueError):
        lab.example1_report(4)


def test_example2():
    r = lab.example2_report()
    assert r.passed
    assert not r.left_right_isomorphic
