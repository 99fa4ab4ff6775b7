"""Brute-force experiments in small finite Coxeter groups.

A :class:`FiniteGroupTable` is the full multiplication table of ``W``,
built by breadth-first search over canonical words.  On top of it this
module searches every Coxeter generating set of ``W`` and checks, by
exhaustion, the statements about reflections, conjugacy, maximal
spherical subsets and the bijection between generating sets that the
rigidity argument relies on.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple

import numpy as np

from .classify import maximal_spherical_subsets, parabolic_order
from .diagram import (CoxeterDiagram, claw_232, diagram_isomorphic, dihedral_times_a1,
                      doubled_dihedral, induced, label_of, odd_components, path_232)
from .errors import CapExceeded, NoCorrespondent, NotUnique, NoValidPsi
from .rigidity import is_even, rigidity_report
from .twist import TwistResult, TwistSpec, apply_twist
from .words import DEFAULT_BUDGET, GeneratorMap, Word, engine, verify_isomorphism

DEFAULT_ELEMENT_CAP = 5000
MAX_SEARCH_ORDER = 200


class FiniteGroupTable:
    """Multiplication table of a finite Coxeter group.

    ``elements[i]`` is the canonical word of element ``i`` (index 0 is the
    identity, indices follow BFS order).  ``product[i, j]`` is the index of
    ``elements[i] * elements[j]`` and ``inverse[i]`` that of its inverse.
    """

    def __init__(self, diagram: CoxeterDiagram, elements: List[Word], parent: List[int],
                 last: List[int], right: np.ndarray):
        self.diagram = diagram
        self.elements = elements
        self.index = {w: i for i, w in enumerate(elements)}
        self.generators = {s: self.index[(s,)] for s in diagram.vertices}
        n = len(elements)
        product = np.empty((n, n), dtype=np.int32)
        product[:, 0] = np.arange(n)
        for j in range(1, n):
            product[:, j] = right[product[:, parent[j]], last[j]]
        self.product = product
        rows, cols = np.nonzero(product == 0)
        inverse = np.empty(n, dtype=np.int32)
        inverse[rows] = cols
        self.inverse = inverse
        self._orders: Optional[np.ndarray] = None

    def __len__(self) -> int:
        return len(self.elements)

    def __repr__(self):
        return f"FiniteGroupTable(order={len(self)}, diagram={self.diagram!r})"

    def mul(self, i: int, j: int) -> int:
        return int(self.product[i, j])

    def conj(self, g: int, x: int) -> int:
        """``g x g^-1``."""
        return int(self.product[self.product[g, x], self.inverse[g]])

    def word_index(self, w: Sequence[str]) -> int:
        i = 0
        for s in w:
            i = int(self.product[i, self.generators[s]])
        return i

    @property
    def orders(self) -> np.ndarray:
        if self._orders is None:
            n = len(self)
            idx = np.arange(n)
            orders = np.zeros(n, dtype=np.int64)
            cur = idx.copy()
            for e in range(1, n + 1):
                orders[(cur == 0) & (orders == 0)] = e
                if orders.all():
                    break
                cur = self.product[cur, idx]
            self._orders = orders
        return self._orders

    def involutions(self) -> List[int]:
        return [int(i) for i in np.nonzero(self.orders == 2)[0]]

    def subgroup(self, gens: Sequence[int]) -> FrozenSet[int]:
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.product[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return frozenset(seen)

    def conjugate_set(self, g: int, xs) -> FrozenSet[int]:
        return frozenset(self.conj(g, x) for x in xs)

    def name(self, i: int) -> str:
        """Vertex name for element ``i`` in an induced diagram."""
        return ".".join(self.elements[i]) if i else "e"


def enumerate_elements(d: CoxeterDiagram, cap: int = DEFAULT_ELEMENT_CAP,
                       budget: int = DEFAULT_BUDGET) -> FiniteGroupTable:
    eng = engine(d)
    gens = d.vertices
    elements: List[Word] = [()]
    index = {(): 0}
    parent, last = [-1], [-1]
    right: List[List[int]] = []
    queue = deque([0])
    while queue:
        i = queue.popleft()
        u = elements[i]
        row = []
        for k, s in enumerate(gens):
            v = eng.canonical(eng.append(u, s, budget), budget)
            j = index.get(v)
            if j is None:
                j = index[v] = len(elements)
                if j >= cap:
                    raise CapExceeded(f"more than {cap} elements")
                elements.append(v)
                parent.append(i)
                last.append(k)
                queue.append(j)
            row.append(j)
        right.append(row)
    right_arr = np.array(right, dtype=np.int32).reshape(len(elements), len(gens))
    return FiniteGroupTable(d, elements, parent, last, right_arr)


def check_group_laws(t: FiniteGroupTable) -> bool:
    """Exhaustive associativity, identity and inverse check."""
    P = t.product
    n = len(t)
    idx = np.arange(n)
    if not (np.array_equal(P[0], idx) and np.array_equal(P[:, 0], idx)):
        return False
    if not (np.all(P[idx, t.inverse] == 0) and np.all(P[t.inverse, idx] == 0)):
        return False
    for a in range(n):
        if not np.array_equal(P[P[a]], P[a][P]):
            return False
    return True


def reflection_set(t: FiniteGroupTable, generators: Sequence[int]) -> FrozenSet[int]:
    """All conjugates ``g s g^-1``."""
    out = set()
    for s in generators:
        out.update(int(x) for x in t.product[t.product[:, s], t.inverse])
    return frozenset(out)


@dataclass(frozen=True)
class GeneratingSetRecord:
    generators: Tuple[int, ...]
    diagram: CoxeterDiagram
    reflections: FrozenSet[int]
    vertex_of: Dict[int, str] = field(compare=False, hash=False)
    table: FiniteGroupTable = field(compare=False, hash=False, repr=False)

    @property
    def element_of(self) -> Dict[str, int]:
        return {v: i for i, v in self.vertex_of.items()}

    def subgroup(self, T: Sequence[str]) -> FrozenSet[int]:
        el = self.element_of
        return self.table.subgroup([el[v] for v in T])


def _record(t: FiniteGroupTable, gens: Sequence[int], names: Optional[Dict[int, str]] = None,
            labels: Optional[Dict[Tuple[int, int], int]] = None) -> GeneratingSetRecord:
    gens = tuple(gens)
    names = names or {g: t.name(g) for g in gens}
    orders = t.orders
    edges = []
    for g, h in itertools.combinations(gens, 2):
        m = labels[(g, h)] if labels else int(orders[t.product[g, h]])
        edges.append((names[g], names[h], m))
    return GeneratingSetRecord(gens, CoxeterDiagram([names[g] for g in gens], edges),
                               reflection_set(t, gens), dict(names), t)


def standard_record(t: FiniteGroupTable) -> GeneratingSetRecord:
    gens = {i: s for s, i in t.generators.items()}
    return _record(t, sorted(gens), gens)


def find_coxeter_generating_sets(t: FiniteGroupTable, max_size: Optional[int] = None,
                                 max_order: int = MAX_SEARCH_ORDER) -> List[GeneratingSetRecord]:
    """Every set of involutions (size <= ``max_size``) that is a Coxeter generating set.

    A candidate qualifies when it generates ``W`` and the Coxeter group of
    its pairwise-order diagram has order exactly ``|W|``.
    """
    n = len(t)
    if n > max_order:
        raise CapExceeded(f"group order {n} exceeds the generating-set search cap {max_order}")
    if max_size is None:
        max_size = len(t.diagram) + 2
    invs = t.involutions()
    orders = t.orders
    pair_order = {(g, h): int(orders[t.product[g, h]]) for g in invs for h in invs if g != h}
    order_cache: Dict[Tuple, float] = {}
    records = []
    for size in range(max_size + 1):
        for X in itertools.combinations(invs, size):
            labels = tuple(pair_order[p] for p in itertools.combinations(X, 2))
            key = (size, labels)
            cox_order = order_cache.get(key)
            if cox_order is None:
                names = [f"v{i}" for i in range(size)]
                cd = CoxeterDiagram(names, [(names[i], names[j], m) for (i, j), m in
                                            zip(itertools.combinations(range(size), 2), labels)])
                cox_order = order_cache[key] = parabolic_order(cd, names)
            if cox_order != n:
                continue
            if len(t.subgroup(X)) != n:
                continue
            records.append(_record(t, X, labels=pair_order))
    return records


@dataclass
class ReflectionClass:
    reflections: FrozenSet[int]
    records: List[GeneratingSetRecord]


@dataclass
class RigidityExperiment:
    classes: List[ReflectionClass]
    violations: List[Tuple[GeneratingSetRecord, GeneratingSetRecord]]

    @property
    def passed(self) -> bool:
        return not self.violations


def _by_reflections(records) -> Dict[FrozenSet[int], List[GeneratingSetRecord]]:
    groups: Dict[FrozenSet[int], List[GeneratingSetRecord]] = {}
    for r in records:
        groups.setdefault(r.reflections, []).append(r)
    return groups


def empirical_reflection_rigidity(t: FiniteGroupTable,
                                  records: Sequence[GeneratingSetRecord]) -> RigidityExperiment:
    """Within each reflection-set class, all induced diagrams must be isomorphic."""
    classes, violations = [], []
    for refl, recs in sorted(_by_reflections(records).items(), key=lambda kv: sorted(kv[0])):
        classes.append(ReflectionClass(refl, recs))
        for r1, r2 in itertools.combinations(recs, 2):
            if diagram_isomorphic(r1.diagram, r2.diagram) is None:
                violations.append((r1, r2))
    return RigidityExperiment(classes, violations)


def verify_size_lemma(records: Sequence[GeneratingSetRecord]) -> bool:
    return all(len({len(r.generators) for r in recs}) == 1
               for recs in _by_reflections(records).values())


def generator_conjugacy_classes(t: FiniteGroupTable) -> List[Tuple[str, ...]]:
    """Conjugacy classes of the standard generators, computed from the table."""
    gens = t.generators
    classes: List[Tuple[str, ...]] = []
    placed = set()
    for s in sorted(gens):
        if s in placed:
            continue
        orbit = reflection_set(t, [gens[s]])
        cls = tuple(sorted(u for u in gens if gens[u] in orbit))
        placed.update(cls)
        classes.append(cls)
    return sorted(classes)


def verify_conjugacy_lemma(d: CoxeterDiagram, t: FiniteGroupTable) -> bool:
    return generator_conjugacy_classes(t) == odd_components(d)


@dataclass(frozen=True)
class ConjugacyWitness:
    """``conjugator * source_subgroup * conjugator^-1 == target_subgroup``.

    ``target_subgroup`` is ``W_T`` for the maximal spherical ``subset`` of
    the first system, ``source_subgroup`` is ``W'_T'`` for its unique
    correspondent in the second.
    """

    subset: Tuple[str, ...]
    correspondent: Tuple[str, ...]
    conjugator: int
    source_subgroup: FrozenSet[int]
    target_subgroup: FrozenSet[int]

    def holds(self, t: FiniteGroupTable) -> bool:
        return t.conjugate_set(self.conjugator, self.source_subgroup) == self.target_subgroup


def _conjugator(t: FiniteGroupTable, src: FrozenSet[int], dst: FrozenSet[int]) -> Optional[int]:
    if len(src) != len(dst):
        return None
    for g in range(len(t)):
        if t.conjugate_set(g, src) == dst:
            return g
    return None


def max_spherical_correspondence(rec1: GeneratingSetRecord,
                                 rec2: GeneratingSetRecord) -> List[ConjugacyWitness]:
    """Match each maximal spherical subset of ``rec1`` to one of ``rec2``.

    Both records live in the same table (the isomorphism is the identity).
    Raises :class:`NoCorrespondent` or :class:`NotUnique` when a subset has
    no conjugate partner or several.
    """
    t = rec1.table
    targets = [(T.vertices, rec2.subgroup(T.vertices))
               for T in maximal_spherical_subsets(rec2.diagram)]
    witnesses = []
    for T in maximal_spherical_subsets(rec1.diagram):
        H = rec1.subgroup(T.vertices)
        hits = []
        for T2, H2 in targets:
            g = _conjugator(t, H2, H)
            if g is not None:
                hits.append(ConjugacyWitness(T.vertices, T2, g, H2, H))
        if not hits:
            raise NoCorrespondent(f"no maximal spherical subset corresponds to {T.vertices}")
        if len(hits) > 1:
            raise NotUnique(f"{T.vertices} corresponds to {[h.correspondent for h in hits]}")
        witnesses.append(hits[0])
    return witnesses


def verify_max_spherical_correspondence(d1: CoxeterDiagram,
                                        record2: GeneratingSetRecord) -> List[ConjugacyWitness]:
    if record2.table.diagram != d1:
        raise ValueError("record2 must come from the table of d1")
    return max_spherical_correspondence(standard_record(record2.table), record2)


def _require_same_reflections(d: CoxeterDiagram,
                              record: GeneratingSetRecord) -> GeneratingSetRecord:
    if record.table.diagram != d:
        raise ValueError("record must come from the table of d")
    std = standard_record(record.table)
    if std.reflections != record.reflections:
        raise ValueError("record does not share the standard reflection set")
    if not rigidity_report(d).main_conditions_hold:
        raise ValueError("d does not satisfy conditions (1)(2)(3)")
    return std


def verify_condition_transfer(d: CoxeterDiagram, record: GeneratingSetRecord) -> bool:
    """The other generating set satisfies the same three conditions."""
    _require_same_reflections(d, record)
    return rigidity_report(record.diagram).main_conditions_hold


def construct_psi(d: CoxeterDiagram, record: GeneratingSetRecord) -> Dict[str, str]:
    """Label-preserving bijection from ``d``'s generators to ``record``'s.

    Candidates for ``psi(s)`` are the new generators conjugate to ``s``,
    restricted to the correspondent of each even maximal spherical subset
    containing ``s`` and to the correspondent of an odd maximal pair
    containing ``s``.  The first label-preserving choice is returned.
    """
    std = _require_same_reflections(d, record)
    t = record.table
    new_of = record.vertex_of
    cand: Dict[str, set] = {}
    for s in d.vertices:
        orbit = reflection_set(t, [t.generators[s]])
        cand[s] = {new_of[g] for g in record.generators if g in orbit}
    for w in max_spherical_correspondence(std, record):
        T = w.subset
        odd_pair = len(T) == 2 and label_of(d, *T) % 2 == 1
        if odd_pair or is_even(induced(d, T)):
            for s in T:
                cand[s] &= set(w.correspondent)
    order = list(d.vertices)
    target = record.diagram
    psi: Dict[str, str] = {}

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        s = order[i]
        for c in sorted(cand[s]):
            if c in psi.values():
                continue
            if all(label_of(d, s, u) == label_of(target, c, psi[u]) for u in order[:i]):
                psi[s] = c
                if extend(i + 1):
                    return True
                del psi[s]
        return False

    if not extend(0):
        raise NoValidPsi(f"no admissible label-preserving bijection onto {target.vertices}")
    return psi


# -- isomorphism search between two finite Coxeter groups -------------------

def _element_map(t1: FiniteGroupTable, t2: FiniteGroupTable, images: Dict[str, int]) -> np.ndarray:
    """Extend generator images to all of ``t1`` along its BFS words."""
    phi = np.zeros(len(t1), dtype=np.int64)
    for i, w in enumerate(t1.elements[1:], 1):
        phi[i] = t2.product[phi[t1.index[w[:-1]]], images[w[-1]]]
    return phi


def iter_isomorphisms(t1: FiniteGroupTable, t2: FiniteGroupTable) -> Iterator[np.ndarray]:
    """All isomorphisms ``W1 -> W2`` as element-index arrays.

    Generators go to distinct involutions whose pairwise product orders
    divide the labels and which generate ``W2``; with ``|W1| == |W2|`` such
    a surjective homomorphism is bijective.
    """
    if len(t1) != len(t2):
        return
    d1 = t1.diagram
    gens = d1.vertices
    invs = t2.involutions()
    orders = t2.orders
    for imgs in itertools.permutations(invs, len(gens)):
        ok = True
        for (i, s), (j, u) in itertools.combinations(enumerate(gens), 2):
            m = label_of(d1, s, u)
            if m % int(orders[t2.product[imgs[i], imgs[j]]]) != 0:
                ok = False
                break
        if ok and len(t2.subgroup(imgs)) == len(t2):
            yield _element_map(t1, t2, dict(zip(gens, imgs)))


def isomorphism_maps(t1: FiniteGroupTable, phi: np.ndarray,
                     t2: FiniteGroupTable) -> Tuple[GeneratorMap, GeneratorMap]:
    """Forward and inverse :class:`GeneratorMap` for an element isomorphism."""
    inv = np.empty_like(phi)
    inv[phi] = np.arange(len(phi))
    fwd = {s: t2.elements[phi[i]] for s, i in t1.generators.items()}
    back = {s: t1.elements[inv[i]] for s, i in t2.generators.items()}
    return GeneratorMap(t1.diagram, t2.diagram, fwd), GeneratorMap(t2.diagram, t1.diagram, back)


# -- reproductions of the two classical examples ---------------------------

@dataclass
class Example1Report:
    """Dihedral group of order ``4k`` presented as ``I2(2k)`` and as ``I2(k) x A1``."""

    k: int
    left: CoxeterDiagram
    right: CoxeterDiagram
    order_left: int
    order_right: int
    isomorphism: Optional[Tuple[GeneratorMap, GeneratorMap]]
    isomorphism_verified: bool
    reflections_left: int
    reflections_right: int
    isomorphisms_checked: int
    reflection_compatible: int

    @property
    def passed(self) -> bool:
        return (self.order_left == self.order_right == 4 * self.k
                and self.isomorphism_verified
                and self.reflections_left == 2 * self.k
                and self.reflections_right == self.k + 1
                and self.isomorphisms_checked > 0
                and self.reflection_compatible == 0)


def example1_report(k: int, budget: int = DEFAULT_BUDGET) -> Example1Report:
    if k < 3 or k % 2 == 0:
        raise ValueError("k must be an odd integer >= 3")
    left, right = doubled_dihedral(k), dihedral_times_a1(k)
    t1, t2 = enumerate_elements(left, budget=budget), enumerate_elements(right, budget=budget)
    r1 = reflection_set(t1, list(t1.generators.values()))
    r2 = reflection_set(t2, list(t2.generators.values()))
    first = None
    checked = compatible = 0
    for phi in iter_isomorphisms(t1, t2):
        checked += 1
        if first is None:
            first = phi
        if frozenset(int(phi[x]) for x in r1) == r2:
            compatible += 1
    maps = isomorphism_maps(t1, first, t2) if first is not None else None
    verified = maps is not None and verify_isomorphism(*maps, budget=budget)
    return Example1Report(k, left, right, len(t1), len(t2), maps, verified,
                          len(r1), len(r2), checked, compatible)


@dataclass
class Example2Report:
    """Twisting the path ``x1 -2- x2 -3- x3 -2- x4`` at ``J = {x2, x3}``."""

    left: CoxeterDiagram
    right: CoxeterDiagram
    twist: TwistResult
    twisted_to_right: Optional[Dict[str, str]]
    twist_verified: bool
    left_right_isomorphic: bool

    @property
    def passed(self) -> bool:
        return (self.twisted_to_right is not None and self.twist_verified
                and not self.left_right_isomorphic)


def example2_report(budget: int = DEFAULT_BUDGET) -> Example2Report:
    left, right = path_232(), claw_232()
    spec = TwistSpec.from_sets(J=("x2", "x3"), A=("x1",), B=("x4",))
    result = apply_twist(left, spec, budget)
    verified = verify_isomorphism(result.substitution, result.inverse, budget)
    return Example2Report(left, right, result, diagram_isomorphic(result.twisted, right),
                          verified, diagram_isomorphic(left, right) is not None)
