"""Finite parabolic subgroups via the classification of finite Coxeter groups.

Finiteness of ``W_T`` is decided combinatorially: split ``T`` into
irreducible components (label 2 means commuting, hence separating) and
match each component's labeled graph against the table of irreducible
finite types.  No floating point is involved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple, Union

from .diagram import INF, CoxeterDiagram, label_of
from .errors import SubsetSearchTooLarge

MAX_SUBSET_VERTICES = 24

_EXCEPTIONAL_ORDERS = {
    "E6": 51840,
    "E7": 2903040,
    "E8": 696729600,
    "F4": 1152,
    "H3": 120,
    "H4": 14400,
}


@dataclass(frozen=True)
class TypeLabel:
    """Irreducible finite Coxeter type.

    ``family`` is one of ``A B D E6 E7 E8 F4 H3 H4 I2``; ``dihedral_label``
    is set only for ``I2`` (and is then ``>= 5``: labels 3 and 4 are
    reported as ``A2`` and ``B2``).
    """

    family: str
    rank: int
    dihedral_label: Optional[int] = None

    def __post_init__(self):
        fixed = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "H3": 3, "H4": 4, "I2": 2}
        if self.family in fixed:
            if self.rank != fixed[self.family]:
                raise ValueError(f"{self.family} has rank {fixed[self.family]}")
        elif self.family not in ("A", "B", "D") or self.rank < 1:
            raise ValueError(f"bad type {self.family}{self.rank}")
        if (self.family == "I2") != (self.dihedral_label is not None):
            raise ValueError("dihedral_label is required exactly for I2")

    def __str__(self):
        if self.family == "I2":
            return f"I2({self.dihedral_label})"
        if self.family in ("A", "B", "D"):
            return f"{self.family}{self.rank}"
        return self.family

    @property
    def order(self) -> int:
        n = self.rank
        if self.family == "A":
            return math.factorial(n + 1)
        if self.family == "B":
            return 2 ** n * math.factorial(n)
        if self.family == "D":
            return 2 ** (n - 1) * math.factorial(n)
        if self.family == "I2":
            return 2 * self.dihedral_label
        return _EXCEPTIONAL_ORDERS[self.family]


@dataclass(frozen=True)
class SphericalSubset:
    vertices: Tuple[str, ...]
    components: Tuple[Tuple[Tuple[str, ...], TypeLabel], ...]
    order: int

    @property
    def type_string(self) -> str:
        if not self.components:
            return "trivial"
        return " x ".join(str(t) for _, t in self.components)


def irreducible_components(d: CoxeterDiagram, T: Iterable[str]) -> List[Tuple[str, ...]]:
    """Components of ``T`` under the relation "label >= 3 (or infinite)"."""
    T = d.check_vertices(T)
    seen = set()
    comps = []
    for v in T:
        if v in seen:
            continue
        comp, stack = [], [v]
        seen.add(v)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in T:
                if y not in seen and label_of(d, x, y) != 2:
                    seen.add(y)
                    stack.append(y)
        comps.append(tuple(sorted(comp)))
    return sorted(comps)


def _arm_lengths(adj: Dict[str, List[str]], centre: str) -> List[int]:
    arms = []
    for first in adj[centre]:
        prev, cur, n = centre, first, 1
        while len(adj[cur]) == 2:
            prev, cur = cur, next(x for x in adj[cur] if x != prev)
            n += 1
        arms.append(n)
    return sorted(arms)


def classify_component(d: CoxeterDiagram, C: Iterable[str]) -> Optional[TypeLabel]:
    """Type of the irreducible component ``C``, or ``None`` if ``W_C`` is infinite."""
    C = d.check_vertices(C)
    n = len(C)
    if n == 0:
        raise ValueError("empty component")
    edges = []
    for s, t in combinations(C, 2):
        m = label_of(d, s, t)
        if m == INF:
            return None
        if m >= 3:
            edges.append((s, t, m))
    if n == 1:
        return TypeLabel("A", 1)
    adj: Dict[str, List[str]] = {v: [] for v in C}
    for s, t, _ in edges:
        adj[s].append(t)
        adj[t].append(s)
    reached, stack = {C[0]}, [C[0]]
    while stack:
        for y in adj[stack.pop()]:
            if y not in reached:
                reached.add(y)
                stack.append(y)
    if len(reached) != n:
        raise ValueError("component is not connected")
    if len(edges) != n - 1:
        return None  # contains a cycle
    if n == 2:
        m = edges[0][2]
        if m == 3:
            return TypeLabel("A", 2)
        if m == 4:
            return TypeLabel("B", 2)
        return TypeLabel("I2", 2, m)
    heavy = [e for e in edges if e[2] != 3]
    degrees = sorted(len(a) for a in adj.values())
    is_path = degrees[-1] <= 2
    if not heavy:
        if is_path:
            return TypeLabel("A", n)
        branch = [v for v, a in adj.items() if len(a) >= 3]
        if len(branch) != 1 or len(adj[branch[0]]) != 3:
            return None
        arms = _arm_lengths(adj, branch[0])
        if arms[0] == 1 and arms[1] == 1:
            return TypeLabel("D", n)
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return TypeLabel(f"E{n}", n)
        return None
    if len(heavy) > 1 or not is_path:
        return None
    s, t, m = heavy[0]
    terminal = len(adj[s]) == 1 or len(adj[t]) == 1
    if m == 4:
        if terminal:
            return TypeLabel("B", n)
        if n == 4:
            return TypeLabel("F4", 4)
        return None
    if m == 5 and terminal and n in (3, 4):
        return TypeLabel(f"H{n}", n)
    return None


def _components_typed(d: CoxeterDiagram,
                      T) -> Optional[Tuple[Tuple[Tuple[str, ...], TypeLabel], ...]]:
    out = []
    for comp in irreducible_components(d, T):
        t = classify_component(d, comp)
        if t is None:
            return None
        out.append((comp, t))
    return tuple(out)


def is_spherical(d: CoxeterDiagram, T: Iterable[str]) -> bool:
    return _components_typed(d, T) is not None


def parabolic_order(d: CoxeterDiagram, T: Iterable[str]) -> Union[int, float]:
    """``|W_T|`` from the order formulas, or ``INF``."""
    comps = _components_typed(d, T)
    if comps is None:
        return INF
    return math.prod(t.order for _, t in comps)


def spherical_subset(d: CoxeterDiagram, T: Iterable[str]) -> Optional[SphericalSubset]:
    T = d.check_vertices(T)
    comps = _components_typed(d, T)
    if comps is None:
        return None
    return SphericalSubset(T, comps, math.prod(t.order for _, t in comps))


def spherical_subsets(d: CoxeterDiagram) -> List[SphericalSubset]:
    """All spherical subsets, by size then lexicographically.

    Only sets containing a pair with infinite label are pruned (together
    with their supersets); every other candidate is classified in full.
    """
    n = len(d)
    if n > MAX_SUBSET_VERTICES:
        raise SubsetSearchTooLarge(
            f"{n} vertices exceeds the subset-search cap of {MAX_SUBSET_VERTICES}")
    verts = d.vertices
    found = []

    def grow(T: Tuple[str, ...], start: int) -> None:
        rec = spherical_subset(d, T)
        if rec is not None:
            found.append(rec)
        for i in range(start, n):
            v = verts[i]
            if all(label_of(d, u, v) != INF for u in T):
                grow(T + (v,), i + 1)

    grow((), 0)
    return sorted(found, key=lambda r: (len(r.vertices), r.vertices))


def maximal_spherical_subsets(d: CoxeterDiagram) -> List[SphericalSubset]:
    allsph = spherical_subsets(d)
    sets = [frozenset(r.vertices) for r in allsph]
    return [r for r, s in zip(allsph, sets) if not any(s < o for o in sets)]
