"""Hypotheses of the reflection-rigidity theorems, checked on a diagram.

Three sufficient conditions are recognised:

* EvenRigidity: every finite off-diagonal label is even.
* FiniteRigidity: ``W`` is finite.
* MainTheorem: for every odd-labelled pair ``{s, t}``

  1. ``{s, t}`` is a maximal spherical subset,
  2. no vertex has two odd neighbours,
  3. at most two maximal spherical subsets meet ``{s, t}`` (``{s, t}``
     itself included).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from .classify import is_spherical, maximal_spherical_subsets
from .diagram import CoxeterDiagram, odd_graph

EVEN = "EvenRigidity"
FINITE = "FiniteRigidity"
MAIN = "MainTheorem"

Pair = Tuple[str, str]


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    witnesses: tuple = ()


@dataclass(frozen=True)
class Condition3Result:
    holds: bool
    counts: Tuple[Tuple[Pair, int], ...] = ()
    meeting: Tuple[Tuple[Pair, Tuple[Tuple[str, ...], ...]], ...] = ()

    @property
    def witnesses(self) -> Tuple[Pair, ...]:
        return tuple(p for p, c in self.counts if c > 2)


@dataclass(frozen=True)
class RigidityReport:
    condition1: ConditionResult
    condition2: ConditionResult
    condition3: Condition3Result
    is_even: bool
    is_finite: bool
    applicable_theorems: FrozenSet[str]

    @property
    def main_conditions_hold(self) -> bool:
        return self.condition1.holds and self.condition2.holds and self.condition3.holds


def _odd_pairs(d: CoxeterDiagram):
    return odd_graph(d).edges


def check_condition_1(d: CoxeterDiagram) -> ConditionResult:
    """Odd pairs not maximal among spherical subsets are the witnesses."""
    maximal = {r.vertices for r in maximal_spherical_subsets(d)}
    bad = tuple(p for p in _odd_pairs(d) if p not in maximal)
    return ConditionResult(not bad, bad)


def check_condition_2(d: CoxeterDiagram) -> ConditionResult:
    g = odd_graph(d)
    triples = []
    for t in d.vertices:
        nbrs = g.neighbors(t)
        for i, s in enumerate(nbrs):
            for u in nbrs[i + 1:]:
                triples.append((s, t, u))
    triples.sort()
    return ConditionResult(not triples, tuple(triples))


def check_condition_3(d: CoxeterDiagram) -> Condition3Result:
    maximal = [r.vertices for r in maximal_spherical_subsets(d)]
    counts, meeting = [], []
    for p in _odd_pairs(d):
        hits = tuple(T for T in maximal if set(T) & set(p))
        counts.append((p, len(hits)))
        meeting.append((p, hits))
    return Condition3Result(all(c <= 2 for _, c in counts), tuple(counts), tuple(meeting))


def is_even(d: CoxeterDiagram) -> bool:
    return all(m % 2 == 0 for _, _, m in d.edges)


def rigidity_report(d: CoxeterDiagram) -> RigidityReport:
    c1, c2, c3 = check_condition_1(d), check_condition_2(d), check_condition_3(d)
    even = is_even(d)
    finite = is_spherical(d, d.vertices)
    theorems = set()
    if even:
        theorems.add(EVEN)
    if finite:
        theorems.add(FINITE)
    if c1.holds and c2.holds and c3.holds:
        theorems.add(MAIN)
    return RigidityReport(c1, c2, c3, even, finite, frozenset(theorems))


def counts_by_pair(report: RigidityReport) -> Dict[Pair, int]:
    return dict(report.condition3.counts)
