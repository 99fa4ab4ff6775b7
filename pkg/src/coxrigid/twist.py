"""Elementary diagram twist.

Given a spherical set ``J`` separating the rest of the diagram into ``A``
and ``B`` (every ``A``-``B`` label infinite), replace each ``b`` in ``B``
by ``w0 b w0`` where ``w0`` is the longest element of ``W_J``.  The new set
is again a Coxeter generating set of the same group; its diagram differs
from the original only in the ``B``-``J`` bonds, which are permuted by the
diagram automorphism ``j -> w0 j w0`` of ``J``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from .classify import is_spherical
from .diagram import INF, CoxeterDiagram, label_of
from .errors import CoxeterError, NotSphericalError, TwistNotApplicable
from .words import DEFAULT_BUDGET, GeneratorMap, Word, engine, verify_isomorphism


def _spherical_part(d: CoxeterDiagram, J: Iterable[str]) -> Tuple[str, ...]:
    J = d.check_vertices(J)
    if not is_spherical(d, J):
        raise NotSphericalError(f"{{{', '.join(J)}}} is not spherical")
    return J


def longest_element(d: CoxeterDiagram, J: Iterable[str], budget: int = DEFAULT_BUDGET) -> Word:
    """Canonical word of the longest element of ``W_J`` (ascent by generators)."""
    J = _spherical_part(d, J)
    eng = engine(d)
    w: Word = ()
    grew = True
    while grew:
        grew = False
        for j in J:
            v = eng.append(w, j, budget)
            if len(v) > len(w):
                w, grew = v, True
    return eng.canonical(w, budget)


def w0_automorphism(d: CoxeterDiagram, J: Iterable[str],
                    budget: int = DEFAULT_BUDGET) -> Dict[str, str]:
    J = _spherical_part(d, J)
    eng = engine(d)
    w0 = longest_element(d, J, budget)
    sigma = {}
    for j in J:
        image = eng.canonical(w0 + (j,) + w0, budget)
        if len(image) != 1 or image[0] not in J:
            raise CoxeterError(f"engine bug: w0 {j} w0 = {image!r} is not a generator of J")
        sigma[j] = image[0]
    return sigma


@dataclass(frozen=True)
class TwistSpec:
    J: Tuple[str, ...]
    A: Tuple[str, ...]
    B: Tuple[str, ...]

    @classmethod
    def from_sets(cls, J: Iterable[str], A: Iterable[str], B: Iterable[str]) -> "TwistSpec":
        return cls(tuple(sorted(set(J))), tuple(sorted(set(A))), tuple(sorted(set(B))))

    @classmethod
    def complement(cls, d: CoxeterDiagram, J: Iterable[str], B: Iterable[str]) -> "TwistSpec":
        """Spec with ``A`` taken as everything outside ``J`` and ``B``."""
        J, B = set(d.check_vertices(J)), set(d.check_vertices(B))
        return cls.from_sets(J, set(d.vertices) - J - B, B)


@dataclass(frozen=True)
class TwistResult:
    twisted: CoxeterDiagram
    substitution: GeneratorMap  # original -> twisted
    inverse: GeneratorMap  # twisted -> original
    renamed: Dict[str, str]  # b -> its tick-marked name in the twisted diagram
    longest: Word
    sigma: Dict[str, str]


def _validate(d: CoxeterDiagram, spec: TwistSpec) -> None:
    J, A, B = (set(d.check_vertices(x)) for x in (spec.J, spec.A, spec.B))
    if J & A or J & B or A & B or (J | A | B) != set(d.vertices):
        raise TwistNotApplicable("J, A, B must partition the vertex set")
    if not is_spherical(d, J):
        raise TwistNotApplicable(f"J = {{{', '.join(sorted(J))}}} is not spherical")
    for a in sorted(A):
        for b in sorted(B):
            if label_of(d, a, b) != INF:
                raise TwistNotApplicable(f"m({a},{b}) = {label_of(d, a, b)} is finite")


def _tick(name: str, taken) -> str:
    new = name + "'"
    while new in taken:
        new += "'"
    return new


def apply_twist(d: CoxeterDiagram, spec: TwistSpec, budget: int = DEFAULT_BUDGET) -> TwistResult:
    _validate(d, spec)
    if not spec.B:
        ident = GeneratorMap.identity(d)
        return TwistResult(d, ident, ident, {}, longest_element(d, spec.J, budget),
                           {j: j for j in spec.J})

    w0 = longest_element(d, spec.J, budget)
    sigma = w0_automorphism(d, spec.J, budget)
    taken = set(d.vertices)
    renamed = {}
    for b in spec.B:
        renamed[b] = _tick(b, taken)
        taken.add(renamed[b])
    new_name = lambda v: renamed.get(v, v)
    B = set(spec.B)
    edges = []
    for s, t, m in d.edges:
        if (s in B) == (t in B):
            edges.append((new_name(s), new_name(t), m))
    for b in spec.B:
        for j in spec.J:
            m = label_of(d, b, sigma[j])
            if m != INF:
                edges.append((renamed[b], j, m))
    twisted = CoxeterDiagram([new_name(v) for v in d.vertices], edges)

    sub = {v: (new_name(v),) for v in d.vertices}
    inv = {new_name(v): (v,) for v in d.vertices}
    for b in spec.B:
        sub[b] = w0 + (renamed[b],) + w0
        inv[renamed[b]] = w0 + (b,) + w0
    return TwistResult(twisted, GeneratorMap(d, twisted, sub), GeneratorMap(twisted, d, inv),
                       renamed, w0, sigma)


def verify_twist(d: CoxeterDiagram, spec: TwistSpec, budget: int = DEFAULT_BUDGET) -> bool:
    result = apply_twist(d, spec, budget)
    return verify_isomorphism(result.substitution, result.inverse, budget)
