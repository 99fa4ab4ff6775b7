"""Coxeter diagrams: storage, text format, odd-label graph, labeled isomorphism.

A pair of vertices with no declared edge has label infinity.  Edges drawn
with label 2 must be declared explicitly (commuting generators), exactly as
in hand-drawn Coxeter diagrams where every finite bond carries its number.

Text format::

    # comment
    vertices: a b c
    edge a b 6
    edge b c 2
    edge a c inf      # accepted, same as leaving it out
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

from .errors import DiagramParseError, UnknownVertexError

INF = math.inf

Label = Union[int, float]  # int >= 2, or INF
Pair = Tuple[str, str]

_FORBIDDEN = set("#,:")


def _pair(s: str, t: str) -> Pair:
    return (s, t) if s <= t else (t, s)


def _check_name(name: str) -> None:
    if not name or any(c.isspace() or c in _FORBIDDEN for c in name):
        raise ValueError(f"invalid vertex name {name!r}")


class CoxeterDiagram:
    """Immutable labeled graph defining a Coxeter system ``(W, S)``.

    ``labels`` maps vertex pairs to their finite label ``m(s, t) >= 2``;
    pairs that are absent (or given as ``INF``) have ``m = inf``.
    Vertices are kept in sorted order.
    """

    __slots__ = ("_vertices", "_labels", "_hash")

    def __init__(self, vertices: Iterable[str], labels: Union[Mapping, Iterable] = ()):
        verts = list(vertices)
        for v in verts:
            _check_name(v)
        if len(set(verts)) != len(verts):
            raise ValueError("duplicate vertex names")
        vset = set(verts)
        items = labels.items() if isinstance(labels, Mapping) else labels
        stored: Dict[Pair, int] = {}
        for entry in items:
            if isinstance(labels, Mapping):
                (s, t), m = entry
            else:
                s, t, m = entry
            for v in (s, t):
                if v not in vset:
                    raise UnknownVertexError(v)
            if s == t:
                raise ValueError(f"loop at {s!r}: the diagonal label is always 1")
            if m == INF:
                continue
            if not isinstance(m, int) or isinstance(m, bool) or m < 2:
                raise ValueError(f"label for {s},{t} must be an integer >= 2 or inf, got {m!r}")
            key = _pair(s, t)
            if stored.get(key, m) != m:
                raise ValueError(f"conflicting labels for {s},{t}")
            stored[key] = m
        self._vertices: Tuple[str, ...] = tuple(sorted(verts))
        self._labels: Dict[Pair, int] = dict(sorted(stored.items()))
        self._hash = hash((self._vertices, tuple(self._labels.items())))

    @property
    def vertices(self) -> Tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Tuple[Tuple[str, str, int], ...]:
        """Finite-label edges ``(s, t, m)`` with ``s < t``, sorted."""
        return tuple((s, t, m) for (s, t), m in self._labels.items())

    def __len__(self) -> int:
        return len(self._vertices)

    def __contains__(self, v) -> bool:
        return v in self._vertices

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoxeterDiagram):
            return NotImplemented
        return self._vertices == other._vertices and self._labels == other._labels

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        edges = ", ".join(f"{s}-{t}:{m}" for s, t, m in self.edges)
        return f"CoxeterDiagram({' '.join(self._vertices)}; {edges})"

    def label(self, s: str, t: str) -> Label:
        return label_of(self, s, t)

    def check_vertices(self, vs: Iterable[str]) -> Tuple[str, ...]:
        """Return ``vs`` sorted, raising on any unknown vertex."""
        known = set(self._vertices)
        out = []
        for v in vs:
            if v not in known:
                raise UnknownVertexError(v)
            out.append(v)
        return tuple(sorted(set(out)))

    def rename(self, mapping: Mapping[str, str]) -> "CoxeterDiagram":
        """Copy with vertices renamed through ``mapping`` (missing keys kept)."""
        f = lambda v: mapping.get(v, v)
        return CoxeterDiagram([f(v) for v in self._vertices],
                              [(f(s), f(t), m) for s, t, m in self.edges])


def label_of(d: CoxeterDiagram, s: str, t: str) -> Label:
    """``m(s, t)``: 1 on the diagonal, the stored label, or ``INF``."""
    verts = d._vertices
    for v in (s, t):
        if v not in verts:
            raise UnknownVertexError(v)
    if s == t:
        return 1
    return d._labels.get(_pair(s, t), INF)


def parse_diagram(text: str) -> CoxeterDiagram:
    vertices: Optional[List[str]] = None
    edges: Dict[Pair, Label] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if vertices is None:
            head, sep, rest = line.partition(":")
            if not sep or head.strip() != "vertices":
                raise DiagramParseError("first line must be 'vertices: ...'", lineno)
            vertices = rest.split()
            seen = set()
            for v in vertices:
                if v in seen:
                    raise DiagramParseError(f"duplicate vertex {v!r}", lineno)
                if "," in v or ":" in v:
                    raise DiagramParseError(f"invalid vertex name {v!r}", lineno)
                seen.add(v)
            continue
        parts = line.split()
        if parts[0] != "edge" or len(parts) != 4:
            raise DiagramParseError(f"expected 'edge a b M', got {line!r}", lineno)
        _, s, t, tok = parts
        for v in (s, t):
            if v not in seen:
                raise DiagramParseError(f"edge endpoint {v!r} not declared", lineno)
        if s == t:
            raise DiagramParseError(f"loop edge at {s!r}", lineno)
        if tok == "inf":
            m: Label = INF
        else:
            try:
                m = int(tok)
            except ValueError:
                raise DiagramParseError(f"label {tok!r} is not an integer or 'inf'",
                                        lineno) from None
            if m < 2:
                raise DiagramParseError(f"label {m} < 2", lineno)
        key = _pair(s, t)
        if key in edges and edges[key] != m:
            raise DiagramParseError(f"conflicting labels for edge {s} {t}", lineno)
        edges[key] = m
    if vertices is None:
        raise DiagramParseError("missing 'vertices:' line")
    return CoxeterDiagram(vertices, edges)


def serialize_diagram(d: CoxeterDiagram) -> str:
    lines = ["vertices: " + " ".join(d.vertices) if d.vertices else "vertices:"]
    lines += [f"edge {s} {t} {m}" for s, t, m in d.edges]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class OddGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[Pair, ...]

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return tuple(sorted({t if s == v else s for s, t in self.edges if v in (s, t)}))


def odd_graph(d: CoxeterDiagram) -> OddGraph:
    return OddGraph(d.vertices, tuple((s, t) for s, t, m in d.edges if m % 2 == 1))


def odd_components(d: CoxeterDiagram) -> List[Tuple[str, ...]]:
    """Connected components of the odd graph, each sorted, listed by least member.

    These are the conjugacy classes of the generators in ``W``.
    """
    parent = {v: v for v in d.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for s, t in odd_graph(d).edges:
        rs, rt = find(s), find(t)
        if rs != rt:
            parent[max(rs, rt)] = min(rs, rt)
    blocks: Dict[str, List[str]] = {}
    for v in d.vertices:
        blocks.setdefault(find(v), []).append(v)
    return sorted(tuple(b) for b in blocks.values())


def induced(d: CoxeterDiagram, T: Iterable[str]) -> CoxeterDiagram:
    T = d.check_vertices(T)
    keep = set(T)
    return CoxeterDiagram(T, [(s, t, m) for s, t, m in d.edges if s in keep and t in keep])


def _signature(d: CoxeterDiagram, v: str) -> Tuple[Label, ...]:
    return tuple(sorted(label_of(d, v, u) for u in d.vertices if u != v))


def diagram_isomorphic(d1: CoxeterDiagram, d2: CoxeterDiagram) -> Optional[Dict[str, str]]:
    """Find a label-preserving bijection ``d1 -> d2``, or ``None``.

    Backtracking in lexicographic vertex order, candidates pruned by the
    multiset of labels at each vertex; the first witness found is returned.
    """
    if len(d1) != len(d2):
        return None
    sig1 = {v: _signature(d1, v) for v in d1.vertices}
    sig2 = {v: _signature(d2, v) for v in d2.vertices}
    if sorted(sig1.values()) != sorted(sig2.values()):
        return None
    order = d1.vertices
    mapping: Dict[str, str] = {}
    used = set()

    def extend(i: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        for w in d2.vertices:
            if w in used or sig1[v] != sig2[w]:
                continue
            if all(label_of(d1, v, u) == label_of(d2, w, mapping[u]) for u in order[:i]):
                mapping[v] = w
                used.add(w)
                if extend(i + 1):
                    return True
                del mapping[v]
                used.discard(w)
        return False

    if not extend(0):
        return None
    assert all(label_of(d1, s, t) == label_of(d2, mapping[s], mapping[t])
               for s, t in combinations(order, 2))
    return mapping


# Diagrams used throughout the package and its tests.

def dihedral(m: Label, names: Tuple[str, str] = ("a", "b")) -> CoxeterDiagram:
    """Rank-2 diagram with ``m(a, b) = m``."""
    return CoxeterDiagram(names, [(names[0], names[1], m)])


def linear(labels: Iterable[int], prefix: str = "s") -> CoxeterDiagram:
    """Path ``s1 - s2 - ... `` with the given consecutive labels, all other pairs 2."""
    labels = list(labels)
    names = [f"{prefix}{i}" for i in range(1, len(labels) + 2)]
    edges = []
    for i, j in combinations(range(len(names)), 2):
        edges.append((names[i], names[j], labels[i] if j == i + 1 else 2))
    return CoxeterDiagram(names, edges)


def doubled_dihedral(k: int) -> CoxeterDiagram:
    """``I2(2k)``; for odd ``k`` its group is isomorphic to that of ``dihedral_times_a1(k)``."""
    return dihedral(2 * k)


def dihedral_times_a1(k: int) -> CoxeterDiagram:
    return CoxeterDiagram(["a", "b", "c"], [("a", "b", k), ("a", "c", 2), ("b", "c", 2)])


def path_232() -> CoxeterDiagram:
    """Path x1 - x2 - x3 - x4 with labels 2, 3, 2; the ends are joined by infinity."""
    return CoxeterDiagram(["x1", "x2", "x3", "x4"],
                          [("x1", "x2", 2), ("x2", "x3", 3), ("x3", "x4", 2)])


def claw_232() -> CoxeterDiagram:
    """Star centred at x2 with labels 2, 3, 2; the twist of ``path_232`` along {x2, x3}."""
    return CoxeterDiagram(["x1", "x2", "x3", "x4"],
                          [("x1", "x2", 2), ("x2", "x3", 3), ("x2", "x4", 2)])
