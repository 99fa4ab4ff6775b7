"""Word problem for Coxeter groups by braid moves and cancellation.

Two reduced words represent the same element exactly when one can be
turned into the other by braid moves alone, so the braid class of a
reduced word is an invariant of the element; its lexicographically least
member is used as the canonical form.

Reduction is incremental: with ``u`` reduced, ``u s`` is not reduced
precisely when some member of the braid class of ``u`` ends in ``s``, in
which case dropping that final letter gives a reduced word for ``u s``.

Braid classes can be exponentially large.  Every closure is bounded by a
word budget; running past it raises :class:`BudgetExceeded` rather than
returning a guess.
"""
from __future__ import annotations

import threading
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Mapping, Sequence, Tuple, Union

from .diagram import CoxeterDiagram
from .errors import BudgetExceeded, MapError, UnknownVertexError

Word = Tuple[str, ...]

DEFAULT_BUDGET = 100_000
DEFAULT_ORDER_CAP = 64


class _ExceedsCap:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ExceedsCap"

    def __reduce__(self):
        return (_ExceedsCap, ())


#: returned by :func:`element_order` when no power up to the cap is trivial
EXCEEDS_CAP = _ExceedsCap()


def parse_word(d: CoxeterDiagram, text: Union[str, Sequence[str]]) -> Word:
    letters = text.split() if isinstance(text, str) else list(text)
    for x in letters:
        if x not in d:
            raise UnknownVertexError(x)
    return tuple(letters)


def format_word(w: Word) -> str:
    return " ".join(w)


def _alternating(s: str, t: str, n: int) -> Word:
    return tuple(s if i % 2 == 0 else t for i in range(n))


class WordEngine:
    """Braid-closure machinery for one diagram, with a shared closure cache.

    The cache maps each word of a finished closure to the closure itself.
    It is guarded by a lock; entries are only ever added, and a given word
    always gets the same closure, so readers never see inconsistent data.
    """

    def __init__(self, d: CoxeterDiagram):
        self.d = d
        self._labels: Dict[Tuple[str, str], int] = {}
        for s, t, m in d.edges:
            self._labels[(s, t)] = self._labels[(t, s)] = m
        self._closures: Dict[Word, FrozenSet[Word]] = {}
        self._lock = threading.Lock()

    def _moves(self, w: Word):
        n = len(w)
        for i in range(n - 1):
            s, t = w[i], w[i + 1]
            if s == t:
                continue
            m = self._labels.get((s, t))
            if m is None or i + m > n:
                continue
            if all(w[i + k] == (s if k % 2 == 0 else t) for k in range(2, m)):
                yield w[:i] + _alternating(t, s, m) + w[i + m:]

    def closure(self, w: Word, budget: int = DEFAULT_BUDGET) -> FrozenSet[Word]:
        w = tuple(w)
        cached = self._closures.get(w)
        if cached is None:
            seen = {w}
            queue = deque([w])
            while queue:
                for v in self._moves(queue.popleft()):
                    if v not in seen:
                        seen.add(v)
                        if len(seen) > budget:
                            raise BudgetExceeded(
                                f"braid closure of a length-{len(w)} word exceeds {budget} words")
                        queue.append(v)
            cached = frozenset(seen)
            with self._lock:
                for v in cached:
                    self._closures.setdefault(v, cached)
        if len(cached) > budget:
            raise BudgetExceeded(f"braid closure of a length-{len(w)} word exceeds {budget} words")
        return cached

    def append(self, u: Word, s: str, budget: int = DEFAULT_BUDGET) -> Word:
        """Reduced word for ``u s`` given a reduced word ``u``."""
        if u and u[-1] == s:
            return u[:-1]
        shorter = [v for v in self.closure(u, budget) if v[-1:] == (s,)]
        if shorter:
            return min(shorter)[:-1]
        return u + (s,)

    def reduce(self, w: Iterable[str], budget: int = DEFAULT_BUDGET) -> Word:
        u: Word = ()
        for s in w:
            u = self.append(u, s, budget)
        return u

    def canonical(self, w: Iterable[str], budget: int = DEFAULT_BUDGET) -> Word:
        return min(self.closure(self.reduce(w, budget), budget))


_engines: Dict[CoxeterDiagram, WordEngine] = {}
_engines_lock = threading.Lock()


def engine(d: CoxeterDiagram) -> WordEngine:
    """The shared engine (and closure cache) for ``d``."""
    with _engines_lock:
        eng = _engines.get(d)
        if eng is None:
            eng = _engines[d] = WordEngine(d)
        return eng


def braid_closure(d: CoxeterDiagram, w: Sequence[str],
                  budget: int = DEFAULT_BUDGET) -> FrozenSet[Word]:
    return engine(d).closure(parse_word(d, w), budget)


def reduce(d: CoxeterDiagram, w: Sequence[str], budget: int = DEFAULT_BUDGET) -> Word:
    return engine(d).reduce(parse_word(d, w), budget)


def canonical(d: CoxeterDiagram, w: Sequence[str], budget: int = DEFAULT_BUDGET) -> Word:
    return engine(d).canonical(parse_word(d, w), budget)


def multiply(d: CoxeterDiagram, u: Sequence[str], v: Sequence[str],
             budget: int = DEFAULT_BUDGET) -> Word:
    return engine(d).canonical(parse_word(d, u) + parse_word(d, v), budget)


def inverse(w: Sequence[str]) -> Word:
    return tuple(reversed(tuple(w)))


def element_order(d: CoxeterDiagram, w: Sequence[str], cap: int = DEFAULT_ORDER_CAP,
                  budget: int = DEFAULT_BUDGET):
    """Order of ``w`` as an int, or :data:`EXCEEDS_CAP` if it is larger than ``cap``.

    ``EXCEEDS_CAP`` means "not certified finite", not "infinite".
    """
    eng = engine(d)
    g = eng.reduce(parse_word(d, w), budget)
    power = g
    for n in range(1, cap + 1):
        if not power:
            return n
        power = eng.reduce(power + g, budget)
    return EXCEEDS_CAP


def is_reflection(d: CoxeterDiagram, w: Sequence[str], budget: int = DEFAULT_BUDGET) -> bool:
    """Whether ``w`` is conjugate to a generator.

    Every reflection has a palindromic reduced expression, and every odd
    palindrome ``u s u^-1`` is a conjugate of its middle letter.
    """
    eng = engine(d)
    r = eng.reduce(parse_word(d, w), budget)
    if len(r) % 2 == 0:
        return False
    return any(v == v[::-1] for v in eng.closure(r, budget))


@dataclass(frozen=True)
class GeneratorMap:
    """Assignment of a target word to each source generator."""

    source: CoxeterDiagram
    target: CoxeterDiagram
    images: Mapping[str, Word] = field(hash=False)

    def __post_init__(self):
        images = {}
        for s, img in self.images.items():
            if s not in self.source:
                raise MapError(f"{s!r} is not a source generator")
            img = tuple(img.split()) if isinstance(img, str) else tuple(img)
            bad = [x for x in img if x not in self.target]
            if bad:
                raise MapError(f"image of {s!r} uses unknown target letter {bad[0]!r}")
            images[s] = img
        missing = [s for s in self.source.vertices if s not in images]
        if missing:
            raise MapError(f"no image for source generator {missing[0]!r}")
        object.__setattr__(self, "images", dict(sorted(images.items())))

    def apply(self, w: Iterable[str]) -> Word:
        out: Tuple[str, ...] = ()
        for s in w:
            out += self.images[s]
        return out

    def compose(self, after: "GeneratorMap") -> "GeneratorMap":
        """``after`` applied to the images of ``self``."""
        if after.source != self.target:
            raise MapError("maps are not composable")
        return GeneratorMap(self.source, after.target,
                            {s: after.apply(img) for s, img in self.images.items()})

    @classmethod
    def identity(cls, d: CoxeterDiagram) -> "GeneratorMap":
        return cls(d, d, {s: (s,) for s in d.vertices})


def check_homomorphism(f: GeneratorMap, budget: int = DEFAULT_BUDGET) -> bool:
    """Do the images satisfy every defining relation of the source?"""
    eng = engine(f.target)
    src = f.source
    for s in src.vertices:
        if eng.reduce(f.images[s] * 2, budget):
            return False
    for s, t, m in src.edges:
        if eng.reduce((f.images[s] + f.images[t]) * m, budget):
            return False
    return True


def verify_isomorphism(fwd: GeneratorMap, back: GeneratorMap, budget: int = DEFAULT_BUDGET) -> bool:
    """Certify that ``fwd`` and ``back`` are mutually inverse isomorphisms."""
    if fwd.source != back.target or fwd.target != back.source:
        raise MapError("back must map the target of fwd to its source")
    if not (check_homomorphism(fwd, budget) and check_homomorphism(back, budget)):
        return False
    for f, g in ((fwd, back), (back, fwd)):
        eng = engine(f.source)
        round_trip = f.compose(g)
        for s in f.source.vertices:
            if eng.canonical(round_trip.images[s], budget) != (s,):
                return False
    return True
