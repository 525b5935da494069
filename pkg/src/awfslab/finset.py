"""Skeletal finite sets and exact (co)limit constructions.

Carriers are {0, ..., n-1}; a map is its tuple of values.  Every canonical
construction fixes a deterministic element order (lexicographic pairs for
pullbacks, least-representative quotient classes for pushouts) so that
regression tests can compare results bit for bit.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import ShapeMismatch


@dataclass(frozen=True)
class SetMap:
    dom: int
    cod: int
    values: tuple[int, ...]

    def __post_init__(self):
        if len(self.values) != self.dom:
            raise ShapeMismatch(f"expected {self.dom} values, got {len(self.values)}")
        if any(not (0 <= v < self.cod) for v in self.values):
            raise ShapeMismatch(f"values {self.values} not below codomain {self.cod}")

    def __call__(self, x: int) -> int:
        return self.values[x]

    def __repr__(self):
        return f"SetMap({self.dom}->{self.cod}:{list(self.values)})"


def identity(n: int) -> SetMap:
    return SetMap(n, n, tuple(range(n)))


def compose(g: SetMap, f: SetMap) -> SetMap:
    """g after f."""
    if f.cod != g.dom:
        raise ShapeMismatch(f"cannot compose {g} after {f}")
    return SetMap(f.dom, g.cod, tuple(g.values[v] for v in f.values))


def all_maps(m: int, n: int):
    """All maps {0..m-1} -> {0..n-1}, lexicographic by value tuple."""
    if m == 0:
        yield SetMap(0, n, ())
        return
    if n == 0:
        return
    for values in product(range(n), repeat=m):
        yield SetMap(m, n, values)


def is_bijection(f: SetMap) -> bool:
    return f.dom == f.cod and len(set(f.values)) == f.dom


def inverse(f: SetMap) -> SetMap:
    if not is_bijection(f):
        raise ShapeMismatch(f"{f} is not a bijection")
    inv = [0] * f.dom
    for x, v in enumerate(f.values):
        inv[v] = x
    return SetMap(f.cod, f.dom, tuple(inv))


def is_injective(f: SetMap) -> bool:
    return len(set(f.values)) == f.dom


def is_surjective(f: SetMap) -> bool:
    return len(set(f.values)) == f.cod


def coproduct(m: int, n: int) -> tuple[int, SetMap, SetMap]:
    """A + B with A first: returns (carrier, inj1, inj2)."""
    inj1 = SetMap(m, m + n, tuple(range(m)))
    inj2 = SetMap(n, m + n, tuple(range(m, m + n)))
    return m + n, inj1, inj2


def copair(f: SetMap, g: SetMap) -> SetMap:
    """[f, g]: dom f + dom g -> shared codomain."""
    if f.cod != g.cod:
        raise ShapeMismatch("copair needs a shared codomain")
    return SetMap(f.dom + g.dom, f.cod, f.values + g.values)


def pullback(f: SetMap, g: SetMap) -> tuple[int, SetMap, SetMap]:
    """Canonical pullback of the cospan f: A->X <- B :g.

    Carrier: pairs (a, b) with f(a) = g(b) in lexicographic order.
    Returns (carrier size, proj1, proj2).
    """
    if f.cod != g.cod:
        raise ShapeMismatch("pullback needs a cospan")
    pairs = [(a, b) for a in range(f.dom) for b in range(g.dom)
             if f.values[a] == g.values[b]]
    p1 = SetMap(len(pairs), f.dom, tuple(a for a, _ in pairs))
    p2 = SetMap(len(pairs), g.dom, tuple(b for _, b in pairs))
    return len(pairs), p1, p2


def pullback_pairs(f: SetMap, g: SetMap) -> list[tuple[int, int]]:
    """The element order used by pullback()."""
    return [(a, b) for a in range(f.dom) for b in range(g.dom)
            if f.values[a] == g.values[b]]


def _quotient(n: int, relations) -> SetMap:
    """Quotient {0..n-1} by the equivalence generated by the given pairs.

    Classes are numbered by least representative, in increasing order.
    Returns the projection map.
    """
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in relations:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    reps = sorted({find(x) for x in range(n)})
    index = {r: i for i, r in enumerate(reps)}
    return SetMap(n, len(reps), tuple(index[find(x)] for x in range(n)))


def pushout(f: SetMap, g: SetMap) -> tuple[int, SetMap, SetMap]:
    """Canonical pushout of the span A <- X -> B (f: X->A, g: X->B).

    Carrier: quotient of A + B by f(x) ~ g(x), classes numbered by least
    representative of the disjoint union (A block first).
    """
    if f.dom != g.dom:
        raise ShapeMismatch("pushout needs a span")
    n = f.cod + g.cod
    q = _quotient(n, ((f.values[x], f.cod + g.values[x]) for x in range(f.dom)))
    i1 = SetMap(f.cod, q.cod, q.values[:f.cod])
    i2 = SetMap(g.cod, q.cod, q.values[f.cod:])
    return q.cod, i1, i2


def coequalizer(f: SetMap, g: SetMap) -> SetMap:
    """Coequalizer of the parallel pair f, g: X -> Y, as the projection
    Y -> Y/~ with classes numbered by least representative."""
    if f.dom != g.dom or f.cod != g.cod:
        raise ShapeMismatch("coequalizer needs a parallel pair")
    return _quotient(f.cod, ((f.values[x], g.values[x]) for x in range(f.dom)))


def squares_between(f: SetMap, g: SetMap):
    """All commuting squares (h, k): f -> g, i.e. k∘f = g∘h.

    Enumerated without scanning the full hom-set product: h is free, then
    k is pinned on the image of f and free elsewhere.
    """
    for h in all_maps(f.dom, g.dom):
        pinned: dict[int, int] = {}
        ok = True
        for a in range(f.dom):
            b = f.values[a]
            want = g.values[h.values[a]]
            if pinned.setdefault(b, want) != want:
                ok = False
                break
        if not ok:
            continue
        free = [b for b in range(f.cod) if b not in pinned]
        if g.cod == 0 and (pinned or free):
            continue
        for choice in product(range(g.cod), repeat=len(free)):
            values = [0] * f.cod
            for b, w in pinned.items():
                values[b] = w
            for b, w in zip(free, choice):
                values[b] = w
            yield h, SetMap(f.cod, g.cod, tuple(values))


def fillers(f: SetMap, g: SetMap, u: SetMap, v: SetMap):
    """All diagonals j: cod f -> dom g with j∘f = u and g∘j = v."""
    pinned: dict[int, int] = {}
    for a in range(f.dom):
        b = f.values[a]
        want = u.values[a]
        if pinned.setdefault(b, want) != want:
            return
    candidates = []
    for b in range(f.cod):
        if b in pinned:
            c = pinned[b]
            if g.values[c] != v.values[b]:
                return
            candidates.append((c,))
        else:
            fibre = tuple(c for c in range(g.dom) if g.values[c] == v.values[b])
            if not fibre:
                return
            candidates.append(fibre)
    for choice in product(*candidates):
        yield SetMap(f.cod, g.dom, tuple(choice))
