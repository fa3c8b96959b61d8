"""Transformations of a finite set, closures over a basis, and complexity.

A transformation is a plain tuple t of length n with t[i] = image of
point i.  The composition fg is the LEFT composition x -> g(f(x)).
"""

from __future__ import annotations

from dataclasses import dataclass
from collections import deque
from itertools import permutations
from math import lcm
from typing import Iterable, Optional, Sequence

Transformation = tuple[int, ...]


class CapExceeded(RuntimeError):
    """An enumeration guard refused to run; the message carries a size estimate."""


def identity(n: int) -> Transformation:
    return tuple(range(n))


def is_bijection(f: Transformation) -> bool:
    return len(set(f)) == len(f)


def compose(f: Transformation, g: Transformation) -> Transformation:
    """Left composition: (fg)(x) = g(f(x))."""
    if len(f) != len(g):
        raise ValueError("transformations act on different ground sets")
    return tuple(g[x] for x in f)


def transformation_order(f: Transformation) -> int:
    """Order of a bijection: lcm of its cycle lengths."""
    if not is_bijection(f):
        raise ValueError("order is defined for bijections only")
    seen = [False] * len(f)
    lengths = []
    for start in range(len(f)):
        if seen[start]:
            continue
        length, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = f[x]
            length += 1
        lengths.append(length)
    return lcm(*lengths) if lengths else 1


@dataclass(frozen=True)
class PartialBijection:
    """Injective map defined on a k-subset of the ground set.

    images[i] is the image of domain[i]; the domain is kept sorted.
    """

    domain: tuple[int, ...]
    images: tuple[int, ...]

    def __post_init__(self):
        if tuple(sorted(self.domain)) != self.domain:
            raise ValueError("domain must be sorted ascending")
        if len(set(self.domain)) != len(self.domain):
            raise ValueError("domain has repeated points")
        if len(self.images) != len(self.domain):
            raise ValueError("domain and images differ in size")
        if len(set(self.images)) != len(self.images):
            raise ValueError("map is not injective")

    @property
    def k(self) -> int:
        return len(self.domain)

    def target(self) -> tuple[int, ...]:
        return tuple(sorted(self.images))


@dataclass(frozen=True)
class ClosureResult:
    """Closure of a basis with, for each element, its shortest product length."""

    level: dict  # Transformation -> int, >= 1; 1 exactly on the basis

    @property
    def elements(self) -> frozenset:
        return frozenset(self.level)


def closure(basis: Iterable[Transformation]) -> ClosureResult:
    """All products of basis elements, with shortest factorization lengths.

    BFS under right-multiplication by basis members; every length-l
    product has a length-(l-1) prefix in the closure, so the first visit
    depth is the complexity.
    """
    basis = [tuple(f) for f in basis]
    if not basis:
        raise ValueError("basis must be non-empty")
    n = len(basis[0])
    if any(len(f) != n for f in basis):
        raise ValueError("basis elements act on different ground sets")
    level = {}
    queue = deque()
    for f in basis:
        if f not in level:
            level[f] = 1
            queue.append(f)
    while queue:
        f = queue.popleft()
        d = level[f]
        for g in basis:
            h = tuple(g[x] for x in f)
            if h not in level:
                level[h] = d + 1
                queue.append(h)
    return ClosureResult(level)


def complexity(basis: Iterable[Transformation], f: Transformation) -> Optional[int]:
    """Shortest number of basis factors expressing f, or None if f is not generated."""
    return closure(basis).level.get(tuple(f))


def restriction_complexity(basis: Iterable[Transformation],
                           f: PartialBijection) -> Optional[int]:
    """Minimum complexity over all closure elements restricting to f on its domain.

    BFS over the tuple of current images of the domain points; any
    product that collapses two domain points can never restrict to the
    injective f, so non-injective tuples are pruned.
    """
    basis = [tuple(g) for g in basis]
    if not basis:
        raise ValueError("basis must be non-empty")
    start = f.domain
    goal = f.images
    k = len(start)
    visited = {start}
    queue = deque([(start, 0)])
    while queue:
        cur, d = queue.popleft()
        for g in basis:
            nxt = tuple(g[x] for x in cur)
            if nxt == goal:
                return d + 1
            if len(set(nxt)) < k or nxt in visited:
                continue
            visited.add(nxt)
            queue.append((nxt, d + 1))
    return None


def _subsets_in_order(items: Sequence[Transformation]):
    """Non-empty subsets of items in binary-counter order over the sorted list."""
    items = sorted(items)
    for mask in range(1, 1 << len(items)):
        yield tuple(items[i] for i in range(len(items)) if mask >> i & 1)


def _conjugate_basis(basis, sigma):
    """Relabel the ground set by the permutation sigma."""
    inv = [0] * len(sigma)
    for i, v in enumerate(sigma):
        inv[v] = i
    return tuple(sorted(tuple(sigma[f[inv[x]]] for x in range(len(f)))
                        for f in basis))


@dataclass(frozen=True)
class WorstComplexity:
    value: int
    basis: tuple[Transformation, ...]
    witness: Transformation


def worst_case_complexity(C: Iterable[Transformation],
                          cap_bases: int = 1 << 20,
                          canonicalize: bool = False) -> WorstComplexity:
    """Worst complexity over all non-empty bases drawn from C.

    With canonicalize=True, bases that are not lexicographically minimal
    among their conjugates under relabeling of the ground set are
    skipped; complexity is invariant under relabeling, so the maximum is
    unchanged.
    """
    C = sorted({tuple(f) for f in C})
    if not C:
        raise ValueError("C must be non-empty")
    if (1 << len(C)) - 1 > cap_bases:
        raise CapExceeded(f"would enumerate {(1 << len(C)) - 1} bases (cap {cap_bases})")
    n = len(C[0])
    sigmas = list(permutations(range(n))) if canonicalize else None
    best: Optional[WorstComplexity] = None
    for basis in _subsets_in_order(C):
        if canonicalize:
            key = tuple(sorted(basis))
            if any(_conjugate_basis(basis, s) < key for s in sigmas):
                continue
        level = closure(basis).level
        value = max(level.values())
        witness = min(f for f, d in level.items() if d == value)
        if best is None or value > best.value:
            best = WorstComplexity(value, basis, witness)
    return best


def directed_diameter(generators: Iterable[Transformation]) -> int:
    """Max complexity over the group generated by the given bijections."""
    generators = [tuple(f) for f in generators]
    if any(not is_bijection(f) for f in generators):
        raise ValueError("generators must be bijections")
    return max(closure(generators).level.values())


def group_worst_diameter(G: Iterable[Transformation],
                         cap_bases: int = 1 << 20) -> int:
    """Directed diameter of the group G: max over all generating subsets.

    Subsets whose closure is a proper subset of G are skipped by
    definition.
    """
    G = sorted({tuple(f) for f in G})
    if any(not is_bijection(f) for f in G):
        raise ValueError("G must consist of bijections")
    gset = frozenset(G)
    if closure(G).elements != gset:
        raise ValueError("G is not closed under composition")
    if (1 << len(G)) - 1 > cap_bases:
        raise CapExceeded(f"would enumerate {(1 << len(G)) - 1} bases (cap {cap_bases})")
    best = None
    for basis in _subsets_in_order(G):
        res = closure(basis)
        if res.elements != gset:
            continue
        value = max(res.level.values())
        if best is None or value > best:
            best = value
    if best is None:
        raise ValueError("no subset of G generates G")
    return best
