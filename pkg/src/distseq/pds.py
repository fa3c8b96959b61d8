"""Exact shortest preset-distinguishing-sequence search.

The search runs over canonical "uncertainty nodes": partitions of the
candidate set S into blocks of (initial state, current state) pairs.
States in one block have produced identical outputs so far; a block with
two pairs sharing a current state can never be split and kills the node.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from collections import deque
from typing import Iterable, Optional

from .automata import MealyAutomaton

FOUND = "found"
ABSENT = "absent"
GAVE_UP = "gave_up"

DEFAULT_NODE_CAP = 10_000_000


class CapExceeded(RuntimeError):
    """An enumeration guard refused to run; the message carries a size estimate."""


@dataclass(frozen=True)
class PdsResult:
    """Outcome of a PDS search.

    status is "found", "absent" (search space exhausted, no PDS exists)
    or "gave_up" (a length or node cap stopped the search first).
    """

    status: str
    word: Optional[tuple[int, ...]] = None

    @property
    def length(self) -> Optional[int]:
        return None if self.word is None else len(self.word)


def _start_node(S):
    return (tuple((q, q) for q in S),)


def _expand(node, a, nxt, out):
    """Apply input a to a node; return the canonical successor or None if dead."""
    blocks = []
    for block in node:
        groups: dict[int, list] = {}
        for init, cur in block:
            groups.setdefault(out[cur][a], []).append((init, nxt[cur][a]))
        for g in groups.values():
            if len(g) > 1 and len({c for _, c in g}) < len(g):
                return None  # two merged states with equal outputs: unsplittable
            blocks.append(tuple(g))
    blocks.sort(key=lambda b: b[0][0])
    return tuple(blocks)


def _search(nxt, out, n_inputs, S, max_len, cap_nodes):
    start = _start_node(S)
    if all(len(b) == 1 for b in start):
        return PdsResult(FOUND, ())
    visited = {start}
    queue = deque([(start, ())])
    truncated = False
    while queue:
        node, word = queue.popleft()
        if max_len is not None and len(word) >= max_len:
            truncated = True
            continue
        for a in range(n_inputs):
            child = _expand(node, a, nxt, out)
            if child is None or child in visited:
                continue
            w2 = word + (a,)
            if all(len(b) == 1 for b in child):
                return PdsResult(FOUND, w2)
            visited.add(child)
            if len(visited) > cap_nodes:
                return PdsResult(GAVE_UP)
            queue.append((child, w2))
    return PdsResult(GAVE_UP) if truncated else PdsResult(ABSENT)


def shortest_pds(aut: MealyAutomaton, S: Iterable[int],
                 max_len: Optional[int] = None,
                 cap_nodes: int = DEFAULT_NODE_CAP) -> PdsResult:
    """Shortest PDS for the state subset S, lexicographically smallest on ties.

    Breadth-first search with canonical node deduplication; inputs are
    expanded in ascending order, so the first hit is the lex-least word
    among the shortest ones.
    """
    S = tuple(sorted(set(S)))
    if len(S) < 2:
        raise ValueError("S must contain at least 2 states")
    for q in S:
        if not 0 <= q < aut.n_states:
            raise ValueError(f"state {q} out of range")
    return _search(aut.nxt, aut.out, aut.n_inputs, S, max_len, cap_nodes)


def has_pds(aut: MealyAutomaton, S: Iterable[int],
            cap_nodes: int = DEFAULT_NODE_CAP) -> bool:
    """True iff some PDS for S exists (the node space is finite, so this decides)."""
    res = shortest_pds(aut, S, max_len=None, cap_nodes=cap_nodes)
    if res.status == GAVE_UP:
        raise CapExceeded(f"node cap {cap_nodes} exceeded before the search finished")
    return res.status == FOUND


@dataclass(frozen=True)
class WorstCaseResult:
    max_length: int
    automaton: Optional[MealyAutomaton]
    subset: Optional[tuple[int, ...]]


def worst_case_pds(n: int, a: int, b: int, k: int,
                   cap: int = 10_000_000) -> WorstCaseResult:
    """Exhaustive worst case of the shortest-PDS length at fixed alphabet sizes.

    Enumerates all complete Mealy automata with n states, a inputs and b
    outputs, and maximizes the shortest-PDS length over every k-element
    state subset.  Pairs without a PDS contribute 0.

    Note: the worst case over ALL n-state automata places no bound on the
    alphabets; this function fixes (a, b), so its value is a lower bound
    on that quantity.
    """
    if k < 2 or k > n:
        raise ValueError("need 2 <= k <= n")
    total = (n * b) ** (n * a)
    if total > cap:
        raise CapExceeded(f"would enumerate {total} automata (cap {cap})")
    subsets = list(combinations(range(n), k))
    cells = [(q2, y) for q2 in range(n) for y in range(b)]
    best = WorstCaseResult(0, None, None)
    for assignment in product(cells, repeat=n * a):
        nxt = tuple(tuple(assignment[q * a + x][0] for x in range(a))
                    for q in range(n))
        out = tuple(tuple(assignment[q * a + x][1] for x in range(a))
                    for q in range(n))
        for S in subsets:
            res = _search(nxt, out, a, S, None, DEFAULT_NODE_CAP)
            if res.status == FOUND and res.length > best.max_length:
                best = WorstCaseResult(
                    res.length, MealyAutomaton(n, a, b, nxt, out), S)
    return best
