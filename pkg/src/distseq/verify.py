"""Cross-verification suite: small-scale exact reproduction of the
constructions plus randomized property checks against independent oracles.

Every check is deterministic (fixed RNG seed) and returns a CheckResult;
run() drives them at "quick" or "full" scale.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from math import lcm

from . import bounds, sync
from .automata import MealyAutomaton, PartialSemiautomaton, image, is_reduced, uncertainty
from .extremal import check_cycle_characterization, fig1_automaton, verify_lower_bound
from .kgraph import Walk, build_kgraph, compress_walk_report, eval_walk
from .landau import landau
from .pds import has_pds, shortest_pds
from .semigroup import compose, worst_case_complexity

SEED = 20250823


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    elapsed: float = 0.0


def _result(name, passed, detail, t0):
    return CheckResult(name, passed, detail, time.perf_counter() - t0)


# --- criterion 1: cycle-automaton family -------------------------------------

def check_fig1_family(n_values=(3, 4, 5, 6)) -> CheckResult:
    t0 = time.perf_counter()
    for n in n_values:
        aut = fig1_automaton(n)
        if not is_reduced(aut):
            return _result("fig1_family", False, f"n={n}: not reduced", t0)
        for S in combinations(range(n), 2):
            if not has_pds(aut, S):
                return _result("fig1_family", False, f"n={n}: pair {S} has no PDS", t0)
        for S in combinations(range(n), 3):
            if has_pds(aut, S):
                return _result("fig1_family", False, f"n={n}: triple {S} has a PDS", t0)
    return _result("fig1_family", True,
                   f"n in {list(n_values)}: reduced, all pairs PDS, no triple PDS", t0)


# --- criterion 2: exhaustive worst case at n=3, |A|=|B|=2 ---------------------

def check_moore_n3() -> CheckResult:
    from .pds import worst_case_pds
    t0 = time.perf_counter()
    res = worst_case_pds(3, 2, 2, 2)
    ok = res.max_length == 2
    return _result("moore_n3_exhaustive", ok,
                   f"max shortest-PDS length over 46656 automata = {res.max_length} "
                   f"(expected 2 = n-1)", t0)


# --- criterion 3: lower-bound construction -----------------------------------

def check_lower_bound(cases=((4, 2), (5, 2), (5, 3), (6, 2))) -> CheckResult:
    from .extremal import sokolovskii_instance
    t0 = time.perf_counter()
    details = []
    for n, k in cases:
        rep = verify_lower_bound(n, k)
        if not rep.passed:
            return _result("lower_bound", False,
                           f"(n={n},k={k}): computed {rep.computed} < bound {rep.bound}", t0)
        inst = sokolovskii_instance(n, k)
        if not check_cycle_characterization(inst):
            return _result("lower_bound", False,
                           f"(n={n},k={k}): cycle characterization failed", t0)
        details.append(f"({n},{k}):{rep.computed}>={rep.bound}"
                       f"{'=' if rep.equals_exact else '!'}")
    return _result("lower_bound", True, " ".join(details), t0)


# --- criterion 4: Landau oracles ----------------------------------------------

def _partitions(k: int, largest=None):
    if k == 0:
        yield ()
        return
    if largest is None:
        largest = k
    for first in range(min(k, largest), 0, -1):
        for rest in _partitions(k - first, first):
            yield (first,) + rest


def check_landau(brute_max=30, order_max=10) -> CheckResult:
    t0 = time.perf_counter()
    prev = 0
    for k in range(1, brute_max + 1):
        lv = landau(k)
        brute = max(lcm(*p) if p else 1 for p in _partitions(k))
        if lv.value != brute:
            return _result("landau", False, f"k={k}: DP {lv.value} != brute {brute}", t0)
        if lcm(*(lv.partition or (1,))) != lv.value or sum(lv.partition) > k:
            return _result("landau", False, f"k={k}: bad partition {lv.partition}", t0)
        if lv.value < prev:
            return _result("landau", False, f"k={k}: not monotone", t0)
        prev = lv.value
    for k in range(1, order_max + 1):
        # cycle types of S_k are the partitions of exactly k
        max_order = max(lcm(*p) for p in _partitions(k))
        if landau(k).value != max_order:
            return _result("landau", False,
                           f"k={k}: DP != max element order {max_order}", t0)
    return _result("landau", True,
                   f"brute force agrees up to k={brute_max}; "
                   f"S_k element orders agree up to k={order_max}", t0)


# --- criterion 5: walk compression --------------------------------------------

def _random_walk(g, rng, max_len):
    starts = [v for v in g.vertices if g.out[v]]
    if not starts:
        return Walk(g, g.vertices[0], ())
    cur = rng.choice(starts)
    start = cur
    steps = []
    for _ in range(max_len):
        outs = g.out[cur]
        if not outs:
            break
        idx = rng.choice(outs)
        steps.append(idx)
        cur = g.arcs[idx].target
    return Walk(g, start, tuple(steps))


def check_walk_compression(instances=500, max_walk_len=200) -> CheckResult:
    t0 = time.perf_counter()
    rng = random.Random(SEED)
    for trial in range(instances):
        n = rng.randint(2, 5)
        basis = [tuple(rng.randrange(n) for _ in range(n))
                 for _ in range(rng.randint(1, 4))]
        g = build_kgraph(basis, 2)
        w = _random_walk(g, rng, rng.randint(0, max_walk_len))
        cw, reports = compress_walk_report(w)
        if eval_walk(cw) != eval_walk(w):
            return _result("walk_compression", False,
                           f"trial {trial}: evaluation changed", t0)
        for rep in reports:
            limit = 2 * (rep.vertex_count - 1) + (2 * rep.vertex_count - 1) * rep.factor_count
            if rep.length > limit:
                return _result("walk_compression", False,
                               f"trial {trial}: component length {rep.length} > {limit}", t0)
    return _result("walk_compression", True,
                   f"{instances} random walks: eval preserved, length bounds hold", t0)


# --- criterion 6: semigroup oracles -------------------------------------------

def _naive_worst_complexity(C) -> int:
    """ell(C) by literal enumeration: all non-empty bases, all products by length."""
    C = sorted(set(C))
    worst = 0
    for mask in range(1, 1 << len(C)):
        basis = [C[i] for i in range(len(C)) if mask >> i & 1]
        first_len: dict = {}
        length = 0
        while True:
            length += 1
            new = False
            for factors in product(basis, repeat=length):
                f = factors[0]
                for gfun in factors[1:]:
                    f = compose(f, gfun)
                if f not in first_len:
                    first_len[f] = length
                    new = True
            if not new:
                break
        worst = max(worst, max(first_len.values()))
    return worst


def check_semigroup_oracles(include_s3=False) -> CheckResult:
    t0 = time.perf_counter()
    t2 = [p for p in product(range(2), repeat=2)]
    s2 = [p for p in t2 if len(set(p)) == 2]
    ell_t2 = worst_case_complexity(t2).value
    ell_s2 = worst_case_complexity(s2).value
    if ell_t2 != _naive_worst_complexity(t2):
        return _result("semigroup_oracles", False, "ell(T_2) disagrees with oracle", t0)
    if ell_s2 != _naive_worst_complexity(s2):
        return _result("semigroup_oracles", False, "ell(S_2) disagrees with oracle", t0)
    if ell_s2 > ell_t2:
        return _result("semigroup_oracles", False,
                       f"ell(S_2)={ell_s2} > ell(T_2)={ell_t2}", t0)
    detail = f"ell(T_2)={ell_t2}, ell(S_2)={ell_s2}"
    if include_s3:
        from itertools import permutations
        s3 = [tuple(p) for p in permutations(range(3))]
        ell_s3 = worst_case_complexity(s3).value
        if ell_s3 != _naive_worst_complexity(s3):
            return _result("semigroup_oracles", False,
                           "ell(S_3) disagrees with oracle", t0)
        detail += f", ell(S_3)={ell_s3}"
    return _result("semigroup_oracles", True, detail, t0)


# --- criterion 7: entropy limit and Stirling ----------------------------------

def check_entropy_limit() -> CheckResult:
    t0 = time.perf_counter()
    for p in (0.5, 0.25):
        err = abs(bounds.entropy_limit_check(1000, p) - bounds.entropy(p))
        if err >= 0.01:
            return _result("entropy_limit", False, f"p={p}: error {err:.4f} >= 0.01", t0)
    ratio = bounds.stirling_central_ratio(1000)
    if abs(ratio - 1) >= 0.02:
        return _result("entropy_limit", False, f"Stirling ratio {ratio:.4f}", t0)
    return _result("entropy_limit", True,
                   f"entropy errors < 0.01 at n=1000; Stirling ratio {ratio:.4f}", t0)


# --- criterion 8: sync properties ---------------------------------------------

def _definitional_irreducible(aut: PartialSemiautomaton, w, bound: int) -> bool:
    """Literal quantifier: try every defined continuation up to the bound."""
    S = image(aut, aut.states(), w)
    if S is None:
        return False
    target = len(S)
    stack = [(S, 0)]
    while stack:
        T, d = stack.pop()
        for a in range(aut.n_inputs):
            T2 = image(aut, T, (a,))
            if T2 is None:
                continue
            if len(T2) < target:
                return False
            if d + 1 < bound:
                stack.append((T2, d + 1))
    return True


def _random_psemi(rng, n, a, density=0.85) -> PartialSemiautomaton:
    nxt = tuple(tuple(rng.randrange(n) if rng.random() < density else None
                      for _ in range(a))
                for _ in range(n))
    return PartialSemiautomaton(n, a, nxt)


def check_sync_properties(instances=200) -> CheckResult:
    t0 = time.perf_counter()
    rng = random.Random(SEED + 1)
    for trial in range(instances):
        n = rng.randint(2, 4)
        a = 2 if n == 4 else rng.randint(2, 3)
        aut = _random_psemi(rng, n, a)
        w = sync.shortest_carefully_synchronizing(aut)
        if w is not None and not sync.is_irreducible(aut, w):
            return _result("sync_properties", False,
                           f"trial {trial}: careful word {w} not irreducible", t0)
        bound = 2 ** n
        for probe in ((), sync.shortest_irreducible(aut)):
            if probe is None:
                continue
            fast = sync.is_irreducible(aut, probe)
            slow = _definitional_irreducible(aut, probe, bound)
            if fast != slow:
                return _result("sync_properties", False,
                               f"trial {trial}: word {probe}: reachability "
                               f"{fast} vs definitional {slow}", t0)
    return _result("sync_properties", True,
                   f"{instances} random partial semiautomata agree with the "
                   f"definitional oracle", t0)


# --- criterion 9: PDS oracle equivalence --------------------------------------

def _is_pds(aut, S, w) -> bool:
    return uncertainty(aut, S, w).is_discrete()


def _random_mealy(rng, n, a, b=2) -> MealyAutomaton:
    nxt = tuple(tuple(rng.randrange(n) for _ in range(a)) for _ in range(n))
    out = tuple(tuple(rng.randrange(b) for _ in range(a)) for _ in range(n))
    return MealyAutomaton(n, a, b, nxt, out)


def check_pds_oracle(instances=300, triples=1000) -> CheckResult:
    t0 = time.perf_counter()
    rng = random.Random(SEED + 2)
    for trial in range(instances):
        n = rng.randint(2, 5)
        a = rng.randint(1, 2)
        aut = _random_mealy(rng, n, a)
        k = rng.randint(2, min(3, n))
        S = tuple(sorted(rng.sample(range(n), k)))
        res = shortest_pds(aut, S)
        if res.status == "found":
            L = res.length
            if not _is_pds(aut, S, res.word):
                return _result("pds_oracle", False,
                               f"trial {trial}: returned word is not a PDS", t0)
            if L <= 14:
                for length in range(L):
                    if any(_is_pds(aut, S, w)
                           for w in product(range(a), repeat=length)):
                        return _result("pds_oracle", False,
                                       f"trial {trial}: shorter PDS exists", t0)
        else:
            for length in range(9):
                if any(_is_pds(aut, S, w) for w in product(range(a), repeat=length)):
                    return _result("pds_oracle", False,
                                   f"trial {trial}: reported absent but a PDS exists", t0)
    rng2 = random.Random(SEED + 3)
    for _ in range(triples):
        n = rng2.randint(2, 5)
        aut = _random_mealy(rng2, n, 2)
        S = range(n)
        alpha = tuple(rng2.randrange(2) for _ in range(rng2.randint(0, 6)))
        beta = tuple(rng2.randrange(2) for _ in range(rng2.randint(0, 6)))
        if not uncertainty(aut, S, alpha + beta).refines(uncertainty(aut, S, alpha)):
            return _result("pds_oracle", False, "refinement monotonicity violated", t0)
    return _result("pds_oracle", True,
                   f"{instances} automata match brute force; monotonicity holds "
                   f"on {triples} triples", t0)


# --- driver --------------------------------------------------------------------

def run(level: str = "quick") -> list[CheckResult]:
    if level == "quick":
        checks = [
            check_fig1_family((3, 4, 5)),
            check_lower_bound(((4, 2), (5, 2))),
            check_landau(brute_max=20, order_max=8),
            check_walk_compression(instances=60),
            check_semigroup_oracles(include_s3=False),
            check_entropy_limit(),
            check_sync_properties(instances=40),
            check_pds_oracle(instances=60, triples=200),
        ]
    elif level == "full":
        checks = [
            check_fig1_family(),
            check_moore_n3(),
            check_lower_bound(),
            check_landau(),
            check_walk_compression(),
            check_semigroup_oracles(include_s3=True),
            check_entropy_limit(),
            check_sync_properties(),
            check_pds_oracle(),
        ]
    else:
        raise ValueError(f"unknown level {level!r}")
    return checks
