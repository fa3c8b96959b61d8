"""Closed-form bound calculators and comparison tables.

Binomials are exact big integers; only the final log/ratio conversions
go through floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

CSV_COLUMNS = ("n", "k", "regime", "moore", "gill", "sok_low1", "sok_low2",
               "sok_up_factor", "phi_n", "tn_asym", "sn_asym")


def entropy(p: float) -> float:
    """Natural-log entropy -p ln p - (1-p) ln(1-p), with 0 ln 0 = 0."""
    if not 0 <= p <= 1:
        raise ValueError("p must lie in [0, 1]")
    if p == 0 or p == 1:
        return 0.0
    return -p * math.log(p) - (1 - p) * math.log(1 - p)


def binary_entropy(x: float) -> float:
    """Base-2 entropy, extended to the endpoints by the 0 log 0 convention."""
    return entropy(x) / math.log(2)


def phi(a: float) -> float:
    """Piecewise exponent rate: H2(a) below 1/2, constant 1 from 1/2 on."""
    if not 0 < a <= 1:
        raise ValueError("a must lie in (0, 1]")
    return 1.0 if a >= 0.5 else binary_entropy(a)


@dataclass(frozen=True)
class BoundRow:
    """One (n, k) row of the bound comparison table.

    regime marks which lower bound applies: "low1" for k <= n/2, "low2"
    for n/2 < k < n, "none" at k = n.  The asymptotic columns omit the
    (1+o(1)) factors and are reference curves, never asserted bounds.
    """

    n: int
    k: int
    regime: str
    moore: Optional[int]        # n - 1, only when k = 2
    gill: int                   # (k-1) n^k
    sok_low1: int               # C(n-1, k-1)
    sok_low2: int               # C(n-2, floor((n-2)/2))
    sok_up_factor: int          # multiplier of the T_n worst complexity
    phi_n: float
    tn_asym: float
    sn_asym: float


def bound_row(n: int, k: int) -> BoundRow:
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    if 2 * k <= n:
        regime = "low1"
    elif k < n:
        regime = "low2"
    else:
        regime = "none"
    return BoundRow(
        n=n,
        k=k,
        regime=regime,
        moore=n - 1 if k == 2 else None,
        gill=(k - 1) * n ** k,
        sok_low1=math.comb(n - 1, k - 1),
        sok_low2=math.comb(n - 2, (n - 2) // 2),
        sok_up_factor=k - 1,
        phi_n=phi(k / n) * n,
        tn_asym=2.0 ** n * math.exp(math.sqrt(n / 2 * math.log(n))),
        sn_asym=math.exp(math.sqrt(n * math.log(n))),
    )


def bounds_table(n_values: Iterable[int], ratio: float) -> str:
    """CSV table with k = max(2, round(ratio * n)) per row; rows where the
    resulting k falls outside [2, n] are skipped."""
    lines = ["# asymptotic columns omit the (1+o(1)) factors: reference curves only",
             ",".join(CSV_COLUMNS)]
    for n in n_values:
        k = max(2, round(ratio * n))
        if not 2 <= k <= n:
            continue
        row = bound_row(n, k)
        cells = []
        for col in CSV_COLUMNS:
            v = getattr(row, col)
            if v is None:
                cells.append("")
            elif isinstance(v, float):
                cells.append(repr(v))
            else:
                cells.append(str(v))
        lines.append(",".join(cells))
    return "\n".join(lines) + "\n"


def entropy_limit_check(n: int, p: float) -> float:
    """ln C(n, round(p n)) / n, computed from the exact binomial; converges
    to entropy(p) as n grows."""
    if n < 1:
        raise ValueError("n must be positive")
    m = round(p * n)
    if not 0 <= m <= n:
        raise ValueError("round(p*n) out of range")
    return math.log(math.comb(n, m)) / n


def stirling_central_ratio(n: int) -> float:
    """C(n, ceil(n/2)) * sqrt(pi n / 2) / 2^n; tends to 1."""
    c = math.comb(n, (n + 1) // 2)
    return c * math.sqrt(math.pi * n / 2) / 2 ** n
