"""Determinantal divisors, invariant factors, elementary divisors,
reconstruction, and the matrix-equivalence decision.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

from .determinant import gcd_of_minors
from .domain import Elem, Ring, factor, prime_sort_key
from .errors import RankTooSmall, RingMismatch, ShapeMismatch, TooLargeForOracle
from .matrix import Matrix
from .smith import smith

_MINOR_BUDGET = 5000


@dataclass(frozen=True)
class InvariantReport:
    rank: int
    det_divisors: tuple[Elem, ...]        # f_0 .. f_r
    invariant_factors: tuple[Elem, ...]   # q_1 .. q_r
    elementary_divisors: tuple[tuple[Elem, int], ...]  # (prime, exponent) multiset


def det_divisors_by_minors(a: Matrix) -> tuple[Elem, ...]:
    """Oracle f-sequence: f_k = canonical gcd of all k x k minors, up to
    the rank.  Guarded, since it enumerates every minor."""
    kmax = min(a.m, a.n)
    total = sum(comb(a.m, k) * comb(a.n, k) for k in range(1, kmax + 1))
    if kmax > 4 and total > _MINOR_BUDGET:
        raise TooLargeForOracle(f"{total} minors exceed the oracle budget")
    out = [Elem.one(a.ring)]
    for k in range(1, kmax + 1):
        g = gcd_of_minors(a, k)
        if g.is_zero():
            break
        out.append(g)
    return tuple(out)


def invariant_report(a: Matrix) -> InvariantReport:
    """Rank, f-sequence, q-sequence and elementary divisors via the Smith
    form; factorization failures propagate."""
    res = smith(a)
    fs = [Elem.one(a.ring)]
    for d in res.diag:
        fs.append(fs[-1] * d)
    eds = []
    for q in res.diag:
        _, powers = factor(q)
        eds.extend(powers)
    eds.sort(key=lambda pe: (prime_sort_key(pe[0]), pe[1]))
    return InvariantReport(res.rank, tuple(fs), res.diag, tuple(eds))


def invariant_factors_from_elementary(
    eds: Iterable[tuple[Elem, int]], r: int, ring: Ring
) -> tuple[Elem, ...]:
    """Rebuild q_1 | ... | q_r from the elementary-divisor multiset: each
    prime's exponent column is zero-padded to length r and sorted weakly
    increasing, then multiplied across primes."""
    per_prime: dict[Elem, list[int]] = {}
    for p, e in eds:
        if p.ring is not ring:
            raise RingMismatch("elementary divisor ring mismatch")
        if e < 1:
            raise ValueError("exponents must be positive")
        per_prime.setdefault(p, []).append(e)
    qs = [Elem.one(ring) for _ in range(r)]
    for p, exps in per_prime.items():
        if len(exps) > r:
            raise RankTooSmall(
                f"prime {p} occurs {len(exps)} times but rank is {r}"
            )
        exps = [0] * (r - len(exps)) + sorted(exps)
        for t, e in enumerate(exps):
            if e:
                qs[t] = qs[t] * p ** e
    return tuple(qs)


def elementary_divisor_values(eds: Sequence[tuple[Elem, int]]) -> list[Elem]:
    """The prime powers themselves, in display order."""
    return [p ** e for p, e in eds]


def equivalent(a: Matrix, b: Matrix) -> bool:
    """Two-sided equivalence: canonical Smith diagonals agree."""
    if (a.m, a.n) != (b.m, b.n):
        raise ShapeMismatch("equivalent needs equal shapes")
    a._check_ring(b)
    return smith(a).diag == smith(b).diag
