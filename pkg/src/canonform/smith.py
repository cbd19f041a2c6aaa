"""Two-sided reduction to diagonal and Smith canonical form, with
unimodular witnesses verified by replay on every call.
"""
from __future__ import annotations

from dataclasses import dataclass

from .domain import Elem, canonical_associate, egcd, valuation
from .errors import ZeroArgument
from .matrix import Matrix, general_direct_sum
from .hermite import column_hermite_canonical, hermite_canonical

_ALTERNATION_CAP = 200


@dataclass(frozen=True)
class SmithResult:
    p: Matrix
    q: Matrix
    d: Matrix
    diag: tuple[Elem, ...]
    rank: int


def _is_diagonal(a: Matrix) -> bool:
    return all(
        a.entry(i, j).is_zero()
        for i in range(1, a.m + 1)
        for j in range(1, a.n + 1)
        if i != j
    )


def diagonalize(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Alternate column and row Hermite canonicalization until the matrix
    is diagonal: P A Q = D with no divisibility requirement.

    One column pass followed by one row pass is usually enough, but not
    always (a row pass can reintroduce above-diagonal entries), so the
    pair is iterated to a fixed point.  A canonical pass that ends
    diagonal has, by its echelon shape, the nonzero entries packed into
    the leading slots and the pivots canonical.
    """
    p = Matrix.identity(a.ring, a.m)
    q = Matrix.identity(a.ring, a.n)
    d = a
    for _ in range(_ALTERNATION_CAP):
        cq, d = column_hermite_canonical(d)
        q = q @ cq
        if _is_diagonal(d):
            return p, q, d
        res = hermite_canonical(d)
        p = res.q @ p
        d = res.h
        if _is_diagonal(d):
            return p, q, d
    raise AssertionError("diagonalization failed to converge")  # pragma: no cover


def smith_2x2(d1: Elem, d2: Elem) -> tuple[Matrix, Matrix, Elem, Elem]:
    """Smith form of diag(d1, d2): returns (P2, Q2, delta, lam) with
    P2 diag(d1,d2) Q2 = diag(gcd, lcm), both canonical."""
    if d1.is_zero() or d2.is_zero():
        raise ZeroArgument("smith_2x2 needs nonzero diagonal entries")
    ring = d1.ring
    delta, s, t = egcd(d1, d2)
    lam_signed = (d1 * d2).exact_div(delta)
    q2 = Matrix.from_rows(ring, [
        [s, -d2.exact_div(delta)],
        [t, d1.exact_div(delta)],
    ])
    one, zero = Elem.one(ring), Elem.zero(ring)
    # R_[2]-c[1] folded into [[1,1],[0,1]] clears the td2 left behind below
    c = (t * d2).exact_div(delta)
    p2 = Matrix.from_rows(ring, [[one, one], [-c, one - c]])
    u, lam = canonical_associate(lam_signed)
    if not u.is_one():
        p2 = Matrix.from_rows(ring, [list(p2.row(1)), [u * v for v in p2.row(2)]])
    check = p2 @ Matrix.from_rows(ring, [[d1, zero], [zero, d2]]) @ q2
    expected = Matrix.from_rows(ring, [[delta, zero], [zero, lam]])
    assert check == expected, "smith_2x2 certificate failed"
    return p2, q2, delta, lam


def _embed(m2: Matrix, i: int, j: int, size: int) -> Matrix:
    if size == 2:
        return m2  # slots (i, j) are necessarily (1, 2)
    pos = [i, j]
    return general_direct_sum(m2, Matrix.identity(m2.ring, size - 2), pos, pos)


def _embed_pair(
    p: Matrix, q: Matrix, d: Matrix, p2: Matrix, q2: Matrix, i: int, j: int
) -> tuple[Matrix, Matrix, Matrix]:
    """Fold a 2x2 transform acting on diagonal slots {i, j} into the full
    witnesses via the general direct sum with the identity."""
    pbig = _embed(p2, i, j, d.m)
    qbig = _embed(q2, i, j, d.n)
    return pbig @ p, q @ qbig, pbig @ d @ qbig


def _chain_pass(p, q, d, diag, start):
    """Make diag[start] divide every later entry via embedded 2x2 steps."""
    for other in range(start + 1, len(diag)):
        lead, cur = diag[start], diag[other]
        if divmod(cur, lead)[1].is_zero():
            continue
        p2, q2, delta, lam = smith_2x2(lead, cur)
        # loop variant: the leading slot's valuation strictly decreases
        assert valuation(delta) < valuation(lead)
        p, q, d = _embed_pair(p, q, d, p2, q2, start + 1, other + 1)
        diag[start], diag[other] = delta, lam
    return p, q, d


def weak_smith(a: Matrix) -> SmithResult:
    """Diagonal form in which d1 divides every diagonal entry."""
    p, q, d = diagonalize(a)
    diag = [d.entry(i, i) for i in range(1, min(d.m, d.n) + 1)
            if not d.entry(i, i).is_zero()]
    if diag:
        p, q, d = _chain_pass(p, q, d, diag, 0)
    assert p @ a @ q == d, "weak Smith certificate failed"
    return SmithResult(p, q, d, tuple(diag), len(diag))


def smith(a: Matrix) -> SmithResult:
    """Smith canonical form P A Q = D: a full divisibility chain of
    canonical associates; the witness product is replayed exactly."""
    p, q, d = diagonalize(a)
    diag = [d.entry(i, i) for i in range(1, min(d.m, d.n) + 1)
            if not d.entry(i, i).is_zero()]
    r = len(diag)
    for start in range(r - 1):
        p, q, d = _chain_pass(p, q, d, diag, start)
    work = d.rows()
    pwork = p.rows()
    for t in range(r):
        u, c = canonical_associate(diag[t])
        if not u.is_one():
            work[t] = [u * v for v in work[t]]
            pwork[t] = [u * v for v in pwork[t]]
            diag[t] = c
    d = Matrix.from_rows(a.ring, work)
    p = Matrix.from_rows(a.ring, pwork)
    assert p @ a @ q == d, "Smith certificate failed"
    for t in range(r - 1):
        assert divmod(diag[t + 1], diag[t])[1].is_zero(), "divisibility chain broken"
    return SmithResult(p, q, d, tuple(diag), r)
