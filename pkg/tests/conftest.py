"""Shared random generators for the property tests.

Everything is seeded explicitly so failures reproduce.
"""
from fractions import Fraction

from canonform.domain import Elem, Ring, integer, polynomial, rational
from canonform.hermite import apply_op, row_addmul, row_scale, row_swap
from canonform.matrix import Matrix


def random_elem(rng, ring, bound=9, max_deg=2) -> Elem:
    if ring is Ring.Z:
        return integer(rng.randint(-bound, bound))
    if ring is Ring.Q:
        return rational(rng.randint(-bound, bound), rng.randint(1, 4))
    deg = rng.randint(0, max_deg)
    coeffs = [Fraction(rng.randint(-3, 3)) for _ in range(deg)]
    coeffs.append(Fraction(rng.choice([-3, -2, -1, 1, 2, 3])))
    if rng.random() < 0.15:
        return polynomial([])
    return polynomial(coeffs)


def random_nonzero_elem(rng, ring, bound=9, max_deg=2) -> Elem:
    while True:
        e = random_elem(rng, ring, bound, max_deg)
        if not e.is_zero():
            return e


def random_matrix(rng, ring, m, n, bound=9, max_deg=2) -> Matrix:
    return Matrix(
        ring, m, n,
        tuple(random_elem(rng, ring, bound, max_deg) for _ in range(m * n)),
    )


def random_unit(rng, ring) -> Elem:
    if ring is Ring.Z:
        return integer(rng.choice([1, -1]))
    if ring is Ring.Q:
        return rational(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 3))
    return polynomial([Fraction(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 2))])


def random_unimodular(rng, ring, n, steps=None) -> Matrix:
    """Random product of elementary operations applied to the identity."""
    u = Matrix.identity(ring, n)
    small = {
        Ring.Z: lambda: integer(rng.choice([-2, -1, 1, 2])),
        Ring.Q: lambda: rational(rng.choice([-2, -1, 1, 2]), rng.randint(1, 2)),
        Ring.QX: lambda: polynomial(
            [Fraction(rng.randint(-1, 1)), Fraction(rng.randint(-1, 1))]
        ),
    }
    for _ in range(steps if steps is not None else 2 * n + 2):
        roll = rng.random()
        if n == 1 or roll > 0.85:
            u = apply_op(u, row_scale(rng.randint(1, n), random_unit(rng, ring)))
            continue
        i, j = rng.sample(range(1, n + 1), 2)
        if roll < 0.6:
            c = small[ring]()
            if c.is_zero():
                continue
            u = apply_op(u, row_addmul(i, c, j))
        else:
            u = apply_op(u, row_swap(i, j))
    return u
