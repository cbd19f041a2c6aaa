"""Acceptance suite: one test per criterion, each printing a PASS/FAIL
line.  All arithmetic is exact, so every comparison is equality.

Run with `pytest tests/test_acceptance.py -s` to watch the lines stream.
"""
import functools
import random
from fractions import Fraction

from canonform.determinant import det, det_expansion, rank_by_minors, submatrix
from canonform.domain import (
    Ring,
    canonical_associate,
    egcd,
    factor,
    integer,
    polynomial,
    prime_sort_key,
)
from canonform.hermite import clear_column, hermite_canonical, solve, stabilizer_shape
from canonform.invariants import (
    det_divisors_by_minors,
    invariant_factors_from_elementary,
)
from canonform.matrix import (
    Matrix,
    direct_sum,
    general_direct_sum,
    lift,
    mat_q,
    mat_z,
    vector,
)
from canonform.perm import (
    Injection,
    Permutation,
    compose,
    cycles,
    decompose_injection,
    index,
    inverse,
    inversions,
    sign,
)
from canonform.similarity import (
    char_poly,
    companion,
    hypercompanion,
    jordan,
    minimal_poly,
    scalar_poly_eval,
    similar,
)
from canonform.smith import smith

from conftest import random_matrix, random_unimodular


def criterion(num, label):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"criterion {num:02d} ({label}): FAIL")
                raise
            print(f"criterion {num:02d} ({label}): PASS")
        return wrapper
    return deco


@criterion(1, "golden determinants")
def test_criterion_01_determinants():
    dirsum = direct_sum(mat_z([[1, 2], [2, 3]]), mat_z([[3, 4], [4, 1]]))
    assert det(dirsum) == integer(13)
    assert det_expansion(dirsum) == integer(13)
    general = general_direct_sum(
        mat_z([[1, 2], [2, 3]]), mat_z([[3, 4], [4, 1]]), [1, 3], [1, 3])
    assert det(general) == integer(13)
    circulant = mat_z([[1, 2, 3, 4], [2, 3, 4, 1], [3, 4, 1, 2], [4, 1, 2, 3]])
    from canonform.determinant import laplace, restricted_det_sum
    assert laplace(circulant, [1, 3], "rows") == integer(160)
    six_terms = {
        (1, 2): 20, (1, 3): -64, (1, 4): 20,
        (2, 3): 20, (2, 4): 144, (3, 4): 20,
    }
    for ys, value in six_terms.items():
        assert restricted_det_sum(circulant, [1, 3], ys) == integer(value)
    assert sum(six_terms.values()) == 160


@criterion(2, "Cramer 2x2")
def test_criterion_02_cramer():
    from canonform.determinant import cramer_solve
    x = cramer_solve(mat_z([[1, 1], [1, -1]]), vector(Ring.Z, [3, 1]))
    assert x == vector(Ring.Q, [2, 1])


@criterion(3, "determinantal divisors both paths")
def test_criterion_03_det_divisors():
    a = mat_z([[0, 4, 6, 2], [8, 2, 10, 8], [2, 0, 4, 4]])
    expected = tuple(integer(v) for v in (1, 2, 4, 72))
    assert det_divisors_by_minors(a) == expected
    res = smith(a)
    fs = [integer(1)]
    for d in res.diag:
        fs.append(fs[-1] * d)
    assert tuple(fs) == expected


@criterion(4, "Hermite canonical form and solve")
def test_criterion_04_hermite_solve():
    a = mat_q([
        [2, 5, 4, -2, 2, 1],
        [0, 1, 1, 0, -1, 0],
        [2, 6, 5, 0, -1, 0],
    ])
    expected_h = mat_q([
        [1, 0, Fraction(-1, 2), 0, Fraction(5, 2), 0],
        [0, 1, 1, 0, -1, 0],
        [0, 0, 0, 1, -1, Fraction(-1, 2)],
    ])
    res = hermite_canonical(a)
    assert res.h == expected_h
    assert res.primary_cols == (1, 2, 4)
    y = vector(Ring.Q, [5, -2, -3])
    out = solve(a, y)
    assert out is not None
    particular, nullbasis = out
    assert particular == vector(Ring.Q, [Fraction(9, 2), -2, 0, -3, 0, 0])
    assert a @ particular == y
    assert len(nullbasis) == 3
    for v in nullbasis:
        assert (a @ v).is_zero()
    assert res.rank + len(nullbasis) == 6


@criterion(5, "egcd/clear_column 18,12 -> 6,0")
def test_criterion_05_clear_column():
    assert egcd(integer(18), integer(12)) == (integer(6), integer(1), integer(-1))
    q2 = mat_z([[1, -1], [-2, 3]])
    assert q2 @ vector(Ring.Z, [18, 12]) == vector(Ring.Z, [6, 0])
    a = mat_z([
        [1, -1, 0, 0, 3, 4],
        [2, 0, 18, -1, 2, 6],
        [0, 1, 2, 2, 5, 3],
        [-5, -4, 12, 5, 2, 8],
    ])
    q, out = clear_column(a, 3, rows_in=[2, 4], s=2)
    assert [e.value for e in out.col(3)] == [0, 6, 2, 0]
    assert q @ a == out and det(q).is_unit()


@criterion(6, "elementary divisors -> invariant factors")
def test_criterion_06_reconstruction():
    eds = []
    for value in (2, 2, 3, 3, 4, 4, 5, 5, 7, 7, 9, 9, 9, 25, 49):
        base, exp = {4: (2, 2), 9: (3, 2), 25: (5, 2), 49: (7, 2)}.get(
            value, (value, 1))
        eds.append((integer(base), exp))
    qs = invariant_factors_from_elementary(eds, 6, Ring.Z)
    assert qs == tuple(integer(v) for v in (1, 3, 6, 630, 1260, 44100))


@criterion(7, "permutation suite")
def test_criterion_07_permutations():
    f = Permutation.from_cycles(6, (1, 4, 3))
    g = Permutation.from_cycles(6, (1, 5, 6, 2))
    fg = compose(f, g)
    assert fg == Permutation.from_cycles(6, (1, 5, 6, 2, 4, 3))
    assert inverse(fg) == Permutation.from_cycles(6, (3, 4, 2, 6, 5, 1))
    grid = Permutation((7, 5, 8, 2, 1, 3, 4, 6))
    assert cycles(grid) == ((1, 7, 4, 2, 5), (3, 8, 6))
    assert index(grid) == 6
    assert len(inversions(grid)) == 16
    assert sign(Permutation.from_cycles(4, (1, 4, 2, 3))) == -1
    h = Injection((4, 1, 3), codomain=5)
    finc, gperm = decompose_injection(h)
    assert finc.images == (1, 3, 4) and gperm.images == (3, 1, 2)


@criterion(8, "Smith certificates, 300 per ring")
def test_criterion_08_smith_certificates():
    rng = random.Random(2024)
    for ring in (Ring.Z, Ring.Q, Ring.QX):
        for _ in range(300):
            m, n = rng.randint(1, 6), rng.randint(1, 6)
            a = random_matrix(rng, ring, m, n, bound=9, max_deg=2)
            res = smith(a)
            assert res.p @ a @ res.q == res.d
            assert det(res.p).is_unit() and det(res.q).is_unit()
            for t in range(1, res.rank):
                assert divmod(res.diag[t], res.diag[t - 1])[1].is_zero()
            for d in res.diag:
                assert canonical_associate(d)[1] == d and not d.is_zero()


@criterion(9, "oracle equivalences")
def test_criterion_09_oracles():
    rng = random.Random(2025)
    for ring in (Ring.Z, Ring.Q, Ring.QX):
        for _ in range(200):
            n = rng.randint(1, 6)
            a = random_matrix(rng, ring, n, n, bound=6, max_deg=1)
            assert det(a) == det_expansion(a)
    for ring in (Ring.Z, Ring.Q, Ring.QX):
        for _ in range(60):
            m, n = rng.randint(1, 4), rng.randint(1, 4)
            a = random_matrix(rng, ring, m, n, bound=6, max_deg=1)
            assert hermite_canonical(a).rank == rank_by_minors(a)
            res = smith(a)
            one = Matrix.identity(ring, 1).entry(1, 1)
            fs = [one]
            for d in res.diag:
                fs.append(fs[-1] * d)
            assert tuple(fs) == det_divisors_by_minors(a)


@criterion(10, "Cauchy-Binet")
def test_criterion_10_cauchy_binet():
    from canonform.determinant import minor_of_product
    a26 = mat_z([[2, 5, 4, -2, 2, 1], [2, 6, 5, 0, -1, 0]])
    b62 = mat_z([[2, 5], [1, 1], [2, 3], [2, 1], [3, 1], [2, 2]])
    term = det(submatrix(a26, (1, 2), (1, 3))) * det(submatrix(b62, (1, 3), (1, 2)))
    assert term == integer(-8)
    assert minor_of_product(a26, b62, [1, 2], [1, 2]) == det(a26 @ b62)
    rng = random.Random(2026)
    for _ in range(200):
        arows, p, bcols = (rng.randint(1, 5) for _ in range(3))
        a = random_matrix(rng, Ring.Z, arows, p, bound=5)
        b = random_matrix(rng, Ring.Z, p, bcols, bound=5)
        k = rng.randint(1, min(arows, bcols))
        gs = sorted(rng.sample(range(1, arows + 1), k))
        hs = sorted(rng.sample(range(1, bcols + 1), k))
        # minor_of_product asserts the identity internally
        assert minor_of_product(a, b, gs, hs) == det(submatrix(a @ b, gs, hs))
        if arows == bcols:
            square_a = random_matrix(rng, Ring.Z, arows, arows, bound=5)
            square_b = random_matrix(rng, Ring.Z, arows, arows, bound=5)
            assert det(square_a @ square_b) == det(square_a) * det(square_b)
        if p < min(arows, bcols):
            wide = random_matrix(rng, Ring.Z, arows, p, bound=5)
            tall = random_matrix(rng, Ring.Z, p, arows, bound=5)
            assert det(wide @ tall) == integer(0)


@criterion(11, "Cayley-Hamilton and minimal polynomials")
def test_criterion_11_cayley_hamilton():
    rng = random.Random(2027)
    full_divisor_checks = 0
    for _ in range(200):
        n = rng.randint(1, 5)
        a = random_matrix(rng, Ring.Q, n, n, bound=4)
        f = char_poly(a)
        assert scalar_poly_eval(f, a).is_zero()
        q = minimal_poly(a)
        assert scalar_poly_eval(q, a).is_zero()
        assert divmod(f, q)[1].is_zero()
        try:
            _, powers = factor(q)
        except Exception:
            continue
        divisors = [polynomial([1])]
        for p, e in powers:
            divisors = [d * p ** k for d in divisors for k in range(e + 1)]
        for d in divisors:
            if d != q:
                assert not scalar_poly_eval(d, a).is_zero()
        full_divisor_checks += 1
    assert full_divisor_checks >= 50


@criterion(12, "Jordan pipeline with certificates")
def test_criterion_12_jordan_pipeline():
    rng = random.Random(2028)
    for _ in range(100):
        n = rng.randint(1, 4)
        # random Jordan structure with rational eigenvalues
        remaining, wanted_blocks = n, []
        while remaining:
            size = rng.randint(1, remaining)
            alpha = Fraction(rng.randint(-3, 3), rng.choice([1, 1, 2]))
            wanted_blocks.append((alpha, size))
            remaining -= size
        # expected form: blocks in the library's display order
        ordered = sorted(
            wanted_blocks,
            key=lambda blk: (prime_sort_key(polynomial([-blk[0], 1])), blk[1]),
        )
        expected = hypercompanion(ordered[0][0], ordered[0][1])
        for alpha, size in ordered[1:]:
            expected = direct_sum(expected, hypercompanion(alpha, size))
        generator = hypercompanion(wanted_blocks[0][0], wanted_blocks[0][1])
        for alpha, size in wanted_blocks[1:]:
            generator = direct_sum(generator, hypercompanion(alpha, size))
        s = lift(random_unimodular(rng, Ring.Z, n), Ring.Q)
        from canonform.determinant import inverse as mat_inverse
        a = s @ generator @ mat_inverse(s)
        cert, form = jordan(a)
        assert form == expected
        assert cert.verify(a)
    for k in (1, 2, 3, 4):
        p = polynomial([Fraction(-5, 2), 1]) ** k
        cert = similar(companion(p), hypercompanion(Fraction(5, 2), k))
        assert cert is not None and cert.verify(companion(p))


@criterion(13, "Hermite uniqueness and stabilizers")
def test_criterion_13_hermite_uniqueness():
    rng = random.Random(2029)
    for trial in range(200):
        ring = (Ring.Z, Ring.Q, Ring.QX)[trial % 3]
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = random_matrix(rng, ring, m, n, bound=6, max_deg=1)
        p = random_unimodular(rng, ring, m)
        assert hermite_canonical(p @ a).h == hermite_canonical(a).h
    for trial in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = random_matrix(rng, Ring.Z, m, n, bound=6)
        res = hermite_canonical(a)
        r = res.rank
        rows = [[integer(0)] * m for _ in range(m)]
        for i in range(r):
            rows[i][i] = integer(1)
            for j in range(r, m):
                rows[i][j] = integer(rng.randint(-4, 4))
        if r < m:
            unit_block = random_unimodular(rng, Ring.Z, m - r)
            for i in range(r, m):
                for j in range(r, m):
                    rows[i][j] = unit_block.entry(i - r + 1, j - r + 1)
        p = Matrix.from_rows(Ring.Z, rows)
        assert p @ res.h == res.h
        assert stabilizer_shape(p, r)
