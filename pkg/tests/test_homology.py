import random
from fractions import Fraction
from itertools import combinations
from math import gcd

import pytest

from treebraid.homology import (
    SparseIntMatrix,
    eliminate_units,
    rank_and_factors,
    smith_diagonal,
)


def sparse_from_dense(rows):
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    columns = [[] for _ in range(ncols)]
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v:
                columns[j].append((i, v))
    return SparseIntMatrix.from_columns(nrows, columns)


def fraction_rank(rows):
    """Oracle: Gaussian elimination over exact rationals."""
    mat = [[Fraction(v) for v in row] for row in rows]
    rank = 0
    col = 0
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    while rank < nrows and col < ncols:
        pivot = next((i for i in range(rank, nrows) if mat[i][col]), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = 1 / mat[rank][col]
        mat[rank] = [v * inv for v in mat[rank]]
        for i in range(nrows):
            if i != rank and mat[i][col]:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


def determinant(rows):
    n = len(rows)
    mat = [[Fraction(v) for v in row] for row in rows]
    det = Fraction(1)
    for c in range(n):
        pivot = next((i for i in range(c, n) if mat[i][c]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            det = -det
        det *= mat[c][c]
        inv = 1 / mat[c][c]
        for i in range(c + 1, n):
            if mat[i][c]:
                f = mat[i][c] * inv
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    return det


def minor_gcd_factors(rows):
    """Oracle: invariant factors via gcds of i x i minors."""
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    previous = 1
    factors = []
    for size in range(1, min(nrows, ncols) + 1):
        g = 0
        for ri in combinations(range(nrows), size):
            for ci in combinations(range(ncols), size):
                sub = [[rows[i][j] for j in ci] for i in ri]
                g = gcd(g, int(determinant(sub)))
        if g == 0:
            break
        factors.append(g // previous)
        previous = g
    return factors


class TestSmithDiagonal:
    def test_known_2x2(self):
        assert smith_diagonal([[2, 4], [4, 6]]) == [2, 2]

    def test_diag_with_divisibility_fix(self):
        assert smith_diagonal([[2, 0], [0, 3]]) == [1, 6]

    def test_single_entry(self):
        assert smith_diagonal([[6]]) == [6]

    def test_zero_matrix(self):
        assert smith_diagonal([[0, 0], [0, 0]]) == []
        assert smith_diagonal([]) == []

    def test_identity(self):
        assert smith_diagonal([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == [1, 1, 1]

    def test_divisibility_chain_random(self):
        rng = random.Random(7)
        for _ in range(50):
            rows = [[rng.randint(-5, 5) for _ in range(4)] for _ in range(3)]
            diag = smith_diagonal([row[:] for row in rows])
            for a, b in zip(diag, diag[1:]):
                assert b % a == 0

    def test_against_minor_gcds(self):
        rng = random.Random(13)
        for _ in range(40):
            rows = [[rng.randint(-4, 4) for _ in range(3)] for _ in range(3)]
            diag = smith_diagonal([row[:] for row in rows])
            assert diag == minor_gcd_factors(rows)


class TestEliminateUnits:
    def test_unit_only_matrix_fully_eliminates(self):
        rows = [[1, 0, -1], [0, 1, 1], [1, 1, 0]]
        m = sparse_from_dense(rows)
        units, dense = eliminate_units(m)
        assert units == fraction_rank(rows)
        assert not dense or all(all(abs(v) != 1 for v in r) for r in dense)

    def test_remainder_has_no_units(self):
        rng = random.Random(99)
        for _ in range(30):
            rows = [[rng.choice([0, 0, 1, -1, 2]) for _ in range(6)] for _ in range(5)]
            units, dense = eliminate_units(sparse_from_dense(rows))
            for r in dense:
                assert 1 not in r and -1 not in r

    def test_empty(self):
        units, dense = eliminate_units(SparseIntMatrix.from_columns(0, []))
        assert units == 0 and dense == []


class TestRankAndFactors:
    @pytest.mark.parametrize("seed", range(20))
    def test_rank_matches_fraction_oracle(self, seed):
        rng = random.Random(seed)
        nrows = rng.randint(1, 7)
        ncols = rng.randint(1, 7)
        rows = [[rng.randint(-3, 3) for _ in range(ncols)] for _ in range(nrows)]
        r, _ = rank_and_factors(sparse_from_dense(rows))
        assert r == fraction_rank(rows)

    @pytest.mark.parametrize("seed", range(12))
    def test_factors_match_minor_gcds(self, seed):
        rng = random.Random(100 + seed)
        rows = [[rng.randint(-4, 4) for _ in range(4)] for _ in range(4)]
        _, factors = rank_and_factors(sparse_from_dense(rows))
        expect = [d for d in minor_gcd_factors(rows) if d != 1]
        assert factors == expect

    @pytest.mark.parametrize("seed", range(8))
    def test_invariant_under_unimodular_moves(self, seed):
        # row/column additions and swaps must not change rank or factors
        rng = random.Random(1000 + seed)
        rows = [[rng.randint(-3, 3) for _ in range(5)] for _ in range(4)]
        base = rank_and_factors(sparse_from_dense(rows))
        mixed = [row[:] for row in rows]
        for _ in range(12):
            a, b = rng.sample(range(len(mixed)), 2)
            f = rng.randint(-2, 2)
            mixed[a] = [x + f * y for x, y in zip(mixed[a], mixed[b])]
            c, d = rng.sample(range(5), 2)
            for row in mixed:
                row[c] += f * row[d]
        assert rank_and_factors(sparse_from_dense(mixed)) == base

    def test_torsion_two(self):
        # doubled circle boundary: H has Z/2
        rows = [[2], [0]]
        r, factors = rank_and_factors(sparse_from_dense(rows))
        assert (r, factors) == (1, [2])

    def test_wide_sparse(self):
        rows = [[1 if (i + j) % 3 == 0 else 0 for j in range(40)] for i in range(9)]
        r, _ = rank_and_factors(sparse_from_dense(rows))
        assert r == fraction_rank(rows)

    @pytest.mark.parametrize("seed", range(6))
    def test_rank_on_larger_sparse_unit_matrices(self, seed):
        # the regime the cube boundaries live in: mostly empty, entries +-1
        rng = random.Random(3000 + seed)
        nrows, ncols = 60, 80
        rows = [[0] * ncols for _ in range(nrows)]
        for j in range(ncols):
            for i in rng.sample(range(nrows), rng.randint(2, 4)):
                rows[i][j] = rng.choice([1, -1])
        r, factors = rank_and_factors(sparse_from_dense(rows))
        assert r == fraction_rank(rows)

    @pytest.mark.parametrize("seed", range(4))
    def test_rank_with_planted_torsion(self, seed):
        # embed a diag(1, 2, 6) block inside sparse noise, then shuffle
        # unimodularly; the factors 2 and 6 must survive
        rng = random.Random(4000 + seed)
        size = 12
        rows = [[0] * size for _ in range(size)]
        rows[0][0], rows[1][1], rows[2][2] = 1, 2, 6
        base_rank = 3
        mixed = [row[:] for row in rows]
        for _ in range(40):
            a, b = rng.sample(range(size), 2)
            f = rng.randint(-1, 1)
            mixed[a] = [x + f * y for x, y in zip(mixed[a], mixed[b])]
            c, d = rng.sample(range(size), 2)
            for row in mixed:
                row[c] += f * row[d]
        r, factors = rank_and_factors(sparse_from_dense(mixed))
        assert r == base_rank
        assert factors == [2, 6]
