"""Exact integer and modular linear algebra.

Everything here works on plain Python integers.  Matrices are small (a few
dozen rows at most), so the Smith normal form is computed with elementary
row/column operations rather than anything clever.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Sequence

#: Default budget for :func:`enumerate_solutions_mod`.
DEFAULT_CAP = 10**7

#: Entries whose bit length exceeds this abort the SNF reduction.
DEFAULT_MAX_BITS = 256


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class BudgetExceeded(RuntimeError):
    """An enumeration would produce more items than allowed.

    The true number of items is kept in ``count``.
    """

    def __init__(self, count: int, cap: int):
        super().__init__(f"{count} solutions exceed the cap of {cap}")
        self.count = count
        self.cap = cap


class SnfOverflowError(OverflowError):
    """Entry growth during reduction passed the configured bit budget."""


def gcd(l: int, m: int) -> int:
    """Greatest common divisor of two positive integers."""
    if l < 1 or m < 1:
        raise DomainError(f"gcd needs positive integers, got ({l}, {m})")
    return math.gcd(l, m)


def smallest_prime_factor(n: int) -> int:
    if n < 2:
        raise DomainError(f"{n} has no prime factor")
    p = 2
    while p * p <= n:
        if n % p == 0:
            return p
        p += 1
    return n


def is_prime(n: int) -> bool:
    return n >= 2 and smallest_prime_factor(n) == n


def least_common_prime_divisor(l: int, m: int) -> int:
    """Return 1 when ``l`` and ``m`` are coprime, else their least common prime.

    >>> least_common_prime_divisor(15, 10)
    5
    """
    g = gcd(l, m)
    return 1 if g == 1 else smallest_prime_factor(g)


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise DomainError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise DomainError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def delete(self, row: int, col: int) -> "IntegerMatrix":
        """The minor matrix with one row and one column removed."""
        rows = [r[:col] + r[col + 1:] for i, r in enumerate(self.to_rows()) if i != row]
        return IntegerMatrix.from_rows(rows, self.cols - 1)


def matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> list[list[int]]:
    if not a:
        return []
    inner = len(b)
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(inner)) for j in range(cols)]
            for i in range(len(a))]


def det(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if n == 0:
        return 1
    a = [list(r) for r in rows]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfDecomposition:
    """``u @ m @ v`` is diagonal with diagonal ``d``; ``u`` and ``v`` unimodular."""

    d: tuple[int, ...]
    u: tuple[tuple[int, ...], ...]
    v: tuple[tuple[int, ...], ...]
    rank: int


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(m: IntegerMatrix, max_bits: int = DEFAULT_MAX_BITS) -> SnfDecomposition:
    """Smith normal form with transforms.

    Pivots on the smallest nonzero absolute value of the remaining block.
    Python integers never wrap, but entry growth is still policed: if any
    entry of the working matrices needs more than ``max_bits`` bits,
    :class:`SnfOverflowError` is raised instead of continuing.
    """
    rows, cols = m.rows, m.cols
    a = m.to_rows()
    u = _identity(rows)
    v = _identity(cols)
    limit = 1 << max_bits

    def check(vec):
        for x in vec:
            if x >= limit or -x >= limit:
                raise SnfOverflowError(f"entry exceeded {max_bits} bits during reduction")

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        a[dst] = [x - q * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x - q * y for x, y in zip(u[dst], u[src])]
        check(a[dst])
        check(u[dst])

    def add_col(dst, src, q):
        for row in a:
            row[dst] -= q * row[src]
        for row in v:
            row[dst] -= q * row[src]
        check(row[dst] for row in a)
        check(row[dst] for row in v)

    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows)
                   for j in range(t, cols) if a[i][j] != 0]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        swap_rows(t, pi)
        swap_cols(t, pj)
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, a[i][t] // p)
                    dirty = dirty or a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, a[t][j] // p)
                    dirty = dirty or a[t][j] != 0
            if not dirty:
                # column and row cleared; enforce divisibility on the rest
                bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                add_row(t, bad[0], -1)
                continue
            # a remainder is smaller than the pivot: move it into place
            cand = [(abs(a[i][t]), i, t) for i in range(t + 1, rows) if a[i][t]]
            cand += [(abs(a[t][j]), t, j) for j in range(t + 1, cols) if a[t][j]]
            _, ci, cj = min(cand)
            swap_rows(t, ci)
            swap_cols(t, cj)
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]
        t += 1

    diag = tuple(a[i][i] for i in range(min(rows, cols)))
    rank = sum(1 for x in diag if x)
    return SnfDecomposition(diag, tuple(map(tuple, u)), tuple(map(tuple, v)), rank)


def _check_modulus(r):
    if r < 2:
        raise DomainError(f"modulus must be at least 2, got {r}")


def count_solutions_mod(m: IntegerMatrix, r: int) -> int:
    """Number of ``x`` in ``(Z_r)^cols`` with ``m @ x == 0 (mod r)``."""
    _check_modulus(r)
    snf = smith_normal_form(m)
    count = r ** (m.cols - snf.rank)
    for d in snf.d[:snf.rank]:
        count *= math.gcd(d, r)
    return count


def enumerate_solutions_mod(m: IntegerMatrix, r: int,
                            cap: int = DEFAULT_CAP) -> Iterator[tuple[int, ...]]:
    """Yield every solution of ``m @ x == 0 (mod r)`` exactly once.

    Solutions are parameterised through the Smith form: with ``u m v = D``
    and ``x = v y``, coordinate ``y_i`` ranges over multiples of
    ``r / gcd(d_i, r)`` for pivot columns and over all of ``Z_r`` otherwise.
    The stream walks those parameters in lexicographic order.

    Raises
    ------
    BudgetExceeded
        Before yielding anything, if the solution count is above ``cap``.
    """
    _check_modulus(r)
    snf = smith_normal_form(m)
    steps, sizes = [], []
    for i in range(m.cols):
        if i < snf.rank:
            g = math.gcd(snf.d[i], r)
            steps.append(r // g)
            sizes.append(g)
        else:
            steps.append(1)
            sizes.append(r)
    total = math.prod(sizes)
    if total > cap:
        raise BudgetExceeded(total, cap)
    return _walk(snf.v, steps, sizes, r)


def _walk(v, steps, sizes, r):
    n = len(sizes)
    for params in itertools.product(*(range(s) for s in sizes)):
        y = [p * s for p, s in zip(params, steps)]
        yield tuple(sum(v[i][j] * y[j] for j in range(n)) % r for i in range(n))
