"""Dense vectors and matrices over GF(p).

Carries the companion matrix of a monic polynomial and the vector sequence
it drives: b(t) = 0 when t is a multiple of p^r, else A^((t mod p^r)-1) b.
All values are immutable and every operation is a pure function.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass

from .gf import FpPoly, check_prime, satisfies_condition_g


@dataclass(frozen=True)
class FpVec:
    """Column vector over GF(p), length >= 1."""

    p: int
    entries: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        if len(self.entries) < 1:
            raise ValueError("vector must have length >= 1")
        object.__setattr__(self, "entries", tuple(int(a) % self.p for a in self.entries))

    @property
    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class FpMatrix:
    """Square matrix over GF(p), row major."""

    p: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_prime(self.p)
        n = len(self.rows)
        if n < 1:
            raise ValueError("matrix must have size >= 1")
        rows = []
        for row in self.rows:
            if len(row) != n:
                raise ValueError("matrix must be square")
            rows.append(tuple(int(a) % self.p for a in row))
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def identity(cls, p: int, size: int) -> FpMatrix:
        return cls(p, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @property
    def size(self) -> int:
        return len(self.rows)


def mat_mul(a: FpMatrix, b: FpMatrix) -> FpMatrix:
    if a.p != b.p or a.size != b.size:
        raise ValueError("matrix shape or field mismatch")
    n, p = a.size, a.p
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            row.append(sum(a.rows[i][k] * b.rows[k][j] for k in range(n)) % p)
        rows.append(tuple(row))
    return FpMatrix(p, tuple(rows))


def mat_vec(a: FpMatrix, v: FpVec) -> FpVec:
    if a.p != v.p or a.size != len(v):
        raise ValueError("matrix/vector shape or field mismatch")
    return FpVec(a.p, tuple(
        sum(a.rows[i][k] * v.entries[k] for k in range(a.size)) % a.p
        for i in range(a.size)
    ))


def mat_pow(a: FpMatrix, e: int) -> FpMatrix:
    """a^e by square-and-multiply; a^0 is the identity."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    result = FpMatrix.identity(a.p, a.size)
    acc = a
    while e:
        if e & 1:
            result = mat_mul(result, acc)
        acc = mat_mul(acc, acc)
        e >>= 1
    return result


def is_nonsingular(m: FpMatrix) -> bool:
    """Gaussian elimination over GF(p); True iff det != 0."""
    p, n = m.p, m.size
    rows = [list(r) for r in m.rows]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return False
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = pow(rows[col][col], p - 2, p)
        for r in range(col + 1, n):
            factor = (rows[r][col] * inv) % p
            if factor:
                for c in range(col, n):
                    rows[r][c] = (rows[r][c] - factor * rows[col][c]) % p
    return True


def companion_matrix(f: FpPoly) -> FpMatrix:
    """Companion matrix of the monic polynomial f: ones on the sub-diagonal
    and the negated coefficients of f (lowest first) down the last column.
    For degree 1 this is the 1x1 matrix (-a_1)."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("companion matrix expects a monic polynomial of degree >= 1")
    p, r = f.p, f.degree
    rows = []
    for i in range(r):
        row = [0] * r
        if i > 0:
            row[i - 1] = 1
        row[r - 1] = (-f.coeff(i)) % p
        rows.append(tuple(row))
    return FpMatrix(p, tuple(rows))


@functools.lru_cache(maxsize=None)
def _generator_ok(f: FpPoly) -> bool:
    return satisfies_condition_g(f)


def _check_b_args(f: FpPoly, b: FpVec, check_generator: bool) -> None:
    if b.p != f.p:
        raise ValueError(f"vector over GF({b.p}) does not match GF({f.p})")
    if len(b) != f.degree:
        raise ValueError(f"vector length {len(b)} != polynomial degree {f.degree}")
    if b.is_zero:
        raise ValueError("b must be nonzero")
    if check_generator and not _generator_ok(f):
        raise ValueError(f"{f} does not generate the multiplicative group")


def b_sequence(f: FpPoly, b: FpVec, t: int, check_generator: bool = True) -> FpVec:
    """The vector b(t): zero when t = 0 mod p^r, else A^((t mod p^r)-1) b.

    Defined for every integer t; negative t is reduced into [0, p^r) first.
    check_generator=False skips the full-order requirement on f (useful for
    experiments with non-generator polynomials).
    """
    _check_b_args(f, b, check_generator)
    period = f.p**f.degree
    tm = t % period
    if tm == 0:
        return FpVec(f.p, (0,) * f.degree)
    return mat_vec(mat_pow(companion_matrix(f), tm - 1), b)


def b_period_table(f: FpPoly, b: FpVec, check_generator: bool = True) -> tuple[FpVec, ...]:
    """One full period (b(0), ..., b(p^r - 1)) computed incrementally, one
    matrix-vector product per step."""
    _check_b_args(f, b, check_generator)
    period = f.p**f.degree
    a = companion_matrix(f)
    out = [FpVec(f.p, (0,) * f.degree)]
    v = b
    for _ in range(period - 1):
        out.append(v)
        v = mat_vec(a, v)
    return tuple(out)


def parse_vec(text: str, p: int) -> FpVec:
    """Parse comma or semicolon separated integers into an FpVec over GF(p)."""
    parts = [s.strip() for s in text.replace(";", ",").split(",")]
    if not parts or any(not s for s in parts):
        raise ValueError(f"cannot parse vector {text!r}")
    try:
        entries = tuple(int(s) for s in parts)
    except ValueError:
        raise ValueError(f"cannot parse vector {text!r}") from None
    return FpVec(p, entries)


def format_vec(v: FpVec) -> str:
    return ",".join(str(a) for a in v.entries)
