"""Polynomial arithmetic over prime fields GF(p).

Polynomials are stored as tuples of coefficients lowest degree first, with
trailing zeros trimmed; the zero polynomial is the empty tuple. The text form
(``x^2+3x+6``) prints highest degree first to match the usual notation.

Everything here is desk scale (p <= 47, degree <= 6): irreducibility is
tested by trial division, primitivity by the multiplicative order of x using
the prime factorization of p^r - 1.
"""
from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass


@functools.lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Trial-division primality test."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    """Return p, raising ValueError when p is not a prime number."""
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    return p


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorization of n >= 1 as (prime, exponent) pairs, ascending."""
    if n < 1:
        raise ValueError(f"cannot factorize {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


@dataclass(frozen=True)
class FpPoly:
    """A polynomial over GF(p); coeffs lowest degree first, canonical form."""

    p: int
    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        check_prime(self.p)
        c = tuple(int(a) % self.p for a in self.coeffs)
        while c and c[-1] == 0:
            c = c[:-1]
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, p: int) -> FpPoly:
        return cls(p, ())

    @classmethod
    def one(cls, p: int) -> FpPoly:
        return cls(p, (1,))

    @classmethod
    def x(cls, p: int) -> FpPoly:
        return cls(p, (0, 1))

    @classmethod
    def monic(cls, p: int, below: tuple[int, ...] | list[int]) -> FpPoly:
        """Monic polynomial of degree len(below); below = coefficients under
        the leading term, lowest degree first."""
        return cls(p, tuple(below) + (1,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def coeff(self, k: int) -> int:
        """Coefficient of x^k."""
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def evaluate(self, x: int) -> int:
        """Horner evaluation at the field element x."""
        acc = 0
        for a in reversed(self.coeffs):
            acc = (acc * x + a) % self.p
        return acc

    def _require_same_p(self, other: FpPoly) -> None:
        if not isinstance(other, FpPoly):
            raise TypeError(f"expected FpPoly, got {type(other).__name__}")
        if other.p != self.p:
            raise ValueError(f"mismatched fields GF({self.p}) and GF({other.p})")

    def __add__(self, other: FpPoly) -> FpPoly:
        self._require_same_p(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, tuple(self.coeff(k) + other.coeff(k) for k in range(n)))

    def __neg__(self) -> FpPoly:
        return FpPoly(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: FpPoly) -> FpPoly:
        self._require_same_p(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return FpPoly(self.p, tuple(self.coeff(k) - other.coeff(k) for k in range(n)))

    def __mul__(self, other: FpPoly) -> FpPoly:
        self._require_same_p(other)
        if self.is_zero or other.is_zero:
            return FpPoly.zero(self.p)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return FpPoly(self.p, tuple(out))

    def __divmod__(self, other: FpPoly) -> tuple[FpPoly, FpPoly]:
        self._require_same_p(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.p
        inv_lead = pow(other.coeffs[-1], p - 2, p)
        rem = list(self.coeffs)
        dq = len(self.coeffs) - len(other.coeffs)
        if dq < 0:
            return FpPoly.zero(p), self
        quo = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            c = (rem[k + other.degree] * inv_lead) % p
            quo[k] = c
            if c:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = (rem[k + j] - c * b) % p
        return FpPoly(p, tuple(quo)), FpPoly(p, tuple(rem[: other.degree]))

    def __mod__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[1]

    def __floordiv__(self, other: FpPoly) -> FpPoly:
        return divmod(self, other)[0]

    def __str__(self) -> str:
        return format_poly(self)


def poly_mul_mod(a: FpPoly, b: FpPoly, modulus: FpPoly) -> FpPoly:
    """(a * b) mod modulus; modulus must be monic with degree >= 1."""
    a._require_same_p(b)
    a._require_same_p(modulus)
    if modulus.degree < 1:
        raise ValueError("modulus must have degree >= 1")
    if not modulus.is_monic:
        raise ValueError("modulus must be monic")
    return (a * b) % modulus


def poly_pow_mod(base: FpPoly, e: int, modulus: FpPoly) -> FpPoly:
    """base^e mod modulus by square-and-multiply, e >= 0."""
    if e < 0:
        raise ValueError("exponent must be >= 0")
    result = FpPoly.one(base.p)
    acc = base % modulus
    while e:
        if e & 1:
            result = poly_mul_mod(result, acc, modulus)
        acc = poly_mul_mod(acc, acc, modulus)
        e >>= 1
    return result


def _monic_polys(p: int, degree: int):
    for below in itertools.product(range(p), repeat=degree):
        yield FpPoly(p, tuple(reversed(below)) + (1,))


def is_irreducible(f: FpPoly) -> bool:
    """Trial division by every monic polynomial of degree <= deg(f)/2."""
    if not f.is_monic:
        raise ValueError("irreducibility test expects a monic polynomial")
    if f.degree < 1:
        raise ValueError("irreducibility test expects degree >= 1")
    for d in range(1, f.degree // 2 + 1):
        for g in _monic_polys(f.p, d):
            if (f % g).is_zero:
                return False
    return True


def x_order(f: FpPoly) -> int:
    """Multiplicative order of x modulo the irreducible polynomial f.

    Uses the divisor structure of p^r - 1: starts from the full group order
    and strips prime factors while x^(order/q) stays 1.
    """
    p, r = f.p, f.degree
    order = p**r - 1
    x = FpPoly.x(p)
    one = FpPoly.one(p)
    if poly_pow_mod(x, order, f) != one:
        raise ValueError(f"x is not invertible mod {f}")
    for q, _ in factorize(order):
        while order % q == 0 and poly_pow_mod(x, order // q, f) == one:
            order //= q
    return order


def satisfies_condition_g(f: FpPoly) -> bool:
    """True iff x generates the multiplicative group mod f, i.e. the order of
    x mod f is exactly p^r - 1.  Reducible f returns False (not an error)."""
    if not f.is_monic or f.degree < 1:
        raise ValueError("expected a monic polynomial of degree >= 1")
    if f.coeff(0) == 0:
        # x divides f: x is nilpotent or zero in the quotient, never a unit
        return False
    if not is_irreducible(f):
        return False
    return x_order(f) == f.p ** f.degree - 1


def find_condition_g_poly(p: int, r: int) -> FpPoly:
    """First monic degree-r polynomial over GF(p) whose x has full order,
    scanning coefficient tuples (a_1, ..., a_r) in lexicographic order."""
    check_prime(p)
    if r < 1:
        raise ValueError("degree must be >= 1")
    for high_first in itertools.product(range(p), repeat=r):
        f = FpPoly(p, tuple(reversed(high_first)) + (1,))
        if satisfies_condition_g(f):
            return f
    raise RuntimeError(f"no generator polynomial of degree {r} over GF({p})")


def ceil_log(base: int, m: int) -> int:
    """Smallest r >= 0 with base^r >= m, integer arithmetic only."""
    if base < 2:
        raise ValueError("base must be >= 2")
    if m < 1:
        raise ValueError("m must be >= 1")
    r, v = 0, 1
    while v < m:
        v *= base
        r += 1
    return r


def minimal_r(p: int, m: int) -> int:
    """Smallest r with p^r >= m for prime p (the digit-vector length)."""
    check_prime(p)
    return ceil_log(p, m)


_TERM = re.compile(r"(?P<coeff>\d+)?(?P<var>x(\^(?P<exp>\d+))?)?$")


def parse_poly(text: str, p: int) -> FpPoly:
    """Parse text like ``x^2+3x+6`` into an FpPoly over GF(p).

    Coefficients are decimal integers, ``-`` is allowed and normalized mod p.
    """
    check_prime(p)
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ValueError("empty polynomial text")
    chunks = re.findall(r"[+-]?[^+-]+", s)
    if "".join(chunks) != s:
        raise ValueError(f"cannot parse polynomial {text!r}")
    coeffs: dict[int, int] = {}
    for chunk in chunks:
        sign = 1
        body = chunk
        if body[0] in "+-":
            sign = -1 if body[0] == "-" else 1
            body = body[1:]
        m = _TERM.match(body)
        if not m or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"bad term {chunk!r} in polynomial {text!r}")
        coeff = int(m.group("coeff")) if m.group("coeff") else 1
        if m.group("var"):
            exp = int(m.group("exp")) if m.group("exp") else 1
        else:
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    size = max(coeffs) + 1
    return FpPoly(p, tuple(coeffs.get(k, 0) for k in range(size)))


def format_poly(f: FpPoly) -> str:
    """Text form, highest degree first, coefficients reduced into [0, p)."""
    if f.is_zero:
        return "0"
    parts = []
    for k in range(f.degree, -1, -1):
        c = f.coeff(k)
        if c == 0:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            var = "x" if k == 1 else f"x^{k}"
            parts.append(var if c == 1 else f"{c}{var}")
    return "+".join(parts)
