"""Alternating partition sums over bounded-part partitions.

A partition with parts bounded by 2a is encoded by its multiplicity vector
(m_1, ..., m_2a): size |lambda| = sum k*m_k, length l(lambda) = sum m_k.
The sums here run over all partitions of fixed length and bounded part and
evaluate to strikingly simple values:

  * partition_sum_main(n, a)  -> a^(n-1)
  * claim1_sum(n, a, x)       -> 0           (any integer x)
  * claim2_sum(n, a, x)       -> a^(n-1)     (any integer x)
  * claim2_ct(n, a, x)        -> the same value via constant-term extraction
                                 from a Laurent polynomial, an independent
                                 route that never enumerates partitions

Both claim sums are polynomials of degree <= n-1 in x, so checking n or more
distinct integer points certifies the polynomial identity itself; the x
arguments are plain integers, never symbols.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterator, Mapping, Sequence

from .mpoly import iter_exponents


@dataclass(frozen=True)
class MultVector:
    """Part-multiplicity encoding of a partition; mult[i] counts part i+1."""

    mult: tuple[int, ...]

    def __post_init__(self) -> None:
        mult = tuple(self.mult)
        if any(e < 0 for e in mult):
            raise ValueError(f"negative multiplicity in {mult}")
        object.__setattr__(self, "mult", mult)

    @property
    def size(self) -> int:
        """|lambda| = sum of all parts."""
        return sum((i + 1) * e for i, e in enumerate(self.mult))

    @property
    def length(self) -> int:
        """l(lambda) = number of parts."""
        return sum(self.mult)


def enumerate_mult_vectors(length: int, max_part: int) -> Iterator[MultVector]:
    """Every multiplicity vector with the given number of parts, each part at
    most max_part, in ascending lexicographic order of the vector."""
    if length < 0:
        raise ValueError(f"length must be >= 0, got {length}")
    if max_part < 1:
        raise ValueError(f"max_part must be >= 1, got {max_part}")
    for exps in iter_exponents(max_part, length):
        yield MultVector(exps)


def multinomial(n: int, mult: Sequence[int]) -> int:
    """n! / prod m_k!, requiring sum m_k = n."""
    if sum(mult) != n:
        raise ValueError(f"multiplicities {tuple(mult)} do not sum to {n}")
    value = factorial(n)
    for e in mult:
        value //= factorial(e)
    return value


def binom_general(y: int, k: int) -> int:
    """Binomial C(y, k) for any integer y (possibly negative), via the
    falling factorial y(y-1)...(y-k+1) / k!."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    num = 1
    for j in range(k):
        num *= y - j
    value, rem = divmod(num, factorial(k))
    if rem:
        raise ArithmeticError(f"falling factorial of {y} over {k}! did not divide")
    return value


def _sign(e: int) -> int:
    return -1 if e % 2 else 1


def partition_sum_main(n: int, a: int) -> int:
    """Alternating sum over partitions of length n with parts <= 2a of

        (-1)^(1+|l|) (n - m_2a) multinomial(n; m) C(|l|+n+1, |l|+1) / (|l|+n+1)

    evaluated in exact rationals; the result always clears to the integer
    a^(n-1) and integrality is asserted.
    """
    if n < 1 or a < 1:
        raise ValueError("n and a must be positive")
    total = Fraction(0)
    for lam in enumerate_mult_vectors(n, 2 * a):
        size = lam.size
        term = (
            _sign(1 + size)
            * (n - lam.mult[-1])
            * multinomial(n, lam.mult)
            * Fraction(comb(size + n + 1, size + 1), size + n + 1)
        )
        total += term
    if total.denominator != 1:
        raise ArithmeticError(f"sum for n={n}, a={a} is not an integer: {total}")
    return int(total)


def claim1_sum(n: int, a: int, x: int) -> int:
    """Sum over partitions of length n, parts <= 2a, of
    (-1)^|l| multinomial(n; m) C(|l|+n+x, n-1); identically zero."""
    if n < 1 or a < 1:
        raise ValueError("n and a must be positive")
    return sum(
        _sign(lam.size) * multinomial(n, lam.mult) * binom_general(lam.size + n + x, n - 1)
        for lam in enumerate_mult_vectors(n, 2 * a)
    )


def claim2_sum(n: int, a: int, x: int) -> int:
    """Sum over partitions of length n-1, parts <= 2a, of
    (-1)^|l| multinomial(n-1; m) C(|l|+n+x, n-1); identically a^(n-1)."""
    if n < 1 or a < 1:
        raise ValueError("n and a must be positive")
    return sum(
        _sign(lam.size)
        * multinomial(n - 1, lam.mult)
        * binom_general(lam.size + n + x, n - 1)
        for lam in enumerate_mult_vectors(n - 1, 2 * a)
    )


@dataclass(frozen=True)
class LaurentPoly:
    """Finite integer Laurent polynomial in z, keyed by (possibly negative)
    exponent; canonical form drops zero coefficients."""

    coeffs: dict[int, int]

    def __post_init__(self) -> None:
        clean = {int(e): c for e, c in self.coeffs.items() if c}
        object.__setattr__(self, "coeffs", clean)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are not defined here")
        result = LaurentPoly({0: 1})
        for _ in range(n):
            result = result * self
        return result

    def shifted(self, k: int) -> "LaurentPoly":
        """Multiply by z^k (k may be negative)."""
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def coefficient(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def constant_term(self) -> int:
        return self.coeffs.get(0, 0)


def one_plus_z_power(e: int) -> LaurentPoly:
    """(1 + z)^e for e >= 0."""
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return LaurentPoly({j: comb(e, j) for j in range(e + 1)})


def claim2_ct(n: int, a: int, x: int) -> int:
    """claim2_sum via constant-term extraction: the constant term of

        (1+z)^(n+x) * (-(1+z) + (1+z)^2 - ... + (1+z)^(2a))^(n-1) / z^(n-1)

    i.e. the z^(n-1) coefficient of the numerator polynomial.  Needs x >= 0
    so that every factor stays polynomial.
    """
    if n < 1 or a < 1:
        raise ValueError("n and a must be positive")
    if x < 0:
        raise ValueError(f"constant-term route needs x >= 0, got {x}")
    bracket = LaurentPoly({})
    for k in range(1, 2 * a + 1):
        term = one_plus_z_power(k)
        if k % 2:
            term = LaurentPoly({e: -c for e, c in term.coeffs.items()})
        bracket = bracket + term
    laurent = (one_plus_z_power(n + x) * bracket ** (n - 1)).shifted(-(n - 1))
    return laurent.constant_term()
