"""The hyper-Catalan series, computed two independent ways.

S[t_1..t_r] is the unique formal series with constant term 1 satisfying

    S = 1 + t_1 S^2 + t_2 S^3 + ... + t_r S^{r+1}.

Its coefficients C[m_1..m_r] are the hyper-Catalan numbers; the r = 1 column
is the Catalan numbers and a single t_k gives a Fuss-Catalan family.

``solve_S`` obtains S by fixed-point iteration of the defining equation and
serves as the ground-truth oracle for the whole package; ``hyper_catalan``
is the independent closed form.  Agreement of the two is itself one of the
verification suites.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

from .mpoly import (
    ExpVec,
    TruncatedSeries,
    add,
    constant_series,
    mul,
    sub,
    times_variable,
)


@dataclass(frozen=True)
class HyperCatalanQuery:
    """A coefficient index m with its two derived gradings."""

    m: ExpVec

    def __post_init__(self) -> None:
        m = tuple(self.m)
        if any(e < 0 for e in m):
            raise ValueError(f"negative exponent in {m}")
        object.__setattr__(self, "m", m)

    @property
    def weighted_degree(self) -> int:
        """Sum of (k+1) * m_k; the subdivision-size grading."""
        return sum((i + 2) * e for i, e in enumerate(self.m))

    @property
    def length(self) -> int:
        """Sum of m_k; the homogeneous-layer grading."""
        return sum(self.m)


@lru_cache(maxsize=None)
def solve_S(r: int, max_degree: int) -> TruncatedSeries:
    """Series solution of S = 1 + sum_k t_k S^{k+1}, exact through max_degree.

    Iterates alpha <- 1 + sum_k t_k alpha^{k+1} from alpha = 1.  Each pass
    fixes one more total degree (the right side only reads degree d terms to
    produce degree d+1), so max_degree + 1 passes are run; no convergence
    test is needed.  Results are cached and must be treated as immutable.
    """
    if r < 1:
        raise ValueError(f"need at least one variable, got r={r}")
    if max_degree < 0:
        raise ValueError(f"max_degree must be >= 0, got {max_degree}")
    one = constant_series(r, max_degree, 1)
    alpha = one
    for _ in range(max_degree + 1):
        total = one
        power = alpha
        for k in range(1, r + 1):
            power = mul(power, alpha)
            total = add(total, times_variable(power, k))
        alpha = total
    return alpha


def functional_residual(s: TruncatedSeries) -> TruncatedSeries:
    """1 - S + sum_k t_k S^{k+1}; the zero series iff S solves the equation
    through its truncation order."""
    r = s.nvars
    residual = sub(constant_series(r, s.trunc, 1), s)
    power = s
    for k in range(1, r + 1):
        power = mul(power, s)
        residual = add(residual, times_variable(power, k))
    return residual


def hyper_catalan(m: Sequence[int]) -> int:
    """Closed form for the coefficient C[m] of S.

    With w = sum (k+1) m_k and l = sum m_k this is w! / ((1+w-l)! * prod m_k!),
    i.e. the Lagrange-inversion multinomial with the leading 1/(1+w) factor
    absorbed.  Always an exact integer division.
    """
    q = HyperCatalanQuery(tuple(m))
    w, length = q.weighted_degree, q.length
    den = factorial(1 + w - length)
    for e in q.m:
        den *= factorial(e)
    value, rem = divmod(factorial(w), den)
    if rem:
        raise ArithmeticError(f"closed form for {q.m} did not divide exactly")
    return value
