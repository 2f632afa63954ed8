"""Sparse truncated multivariate series with exact integer coefficients.

A series in r variables t_1..t_r is a dictionary mapping exponent tuples to
nonzero Python integers, together with a truncation order: every monomial of
total degree above ``trunc`` is discarded by all operations.

  ExpVec = tuple[int, ...]     entry i (0-based) is the exponent of t_{i+1}
  terms  = dict[ExpVec, int]   canonical form: no zero coefficients stored

All coefficients are arbitrary-precision integers, never floats; a single
rounding error would void every identity check built on top of this module.
Truncation is by total degree, which matches the homogeneous-layer grading in
which the factorization S - 1 = (t_1 + ... + t_r) * G lives.

Values are immutable after construction and all operations are pure, so
series may be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

ExpVec = tuple[int, ...]


class VariableCountMismatchError(ValueError):
    """Operands live in different ambient variable counts."""


class NonzeroConstantError(ValueError):
    """Division by t_1 + ... + t_r requires a vanishing constant term."""


class NotDivisibleError(ArithmeticError):
    """The dividend is not an exact multiple of t_1 + ... + t_r."""


class OutOfRangeError(LookupError):
    """Coefficient query beyond the truncation order (not a true zero)."""


@dataclass(frozen=True)
class TruncatedSeries:
    """Multivariate series truncated at a total degree.

    ``terms`` is canonicalized on construction: zero coefficients are
    dropped, keys are validated against ``nvars`` and ``trunc``.  Treat
    instances (including the ``terms`` dict) as immutable.
    """

    nvars: int
    trunc: int
    terms: dict[ExpVec, int]

    def __post_init__(self) -> None:
        if self.nvars < 1:
            raise ValueError(f"need at least one variable, got nvars={self.nvars}")
        if self.trunc < 0:
            raise ValueError(f"truncation order must be >= 0, got {self.trunc}")
        clean: dict[ExpVec, int] = {}
        for m, c in self.terms.items():
            m = tuple(m)
            if len(m) != self.nvars:
                raise VariableCountMismatchError(
                    f"exponent vector {m} has length {len(m)}, expected {self.nvars}"
                )
            if any(e < 0 for e in m):
                raise ValueError(f"negative exponent in {m}")
            if sum(m) > self.trunc:
                raise ValueError(
                    f"term {m} has total degree {sum(m)} above truncation {self.trunc}"
                )
            if c:
                clean[m] = c
        object.__setattr__(self, "terms", clean)

    def constant_term(self) -> int:
        return self.terms.get((0,) * self.nvars, 0)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return add(self, other)

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return sub(self, other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return mul(self, other)

    def __neg__(self) -> "TruncatedSeries":
        return negate(self)


@dataclass(frozen=True)
class UnivariateSeries:
    """Coefficient list in a single variable f; index n holds the f^n term."""

    coeffs: tuple[int, ...]
    trunc: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError(
                f"need trunc+1 = {self.trunc + 1} coefficients, got {len(self.coeffs)}"
            )

    def coefficient(self, n: int) -> int:
        if not 0 <= n <= self.trunc:
            raise OutOfRangeError(f"index {n} outside [0, {self.trunc}]")
        return self.coeffs[n]


def iter_exponents(nvars: int, total: int) -> Iterator[ExpVec]:
    """Yield every exponent vector of the given total degree, in ascending
    lexicographic order."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    if total < 0:
        return
    if nvars == 1:
        yield (total,)
        return
    for head in range(total + 1):
        for rest in iter_exponents(nvars - 1, total - head):
            yield (head,) + rest


def zero_series(nvars: int, trunc: int) -> TruncatedSeries:
    return TruncatedSeries(nvars, trunc, {})


def constant_series(nvars: int, trunc: int, value: int) -> TruncatedSeries:
    return TruncatedSeries(nvars, trunc, {(0,) * nvars: value})


def variable_series(nvars: int, trunc: int, k: int) -> TruncatedSeries:
    """The single variable t_k (k is 1-based)."""
    if not 1 <= k <= nvars:
        raise ValueError(f"variable index {k} outside 1..{nvars}")
    exps = [0] * nvars
    exps[k - 1] = 1
    return TruncatedSeries(nvars, trunc, {tuple(exps): 1})


def s1_series(nvars: int, trunc: int) -> TruncatedSeries:
    """The linear form t_1 + t_2 + ... + t_r."""
    terms: dict[ExpVec, int] = {}
    for k in range(nvars):
        exps = [0] * nvars
        exps[k] = 1
        terms[tuple(exps)] = 1
    return TruncatedSeries(nvars, trunc, terms)


def with_truncation(a: TruncatedSeries, trunc: int) -> TruncatedSeries:
    """Same terms under a different truncation order.

    Raising the order claims exactness at degrees that were never computed,
    so this is only meant for operands that genuinely carry no higher terms
    (e.g. polynomials).  Lowering the order drops the top layers.
    """
    if trunc >= a.trunc:
        return TruncatedSeries(a.nvars, trunc, dict(a.terms))
    kept = {m: c for m, c in a.terms.items() if sum(m) <= trunc}
    return TruncatedSeries(a.nvars, trunc, kept)


def _require_same_nvars(a: TruncatedSeries, b: TruncatedSeries) -> None:
    if a.nvars != b.nvars:
        raise VariableCountMismatchError(
            f"operands have {a.nvars} and {b.nvars} variables"
        )


def add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Coefficient-wise sum, truncated at min(a.trunc, b.trunc)."""
    _require_same_nvars(a, b)
    trunc = min(a.trunc, b.trunc)
    out: dict[ExpVec, int] = {m: c for m, c in a.terms.items() if sum(m) <= trunc}
    for m, c in b.terms.items():
        if sum(m) <= trunc:
            out[m] = out.get(m, 0) + c
    return TruncatedSeries(a.nvars, trunc, out)


def negate(a: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(a.nvars, a.trunc, {m: -c for m, c in a.terms.items()})


def sub(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return add(a, negate(b))


def scale(a: TruncatedSeries, value: int) -> TruncatedSeries:
    return TruncatedSeries(a.nvars, a.trunc, {m: value * c for m, c in a.terms.items()})


def _packed_layers(
    terms: Mapping[ExpVec, int], trunc: int, shift: int
) -> list[tuple[int, list[tuple[int, int]]]]:
    # Pack each exponent tuple into one int (shift bits per variable) and
    # bucket by total degree; layers above trunc can never contribute.
    layers: dict[int, list[tuple[int, int]]] = {}
    for m, c in terms.items():
        d = sum(m)
        if d > trunc:
            continue
        packed = 0
        for i, e in enumerate(m):
            packed |= e << (i * shift)
        layers.setdefault(d, []).append((packed, c))
    return sorted(layers.items())


def _mul_terms(
    aterms: Mapping[ExpVec, int],
    bterms: Mapping[ExpVec, int],
    nvars: int,
    trunc: int,
) -> dict[ExpVec, int]:
    """Convolution of two term dicts, discarding total degrees above trunc."""
    if not aterms or not bterms:
        return {}
    # Packed exponent sums never overflow a field: every kept component is
    # <= trunc < 2**shift, and pairs beyond trunc are filtered by layer.
    shift = max(1, trunc.bit_length())
    la = _packed_layers(aterms, trunc, shift)
    lb = _packed_layers(bterms, trunc, shift)
    if len(la) > len(lb):
        la, lb = lb, la
    out: dict[int, int] = {}
    get = out.get
    for da, items_a in la:
        dmax = trunc - da
        for db, items_b in lb:
            if db > dmax:
                break
            for pa, ca in items_a:
                for pb, cb in items_b:
                    key = pa + pb
                    v = get(key)
                    out[key] = ca * cb if v is None else v + ca * cb
    mask = (1 << shift) - 1
    result: dict[ExpVec, int] = {}
    for packed, c in out.items():
        if c:
            result[tuple((packed >> (i * shift)) & mask for i in range(nvars))] = c
    return result


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Product, truncated at min(a.trunc, b.trunc)."""
    _require_same_nvars(a, b)
    trunc = min(a.trunc, b.trunc)
    return TruncatedSeries(a.nvars, trunc, _mul_terms(a.terms, b.terms, a.nvars, trunc))


def times_variable(a: TruncatedSeries, k: int) -> TruncatedSeries:
    """Multiply by the single variable t_k (k is 1-based), same truncation."""
    if not 1 <= k <= a.nvars:
        raise ValueError(f"variable index {k} outside 1..{a.nvars}")
    i = k - 1
    out: dict[ExpVec, int] = {}
    for m, c in a.terms.items():
        if sum(m) + 1 <= a.trunc:
            out[m[:i] + (m[i] + 1,) + m[i + 1 :]] = c
    return TruncatedSeries(a.nvars, a.trunc, out)


def coeff(a: TruncatedSeries, m: Sequence[int]) -> int:
    """Stored coefficient of the monomial with exponents m, or 0.

    Queries beyond the truncation order raise OutOfRangeError: the series
    holds no information there, which is different from a true zero.
    """
    m = tuple(m)
    if len(m) != a.nvars:
        raise VariableCountMismatchError(
            f"exponent vector {m} has length {len(m)}, expected {a.nvars}"
        )
    if any(e < 0 for e in m):
        raise ValueError(f"negative exponent in {m}")
    if sum(m) > a.trunc:
        raise OutOfRangeError(
            f"degree {sum(m)} beyond truncation {a.trunc}; coefficient unknown"
        )
    return a.terms.get(m, 0)


def divide_exact_by_s1(a: TruncatedSeries) -> TruncatedSeries:
    """Exact quotient a / (t_1 + ... + t_r), truncated one order lower.

    The quotient layer of degree d is solved from the dividend layer of
    degree d+1 by the triangular recurrence

        Q[m] = A[m + e_1] - sum_{k >= 2} Q[m + e_1 - e_k]

    visiting each layer's monomials in decreasing order of the first
    exponent, so every Q on the right is already known.  The result is then
    re-multiplied against t_1 + ... + t_r and compared with the dividend on
    every degree; a mismatch means the dividend was not an exact multiple.
    """
    r = a.nvars
    if a.constant_term() != 0:
        raise NonzeroConstantError(
            f"dividend has constant term {a.constant_term()}, expected 0"
        )
    if a.trunc < 1:
        raise ValueError("dividend truncated at degree 0 leaves no quotient layers")
    q: dict[ExpVec, int] = {}
    for d in range(a.trunc):
        for m in sorted(iter_exponents(r, d), key=lambda e: -e[0]):
            p = (m[0] + 1,) + m[1:]
            val = a.terms.get(p, 0)
            for k in range(1, r):
                if m[k]:
                    val -= q.get(p[:k] + (p[k] - 1,) + p[k + 1 :], 0)
            if val:
                q[m] = val
    check = _mul_terms(s1_series(r, a.trunc).terms, q, r, a.trunc)
    if check != a.terms:
        bad = sorted(
            (m for m in set(check) | set(a.terms) if check.get(m, 0) != a.terms.get(m, 0)),
            key=lambda e: (sum(e), e),
        )[0]
        raise NotDivisibleError(
            f"dividend is not a multiple of t_1+...+t_{r}: first mismatch at {bad} "
            f"(product has {check.get(bad, 0)}, dividend has {a.terms.get(bad, 0)})"
        )
    return TruncatedSeries(r, a.trunc - 1, q)


def substitute_signed(a: TruncatedSeries, weights: Sequence[int]) -> UnivariateSeries:
    """Substitute t_k -> w_k * f and collect powers of f.

    The f^n coefficient is the weighted sum of the degree-n layer:
    sum over |m| = n of a[m] * prod_k w_k^{m_k}.
    """
    weights = tuple(weights)
    if len(weights) != a.nvars:
        raise VariableCountMismatchError(
            f"got {len(weights)} weights for {a.nvars} variables"
        )
    coeffs = [0] * (a.trunc + 1)
    for m, c in a.terms.items():
        v = c
        for w, e in zip(weights, m):
            if e:
                v *= w**e
        coeffs[sum(m)] += v
    return UnivariateSeries(tuple(coeffs), a.trunc)


def series_to_dict(a: TruncatedSeries) -> dict:
    """JSON-ready form; coefficients as decimal strings (they outgrow 64-bit
    integers quickly), terms sorted by total degree then lexicographically."""
    items = sorted(a.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))
    return {
        "nvars": a.nvars,
        "trunc": a.trunc,
        "terms": [{"exps": list(m), "coeff": str(c)} for m, c in items],
    }


def series_from_dict(data: Mapping) -> TruncatedSeries:
    terms = {tuple(t["exps"]): int(t["coeff"]) for t in data["terms"]}
    return TruncatedSeries(int(data["nvars"]), int(data["trunc"]), terms)
