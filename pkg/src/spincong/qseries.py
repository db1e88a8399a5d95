"""Truncated formal power series in q with exact integer coefficients.

A :class:`TruncSeries` of order ``N`` stores the coefficients of
``q^0 .. q^N``; nothing past ``q^N`` is ever represented.  Every binary
operation requires both operands to share the same order.

Multiplication dispatches between a sparse schoolbook loop, the compiled
machine-integer kernel (when coefficient bounds provably fit in 63 bits)
and Kronecker substitution on Python integers.  All three paths are exact,
so results are bit-identical to :func:`schoolbook_mul`.
"""

from __future__ import annotations

import json
from math import isqrt
from typing import Iterable, Sequence

from . import kernels
from .errors import InvalidInverse, OrderMismatch

__all__ = [
    "TruncSeries",
    "zero_series",
    "one_series",
    "monomial",
    "series_add",
    "series_sub",
    "series_neg",
    "series_scale",
    "series_mul",
    "series_pow",
    "series_invert",
    "exact_divide",
    "pochhammer",
    "substitute_power",
    "alternate",
    "reduce_mod",
    "schoolbook_mul",
]

try:
    from gmpy2 import mpz as _bigint
except ImportError:  # plain ints are exact too, only slower on huge operands
    _bigint = int

# sparse products are used while (terms_a * terms_b) <= _SPARSE_WORK * (len_a + len_b)
_SPARSE_WORK = 32


class TruncSeries:
    """Immutable power series truncated after ``q^order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[int], order: int):
        coeffs = tuple(coeffs)
        if order < 0:
            raise ValueError(f"order must be nonnegative, got {order}")
        if len(coeffs) != order + 1:
            raise ValueError(
                f"series of order {order} needs {order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "order", order)

    def __setattr__(self, name, value):
        raise AttributeError("TruncSeries is immutable")

    @classmethod
    def from_list(cls, coeffs: Sequence[int], order: int) -> "TruncSeries":
        """Build a series from a possibly short coefficient list, zero padded."""
        coeffs = list(coeffs[: order + 1])
        coeffs.extend([0] * (order + 1 - len(coeffs)))
        return cls(coeffs, order)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"TruncSeries([{head}{tail}], order={self.order})"

    def __add__(self, other):
        if isinstance(other, TruncSeries):
            return series_add(self, other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, TruncSeries):
            return series_sub(self, other)
        return NotImplemented

    def __neg__(self):
        return series_neg(self)

    def __mul__(self, other):
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        if isinstance(other, int):
            return series_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return series_pow(self, e)

    def nonzero_terms(self) -> int:
        return sum(1 for c in self.coeffs if c)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_dict(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_dict(cls, data: dict) -> "TruncSeries":
        return cls((int(c) for c in data["coeffs"]), int(data["order"]))

    @classmethod
    def from_json(cls, text: str) -> "TruncSeries":
        return cls.from_dict(json.loads(text))


def zero_series(order: int) -> TruncSeries:
    return TruncSeries([0] * (order + 1), order)


def one_series(order: int) -> TruncSeries:
    return monomial(1, 0, order)


def monomial(coeff: int, exponent: int, order: int) -> TruncSeries:
    """``coeff * q^exponent``, or zero when the exponent exceeds the order."""
    coeffs = [0] * (order + 1)
    if exponent <= order:
        coeffs[exponent] = coeff
    return TruncSeries(coeffs, order)


def _check_orders(a: TruncSeries, b: TruncSeries) -> None:
    if a.order != b.order:
        raise OrderMismatch(f"order mismatch: {a.order} != {b.order}")


def series_add(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    return TruncSeries([x + y for x, y in zip(a.coeffs, b.coeffs)], a.order)


def series_sub(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    return TruncSeries([x - y for x, y in zip(a.coeffs, b.coeffs)], a.order)


def series_neg(a: TruncSeries) -> TruncSeries:
    return TruncSeries([-x for x in a.coeffs], a.order)


def series_scale(a: TruncSeries, c: int) -> TruncSeries:
    return TruncSeries([c * x for x in a.coeffs], a.order)


def exact_divide(a: TruncSeries, d: int) -> TruncSeries:
    """Divide every coefficient by ``d``; raise ArithmeticError if any is not divisible."""
    out = []
    for i, x in enumerate(a.coeffs):
        qt, rem = divmod(x, d)
        if rem:
            raise ArithmeticError(f"coefficient {i} ({x}) is not divisible by {d}")
        out.append(qt)
    return TruncSeries(out, a.order)


# --- list-level multiplication ---------------------------------------------


def _trim(a: list, n: int) -> list:
    a = a[:n]
    while a and not a[-1]:
        a.pop()
    return a


def _sparse_mul(a_terms: list, b_terms: list, n_out: int) -> list:
    out = [0] * n_out
    for i, x in a_terms:
        if i >= n_out:
            break
        for j, y in b_terms:
            if i + j >= n_out:
                break
            out[i + j] += x * y
    return out


def _pack(a: list, nbytes: int) -> int:
    pos = b"".join((x if x > 0 else 0).to_bytes(nbytes, "little") for x in a)
    neg = b"".join((-x if x < 0 else 0).to_bytes(nbytes, "little") for x in a)
    return int.from_bytes(pos, "little") - int.from_bytes(neg, "little")


def _kronecker_mul(a: list, b: list, n_out: int, bound: int) -> list:
    # each product coefficient c satisfies |c| <= bound < 2^(bits-1)
    bits = bound.bit_length() + 2
    nbytes = (bits + 7) // 8
    width = 8 * nbytes
    big_a = _pack(a, nbytes)
    big_b = big_a if b is a else _pack(b, nbytes)
    c = int(_bigint(big_a) * _bigint(big_b))
    half = b"\x00" * (nbytes - 1) + b"\x80"
    offset = int.from_bytes(half * n_out, "little")
    d = (c + offset) & ((1 << (width * n_out)) - 1)
    raw = d.to_bytes(nbytes * n_out, "little")
    shift = 1 << (width - 1)
    from_bytes = int.from_bytes
    return [from_bytes(raw[k : k + nbytes], "little") - shift for k in range(0, len(raw), nbytes)]


def _mul_lists(a: list, b: list, n_out: int) -> list:
    """Truncated product of coefficient lists; result has length ``n_out``."""
    square = a is b
    a = _trim(list(a), n_out)
    b = a if square else _trim(list(b), n_out)
    if not a or not b or n_out <= 0:
        return [0] * max(n_out, 0)
    full = min(n_out, len(a) + len(b) - 1)
    nz_a = len(a) - a.count(0)
    nz_b = len(b) - b.count(0)
    if nz_a * nz_b <= _SPARSE_WORK * (len(a) + len(b)):
        a_terms = [(i, x) for i, x in enumerate(a) if x]
        b_terms = a_terms if square else [(i, x) for i, x in enumerate(b) if x]
        out = _sparse_mul(a_terms, b_terms, full)
    else:
        max_a = max(abs(x) for x in a)
        max_b = max(abs(x) for x in b)
        bound = max_a * max_b * min(len(a), len(b))
        if bound < kernels.I64_SAFE:
            out = kernels.mul_trunc_i64(a, b, full)
        else:
            out = _kronecker_mul(a, b, full, bound)
    out.extend([0] * (n_out - len(out)))
    return out


def schoolbook_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    """Reference O(N^2) Cauchy product; the contract baseline for :func:`series_mul`."""
    _check_orders(a, b)
    n = a.order + 1
    out = [0] * n
    ac, bc = a.coeffs, b.coeffs
    for i in range(n):
        x = ac[i]
        if x:
            for j in range(n - i):
                out[i + j] += x * bc[j]
    return TruncSeries(out, a.order)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    _check_orders(a, b)
    n = a.order + 1
    return TruncSeries(_mul_lists(list(a.coeffs), list(b.coeffs), n), a.order)


def series_invert(a: TruncSeries) -> TruncSeries:
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise InvalidInverse(f"constant term {a0} is not invertible over the integers")
    n = a.order + 1
    coeffs = list(a.coeffs)
    support = [(i, x) for i, x in enumerate(coeffs) if x and i]
    if len(support) <= 2 * isqrt(n) + 8:
        return TruncSeries(_invert_sparse(support, a0, n), a.order)
    return TruncSeries(_invert_newton(coeffs, a0, n), a.order)


def _invert_sparse(support: list, a0: int, n: int) -> list:
    out = [0] * n
    out[0] = a0
    for m in range(1, n):
        acc = 0
        for i, x in support:
            if i > m:
                break
            acc += x * out[m - i]
        out[m] = -a0 * acc
    return out


def _invert_newton(a: list, a0: int, n: int) -> list:
    inv = [a0]
    k = 1
    while k < n:
        k2 = min(2 * k, n)
        err = _mul_lists(a[:k2], inv, k2)
        err = [-x for x in err]
        err[0] += 2
        inv = _mul_lists(inv, err, k2)
        k = k2
    return inv


def series_pow(a: TruncSeries, e: int) -> TruncSeries:
    """``a**e`` by binary powering; negative ``e`` inverts first."""
    if e < 0:
        a = series_invert(a)
        e = -e
    n = a.order + 1
    result = [1] + [0] * (n - 1)
    base = list(a.coeffs)
    while e:
        if e & 1:
            result = _mul_lists(result, base, n)
        e >>= 1
        if e:
            base = _mul_lists(base, base, n)
    return TruncSeries(result, a.order)


def _as_dense(node) -> list:
    if isinstance(node, dict):
        out = [0] * (max(node) + 1)
        for k, c in node.items():
            out[k] = c
        return out
    return node


def _binomial_product(exponents: list, sign: int, n: int):
    """Product of ``(1 - sign*q^e)`` over ``exponents`` (all < n), truncated to length n.

    Returns a ``{exponent: coeff}`` dict while the partial product is sparse
    and a dense list once it fills in.
    """
    if len(exponents) <= 8:
        terms = {0: 1}
        for e in exponents:
            grown = dict(terms)
            for k, c in terms.items():
                if k + e < n:
                    grown[k + e] = grown.get(k + e, 0) - sign * c
            terms = grown
        return terms
    mid = len(exponents) // 2
    left = _binomial_product(exponents[:mid], sign, n)
    right = _binomial_product(exponents[mid:], sign, n)
    if isinstance(left, dict) and isinstance(right, dict) and len(left) * len(right) <= 2 * n:
        terms: dict = {}
        for i, x in left.items():
            for j, y in right.items():
                if i + j < n:
                    terms[i + j] = terms.get(i + j, 0) + x * y
        terms = {k: c for k, c in terms.items() if c}
        if len(terms) * 8 <= n:
            return terms
        return _as_dense(terms)
    left, right = _as_dense(left), _as_dense(right)
    size = min(n, len(left) + len(right) - 1)
    return _mul_lists(left, right, size)


def pochhammer(sign: int, offset: int, step: int, order: int) -> TruncSeries:
    """Truncation of the product of ``(1 - sign*q^(offset + k*step))`` over ``k >= 0``.

    ``sign=+1`` gives ``(q^offset; q^step)_inf`` and ``sign=-1`` gives
    ``(-q^offset; q^step)_inf``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if offset < 1 or step < 1:
        raise ValueError("offset and step must be positive")
    exponents = list(range(offset, order + 1, step))
    out = _as_dense(_binomial_product(exponents, sign, order + 1))
    return TruncSeries.from_list(out, order)


def substitute_power(a: TruncSeries, k: int) -> TruncSeries:
    """Replace ``q`` by ``q^k``."""
    if k < 1:
        raise ValueError("k must be positive")
    out = [0] * (a.order + 1)
    for i in range(a.order // k + 1):
        out[i * k] = a.coeffs[i]
    return TruncSeries(out, a.order)


def alternate(a: TruncSeries) -> TruncSeries:
    """Replace ``q`` by ``-q``."""
    return TruncSeries([-x if i & 1 else x for i, x in enumerate(a.coeffs)], a.order)


def reduce_mod(a: TruncSeries, m: int) -> TruncSeries:
    if m < 2:
        raise ValueError("modulus must be at least 2")
    return TruncSeries([x % m for x in a.coeffs], a.order)
