"""Product-to-sum identities, checked coefficient by coefficient.

Only monomial specializations are supported: ``z = ±q^e`` in the triple
product and ``s = ±q^a``, ``t = ±1`` in the quintuple product.  Sum sides
are built directly from their index sets; product sides from
:func:`~spincong.qseries.pochhammer` factors.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .errors import IllFormedSpecialization, UnsupportedSpecialization
from .qseries import (
    TruncSeries,
    one_series,
    pochhammer,
    series_mul,
    series_scale,
)

__all__ = [
    "IdentityCheck",
    "pnt_sum",
    "jtp_check",
    "qpi_check",
    "mod3_sum_side",
    "standard_checks",
]


@dataclass(frozen=True)
class IdentityCheck:
    name: str  # "JTP", "EulerPNT" or "QPI"
    specialization: str
    order: int
    lhs: TruncSeries
    rhs: TruncSeries

    @property
    def matches(self) -> bool:
        return self.lhs.coeffs == self.rhs.coeffs

    def summary(self) -> str:
        status = "match" if self.matches else "MISMATCH"
        return f"{self.name} {self.specialization} order={self.order}: {status}"


def _index_range(order: int, quad: int, lin: int, den: int = 1):
    """Integers n with 0 <= (quad*n^2 + lin*n)/den <= order, quad > 0."""
    bound = isqrt((den * order + lin * lin) // quad + 1) + abs(lin) + 1
    return range(-bound, bound + 1)


def pnt_sum(order: int) -> TruncSeries:
    """Sum over m of (-1)^m q^(m(3m-1)/2)."""
    coeffs = [0] * (order + 1)
    for m in _index_range(order, 3, -1, 2):
        e = m * (3 * m - 1) // 2
        if 0 <= e <= order:
            coeffs[e] += -1 if m & 1 else 1
    return TruncSeries(coeffs, order)


def _sign_power(sign: int, k: int) -> int:
    return -1 if sign == -1 and k & 1 else 1


def jtp_check(z_sign: int, z_exponent: int, order: int) -> IdentityCheck:
    """Triple product at ``z = z_sign * q^z_exponent``.

    Sum side: sum over n of z^n q^(n^2).  Product side: product over n >= 0
    of (1 - q^(2n+2)) (1 + z q^(2n+1)) (1 + q^(2n+1)/z).
    """
    if z_sign not in (1, -1):
        raise IllFormedSpecialization("z_sign must be +1 or -1")
    if z_exponent not in (0, 1):
        # n = -1 gives q^(1 - e); the factor 1 + q/z needs e <= 1
        raise IllFormedSpecialization(f"z = ±q^{z_exponent} introduces negative powers of q")
    e = z_exponent
    coeffs = [0] * (order + 1)
    for n in _index_range(order, 1, e):
        power = n * n + e * n
        if 0 <= power <= order:
            coeffs[power] += _sign_power(z_sign, n)
    lhs = TruncSeries(coeffs, order)

    rhs = pochhammer(1, 2, 2, order)
    rhs = series_mul(rhs, pochhammer(-z_sign, 1 + e, 2, order))
    if e == 1:
        # the n = 0 factor of 1 + q^(2n+1)/z is the constant 1 + z_sign
        rhs = series_scale(series_mul(rhs, pochhammer(-z_sign, 2, 2, order)), 1 + z_sign)
    else:
        rhs = series_mul(rhs, pochhammer(-z_sign, 1, 2, order))
    spec = f"z={'-' if z_sign < 0 else '+'}q^{e}"
    return IdentityCheck("JTP", spec, order, lhs, rhs)


def _signed_geometric(sign: int, a: int, start: int, scale_sign: int, order: int) -> TruncSeries:
    """Product over n >= start of (1 - scale_sign * (sign q^a)^n)."""
    # split by parity of n so each piece is a plain pochhammer
    out = one_series(order)
    for parity in (0, 1):
        first = start if start % 2 == parity else start + 1
        c = scale_sign * _sign_power(sign, parity)
        if first == 0:
            out = series_scale(out, 1 - c)
            first = 2
        out = series_mul(out, pochhammer(c, a * first, 2 * a, order))
    return out


def qpi_check(s_spec: tuple, t_spec: int, order: int) -> IdentityCheck:
    """Quintuple product at ``s = s_sign * q^a`` and ``t = t_spec`` (±1).

    ``s_spec`` is ``(s_sign, a)``.  Sum side: sum over n of
    s^((3n^2+n)/2) (t^(3n) - t^(-3n-1)); product side: product over n >= 1 of
    (1-s^n)(1-s^n t)(1-s^(n-1)/t)(1-s^(2n-1) t^2)(1-s^(2n-1)/t^2).
    """
    s_sign, a = s_spec
    if s_sign not in (1, -1) or a < 1 or t_spec not in (1, -1):
        raise UnsupportedSpecialization(f"unsupported specialization s={s_spec}, t={t_spec}")
    t = t_spec
    coeffs = [0] * (order + 1)
    for n in _index_range(order, 3, 1, 2):
        k = (3 * n * n + n) // 2
        if a * k > order:
            continue
        # t = ±1, so t^(3n) = t^n and t^(-3n-1) = t^(n+1)
        weight = _sign_power(t, n) - _sign_power(t, n + 1)
        coeffs[a * k] += _sign_power(s_sign, k) * weight
    lhs = TruncSeries(coeffs, order)

    rhs = _signed_geometric(s_sign, a, 1, 1, order)  # (1 - s^n)
    rhs = series_mul(rhs, _signed_geometric(s_sign, a, 1, t, order))  # (1 - s^n t)
    rhs = series_mul(rhs, _signed_geometric(s_sign, a, 0, t, order))  # (1 - s^(n-1)/t), 1/t = t
    # t^2 = 1: both (1 - s^(2n-1) t^(±2)) factors are (1 - s^(2n-1))
    odd = pochhammer(s_sign, a, 2 * a, order)
    rhs = series_mul(rhs, series_mul(odd, odd))
    spec = f"s={'-' if s_sign < 0 else '+'}q^{a},t={t:+d}"
    return IdentityCheck("QPI", spec, order, lhs, rhs)


def mod3_sum_side(order: int) -> TruncSeries:
    """2 * sum over n of (-1)^((3n^2+7n)/2) q^((3n^2+n)/2)."""
    coeffs = [0] * (order + 1)
    for n in _index_range(order, 3, 1, 2):
        e = (3 * n * n + n) // 2
        if 0 <= e <= order:
            coeffs[e] += -2 if ((3 * n * n + 7 * n) // 2) & 1 else 2
    return TruncSeries(coeffs, order)


def standard_checks(order: int) -> list:
    """Every specialization exercised by the congruence proofs, plus a few neighbours."""
    checks = [
        IdentityCheck("EulerPNT", "-", order, pnt_sum(order), pochhammer(1, 1, 1, order)),
        jtp_check(-1, 0, order),
        jtp_check(1, 0, order),
        jtp_check(1, 1, order),
        jtp_check(-1, 1, order),
        qpi_check((-1, 1), -1, order),
        qpi_check((1, 1), -1, order),
        qpi_check((1, 1), 1, order),
    ]
    return checks
