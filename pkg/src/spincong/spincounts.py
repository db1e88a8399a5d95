"""Counting functions for spin characters and p-defect-zero spin characters.

Each counting function has two independent routes:

* enumeration: walk bar partitions (or p-bar-cores) and apply the sign rule
  (a positive bar partition labels one character of the symmetric cover and
  two of the alternating cover; a negative one labels two and one);
* series: expand the product formulas with :mod:`spincong.qseries`.

Series that carry a factor 1/2 are built doubled in the integers and then
halved with an exactness check.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial, prod

from . import kernels
from .barcomb import BarPartition, bar_lengths, check_odd_prime
from .qseries import (
    TruncSeries,
    alternate,
    exact_divide,
    one_series,
    pochhammer,
    series_add,
    series_invert,
    series_mul,
    series_pow,
    series_scale,
    series_sub,
    substitute_power,
)

__all__ = [
    "Group",
    "SpinDegree",
    "PrimeCounts",
    "SpinCountRecord",
    "degree_product_form",
    "degree_bar_form",
    "spin_degree",
    "nu_p",
    "nu_p_factorial",
    "nu_p_degree",
    "p_defect",
    "strict_sign_counts",
    "strict_sign_counts_dp",
    "core_sign_counts",
    "count_spin_chars",
    "count_defect_zero",
    "gf_partitions",
    "gf_distinct_parts",
    "gf_spin_chars",
    "gf_bar_core",
    "signed_core_difference",
    "gf_bar_core_signed",
    "gf_defect_zero",
    "records_by_enumeration",
    "records_by_series",
    "records_to_csv",
    "records_to_json",
    "WALK_LIMIT",
]

# strict partitions are walked up to this n; beyond it they are counted by DP.
# The pure-Python walk takes minutes at 200, so it stops earlier.
WALK_LIMIT = 200 if kernels.BACKEND == "compiled" else 120


class Group(enum.Enum):
    SYMMETRIC = "S"
    ALTERNATING = "A"


# --- degrees and defects ------------------------------------------------------


def degree_product_form(lam: BarPartition) -> int:
    """Product formula for the degree, with factorials of the parts in the denominator."""
    n, m, a = lam.n, lam.length, lam.parts
    value = Fraction(2 ** ((n - m) // 2) * factorial(n), prod(factorial(x) for x in a))
    for i in range(m):
        for j in range(i + 1, m):
            value *= Fraction(a[i] - a[j], a[i] + a[j])
    if value.denominator != 1:
        raise AssertionError(f"non-integral spin degree {value} for {lam}")
    return int(value)


def degree_bar_form(lam: BarPartition) -> int:
    n, m = lam.n, lam.length
    hook_product = prod(bar_lengths(lam).flat())
    q, r = divmod(2 ** ((n - m) // 2) * factorial(n), hook_product)
    if r:
        raise AssertionError(f"bar-length product does not divide for {lam}")
    return q


@dataclass(frozen=True)
class SpinDegree:
    lam: BarPartition
    degree: int
    defects: dict = field(default_factory=dict)


def spin_degree(lam: BarPartition, primes=()) -> SpinDegree:
    """Degree of the spin character(s) labelled by ``lam``, checked two ways."""
    if not lam.parts:
        raise ValueError("spin degree needs a nonempty bar partition")
    d1 = degree_product_form(lam)
    d2 = degree_bar_form(lam)
    if d1 != d2:
        raise AssertionError(f"degree forms disagree for {lam}: {d1} != {d2}")
    return SpinDegree(lam, d1, {p: p_defect(lam, p) for p in primes})


def nu_p(x: int, p: int) -> int:
    if x == 0:
        raise ValueError("valuation of zero")
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def nu_p_factorial(n: int, p: int) -> int:
    v, pk = 0, p
    while pk <= n:
        v += n // pk
        pk *= p
    return v


def nu_p_degree(lam: BarPartition, p: int) -> int:
    """p-adic valuation of the spin degree: nu_p(n!) - nu_p(prod of bar lengths)."""
    check_odd_prime(p)
    return nu_p_factorial(lam.n, p) - sum(nu_p(h, p) for h in bar_lengths(lam).flat())


def p_defect(lam: BarPartition, p: int) -> int:
    """Defect nu_p(|G|) - nu_p(degree) of the spin character(s) labelled by ``lam``.

    |G| = 2 n! and p is odd, so this is nu_p of the bar-length product; it
    vanishes exactly on p-bar-cores.
    """
    check_odd_prime(p)
    return nu_p_factorial(lam.n, p) - nu_p_degree(lam, p)


# --- enumeration route ----------------------------------------------------------


def strict_sign_counts_dp(n_max: int) -> tuple:
    """Strict partitions of each n <= n_max with n - length even / odd, by DP over parts."""
    # ways[s][e] with e = parity of the number of parts
    ways = [[0, 0] for _ in range(n_max + 1)]
    ways[0][0] = 1
    for k in range(1, n_max + 1):
        for s in range(n_max, k - 1, -1):
            ways[s][0] += ways[s - k][1]
            ways[s][1] += ways[s - k][0]
    plus = [ways[s][s & 1] for s in range(n_max + 1)]
    minus = [ways[s][1 - (s & 1)] for s in range(n_max + 1)]
    return plus, minus


@lru_cache(maxsize=8)
def _strict_counts(n_max: int) -> tuple:
    walked = min(n_max, WALK_LIMIT)
    plus, minus = kernels.strict_sign_counts(walked)
    if n_max > walked:
        dp_plus, dp_minus = strict_sign_counts_dp(n_max)
        plus = plus + dp_plus[walked + 1 :]
        minus = minus + dp_minus[walked + 1 :]
    return tuple(plus), tuple(minus)


def strict_sign_counts(n_max: int) -> tuple:
    """(|P+(n)|, |P-(n)|) for n = 0..n_max.

    Up to ``WALK_LIMIT`` the counts come from walking the strict partitions;
    larger n are counted by :func:`strict_sign_counts_dp`.
    """
    plus, minus = _strict_counts(n_max)
    return list(plus), list(minus)


@lru_cache(maxsize=32)
def _core_counts(n_max: int, p: int) -> tuple:
    plus, minus = kernels.core_sign_counts(n_max, p)
    return tuple(plus), tuple(minus)


def core_sign_counts(n_max: int, p: int) -> tuple:
    """(f+_p(n), f-_p(n)) for n = 0..n_max by walking the p-bar-cores."""
    check_odd_prime(p)
    plus, minus = _core_counts(n_max, p)
    return list(plus), list(minus)


def _weighted(plus: int, minus: int, group: Group) -> int:
    if group is Group.SYMMETRIC:
        return plus + 2 * minus
    return 2 * plus + minus


def count_spin_chars(n: int, group: Group) -> int:
    if n < 0:
        raise ValueError("n must be nonnegative")
    plus, minus = strict_sign_counts(n)
    return _weighted(plus[n], minus[n], group)


def count_defect_zero(n: int, group: Group, p: int) -> int:
    plus, minus = core_sign_counts(n, p)
    return _weighted(plus[n], minus[n], group)


# --- series route ---------------------------------------------------------------


@lru_cache(maxsize=64)
def _euler(step: int, order: int) -> TruncSeries:
    """(q^step; q^step)_inf."""
    return pochhammer(1, step, step, order)


@lru_cache(maxsize=16)
def gf_partitions(order: int) -> TruncSeries:
    """1/(q;q)_inf, the partition generating function."""
    return series_invert(_euler(1, order))


@lru_cache(maxsize=16)
def gf_distinct_parts(order: int) -> TruncSeries:
    """(q^2;q^2)_inf / (q;q)_inf."""
    return series_mul(_euler(2, order), gf_partitions(order))


@lru_cache(maxsize=16)
def _theta_ratio(order: int) -> TruncSeries:
    """(q^2;q^2)_inf^2 / (q^4;q^4)_inf."""
    return series_mul(series_pow(_euler(2, order), 2), series_invert(_euler(4, order)))


@lru_cache(maxsize=16)
def gf_spin_chars(group: Group, order: int) -> TruncSeries:
    """Generating function of the number of spin characters of the cover."""
    three = series_scale(one_series(order), 3)
    theta = _theta_ratio(order)
    inner = series_sub(three, theta) if group is Group.SYMMETRIC else series_add(three, theta)
    return exact_divide(series_mul(gf_distinct_parts(order), inner), 2)


@lru_cache(maxsize=64)
def gf_bar_core(p: int, order: int) -> TruncSeries:
    """Generating function of the number of p-bar-cores."""
    check_odd_prime(p)
    num = series_mul(_euler(2, order), series_pow(_euler(p, order), (p + 1) // 2))
    den = series_mul(_euler(1, order), _euler(2 * p, order))
    return series_mul(num, series_invert(den))


def signed_core_difference(p: int, order: int, t: int | None = None) -> TruncSeries:
    """(-q;-q)_inf * (-q^p;-q^p)_inf^(t-1), the signed count f+ - f-.

    The default ``t = (p-1)/2`` is the value under which this product agrees
    with enumeration of signed p-bar-cores.
    """
    check_odd_prime(p)
    if t is None:
        t = (p - 1) // 2
    alt_euler = alternate(_euler(1, order))
    return series_mul(alt_euler, series_pow(substitute_power(alt_euler, p), t - 1))


@lru_cache(maxsize=64)
def gf_bar_core_signed(p: int, order: int) -> tuple:
    """(F+, F-) generating functions of positive and negative p-bar-cores."""
    total = gf_bar_core(p, order)
    diff = signed_core_difference(p, order)
    plus = exact_divide(series_add(total, diff), 2)
    minus = exact_divide(series_sub(total, diff), 2)
    return plus, minus


@lru_cache(maxsize=64)
def gf_defect_zero(group: Group, p: int, order: int) -> TruncSeries:
    plus, minus = gf_bar_core_signed(p, order)
    if group is Group.SYMMETRIC:
        return series_add(plus, series_scale(minus, 2))
    return series_add(series_scale(plus, 2), minus)


# --- records ----------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeCounts:
    f_pbar: int
    f_pbar_plus: int
    f_pbar_minus: int
    f0_S: int
    f0_A: int

    def check(self) -> None:
        assert self.f_pbar == self.f_pbar_plus + self.f_pbar_minus
        assert self.f0_S == self.f_pbar_plus + 2 * self.f_pbar_minus
        assert self.f0_A == 2 * self.f_pbar_plus + self.f_pbar_minus
        assert self.f0_S + self.f0_A == 3 * self.f_pbar


@dataclass(frozen=True)
class SpinCountRecord:
    n: int
    f_S_hat: int
    f_A_hat: int
    primes: dict  # p -> PrimeCounts
    source: str  # "enumeration" or "series"

    def check(self) -> None:
        for counts in self.primes.values():
            counts.check()

    def to_dict(self) -> dict:
        out = {"n": self.n, "f_S_hat": self.f_S_hat, "f_A_hat": self.f_A_hat, "source": self.source}
        out["primes"] = {
            str(p): {
                "f_pbar": c.f_pbar,
                "f_pbar_plus": c.f_pbar_plus,
                "f_pbar_minus": c.f_pbar_minus,
                "f0_S": c.f0_S,
                "f0_A": c.f0_A,
            }
            for p, c in self.primes.items()
        }
        return out


def records_by_enumeration(n_max: int, primes=()) -> list:
    plus, minus = strict_sign_counts(n_max)
    cores = {p: core_sign_counts(n_max, p) for p in primes}
    records = []
    for n in range(n_max + 1):
        per_prime = {}
        for p in primes:
            cp, cm = cores[p][0][n], cores[p][1][n]
            per_prime[p] = PrimeCounts(cp + cm, cp, cm, cp + 2 * cm, 2 * cp + cm)
        rec = SpinCountRecord(
            n, plus[n] + 2 * minus[n], 2 * plus[n] + minus[n], per_prime, "enumeration"
        )
        rec.check()
        records.append(rec)
    return records


def records_by_series(n_max: int, primes=()) -> list:
    fs = gf_spin_chars(Group.SYMMETRIC, n_max)
    fa = gf_spin_chars(Group.ALTERNATING, n_max)
    per = {}
    for p in primes:
        per[p] = (
            gf_bar_core(p, n_max),
            *gf_bar_core_signed(p, n_max),
            gf_defect_zero(Group.SYMMETRIC, p, n_max),
            gf_defect_zero(Group.ALTERNATING, p, n_max),
        )
    records = []
    for n in range(n_max + 1):
        per_prime = {p: PrimeCounts(*(s[n] for s in series)) for p, series in per.items()}
        rec = SpinCountRecord(n, fs[n], fa[n], per_prime, "series")
        rec.check()
        records.append(rec)
    return records


def records_to_csv(records: list) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    primes = list(records[0].primes) if records else []
    header = ["n", "f_S_hat", "f_A_hat"]
    for p in primes:
        header += [f"{name}_p{p}" for name in ("f_pbar", "f_pbar_plus", "f_pbar_minus", "f0_S", "f0_A")]
    writer.writerow(header)
    for rec in records:
        row = [rec.n, rec.f_S_hat, rec.f_A_hat]
        for p in primes:
            c = rec.primes[p]
            row += [c.f_pbar, c.f_pbar_plus, c.f_pbar_minus, c.f0_S, c.f0_A]
        writer.writerow(row)
    return buf.getvalue()


def records_to_json(records: list) -> str:
    return json.dumps([r.to_dict() for r in records])
