"""Congruence statements for the counting functions and a verifier for them.

Two kinds of statement are handled:

* vanishing families: ``counter(A*n + B) = 0 (mod M)`` for all ``n >= 0``;
* characterizations: ``counter(n)`` equals a predicted residue mod ``M``
  (the ``R(n)`` representation counts mod 2, the pentagonal table mod 3).
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Callable, Optional

from .barcomb import check_odd_prime, is_prime
from .errors import InvalidPrime, TruncationOrderError, WrongResidueClass
from .qseries import TruncSeries, series_sub
from .spincounts import (
    Group,
    gf_bar_core,
    gf_bar_core_signed,
    gf_defect_zero,
    gf_partitions,
    gf_spin_chars,
)

__all__ = [
    "COUNTERS",
    "PRIME_COUNTERS",
    "PentagonalClass",
    "CongruenceFamily",
    "VerificationReport",
    "counter_series",
    "count_R",
    "pentagonal_class",
    "predicted_residue_mod3",
    "legendre",
    "qnr_residues",
    "ramanujan_families",
    "characterization_families",
    "mod2_family",
    "mod3_families",
    "pbar_parity_families",
    "defect_zero_families",
    "SOURCES",
    "families_for_source",
    "verify_family",
    "verify_families",
    "search_congruences",
]

# counter id -> needs a prime parameter
COUNTERS = {
    "p": False,
    "f-shat": False,
    "f-ahat": False,
    "f-pbar": True,
    "f-pbar-plus": True,
    "f-pbar-minus": True,
    "f0-shat": True,
    "f0-ahat": True,
    "fplus-shat": True,
    "fplus-ahat": True,
}
PRIME_COUNTERS = {k for k, needs_p in COUNTERS.items() if needs_p}


def counter_series(counter: str, order: int, p: Optional[int] = None) -> TruncSeries:
    """Generating function of a counting function, truncated at ``order``.

    ``fplus-*`` count the spin characters of positive p-defect, i.e. all
    spin characters minus the p-defect-zero ones.
    """
    if counter not in COUNTERS:
        raise ValueError(f"unknown counter {counter!r}")
    if COUNTERS[counter]:
        if p is None:
            raise ValueError(f"counter {counter!r} needs a prime p")
        check_odd_prime(p)
    if counter == "p":
        return gf_partitions(order)
    if counter == "f-shat":
        return gf_spin_chars(Group.SYMMETRIC, order)
    if counter == "f-ahat":
        return gf_spin_chars(Group.ALTERNATING, order)
    if counter == "f-pbar":
        return gf_bar_core(p, order)
    if counter == "f-pbar-plus":
        return gf_bar_core_signed(p, order)[0]
    if counter == "f-pbar-minus":
        return gf_bar_core_signed(p, order)[1]
    if counter == "f0-shat":
        return gf_defect_zero(Group.SYMMETRIC, p, order)
    if counter == "f0-ahat":
        return gf_defect_zero(Group.ALTERNATING, p, order)
    if counter == "fplus-shat":
        return series_sub(gf_spin_chars(Group.SYMMETRIC, order), gf_defect_zero(Group.SYMMETRIC, p, order))
    return series_sub(gf_spin_chars(Group.ALTERNATING, order), gf_defect_zero(Group.ALTERNATING, p, order))


# --- arithmetic helpers -----------------------------------------------------------


def count_R(n: int, k_min: int = 0) -> int:
    """Number of pairs (m, k), m any integer and k >= k_min, with n = (3m^2 + m)/2 + 2k^2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k_min not in (0, 1):
        raise ValueError("k_min must be 0 or 1")
    bound = isqrt(2 * n // 3 + 1) + 2
    count = 0
    for m in range(-bound, bound + 1):
        pent = (3 * m * m + m) // 2
        if pent > n:
            continue
        k = k_min
        while 2 * k * k <= n - pent:
            if pent + 2 * k * k == n:
                count += 1
            k += 1
    return count


@dataclass(frozen=True)
class PentagonalClass:
    n: int
    k: Optional[int]  # the unique k with n = k(3k+1)/2, if any

    @property
    def k_mod_4(self) -> Optional[int]:
        return None if self.k is None else self.k % 4


def pentagonal_class(n: int) -> PentagonalClass:
    if n < 0:
        raise ValueError("n must be nonnegative")
    d = 24 * n + 1
    s = isqrt(d)
    if s * s != d:
        return PentagonalClass(n, None)
    # s is prime to 6, so exactly one of 6k+1 = s, 6k+1 = -s is solvable
    k = (s - 1) // 6 if (s - 1) % 6 == 0 else (-s - 1) // 6
    return PentagonalClass(n, k)


def predicted_residue_mod3(n: int, group: Group) -> int:
    k4 = pentagonal_class(n).k_mod_4
    if k4 is None:
        return 0
    low = k4 in (0, 3)
    if group is Group.SYMMETRIC:
        return 1 if low else 2
    return 2 if low else 1


def legendre(a: int, p: int) -> int:
    check_odd_prime(p)
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def qnr_residues(p: int) -> list:
    """All r in 1..p-1 with 24r + 1 a quadratic nonresidue mod p."""
    if p < 5 or not is_prime(p):
        raise InvalidPrime(f"{p!r} is not a prime >= 5")
    return [r for r in range(1, p) if legendre(24 * r + 1, p) == -1]


# --- families -----------------------------------------------------------------------

_PREDICTORS: dict = {
    "R0": lambda n: count_R(n, 0),
    "R1": lambda n: count_R(n, 1),
    "pent-S": lambda n: predicted_residue_mod3(n, Group.SYMMETRIC),
    "pent-A": lambda n: predicted_residue_mod3(n, Group.ALTERNATING),
}


@dataclass(frozen=True)
class CongruenceFamily:
    counter: str
    modulus: int
    A: int
    B: int
    source: str
    p: Optional[int] = None
    kind: str = "zero"  # "zero" or "residue"
    predictor: Optional[str] = None
    n_min: int = 0

    def __post_init__(self):
        if self.counter not in COUNTERS:
            raise ValueError(f"unknown counter {self.counter!r}")
        if self.modulus < 2 or self.A < 1 or self.B < 0:
            raise ValueError(f"bad progression/modulus in {self}")
        if self.kind not in ("zero", "residue"):
            raise ValueError(f"unknown check kind {self.kind!r}")
        if self.kind == "residue" and self.predictor not in _PREDICTORS:
            raise ValueError(f"residue check needs a predictor, got {self.predictor!r}")
        if COUNTERS[self.counter] and self.p is None:
            raise ValueError(f"counter {self.counter!r} needs p")

    def index(self, n: int) -> int:
        return self.A * n + self.B

    def expected(self, index: int) -> int:
        if self.kind == "zero":
            return 0
        return _PREDICTORS[self.predictor](index) % self.modulus

    def describe(self) -> str:
        arg = "n" if (self.A, self.B) == (1, 0) else f"{self.A}n+{self.B}"
        name = self.counter if self.p is None else f"{self.counter}[p={self.p}]"
        rhs = "0" if self.kind == "zero" else self.predictor
        return f"{name}({arg}) = {rhs} (mod {self.modulus})"


@dataclass(frozen=True)
class VerificationReport:
    family: CongruenceFamily
    n_max: int
    holds: bool
    first_counterexample: Optional[int] = None  # the index A*n+B that failed

    def to_dict(self) -> dict:
        f = self.family
        return {
            "source": f.source,
            "counter": f.counter,
            "p": f.p,
            "A": f.A,
            "B": f.B,
            "M": f.modulus,
            "kind": f.kind,
            "n_max": self.n_max,
            "holds": self.holds,
            "counterexample": self.first_counterexample,
        }


def ramanujan_families() -> list:
    return [
        CongruenceFamily("p", 5, 5, 4, "theorem-1.1"),
        CongruenceFamily("p", 7, 7, 5, "theorem-1.1"),
        CongruenceFamily("p", 11, 11, 6, "theorem-1.1"),
    ]


def characterization_families() -> list:
    return [
        CongruenceFamily("f-shat", 2, 1, 0, "theorem-3.1", kind="residue", predictor="R0", n_min=1),
        CongruenceFamily("f-shat", 3, 1, 0, "theorem-3.5", kind="residue", predictor="pent-S", n_min=1),
        CongruenceFamily("f-ahat", 2, 1, 0, "theorem-3.7", kind="residue", predictor="R1", n_min=1),
        CongruenceFamily("f-ahat", 3, 1, 0, "theorem-3.9", kind="residue", predictor="pent-A", n_min=1),
    ]


def mod2_family(p: int) -> list:
    """Parity families on p^2 n + p r + (p^2 - 1)/24 for p = 5, 11 (mod 24)."""
    if not is_prime(p):
        raise InvalidPrime(f"{p!r} is not prime")
    if p % 24 not in (5, 11):
        raise WrongResidueClass(f"{p} is {p % 24} mod 24, need 5 or 11")
    offset = (p * p - 1) // 24
    out = []
    for counter, source in (("f-shat", "corollary-3.3"), ("f-ahat", "corollary-3.8")):
        out += [CongruenceFamily(counter, 2, p * p, p * r + offset, source) for r in range(1, p)]
    return out


def mod3_families(p: int) -> list:
    rs = qnr_residues(p)
    return [
        CongruenceFamily(counter, 3, p, r, source)
        for counter, source in (("f-shat", "corollary-3.6"), ("f-ahat", "corollary-3.10"))
        for r in rs
    ]


def pbar_parity_families(p: int) -> list:
    return [CongruenceFamily("f-pbar", 2, p, r, "theorem-4.1", p=p) for r in qnr_residues(p)]


def defect_zero_families(p: int) -> list:
    rs = qnr_residues(p)
    sources = (
        ("f0-shat", "theorem-4.3"),
        ("fplus-shat", "theorem-4.3-corollary"),
        ("f0-ahat", "theorem-4.5"),
        ("fplus-ahat", "theorem-4.5-corollary"),
    )
    return [CongruenceFamily(c, 3, p, r, s, p=p) for c, s in sources for r in rs]


def _by_source(builder: Callable, source: str) -> Callable:
    return lambda p: [f for f in builder(p) if f.source == source]


# source id -> family builder taking the prime p (ignored where not needed)
SOURCES: dict = {
    "theorem-1.1": lambda p: ramanujan_families(),
    "theorem-3.1": lambda p: [f for f in characterization_families() if f.source == "theorem-3.1"],
    "theorem-3.5": lambda p: [f for f in characterization_families() if f.source == "theorem-3.5"],
    "theorem-3.7": lambda p: [f for f in characterization_families() if f.source == "theorem-3.7"],
    "theorem-3.9": lambda p: [f for f in characterization_families() if f.source == "theorem-3.9"],
    "corollary-3.3": _by_source(mod2_family, "corollary-3.3"),
    "corollary-3.8": _by_source(mod2_family, "corollary-3.8"),
    "corollary-3.6": _by_source(mod3_families, "corollary-3.6"),
    "corollary-3.10": _by_source(mod3_families, "corollary-3.10"),
    "theorem-4.1": pbar_parity_families,
    "theorem-4.3": _by_source(defect_zero_families, "theorem-4.3"),
    "theorem-4.3-corollary": _by_source(defect_zero_families, "theorem-4.3-corollary"),
    "theorem-4.5": _by_source(defect_zero_families, "theorem-4.5"),
    "theorem-4.5-corollary": _by_source(defect_zero_families, "theorem-4.5-corollary"),
}

# primes used by ``--source all`` for each prime-dependent source
DEFAULT_PRIMES: dict = {
    "corollary-3.3": (5,),
    "corollary-3.8": (5,),
    "corollary-3.6": (5, 7, 11, 13),
    "corollary-3.10": (5, 7, 11, 13),
    "theorem-4.1": (5, 7, 11, 13),
    "theorem-4.3": (5, 7, 11, 13),
    "theorem-4.3-corollary": (5, 7, 11, 13),
    "theorem-4.5": (5, 7, 11, 13),
    "theorem-4.5-corollary": (5, 7, 11, 13),
}


def families_for_source(source: str, p: Optional[int] = None) -> list:
    """Families for one source id, or every source when ``source == "all"``."""
    if source == "all":
        out = []
        for name in SOURCES:
            if p is not None and name in DEFAULT_PRIMES:
                primes = (p,)
            else:
                primes = DEFAULT_PRIMES.get(name, (None,))
            for q in primes:
                try:
                    out += SOURCES[name](q)
                except (WrongResidueClass, InvalidPrime):
                    if p is None:
                        raise
        return out
    if source not in SOURCES:
        raise ValueError(f"unknown source {source!r}; choose from {sorted(SOURCES)} or 'all'")
    if source in DEFAULT_PRIMES:
        primes = (p,) if p is not None else DEFAULT_PRIMES[source]
        return [f for q in primes for f in SOURCES[source](q)]
    return SOURCES[source](p)


# --- verification -----------------------------------------------------------------


def _check(family: CongruenceFamily, n_max: int, series: TruncSeries) -> VerificationReport:
    needed = family.index(n_max)
    if series.order < needed:
        raise TruncationOrderError(
            f"{family.describe()} up to n={n_max} needs order {needed}, series has {series.order}"
        )
    m = family.modulus
    for n in range(family.n_min, n_max + 1):
        idx = family.index(n)
        if series[idx] % m != family.expected(idx):
            return VerificationReport(family, n_max, False, idx)
    return VerificationReport(family, n_max, True)


def verify_family(
    family: CongruenceFamily, n_max: int, series: Optional[TruncSeries] = None
) -> VerificationReport:
    """Check ``family`` for 0 <= n <= n_max (from ``family.n_min``).

    Without ``series`` the counter is expanded to exactly the needed order.
    """
    if series is None:
        series = counter_series(family.counter, family.index(n_max), family.p)
    return _check(family, n_max, series)


def verify_families(families: list, n_max: int, jobs: int = 1) -> list:
    """Verify many families, expanding each counter once; reports keep input order."""
    needed: dict = {}
    for f in families:
        key = (f.counter, f.p)
        needed[key] = max(needed.get(key, 0), f.index(n_max))
    bank = {key: counter_series(key[0], order, key[1]) for key, order in needed.items()}

    def run(f):
        return _check(f, n_max, bank[(f.counter, f.p)])

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(run, families))
    return [run(f) for f in families]


def search_congruences(
    counter: str, A_max: int, moduli, n_max: int, p: Optional[int] = None
) -> list:
    """Empirical candidates ``counter(A n + B) = 0 (mod M)`` for A <= A_max, B < A.

    Every n in 0..n_max is sampled.  Results are candidates, not theorems,
    ordered by (M, A, B).
    """
    if n_max < 50:
        raise ValueError("n_max must be at least 50")
    if A_max < 1:
        raise ValueError("A_max must be positive")
    order = A_max * n_max + A_max - 1
    series = counter_series(counter, order, p)
    found = []
    for m in sorted(set(moduli)):
        if m < 2:
            raise ValueError("moduli must be at least 2")
        zero = [c % m == 0 for c in series.coeffs]
        for a in range(1, A_max + 1):
            for b in range(a):
                if all(zero[a * n + b] for n in range(n_max + 1)):
                    found.append(CongruenceFamily(counter, m, a, b, "search-candidate", p=p))
    return found
