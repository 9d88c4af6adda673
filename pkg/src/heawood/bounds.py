"""Closed-form Heawood-type bounds and vertex thresholds, in exact integer arithmetic."""
from __future__ import annotations

from dataclasses import asdict, dataclass
from math import comb

from .errors import ParameterError
from .gfp import check_prime, prime_power_base


@dataclass(frozen=True)
class BoundReport:
    name: str
    inputs: dict
    value: int
    satisfied: bool | None = None

    def to_json(self) -> dict:
        out = asdict(self)
        # values such as n0_weak outgrow doubles; keep them exact
        out["value"] = str(self.value) if abs(self.value) > 2**53 else self.value
        return out


def _nonneg(**kw):
    for name, v in kw.items():
        if v < 0:
            raise ParameterError(f"{name} must be >= 0, got {v}")


def heawood_check(n: int, b1: int) -> bool:
    """Can K_n embed into a surface with first Betti number b1, as far as (n-3)(n-4) <= 6 b1 tells."""
    _nonneg(b1=b1)
    return (n - 3) * (n - 4) <= 6 * b1


def heawood_max_n(b1: int) -> int:
    _nonneg(b1=b1)
    n = 4
    while heawood_check(n + 1, b1):
        n += 1
    return n


def generalized_heawood_check(n: int, k: int, bk: int) -> bool:
    """C(n-k-1, k+1) <= C(2k+1, k+1) bk, for the k-skeleton of the n-simplex."""
    if n < 1 or k < 1:
        raise ParameterError(f"need n, k >= 1, got n={n}, k={k}")
    _nonneg(bk=bk)
    a = n - k - 1
    lhs = comb(a, k + 1) if a >= 0 else 0
    return lhs <= comb(2 * k + 1, k + 1) * bk


def thm2_bound(k: int, bk: int) -> int:
    """Largest n for which the k-skeleton of the n-simplex may almost embed into a 2k-manifold with Betti number bk."""
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    _nonneg(bk=bk)
    return 2 * comb(2 * k + 2, k) * bk + 2 * k + 4


def _check_prime_power(q: int) -> int:
    if prime_power_base(q) is None:
        raise ParameterError(f"q must be a prime power, got {q}")
    return q


def thm3_bound(q: int, k: int, bk: int) -> int:
    """The q-almost-embedding analogue of thm2_bound; equals it at q = 2."""
    _check_prime_power(q)
    if k < 1:
        raise ParameterError(f"k must be >= 1, got {k}")
    _nonneg(bk=bk)
    return ((q - 2) * k + 2 * q - 2) * comb(q * k + 2 * q - 2, k) * bk + (2 * q - 2) * k + 4 * q - 4


def dim_constraint(q: int, k: int, d: int) -> bool:
    """d <= q k / (q - 1), tested in integers."""
    _check_prime_power(q)
    return d * (q - 1) <= q * k


def n0_weak(k: int, b: int, s: int, p: int) -> int:
    """Vertex count past which pigeonhole on single unused vertices is guaranteed to succeed."""
    if s < k:
        raise ParameterError(f"need s >= k, got s={s}, k={k}")
    _nonneg(b=b)
    check_prime(p)
    m = comb(s + 1, k + 1)
    return (m - 1) * p ** (b * m) + s + 1


def weak_unused_threshold(k: int, b: int, s: int, p: int) -> int:
    """|U| needed by the pigeonhole step: (m-1) p^(bm) + 1."""
    m = comb(s + 1, k + 1)
    return (m - 1) * p ** (b * m) + 1


def n0_strong(k: int, b: int, s: int) -> int:
    """Vertex count past which the multipoint construction is guaranteed to succeed."""
    if s < 2 * k:
        raise ParameterError(f"need s >= 2k, got s={s}, k={k}")
    _nonneg(b=b)
    value = comb(s, k) * b * (s - 2 * k) + 2 * s - 2 * k + 1
    assert value == n0_strong_factored(k, b, s)
    return value


def n0_strong_factored(k: int, b: int, s: int) -> int:
    """(C(s,k) b + 1)(r - 1) + s + 1 with r = s - 2k + 1 colors."""
    return (comb(s, k) * b + 1) * (s - 2 * k) + s + 1


def n0_improved_informational(k: int, b: int, s: int) -> int:
    """A sharper threshold claimed elsewhere; reported for reference, not certified here."""
    if s < 2 * k:
        raise ParameterError(f"need s >= 2k, got s={s}, k={k}")
    return comb(s, k) * b * (s - 2 * k) + s + 1


def strong_unused_threshold(k: int, b: int, s: int) -> int:
    """|U| = n0_strong - s, the collision-finder's cardinality requirement."""
    return n0_strong(k, b, s) - s
