"""Counting apparatus for tetrahedron geodesics by type.

Existence windows for a type (p, q) are controlled by the quadratic form
s = p^2 + pq + q^2 against two angle functions: s < f(alpha) guarantees the
geodesic exists, s >= g(alpha) rules it out.  Counting coprime lattice pairs
under these thresholds gives two-sided bounds c1 < N < c2 on the number of
realizable types, with the Euler totient summatory function supplying the
asymptotics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List, Literal, Optional, Tuple

from . import finder, solids
from .sphtrig import PI, DomainError, tetra_edge
from .solids import SolidKind

_PI2 = PI * PI


def _check_alpha(alpha: float) -> None:
    if not PI / 3 < alpha <= 2 * PI / 3:
        raise DomainError(f"alpha={alpha!r} outside (pi/3, 2pi/3]")


def _check_type(p: int, q: int) -> None:
    if not (isinstance(p, int) and isinstance(q, int)):
        raise DomainError("type entries must be integers")
    if not (0 <= p <= q) or (p, q) == (0, 0) or math.gcd(p, q) != 1:
        raise DomainError(f"({p}, {q}) is not a coprime type with 0 <= p <= q")


def s_form(p: int, q: int) -> int:
    """The quadratic form p^2 + pq + q^2."""
    return p * p + p * q + q * q


def f_alpha(alpha: float) -> float:
    """Sufficiency threshold on s: types with s < f(alpha) must exist."""
    _check_alpha(alpha)
    s2 = math.sin(alpha / 2.0) ** 2
    return _PI2 * math.cos(alpha) ** 2 / (4.0 * s2 * (4.0 * s2 - 1.0))


def g_alpha(alpha: float) -> float:
    """Necessity threshold on s: types with s >= g(alpha) cannot exist."""
    _check_alpha(alpha)
    s2 = math.sin(alpha / 2.0) ** 2
    return _PI2 * s2 / (4.0 * s2 - 1.0)


def c1_alpha(alpha: float) -> float:
    """Lower envelope on the type count: c1 = (3 / 2 pi^2) f(alpha)."""
    _check_alpha(alpha)
    s2 = math.sin(alpha / 2.0) ** 2
    return 3.0 * math.cos(alpha) ** 2 / (8.0 * s2 * (4.0 * s2 - 1.0))


def c2_alpha(alpha: float) -> float:
    """Upper envelope on the type count: c2 = (2 / pi^2) g(alpha) + 1."""
    _check_alpha(alpha)
    s2 = math.sin(alpha / 2.0) ** 2
    return 2.0 * s2 / (4.0 * s2 - 1.0) + 1.0


def necessary_excluded(p: int, q: int, alpha: float) -> bool:
    """Whether the type (p, q) is ruled out at this angle (s >= g).

    Equivalent to the arcsine form alpha > 2 asin sqrt(s / (4s - pi^2))
    wherever that radicand is admissible, and total everywhere.
    """
    _check_type(p, q)
    return s_form(p, q) >= g_alpha(alpha)


def sufficient_exists(p: int, q: int, alpha: float) -> bool:
    """Whether the edge is short enough to force existence of type (p, q)."""
    _check_type(p, q)
    s = s_form(p, q)
    return tetra_edge(alpha) < 2.0 * math.asin(PI / (math.sqrt(s) + math.sqrt(s + 2.0 * _PI2)))


# ---------------------------------------------------------------------------
# totients and lattice counts


def phi_table(n: int) -> List[int]:
    """Euler's totient for 0..n by a linear sieve."""
    if n < 0:
        raise DomainError("n must be nonnegative")
    phi = list(range(n + 1))
    primes: List[int] = []
    is_comp = [False] * (n + 1)
    for i in range(2, n + 1):
        if not is_comp[i]:
            primes.append(i)
            phi[i] = i - 1
        for p in primes:
            if i * p > n:
                break
            is_comp[i * p] = True
            if i % p == 0:
                phi[i * p] = phi[i] * p
                break
            phi[i * p] = phi[i] * (p - 1)
    return phi


def totient_sum(x: int) -> Tuple[int, float]:
    """Exact sum of phi(1..x) and its ratio to the asymptotic (3/pi^2) x^2."""
    if x < 1:
        raise DomainError("x must be positive")
    total = sum(phi_table(x)[1:])
    return total, total / ((3.0 / _PI2) * x * x)


def psi_count(threshold: float, predicate: Literal["s", "p_plus_q"] = "s") -> int:
    """Count coprime pairs 0 < p <= q with s(p,q) < threshold, or with
    p + q < threshold, by direct lattice enumeration."""
    if not math.isfinite(threshold):
        raise DomainError("threshold must be finite")
    count = 0
    if predicate == "s":
        qmax = int(math.isqrt(max(0, math.ceil(threshold))) + 1)
        for q in range(1, qmax + 1):
            for p in range(1, q + 1):
                if s_form(p, q) < threshold and math.gcd(p, q) == 1:
                    count += 1
    elif predicate == "p_plus_q":
        for q in range(1, max(0, math.ceil(threshold)) + 1):
            for p in range(1, q + 1):
                if p + q < threshold and math.gcd(p, q) == 1:
                    count += 1
    else:
        raise DomainError(f"unknown predicate {predicate!r}")
    return count


# ---------------------------------------------------------------------------
# full per-angle report


@dataclass(frozen=True)
class TypeVerdict:
    p: int
    q: int
    verdict: str  # "sufficient-guaranteed" | "solver-resolved" | "depth-capped"
    found: bool


@dataclass(frozen=True)
class CountReport:
    alpha: float
    realizable: Tuple[Tuple[int, int], ...]
    n: int
    c1: float
    c2: float
    psi1: int
    psi2: int
    verdicts: Tuple[TypeVerdict, ...]


def candidate_types(alpha: float) -> List[Tuple[int, int]]:
    """All types not excluded by necessity: (0,1) plus coprime 0<p<=q with
    s < g(alpha), ordered by (s, p)."""
    g = g_alpha(alpha)
    cands = [(0, 1)]
    qmax = math.isqrt(math.ceil(g)) + 1
    for q in range(1, qmax + 1):
        for p in range(1, q + 1):
            if math.gcd(p, q) == 1 and s_form(p, q) < g:
                cands.append((p, q))
    cands.sort(key=lambda t: (s_form(*t), t[0]))
    return cands


def count_tetra(alpha: float, max_crossings: Optional[int] = None) -> CountReport:
    """Resolve every non-excluded type by its targeted crossing sequence.

    A type (p, q) crosses 4(p+q) edges; candidates needing more than
    `max_crossings` (when given) are reported as depth-capped and not counted.
    """
    if not PI / 3 < alpha < 2 * PI / 3:
        raise DomainError(f"alpha={alpha!r} outside (pi/3, 2pi/3)")
    spec = solids.build_solid(SolidKind.TETRAHEDRON, alpha)
    verdicts: List[TypeVerdict] = []
    realizable: List[Tuple[int, int]] = []
    for p, q in candidate_types(alpha):
        depth = 4 * (p + q)
        if max_crossings is not None and depth > max_crossings:
            verdicts.append(TypeVerdict(p, q, "depth-capped", False))
            continue
        path = finder.solve_tetra_type(spec, p, q)
        found = path is not None
        guaranteed = sufficient_exists(p, q, alpha)
        verdicts.append(
            TypeVerdict(p, q, "sufficient-guaranteed" if guaranteed else "solver-resolved", found)
        )
        if found:
            realizable.append((p, q))
    return CountReport(
        alpha=alpha,
        realizable=tuple(realizable),
        n=len(realizable),
        c1=c1_alpha(alpha),
        c2=c2_alpha(alpha),
        psi1=psi_count(f_alpha(alpha), "s"),
        psi2=psi_count(g_alpha(alpha), "s"),
        verdicts=tuple(verdicts),
    )
