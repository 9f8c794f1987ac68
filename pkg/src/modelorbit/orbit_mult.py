"""Multiplicities of irreducibles in the ring of functions on a nilpotent orbit.

For a complex group the multiplicity of ``V_lambda^*`` in the functions on
the normalization of the orbit closure is

    sum_w sgn(w) * [multiplicity of E_{w(lambda+rho)-rho} in S(o)]

over Weyl elements ``w`` for which ``w(lambda+rho)-rho`` is L-dominant.
Higher induced functors of ``S(o)^*`` vanish for complex groups, so this
signed sum (an Euler characteristic in general) is the multiplicity itself.

``S(o)`` is infinite, but every weight of ``S^k(o)`` has h-degree at least
``2k`` while ``(w(lambda+rho)-rho)(h) <= lambda(h)`` for dominant ``h``, so
degrees ``k <= lambda(h) // 2`` suffice.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .grading import Grading, LeviWeight
from .levi_decomp import levi_constituents
from .rootsys import (
    RootSystem,
    Weight,
    WeylElement,
    build_root_system,
    dot_action,
    dual_weight,
    require_dominant,
)


@dataclass(frozen=True)
class Term:
    w: WeylElement
    mu: LeviWeight
    k: int
    q: int
    s_mult: int
    signed: int


@dataclass(frozen=True)
class MultiplicityReport:
    lam: Weight
    lam_dual: Weight
    total: int
    terms: tuple[Term, ...]
    k_bound: int

    @property
    def tags(self) -> tuple[tuple[int, int], ...]:
        return tuple((t.k, t.q) for t in self.terms)


def truncation_bound(g: Grading, lam: Sequence[int]) -> int:
    return max(g.h.pair(lam), 0) // 2


def _constituent_table(g: Grading, k_bound: int) -> dict[Weight, list[tuple[int, int]]]:
    table: dict[Weight, list[tuple[int, int]]] = {}
    for k in range(k_bound + 1):
        for c in levi_constituents(g, k):
            table.setdefault(c.mu.full, []).append((k, c.multiplicity))
    return table


def multiplicity(rs: RootSystem, g: Grading, lam: Sequence[int]) -> MultiplicityReport:
    if g.rs != rs:
        raise ValueError("grading belongs to a different root system")
    lam = require_dominant(rs, lam)
    k_bound = truncation_bound(g, lam)
    table = _constituent_table(g, k_bound)
    terms = []
    for w in rs.weyl:
        nu = dot_action(rs, w, lam)
        if not g.is_levi_dominant(nu):
            continue
        mu = g.levi_weight(nu)
        # q records the Levi part of the highest weight; for G2 it is nu(h_beta)
        q = sum(mu.levi_coords)
        for k, m in table.get(nu, ()):
            terms.append(Term(w, mu, k, q, m, w.sign * m))
    terms.sort(key=lambda t: (t.w.length, t.w.matrix, t.k))
    return MultiplicityReport(lam, dual_weight(rs, lam), sum(t.signed for t in terms),
                              tuple(terms), k_bound)


def s_lambda_set(rs: RootSystem, g: Grading, lam: Sequence[int]) -> set[WeylElement]:
    """Weyl elements contributing to the multiplicity of ``lam``."""
    return {t.w for t in multiplicity(rs, g, lam).terms}


# h = 2 h_alpha + 3 h_beta for the 8-dimensional G2 orbit
_G2_MODEL_H = (2, 3)


def bruteforce_solutions_g2(lam: Sequence[int]) -> list[tuple[WeylElement, int, int]]:
    """All ``(w, k, q)`` with ``0 <= q <= k`` and
    ``w(lam+rho) - rho = (2k+q) alpha + (k+q) beta`` in G2."""
    rs = build_root_system("G", 2)
    lam = require_dominant(rs, lam)
    bound = max(sum(c * x for c, x in zip(_G2_MODEL_H, lam)), 0) // 2
    alpha, beta = rs.simple_roots
    found = []
    for w in rs.weyl:
        nu = dot_action(rs, w, lam)
        for k in range(bound + 1):
            for q in range(k + 1):
                a, b = 2 * k + q, k + q
                target = tuple(a * x + b * y for x, y in zip(alpha, beta))
                if nu == target:
                    found.append((w, k, q))
    found.sort(key=lambda s: (s[0].length, s[0].matrix, s[1], s[2]))
    return found


def bruteforce_multiplicity_g2(lam: Sequence[int]) -> int:
    return sum(w.sign for w, _, _ in bruteforce_solutions_g2(lam))


def dominant_weights(rank: int, bound: int) -> Iterator[Weight]:
    """Dominant weights with coordinate sum at most ``bound``, in sorted order."""
    def rec(prefix: tuple[int, ...], left: int) -> Iterator[Weight]:
        if len(prefix) == rank:
            yield prefix
            return
        for x in range(left + 1):
            yield from rec(prefix + (x,), left - x)

    return iter(sorted(rec((), bound), key=lambda lam: (sum(lam), lam)))


@dataclass(frozen=True)
class VerificationRow:
    lam: Weight
    multiplicity: int
    bruteforce: int | None
    agree: bool
    report: MultiplicityReport


@dataclass(frozen=True)
class ModelVerification:
    bound: int
    rows: tuple[VerificationRow, ...]

    @property
    def passed(self) -> bool:
        return all(r.multiplicity == 1 and r.agree and r.bruteforce in (1, None)
                   for r in self.rows)

    @property
    def failures(self) -> list[Weight]:
        return [r.lam for r in self.rows
                if not (r.multiplicity == 1 and r.agree and r.bruteforce in (1, None))]


def _verify_one(args: tuple[RootSystem, Grading, Weight]) -> VerificationRow:
    rs, g, lam = args
    report = multiplicity(rs, g, lam)
    if rs.name != "G2":
        return VerificationRow(lam, report.total, None, True, report)
    sols = bruteforce_solutions_g2(lam)
    brute = sum(w.sign for w, _, _ in sols)
    tags = tuple((k, q) for _, k, q in sols)
    return VerificationRow(lam, report.total, brute,
                           brute == report.total and tags == report.tags, report)


def verify_model(rs: RootSystem, g: Grading, bound: int, workers: int = 1) -> ModelVerification:
    """Check multiplicity one for every dominant weight up to ``bound``.

    On G2 each weight is also checked against the brute-force enumeration.
    """
    if bound < 1:
        raise ValueError("bound must be positive")
    jobs = [(rs, g, lam) for lam in dominant_weights(rs.rank, bound)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_verify_one, jobs, chunksize=8))
    else:
        rows = [_verify_one(j) for j in jobs]
    rows.sort(key=lambda r: (sum(r.lam), r.lam))
    return ModelVerification(bound, tuple(rows))
