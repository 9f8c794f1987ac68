"""Symmetric powers of ``o`` and their decomposition under the Levi.

``S^k(o)`` is built as a weight multiset by convolving the weights of ``o``.
Its Levi constituents are recovered by antisymmetrizing over the Levi Weyl
group: for an L-dominant ``mu``

    mult(mu) = sum_{w in W_L} sgn(w) * m[w(mu + rho) - rho].

Any ``rho`` pairing to 1 with the Levi simple coroots gives the same
answer, so the ambient ``rho`` is used throughout.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from typing import Sequence

from .errors import NegativeMultiplicity, NotWeylInvariant
from .grading import Grading, LeviWeight, g2_model_grading
from .rootsys import dot_action, freudenthal_multiplicities


def _add(a: LeviWeight, b: LeviWeight, times: int = 1) -> LeviWeight:
    return LeviWeight(
        a.h_value + times * b.h_value,
        tuple(x + times * y for x, y in zip(a.levi_coords, b.levi_coords)),
        tuple(x + times * y for x, y in zip(a.full, b.full)),
    )


def _zero_like(w: LeviWeight) -> LeviWeight:
    return LeviWeight(0, (0,) * len(w.levi_coords), (0,) * len(w.full))


@dataclass(frozen=True)
class WeightMultiset:
    entries: dict[LeviWeight, int]
    degree: int | None = None

    @property
    def total(self) -> int:
        return sum(self.entries.values())

    def __len__(self) -> int:
        return self.total

    def sorted_items(self) -> list[tuple[LeviWeight, int]]:
        return sorted(self.entries.items())


@dataclass(frozen=True, order=True)
class LeviConstituent:
    mu: LeviWeight
    multiplicity: int
    tag: tuple[int, int] | None = field(default=None, compare=False)


@lru_cache(maxsize=None)
def _sym_powers(o: tuple[LeviWeight, ...], kmax: int, zero: LeviWeight) -> tuple[Counter, ...]:
    layers = [Counter({zero: 1})] + [Counter() for _ in range(kmax)]
    for v in o:
        new = [Counter() for _ in range(kmax + 1)]
        for d in range(kmax + 1):
            for j in range(d + 1):
                for wt, m in layers[d - j].items():
                    new[d][_add(wt, v, j)] += m
        layers = new
    return tuple(layers)


def sym_power_multiset(o: Sequence[LeviWeight], k: int,
                       zero: LeviWeight | None = None) -> WeightMultiset:
    """Weights of ``S^k`` of the space with weights ``o``.

    ``zero`` supplies the coordinate shape when ``o`` is empty.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    o = tuple(sorted(o))
    if zero is None:
        if not o:
            raise ValueError("zero weight required when o is empty")
        zero = _zero_like(o[0])
    return WeightMultiset(dict(_sym_powers(o, k, zero)[k]), k)


def _check_levi_invariant(m: WeightMultiset, g: Grading) -> None:
    rs = g.rs
    for wt, mult in m.entries.items():
        for i in g.levi_nodes:
            image = g.levi_weight(rs.reflect(i, wt.full))
            if m.entries.get(image, 0) != mult:
                raise NotWeylInvariant(f"multiset is not W_L-invariant at {wt.full}")


def levi_irrep_extract(m: WeightMultiset, g: Grading, verify: bool = True) -> list[LeviConstituent]:
    """Highest weights and multiplicities of the Levi irreducibles in ``m``."""
    _check_levi_invariant(m, g)
    rs = g.rs
    out = []
    for wt in sorted(m.entries):
        if not g.is_levi_dominant(wt.full):
            continue
        mult = 0
        for w in g.levi_weyl:
            nu = dot_action(rs, w, wt.full)
            mult += w.sign * m.entries.get(g.levi_weight(nu), 0)
        if mult < 0:
            raise NegativeMultiplicity(f"extraction gave {mult} at {wt.full}")
        if mult:
            out.append(LeviConstituent(wt, mult))
    if verify:
        rebuilt: Counter = Counter()
        for c in out:
            for full, mm in freudenthal_multiplicities(rs, c.mu.full, g.levi_nodes).items():
                rebuilt[g.levi_weight(full)] += c.multiplicity * mm
        if rebuilt != Counter(m.entries):
            raise AssertionError("Levi constituents do not re-expand to the input multiset")
    return out


@lru_cache(maxsize=None)
def levi_constituents(g: Grading, k: int) -> tuple[LeviConstituent, ...]:
    """Levi decomposition of ``S^k(o)`` for the grading ``g``."""
    zero = g.levi_weight((0,) * g.rs.rank)
    return tuple(levi_irrep_extract(sym_power_multiset(g.o_weights, k, zero), g))


def g2_closed_form_sk(k: int) -> list[LeviConstituent]:
    """``S^k(o)`` for the 8-dimensional G2 orbit as ``det^k (x) S^q``,
    ``q = 0..k``, with highest weight ``(2k+q) alpha + (k+q) beta``."""
    if k < 0:
        raise ValueError("k must be non-negative")
    g = g2_model_grading()
    out = []
    for q in range(k + 1):
        full = g.rs.from_simple_coords((2 * k + q, k + q))
        out.append(LeviConstituent(g.levi_weight(full), 1, (k, q)))
    return out


def verify_sk_equality(k: int) -> bool:
    g = g2_model_grading()
    generic = sorted((c.mu, c.multiplicity) for c in levi_constituents(g, k))
    closed = sorted((c.mu, c.multiplicity) for c in g2_closed_form_sk(k))
    return generic == closed


def binomial_size(dim: int, k: int) -> int:
    return comb(dim + k - 1, k) if dim else int(k == 0)
