"""Gradings of a simple Lie algebra by the neutral element of an sl2-triple.

A weighted Dynkin diagram fixes ``h`` through ``alpha_j(h) = label_j``.
Pairing roots with ``h`` splits the roots into the eigenspaces ``g(m)``;
the Levi is ``g(0)``, the nilradical ``u`` is the sum over ``m > 0`` and
the space ``o`` is the sum over ``m >= 2``.  Only root-level data is kept.
The rest of ``h``'s standard triple is never needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Sequence

from .errors import NotInCoweightLattice
from .rootsys import Root, RootSystem, Weight, build_root_system


@dataclass(frozen=True)
class Coweight:
    coroot_coords: tuple[int, ...]

    def pair(self, lam: Sequence[int]) -> int:
        """lam(h) for a weight in fundamental coordinates."""
        return sum(c * x for c, x in zip(self.coroot_coords, lam))


@dataclass(frozen=True, order=True)
class LeviWeight:
    """A weight seen by the Levi: its h-degree, its pairings with the Levi
    simple coroots and its ambient fundamental coordinates."""

    h_value: int
    levi_coords: tuple[int, ...]
    full: Weight


def coweight_from_diagram(rs: RootSystem, labels: Sequence[int]) -> Coweight:
    labels = tuple(int(x) for x in labels)
    if len(labels) != rs.rank:
        raise ValueError(f"diagram has {len(labels)} labels, {rs.name} has rank {rs.rank}")
    if any(x < 0 for x in labels):
        raise ValueError(f"diagram labels must be non-negative: {labels}")
    # alpha_j(h) = sum_i c_i cartan[j][i]; solve cartan . c = labels
    inv = rs.inverse_cartan
    coords = [sum((inv[j][i] * labels[i] for i in range(rs.rank)), Fraction(0))
              for j in range(rs.rank)]
    if any(c.denominator != 1 for c in coords):
        raise NotInCoweightLattice(
            f"diagram {labels} gives h = {[str(c) for c in coords]} in coroot coordinates")
    return Coweight(tuple(int(c) for c in coords))


@dataclass(frozen=True)
class Grading:
    rs: RootSystem
    h: Coweight
    diagram: tuple[int, ...]

    @cached_property
    def pieces(self) -> dict[int, tuple[Root, ...]]:
        out: dict[int, list[Root]] = {}
        for root in self.rs.roots:
            out.setdefault(self.h.pair(root.fund_coords), []).append(root)
        return {m: tuple(sorted(out[m])) for m in sorted(out)}

    @property
    def levi_nodes(self) -> tuple[int, ...]:
        """Simple roots of the Levi's semisimple part."""
        return tuple(i for i, x in enumerate(self.diagram) if x == 0)

    @property
    def levi_roots(self) -> tuple[Root, ...]:
        return self.pieces.get(0, ())

    @cached_property
    def levi_weyl(self):
        return self.rs.weyl_subgroup(self.levi_nodes)

    def levi_weight(self, full: Sequence[int]) -> LeviWeight:
        full = tuple(full)
        return LeviWeight(self.h.pair(full), tuple(full[i] for i in self.levi_nodes), full)

    def is_levi_dominant(self, lam: Sequence[int]) -> bool:
        return all(lam[i] >= 0 for i in self.levi_nodes)

    @cached_property
    def o_weights(self) -> tuple[LeviWeight, ...]:
        return tuple(sorted(self.levi_weight(r.fund_coords)
                            for m, roots in self.pieces.items() if m >= 2 for r in roots))


def grade_roots(rs: RootSystem, h: Coweight) -> Grading:
    diagram = tuple(h.pair(rs.cartan[i]) for i in range(rs.rank))
    return Grading(rs, h, diagram)


def grading_from_diagram(rs: RootSystem, labels: Sequence[int]) -> Grading:
    return grade_roots(rs, coweight_from_diagram(rs, labels))


def o_space(g: Grading) -> tuple[LeviWeight, ...]:
    return g.o_weights


@dataclass(frozen=True)
class Dimensions:
    g: int
    levi: int
    nilradical: int
    parabolic: int
    flag_variety: int
    o: int
    z: int

    def as_dict(self) -> dict[str, int]:
        return {"dim_g": self.g, "dim_l": self.levi, "dim_u": self.nilradical,
                "dim_q": self.parabolic, "dim_K/Q": self.flag_variety,
                "dim_o": self.o, "dim_Z": self.z}


def dims_report(g: Grading) -> Dimensions:
    sizes = {m: len(r) for m, r in g.pieces.items()}
    levi = g.rs.rank + sizes.get(0, 0)
    u = sum(n for m, n in sizes.items() if m > 0)
    o = sum(n for m, n in sizes.items() if m >= 2)
    # Z = K x_Q o fibres over K/Q, and dim K/Q = dim u
    return Dimensions(g.rs.rank + len(g.rs.roots), levi, u, levi + u, u, o, u + o)


MODEL_G2_DIAGRAM = (1, 0)


@lru_cache(maxsize=None)
def g2_model_grading() -> Grading:
    """Grading of G2 attached to the 8-dimensional nilpotent orbit."""
    return grading_from_diagram(build_root_system("G", 2), MODEL_G2_DIAGRAM)
