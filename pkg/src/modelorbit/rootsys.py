"""Exact root systems and Weyl groups of the simple Lie algebras.

Weights are integer tuples in fundamental-weight coordinates, so entry ``i``
of a weight is its pairing with the simple coroot ``h_{alpha_i}``.  The
Cartan matrix follows ``cartan[i][j] = alpha_i(h_{alpha_j})``; with this
convention simple root ``i`` in fundamental coordinates is row ``i``.

Simple roots are numbered as in Bourbaki.  For G2 index 0 is the short
root alpha and index 1 the long root beta, giving ``[[2, -1], [-3, 2]]``.
Nothing here uses floating point.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Iterable, Sequence

from .errors import InvalidType, NotDominant, Unsupported

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

MAX_RANK = 8
MAX_WEYL_ORDER = 10**6


@dataclass(frozen=True, order=True)
class Root:
    """A root with simple-root, fundamental-weight and coroot coordinates."""

    simple_coords: tuple[int, ...]
    fund_coords: Weight = field(compare=False)
    # coefficients of the coroot over the simple coroots
    coroot_coords: tuple[int, ...] = field(compare=False)

    @property
    def is_positive(self) -> bool:
        return all(c >= 0 for c in self.simple_coords)

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    def __neg__(self) -> Root:
        return Root(
            tuple(-c for c in self.simple_coords),
            tuple(-c for c in self.fund_coords),
            tuple(-c for c in self.coroot_coords),
        )


@dataclass(frozen=True)
class WeylElement:
    matrix: Matrix
    length: int
    sign: int
    # reduced word in simple reflections, applied right to left
    word: tuple[int, ...] = field(default=(), compare=False)

    @property
    def is_identity(self) -> bool:
        return self.length == 0


def _dynkin_data(type_label: str, rank: int) -> tuple[list[Fraction], set[tuple[int, int]]]:
    """Squared root lengths and Dynkin edges (0-based, Bourbaki numbering)."""
    n = rank
    chain = {(i, i + 1) for i in range(n - 1)}
    one, two = Fraction(1), Fraction(2)
    if type_label == "A" and 1 <= n <= MAX_RANK:
        return [two] * n, chain
    if type_label == "B" and 2 <= n <= MAX_RANK:
        return [two] * (n - 1) + [one], chain
    if type_label == "C" and 2 <= n <= MAX_RANK:
        return [one] * (n - 1) + [two], chain
    if type_label == "D" and 4 <= n <= MAX_RANK:
        return [two] * n, {(i, i + 1) for i in range(n - 2)} | {(n - 3, n - 1)}
    if type_label == "E" and 6 <= n <= 8:
        edges = {(0, 2), (1, 3)} | {(i, i + 1) for i in range(2, n - 1)}
        return [two] * n, edges
    if type_label == "F" and n == 4:
        return [two, two, one, one], chain
    if type_label == "G" and n == 2:
        return [one, Fraction(3)], chain
    raise InvalidType(f"no simple Lie algebra of type {type_label}{rank}")


def weyl_group_order(type_label: str, rank: int) -> int:
    n = rank
    if type_label == "A":
        return factorial(n + 1)
    if type_label in ("B", "C"):
        return 2**n * factorial(n)
    if type_label == "D":
        return 2 ** (n - 1) * factorial(n)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(type_label, n)]


def _invert(matrix: Sequence[Sequence[int]]) -> list[list[Fraction]]:
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def _det(matrix: Matrix) -> int:
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return 0
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, n):
            f = m[r][col] / m[col][col]
            m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return int(det)


@dataclass(frozen=True)
class RootSystem:
    type_label: str
    rank: int
    cartan: Matrix
    # squared lengths of the simple roots
    norms: tuple[Fraction, ...]
    positive_roots: tuple[Root, ...]

    @property
    def name(self) -> str:
        return f"{self.type_label}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Weight, ...]:
        return self.cartan

    @cached_property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)

    @cached_property
    def rho(self) -> Weight:
        """Half the sum of the positive roots (equal to the all-ones vector)."""
        total = [sum(r.fund_coords[i] for r in self.positive_roots) for i in range(self.rank)]
        assert all(t % 2 == 0 for t in total)
        return tuple(t // 2 for t in total)

    @cached_property
    def inverse_cartan(self) -> list[list[Fraction]]:
        return _invert(self.cartan)

    @cached_property
    def fund_gram(self) -> list[list[Fraction]]:
        """Invariant form on fundamental weights: (w_i, w_j)."""
        inv = self.inverse_cartan
        return [[inv[i][j] * self.norms[j] / 2 for j in range(self.rank)] for i in range(self.rank)]

    def inner(self, lam: Sequence[int], mu: Sequence[int]) -> Fraction:
        g = self.fund_gram
        return sum((lam[i] * g[i][j] * mu[j] for i in range(self.rank)
                    for j in range(self.rank) if lam[i] and mu[j]), Fraction(0))

    def to_simple_coords(self, lam: Sequence[int]) -> tuple[Fraction, ...]:
        inv = self.inverse_cartan
        return tuple(sum((lam[i] * inv[i][j] for i in range(self.rank)), Fraction(0))
                     for j in range(self.rank))

    def from_simple_coords(self, coeffs: Sequence[int]) -> Weight:
        return tuple(sum(c * self.cartan[i][j] for i, c in enumerate(coeffs))
                     for j in range(self.rank))

    def reflect(self, i: int, lam: Sequence[int]) -> Weight:
        """Simple reflection s_i(lam) = lam - lam(h_i) alpha_i."""
        c = lam[i]
        row = self.cartan[i]
        return tuple(x - c * a for x, a in zip(lam, row))

    def to_dominant(self, lam: Sequence[int], nodes: Iterable[int] | None = None) -> tuple[Weight, int]:
        """Conjugate ``lam`` into the dominant chamber of the subgroup generated
        by the simple reflections in ``nodes``.  Returns the weight and the
        number of reflections used."""
        idx = tuple(range(self.rank)) if nodes is None else tuple(nodes)
        lam = tuple(lam)
        steps = 0
        while True:
            i = next((i for i in idx if lam[i] < 0), None)
            if i is None:
                return lam, steps
            lam = self.reflect(i, lam)
            steps += 1

    def weyl_subgroup(self, nodes: Iterable[int]) -> tuple[WeylElement, ...]:
        """All elements of the parabolic subgroup generated by ``nodes``,
        sorted by (length, matrix)."""
        nodes = tuple(sorted(set(nodes)))
        n = self.rank
        ident: Matrix = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        gens = {}
        for i in nodes:
            # (s_i lam)_j = lam_j - lam_i * cartan[i][j]
            gens[i] = tuple(tuple(int(j == k) - int(k == i) * self.cartan[i][j] for k in range(n))
                            for j in range(n))
        seen: dict[Matrix, tuple[int, ...]] = {ident: ()}
        frontier = [ident]
        while frontier:
            nxt = []
            for m in frontier:
                word = seen[m]
                for i in nodes:
                    p = _matmul(gens[i], m)
                    if p not in seen:
                        seen[p] = (i,) + word
                        nxt.append(p)
            frontier = nxt
        elems = [WeylElement(m, len(w), (-1) ** len(w), w) for m, w in seen.items()]
        elems.sort(key=lambda e: (e.length, e.matrix))
        return tuple(elems)

    @cached_property
    def weyl(self) -> tuple[WeylElement, ...]:
        order = weyl_group_order(self.type_label, self.rank)
        if order > MAX_WEYL_ORDER:
            raise Unsupported(f"|W({self.name})| = {order} exceeds enumeration limit {MAX_WEYL_ORDER}")
        return self.weyl_subgroup(range(self.rank))

    @cached_property
    def longest_element(self) -> WeylElement:
        return max(self.weyl, key=lambda e: e.length)

    def is_dominant(self, lam: Sequence[int]) -> bool:
        return is_dominant(self, lam)


def build_root_system(type_label: str, rank: int) -> RootSystem:
    """Root data of the simple type ``type_label``/``rank`` by reflection closure."""
    type_label = str(type_label).upper()
    if not isinstance(rank, int) or rank < 1 or rank > MAX_RANK:
        raise InvalidType(f"rank must be an integer in 1..{MAX_RANK}, got {rank!r}")
    norms, edges = _dynkin_data(type_label, rank)
    n = rank
    form = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        form[i][i] = norms[i]
    for i, j in edges:
        form[i][j] = form[j][i] = -max(norms[i], norms[j]) / 2
    cartan_f = [[2 * form[i][j] / norms[j] for j in range(n)] for i in range(n)]
    cartan: Matrix = tuple(tuple(int(x) for x in row) for row in cartan_f)

    def make_root(coeffs: tuple[int, ...]) -> Root:
        fund = tuple(sum(c * cartan[i][j] for i, c in enumerate(coeffs)) for j in range(n))
        length = sum(coeffs[i] * coeffs[j] * form[i][j] for i in range(n) for j in range(n))
        cor = tuple(coeffs[i] * norms[i] / length for i in range(n))
        assert all(c.denominator == 1 for c in cor)
        return Root(coeffs, fund, tuple(int(c) for c in cor))

    simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    found = set(simple)
    queue = deque(simple)
    while queue:
        c = queue.popleft()
        fund = make_root(c).fund_coords
        for i in range(n):
            # s_i(gamma) = gamma - gamma(h_i) alpha_i
            image = tuple(x - fund[i] * int(j == i) for j, x in enumerate(c))
            if all(x >= 0 for x in image) and any(image) and image not in found:
                found.add(image)
                queue.append(image)
    positive = tuple(sorted((make_root(c) for c in found), key=lambda r: (r.height, r.simple_coords)))
    return RootSystem(type_label, n, cartan, tuple(norms), positive)


def parse_type(label: str) -> tuple[str, int]:
    """Split a label such as ``"G2"`` into ``("G", 2)``."""
    label = label.strip().upper()
    if len(label) < 2 or not label[1:].isdigit():
        raise InvalidType(f"cannot parse type label {label!r}")
    return label[0], int(label[1:])


def apply(w: WeylElement, lam: Sequence[int]) -> Weight:
    if len(lam) != len(w.matrix):
        raise ValueError("dimension mismatch")
    return tuple(sum(a * x for a, x in zip(row, lam)) for row in w.matrix)


def dot_action(rs: RootSystem, w: WeylElement, lam: Sequence[int]) -> Weight:
    """w(lam + rho) - rho."""
    shifted = apply(w, tuple(x + r for x, r in zip(lam, rs.rho)))
    return tuple(x - r for x, r in zip(shifted, rs.rho))


def is_dominant(rs: RootSystem, lam: Sequence[int]) -> bool:
    return all(x >= 0 for x in lam)


def require_dominant(rs: RootSystem, lam: Sequence[int]) -> Weight:
    lam = tuple(lam)
    if len(lam) != rs.rank:
        raise ValueError(f"weight {lam} has wrong length for {rs.name}")
    if not is_dominant(rs, lam):
        raise NotDominant(f"weight {lam} is not dominant")
    return lam


def coroot_pairing(lam: Sequence[int], root: Root) -> int:
    """lam(h_gamma) for the coroot of ``root``."""
    return sum(c * x for c, x in zip(root.coroot_coords, lam))


def weyl_dimension(rs: RootSystem, lam: Sequence[int]) -> int:
    lam = require_dominant(rs, lam)
    shifted = tuple(x + r for x, r in zip(lam, rs.rho))
    dim = Fraction(1)
    for root in rs.positive_roots:
        dim *= Fraction(coroot_pairing(shifted, root), coroot_pairing(rs.rho, root))
    assert dim.denominator == 1
    return int(dim)


def dual_weight(rs: RootSystem, lam: Sequence[int]) -> Weight:
    """Highest weight -w0(lam) of the dual representation."""
    lam = require_dominant(rs, lam)
    # -w0 lam is the dominant element of the orbit of -lam
    return rs.to_dominant(tuple(-x for x in lam))[0]


def weyl_orbit(rs: RootSystem, lam: Sequence[int], nodes: Iterable[int] | None = None) -> set[Weight]:
    idx = tuple(range(rs.rank)) if nodes is None else tuple(nodes)
    start = tuple(lam)
    orbit = {start}
    stack = [start]
    while stack:
        mu = stack.pop()
        for i in idx:
            nu = rs.reflect(i, mu)
            if nu not in orbit:
                orbit.add(nu)
                stack.append(nu)
    return orbit


def _dominant_weights_below(rs: RootSystem, lam: Weight, pos: Sequence[Root],
                            nodes: tuple[int, ...]) -> set[Weight]:
    # dominant weights below lam are connected by single positive-root steps
    found = {lam}
    stack = [lam]
    while stack:
        mu = stack.pop()
        for root in pos:
            nu = tuple(x - y for x, y in zip(mu, root.fund_coords))
            if all(nu[i] >= 0 for i in nodes) and nu not in found:
                found.add(nu)
                stack.append(nu)
    return found


def dominant_multiplicities(rs: RootSystem, lam: Sequence[int],
                            nodes: Iterable[int] | None = None) -> dict[Weight, int]:
    """Freudenthal's recursion for the dominant weights of the irreducible
    module with highest weight ``lam``.

    With ``nodes`` given, the module is the irreducible of the Levi subgroup
    whose semisimple part has those simple roots; weights stay in ambient
    coordinates and ``lam`` need only be dominant on ``nodes``.
    """
    idx = tuple(range(rs.rank)) if nodes is None else tuple(sorted(set(nodes)))
    lam = tuple(lam)
    if any(lam[i] < 0 for i in idx):
        raise NotDominant(f"weight {lam} is not dominant")
    node_set = set(idx)
    pos = [r for r in rs.positive_roots
           if all(c == 0 or i in node_set for i, c in enumerate(r.simple_coords))]
    dominant = _dominant_weights_below(rs, lam, pos, idx)

    def depth(mu: Weight) -> Fraction:
        return sum(rs.to_simple_coords(tuple(a - b for a, b in zip(lam, mu))))

    rho = rs.rho
    lam_rho = tuple(x + r for x, r in zip(lam, rho))
    top = rs.inner(lam_rho, lam_rho)
    mults: dict[Weight, int] = {lam: 1}
    for mu in sorted(dominant - {lam}, key=lambda m: (depth(m), m)):
        total = Fraction(0)
        for root in pos:
            k = 1
            while True:
                nu = tuple(x + k * y for x, y in zip(mu, root.fund_coords))
                nd, _ = rs.to_dominant(nu, idx)
                if nd not in dominant:
                    break
                total += mults[nd] * rs.inner(nu, root.fund_coords)
                k += 1
        mu_rho = tuple(x + r for x, r in zip(mu, rho))
        m = 2 * total / (top - rs.inner(mu_rho, mu_rho))
        assert m.denominator == 1 and m > 0, (lam, mu, m)
        mults[mu] = int(m)
    return mults


def freudenthal_multiplicities(rs: RootSystem, lam: Sequence[int],
                               nodes: Iterable[int] | None = None) -> Counter[Weight]:
    """Full weight multiset of the irreducible with highest weight ``lam``."""
    if nodes is None:
        lam = require_dominant(rs, lam)
    idx = None if nodes is None else tuple(nodes)
    out: Counter[Weight] = Counter()
    for mu, m in dominant_multiplicities(rs, lam, idx).items():
        for nu in weyl_orbit(rs, mu, idx):
            out[nu] = m
    return out
