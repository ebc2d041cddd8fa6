"""Quotient of a matrix category by a finite group of global phases.

Morphisms of the quotient are classes {p*f : p in P}. Each class is stored
as its lexicographically least member, so class equality is plain matrix
equality.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

from .errors import DaggerNotClosed, DimMismatch, NoMediatingMap, RingMismatch
from .matcat import Matrix, injection
from .scalars import PhaseGroup


def canonical_rep(f: Matrix, group: PhaseGroup) -> Matrix:
    """Least element of the orbit {p*f} in row-major lexicographic order.

    All orbit members share their zero pattern, so the first nonzero entry
    decides the comparison and the minimising p is unique.
    """
    if f.ring != group.ring:
        raise RingMismatch("matrix and phase group live over different rings")
    k = f.first_nonzero()
    if k is None or len(group) == 1:
        return f
    ring = group.ring
    x = f.entries[k]
    best = min(group.elements, key=lambda p: ring.key(ring.mul(p, x)))
    return f if best == ring.one else f.scale(best)


def orbit(f: Matrix, group: PhaseGroup) -> list[Matrix]:
    return [f.scale(p) for p in group.elements]


def eq_mod_phase(f: Matrix, g: Matrix, group: PhaseGroup) -> bool:
    if f.shape != g.shape:
        raise DimMismatch(f"{f.shape} vs {g.shape}")
    return canonical_rep(f, group) == canonical_rep(g, group)


def phase_between(f: Matrix, g: Matrix, group: PhaseGroup):
    """Some p in the group with f = p*g, or None."""
    if f.shape != g.shape:
        raise DimMismatch(f"{f.shape} vs {g.shape}")
    k = g.first_nonzero()
    if k is None:
        return group.ring.one if f.is_zero() else None
    ring = group.ring
    p = ring.mul(f.entries[k], ring.inv(g.entries[k]))
    if p in group and g.scale(p) == f:
        return p
    return None


@dataclass(frozen=True)
class QuotMorphism:
    """A morphism of the quotient, held as its canonical representative."""

    rep: Matrix
    group: PhaseGroup

    @classmethod
    def of(cls, f: Matrix, group: PhaseGroup) -> QuotMorphism:
        return cls(canonical_rep(f, group), group)

    @property
    def dom(self) -> int:
        return self.rep.cols

    @property
    def cod(self) -> int:
        return self.rep.rows

    def __matmul__(self, other: QuotMorphism) -> QuotMorphism:
        return quot_compose(self, other)

    def to_json(self) -> dict:
        return {"rep": self.rep.to_json(), "phases": self.group.labels()}

    def __repr__(self) -> str:
        return f"[{self.rep!r}]"


def _same_group(a: QuotMorphism, b: QuotMorphism) -> None:
    if a.group != b.group:
        raise RingMismatch("morphisms belong to quotients by different phase groups")


def quot_compose(g: QuotMorphism, f: QuotMorphism) -> QuotMorphism:
    _same_group(g, f)
    return QuotMorphism.of(g.rep @ f.rep, g.group)


def quot_tensor(f: QuotMorphism, g: QuotMorphism) -> QuotMorphism:
    _same_group(f, g)
    return QuotMorphism.of(f.rep.kron(g.rep), f.group)


def quot_dagger(f: QuotMorphism) -> QuotMorphism:
    if not f.group.is_dagger_closed():
        raise DaggerNotClosed("phase group is not closed under the involution")
    return QuotMorphism.of(f.rep.dagger(), f.group)


class QuotCategory:
    """Mat_S / P. Objects are dimensions; morphisms are :class:`QuotMorphism`."""

    def __init__(self, group: PhaseGroup):
        self.group = group
        self.ring = group.ring

    def __repr__(self) -> str:
        return f"QuotCategory({self.ring.name}, |P|={len(self.group)})"

    # -- category ------------------------------------------------------------
    def cls(self, f: Matrix) -> QuotMorphism:
        return QuotMorphism.of(f, self.group)

    def identity(self, n: int) -> QuotMorphism:
        return self.cls(Matrix.identity(self.ring, n))

    def zero(self, cod: int, dom: int) -> QuotMorphism:
        return QuotMorphism(Matrix.zero(self.ring, cod, dom), self.group)

    def compose(self, g: QuotMorphism, f: QuotMorphism) -> QuotMorphism:
        return quot_compose(g, f)

    def tensor(self, f: QuotMorphism, g: QuotMorphism) -> QuotMorphism:
        return quot_tensor(f, g)

    def dagger(self, f: QuotMorphism) -> QuotMorphism:
        return quot_dagger(f)

    def dom(self, f: QuotMorphism) -> int:
        return f.dom

    def cod(self, f: QuotMorphism) -> int:
        return f.cod

    def eq(self, f: QuotMorphism, g: QuotMorphism) -> bool:
        return f == g

    def scale(self, s, f: QuotMorphism) -> QuotMorphism:
        return self.cls(f.rep.scale(s))

    def is_iso(self, f: QuotMorphism) -> bool:
        return f.rep.is_invertible()

    def inverse(self, f: QuotMorphism) -> QuotMorphism:
        return self.cls(f.rep.inverse())

    @property
    def has_zero_arrows(self) -> bool:
        return True

    # -- phased coproduct support ---------------------------------------------
    def mediate(self, coprojections: Sequence[QuotMorphism], maps: Sequence[QuotMorphism],
                reverse: bool = False) -> QuotMorphism:
        """The copair h with h . k_i = f_i, as [f_1 | ... | f_n] . K^-1.

        ``reverse`` inverts K with the opposite pivot order; the result must
        not depend on it.
        """
        if len(coprojections) != len(maps):
            raise DimMismatch("one map per summand is required")
        for k, f in zip(coprojections, maps):
            if k.dom != f.dom:
                raise DimMismatch(f"map from {f.dom} does not match summand {k.dom}")
        if len({f.cod for f in maps}) > 1:
            raise DimMismatch("maps to copair must share a codomain")
        try:
            k_inv = _stack(self.ring, [k.rep for k in coprojections]).inverse(reverse_pivots=reverse)
        except Exception as exc:
            raise NoMediatingMap("coprojections do not span the apex") from exc
        if not maps:
            return self.zero(0, k_inv.rows)
        row = _stack(self.ring, [f.rep for f in maps])
        return self.cls(row @ k_inv)

    def solve_phase(self, coprojections: Sequence[QuotMorphism], h: QuotMorphism,
                    h2: QuotMorphism) -> QuotMorphism | None:
        """U = K diag(p_i) K^-1 with h2 = h . U, found by per-block scalar division."""
        ring = self.ring
        group = self.group
        stacked = _stack(ring, [k.rep for k in coprojections])
        dims = [k.dom for k in coprojections]
        a = h.rep @ stacked
        b = h2.rep @ stacked
        ratios = []
        offset = 0
        for d in dims:
            cols = range(offset, offset + d)
            block_a = a.submatrix(range(a.rows), cols)
            block_b = b.submatrix(range(b.rows), cols)
            offset += d
            if block_a.is_zero():
                if not block_b.is_zero():
                    return None
                ratios.append(None)
                continue
            r = phase_between(block_b, block_a, group)
            if r is None:
                return None
            ratios.append(r)
        known = [r for r in ratios if r is not None]
        q = known[0] if known else ring.one
        q_inv = ring.inv(q)
        scalars = [ring.one if r is None else ring.mul(r, q_inv) for r in ratios]
        return self.cls(_block_phase(ring, stacked, dims, scalars))

    def phases_for(self, coprojections: Sequence[QuotMorphism]) -> list[QuotMorphism]:
        """All K diag(1, p_2, ..., p_n) K^-1, one per tuple of phases."""
        ring = self.ring
        stacked = _stack(ring, [k.rep for k in coprojections])
        dims = [k.dom for k in coprojections]
        out = []
        for tail in itertools.product(self.group.elements, repeat=max(len(dims) - 1, 0)):
            u = self.cls(_block_phase(ring, stacked, dims, (ring.one,) + tail))
            if u not in out:
                out.append(u)
        return out


def _stack(ring, mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        return Matrix.zero(ring, 0, 0)
    out = mats[0]
    for m in mats[1:]:
        out = out.hstack(m)
    return out


def _block_phase(ring, stacked: Matrix, dims: Sequence[int], scalars: Sequence) -> Matrix:
    values = [s for s, d in zip(scalars, dims) for _ in range(d)]
    scaled = stacked @ Matrix.diag(ring, values)
    return scaled @ stacked.inverse()


def standard_coprojections(cat: QuotCategory, dims: Sequence[int]) -> list[QuotMorphism]:
    return [cat.cls(injection(cat.ring, dims, k)) for k in range(len(dims))]


def induced_phased_structure(cat: QuotCategory, dims: Sequence[int]):
    """The image of the coproduct n_1 + ... + n_k in the quotient.

    Its phases are the classes of diag(id, p_2 id, ..., p_k id).
    """
    from .phased import PhasedStructure

    dims = tuple(dims)
    kappas = standard_coprojections(cat, dims)
    projections = [cat.cls(k.rep.transpose()) for k in kappas]
    structure = PhasedStructure(cat, dims, sum(dims), tuple(kappas),
                                tuple(cat.phases_for(kappas)), tuple(projections))
    for u in structure.phases:
        for k in kappas:
            if cat.compose(u, k) != k:
                raise AssertionError("enumerated phase moves a coprojection")  # pragma: no cover
    return structure


def brute_force_eq(f: Matrix, g: Matrix, group: PhaseGroup) -> bool:
    """Reference check: is f in the orbit of g?"""
    return any(g.scale(p) == f for p in group.elements)
