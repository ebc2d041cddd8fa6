"""Phased coproducts and biproducts over any backend category.

A backend category supplies ``compose(g, f)``, ``identity(obj)``,
``mediate(coprojections, maps)`` and optionally ``solve_phase`` (a fast
phase solver), ``zero(cod, dom)`` and ``dagger(f)``. Both the matrix
quotient and the finite categories of :mod:`phasecat.fincat` qualify.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field, replace
from typing import Any, Sequence

from .errors import NoMediatingMap, NoPhase, NoZeroArrows
from .scalars import bounded_positive_witness


@dataclass(frozen=True)
class PhasedStructure:
    category: Any
    summands: tuple
    apex: Any
    coprojections: tuple
    phases: tuple
    projections: tuple | None = None

    @property
    def arity(self) -> int:
        return len(self.summands)


@dataclass
class CheckResult:
    """Outcome of a law check: ``holds``, ``refuted`` or ``unknown``."""

    result: str
    mode: str
    trials: int = 0
    counterexample: Any = None
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.result == "holds"


def copair(s: PhasedStructure, *maps):
    """A mediating map h with h . k_i = maps[i]."""
    cat = s.category
    h = cat.mediate(s.coprojections, list(maps))
    for k, f in zip(s.coprojections, maps):
        if cat.compose(h, k) != f:
            raise NoMediatingMap("backend returned a map that does not mediate")
    return h


def find_phase(s: PhasedStructure, h, h2):
    """An enumerated phase U with h2 = h . U."""
    cat = s.category
    solver = getattr(cat, "solve_phase", None)
    if solver is not None:
        u = solver(s.coprojections, h, h2)
        if u is not None and u in s.phases and cat.compose(h, u) == h2:
            return u
    for u in s.phases:
        if cat.compose(h, u) == h2:
            return u
    raise NoPhase("no enumerated phase relates the two mediating maps")


def is_phase(s: PhasedStructure, u) -> bool:
    cat = s.category
    return all(cat.compose(u, k) == k for k in s.coprojections)


def phase_inverse(s: PhasedStructure, u):
    """The inverse of a phase, searched for within the enumerator."""
    cat = s.category
    ident = cat.identity(s.apex)
    for v in s.phases:
        if cat.compose(u, v) == ident and cat.compose(v, u) == ident:
            return v
    raise NoPhase("phase has no inverse among the enumerated phases")


@dataclass(frozen=True)
class CanonicalIso:
    forward: Any
    inverse: Any


def mediating_iso(s1: PhasedStructure, s2: PhasedStructure) -> CanonicalIso:
    """The iso f: apex1 -> apex2 with f . k1_i = k2_i, and its verified inverse.

    With g the copair of the k1's over s2, g . f is a phase U of s1, so
    U^-1 . g is a left inverse of f; the right inverse is checked directly.
    """
    cat = s1.category
    f = copair(s1, *s2.coprojections)
    g = copair(s2, *s1.coprojections)
    u = find_phase(s1, cat.identity(s1.apex), cat.compose(g, f))
    inv = cat.compose(phase_inverse(s1, u), g)
    if cat.compose(inv, f) != cat.identity(s1.apex):
        raise NoMediatingMap("left inverse check failed")
    if cat.compose(f, inv) != cat.identity(s2.apex):
        raise NoMediatingMap("right inverse check failed")
    return CanonicalIso(f, inv)


# -- bracketings over the matrix quotient ---------------------------------------

def bracketings(leaves: Sequence[int]):
    """All full binary bracketings of the given leaf indices, as nested tuples."""
    leaves = tuple(leaves)
    if len(leaves) == 1:
        yield leaves[0]
        return
    for k in range(1, len(leaves)):
        for left in bracketings(leaves[:k]):
            for right in bracketings(leaves[k:]):
                yield (left, right)


def _leaves(tree) -> list[int]:
    if isinstance(tree, int):
        return [tree]
    return _leaves(tree[0]) + _leaves(tree[1])


def random_binary_structure(cat, a: int, b: int, rng: random.Random) -> PhasedStructure:
    """A phased coproduct of a and b in the matrix quotient with a scrambled apex.

    The apex basis is permuted and sheared, so coprojections are not the
    standard block injections.
    """
    from .matcat import Matrix, injection, permutation

    ring = cat.ring
    n = a + b
    perm = list(range(n))
    rng.shuffle(perm)
    mix = Matrix.identity(ring, n)
    if n > 1:
        data = list(mix.entries)
        for i in range(n):
            for j in range(i + 1, n):
                if rng.random() < 0.3:
                    data[i * n + j] = ring.coerce(rng.choice([1, -1, 2]))
        mix = Matrix(ring, n, n, data)
    scramble = permutation(ring, perm) @ mix
    kappas = (cat.cls(scramble @ injection(ring, (a, b), 0)),
              cat.cls(scramble @ injection(ring, (a, b), 1)))
    return PhasedStructure(cat, (a, b), n, kappas, tuple(cat.phases_for(kappas)))


def bracketed_structure(cat, dims: Sequence[int], tree, rng: random.Random) -> PhasedStructure:
    """The n-ary phased coproduct obtained by nesting binary ones along ``tree``.

    The coprojection of leaf i is the composite of the binary coprojections
    on the path from the root to i.
    """
    if isinstance(tree, int):
        d = dims[tree]
        ident = cat.identity(d)
        return PhasedStructure(cat, (d,), d, (ident,), (ident,))
    left = bracketed_structure(cat, dims, tree[0], rng)
    right = bracketed_structure(cat, dims, tree[1], rng)
    top = random_binary_structure(cat, left.apex, right.apex, rng)
    kappas = tuple(cat.compose(top.coprojections[0], k) for k in left.coprojections)
    kappas += tuple(cat.compose(top.coprojections[1], k) for k in right.coprojections)
    order = _leaves(tree)
    by_leaf = dict(zip(order, kappas))
    kappas = tuple(by_leaf[i] for i in sorted(by_leaf))
    return PhasedStructure(cat, tuple(dims[i] for i in sorted(by_leaf)), top.apex, kappas,
                           tuple(cat.phases_for(kappas)))


def assoc_iso(cat, dims: Sequence[int], tree1, tree2, seed: int = 0) -> CanonicalIso:
    """Coprojection-preserving iso between two bracketed apexes of dims."""
    rng = random.Random(seed)
    s1 = bracketed_structure(cat, dims, tree1, rng)
    s2 = bracketed_structure(cat, dims, tree2, rng)
    iso = mediating_iso(s1, s2)
    for k1, k2 in zip(s1.coprojections, s2.coprojections):
        if cat.compose(iso.forward, k1) != k2:
            raise NoMediatingMap("associativity iso moves a coprojection")
    return iso


# -- biproducts -------------------------------------------------------------------

def _projections(s: PhasedStructure, reverse: bool):
    cat = s.category
    out = []
    for i, summand in enumerate(s.summands):
        maps = [cat.identity(summand) if j == i else cat.zero(summand, other)
                for j, other in enumerate(s.summands)]
        out.append(cat.mediate(s.coprojections, maps, reverse=reverse))
    return tuple(out)


def biproduct_from_coproduct(s: PhasedStructure) -> PhasedStructure:
    """Attach the unique projections with pi_i . k_i = id and pi_i . k_j = 0.

    They are solved twice with opposite pivot orders; disagreement would mean
    the projections are not unique.
    """
    cat = s.category
    if not getattr(cat, "has_zero_arrows", False):
        raise NoZeroArrows(f"{cat!r} has no zero morphisms")
    first = _projections(s, reverse=False)
    second = _projections(s, reverse=True)
    if first != second:
        raise NoMediatingMap("projections are not unique")
    return replace(s, projections=first)


def biproduct_equations(s: PhasedStructure) -> dict[str, bool]:
    cat = s.category
    out = {}
    for i, (p, a) in enumerate(zip(s.projections, s.summands)):
        for j, (k, b) in enumerate(zip(s.coprojections, s.summands)):
            expected = cat.identity(a) if i == j else cat.zero(a, b)
            out[f"pi{i}.k{j}"] = cat.compose(p, k) == expected
    for u in s.phases:
        out.setdefault("phases preserve projections", True)
        if any(cat.compose(p, u) != p for p in s.projections):
            out["phases preserve projections"] = False
    return out


def dagger_equations(s: PhasedStructure) -> dict[str, bool]:
    """k_i^dagger = pi_i, and the coprojections are jointly isometric."""
    cat = s.category
    out = {}
    for i, (k, p) in enumerate(zip(s.coprojections, s.projections)):
        out[f"k{i}^dagger=pi{i}"] = cat.dagger(k) == p
        for j, (k2, b) in enumerate(zip(s.coprojections, s.summands)):
            prod = cat.compose(cat.dagger(k), k2)
            expected = cat.identity(s.summands[i]) if i == j else cat.zero(s.summands[i], b)
            out[f"k{i}^dagger.k{j}"] = prod == expected
    return out


# -- law checks ---------------------------------------------------------------------

def check_phase_generator(cat, enumerator=None, trials: int = 50, seed: int = 0,
                          max_dim: int = 3) -> CheckResult:
    """Is the unit 1 a phase generator of the matrix quotient?

    Phase monic: every fold [u v] separates the enumerated phases of 1+1
    (exhaustive; entries are distinct by position, so duplicates refute).
    Phase epic: sampled diagonal monos a (+) b separate the phases of A+B.
    """
    from .matcat import Matrix
    from .quotient import induced_phased_structure

    ring = cat.ring
    base = induced_phased_structure(cat, (1, 1))
    phases = list(enumerator) if enumerator is not None else list(base.phases)
    pairs = 0
    for u, v in itertools.product(cat.group.elements, repeat=2):
        fold = cat.cls(Matrix.row(ring, [u, v]))
        for (a, ua), (b, ub) in itertools.combinations(enumerate(phases), 2):
            pairs += 1
            if cat.compose(fold, ua) == cat.compose(fold, ub):
                return CheckResult("refuted", "exhaustive", pairs,
                                   {"clause": "phase monic", "fold": fold.rep.to_json(),
                                    "phase_positions": [a, b],
                                    "phases": [ua.rep.to_json(), ub.rep.to_json()]})
    rng = random.Random(seed)
    values = ring.small_elements(2)
    for t in range(trials):
        da, db = rng.randint(1, max_dim), rng.randint(1, max_dim)
        cols = []
        for d in (da, db):
            col = [rng.choice(values) for _ in range(d)]
            if not any(col):
                col[rng.randrange(d)] = ring.one
            cols.append(Matrix.column(ring, col))
        mono = cat.cls(cols[0].direct_sum(cols[1]))
        target = induced_phased_structure(cat, (da, db))
        seen = {}
        for u in target.phases:
            img = cat.compose(u, mono)
            if img in seen:
                return CheckResult("refuted", f"sampled({trials})", pairs + t + 1,
                                   {"clause": "phase epic", "mono": mono.rep.to_json(),
                                    "phases": [seen[img].rep.to_json(), u.rep.to_json()]})
            seen[img] = u
    return CheckResult("holds", f"exhaustive+sampled({trials})", pairs + trials)


def check_positive_free(s: PhasedStructure, bound: int = 1) -> CheckResult:
    """No phase U other than the identity has a representative q*U equal to G^dagger G."""
    cat = s.category
    ring = cat.ring
    ident = cat.identity(s.apex)
    modes = set()
    unknown = None
    trials = 0
    for u in s.phases:
        if u == ident:
            continue
        # start from the representative whose leading entry is 1
        lead = u.rep.entries[u.rep.first_nonzero()]
        base = u.rep.scale(ring.inv(lead))
        for q in cat.group.elements:
            trials += 1
            target = base.scale(q)
            verdict = bounded_positive_witness(ring, target, bound)
            modes.add(verdict.mode)
            if verdict.result == "refuted":
                g = verdict.witness
                return CheckResult("refuted", verdict.mode, trials,
                                   {"phase": target.to_json(), "witness": g.to_json(),
                                    "gram": (g.dagger() @ g).to_json()})
            if verdict.result == "unknown":
                unknown = verdict
    if unknown is not None:
        return CheckResult("unknown", unknown.mode, trials, None, {"reason": unknown.reason})
    mode = "analytic" if modes <= {"analytic"} else "+".join(sorted(modes))
    return CheckResult("holds", mode, trials)


def check_positive_cancellation(s: PhasedStructure, trials: int = 50, seed: int = 0) -> CheckResult:
    """Sampled positive diagonal p, q with p = q . U must satisfy p = q."""
    from .matcat import Matrix

    cat = s.category
    ring = cat.ring
    rng = random.Random(seed)
    values = ring.small_elements(2)
    premise_hits = 0
    for t in range(trials):
        blocks = []
        for d in s.summands:
            g = Matrix(ring, d, d, [rng.choice(values) for _ in range(d * d)])
            blocks.append(g.dagger() @ g)
        p_mat = blocks[0]
        for b in blocks[1:]:
            p_mat = p_mat.direct_sum(b)
        p = cat.cls(p_mat)
        for q in (p, cat.cls(p_mat.scale(ring.coerce(2)))):
            for u in s.phases:
                if cat.compose(q, u) == p:
                    premise_hits += 1
                    if q != p:
                        return CheckResult("refuted", f"sampled({trials})", t + 1,
                                           {"p": p.rep.to_json(), "q": q.rep.to_json(),
                                            "phase": u.rep.to_json()})
    return CheckResult("holds", f"sampled({trials})", trials, None, {"premise_hits": premise_hits})


def check_transitive(s: PhasedStructure, s2: PhasedStructure, diagonals: Sequence) -> CheckResult:
    """For each diagonal f: apex(s) -> apex(s2) and phase U, some phase V has f.U = V.f."""
    cat = s.category
    trials = 0
    for f in diagonals:
        for u in s.phases:
            trials += 1
            lhs = cat.compose(f, u)
            if not any(cat.compose(v, f) == lhs for v in s2.phases):
                return CheckResult("refuted", "sampled", trials, {"diagonal": f, "phase": u})
    return CheckResult("holds", f"sampled({len(diagonals)})", trials)


def initial_collapse(s: PhasedStructure) -> CanonicalIso:
    """For A + 0, the coprojection of A is invertible; returns it with its inverse."""
    cat = s.category
    k = s.coprojections[0]
    inv = copair(s, cat.identity(s.summands[0]), cat.zero(s.summands[0], s.summands[1]))
    if cat.compose(inv, k) != cat.identity(s.summands[0]) or cat.compose(k, inv) != cat.identity(s.apex):
        raise NoMediatingMap("coprojection into A + 0 is not invertible")
    return CanonicalIso(k, inv)
