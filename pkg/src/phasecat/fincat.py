"""Explicit finite categories and brute-force checks of universal properties.

Everything here is decided by exhaustive enumeration, which makes these
categories an independent oracle for the matrix-based constructions.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Hashable, Sequence

import numpy as np

from .errors import IllFormedCategory, IllFormedChoice, NoMediatingMap, SizeLimit
from .phased import CheckResult

MAX_MORPHISMS = 10_000
MAX_TRIPLES = 100_000_000
MAX_SET_SIZE = 4


class FiniteCategory:
    """A category given by explicit tables.

    Objects are indices ``0..n-1`` (with display labels); morphisms are
    indices with a domain, a codomain and optional payload data.
    Composition is a dict ``(g, f) -> g . f`` over composable pairs.
    """

    has_zero_arrows = False

    def __init__(self, labels: Sequence[Hashable], dom: Sequence[int], cod: Sequence[int],
                 identities: Sequence[int], table: dict[tuple[int, int], int],
                 data: Sequence[Hashable] | None = None, check: bool = True):
        if len(dom) > MAX_MORPHISMS:
            raise SizeLimit(f"{len(dom)} morphisms exceeds the limit of {MAX_MORPHISMS}")
        self.labels = list(labels)
        self.dom = list(dom)
        self.cod = list(cod)
        self.identities = list(identities)
        self.table = table
        self.data = list(data) if data is not None else list(range(len(dom)))
        self.homs: dict[tuple[int, int], list[int]] = {
            (a, b): [] for a in range(len(labels)) for b in range(len(labels))}
        for m, (a, b) in enumerate(zip(self.dom, self.cod)):
            self.homs[(a, b)].append(m)
        if check:
            self.verify()

    # -- basic interface ----------------------------------------------------
    @property
    def objects(self) -> range:
        return range(len(self.labels))

    @property
    def morphisms(self) -> range:
        return range(len(self.dom))

    def hom(self, a: int, b: int) -> list[int]:
        return self.homs[(a, b)]

    def identity(self, a: int) -> int:
        return self.identities[a]

    def compose(self, g: int, f: int) -> int:
        try:
            return self.table[(g, f)]
        except KeyError:
            raise IllFormedCategory(f"morphisms {g} and {f} are not composable") from None

    def is_iso(self, f: int) -> bool:
        return self.inverse(f) is not None

    def inverse(self, f: int) -> int | None:
        a, b = self.dom[f], self.cod[f]
        for g in self.hom(b, a):
            if self.compose(g, f) == self.identities[a] and self.compose(f, g) == self.identities[b]:
                return g
        return None

    def is_monic(self, f: int) -> bool:
        a = self.dom[f]
        for x in self.objects:
            images = [self.compose(f, g) for g in self.hom(x, a)]
            if len(set(images)) != len(images):
                return False
        return True

    def automorphisms(self, a: int) -> list[int]:
        return [f for f in self.hom(a, a) if self.is_iso(f)]

    def mediate(self, coprojections: Sequence[int], maps: Sequence[int], reverse: bool = False) -> int:
        """Some h with h . k_i = maps[i], found by search (first hit in hom order)."""
        apex = self.cod[coprojections[0]]
        target = self.cod[maps[0]]
        candidates = self.hom(apex, target)
        if reverse:
            candidates = list(reversed(candidates))
        for h in candidates:
            if all(self.compose(h, k) == f for k, f in zip(coprojections, maps)):
                return h
        raise NoMediatingMap("no mediating morphism exists")

    def triple_count(self) -> int:
        sizes = {k: len(v) for k, v in self.homs.items()}
        objs = self.objects
        return sum(sizes[(a, b)] * sizes[(b, c)] * sizes[(c, d)]
                   for a in objs for b in objs for c in objs for d in objs)

    def verify(self) -> None:
        """Exhaustive identity and associativity checks.

        The associativity loop is vectorised over the outer two morphisms of
        each triple; the middle morphism is iterated.
        """
        triples = self.triple_count()
        if triples > MAX_TRIPLES:
            raise SizeLimit(f"{triples} composable triples exceeds the limit of {MAX_TRIPLES}")
        for a, i in enumerate(self.identities):
            if self.dom[i] != a or self.cod[i] != a:
                raise IllFormedCategory(f"identity of object {a} has the wrong type")
        m = len(self.dom)
        table = np.full((m, m), -1, dtype=np.int32)
        for (g, f), h in self.table.items():
            if self.cod[f] != self.dom[g] or self.dom[h] != self.dom[f] or self.cod[h] != self.cod[g]:
                raise IllFormedCategory(f"composite {g}.{f} = {h} is mistyped")
            table[g, f] = h
        for f in self.morphisms:
            a, b = self.dom[f], self.cod[f]
            if table[f, self.identities[a]] != f or table[self.identities[b], f] != f:
                raise IllFormedCategory(f"identity law fails at morphism {f}")
        dom = np.asarray(self.dom, dtype=np.int32)
        cod = np.asarray(self.cod, dtype=np.int32)
        out_of = [np.flatnonzero(dom == a) for a in self.objects]
        into = [np.flatnonzero(cod == a) for a in self.objects]
        for b in self.objects:
            if (table[np.ix_(out_of[b], into[b])] < 0).any():
                raise IllFormedCategory(f"a composite through object {b} is missing")
        for g in self.morphisms:
            hs, fs = out_of[self.cod[g]], into[self.dom[g]]
            if len(hs) == 0 or len(fs) == 0:
                continue
            left = table[np.ix_(table[hs, g], fs)]
            right = table[np.ix_(hs, table[g, fs])]
            if not np.array_equal(left, right):
                i, j = np.argwhere(left != right)[0]
                raise IllFormedCategory(f"associativity fails at {hs[i]}.{g}.{fs[j]}")

    # -- serialization --------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "objects": [str(x) for x in self.labels],
            "morphisms": [{"dom": a, "cod": b} for a, b in zip(self.dom, self.cod)],
            "identities": self.identities,
            "compose": [[g, f, h] for (g, f), h in sorted(self.table.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> FiniteCategory:
        try:
            labels = data["objects"]
            dom = [int(m["dom"]) for m in data["morphisms"]]
            cod = [int(m["cod"]) for m in data["morphisms"]]
            identities = [int(i) for i in data["identities"]]
            table = {(int(g), int(f)): int(h) for g, f, h in data["compose"]}
        except (KeyError, TypeError, ValueError) as exc:
            raise IllFormedCategory(f"malformed category description: {exc}") from exc
        if len(identities) != len(labels):
            raise IllFormedCategory("one identity per object is required")
        return cls(labels, dom, cod, identities, table)

    @classmethod
    def load(cls, path) -> FiniteCategory:
        with open(path) as fh:
            return cls.from_json(json.load(fh))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({len(self.labels)} objects, {len(self.dom)} morphisms)"


def concrete_category(labels, homs: dict[tuple[int, int], list], compose_data: Callable,
                      identity_data: Callable, check: bool = True) -> FiniteCategory:
    """Build a table category from morphisms given as data with a composition rule."""
    dom, cod, data, index = [], [], [], {}
    for (a, b), maps in homs.items():
        for m in maps:
            index[(a, b, m)] = len(dom)
            dom.append(a)
            cod.append(b)
            data.append(m)
    if len(dom) > MAX_MORPHISMS:
        raise SizeLimit(f"{len(dom)} morphisms exceeds the limit of {MAX_MORPHISMS}")
    identities = [index[(a, a, identity_data(a))] for a in range(len(labels))]
    table = {}
    n = len(labels)
    for a, b, c in itertools.product(range(n), repeat=3):
        for f in homs.get((a, b), ()):
            fi = index[(a, b, f)]
            for g in homs.get((b, c), ()):
                table[(index[(b, c, g)], fi)] = index[(a, c, compose_data(g, f))]
    return FiniteCategory(labels, dom, cod, identities, table, data, check=check)


# -- G-sets ----------------------------------------------------------------------

def validate_group_table(table: Sequence[Sequence[int]]) -> list[list[int]]:
    """Check a Cayley table of a finite abelian group with identity 0."""
    n = len(table)
    t = [list(map(int, row)) for row in table]
    if n == 0 or any(len(row) != n for row in t):
        raise IllFormedCategory("group table must be square and non-empty")
    if any(not 0 <= x < n for row in t for x in row):
        raise IllFormedCategory("group table entries out of range")
    if any(t[0][g] != g or t[g][0] != g for g in range(n)):
        raise IllFormedCategory("element 0 must be the identity")
    for g, h in itertools.product(range(n), repeat=2):
        if t[g][h] != t[h][g]:
            raise IllFormedCategory("group must be abelian")
        if not any(t[g][x] == 0 for x in range(n)):
            raise IllFormedCategory(f"element {g} has no inverse")
    for g, h, k in itertools.product(range(n), repeat=3):
        if t[t[g][h]][k] != t[g][t[h][k]]:
            raise IllFormedCategory("group table is not associative")
    return t


def cyclic_group(n: int) -> list[list[int]]:
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def gset_actions(group: Sequence[Sequence[int]], n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All actions of the group on {0..n-1}, as tuples act[g] of permutations."""
    order = len(group)
    perms = list(itertools.permutations(range(n)))
    ident = tuple(range(n))
    out = []

    def extend(act):
        g = len(act)
        if g == order:
            out.append(tuple(act))
            return
        for p in perms:
            trial = act + [p]
            if all(group[x][y] >= len(trial)
                   or trial[group[x][y]] == tuple(trial[x][trial[y][i]] for i in range(n))
                   for x in range(len(trial)) for y in range(len(trial))):
                extend(trial)

    extend([ident])
    return out


def _equivariant_maps(group, a, b) -> list[tuple[int, ...]]:
    na, nb = len(a[0]), len(b[0])
    gs = range(len(group))
    return [f for f in itertools.product(range(nb), repeat=na)
            if all(f[a[g][x]] == b[g][f[x]] for g in gs for x in range(na))]


def disjoint_union_action(a, b):
    na = len(a[0])
    return tuple(tuple(pa) + tuple(na + y for y in pb) for pa, pb in zip(a, b))


class GSetCategory(FiniteCategory):
    """Finite G-sets (as explicit action tables) with equivariant maps."""

    def __init__(self, group, actions, check: bool = True):
        self.group = group
        self.actions = list(actions)
        homs = {(i, j): _equivariant_maps(group, a, b)
                for i, a in enumerate(self.actions) for j, b in enumerate(self.actions)}
        proto = concrete_category(
            [self._label(a) for a in self.actions], homs,
            lambda g, f: tuple(g[x] for x in f),
            lambda i: tuple(range(len(self.actions[i][0]))),
            check=False)
        super().__init__(proto.labels, proto.dom, proto.cod, proto.identities, proto.table,
                         proto.data, check=check)
        self._index = {(self.dom[m], self.cod[m], self.data[m]): m for m in self.morphisms}
        self.trivial = TrivialIsoChoice(self, {
            i: frozenset(self.morphism(i, i, tuple(a[g])) for g in range(len(group)))
            for i, a in enumerate(self.actions)})

    @staticmethod
    def _label(act) -> str:
        n = len(act[0])
        return f"{n}:" + "|".join("".join(map(str, p)) for p in act[1:]) if n else "0:empty"

    def morphism(self, a: int, b: int, data: tuple) -> int:
        return self._index[(a, b, tuple(data))]

    def object_of(self, act) -> int:
        return self.actions.index(tuple(map(tuple, act)))

    def size(self, a: int) -> int:
        return len(self.actions[a][0])

    def coproduct(self, a: int, b: int):
        """(apex, k_a, k_b) for the disjoint union, if the apex is an object here."""
        act = disjoint_union_action(self.actions[a], self.actions[b])
        if act not in self.actions:
            return None
        apex = self.actions.index(act)
        na, nb = self.size(a), self.size(b)
        return (apex, self.morphism(a, apex, tuple(range(na))),
                self.morphism(b, apex, tuple(na + y for y in range(nb))))

    def translation(self, a: int, g: int) -> int:
        return self.morphism(a, a, tuple(self.actions[a][g]))

    def sum_map(self, a: int, b: int, f: int, g: int) -> int:
        """f + g on the disjoint union of a with b (f, g endomorphisms)."""
        apex, _, _ = self.coproduct(a, b)
        na = self.size(a)
        return self.morphism(apex, apex, tuple(self.data[f]) + tuple(na + y for y in self.data[g]))


def build_gset_category(group: Sequence[Sequence[int]], max_set_size: int,
                        objects: Sequence | None = None, check: bool = True) -> GSetCategory:
    """All G-sets on at most ``max_set_size`` points (or the listed actions)."""
    if max_set_size > MAX_SET_SIZE:
        raise SizeLimit(f"set size {max_set_size} exceeds the limit of {MAX_SET_SIZE}")
    group = validate_group_table(group)
    if objects is None:
        actions = [a for n in range(max_set_size + 1) for a in gset_actions(group, n)]
    else:
        actions = [tuple(map(tuple, a)) for a in objects]
        if any(len(a[0]) > max_set_size for a in actions):
            raise SizeLimit("listed object exceeds the set size limit")
    cat = GSetCategory(group, actions, check=check)
    cat.trivial.validate()
    return cat


# -- trivial isomorphisms and quotients ----------------------------------------------

@dataclass
class TrivialIsoChoice:
    category: FiniteCategory
    choice: dict[int, frozenset]

    def validate(self) -> None:
        """Each T_A is a subgroup of Aut(A), and f . p_A = p_B . f is solvable."""
        c = self.category
        for a in c.objects:
            ts = self.choice.get(a)
            if not ts:
                raise IllFormedChoice(f"object {a} has no trivial isomorphisms")
            if c.identity(a) not in ts:
                raise IllFormedChoice(f"T_{a} does not contain the identity")
            for p in ts:
                if c.dom[p] != a or c.cod[p] != a:
                    raise IllFormedChoice(f"trivial iso {p} is not an endomorphism of {a}")
                inv = c.inverse(p)
                if inv is None or inv not in ts:
                    raise IllFormedChoice(f"trivial iso {p} has no inverse in T_{a}")
                for q in ts:
                    if c.compose(p, q) not in ts:
                        raise IllFormedChoice(f"T_{a} is not closed under composition")
        for f in c.morphisms:
            a, b = c.dom[f], c.cod[f]
            for pb in self.choice[b]:
                if not any(c.compose(pb, f) == c.compose(f, pa) for pa in self.choice[a]):
                    raise IllFormedChoice(f"trivial isos cannot be moved across morphism {f}")

    def is_transitive(self) -> bool:
        """Every f . p_A equals q . f for some q in T_B."""
        c = self.category
        return all(any(c.compose(f, pa) == c.compose(q, f) for q in self.choice[c.cod[f]])
                   for f in c.morphisms for pa in self.choice[c.dom[f]])


def trivial_choice(c: FiniteCategory) -> TrivialIsoChoice:
    return TrivialIsoChoice(c, {a: frozenset([c.identity(a)]) for a in c.objects})


class QuotientCategory(FiniteCategory):
    """C/~ with f ~ f . p for trivial isos p. ``class_of`` is the functor [-]."""

    def __init__(self, base: FiniteCategory, trivial: TrivialIsoChoice, labels, dom, cod,
                 identities, table, class_of, members):
        super().__init__(labels, dom, cod, identities, table, data=[tuple(m) for m in members])
        self.base = base
        self.trivial = trivial
        self.class_of = class_of
        self.members = members

    def cls(self, f: int) -> int:
        return self.class_of[f]

    def representative(self, q: int) -> int:
        return self.members[q][0]


def quotient_finite(c: FiniteCategory, trivial: TrivialIsoChoice) -> QuotientCategory:
    """The quotient category, with composition checked to be well defined."""
    trivial.validate()
    class_of: dict[int, int] = {}
    members: list[list[int]] = []
    dom, cod = [], []
    for f in c.morphisms:
        if f in class_of:
            continue
        orbit = sorted({c.compose(f, p) for p in trivial.choice[c.dom[f]]})
        idx = len(members)
        for g in orbit:
            if g in class_of:
                raise IllFormedChoice("trivial isomorphisms do not induce an equivalence relation")
            class_of[g] = idx
        members.append(orbit)
        dom.append(c.dom[f])
        cod.append(c.cod[f])
    table = {}
    for (g, f), h in c.table.items():
        key = (class_of[g], class_of[f])
        if key in table and table[key] != class_of[h]:
            raise IllFormedChoice(f"composition is not well defined on classes {key}")
        table[key] = class_of[h]
    identities = [class_of[i] for i in c.identities]
    return QuotientCategory(c, trivial, c.labels, dom, cod, identities, table, class_of, members)


# -- phased coproducts by exhaustive search ---------------------------------------------

@dataclass(frozen=True)
class PhasedCoproductWitness:
    summands: tuple[int, ...]
    apex: int
    coprojections: tuple[int, ...]
    phases: tuple[int, ...]

    def structure(self, category):
        from .phased import PhasedStructure

        return PhasedStructure(category, self.summands, self.apex, self.coprojections, self.phases)


@dataclass
class Rejection:
    apex: int
    coprojections: tuple[int, ...]
    clause: str
    counterexample: dict = field(default_factory=dict)


def coprojection_phases(c: FiniteCategory, apex: int, kappas: Sequence[int]) -> tuple[int, ...]:
    return tuple(u for u in c.hom(apex, apex) if all(c.compose(u, k) == k for k in kappas))


def classify_candidate(c: FiniteCategory, summands: Sequence[int], apex: int,
                       kappas: Sequence[int]) -> PhasedCoproductWitness | Rejection:
    """Decide both clauses for one candidate, grouping maps out of the apex by restriction."""
    phases = coprojection_phases(c, apex, kappas)
    for x in c.objects:
        groups: dict[tuple, list[int]] = {}
        for h in c.hom(apex, x):
            groups.setdefault(tuple(c.compose(h, k) for k in kappas), []).append(h)
        expected = math.prod(len(c.hom(s, x)) for s in summands)
        if len(groups) != expected:
            for maps in itertools.product(*(c.hom(s, x) for s in summands)):
                if tuple(maps) not in groups:
                    return Rejection(apex, tuple(kappas), "existence",
                                     {"target": x, "maps": list(maps)})
        for members in groups.values():
            for h in members:
                reachable = {c.compose(h, u) for u in phases}
                for h2 in members:
                    if h2 not in reachable:
                        return Rejection(apex, tuple(kappas), "uniqueness up to phase",
                                         {"target": x, "h": h, "h2": h2})
    return PhasedCoproductWitness(tuple(summands), apex, tuple(kappas), phases)


def verify_witness_naive(c: FiniteCategory, w: PhasedCoproductWitness) -> bool:
    """Direct transcription of both clauses as nested quantifier loops."""
    for u in w.phases:
        for k in w.coprojections:
            if c.compose(u, k) != k:
                return False
    for x in c.objects:
        outs = c.hom(w.apex, x)
        for maps in itertools.product(*(c.hom(s, x) for s in w.summands)):
            if not any(all(c.compose(h, k) == f for k, f in zip(w.coprojections, maps)) for h in outs):
                return False
        for h in outs:
            for h2 in outs:
                if all(c.compose(h, k) == c.compose(h2, k) for k in w.coprojections):
                    if not any(c.compose(h, u) == h2 for u in w.phases):
                        return False
    return True


def search_phased_coproducts(c: FiniteCategory, summands: Sequence[int]):
    """Classify every candidate (apex, coprojections); returns (witnesses, rejections)."""
    witnesses, rejections = [], []
    for apex in c.objects:
        for kappas in itertools.product(*(c.hom(s, apex) for s in summands)):
            verdict = classify_candidate(c, summands, apex, kappas)
            if isinstance(verdict, PhasedCoproductWitness):
                if not verify_witness_naive(c, verdict):
                    raise AssertionError("grouped and naive verification disagree")  # pragma: no cover
                witnesses.append(verdict)
            else:
                rejections.append(verdict)
    return witnesses, rejections


def enumerate_phased_coproducts(c: FiniteCategory, a: int, b: int) -> list[PhasedCoproductWitness]:
    return search_phased_coproducts(c, (a, b))[0]


def predicted_phases(q: QuotientCategory, a: int, b: int) -> set[int]:
    """Classes of s + t with s, t translations: the phases on the image of a disjoint union."""
    base = q.base
    return {q.cls(base.sum_map(a, b, s, t))
            for s in q.trivial.choice[a] for t in q.trivial.choice[b]}


def image_of_coproduct(q: QuotientCategory, a: int, b: int) -> PhasedCoproductWitness | Rejection:
    """The image of the disjoint union a + b under [-], checked as a phased coproduct."""
    apex, ka, kb = q.base.coproduct(a, b)
    return classify_candidate(q, (a, b), apex, (q.cls(ka), q.cls(kb)))


def check_ternary(q: FiniteCategory, outer: PhasedCoproductWitness,
                  inner: PhasedCoproductWitness) -> PhasedCoproductWitness | Rejection:
    """(A + B) + C, with inner = A + B and outer = inner.apex + C, as a ternary witness."""
    ka, kb = (q.compose(outer.coprojections[0], k) for k in inner.coprojections)
    summands = inner.summands + (outer.summands[1],)
    return classify_candidate(q, summands, outer.apex, (ka, kb, outer.coprojections[1]))


def is_diagonal(c: FiniteCategory, f: int, w1: PhasedCoproductWitness,
                w2: PhasedCoproductWitness) -> bool:
    for k1, k2 in zip(w1.coprojections, w2.coprojections):
        fk = c.compose(f, k1)
        if not any(c.compose(k2, g) == fk for g in c.hom(c.dom[k1], c.dom[k2])):
            return False
    return True


def check_transitive_phases(c: FiniteCategory, witnesses: Sequence[PhasedCoproductWitness]) -> CheckResult:
    """For all pairs of witnesses, every diagonal f and phase U admit V with f.U = V.f."""
    trials = 0
    for w1, w2 in itertools.product(witnesses, repeat=2):
        for f in c.hom(w1.apex, w2.apex):
            if not is_diagonal(c, f, w1, w2):
                continue
            for u in w1.phases:
                trials += 1
                fu = c.compose(f, u)
                if not any(c.compose(v, f) == fu for v in w2.phases):
                    return CheckResult("refuted", "exhaustive", trials,
                                       {"source": w1.apex, "target": w2.apex, "diagonal": f, "phase": u})
    return CheckResult("holds", "exhaustive", trials)
