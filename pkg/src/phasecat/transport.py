"""Moving structure-preserving functors through the quotient and GP constructions.

Functors here act entrywise on matrices through a ring homomorphism and
leave dimensions alone, which makes them strict monoidal and strictly
coproduct preserving by construction. What still needs checking is
whether they respect global phases and the chosen corner/beta data.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .errors import ChoiceNotPreserved, ConfigError, PhaseNotPreserved
from .gp import GPCategory, GPMorphism, GPObject
from .matcat import Matrix, injection
from .quotient import QuotCategory, QuotMorphism
from .scalars import Gaussian, PhaseGroup, ScalarRing, gaussian, prime_field, validate_phase_group


@dataclass(frozen=True)
class StructuredFunctor:
    """An entrywise functor Mat_src -> Mat_dst."""

    name: str
    src: ScalarRing
    dst: ScalarRing
    scalar_map: Callable = field(compare=False)
    strict_monoidal: bool = True
    preserves_coproducts: bool = True
    preserves_phases: bool | None = None

    def on_object(self, n: int) -> int:
        return n

    def on_scalar(self, x):
        return self.scalar_map(x)

    def on_matrix(self, m: Matrix) -> Matrix:
        return m.map(self.scalar_map, self.dst)

    __call__ = on_matrix

    def check_laws(self, samples: Sequence[tuple[Matrix, Matrix]]) -> dict[str, int]:
        """Failure counts for functoriality and the preservation flags on composable pairs."""
        fails = {"identity": 0, "composition": 0, "tensor": 0, "coproduct": 0}
        for g, f in samples:
            n = f.cols
            if self(Matrix.identity(self.src, n)) != Matrix.identity(self.dst, n):
                fails["identity"] += 1
            if self(g @ f) != self(g) @ self(f):
                fails["composition"] += 1
            if self(g.kron(f)) != self(g).kron(self(f)):
                fails["tensor"] += 1
            dims = (f.rows, g.rows)
            for k in range(2):
                if self(injection(self.src, dims, k)) != injection(self.dst, dims, k):
                    fails["coproduct"] += 1
        return fails


def _gaussian_to_prime(p: int, image_of_i: int):
    def fn(z: Gaussian):
        if z.d % p == 0:
            raise PhaseNotPreserved(f"{z} has a denominator divisible by {p}")
        return (z.a + image_of_i * z.b) * pow(z.d, -1, p) % p
    return fn


def identity_functor(ring: ScalarRing) -> StructuredFunctor:
    return StructuredFunctor("identity", ring, ring, lambda x: x)


def involution_functor(ring: ScalarRing) -> StructuredFunctor:
    """Entrywise involution; a functor because the ring is commutative."""
    return StructuredFunctor("ring-involution", ring, ring, ring.star)


def frobenius_functor(ring: ScalarRing) -> StructuredFunctor:
    if ring.kind != "prime":
        raise ConfigError("the Frobenius functor needs a prime field")
    p = ring.modulus
    return StructuredFunctor("frobenius", ring, ring, lambda x: pow(x, p, p))


def reduction_functor(p: int, image_of_i: int) -> StructuredFunctor:
    """Z[i] -> F_p sending i to a square root of -1 mod p."""
    if (image_of_i * image_of_i + 1) % p:
        raise ConfigError(f"{image_of_i} is not a square root of -1 mod {p}")
    return StructuredFunctor(f"reduce-mod-{p}", gaussian(), prime_field(p),
                             _gaussian_to_prime(p, image_of_i))


FUNCTORS: dict[str, Callable[[ScalarRing], StructuredFunctor]] = {
    "identity": identity_functor,
    "ring-involution": involution_functor,
    "frobenius": frobenius_functor,
}


def functor_by_name(name: str, ring: ScalarRing) -> StructuredFunctor:
    try:
        return FUNCTORS[name](ring)
    except KeyError:
        raise ConfigError(f"unknown functor {name!r}; known: {sorted(FUNCTORS)}") from None


# -- quotient ----------------------------------------------------------------------

@dataclass(frozen=True)
class QuotientFunctor:
    base: StructuredFunctor
    src: QuotCategory
    dst: QuotCategory

    def __call__(self, f: QuotMorphism) -> QuotMorphism:
        return self.dst.cls(self.base(f.rep))

    def well_defined_on(self, f: Matrix) -> bool:
        images = {self.dst.cls(self.base(f.scale(p))) for p in self.src.group}
        return len(images) == 1


def quotient_of_functor(functor: StructuredFunctor, src_phases: PhaseGroup,
                        dst_phases: PhaseGroup) -> QuotientFunctor:
    """F_P on the quotients; F must send every source phase into the target group."""
    for p in src_phases:
        try:
            image = functor.on_scalar(p)
        except PhaseNotPreserved:
            raise
        except Exception as exc:
            raise PhaseNotPreserved(f"{functor.name} is undefined on {p}") from exc
        if image not in dst_phases:
            raise PhaseNotPreserved(f"{functor.name} sends phase {src_phases.ring.fmt(p)} "
                                    f"to {dst_phases.ring.fmt(image)}, not a global phase")
    return QuotientFunctor(functor, QuotCategory(src_phases), QuotCategory(dst_phases))


# -- GP ----------------------------------------------------------------------------------

@dataclass(frozen=True)
class GPFunctor:
    base: StructuredFunctor
    quotient: QuotientFunctor
    src: GPCategory
    dst: GPCategory

    def on_object(self, a: GPObject) -> GPObject:
        return GPObject(self.base.on_object(a.dim))

    def __call__(self, f: GPMorphism) -> GPMorphism:
        return self.dst.normalize(self.quotient(self.src.as_base(f)),
                                  self.on_object(f.dom), self.on_object(f.cod))

    def law_failures(self, pairs: Sequence[tuple[GPMorphism, GPMorphism]]) -> dict[str, int]:
        """Counts of failed functor laws, strict monoidality and bracket commutation."""
        fails = {"identity": 0, "composition": 0, "tensor": 0, "bracket": 0}
        for g, f in pairs:
            if self(self.src.identity(f.dom)) != self.dst.identity(self.on_object(f.dom)):
                fails["identity"] += 1
            if g.dom == f.cod and self(g @ f) != self(g) @ self(f):
                fails["composition"] += 1
            if self(self.src.tensor(g, f)) != self.dst.tensor(self(g), self(f)):
                fails["tensor"] += 1
            for h in (f, g):
                if self.dst.bracket(self(h)) != self.quotient(self.src.bracket(h)):
                    fails["bracket"] += 1
        return fails


def gp_of_functor(functor: StructuredFunctor, src: GPCategory, dst: GPCategory,
                  max_dim: int = 3) -> GPFunctor:
    """GPa(F), after checking that F keeps the chosen coprojections, corners and beta."""
    quot = quotient_of_functor(functor, src.group, dst.group)
    if quot(src.as_base(src.beta())) != dst.as_base(dst.beta()):
        raise ChoiceNotPreserved(f"{functor.name} does not send the chosen beta to the chosen beta")
    for n, m in itertools.product(range(max_dim + 1), repeat=2):
        a, b = GPObject(n), GPObject(m)
        if functor(src.corner(a, b)) != dst.corner(a, b):
            raise ChoiceNotPreserved(f"corner map for ({n}, {m}) is not preserved")
        for k in range(2):
            if functor(injection(src.ring, (n, 1), k)) != injection(dst.ring, (n, 1), k):
                raise ChoiceNotPreserved(f"chosen coprojection of {n} + I is not preserved")
    return GPFunctor(functor, quot, src, dst)


# -- (co)reflection instances ---------------------------------------------------------

def all_matrices(ring: ScalarRing, rows: int, cols: int):
    for entries in itertools.product(ring.elements(), repeat=rows * cols):
        yield Matrix(ring, rows, cols, entries)


def projective_classes(ring: ScalarRing, group: PhaseGroup, n: int) -> int:
    """Number of classes of invertible n x n matrices modulo the phase group."""
    return len({QuotMorphism.of(m, group) for m in all_matrices(ring, n, n) if m.is_invertible()})


@dataclass
class AdjunctionReport:
    ring: str
    phases: list[str]
    max_dim: int
    unit_iso: bool = True
    counit_iso: bool = True
    natural: bool = True
    hom_counts: dict = field(default_factory=dict)
    projective_classes: int | None = None
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.unit_iso and self.counit_iso and self.natural


def adjunction_checks(ring: ScalarRing, group: PhaseGroup | None = None, max_dim: int = 2,
                      samples: int = 50, seed: int = 0) -> AdjunctionReport:
    """Check C ~ GP(C_P) and C_P ~ GP(C_P)_P on every hom-set up to ``max_dim``.

    Defaults to P = Aut(I), all units of the field, which is the reflection
    instance.
    """
    group = group or validate_phase_group(ring, ring.units())
    cat = GPCategory(group)
    report = AdjunctionReport(ring.name, group.labels(), max_dim)
    gp_phases = [u.block[0, 0] for u in cat.global_phases()]
    homs = {}
    for n, m in itertools.product(range(max_dim + 1), repeat=2):
        mats = list(all_matrices(ring, m, n))
        homs[(n, m)] = mats
        lifted = {cat.lift(f) for f in mats}
        # GP(C_P)(n^, m^) is every block, so the unit is a bijection iff lift is injective
        if len(lifted) != len(mats):
            report.unit_iso = False
            report.failures.append(f"unit not injective on {n}->{m}")
        classes = {QuotMorphism.of(f, group) for f in mats}
        gp_classes = {frozenset(g.block.scale(u) for u in gp_phases) for g in lifted}
        if len(classes) != len(gp_classes):
            report.counit_iso = False
            report.failures.append(f"counit not bijective on {n}->{m}")
        report.hom_counts[f"{n}->{m}"] = {"base": len(mats), "classes": len(classes)}
    rng = random.Random(seed)
    for _ in range(samples):
        n, m, k = (rng.randint(0, max_dim) for _ in range(3))
        f, g = rng.choice(homs[(n, m)]), rng.choice(homs[(m, k)])
        if cat.lift(g @ f) != cat.lift(g) @ cat.lift(f):
            report.natural = False
            report.failures.append(f"lift not functorial on {n}->{m}->{k}")
    if max_dim >= 2:
        report.projective_classes = projective_classes(ring, group, 2)
    return report
