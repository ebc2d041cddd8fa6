"""Exact involutive commutative semirings and finite global-phase groups.

Three scalar rings are supported:

* ``gaussian``: the Gaussian rationals Q[i], with either complex conjugation
  or the identity as involution;
* ``prime``: the prime field F_p (identity involution);
* ``integer``: the integers (identity involution).

Scalars are plain values (``Gaussian`` instances or Python ints); the
:class:`ScalarRing` carries every operation.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .errors import (
    DuplicateElement,
    MissingIdentity,
    NonInvertible,
    NonInvertibleElement,
    NotClosed,
    RingMismatch,
)


class Gaussian:
    """The Gaussian rational (a + b*i) / d, stored reduced with d > 0."""

    __slots__ = ("a", "b", "d")

    def __init__(self, a: int = 0, b: int = 0, d: int = 1):
        if d == 0:
            raise NonInvertible("zero denominator")
        if d < 0:
            a, b, d = -a, -b, -d
        g = gcd(gcd(a, b), d)
        if g != 1:
            a //= g
            b //= g
            d //= g
        self.a = a
        self.b = b
        self.d = d

    @classmethod
    def from_parts(cls, re_part, im_part=0) -> Gaussian:
        re_part = Fraction(re_part)
        im_part = Fraction(im_part)
        d = re_part.denominator * im_part.denominator // gcd(
            re_part.denominator, im_part.denominator
        )
        return cls(re_part.numerator * (d // re_part.denominator),
                   im_part.numerator * (d // im_part.denominator), d)

    @property
    def re(self) -> Fraction:
        return Fraction(self.a, self.d)

    @property
    def im(self) -> Fraction:
        return Fraction(self.b, self.d)

    def __add__(self, other: Gaussian) -> Gaussian:
        if self.d == other.d:
            return Gaussian(self.a + other.a, self.b + other.b, self.d)
        return Gaussian(self.a * other.d + other.a * self.d,
                        self.b * other.d + other.b * self.d,
                        self.d * other.d)

    def __sub__(self, other: Gaussian) -> Gaussian:
        return self + (-other)

    def __neg__(self) -> Gaussian:
        return Gaussian(-self.a, -self.b, self.d)

    def __mul__(self, other: Gaussian) -> Gaussian:
        a, b, c, e = self.a, self.b, other.a, other.b
        return Gaussian(a * c - b * e, a * e + b * c, self.d * other.d)

    def conjugate(self) -> Gaussian:
        return Gaussian(self.a, -self.b, self.d)

    def inverse(self) -> Gaussian:
        norm = self.a * self.a + self.b * self.b
        if norm == 0:
            raise NonInvertible("0 has no inverse")
        return Gaussian(self.d * self.a, -self.d * self.b, norm)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __eq__(self, other) -> bool:
        if isinstance(other, Gaussian):
            return self.a == other.a and self.b == other.b and self.d == other.d
        if isinstance(other, int):
            return self.b == 0 and self.d == 1 and self.a == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d))

    def __repr__(self) -> str:
        return f"Gaussian({format_gaussian(self)!r})"

    def __str__(self) -> str:
        return format_gaussian(self)


def _fmt_frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_gaussian(z: Gaussian) -> str:
    re_part, im_part = z.re, z.im
    if im_part == 0:
        return _fmt_frac(re_part)
    if im_part == 1:
        im_s = "i"
    elif im_part == -1:
        im_s = "-i"
    else:
        im_s = _fmt_frac(im_part) + "i"
    if re_part == 0:
        return im_s
    sign = "" if im_s.startswith("-") else "+"
    return _fmt_frac(re_part) + sign + im_s


_TERM = re.compile(r"([+-])?(\d+(?:/\d+)?)?(i)?")


def parse_gaussian(text: str) -> Gaussian:
    s = text.replace(" ", "").replace("*", "")
    if not s:
        raise ValueError("empty scalar literal")
    re_part = Fraction(0)
    im_part = Fraction(0)
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos or (m.group(2) is None and m.group(3) is None):
            raise ValueError(f"cannot parse Gaussian rational {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        if pos > 0 and m.group(1) is None:
            raise ValueError(f"cannot parse Gaussian rational {text!r}")
        magnitude = Fraction(m.group(2)) if m.group(2) is not None else Fraction(1)
        if m.group(3):
            im_part += sign * magnitude
        else:
            re_part += sign * magnitude
        pos = m.end()
    return Gaussian.from_parts(re_part, im_part)


@dataclass(frozen=True)
class ScalarRing:
    """An exact commutative ring with involution.

    ``kind`` is one of ``"gaussian"``, ``"prime"``, ``"integer"``;
    ``modulus`` is set for prime fields only; ``involution`` is
    ``"conjugation"`` (Gaussian only) or ``"identity"``.
    """

    kind: str
    modulus: int | None = None
    involution: str = "identity"
    _zero: object = field(init=False, repr=False, compare=False, hash=False)
    _one: object = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ("gaussian", "prime", "integer"):
            raise ValueError(f"unknown ring kind {self.kind!r}")
        if self.involution not in ("conjugation", "identity"):
            raise ValueError(f"unknown involution {self.involution!r}")
        if self.kind == "prime":
            p = self.modulus
            if p is None or p < 2 or any(p % q == 0 for q in range(2, int(p ** 0.5) + 1)):
                raise ValueError(f"modulus {p!r} is not prime")
        elif self.modulus is not None:
            raise ValueError("modulus only applies to prime fields")
        if self.involution == "conjugation" and self.kind != "gaussian":
            raise ValueError("conjugation is only available on the Gaussian rationals")
        if self.kind == "gaussian":
            zero, one = Gaussian(0), Gaussian(1)
        else:
            zero, one = 0, 1
        object.__setattr__(self, "_zero", zero)
        object.__setattr__(self, "_one", one)

    # -- constants and membership -------------------------------------
    @property
    def zero(self):
        return self._zero

    @property
    def one(self):
        return self._one

    @property
    def is_field(self) -> bool:
        return self.kind != "integer"

    @property
    def name(self) -> str:
        if self.kind == "prime":
            return f"F{self.modulus}"
        if self.kind == "gaussian":
            return f"Q[i]/{self.involution}"
        return "Z"

    def contains(self, a) -> bool:
        if self.kind == "gaussian":
            return isinstance(a, Gaussian)
        if isinstance(a, bool) or not isinstance(a, int):
            return False
        return self.kind == "integer" or 0 <= a < self.modulus

    def check(self, *xs) -> None:
        for a in xs:
            if not self.contains(a):
                raise RingMismatch(f"{a!r} is not an element of {self.name}")

    def coerce(self, value):
        """Map an int, Fraction, string or ring element into the ring."""
        if self.contains(value):
            return value
        if isinstance(value, str):
            return self.parse(value)
        if self.kind == "gaussian":
            if isinstance(value, (int, Fraction)):
                return Gaussian.from_parts(value)
        elif self.kind == "prime":
            if isinstance(value, int):
                return value % self.modulus
            if isinstance(value, Fraction):
                return self.mul(value.numerator % self.modulus,
                                self.inv(value.denominator % self.modulus))
        elif isinstance(value, int):
            return value
        raise RingMismatch(f"cannot coerce {value!r} into {self.name}")

    # -- arithmetic ----------------------------------------------------
    def add(self, a, b):
        if self.kind == "prime":
            return (a + b) % self.modulus
        return a + b

    def mul(self, a, b):
        if self.kind == "prime":
            return (a * b) % self.modulus
        return a * b

    def neg(self, a):
        if self.kind == "prime":
            return (-a) % self.modulus
        return -a

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def inv(self, a):
        if self.kind == "gaussian":
            return a.inverse()
        if self.kind == "prime":
            if a % self.modulus == 0:
                raise NonInvertible(f"0 has no inverse in {self.name}")
            return pow(a, -1, self.modulus)
        if a in (1, -1):
            return a
        raise NonInvertible(f"{a} is not a unit of Z")

    def is_unit(self, a) -> bool:
        try:
            self.inv(a)
        except NonInvertible:
            return False
        return True

    def star(self, a):
        """The involution a -> a^dagger."""
        if self.involution == "conjugation":
            return a.conjugate()
        return a

    def is_zero(self, a) -> bool:
        return not a

    def sum(self, xs: Iterable):
        total = self.zero
        for x in xs:
            total = self.add(total, x)
        return total

    # -- order, parsing, printing ----------------------------------------
    def key(self, a):
        """Total order used for canonical representatives."""
        if self.kind == "gaussian":
            return (Fraction(a.a, a.d), Fraction(a.b, a.d))
        return a

    def parse(self, text: str):
        text = str(text).strip()
        if self.kind == "gaussian":
            return parse_gaussian(text)
        frac = Fraction(text)
        if self.kind == "integer":
            if frac.denominator != 1:
                raise ValueError(f"{text!r} is not an integer")
            return frac.numerator
        return self.coerce(frac)

    def fmt(self, a) -> str:
        return str(a)

    def elements(self) -> list:
        """All elements of a finite ring (prime fields only)."""
        if self.kind != "prime":
            raise ValueError(f"{self.name} is infinite")
        return list(range(self.modulus))

    def units(self) -> list:
        if self.kind == "prime":
            return list(range(1, self.modulus))
        if self.kind == "integer":
            return [1, -1]
        return [Gaussian(1), Gaussian(0, 1), Gaussian(-1), Gaussian(0, -1)]

    def small_elements(self, height: int) -> list:
        """Elements of height <= ``height``, zero first, then by height.

        Gaussian: integer points a + b*i with max(|a|, |b|) <= height.
        Prime field: every residue (height is ignored once >= 1).
        """
        if height <= 0:
            return [self.zero]
        if self.kind == "prime":
            return list(range(self.modulus))
        if self.kind == "integer":
            out = [0]
            for h in range(1, height + 1):
                out += [h, -h]
            return out
        out = [Gaussian(0)]
        for h in range(1, height + 1):
            axes = [(h, 0), (-h, 0), (0, h), (0, -h)]
            rest = sorted(((a, b) for a in range(-h, h + 1) for b in range(-h, h + 1)
                           if max(abs(a), abs(b)) == h and (a, b) not in axes),
                          key=lambda ab: (-ab[0], -ab[1]))
            shell = axes + rest
            out += [Gaussian(a, b) for a, b in shell]
        return out


def gaussian(involution: str = "conjugation") -> ScalarRing:
    return ScalarRing("gaussian", None, involution)


def prime_field(p: int) -> ScalarRing:
    return ScalarRing("prime", p, "identity")


def integers() -> ScalarRing:
    return ScalarRing("integer", None, "identity")


_PRIME_DESCR = re.compile(r"^(?:prime(?:-field)?\((\d+)\)|F_?(\d+)|GF\((\d+)\))$")


def parse_ring(descriptor: str, involution: str | None = None) -> ScalarRing:
    """Parse ``"gaussian"``, ``"integer"``, ``"prime(3)"``, ``"F3"``..."""
    d = descriptor.strip()
    if d in ("gaussian", "gaussian-rational", "Q[i]"):
        return gaussian(involution or "conjugation")
    if d in ("integer", "Z"):
        return ScalarRing("integer", None, involution or "identity")
    m = _PRIME_DESCR.match(d)
    if m:
        p = int(next(g for g in m.groups() if g))
        return ScalarRing("prime", p, involution or "identity")
    raise ValueError(f"unknown ring descriptor {descriptor!r}")


def unitary_scalars(ring: ScalarRing, candidates: Iterable) -> list:
    """The candidates u with u^dagger * u = 1, in input order."""
    one = ring.one
    return [u for u in candidates if ring.mul(ring.star(u), u) == one]


@dataclass(frozen=True)
class PhaseGroup:
    """A validated finite group of invertible (central) scalars."""

    ring: ScalarRing
    elements: tuple
    unitary: tuple = field(compare=False)

    def __iter__(self):
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, a) -> bool:
        return a in self._index

    @property
    def _index(self) -> dict:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {a: k for k, a in enumerate(self.elements)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def index(self, a) -> int:
        return self._index[a]

    def inverse(self, a):
        return self.ring.inv(a)

    @property
    def all_unitary(self) -> bool:
        return all(self.unitary)

    def is_dagger_closed(self) -> bool:
        return all(self.ring.star(p) in self for p in self.elements)

    def multiplication_table(self) -> list[list[int]]:
        return [[self.index(self.ring.mul(p, q)) for q in self.elements]
                for p in self.elements]

    def labels(self) -> list[str]:
        return [self.ring.fmt(p) for p in self.elements]


def validate_phase_group(ring: ScalarRing, elems: Sequence) -> PhaseGroup:
    """Check that ``elems`` is a finite group of units and wrap it.

    Centrality is automatic since every supported ring is commutative.
    """
    values = [ring.coerce(e) for e in elems]
    seen = set()
    for v in values:
        if v in seen:
            raise DuplicateElement(f"{ring.fmt(v)} listed twice")
        seen.add(v)
    for v in values:
        if not ring.is_unit(v):
            raise NonInvertibleElement(f"{ring.fmt(v)} is not invertible in {ring.name}")
    if ring.one not in seen:
        raise MissingIdentity("phase group must contain 1")
    for p, q in itertools.product(values, repeat=2):
        pq = ring.mul(p, q)
        if pq not in seen:
            raise NotClosed(f"{ring.fmt(p)}*{ring.fmt(q)} = {ring.fmt(pq)} is missing")
    for p in values:
        if ring.inv(p) not in seen:
            raise NotClosed(f"inverse of {ring.fmt(p)} is missing")
    unitary = tuple(ring.mul(ring.star(v), v) == ring.one for v in values)
    return PhaseGroup(ring, tuple(values), unitary)


def trivial_group(ring: ScalarRing) -> PhaseGroup:
    return validate_phase_group(ring, [ring.one])


# -- positivity -------------------------------------------------------------

@dataclass(frozen=True)
class PositivityVerdict:
    """Outcome of a bounded search for G with G^dagger G = target.

    ``result`` is ``"holds"`` when the target is provably not positive,
    ``"refuted"`` when a verified witness was found, ``"unknown"`` when
    the bounded search was exhausted.
    """

    result: str
    witness: object = None
    mode: str = ""
    reason: str = ""


def _nonneg_rational(z: Gaussian) -> bool:
    return z.b == 0 and z.a >= 0


def bounded_positive_witness(ring: ScalarRing, target, bound: int = 1,
                             max_rows: int | None = None) -> PositivityVerdict:
    """Search for G (k x n, entries of height <= bound) with G^dagger G = target.

    Under complex conjugation the diagonal of G^dagger G consists of sums of
    squared moduli, so a target with a diagonal entry that is not a
    non-negative rational is refuted analytically.
    """
    from .matcat import Matrix

    if target.rows != target.cols:
        raise ValueError("positivity is only defined for endomorphisms")
    n = target.rows
    if ring != target.ring:
        raise RingMismatch("target matrix lives over a different ring")
    if ring.involution == "conjugation":
        for j in range(n):
            if not _nonneg_rational(target[j, j]):
                return PositivityVerdict(
                    "holds", None, "analytic",
                    f"diagonal entry {ring.fmt(target[j, j])} is not a non-negative rational")
        if target != target.dagger():
            return PositivityVerdict("holds", None, "analytic", "target is not self-adjoint")
    elif target != target.dagger():
        return PositivityVerdict("holds", None, "analytic", "target is not self-adjoint")

    if target == Matrix.identity(ring, n):
        return PositivityVerdict("refuted", Matrix.identity(ring, n), "trivial")
    if n == 0:
        return PositivityVerdict("refuted", Matrix.zero(ring, 0, 0), "trivial")

    values = ring.small_elements(bound)
    if max_rows is None:
        max_rows = n + 1
    for k in range(1, max_rows + 1):
        columns = _search_columns(ring, target, values, k)
        if columns is not None:
            g = Matrix(ring, k, n, tuple(columns[j][r] for r in range(k) for j in range(n)))
            if g.dagger() @ g == target:  # re-verify independently of the search
                return PositivityVerdict("refuted", g, f"bounded(h={bound})")
    return PositivityVerdict("unknown", None, f"bounded(h={bound})",
                             f"no witness with <= {max_rows} rows and height <= {bound}")


def _search_columns(ring, target, values, k):
    """Backtrack column by column so that column inner products match target."""
    n = target.rows
    star, mul, add = ring.star, ring.mul, ring.add

    def inner(x, y):
        total = ring.zero
        for s, t in zip(x, y):
            if s and t:
                total = add(total, mul(star(s), t))
        return total

    chosen: list = []

    def extend(j):
        if j == n:
            return True
        for vec in itertools.product(values, repeat=k):
            if inner(vec, vec) != target[j, j]:
                continue
            if all(inner(chosen[i], vec) == target[i, j] for i in range(j)):
                chosen.append(vec)
                if extend(j + 1):
                    return True
                chosen.pop()
        return False

    return list(chosen) if extend(0) else None
