"""The law catalogue run by :mod:`phasecat.harness`.

Sampled laws draw JSON-serializable cases (a seed, a list of dims and an
entry height) and rebuild every matrix from the case, so a stored
counterexample replays exactly. Exhaustive and bounded laws return a
single :class:`~phasecat.phased.CheckResult`.
"""
from __future__ import annotations

import itertools
import random
import threading
from dataclasses import dataclass, field
from typing import Callable

from .errors import ChoiceNotPreserved, PhasecatError, PreconditionFailed
from .gp import GPCategory, GPMorphism, GPObject, gset_gp_backend
from .harness import LawSuite, SuiteConfig, Verdict, gen_gp_morphism, gen_matrix, shrink_case
from .matcat import Matrix, compact
from .phased import (CheckResult, assoc_iso, biproduct_equations, biproduct_from_coproduct,
                     bracketings, check_phase_generator, check_positive_cancellation,
                     check_positive_free, copair, dagger_equations, find_phase, initial_collapse,
                     mediating_iso, random_binary_structure)
from .quotient import QuotCategory, brute_force_eq, canonical_rep, eq_mod_phase, induced_phased_structure
from .scalars import parse_ring, validate_phase_group
from .transport import adjunction_checks, functor_by_name, gp_of_functor


class Context:
    """Backends shared by every law of one run; expensive pieces are built once."""

    def __init__(self, config: SuiteConfig):
        self.config = config
        self.ring = parse_ring(config.ring, config.involution)
        self.group = validate_phase_group(self.ring, config.phases)
        self.quot = QuotCategory(self.group)
        self.gp = GPCategory(self.group, config.beta_phase)
        self._lock = threading.RLock()
        self._cache: dict = {}

    @classmethod
    def from_config(cls, config: SuiteConfig) -> Context:
        return cls(config)

    def cached(self, key: str, build: Callable):
        with self._lock:
            if key not in self._cache:
                self._cache[key] = build()
            return self._cache[key]

    # -- shared derived data --------------------------------------------------------
    def positivity(self) -> CheckResult:
        return self.cached("positivity", lambda: check_positive_free(
            induced_phased_structure(self.quot, (1, 1)), self.config.positivity_bound))

    def dagger_precondition(self) -> str | None:
        if not self.group.is_dagger_closed():
            return "phase group is not closed under the involution"
        verdict = self.positivity()
        if not verdict.ok:
            return f"phased biproducts are not positive-free ({verdict.result})"
        return None

    def gset_backend(self):
        def build():
            from .fincat import cyclic_group
            return gset_gp_backend(cyclic_group(self.config.gset_order))
        return self.cached("gset-gp", build)

    def gset_oracle(self):
        def build():
            from .fincat import build_gset_category, cyclic_group, disjoint_union_action, gset_actions
            from .fincat import MAX_SET_SIZE, quotient_finite

            group = cyclic_group(self.config.gset_order)
            base = [a for n in range(self.config.max_set_size + 1) for a in gset_actions(group, n)]
            objs = list(base)
            for a, b in itertools.combinations_with_replacement(base, 2):
                u = disjoint_union_action(a, b)
                if len(u[0]) <= MAX_SET_SIZE and u not in objs:
                    objs.append(u)
            cat = build_gset_category(group, max(len(a[0]) for a in objs), objects=objs)
            return cat, quotient_finite(cat, cat.trivial), [cat.object_of(a) for a in base]
        return self.cached("gset-oracle", build)

    def functor(self):
        return self.cached("functor", lambda: functor_by_name(self.config.functor, self.ring))

    def gp_functor(self):
        return self.cached("gp-functor", lambda: gp_of_functor(self.functor(), self.gp, self.gp))

    def mat(self, case: dict, tag: str, rows: int, cols: int) -> Matrix:
        return gen_matrix(f"{case['seed']}:{tag}", rows, cols, case["height"], self.ring)

    def gp_hom(self, case: dict, tag: str, dom: int, cod: int) -> GPMorphism:
        return gen_gp_morphism(f"{case['seed']}:{tag}", dom, cod, case["height"], self.ring)

    def case_rng(self, case: dict, tag: str = "") -> random.Random:
        return random.Random(f"{case['seed']}:{tag}")


@dataclass(frozen=True)
class Law:
    id: str
    backend: str
    kind: str  # sampled | checked | exhaustive | bounded
    check: Callable
    arity: int = 0
    dim_cap: int | None = None
    min_dim: int = 0
    applies: Callable[[SuiteConfig], bool] = field(default=lambda config: True)
    precondition: Callable[[Context], str | None] | None = None

    def mode(self, config: SuiteConfig) -> str:
        if self.kind in ("sampled", "checked"):
            return f"sampled({config.trials})"
        if self.kind == "bounded":
            return f"bounded({config.positivity_bound})"
        return "exhaustive"

    def dims_bound(self, config: SuiteConfig) -> int:
        return config.dims_max if self.dim_cap is None else min(self.dim_cap, config.dims_max)

    def make_case(self, config: SuiteConfig, rng: random.Random) -> dict:
        high = max(self.dims_bound(config), self.min_dim)
        return {"seed": rng.randrange(2 ** 32),
                "dims": [rng.randint(self.min_dim, high) for _ in range(self.arity)],
                "height": config.height}

    def failure(self, ctx: Context, case: dict) -> dict | None:
        """None if the case passes, else a JSON-ready description."""
        try:
            return self.check(ctx, case)
        except PhasecatError as exc:
            return {"error": type(exc).__name__, "message": str(exc)}

    def run(self, ctx: Context, suite: LawSuite) -> Verdict:
        config = ctx.config
        verdict = Verdict(self.id, config.backend, suite.mode, "pass", 0, suite.seed)
        if self.precondition is not None:
            reason = self.precondition(ctx)
            if reason:
                verdict.result, verdict.notes = "unknown", {"reason": reason}
                return verdict
        if self.kind != "sampled":
            try:
                res = self.check(ctx, suite)
            except PhasecatError as exc:
                verdict.result = "fail"
                verdict.counterexample = {"error": type(exc).__name__, "message": str(exc)}
                return verdict
            verdict.result = {"holds": "pass", "refuted": "fail"}.get(res.result, "unknown")
            verdict.trials, verdict.counterexample = res.trials, res.counterexample
            verdict.mode = f"{verdict.mode}:{res.mode}" if res.mode not in verdict.mode else verdict.mode
            verdict.notes = dict(res.notes)
            return verdict
        rng = random.Random(f"{self.id}:{suite.seed}")
        for t in range(suite.trials):
            case = self.make_case(config, rng)
            if self.failure(ctx, case) is None:
                continue
            small = shrink_case(case, lambda c: self.failure(ctx, c) is not None, self.min_dim)
            verdict.result, verdict.trials = "fail", t + 1
            verdict.counterexample = {"case": small, "detail": self.failure(ctx, small)}
            return verdict
        verdict.trials = suite.trials
        return verdict


def replay(law_id: str, ctx: Context, counterexample: dict) -> bool:
    """True if a stored sampled counterexample still fails."""
    return LAWS[law_id].failure(ctx, counterexample["case"]) is not None


def _mat_json(m) -> list:
    rep = m.rep if hasattr(m, "rep") else getattr(m, "block", m)
    return [[rep.ring.fmt(x) for x in row] for row in rep.tolist()]


def _bad(flags: dict[str, bool]) -> dict | None:
    failed = sorted(k for k, ok in flags.items() if not ok)
    return {"failed": failed} if failed else None


# -- quotient and phased coproducts ----------------------------------------------------

def quotient_soundness(ctx: Context, case: dict):
    rows, cols = case["dims"]
    rng = ctx.case_rng(case)
    f = ctx.mat(case, "f", rows, cols)
    g = f.scale(rng.choice(ctx.group.elements)) if rng.random() < 0.5 else ctx.mat(case, "g", rows, cols)
    rep = canonical_rep(f, ctx.group)
    flags = {
        "agrees with orbit scan": eq_mod_phase(f, g, ctx.group) == brute_force_eq(f, g, ctx.group),
        "symmetric": eq_mod_phase(f, g, ctx.group) == eq_mod_phase(g, f, ctx.group),
        "idempotent": canonical_rep(rep, ctx.group) == rep,
        "in orbit": brute_force_eq(rep, f, ctx.group),
    }
    out = _bad(flags)
    if out:
        out.update(f=_mat_json(f), g=_mat_json(g))
    return out


def phased_copair(ctx: Context, case: dict):
    a, b, c = case["dims"]
    q = ctx.quot
    rng = ctx.case_rng(case, "structure")
    s = random_binary_structure(q, a, b, rng)
    f, g = q.cls(ctx.mat(case, "f", c, a)), q.cls(ctx.mat(case, "g", c, b))
    h = copair(s, f, g)
    u = rng.choice(s.phases)
    h2 = q.compose(h, u)
    found = find_phase(s, h, h2)
    flags = {
        "phase keeps k_A": q.compose(h2, s.coprojections[0]) == f,
        "phase keeps k_B": q.compose(h2, s.coprojections[1]) == g,
        "found phase relates": q.compose(h, found) == h2,
    }
    return _bad(flags)


def phased_assoc(ctx: Context, case: dict):
    dims = case["dims"][:2 + case["seed"] % 3]
    q = ctx.quot
    leaves = list(range(len(dims)))
    trees = list(bracketings(leaves))
    for t1, t2 in itertools.product(trees, repeat=2):
        assoc_iso(q, dims, t1, t2, case["seed"])
    rng = ctx.case_rng(case)
    s1 = random_binary_structure(q, dims[0], dims[1], rng)
    s2 = random_binary_structure(q, dims[0], dims[1], rng)
    mediating_iso(s1, s2)
    return None


def phased_biproduct(ctx: Context, case: dict):
    a, b = case["dims"]
    q = ctx.quot
    s = biproduct_from_coproduct(random_binary_structure(q, a, b, ctx.case_rng(case)))
    flags = dict(biproduct_equations(s))
    if ctx.group.is_dagger_closed():
        std = biproduct_from_coproduct(induced_phased_structure(q, (a, b)))
        flags.update({f"dagger {k}": v for k, v in dagger_equations(std).items()})
    collapse = initial_collapse(induced_phased_structure(q, (a, 0)))
    flags["A + 0 collapses"] = q.compose(collapse.inverse, collapse.forward) == q.identity(a)
    return _bad(flags)


def positive_free(ctx: Context, suite: LawSuite) -> CheckResult:
    return ctx.positivity()


def phase_generator(ctx: Context, suite: LawSuite) -> CheckResult:
    return check_phase_generator(ctx.quot, trials=suite.trials, seed=suite.seed,
                                 max_dim=max(1, min(3, ctx.config.dims_max)))


def positive_cancellation(ctx: Context, suite: LawSuite) -> CheckResult:
    s = induced_phased_structure(ctx.quot, (1, 1))
    return check_positive_cancellation(s, trials=suite.trials, seed=suite.seed)


# -- GP -------------------------------------------------------------------------------

def gp_coproduct(ctx: Context, case: dict):
    a, b, c = case["dims"]
    gp = ctx.gp
    f, g = ctx.gp_hom(case, "f", a, c), ctx.gp_hom(case, "g", b, c)
    direct = gp.copair(f, g)
    via_phases = gp.copair_via_phases(f, g, ctx.case_rng(case, "phase"))
    data = gp.coproduct(f.dom, g.dom)
    (ka, kb), (ra, rb) = data.kappas, data.retractions
    x, y = ctx.gp_hom(case, "x", b, a), ctx.gp_hom(case, "y", b, a)
    flags = {
        "paths equal": direct == via_phases,
        "h.k_A = f": direct @ ka == f,
        "h.k_B = g": direct @ kb == g,
        "r_A.k_A = id": ra @ ka == gp.identity(f.dom),
        "r_B.k_B = id": rb @ kb == gp.identity(g.dom),
        "k_A monic": (ka @ x != ka @ y) or x == y,
    }
    out = _bad(flags)
    if out:
        out.update(direct=_mat_json(direct), via_phases=_mat_json(via_phases))
    return out


def gp_monoidal(ctx: Context, case: dict):
    gp = ctx.gp
    a, b, c, d = (GPObject(n) for n in case["dims"])
    i = gp.unit
    ident = gp.identity
    t = gp.tensor
    alpha = gp.associator
    pent_lhs = alpha(a, b, gp.tensor_obj(c, d)) @ alpha(gp.tensor_obj(a, b), c, d)
    pent_rhs = (t(ident(a), alpha(b, c, d)) @ alpha(a, gp.tensor_obj(b, c), d)
                @ t(alpha(a, b, c), ident(d)))
    f = ctx.gp_hom(case, "f", a.dim, b.dim)
    g = ctx.gp_hom(case, "g", b.dim, c.dim)
    h = ctx.gp_hom(case, "h", c.dim, d.dim)
    beta = gp.beta()
    flags = {
        "pentagon": pent_lhs == pent_rhs,
        "triangle": t(ident(a), gp.left_unitor(b)) @ alpha(a, i, b) == t(gp.right_unitor(a), ident(b)),
        "rho from beta": t(gp.right_unitor(a), ident(i)) == t(ident(a), beta) @ alpha(a, i, i),
        "lambda from beta": t(ident(i), gp.left_unitor(a)) == t(beta, ident(a)) @ gp.associator_inverse(i, i, a),
        "lambda_I = rho_I": gp.left_unitor(i) == gp.right_unitor(i),
        "alpha invertible": gp.associator_inverse(a, b, c) @ alpha(a, b, c) == ident(gp.tensor_obj(gp.tensor_obj(a, b), c)),
        "alpha natural": alpha(b, c, d) @ t(t(f, g), h) == t(f, t(g, h)) @ alpha(a, b, c),
        "rho natural": gp.right_unitor(b) @ t(f, ident(i)) == f @ gp.right_unitor(a),
        "lambda natural": gp.left_unitor(b) @ t(ident(i), f) == f @ gp.left_unitor(a),
        "tensor closed form": t(f, g) == gp.tensor_closed_form(f, g),
        "tensor via copair": t(f, g) == gp.tensor_via_copair(f, g),
        "interchange": t(g @ f, h @ g) == t(g, h) @ t(f, g),
    }
    return _bad(flags)


def gp_hexagon(ctx: Context, case: dict):
    gp = ctx.gp
    a, b, c = (GPObject(n) for n in case["dims"])
    t, ident, alpha, alpha_inv, sigma = (gp.tensor, gp.identity, gp.associator,
                                         gp.associator_inverse, gp.braiding)
    ab, bc = gp.tensor_obj(a, b), gp.tensor_obj(b, c)
    hex1 = (alpha(b, c, a) @ sigma(a, bc) @ alpha(a, b, c)
            == t(ident(b), sigma(a, c)) @ alpha(b, a, c) @ t(sigma(a, b), ident(c)))
    hex2 = (alpha_inv(c, a, b) @ sigma(ab, c) @ alpha_inv(a, b, c)
            == t(sigma(a, c), ident(b)) @ alpha_inv(a, c, b) @ t(ident(a), sigma(b, c)))
    f, g = ctx.gp_hom(case, "f", a.dim, b.dim), ctx.gp_hom(case, "g", b.dim, c.dim)
    flags = {
        "hexagon": hex1,
        "inverse hexagon": hex2,
        "symmetric": sigma(b, a) @ sigma(a, b) == ident(ab),
        "sigma natural": sigma(b, c) @ t(f, g) == t(g, f) @ sigma(a, b),
        "sigma is the swap": sigma(a, b).block == _swap(gp, a.dim, b.dim),
    }
    return _bad(flags)


def _swap(gp, n, m):
    from .matcat import braiding
    return braiding(gp.ring, n, m)


def gp_global_phases(ctx: Context, suite: LawSuite) -> CheckResult:
    gp = ctx.gp
    ring = ctx.ring
    elems = ctx.group.elements
    as_gp = {p: gp.scalar(p) for p in elems}
    enumerated = gp.global_phases()
    trials = 0
    if set(enumerated) != set(as_gp.values()) or len(enumerated) != len(elems):
        return CheckResult("refuted", "exhaustive", 0, {"clause": "P_GP is not the image of P",
                                                        "enumerated": [_mat_json(u) for u in enumerated]})
    for p, q in itertools.product(elems, repeat=2):
        trials += 1
        if as_gp[p] @ as_gp[q] != as_gp[ring.mul(p, q)]:
            return CheckResult("refuted", "exhaustive", trials,
                               {"clause": "not a homomorphism", "p": ring.fmt(p), "q": ring.fmt(q)})
    rng = random.Random(suite.seed)
    for n in range(ctx.config.dims_max + 1):
        a = GPObject(n)
        for u in gp.phases_of(a):
            trials += 1
            v = gp.phase_as_global(u)
            if gp.scalar_action(v, gp.identity(a)) != u:
                return CheckResult("refuted", "exhaustive", trials,
                                   {"clause": "phase is not scalar . id", "dim": n, "phase": _mat_json(u)})
        f = gen_gp_morphism(f"{suite.seed}:{n}", n, max(n, 1), ctx.config.height, ring)
        p = rng.choice(elems)
        trials += 1
        if gp.scalar_action(as_gp[p], f).block != f.block.scale(p):
            return CheckResult("refuted", "exhaustive", trials,
                               {"clause": "scalar action is not scaling", "dim": n})
    return CheckResult("holds", "exhaustive", trials)


def gp_roundtrip(ctx: Context, case: dict):
    n, m = case["dims"]
    gp = ctx.gp
    rng = ctx.case_rng(case)
    f = ctx.mat(case, "f", m, n)
    roll = rng.random()
    if roll < 0.3:
        f2 = f
    elif roll < 0.6:
        f2 = f.scale(rng.choice(ctx.group.elements))
    else:
        f2 = ctx.mat(case, "f2", m, n)
    counts = gp.roundtrip_report([(f, f2)], [ctx.gp_hom(case, "g", n, m)], rng)
    counts.pop("checked")
    failed = {k: v for k, v in counts.items() if v}
    return {"falsifications": failed} if failed else None


def gp_biproduct(ctx: Context, case: dict):
    a, b = (GPObject(n) for n in case["dims"])
    data, _ = ctx.gp.biproduct(a, b)
    return _bad(ctx.gp.biproduct_equations(data))


def gp_dagger_biproduct(ctx: Context, case: dict):
    gp = ctx.gp
    a, b = (GPObject(n) for n in case["dims"])
    data, _ = gp.biproduct(a, b, dagger=True, positivity_bound=ctx.config.positivity_bound)
    flags = gp.biproduct_equations(data, dagger=True)
    f = ctx.gp_hom(case, "f", a.dim, b.dim)
    g = ctx.gp_hom(case, "g", b.dim, a.dim)
    flags["dagger involutive"] = gp.dagger(gp.dagger(f)) == f
    flags["dagger contravariant"] = gp.dagger(g @ f) == gp.dagger(f) @ gp.dagger(g)
    return _bad(flags)


def compact_closure(ctx: Context, case: dict):
    (n,) = case["dims"]
    gp = ctx.gp
    a = GPObject(n)
    pair = gp.duals(a, ctx.case_rng(case))
    flags = {"base snakes": compact(ctx.ring, n).verify(), "GP snakes": gp.snakes_hold(pair)}
    return _bad(flags)


def dagger_compact(ctx: Context, case: dict):
    (n,) = case["dims"]
    gp = ctx.gp
    a = GPObject(n)
    rng = ctx.case_rng(case)
    with_state = gp.dagger_dual(a, use_state=n > 0, rng=rng)
    without = gp.dagger_dual(a, use_state=False, rng=ctx.case_rng(case))
    one = gp.scalar(ctx.ring.one)
    flags = {
        "psi defect is 1": with_state.defect == one,
        "scalar defect is 1": without.defect == one,
        "snakes": gp.snakes_hold(with_state),
        "counit = unit^dagger . sigma": with_state.counit == gp.dagger(with_state.unit) @ gp.braiding(a, a),
    }
    return _bad(flags)


# -- transport ---------------------------------------------------------------------

def functor_transport(ctx: Context, case: dict):
    a, b, c = case["dims"]
    functor = ctx.functor()
    try:
        gp_functor = ctx.gp_functor()
    except ChoiceNotPreserved as exc:
        raise PreconditionFailed(str(exc)) from exc
    f, g = ctx.mat(case, "f", b, a), ctx.mat(case, "g", c, b)
    fails = functor.check_laws([(g, f)])
    fails.update({f"GP {k}": v for k, v in gp_functor.law_failures(
        [(ctx.gp_hom(case, "G", b, c), ctx.gp_hom(case, "F", a, b))]).items()})
    fails["well defined on classes"] = 0 if gp_functor.quotient.well_defined_on(f) else 1
    failed = {k: v for k, v in fails.items() if v}
    return {"failures": failed} if failed else None


def functor_precondition(ctx: Context) -> str | None:
    try:
        ctx.gp_functor()
    except (ChoiceNotPreserved, PhasecatError) as exc:
        return f"{type(exc).__name__}: {exc}"
    return None


def adjunction(ctx: Context, suite: LawSuite) -> CheckResult:
    ring = ctx.ring
    report = adjunction_checks(ring, ctx.group, max_dim=min(2, ctx.config.dims_max),
                               samples=suite.trials, seed=suite.seed)
    q = ring.modulus
    expected = (q * q - 1) * (q * q - q) // len(ctx.group)
    notes = {"hom_counts": report.hom_counts, "projective_classes": report.projective_classes}
    if not report.ok:
        return CheckResult("refuted", "exhaustive", len(report.hom_counts), {"failures": report.failures}, notes)
    if report.projective_classes is not None and report.projective_classes != expected:
        return CheckResult("refuted", "exhaustive", len(report.hom_counts),
                           {"projective_classes": report.projective_classes, "expected": expected}, notes)
    return CheckResult("holds", "exhaustive", len(report.hom_counts), None, notes)


# -- finite backend -------------------------------------------------------------------

def gset_oracle(ctx: Context, suite: LawSuite) -> CheckResult:
    from .fincat import (PhasedCoproductWitness, check_transitive_phases, image_of_coproduct,
                         predicted_phases, search_phased_coproducts)

    cat, q, base = ctx.gset_oracle()
    trials = 0
    witnesses = []
    counts = {}
    for a, b in itertools.combinations_with_replacement(base, 2):
        if cat.coproduct(a, b) is None:
            continue
        trials += 1
        image = image_of_coproduct(q, a, b)
        if not isinstance(image, PhasedCoproductWitness):
            return CheckResult("refuted", "exhaustive", trials,
                               {"summands": [a, b], "clause": image.clause, "detail": image.counterexample})
        if set(image.phases) != predicted_phases(q, a, b):
            return CheckResult("refuted", "exhaustive", trials,
                               {"summands": [a, b], "clause": "phases differ from the action prediction",
                                "found": sorted(image.phases), "predicted": sorted(predicted_phases(q, a, b))})
        found, _ = search_phased_coproducts(q, (a, b))
        if image not in found:
            return CheckResult("refuted", "exhaustive", trials,
                               {"summands": [a, b], "clause": "search missed the coproduct image"})
        witnesses.extend(found)
        counts[f"{cat.labels[a]}+{cat.labels[b]}"] = {"witnesses": len(found), "phases": len(image.phases)}
    res = check_transitive_phases(q, witnesses)
    res.trials += trials
    res.notes = {"pairs": counts, "objects": len(cat.objects), "morphisms": len(cat.morphisms)}
    return res


def gset_roundtrip(ctx: Context, suite: LawSuite) -> CheckResult:
    fgp = ctx.gset_backend()
    counts = fgp.roundtrip()
    failed = {k: v for k, v in counts.items() if k != "pairs" and v}
    if failed:
        return CheckResult("refuted", "exhaustive", counts["pairs"], {"falsifications": failed})
    small = [a for a in fgp.objects if fgp.d.size(a) <= 2]
    trials = counts["pairs"]
    for a, b in itertools.product(small, repeat=2):
        union = fgp.d.coproduct(a, b)
        if union is None or union[0] not in fgp.objects:
            continue
        res = fgp.coproduct_uniqueness(a, b, fgp.objects)
        trials += res.trials
        if not res.ok:
            return CheckResult("refuted", "exhaustive", trials, res.counterexample)
    return CheckResult("holds", "exhaustive", trials)


def _mat_backend(config: SuiteConfig) -> bool:
    return config.backend == "mat"


def _prime_ring(config: SuiteConfig) -> bool:
    try:
        return config.backend == "mat" and parse_ring(config.ring).kind == "prime"
    except ValueError:
        return False


_LAW_LIST = [
    Law("quotient.soundness", "mat", "sampled", quotient_soundness, arity=2, applies=_mat_backend),
    Law("phased.copair", "mat", "sampled", phased_copair, arity=3, applies=_mat_backend),
    Law("phased.assoc", "mat", "sampled", phased_assoc, arity=4, dim_cap=3, applies=_mat_backend),
    Law("phased.biproduct", "mat", "sampled", phased_biproduct, arity=2, applies=_mat_backend),
    Law("phased.positive_free", "mat", "bounded", positive_free, applies=_mat_backend),
    Law("phased.phase_generator", "mat", "exhaustive", phase_generator, applies=_mat_backend),
    Law("phased.positive_cancellation", "mat", "checked", positive_cancellation, applies=_mat_backend),
    Law("gp.coproduct", "mat", "sampled", gp_coproduct, arity=3, applies=_mat_backend),
    Law("gp.monoidal", "mat", "sampled", gp_monoidal, arity=4, dim_cap=3, applies=_mat_backend),
    Law("gp.hexagon", "mat", "sampled", gp_hexagon, arity=3, dim_cap=3, applies=_mat_backend),
    Law("gp.global_phases", "mat", "exhaustive", gp_global_phases, applies=_mat_backend),
    Law("gp.roundtrip", "mat", "sampled", gp_roundtrip, arity=2, applies=_mat_backend),
    Law("gp.biproduct", "mat", "sampled", gp_biproduct, arity=2, applies=_mat_backend),
    Law("gp.dagger_biproduct", "mat", "sampled", gp_dagger_biproduct, arity=2, applies=_mat_backend,
        precondition=Context.dagger_precondition),
    Law("gp.compact", "mat", "sampled", compact_closure, arity=1, dim_cap=3, applies=_mat_backend),
    Law("gp.dagger_compact", "mat", "sampled", dagger_compact, arity=1, dim_cap=3, applies=_mat_backend,
        precondition=Context.dagger_precondition),
    Law("transport.functor", "mat", "sampled", functor_transport, arity=3, applies=_mat_backend,
        precondition=functor_precondition),
    Law("transport.adjunction", "mat", "exhaustive", adjunction, applies=_prime_ring),
    Law("fincat.oracle", "fincat", "exhaustive", gset_oracle,
        applies=lambda config: config.backend == "fincat"),
    Law("fincat.roundtrip", "fincat", "exhaustive", gset_roundtrip,
        applies=lambda config: config.backend == "fincat"),
]

LAWS: dict[str, Law] = {law.id: law for law in _LAW_LIST}


def default_laws(config: SuiteConfig) -> list[str]:
    return [law.id for law in _LAW_LIST if law.applies(config)]
