"""Walk through the GP construction over the Gaussian rationals.

Builds a few objects, tensors two morphisms, recovers a copair through the
phase-search path and checks it against the direct one, then lists the
global phases and a dagger dual.
"""
import random

from phasecat.gp import GPCategory, GPObject
from phasecat.harness import gen_gp_morphism
from phasecat.scalars import gaussian, validate_phase_group


def show(label, m):
    print(f"{label} ({m.rows}x{m.cols})")
    print(m.pretty())


def main(seed: int = 0):
    ring = gaussian()
    gp = GPCategory(validate_phase_group(ring, ["1", "i", "-1", "-i"]))
    a, b = GPObject(1), GPObject(2)
    f = gen_gp_morphism(f"{seed}:f", 1, 2, 2, ring)
    g = gen_gp_morphism(f"{seed}:g", 2, 2, 2, ring)
    show("f", f.representative())
    show("g", g.representative())
    show("f (x) g", gp.tensor(f, g).representative())
    show("corner for (1, 2)", gp.corner(a, b))

    direct = gp.copair(f, g)
    searched = gp.copair_via_phases(f, g, random.Random(seed))
    print("copair paths agree:", direct == searched)

    print("global phases:", [ring.fmt(u.block[0, 0]) for u in gp.global_phases()])
    pair = gp.dagger_dual(b)
    print("dagger dual snakes hold:", gp.snakes_hold(pair))
    show("unit for 2", pair.unit.representative())


if __name__ == "__main__":
    main()
