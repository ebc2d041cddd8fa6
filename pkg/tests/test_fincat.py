import itertools
import json

import pytest

from phasecat.errors import IllFormedCategory, IllFormedChoice, SizeLimit
from phasecat.fincat import (FiniteCategory, PhasedCoproductWitness, TrivialIsoChoice,
                             build_gset_category, check_ternary, check_transitive_phases,
                             classify_candidate, cyclic_group, enumerate_phased_coproducts,
                             image_of_coproduct, predicted_phases, quotient_finite,
                             search_phased_coproducts, trivial_choice, validate_group_table,
                             verify_witness_naive)

Z2 = cyclic_group(2)
FREE = ((0, 1), (1, 0))
POINT = ((0,), (0,))


@pytest.fixture(scope="module")
def z2():
    cat = build_gset_category(Z2, 2)
    return cat, quotient_finite(cat, cat.trivial)


def test_free_orbit_has_two_endomorphisms(z2):
    cat, q = z2
    free = cat.object_of(FREE)
    assert len(cat.hom(free, free)) == 2
    assert len(q.hom(free, free)) == 1


def test_objects_include_free_orbit_and_point(z2):
    cat, _ = z2
    assert FREE in cat.actions and POINT in cat.actions
    assert len(cat.objects) == 4


def test_trivial_group_gives_plain_sets():
    cat = build_gset_category(cyclic_group(1), 2)
    assert all(len(ts) == 1 for ts in cat.trivial.choice.values())
    q = quotient_finite(cat, cat.trivial)
    assert len(q.morphisms) == len(cat.morphisms)


def test_transport_condition_z3_up_to_three():
    cat = build_gset_category(cyclic_group(3), 3)
    cat.trivial.validate()
    assert cat.trivial.is_transitive()


def test_size_guard():
    with pytest.raises(SizeLimit):
        build_gset_category(Z2, 5)


def test_group_table_validation():
    with pytest.raises(IllFormedCategory):
        validate_group_table([[0, 1], [0, 1]])
    with pytest.raises(IllFormedCategory):
        validate_group_table([[1, 0], [0, 1]])


def test_bad_identity_rejected_at_load():
    # 0 is declared the identity but 0 . 1 = 0
    table = {(0, 0): 0, (0, 1): 0, (1, 0): 1, (1, 1): 0}
    with pytest.raises(IllFormedCategory):
        FiniteCategory(["x"], [0, 0], [0, 0], [0], table)


def test_json_roundtrip(z2, tmp_path):
    cat, _ = z2
    path = tmp_path / "cat.json"
    path.write_text(json.dumps(cat.to_json()))
    again = FiniteCategory.load(path)
    assert again.dom == cat.dom and again.table == cat.table


def test_bad_trivial_choice(z2):
    cat, _ = z2
    free = cat.object_of(FREE)
    swap = next(m for m in cat.hom(free, free) if m != cat.identity(free))
    choice = dict(trivial_choice(cat).choice)
    choice[free] = frozenset([swap])
    with pytest.raises(IllFormedChoice):
        TrivialIsoChoice(cat, choice).validate()


def test_class_composition_well_defined(z2):
    cat, q = z2
    for (g, f), h in cat.table.items():
        assert q.compose(q.cls(g), q.cls(f)) == q.cls(h)


def test_trivial_choice_gives_isomorphic_quotient(z2):
    cat, _ = z2
    q = quotient_finite(cat, trivial_choice(cat))
    assert len(q.morphisms) == len(cat.morphisms)


def test_coproduct_images_are_witnesses(z2):
    cat, q = z2
    for a, b in itertools.product(cat.objects, repeat=2):
        if cat.coproduct(a, b) is None:
            continue
        w = image_of_coproduct(q, a, b)
        assert isinstance(w, PhasedCoproductWitness)
        assert set(w.phases) == predicted_phases(q, a, b)
        assert w in enumerate_phased_coproducts(q, a, b)
        assert verify_witness_naive(q, w)


def test_free_plus_free_has_a_nontrivial_phase():
    objs = [FREE, ((0, 1, 2, 3), (1, 0, 3, 2))]
    cat = build_gset_category(Z2, 4, objects=objs)
    q = quotient_finite(cat, cat.trivial)
    w = image_of_coproduct(q, 0, 0)
    assert len(w.phases) == 2
    assert check_transitive_phases(q, [w]).ok


def test_true_coproducts_have_identity_phase():
    cat = build_gset_category(cyclic_group(1), 2)
    a = cat.object_of(((0,),))
    apex, ka, kb = cat.coproduct(a, a)
    w = classify_candidate(cat, (a, a), apex, (ka, kb))
    assert w.phases == (cat.identity(apex),)


def test_rejections_carry_counterexamples(z2):
    cat, q = z2
    point = cat.object_of(POINT)
    witnesses, rejections = search_phased_coproducts(q, (point, point))
    assert witnesses and rejections
    assert all(r.counterexample for r in rejections)


def test_fabricated_asymmetric_phases_refuted():
    objs = [FREE, ((0, 1, 2, 3), (1, 0, 3, 2))]
    cat = build_gset_category(Z2, 4, objects=objs)
    q = quotient_finite(cat, cat.trivial)
    w = image_of_coproduct(q, 0, 0)
    lopsided = PhasedCoproductWitness(w.summands, w.apex, w.coprojections, (q.identity(w.apex),))
    assert check_transitive_phases(q, [w, lopsided]).result == "refuted"


def test_ternary_reverification():
    empty = ((), ())
    objs = [empty, POINT, ((0, 1), (0, 1)), ((0, 1, 2), (0, 1, 2))]
    cat = build_gset_category(Z2, 3, objects=objs)
    q = quotient_finite(cat, cat.trivial)
    pt, two, three = 1, 2, 3
    inner = image_of_coproduct(q, pt, pt)
    outer = image_of_coproduct(q, two, pt)
    assert isinstance(check_ternary(q, outer, inner), PhasedCoproductWitness)


def test_initial_collapse_in_quotient(z2):
    cat, q = z2
    empty = cat.object_of(((), ()))
    free = cat.object_of(FREE)
    w = image_of_coproduct(q, free, empty)
    assert q.is_iso(w.coprojections[0])
