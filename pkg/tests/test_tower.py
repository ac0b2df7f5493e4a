"""Tower analysis: image chains, derived-limit class, exact limits."""

import random

import pytest

from towertop.abelian import FGAbelianGroup, GroupHom, IntegerMatrix, Subgroup
from towertop.tower import (
    Certificate,
    ColimResult,
    ComplexTower,
    DirectSystem,
    GroupTower,
    Lim1Class,
    MLStatus,
    NotFinitelyStable,
    NotStable,
    cohomology_system,
    colim_direct_system,
    homology_tower,
    lim1_class,
    ml_status,
    periodic_lim,
    stable_lim,
    tower_lim,
)

from generators import circle_power_tower, constant_tower, hollow_triangle


Z = FGAbelianGroup.free(1)
Z2 = FGAbelianGroup.free(2)


def hom(src, tgt, rows):
    return GroupHom(src, tgt, IntegerMatrix(rows, ncols=src.ngens))


def doubling_tower(depth, certified=True):
    cert = Certificate("periodic") if certified else None
    return GroupTower(
        [Z] * depth, [hom(Z, Z, [[2]])] * (depth - 1), cert
    )


def test_doubling_chain_strictly_decreasing():
    t = doubling_tower(4)
    st = ml_status(t, 0, 3)
    assert st.verdict == "StrictlyDecreasing"
    assert [g.invariants for g in st.image_chain] == [(1, ())] * 4
    # the chain is Z > 2Z > 4Z > 8Z: consecutive images properly nested
    subs = [Subgroup(Z, [(2**k,)]) for k in range(4)]
    for a, b in zip(subs, subs[1:]):
        assert b.is_subset_of(a) and not a.is_subset_of(b)


def test_identity_tower_stabilizes_at_zero():
    t = GroupTower([Z] * 3, [GroupHom.identity(Z)] * 2, Certificate("periodic"))
    st = ml_status(t, 0, 2)
    assert st.verdict == "Stabilized"
    assert st.index == 0


def test_uncertified_repeat_at_step_two():
    # composite images at level 0: Z, 2Z, 4Z, 4Z -- first repeat at index 2
    bonds = [hom(Z, Z, [[2]]), hom(Z, Z, [[2]]), GroupHom.identity(Z)]
    t = GroupTower([Z] * 4, bonds)
    st = ml_status(t, 0, 3)
    assert st.verdict == "Stabilized"
    assert st.index == 2


def test_uncertified_decreasing_chain_is_undetermined():
    t = doubling_tower(4, certified=False)
    st = ml_status(t, 0, 3)
    assert st.verdict == "UndeterminedWithinWindow"
    assert lim1_class(t).verdict == "Undetermined"


def test_window_must_fit_truncation():
    t = doubling_tower(3)
    with pytest.raises(ValueError):
        ml_status(t, 0, 5)
    with pytest.raises(ValueError):
        ml_status(t, 2, 1)


def test_certified_doubling_lim1_uncountable():
    t = doubling_tower(4)
    cls = lim1_class(t)
    assert cls.verdict == "Uncountable"


def test_diag_one_two_certified():
    a = hom(Z2, Z2, [[1, 0], [0, 2]])
    t = GroupTower([Z2] * 4, [a] * 3, Certificate("periodic"))
    assert ml_status(t, 0).verdict == "StrictlyDecreasing"
    assert lim1_class(t).verdict == "Uncountable"
    out = stable_lim(t)
    assert isinstance(out, NotStable)
    lim = tower_lim(t)
    assert lim.invariants == (1, ())


def test_periodic_lim_identity_returns_group():
    for g in [Z, Z2, FGAbelianGroup.from_invariants(1, (4,)), FGAbelianGroup.from_invariants(0, (2, 6))]:
        assert periodic_lim(g, GroupHom.identity(g)).invariants == g.invariants


def test_periodic_lim_doubling_matches_brute_force():
    lim = periodic_lim(Z, hom(Z, Z, [[2]]))
    assert lim.is_trivial()
    # every integer in a symmetric range that lies in all images of powers
    survivors = set(range(-(2**8), 2**8 + 1))
    for k in range(1, 10):
        survivors = {n for n in survivors if n % (2**k) == 0}
    assert survivors == {0}


def test_periodic_lim_coprime_scalings_vanish():
    # invariant factors of the matrix alone would suggest Z here; the
    # limit is actually trivial because no nonzero vector is infinitely divisible
    a = hom(Z2, Z2, [[2, 0], [0, 3]])
    assert periodic_lim(Z2, a).is_trivial()


def test_periodic_lim_mixed_unit_part():
    a = hom(Z2, Z2, [[1, 1], [0, 2]])
    assert periodic_lim(Z2, a).invariants == (1, ())


def test_periodic_lim_unimodular_full():
    a = hom(Z2, Z2, [[2, 1], [1, 1]])
    assert periodic_lim(Z2, a).invariants == (2, ())


def test_periodic_lim_torsion_doubling():
    g = FGAbelianGroup.from_invariants(0, (4,))
    a = hom(g, g, [[2]])
    assert periodic_lim(g, a).is_trivial()


def test_periodic_lim_requires_endomorphism():
    with pytest.raises(ValueError):
        periodic_lim(Z, hom(Z2, Z, [[1, 0]]))


def test_stable_lim_alternating_projection():
    # Z <- Z <- Z^2 with an identity bond then a projection: limit Z
    bonds = [GroupHom.identity(Z), hom(Z2, Z, [[1, 0]])]
    t = GroupTower([Z, Z, Z2], bonds)
    lim = stable_lim(t)
    assert lim.invariants == (1, ())


def test_stable_lim_constant_tower_is_the_level():
    g = FGAbelianGroup.from_invariants(1, (2,))
    for depth in (2, 3, 4):
        t = GroupTower([g] * depth, [GroupHom.identity(g)] * (depth - 1))
        assert stable_lim(t).invariants == g.invariants


def test_stable_lim_single_level():
    assert stable_lim(GroupTower([Z2], [])).invariants == (2, ())


def test_certified_constant_torsion_tower():
    g = FGAbelianGroup.from_invariants(0, (6,))
    t = GroupTower([g] * 3, [GroupHom.identity(g)] * 2, Certificate("periodic"))
    assert lim1_class(t).verdict == "Zero"
    assert tower_lim(t).invariants == (0, (6,))
    assert ml_status(t, 0).verdict == "Stabilized"


def test_all_surjective_tower_lim1_zero():
    proj = hom(Z2, Z, [[1, 0]])
    t = GroupTower([Z, Z2, Z2], [proj, GroupHom.identity(Z2)])
    assert lim1_class(t).verdict == "Zero"


def test_stabilization_beyond_window():
    # rank drops twice; a window of 1 cannot exhibit the stable index,
    # but the certificate still proves the chain settles
    a = hom(
        FGAbelianGroup.free(3),
        FGAbelianGroup.free(3),
        [[0, 1, 0], [0, 0, 0], [0, 0, 1]],
    )
    g = FGAbelianGroup.free(3)
    t = GroupTower([g] * 4, [a] * 3, Certificate("periodic"))
    short = ml_status(t, 0, 1)
    assert short.verdict == "Stabilized" and short.index is None
    st = ml_status(t, 0, 2)
    assert st.verdict == "Stabilized" and st.index == 2
    assert lim1_class(t).verdict == "Zero"
    assert tower_lim(t).invariants == (1, ())


def test_certificate_rejected_on_contradicting_data():
    with pytest.raises(ValueError):
        GroupTower([Z, Z2], [hom(Z2, Z, [[1, 0]])], Certificate("periodic"))
    with pytest.raises(ValueError):
        # identity bonds are surjective, contradicting a shrinking family
        GroupTower([Z] * 3, [GroupHom.identity(Z)] * 2, Certificate("shift_family"))
    with pytest.raises(ValueError):
        Certificate("mystery")


def test_shift_family_certificate():
    t = GroupTower([Z] * 4, [hom(Z, Z, [[3]])] * 3, Certificate("shift_family"))
    assert ml_status(t, 0).verdict == "StrictlyDecreasing"
    assert lim1_class(t).verdict == "Uncountable"
    assert tower_lim(t).is_trivial()


def test_image_chains_descend():
    rng = random.Random(7)
    for _ in range(15):
        groups = [FGAbelianGroup.free(rng.randint(1, 3)) for _ in range(4)]
        bonds = []
        ok = True
        for i in range(3):
            rows = [
                [rng.randint(-2, 2) for _ in range(groups[i + 1].ngens)]
                for _ in range(groups[i].ngens)
            ]
            bonds.append(hom(groups[i + 1], groups[i], rows))
        t = GroupTower(groups, bonds)
        for level in range(3):
            st = ml_status(t, level, 3 - level)
            # invariants can only lose rank along the chain
            ranks = [g.free_rank for g in st.image_chain]
            assert all(a >= b for a, b in zip(ranks, ranks[1:]))


def test_solenoid_homology_tower():
    raw = circle_power_tower(2, 4)
    t = ComplexTower(raw.levels, raw.bonds, certificate=Certificate("periodic"))
    h1 = homology_tower(t, 1)
    assert h1.certificate is not None and h1.certificate.kind == "periodic"
    assert [g.invariants for g in h1.levels] == [(1, ())] * 4
    assert all(b.canonical_matrix().rows == ((2,),) for b in h1.bonds)
    for level in range(3):
        assert ml_status(h1, level).verdict == "StrictlyDecreasing"
    assert lim1_class(h1).verdict == "Uncountable"
    assert tower_lim(h1).is_trivial()
    h0 = homology_tower(t, 0)
    assert lim1_class(h0).verdict == "Zero"
    assert tower_lim(h0).invariants == (1, ())


def test_homology_tower_commutes_with_truncation():
    raw = circle_power_tower(2, 4)
    t = ComplexTower(raw.levels, raw.bonds)
    full = homology_tower(t, 1)
    cut = homology_tower(t.truncate(2), 1)
    assert [g.invariants for g in cut.levels] == [g.invariants for g in full.levels[:3]]
    for a, b in zip(cut.bonds, full.bonds[:2]):
        assert a.canonical_matrix() == b.canonical_matrix()


def test_constant_complex_tower_certificate_survives():
    raw = constant_tower(hollow_triangle(), 3)
    t = ComplexTower(raw.levels, raw.bonds, certificate=Certificate("periodic"))
    h1 = homology_tower(t, 1)
    assert h1.certificate is not None
    assert tower_lim(h1).invariants == (1, ())


def test_colim_stabilizing_system():
    z6 = FGAbelianGroup.from_invariants(0, (6,))
    quot = hom(Z, z6, [[1]])
    sys = DirectSystem([Z, z6, z6, z6], [quot, GroupHom.identity(z6), GroupHom.identity(z6)])
    out = colim_direct_system(sys)
    assert isinstance(out, ColimResult)
    assert out.group.invariants == (0, (6,))
    assert out.index == 1


def test_colim_single_level():
    out = colim_direct_system(DirectSystem([Z2], []))
    assert isinstance(out, ColimResult) and out.group.invariants == (2, ())


def test_colim_certified_periodic_never_stabilizes():
    sys = DirectSystem([Z] * 4, [hom(Z, Z, [[2]])] * 3, Certificate("periodic"))
    out = colim_direct_system(sys)
    assert isinstance(out, NotFinitelyStable)
    assert out.certified


def test_colim_uncertified_moving_system():
    sys = DirectSystem([Z] * 4, [hom(Z, Z, [[2]])] * 3)
    out = colim_direct_system(sys)
    assert isinstance(out, NotFinitelyStable)
    assert not out.certified


def test_colim_certified_shrinking_family():
    zero = FGAbelianGroup.trivial()
    bonds = [hom(Z2, Z, [[1, 0]]), hom(Z, zero, [])]
    sys = DirectSystem([Z2, Z, zero], bonds, Certificate("shift_family"))
    out = colim_direct_system(sys)
    assert isinstance(out, ColimResult)
    assert out.group.is_trivial()


def test_solenoid_cohomology_system():
    raw = circle_power_tower(2, 4)
    t = ComplexTower(raw.levels, raw.bonds, certificate=Certificate("periodic"))
    sys = cohomology_system(t, 1)
    assert sys.certificate is not None and sys.certificate.kind == "periodic"
    assert [g.invariants for g in sys.levels] == [(1, ())] * 4
    out = colim_direct_system(sys)
    assert isinstance(out, NotFinitelyStable)
    assert out.certified
    zero_sys = cohomology_system(t, 0)
    out0 = colim_direct_system(zero_sys)
    assert isinstance(out0, ColimResult)
    assert out0.group.invariants == (1, ())


def test_tower_adjacency_validated():
    with pytest.raises(ValueError):
        GroupTower([Z, Z2], [GroupHom.identity(Z)])
    with pytest.raises(ValueError):
        DirectSystem([Z, Z], [hom(Z2, Z, [[1, 0]])])


def test_ml_status_chain_includes_full_group_first():
    t = doubling_tower(3, certified=False)
    st = ml_status(t, 0, 2)
    assert st.image_chain[0].invariants == (1, ())
    assert len(st.image_chain) == 3
