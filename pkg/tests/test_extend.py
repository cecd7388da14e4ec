"""Tests for extending one-flavor modules to the full operator algebra."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qdweight.basering import WeightPoint
from qdweight.extend import FAMILY, IMPOSSIBLE, UNIQUE, ExtensionResult, extend_to_D
from qdweight.families import construct_family
from qdweight.fields import FieldSpec, make_field
from qdweight.linalg import Mat
from qdweight.orbits import compute_orbit
from qdweight.verify import check_relations
from qdweight.wmod import (
    WeightModule,
    circ_no_break,
    construct_gwa,
    restrict,
    simple_no_break,
    with_breaks,
)

QQ = make_field(FieldSpec(kind="RATIONAL", q="2"))
F3 = make_field(FieldSpec(kind="PRIME_FIELD", p=3, q="2"))
F9 = make_field(FieldSpec(kind="EXT_FIELD", p=3, f=[1, 0, 1], q="2"))


def wp(ctx, a, b):
    return WeightPoint(ctx.parse(str(a)), ctx.parse(str(b)))


def fam(name, params, ctx, window=None):
    return construct_family({"name": name, "params": params}, ctx, window=window)


def aq_break_module(ctx, a):
    """X and Y1 on a full line through (a, 1/q), X vanishing at its sigma break."""
    return construct_gwa("AQ", with_breaks([0, 1], []), wp(ctx, a, "1/2"), (-3, 3), ctx)


def a1_break_module(ctx, b):
    """X and Y on a full line through (0, b), X vanishing at its tau break."""
    return construct_gwa("A1", with_breaks([0, 1], []), wp(ctx, 0, b), (-3, 3), ctx)


def assert_sound(V, res):
    """Structural invariants every extension result must satisfy."""
    if res.kind == IMPOSSIBLE:
        assert res.representative is None
        assert set(res.conflict) >= {"relation", "offset"}
        return
    rep = res.representative
    assert check_relations(rep, "D").passed
    # the input's own operators come through untouched
    for name in V.ops:
        assert rep.ops[name] == V.ops[name]
    if res.kind == UNIQUE:
        assert res.k == 0 and not res.homogeneous_basis
    else:
        assert res.k == len(res.homogeneous_basis) >= 1


def match_one_parameter_family(res, target):
    """For a k=1 family, the coefficient putting the member on target, if any."""
    assert res.k == 1
    table, (maps,) = res.representative.ops[res.missing], res.homogeneous_basis
    for k, m in maps.items():
        for i, row in enumerate(m.data):
            for j, v in enumerate(row):
                if v:
                    want = target.ops[res.missing][k].data[i][j]
                    return (want - table[k].data[i][j]) / v
    raise AssertionError("homogeneous basis vector is zero")


# the three outcomes on the sigma-side break line


def test_break_with_nonzero_tau_is_impossible():
    res = extend_to_D(aq_break_module(QQ, 1))
    assert res.kind == IMPOSSIBLE
    assert res.missing == "Y"
    assert res.conflict["relation"] == "YX=tau"
    assert res.conflict["offset"] == 0
    assert res.conflict["equation"] == {"lhs": "0", "rhs": "1"}
    assert_sound(aq_break_module(QQ, 1), res)


def test_break_with_zero_tau_gives_one_parameter_family():
    V = aq_break_module(QQ, 0)
    res = extend_to_D(V)
    assert res.kind == FAMILY
    assert res.missing == "Y"
    assert res.k == 1
    assert_sound(V, res)
    # the representative is the junction family at d = 0
    assert res.representative == fam("VQ_JJ_CD", {"c": "1", "d": "0"}, QQ, window=(-3, 3))
    # the free direction is exactly the junction coefficient
    d5 = fam("VQ_JJ_CD", {"c": "1", "d": "5"}, QQ, window=(-3, 3))
    assert res.member([QQ.parse("5")]) == d5


def test_invertible_x_forces_unique_extension():
    V = construct_gwa("AQ", simple_no_break(), wp(QQ, "1/2", 3), (-2, 2), QQ)
    res = extend_to_D(V)
    assert res.kind == UNIQUE
    assert_sound(V, res)
    assert res.representative == fam("VQ_B_A", {"b": "3", "a": "1/2"}, QQ, window=(-2, 2))


def test_circular_extension_is_unique_and_matches_twisted_family():
    V = construct_gwa("AQ", circ_no_break("2"), wp(F9, "[0,1]", "[0,1]"), None, F9)
    res = extend_to_D(V)
    assert res.kind == UNIQUE
    assert_sound(V, res)
    twisted = fam("VQ_F_B_A", {"f": "2", "b": "[0,1]", "a": "[0,1]"}, F9)
    assert res.representative == twisted

    from qdweight.analyze import are_isomorphic

    assert are_isomorphic(res.representative, twisted, "D").is_yes


# the mirrored outcomes on the tau-side break line


def test_tau_break_with_wrong_sigma_is_impossible():
    res = extend_to_D(a1_break_module(QQ, 1))
    assert res.kind == IMPOSSIBLE
    assert res.missing == "Y1"
    assert res.conflict["relation"] == "Y1X=qsigma-1"
    assert res.conflict["offset"] == 0
    assert res.conflict["equation"] == {"lhs": "0", "rhs": "1"}


def test_tau_break_with_matching_sigma_gives_family():
    V = a1_break_module(QQ, "1/2")
    res = extend_to_D(V)
    assert res.kind == FAMILY
    assert res.missing == "Y1"
    assert res.k == 1
    assert_sound(V, res)
    assert res.representative == fam("V1_JJ_CD", {"c": "1", "d": "0"}, QQ, window=(-3, 3))
    d7 = fam("V1_JJ_CD", {"c": "1", "d": "7"}, QQ, window=(-3, 3))
    assert res.member([QQ.parse("7")]) == d7


def test_circular_tau_side_extension_matches_twisted_family():
    V = construct_gwa("A1", circ_no_break("2"), wp(F9, "[0,1]", "[0,1]"), None, F9)
    res = extend_to_D(V)
    assert res.kind == UNIQUE
    assert_sound(V, res)
    assert res.representative == fam("V1_F_A_B", {"f": "2", "a": "[0,1]", "b": "[0,1]"}, F9)


# round trips: restrict a full module, then solve the dropped operator back


@pytest.mark.parametrize("flavor", ["AQ", "A1"])
def test_twisted_family_roundtrip(flavor):
    full = fam("VQ_F_B_A", {"f": "2", "b": "[0,1]", "a": "[0,1]"}, F9)
    res = extend_to_D(restrict(full, flavor))
    assert res.kind == UNIQUE
    assert res.representative == full


@pytest.mark.parametrize("flavor", ["AQ", "A1"])
def test_chain_roundtrip_recovers_original(flavor):
    full = fam("CHAIN_CYCLE", {"m": 1, "word": "Y", "a": ["1"]}, F3)
    V = restrict(full, flavor)
    res = extend_to_D(V)
    assert_sound(V, res)
    if res.kind == UNIQUE:
        assert res.representative == full
    else:
        assert res.kind == FAMILY and res.k == 1
        c = match_one_parameter_family(res, full)
        assert res.member([c]) == full


def test_defective_circular_module_is_rejected_on_the_defective_side():
    remark = fam("REMARK_136", {}, F3)
    with pytest.raises(ValueError, match="Y1X=qsigma-1 fails at offset 2"):
        extend_to_D(restrict(remark, "AQ"))


def test_defect_rediscovered_when_solving_from_the_clean_side():
    remark = fam("REMARK_136", {}, F3)
    V = restrict(remark, "A1")
    assert check_relations(V, "A1").passed
    res = extend_to_D(V)
    assert res.kind == IMPOSSIBLE
    assert res.conflict["relation"] == "Y1X=qsigma-1"
    assert res.conflict["offset"] == 2
    assert res.conflict["equation"] == {"lhs": "0", "rhs": "1"}


# degenerate inputs


def test_single_offset_window_has_nothing_to_solve():
    V = construct_gwa("AQ", simple_no_break(), wp(QQ, "1/2", 3), (0, 0), QQ)
    res = extend_to_D(V)
    assert res.kind == UNIQUE
    assert res.representative.ops["Y"] == {}
    assert check_relations(res.representative, "D").passed


def test_zero_circular_module_extends_uniquely():
    orbit = compute_orbit(wp(F3, 1, 1), F3)
    V = WeightModule(F3, orbit, None, {}, {"X": {}, "Y1": {}})
    res = extend_to_D(V)
    assert res.kind == UNIQUE
    assert res.representative.total_dim() == 0


def test_extension_preconditions():
    full = fam("VQ_F_B_A", {"f": "2", "b": "[0,1]", "a": "[0,1]"}, F9)
    with pytest.raises(ValueError, match="both Y and Y1"):
        extend_to_D(full)
    with pytest.raises(ValueError, match="exactly one of Y, Y1"):
        extend_to_D(full.with_ops({"X": full.ops["X"]}))
    with pytest.raises(ValueError, match="needs the X operator"):
        extend_to_D(full.with_ops({"Y1": full.ops["Y1"]}))


def test_member_coefficient_count_checked():
    res = extend_to_D(aq_break_module(QQ, 0))
    with pytest.raises(ValueError, match="coefficients"):
        res.member([])
    res_bad = extend_to_D(aq_break_module(QQ, 1))
    with pytest.raises(ValueError, match="no members"):
        res_bad.member([])


# serialization and determinism


def test_result_json_shapes():
    bad = extend_to_D(aq_break_module(QQ, 1)).to_json()
    assert set(bad) == {"kind", "missing", "conflict"}
    assert bad["kind"] == "IMPOSSIBLE"

    unique = extend_to_D(
        construct_gwa("AQ", simple_no_break(), wp(QQ, "1/2", 3), (-2, 2), QQ)
    ).to_json()
    assert set(unique) == {"kind", "missing", "representative"}

    fam_json = extend_to_D(aq_break_module(QQ, 0)).to_json()
    assert set(fam_json) == {"kind", "missing", "k", "representative", "homogeneous_basis"}
    assert fam_json["k"] == 1
    (basis_vec,) = fam_json["homogeneous_basis"]
    assert {entry["offset"] for entry in basis_vec} == set(range(-2, 4))
    by_offset = {entry["offset"]: entry["matrix"] for entry in basis_vec}
    assert by_offset[1] == [["1"]]
    assert all(m == [["0"]] for k, m in by_offset.items() if k != 1)


def test_extension_is_deterministic():
    first = extend_to_D(aq_break_module(QQ, 0)).to_json()
    second = extend_to_D(aq_break_module(QQ, 0)).to_json()
    assert first == second


# property: every member of a family passes, and the family dimension is a
# basis-independent invariant


@settings(max_examples=25, deadline=None)
@given(c=st.integers(min_value=-8, max_value=8))
def test_every_family_member_passes_full_relations(c):
    res = extend_to_D(aq_break_module(QQ, 0))
    member = res.member([QQ.from_int(c)])
    assert check_relations(member, "D").passed


@settings(max_examples=25, deadline=None)
@given(scales=st.lists(st.sampled_from([-3, -2, -1, 1, 2, 3]), min_size=7, max_size=7))
def test_family_dimension_survives_basis_rescaling(scales):
    V = aq_break_module(QQ, 0)
    lo, hi = V.window
    s = {k: QQ.from_int(c) for k, c in zip(range(lo, hi + 1), scales)}
    ops = {}
    for name, table in V.ops.items():
        scaled = {}
        for k, m in table.items():
            t = V.op_target(name, k)
            scaled[k] = m.scale(s[k] / s[t])
        ops[name] = scaled
    res = extend_to_D(V.with_ops(ops))
    assert res.kind == FAMILY
    assert res.k == 1
    assert_sound(V.with_ops(ops), res)
