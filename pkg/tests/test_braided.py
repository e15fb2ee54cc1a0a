from fractions import Fraction

import pytest

from loopbraid.braided import (BVS, GroupTypeData, affine_bvs, affine_loop,
                               bvs_from_group_type, bvs_from_json, c2_hecke,
                               diagonal_bvs, extend_to_loop,
                               is_diagonalizable_group_type, local_rep,
                               signed_swap_operator, swap_bvs,
                               swap_operator, tau_loop)
from loopbraid.errors import GroupTypeViolation, NotGroupType
from loopbraid.linalg import Matrix, WeightedPerm
from loopbraid.rings import QQ, LaurentPoly
from loopbraid.words import check_relations, relations_for


def test_ybe_swap():
    assert swap_bvs(3).yang_baxter()


def test_ybe_affine():
    assert affine_bvs(5, 2).yang_baxter()


def test_ybe_c2_both_normalizations():
    assert c2_hecke(2).yang_baxter()
    assert c2_hecke(2, alt=True).yang_baxter()
    # formal Laurent variable as well
    assert c2_hecke().yang_baxter()


def test_ybe_invariant_under_inversion():
    for bvs in (swap_bvs(2), affine_bvs(5, 2), diagonal_bvs(2, Fraction(2)),
                c2_hecke(2)):
        c_inv = bvs.c_inverse()
        assert BVS(bvs.d, c_inv).yang_baxter() == bvs.yang_baxter() is True


def test_group_type_assembly_swap():
    assert isinstance(swap_bvs(3).c, WeightedPerm)
    assert swap_bvs(3).c == swap_operator(QQ, 3)


def test_group_type_violation_detected():
    # g_1 acting as a transposition with g_2 = diag(1, 2) breaks the
    # compatibility equation
    g1 = Matrix.from_int_rows(QQ, [[0, 1], [1, 0]])
    g2 = Matrix.from_int_rows(QQ, [[1, 0], [0, 2]])
    with pytest.raises(GroupTypeViolation):
        bvs_from_group_type(GroupTypeData("left", [g1, g2]))


def test_diagonal_bvs_pattern():
    # c(x_i (x) x_j) = x x_j (x) x_i when i = j, else the plain swap
    x = Fraction(2)
    b = diagonal_bvs(2, x)
    c = b.c.to_matrix()
    expected = Matrix(QQ, [[x, 0, 0, 0], [0, 0, 1, 0],
                           [0, 1, 0, 0], [0, 0, 0, x]])
    assert c == expected


def test_affine_group_type_passes_and_ybe():
    b = affine_bvs(5, 2)
    assert b.group_type.side == "right"
    assert b.yang_baxter()


def test_diagonalizable_examples():
    assert is_diagonalizable_group_type(diagonal_bvs(3, Fraction(2)).group_type)
    # (5,2): (t-1)(1-t) = -1 != 0 mod 5
    assert not is_diagonalizable_group_type(affine_bvs(5, 2).group_type)
    # (4,3): (t-1)(1-t) = -4 = 0 mod 4, so the operators commute
    assert is_diagonalizable_group_type(affine_bvs(4, 3).group_type)


def test_left_right_inversion_rule():
    # the inverse of a left group-type braiding is of right group type with
    # the inverted operators
    g = [Matrix.from_int_rows(QQ, [[1, 1], [0, 1]]),
         Matrix.from_int_rows(QQ, [[1, 1], [0, 1]])]
    left = bvs_from_group_type(GroupTypeData("left", g))
    right = bvs_from_group_type(GroupTypeData("right", [m.inverse() for m in g]))
    assert left.c_inverse() == right.c


def test_extend_to_loop_swap():
    lb = extend_to_loop(swap_bvs(2))
    assert lb.S == lb.base.c  # the swap braiding extends by itself


def test_extend_to_loop_affine_passes_lb():
    lb = affine_loop(5, 2)
    assert lb.variant == "LB"
    report = check_relations(local_rep(lb, 3), relations_for(3, "LB"))
    assert report.ok
    # and it cannot satisfy the extra symmetric relation
    report = check_relations(local_rep(lb, 3), relations_for(3, "SLB"))
    assert report.failed_labels() == ["L3(i=1)"]


def test_tau_loop_signed_swap_passes_slb():
    lb = tau_loop(2, Fraction(2))
    assert lb.variant == "SLB"
    s2 = lb.S * lb.S
    assert s2.is_identity()
    report = check_relations(local_rep(lb, 3), relations_for(3, "SLB"))
    assert report.ok


def test_extend_requires_group_type():
    with pytest.raises(NotGroupType):
        extend_to_loop(c2_hecke(2))


def test_local_rep_placement():
    lb = affine_loop(5, 2)
    images = local_rep(lb, 2)
    assert images[("sigma", 1)] == lb.base.c
    assert images[("s", 1)] == lb.S
    images3 = local_rep(lb, 3)
    ident5 = WeightedPerm.identity(QQ, 5)
    assert images3[("sigma", 2)] == ident5.kron(lb.base.c)
    assert images3[("sigma", 1)] == lb.base.c.kron(ident5)


def test_tau_q_form_matrix():
    lb = tau_loop(2, None, form="q")
    c = lb.base.c.to_matrix()
    q = LaurentPoly.gen()
    qi = q.inverse()
    z = LaurentPoly()
    expected = Matrix(lb.base.ring, [[q, z, z, z], [z, z, qi, z],
                                     [z, qi, z, z], [z, z, z, q]])
    assert c == expected


def test_signed_swap_squares_to_identity():
    s = signed_swap_operator(QQ, 3)
    assert (s * s).is_identity()


def test_group_type_stock_passes_braid_relations():
    for lb in (affine_loop(3, 2), tau_loop(2, Fraction(2)), extend_to_loop(swap_bvs(2))):
        for n in (3, 4):
            images = local_rep(lb, n)
            report = check_relations(images, relations_for(n, "LB"))
            braid_only = [r for r in report.results if r.label.startswith("B")]
            assert all(r.ok for r in braid_only)


def test_dense_assembly_refused_above_limit():
    lb = tau_loop(2, Fraction(2))
    # force the dense path by converting c to a matrix
    dense = BVS(lb.base.d, lb.base.c.to_matrix(), group_type=lb.base.group_type)
    from loopbraid.braided import LoopBVS
    big = LoopBVS(dense, lb.S.to_matrix(), "SLB")
    with pytest.raises(ValueError):
        local_rep(big, 15)  # 2^15 > 10^4


def test_bvs_json_roundtrip():
    b = affine_bvs(3, 2)
    data = b.to_json()
    assert data["d"] == 3 and data["ring"] == "rational"
    back = bvs_from_json(data)
    assert back.c == b.c
    assert back.group_type.side == "right"
    assert back.yang_baxter()
