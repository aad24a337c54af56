import itertools
import random
from fractions import Fraction

import pytest

from aspherical.errors import NotAddableError, ParseError
from aspherical.multipartition import (
    Box, MultiPartition, Order, addable_boxes, box_compare, boxes_equivalent, c_function, c_of_box,
    c_of_box_s, charged_content, enumerate_multipartitions, leq_c, partitions, preceq_multipartition,
    removable_boxes,
)
from aspherical.parameters import HParams, HyperplaneParams, SParams, h_to_s, s_to_h
from aspherical.scalar import KAPPA, ExactScalar


def test_partition_counts():
    assert [len(partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert enumerate_multipartitions(2, 0) == [MultiPartition(((), ()))]
    assert len(enumerate_multipartitions(2, 2)) == 5
    assert len(enumerate_multipartitions(3, 1)) == 3
    # generating function check
    assert len(enumerate_multipartitions(3, 3)) == 22


def test_parse_and_print(mp):
    nu = mp("((2,2),())")
    assert str(nu) == "((2,2),())" and mp("((2,2),∅)") == nu
    assert MultiPartition.from_json(nu.to_json()) == nu
    for bad in ["(2,2)", "((2,3),())", "((a),())", "((1)"]:
        with pytest.raises(ParseError):
            mp(bad)


def test_addable_removable(mp):
    nu = mp("((2,2),())")
    assert removable_boxes(nu) == [Box(0, 2, 2)]
    assert set(addable_boxes(nu)) == {Box(0, 3, 1), Box(0, 1, 3), Box(1, 1, 1)}
    assert removable_boxes(MultiPartition.empty(3)) == []
    assert addable_boxes(MultiPartition.empty(3)) == [Box(i, 1, 1) for i in range(3)]
    assert set(removable_boxes(mp("((1),(1))"))) == {Box(0, 1, 1), Box(1, 1, 1)}


def test_add_remove_inverse():
    for nu in enumerate_multipartitions(2, 4):
        for b in addable_boxes(nu):
            assert nu.add_box(b).remove_box(b) == nu
        for b in removable_boxes(nu):
            assert nu.remove_box(b).add_box(b) == nu
    with pytest.raises(NotAddableError):
        MultiPartition.empty(2).add_box(Box(0, 2, 1))


def test_charged_content_and_c():
    s = SParams(2, KAPPA, (0, 1))
    assert charged_content(Box(1, 1, 2), s) == 0
    assert charged_content(Box(0, 3, 1), SParams(2, KAPPA, (0, 0))) == 2
    h = s_to_h(s)
    assert c_of_box(Box(1, 1, 2), h) == -1
    assert c_of_box(Box(0, 1, 1), HParams(2, KAPPA, (0, 0))) == 0


def test_c_of_box_two_formulas():
    rng = random.Random(5)
    for _ in range(500):
        ell = rng.randint(2, 4)
        s = SParams(ell, ExactScalar(0, Fraction(rng.randint(1, 5), rng.randint(1, 3))),
                    tuple(ExactScalar(Fraction(rng.randint(-9, 9), rng.randint(1, 4))) for _ in range(ell)))
        b = Box(rng.randrange(ell), rng.randint(1, 6), rng.randint(1, 6))
        assert c_of_box(b, s_to_h(s)) == c_of_box_s(b, s)


def test_c_function_examples():
    h = s_to_h(SParams(2, KAPPA, (0, 0)))
    assert c_function(MultiPartition.empty(2), h) == 0
    assert c_function(MultiPartition(((1,), ())), h) == 0
    assert c_function(MultiPartition(((), (1,))), h) == -1


def test_box_equivalence():
    s = HyperplaneParams(2, 0, 1, 0, 0).to_sparams()
    assert boxes_equivalent(Box(0, 1, 1), Box(1, 1, 1), s)
    assert not boxes_equivalent(Box(0, 2, 1), Box(1, 1, 1), s)
    s1 = HyperplaneParams(2, 0, 1, 1, 0).to_sparams()
    assert boxes_equivalent(Box(0, 1, 1), Box(1, 2, 1), s1)


def test_box_compare_cases():
    h = s_to_h(HyperplaneParams(2, 0, 1, 0, 0).to_sparams())
    assert box_compare(Box(0, 1, 1), Box(1, 1, 1), h) is Order.LESS
    assert box_compare(Box(1, 1, 1), Box(0, 1, 1), h) is Order.GREATER
    assert box_compare(Box(0, 2, 1), Box(1, 1, 1), h) is Order.INCOMPARABLE
    h3 = s_to_h(HyperplaneParams(2, 0, 1, 0, 1).to_sparams())
    diff = c_of_box(Box(0, 1, 1), h3) - c_of_box(Box(1, 1, 1), h3)
    assert diff == 3


def _preceq_oracle(lam, lam2, h):
    # try every bijection of boxes
    left, right = lam.boxes(), lam2.boxes()
    ok = [[box_compare(a, b, h) in (Order.LESS, Order.EQUAL) for b in right] for a in left]
    return any(all(ok[a][perm[a]] for a in range(len(left))) for perm in itertools.permutations(range(len(right))))


def test_preceq_examples():
    h = s_to_h(HyperplaneParams(2, 0, 1, 0, 0).to_sparams())
    a, b = MultiPartition(((1,), ())), MultiPartition(((), (1,)))
    assert preceq_multipartition(a, a, h)
    assert preceq_multipartition(a, b, h) and not preceq_multipartition(b, a, h)
    assert not preceq_multipartition(a, MultiPartition(((2,), ())), h)


def test_preceq_against_permutation_oracle():
    for hpar in [HyperplaneParams(2, 0, 1, 0, 0), HyperplaneParams(2, 0, 1, -1, 1), HyperplaneParams(3, 0, 2, 1, 0)]:
        h = s_to_h(hpar.to_sparams())
        for n in range(1, 5):
            parts = enumerate_multipartitions(hpar.ell, n)
            for lam in parts[:25]:
                for lam2 in parts[:25]:
                    assert preceq_multipartition(lam, lam2, h) == (lam == lam2 or _preceq_oracle(lam, lam2, h))


def test_leq_c():
    h = s_to_h(HyperplaneParams(2, 0, 1, 0, 0).to_sparams())
    a, b = MultiPartition(((1,), ())), MultiPartition(((), (1,)))
    assert leq_c(a, a, h) and leq_c(a, b, h)
    generic = s_to_h(SParams(2, KAPPA, (ExactScalar(Fraction(1, 10007)), ExactScalar(Fraction(1, 10009)))))
    assert not leq_c(a, b, generic)
