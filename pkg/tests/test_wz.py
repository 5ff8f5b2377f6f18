"""q-WZ pairs, telescoping, and the three summation identities."""

import pytest

from qcongr.errors import BuilderUndefined, InvalidParams
from qcongr.factored import FTerm, fsum
from qcongr.poly import Poly
from qcongr.ratfun import RatFun, ratfun_limit_at_one
from qcongr.scalars import Rat
from qcongr.wz import (
    BUILTIN_PAIRS,
    WzPair,
    id3_classical_identity,
    identity_check,
    identity_sides,
    register_pair,
    wz_difference_check,
    wz_telescope,
)


def test_az_hand_instance():
    az = BUILTIN_PAIRS["az"]
    diff_f = fsum([az.F(1, 0), az.F(0, 0).times_coef(-1)])
    diff_g = fsum([az.G(0, 1), az.G(0, 0).times_coef(-1)])
    expected = RatFun(Poly([0, -2, -1]), Poly([1, 2, 1]))
    assert diff_f == expected
    assert diff_g == expected


@pytest.mark.parametrize("pair_id", ["az", "sec4", "sec5"])
def test_difference_equation(pair_id):
    assert wz_difference_check(BUILTIN_PAIRS[pair_id], 8)


@pytest.mark.parametrize("pair_id", ["az", "sec4", "sec5"])
def test_telescoping(pair_id):
    for N in (1, 3, 6):
        lhs, rhs = wz_telescope(BUILTIN_PAIRS[pair_id], N)
        assert lhs == rhs


def test_az_telescope_n1_value():
    # N = 1 collapses to F(1,0) on both sides
    lhs, rhs = wz_telescope(BUILTIN_PAIRS["az"], 1)
    expected = RatFun(Poly([1]), Poly([1, 2, 1]))
    assert lhs == expected == rhs


class TestIdentities:
    def test_id2_n1_value(self):
        lhs, rhs = identity_sides("id2", 1)
        expected = RatFun(Poly([-1, -1, -1]), Poly([1, 2, 1]))
        assert lhs == expected == rhs

    def test_id3_n1_value(self):
        lhs, rhs = identity_sides("id3", 1)
        expected = RatFun(Poly([1, 1, 1]), Poly([1, 1]))
        assert lhs == expected == rhs

    def test_id4_n3(self):
        assert identity_check("id4", 3)

    @pytest.mark.parametrize("which", ["id2", "id3", "id4"])
    def test_small_range(self, which):
        for n in range(1, 9):
            assert identity_check(which, n)

    def test_agrees_with_telescope(self):
        # the telescoped form of the first pair is the identity rearranged;
        # both sides of each must have the same exact value chain
        for n in (2, 4):
            lhs, rhs = identity_sides("id2", n)
            assert lhs == rhs
            tl, tr = wz_telescope(BUILTIN_PAIRS["az"], n)
            assert tl == tr

    def test_invalid_args(self):
        with pytest.raises(InvalidParams):
            identity_check("id9", 3)
        with pytest.raises(InvalidParams):
            identity_check("id2", 0)


def test_id3_classical_limit():
    # q -> 1 of the identity reproduces its classical companion
    for n in range(1, 16):
        assert id3_classical_identity(n)
    for p in (5, 7, 11, 13):
        assert id3_classical_identity(p - 1)


def test_id3_limit_matches_classical_sides():
    lhs, rhs = identity_sides("id3", 4)
    assert ratfun_limit_at_one(lhs) == ratfun_limit_at_one(rhs)
    assert ratfun_limit_at_one(lhs) == Rat(3, 4) * (2 + 3 + Rat(20, 3) + Rat(35, 2))


def test_register_pair():
    extra = WzPair("null", lambda n, k: FTerm(0), lambda n, k: FTerm(0), "zero pair")
    register_pair(extra)
    try:
        assert wz_difference_check(BUILTIN_PAIRS["null"], 3)
        with pytest.raises(InvalidParams):
            register_pair(extra)
    finally:
        del BUILTIN_PAIRS["null"]


def test_builder_undefined():
    def broken(n, k):
        raise ValueError("no value here")

    pair = WzPair("broken", broken, broken, "always fails")
    with pytest.raises(BuilderUndefined):
        wz_difference_check(pair, 1)


def test_difference_check_rejects_negative():
    with pytest.raises(InvalidParams):
        wz_difference_check(BUILTIN_PAIRS["az"], -1)
    with pytest.raises(InvalidParams):
        wz_telescope(BUILTIN_PAIRS["az"], 0)
