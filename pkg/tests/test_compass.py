import random

import pytest

from helpers import structure
from logic.formula import Bound, TimeModel
from logic.parser import parse
from oracle.compass import (
    Diamond,
    MAnd,
    MNeg,
    MProp,
    MTop,
    Relation,
    box,
    check_mcl_equivalences,
    e_or_ebar,
    eval_mcl,
    modal_depth,
    to_compass,
)
from schema.errors import OracleError
from tools.random_instances import random_compass_formula, random_structure

p, q = MProp("p"), MProp("q")


def dense(text):
    return parse(text, TimeModel.DENSE)


class TestTranslation:
    """Past-MTL to compass formulas."""

    def test_conjunction_is_intersection(self):
        assert to_compass(dense("p && q")) == MAnd(p, q)

    def test_negation_orders(self):
        assert to_compass(dense("!p")) == box(Relation.B, box(Relation.E, MNeg(p)))
        assert to_compass(dense("!p"), "EB") == box(Relation.E, box(Relation.B, MNeg(p)))

    def test_since(self):
        witness = MAnd(p, Diamond(Relation.A_BAR, q))
        expected = box(Relation.E, Diamond(Relation.A_BAR, witness, Bound(18, 24)))
        assert to_compass(dense("p since[18:24] q")) == expected

    def test_constants(self):
        assert to_compass(dense("true")) == MTop()
        assert to_compass(dense("false")) == MNeg(MTop())

    def test_once_goes_through_since(self):
        m = to_compass(dense("once[1:2] p"))
        assert modal_depth(m) == 3

    def test_unknown_negation_order(self):
        with pytest.raises(OracleError):
            to_compass(dense("!p"), "BB")


class TestEvaluation:
    """Witness enumeration on periods of a fixed structure."""

    def test_bounded_left_neighbour(self, dense_since_structure):
        far = Diamond(Relation.A_BAR, q, Bound(18, 24))
        near = Diamond(Relation.A_BAR, q, Bound(0, 2))
        assert not eval_mcl(far, dense_since_structure, (39, 40))
        assert eval_mcl(near, dense_since_structure, (39, 40))

    def test_proposition_on_sub_periods(self):
        h = structure(10, p="{(2,6)}")
        assert eval_mcl(p, h, (3, 5))
        assert not eval_mcl(p, h, (1, 3))

    def test_begins_and_ends(self):
        h = structure(10, p="{(2,6)}")
        assert eval_mcl(Diamond(Relation.B, p), h, (2, 8))
        assert not eval_mcl(Diamond(Relation.E, p), h, (2, 8))
        assert eval_mcl(Diamond(Relation.A, p), h, (0, 2))
        assert eval_mcl(Diamond(Relation.E_BAR, p), h, (5, 6))
        assert not eval_mcl(Diamond(Relation.B_BAR, p), h, (0, 2))

    def test_same_right_end(self):
        h = structure(10, p="{(2,6)}")
        assert eval_mcl(e_or_ebar(p), h, (5, 6))
        assert eval_mcl(e_or_ebar(p, Bound(0, 1)), h, (4, 6))
        assert not eval_mcl(e_or_ebar(p), h, (1, 8))

    def test_period_outside_the_timeline(self):
        h = structure(10, p="{(2,6)}")
        with pytest.raises(OracleError):
            eval_mcl(p, h, (8, 12))
        with pytest.raises(OracleError):
            eval_mcl(p, h, (4, 4))


class TestEquivalence:
    """Compass translations agree with the point-free evaluator."""

    def test_dense_since(self, dense_since_structure):
        assert check_mcl_equivalences(dense("p since[18:24] q"), dense_since_structure)

    @pytest.mark.parametrize("text", ["!p", "p && !q", "p since q", "!(true since[1:3] (p && q))"])
    def test_small_formulas(self, text):
        h = structure(6, p="{(1,3),(4,6)}", q="{(2,5)}")
        assert check_mcl_equivalences(dense(text), h)

    def test_random_instances(self):
        rng = random.Random(3)
        for _ in range(100):
            h = random_structure(rng, max_span=5, props=("p", "q"), max_periods=2)
            f = random_compass_formula(rng)
            assert check_mcl_equivalences(f, h), f"{f} on {h}"
