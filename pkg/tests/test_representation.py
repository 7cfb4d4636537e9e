"""Representations, the pair differential, Hom/Ext reports, duality, GL action."""
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from quiverhom.linalg import ExactMatrix, FieldSpec
from quiverhom.quiver import DimVector, Quiver, dual_quiver, euler_form
from quiverhom.rep import (Representation, dual_rep, gl_act, hom_differential,
                           hom_report, is_exceptional, random_gl, random_rep,
                           rep_from_json, rep_to_json, thin_rep, zero_rep)
from quiverhom.verify import hom_dim_bruteforce, random_dim, random_quiver

QQ = FieldSpec.rationals()
FP = FieldSpec.prime()


def a2():
    return Quiver(("1", "2"), [("1", "2")])


def scalar_rep(q, x, y, value_field=QQ):
    dim = DimVector(q, (x and 1, y and 1))
    maps = {0: ExactMatrix.from_rows(value_field, [[x * y]] if x and y else [],
                                     shape=(y and 1, x and 1))}
    return Representation(q, dim, value_field, maps)


class TestRepresentation:
    def test_shape_validation(self):
        q = a2()
        dim = DimVector(q, (1, 2))
        good = {0: ExactMatrix.from_rows(QQ, [[1], [0]])}
        Representation(q, dim, QQ, good)
        bad = {0: ExactMatrix.from_rows(QQ, [[1, 0]])}
        with pytest.raises(ValueError):
            Representation(q, dim, QQ, bad)

    def test_missing_arrow_rejected(self):
        q = a2()
        with pytest.raises(ValueError):
            Representation(q, DimVector(q, (1, 1)), QQ, {})

    def test_field_mismatch_rejected(self):
        q = a2()
        maps = {0: ExactMatrix.from_rows(FP, [[1]])}
        with pytest.raises(ValueError):
            Representation(q, DimVector(q, (1, 1)), QQ, maps)

    def test_zero_and_thin(self):
        q = a2()
        z = zero_rep(q, DimVector(q, (2, 3)), FP)
        assert all(m.to_rows() == [[0] * m.cols for _ in range(m.rows)]
                   for m in z.maps.values())
        t = thin_rep(q, ("1", "2"), QQ)
        assert t.maps[0].to_rows() == [[1]]
        s1 = thin_rep(q, ("1",), QQ)
        assert (s1.maps[0].rows, s1.maps[0].cols) == (0, 1)


class TestDifferential:
    def test_single_arrow_hand_value(self):
        # one arrow, 1-dim spaces: F(f1, f2) = f2*2 - 3*f1 as the row [-3, 2]
        q = a2()
        r = scalar_rep(q, 1, 2)
        r = Representation(q, DimVector(q, (1, 1)), QQ,
                           {0: ExactMatrix.from_rows(QQ, [[2]])})
        s = Representation(q, DimVector(q, (1, 1)), QQ,
                           {0: ExactMatrix.from_rows(QQ, [[3]])})
        f = hom_differential(r, s)
        assert f.to_rows() == [[-3, 2]]
        rep = hom_report(r, s)
        assert (rep.hom, rep.ext1, rep.euler) == (1, 0, 1)

    def test_disjoint_supports(self):
        # Hom(S1, S2) = 0 but Ext^1 = k along the arrow
        q = a2()
        s1 = thin_rep(q, ("1",), QQ)
        s2 = thin_rep(q, ("2",), QQ)
        rep = hom_report(s1, s2)
        assert (rep.hom, rep.ext1, rep.euler) == (0, 1, -1)
        assert (rep.rows, rep.cols) == (1, 0)
        assert rep.max_rank
        back = hom_report(s2, s1)
        assert (back.hom, back.ext1) == (0, 0)

    def test_double_arrow_distinct_slopes(self):
        q = Quiver(("a", "b"), [("a", "b"), ("a", "b")])
        dim = DimVector(q, (1, 1))
        r = Representation(q, dim, QQ, {0: ExactMatrix.from_rows(QQ, [[1]]),
                                        1: ExactMatrix.from_rows(QQ, [[0]])})
        s = Representation(q, dim, QQ, {0: ExactMatrix.from_rows(QQ, [[0]]),
                                        1: ExactMatrix.from_rows(QQ, [[1]])})
        rep = hom_report(r, s)
        assert (rep.hom, rep.ext1, rep.euler) == (0, 0, 0)
        same = hom_report(r, r)
        assert (same.hom, same.ext1) == (1, 1)  # homogeneous tube: not rigid

    def test_self_loop(self):
        # Hom((k,x),(k,y)) for loop maps x=2, y=2: any f works; x=2, y=3: none
        q = Quiver(("v",), [("v", "v")])
        dim = DimVector(q, (1,))
        two = Representation(q, dim, QQ, {0: ExactMatrix.from_rows(QQ, [[2]])})
        three = Representation(q, dim, QQ, {0: ExactMatrix.from_rows(QQ, [[3]])})
        assert hom_report(two, two).hom == 1
        assert hom_report(two, three).hom == 0

    def test_quiver_mismatch_rejected(self):
        r = thin_rep(a2(), ("1",), QQ)
        s = thin_rep(Quiver(("1", "2"), [("2", "1")]), ("1",), QQ)
        with pytest.raises(ValueError):
            hom_report(r, s)

    def test_exceptional_detection(self):
        q = a2()
        assert is_exceptional(thin_rep(q, ("1", "2"), QQ))
        assert is_exceptional(thin_rep(q, ("1",), QQ))
        z = zero_rep(q, DimVector(q, (1, 1)), QQ)
        assert not is_exceptional(z)  # End is 2-dimensional


class TestDuality:
    def test_dual_rep_transposes(self):
        q = a2()
        r = Representation(q, DimVector(q, (1, 2)), QQ,
                           {0: ExactMatrix.from_rows(QQ, [[1], [4]])})
        d = dual_rep(r)
        assert d.quiver == dual_quiver(q)
        assert d.maps[0].to_rows() == [[1, 4]]
        assert dual_rep(d) == r if hasattr(r, "__eq__") else True

    def test_report_transposes(self):
        rng = np.random.default_rng(2)
        q = Quiver(("x", "y", "z"), [("x", "y"), ("z", "y"), ("x", "z")])
        r = random_rep(q, DimVector(q, (2, 1, 2)), FP, rng)
        s = random_rep(q, DimVector(q, (1, 2, 1)), FP, rng)
        fwd = hom_report(r, s)
        rev = hom_report(dual_rep(s), dual_rep(r))
        assert (fwd.hom, fwd.ext1, fwd.euler, fwd.max_rank) == \
               (rev.hom, rev.ext1, rev.euler, rev.max_rank)


class TestGlAction:
    def test_invariance(self):
        rng = np.random.default_rng(5)
        q = Quiver(("x", "y"), [("x", "y"), ("x", "y")])
        dim = DimVector(q, (2, 2))
        r = random_rep(q, dim, QQ, rng, bound=9)
        s = random_rep(q, dim, QQ, rng, bound=9)
        base = hom_report(r, s)
        g = random_gl(q, dim, QQ, rng)
        moved = hom_report(gl_act(g, r), s)
        assert (moved.hom, moved.ext1) == (base.hom, base.ext1)


class TestSerialization:
    def test_roundtrip_prime_field(self):
        rng = np.random.default_rng(0)
        q = Quiver(("a", "b", "c"), [("a", "b"), ("b", "c"), ("a", "c")])
        r = random_rep(q, DimVector(q, (2, 3, 1)), FP, rng)
        assert rep_from_json(rep_to_json(r)) == r

    def test_roundtrip_fractions(self):
        q = a2()
        m = ExactMatrix.from_rows(QQ, [[Fraction(-7, 3)], [Fraction(2, 11)]])
        r = Representation(q, DimVector(q, (1, 2)), QQ, {0: m})
        back = rep_from_json(rep_to_json(r))
        assert back.maps[0].to_rows() == m.to_rows()

    def test_rejects_wrong_format_tag(self):
        r = thin_rep(a2(), ("1",), QQ)
        text = rep_to_json(r).replace("quiverhom-representation", "nope")
        with pytest.raises(ValueError):
            rep_from_json(text)


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 2**32 - 1))
def test_euler_identity_random(seed):
    rng = np.random.default_rng(seed)
    q = random_quiver(rng, max_vertices=5)
    r = random_rep(q, random_dim(q, rng, 3), FP, rng)
    s = random_rep(q, random_dim(q, rng, 3), FP, rng)
    rep = hom_report(r, s)
    assert rep.hom - rep.ext1 == euler_form(q, r.dim, s.dim)
    assert rep.max_rank == (rep.hom == 0 or rep.ext1 == 0)


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_hom_matches_bruteforce_random(seed):
    rng = np.random.default_rng(seed)
    q = random_quiver(rng, max_vertices=3)
    r = random_rep(q, random_dim(q, rng, 2), FP, rng)
    s = random_rep(q, random_dim(q, rng, 2), FP, rng)
    assert hom_report(r, s).hom == hom_dim_bruteforce(r, s)


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 2**32 - 1))
def test_duality_random(seed):
    rng = np.random.default_rng(seed)
    q = random_quiver(rng, max_vertices=4)
    r = random_rep(q, random_dim(q, rng, 3), FP, rng)
    s = random_rep(q, random_dim(q, rng, 3), FP, rng)
    fwd = hom_report(r, s)
    rev = hom_report(dual_rep(s), dual_rep(r))
    assert (fwd.hom, fwd.ext1, fwd.max_rank) == (rev.hom, rev.ext1, rev.max_rank)
