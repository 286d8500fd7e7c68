"""Module presentations: membership, colon, annihilator, subquotients, pd."""

import pytest

from cmwb import RingPresentation
from cmwb.groebner import Vect

from conftest import cyclic, make_module, make_seq


def test_free_module_basics(plane):
    F = plane.free_module(2)
    assert not F.is_zero()
    P = plane.poly_ring
    assert not F.contains(Vect.unit(P, 2, 0))
    assert F.contains(Vect.zero(P, 2))


def test_quotient_ring_reduction(cross):
    P = cross.poly_ring
    assert cross.parse("x*y") .is_zero()
    assert cross.parse("x^2*y + x") == P.parse("x")
    assert not cross.is_trivial()
    unit = RingPresentation(P, [P.parse("x"), P.parse("x + 1")])
    assert unit.is_trivial()


def test_zero_module(plane):
    Z = cyclic(plane, "1")
    assert Z.is_zero()
    K = cyclic(plane, "x", "y")
    assert not K.is_zero()


def test_annihilators(plane):
    P = plane.poly_ring
    M = cyclic(plane, "x^2", "x*y")
    ann = M.annihilator()
    assert sorted(str(f) for f in ann) == ["x*y", "x^2"]
    # direct sum R/(x) + R/(y): annihilator is the product ideal's radical trap (x*y)
    D = make_module(plane, 2, [("x", "0"), ("0", "y")])
    assert [str(f) for f in D.annihilator()] == ["x*y"]
    assert plane.free_module(3).annihilator() == []


def test_colon_and_kernel(plane):
    M = cyclic(plane, "x^2", "x*y")
    ok, witness = M.is_nonzerodivisor(plane.parse("y"))
    assert not ok
    # the witness is nonzero in M and killed by y
    assert not M.contains(witness)
    assert M.contains(witness.poly_mul(plane.parse("y")))
    ok2, w2 = plane.free_module(1).is_nonzerodivisor(plane.parse("x"))
    assert ok2 and w2 is None


def test_quotient_by_sequence(plane):
    M = plane.free_module(1)
    Q = M.quotient_by_sequence(make_seq(plane, "x", "y"))
    assert Q.same_presentation(cyclic(plane, "x", "y"))
    assert M.quotient_by_sequence(make_seq(plane, "1")).is_zero()


def test_subquotient_of_ideal(plane):
    # (x, y) / (x^2, x*y, y^2) has two generators killed by the variables
    P = plane.poly_ring
    M = plane.free_module(1)
    gens = [Vect.from_polys(P, [P.parse("x")]), Vect.from_polys(P, [P.parse("y")])]
    extra = [Vect.from_polys(P, [P.parse(t)]) for t in ("x^2", "x*y", "y^2")]
    S = M.subquotient(gens, extra)
    assert S.gens == 2
    assert S.contains(Vect.unit(P, 2, 0).poly_mul(P.parse("x")))
    assert S.contains(Vect.unit(P, 2, 1).poly_mul(P.parse("y")))
    assert not S.contains(Vect.unit(P, 2, 0))


def test_projective_dimensions(plane, space):
    assert plane.free_module(2).projective_dimension() == 0
    assert cyclic(plane, "x").projective_dimension() == 1
    assert cyclic(plane, "x", "y").projective_dimension() == 2
    assert cyclic(space, "x", "y", "z").projective_dimension() == 3


def test_extend_to_polynomial_ring(plane):
    M = cyclic(plane, "x")
    big = M.extend_to_polynomial_ring()
    assert big.poly_ring.nvars == 3
    assert not big.is_zero()
    t = big.poly_ring.gen(big.poly_ring.variables[-1])
    ok, _ = big.is_nonzerodivisor(t)
    assert ok


def test_relation_rank_mismatch(plane):
    with pytest.raises(ValueError):
        make_module(plane, 2, [("x",)])
