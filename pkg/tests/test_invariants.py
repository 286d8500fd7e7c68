"""Minimal primes, dimension, height, grade, polynomial grade."""

import pytest

from cmwb import (NEG_INF, POS_INF, UnsupportedIdealError, grade,
                  grade_of_ideal, height_on_module, minimal_primes,
                  module_dimension, pgrade)
from cmwb.invariants import prime_dimension

from conftest import cyclic, make_seq


def primes_as_strs(ring_pres, texts):
    P = ring_pres.poly_ring
    return sorted(sorted(str(g) for g in p)
                  for p in minimal_primes(P, [P.parse(t) for t in texts]))


def test_minimal_primes_monomial(plane, space):
    assert primes_as_strs(plane, ["x*y"]) == [["x"], ["y"]]
    assert primes_as_strs(plane, ["x^2", "x*y"]) == [["x"]]
    assert primes_as_strs(space, ["x*y", "x*z"]) == [["x"], ["y", "z"]]
    assert primes_as_strs(plane, []) == [[]]
    assert primes_as_strs(plane, ["1"]) == []


def test_minimal_primes_splitting(plane, space):
    # factorable non-monomial generators
    assert primes_as_strs(plane, ["x^2 - y^2"]) == [["x + y"], ["x - y"]]
    # inclusion-minimality across branches
    assert primes_as_strs(space, ["x + z", "x*y", "z^2"]) == [["x", "z"]]


def test_minimal_primes_unsupported(plane):
    P = plane.poly_ring
    # an irreducible non-linear generator mixed with another one of the same
    # support falls outside both tiers
    with pytest.raises(UnsupportedIdealError):
        minimal_primes(P, [P.parse("x^2 + y^2 + 1"), P.parse("x^3 + y + 1")])


def test_prime_dimension(space):
    P = space.poly_ring
    assert prime_dimension(P, (P.parse("x"),)) == 2
    assert prime_dimension(P, ()) == 3
    assert prime_dimension(P, tuple(P.gens())) == 0


def test_module_dimension(plane, cross):
    assert module_dimension(plane.free_module(1)) == 2
    assert module_dimension(cyclic(plane, "x")) == 1
    assert module_dimension(cyclic(plane, "x", "y")) == 0
    assert module_dimension(cyclic(plane, "1")) == NEG_INF
    assert module_dimension(cross.free_module(1)) == 1
    assert module_dimension(cyclic(plane, "x^2", "x*y")) == 1


def test_height(plane, cross):
    P = plane.poly_ring
    F = plane.free_module(1)
    assert height_on_module([P.parse("x")], F) == 1
    assert height_on_module([P.parse("x"), P.parse("y")], F) == 2
    assert height_on_module([P.parse("x*y")], F) == 1
    L = cyclic(plane, "x")
    assert height_on_module([P.parse("y")], L) == 1
    # (x) acts as zero on R/(x): V(x) contains the whole support
    assert height_on_module([P.parse("x")], L) == 0
    # unit combination: support misses V(I)
    assert height_on_module([P.parse("x + 1")], cyclic(plane, "x")) == POS_INF
    Pc = cross.poly_ring
    assert height_on_module([Pc.parse("x + y")], cross.free_module(1)) == 1
    assert height_on_module([Pc.parse("x")], cross.free_module(1)) == 0


def test_grade(plane, cross):
    F = plane.free_module(1)
    assert grade(make_seq(plane, "x", "y"), F) == 2
    assert grade(make_seq(plane, "x*y"), F) == 1
    assert grade(make_seq(plane, "x"), cyclic(plane, "x*y")) == 0
    assert grade(make_seq(plane, "y"), cyclic(plane, "x^2", "x*y")) == 0
    assert grade(make_seq(cross, "x + y"), cross.free_module(1)) == 1
    assert grade(make_seq(cross, "x"), cross.free_module(1)) == 0
    # unit action
    assert grade(make_seq(plane, "x + 1", "y"), cyclic(plane, "x")) == POS_INF


def test_grade_generating_set_independent(plane):
    F = plane.free_module(1)
    P = plane.poly_ring
    a = grade_of_ideal([P.parse("x"), P.parse("y")], F, plane)
    b = grade_of_ideal([P.parse("x + y"), P.parse("x - y"), P.parse("x")], F, plane)
    assert a == b == 2


def test_grade_at_most_height(plane, cross):
    cases = [
        (plane, plane.free_module(1), ("x", "y")),
        (plane, cyclic(plane, "x*y"), ("x + y",)),
        (plane, cyclic(plane, "x^2", "x*y"), ("y",)),
        (cross, cross.free_module(1), ("x + y",)),
    ]
    strict_seen = False
    for ring_pres, mod, texts in cases:
        seq = make_seq(ring_pres, *texts)
        g = grade(seq, mod)
        h = height_on_module(list(seq), mod)
        assert g <= h
        if g < h:
            strict_seen = True
    # strict somewhere on the non-CM members
    assert strict_seen


def test_pgrade(plane, cross):
    assert pgrade(make_seq(plane, "x", "y"), plane.free_module(1)) == 2
    assert pgrade(make_seq(plane, "y"), cyclic(plane, "x^2", "x*y")) == 0
    assert pgrade(make_seq(cross, "x + y"), cross.free_module(1)) == 1


def test_auslander_buchsbaum(plane, space):
    # depth + pd = n for modules over the full polynomial ring
    for ring_pres in (plane, space):
        n = ring_pres.poly_ring.nvars
        irrelevant = make_seq(ring_pres, *ring_pres.poly_ring.variables)
        mods = [ring_pres.free_module(1),
                cyclic(ring_pres, ring_pres.poly_ring.variables[0]),
                cyclic(ring_pres, *ring_pres.poly_ring.variables)]
        for mod in mods:
            depth = grade(irrelevant, mod)
            pd = mod.projective_dimension()
            assert depth + pd == n
