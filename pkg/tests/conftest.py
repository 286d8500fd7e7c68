import pytest

from cmwb import (MonomialOrder, ModulePresentation, PolyRing, QQ,
                  RingPresentation, RingSequence)
from cmwb.groebner import Vect

# filled in by the acceptance gate; re-emitted after the run so the
# per-criterion lines survive output capturing
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def make_ring(names, ideal=(), field=QQ, order="grevlex"):
    P = PolyRing(field, tuple(names), MonomialOrder(order))
    return RingPresentation(P, [P.parse(t) for t in ideal])


def make_module(ring_pres, gens=1, rels=()):
    """rels: iterable of tuples of polynomial strings, one tuple per column."""
    P = ring_pres.poly_ring
    cols = [Vect.from_polys(P, [P.parse(e) for e in col]) for col in rels]
    return ModulePresentation(ring_pres, gens, cols)


def make_seq(ring_pres, *texts):
    return RingSequence(ring_pres, [ring_pres.poly_ring.parse(t) for t in texts])


def cyclic(ring_pres, *gen_texts):
    """R/(f1..fk) as a rank-1 module over R."""
    return make_module(ring_pres, 1, [(t,) for t in gen_texts])


@pytest.fixture
def plane():
    return make_ring(("x", "y"))


@pytest.fixture
def line():
    return make_ring(("x",))


@pytest.fixture
def cross():
    return make_ring(("x", "y"), ideal=("x*y",))


@pytest.fixture
def space():
    return make_ring(("x", "y", "z"))
