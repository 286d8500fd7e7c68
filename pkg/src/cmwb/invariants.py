"""Dimension, height, grade and polynomial grade of ideals on modules.

Minimal primes are computed in two tiers: combinatorially for monomial
ideals (minimal variable covers of the generator supports), and by recursive
factor splitting otherwise.  Anything outside those tiers raises
UnsupportedIdealError rather than guessing.

Heights use the catenary formula for affine algebras: dim of a localization
at p is the maximum of dim R/q - dim R/p over minimal primes q of the
annihilator contained in p.

Grade is computed through Koszul depth sensitivity: the grade of an ideal
generated by x1..xl on M equals l minus the top nonvanishing Koszul homology
degree; polynomial grade re-runs the computation over R[t] and asserts
stability.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .fields import ModP, QQ
from .groebner import buchberger, lt_ideal_dimension, member, vect_from_poly
from .koszul import koszul_complex
from .modules import RingSequence

NEG_INF = float("-inf")
POS_INF = float("inf")


class UnsupportedIdealError(ValueError):
    """Minimal-prime computation outside the supported ideal classes."""


class InternalConsistencyError(AssertionError):
    """A runtime cross-check that must hold in this scope has failed."""


# -- factorization bridge ----------------------------------------------------

def _to_sympy(poly, symbols):
    expr = sympy.Integer(0)
    for e, c in poly.terms.items():
        if isinstance(c, Fraction):
            coeff = sympy.Rational(c.numerator, c.denominator)
        elif isinstance(c, ModP):
            coeff = sympy.Integer(c.value)
        else:
            coeff = sympy.Integer(c)
        mono = sympy.Integer(1)
        for s, exp in zip(symbols, e):
            if exp:
                mono *= s ** exp
        expr += coeff * mono
    return expr


def _from_sympy(expr, ring, symbols):
    sp = sympy.Poly(expr, *symbols)
    field = ring.field
    terms = {}
    for exp, coeff in sp.terms():
        if field is QQ or isinstance(field, type(QQ)):
            q = sympy.Rational(coeff)
            c = Fraction(int(q.p), int(q.q))
        else:
            c = field.from_int(int(coeff))
        if c:
            terms[tuple(int(x) for x in exp)] = c
    return ring.from_terms(terms)


def factor_polynomial(poly):
    """Distinct irreducible factors of a polynomial over its base field."""
    ring = poly.ring
    symbols = sympy.symbols(" ".join("v%d" % i for i in range(ring.nvars)))
    if ring.nvars == 1:
        symbols = (symbols,)
    expr = _to_sympy(poly, symbols)
    kwargs = {}
    if hasattr(ring.field, "p"):
        kwargs["modulus"] = ring.field.p
    _, factors = sympy.factor_list(expr, *symbols, **kwargs)
    out = []
    for f, _mult in factors:
        g = _from_sympy(f, ring, symbols)
        if not g.is_constant():
            out.append(g.monic())
    return out


# -- minimal primes ----------------------------------------------------------

def _ideal_basis(ring, gens):
    return buchberger([vect_from_poly(g) for g in gens if not g.is_zero()])


def _basis_polys(basis):
    return tuple(b.component(0) for b in basis)


def _is_unit_ideal(basis, ring):
    return member(vect_from_poly(ring.one()), basis)


def ideal_contained_in(polys_a, basis_b):
    """<polys_a> subseteq ideal with Groebner basis basis_b."""
    return all(member(vect_from_poly(p), basis_b) for p in polys_a)


def _monomial_minimal_primes(ring, basis):
    supports = []
    for b in basis:
        (_, e), _ = b.leading()
        supports.append(frozenset(i for i, x in enumerate(e) if x > 0))
    involved = sorted(set().union(*supports)) if supports else []
    from itertools import combinations
    found = []
    for size in range(0, len(involved) + 1):
        for subset in combinations(involved, size):
            s = set(subset)
            if any(s >= f for f in found):
                continue
            if all(sup & s for sup in supports):
                found.append(frozenset(s))
    return [tuple(ring.gen(ring.variables[i]) for i in sorted(s)) for s in found]


_MAX_SPLIT_DEPTH = 40


def _minimal_primes_rec(ring, gens, depth):
    if depth > _MAX_SPLIT_DEPTH:
        raise UnsupportedIdealError("factor splitting did not terminate")
    basis = _ideal_basis(ring, gens)
    if not basis:
        return [()]  # the zero ideal is the unique minimal prime
    if _is_unit_ideal(basis, ring):
        return []
    polys = _basis_polys(basis)
    if all(len(p.terms) == 1 for p in polys):
        return _monomial_minimal_primes(ring, basis)
    if all(p.total_degree() == 1 for p in polys):
        return [polys]  # generated by independent linear forms: prime
    # split along the factors of a reducible generator
    for p in polys:
        factors = factor_polynomial(p)
        if len(factors) > 1 or (len(factors) == 1 and factors[0] != p.monic()):
            out = []
            for f in factors:
                if member(vect_from_poly(f), basis):
                    continue
                out.extend(_minimal_primes_rec(ring, list(polys) + [f], depth + 1))
            return _minimalize(ring, out)
    if len(polys) == 1:
        return [polys]  # single irreducible generator: prime (UFD)
    # linear forms plus one irreducible non-linear generator: substitute out
    # the linear part is not attempted; report the class honestly instead
    raise UnsupportedIdealError(
        "ideal outside supported classes (monomial / linear / bounded factor "
        "splitting): (%s)" % ", ".join(str(p) for p in polys))


def _minimalize(ring, prime_list):
    bases = [(p, _ideal_basis(ring, p)) for p in prime_list]
    # dedupe by reduced basis
    seen = {}
    for p, b in bases:
        key = tuple(b)
        if key not in seen:
            seen[key] = (p, b)
    items = list(seen.values())
    out = []
    for i, (p, b) in enumerate(items):
        redundant = False
        for j, (q, qb) in enumerate(items):
            if i == j:
                continue
            if ideal_contained_in(q, b) and tuple(qb) != tuple(b):
                redundant = True  # q strictly below p: p is not minimal
                break
        if not redundant:
            out.append(_basis_polys(b))
    out.sort(key=lambda p: [str(g) for g in p])
    return out


_minprime_cache = {}


def minimal_primes(ring, gens):
    """Inclusion-minimal primes over the ideal generated by gens in the
    polynomial ring.  Primes are returned as tuples of reduced-basis
    generators; the zero ideal yields [()]."""
    key = (ring, frozenset(g.monic() for g in gens if not g.is_zero()))
    if key not in _minprime_cache:
        _minprime_cache[key] = _minimal_primes_rec(ring, list(gens), 0)
    return _minprime_cache[key]


def prime_dimension(ring, prime):
    """dim of k[x]/p for a prime given by generators."""
    basis = _ideal_basis(ring, list(prime))
    return lt_ideal_dimension(basis, ring.nvars)


# -- dimension and height ----------------------------------------------------

def module_dimension(module):
    """Krull dimension of the module; -inf for the zero module."""
    if module.is_zero():
        return NEG_INF
    basis = module.annihilator_basis()
    if _is_unit_ideal(basis, module.poly_ring):
        return NEG_INF
    return lt_ideal_dimension(basis, module.poly_ring.nvars)


def height_on_module(ideal_gens, module):
    """Height of the ideal on the module: the infimum of dim M_p over primes
    p containing the ideal and supporting M; +inf when the support misses
    V(I) entirely."""
    P = module.poly_ring
    ann = module.annihilator()
    combined = list(ideal_gens) + list(ann)
    combined_basis = _ideal_basis(P, combined)
    if _is_unit_ideal(combined_basis, P):
        return POS_INF
    ps = minimal_primes(P, combined)
    qs = minimal_primes(P, ann)
    q_data = [(q, _ideal_basis(P, list(q)), prime_dimension(P, q)) for q in qs]
    best = POS_INF
    for p in ps:
        p_basis = _ideal_basis(P, list(p))
        dim_p = prime_dimension(P, p)
        local_dim = None
        for q, _qb, dim_q in q_data:
            if ideal_contained_in(q, p_basis):
                d = dim_q - dim_p
                if local_dim is None or d > local_dim:
                    local_dim = d
        if local_dim is None:
            continue  # p misses the support (cannot happen: p contains Ann)
        best = min(best, local_dim)
    return best


# -- grade and polynomial grade ----------------------------------------------

def grade(seq, module):
    """Classical grade of the ideal generated by the sequence on the module,
    via Koszul depth sensitivity; +inf when the ideal acts as the unit."""
    if module.is_zero():
        return POS_INF
    if module.quotient_by_sequence(seq).is_zero():
        return POS_INF
    l = len(seq)
    if l == 0:
        return 0
    complex_ = koszul_complex(seq, module, 1)
    for i in range(l, -1, -1):
        if not complex_.homology_is_zero(i):
            return l - i
    raise InternalConsistencyError("Koszul complex with all homology zero")


def pgrade(seq, module):
    """Polynomial grade; equals grade here, with the one-extra-variable
    stability of the defining limit asserted at runtime."""
    base = grade(seq, module)
    big_module = module.extend_to_polynomial_ring()
    big_seq = seq.lift(big_module.ring)
    extended = grade(big_seq, big_module)
    if base != extended:
        raise InternalConsistencyError(
            "polynomial grade unstable under base extension: %r vs %r"
            % (base, extended))
    return base


def grade_of_ideal(ideal_gens, module, ring_pres):
    """Grade of an ideal given by a generator list."""
    return grade(RingSequence(ring_pres, list(ideal_gens)), module)
