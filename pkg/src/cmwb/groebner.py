"""Buchberger engine for submodules of free modules over a polynomial ring.

Free-module elements are sparse maps (position, monomial) -> coefficient.
The module term order is position-over-term: lower position index is larger,
ties broken by the ring's monomial order.  Rank 1 recovers the ideal case.

Pair selection uses the normal strategy (minimal lcm degree, ties by smallest
pair index) so that bases are bit-reproducible for a fixed input list, and
reduced bases are unique for the order regardless of input permutation.
"""

from __future__ import annotations

from .poly import (RingMismatchError, mono_div, mono_divides,
                   mono_lcm, mono_mul)


class Vect:
    """An element of the free module P^rank, as a sparse (pos, mono) -> coeff map."""

    __slots__ = ("ring", "rank", "terms")

    def __init__(self, ring, rank, terms):
        self.ring = ring
        self.rank = rank
        self.terms = terms

    @classmethod
    def zero(cls, ring, rank):
        return cls(ring, rank, {})

    @classmethod
    def unit(cls, ring, rank, pos):
        zero_exp = (0,) * ring.nvars
        return cls(ring, rank, {(pos, zero_exp): ring.field.one()})

    @classmethod
    def from_polys(cls, ring, polys):
        """Build from a list of component polynomials."""
        terms = {}
        for pos, p in enumerate(polys):
            for e, c in p.terms.items():
                terms[(pos, e)] = c
        return cls(ring, len(polys), terms)

    def component(self, pos):
        return self.ring.from_terms({e: c for (p, e), c in self.terms.items()
                                     if p == pos})

    def components(self):
        return [self.component(i) for i in range(self.rank)]

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)
        if self.rank != other.rank:
            raise ValueError("rank mismatch: %d vs %d" % (self.rank, other.rank))

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            s = terms.get(k)
            if s is None:
                terms[k] = c
            else:
                s = s + c
                if s:
                    terms[k] = s
                else:
                    del terms[k]
        return Vect(self.ring, self.rank, terms)

    def __neg__(self):
        return Vect(self.ring, self.rank, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        if not coeff:
            return Vect.zero(self.ring, self.rank)
        return Vect(self.ring, self.rank, {k: c * coeff for k, c in self.terms.items()})

    def term_mul(self, exp, coeff):
        """Multiply by the ring term coeff * x^exp."""
        if not coeff:
            return Vect.zero(self.ring, self.rank)
        return Vect(self.ring, self.rank,
                    {(p, mono_mul(e, exp)): c * coeff for (p, e), c in self.terms.items()})

    def poly_mul(self, poly):
        result = Vect.zero(self.ring, self.rank)
        for e, c in poly.terms.items():
            result = result + self.term_mul(e, c)
        return result

    def order_key(self, key):
        """Largest term first: (-position, monomial key)."""
        return lambda pe: (-pe[0], key(pe[1]))

    def leading(self):
        """((pos, mono), coeff) of the leading term."""
        if not self.terms:
            raise ValueError("leading term of zero vector")
        key = self.ring.order.key
        k = max(self.terms, key=lambda pe: (-pe[0], key(pe[1])))
        return k, self.terms[k]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.leading()
        one = self.ring.field.one()
        if c == one:
            return self
        return self.scale(one / c)

    def embed(self, rank, offset):
        """Include into P^rank with positions shifted by offset."""
        return Vect(self.ring, rank,
                    {(p + offset, e): c for (p, e), c in self.terms.items()})

    def restrict(self, lo, hi):
        """The slice of positions [lo, hi) as a vector of rank hi-lo."""
        return Vect(self.ring, hi - lo,
                    {(p - lo, e): c for (p, e), c in self.terms.items() if lo <= p < hi})

    def sort_key(self):
        """Deterministic total key used to sort basis/generator lists."""
        key = self.ring.order.key
        return sorted(((-p, key(e)) for (p, e) in self.terms), reverse=True)

    def __eq__(self, other):
        return (isinstance(other, Vect) and self.ring == other.ring
                and self.rank == other.rank and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, self.rank, frozenset(self.terms.items())))

    def __repr__(self):
        return "Vect[%s]" % "; ".join(str(c) for c in self.components())


def vect_from_poly(poly):
    return Vect.from_polys(poly.ring, [poly])


def normal_form(f, basis):
    """Remainder of f under full division by basis; no term of the result is
    divisible by any leading term of the basis.  Deterministic: the first
    reducer in list order wins."""
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    key = ring.order.key
    leads = [(g.leading(), g) for g in basis]
    remainder = {}
    work = dict(f.terms)
    while work:
        k = max(work, key=lambda pe: (-pe[0], key(pe[1])))
        pos, exp = k
        coeff = work.pop(k)
        reduced = False
        for ((gpos, gexp), gcoeff), g in leads:
            if gpos == pos and mono_divides(gexp, exp):
                factor_exp = mono_div(exp, gexp)
                factor_c = coeff / gcoeff
                for (p2, e2), c2 in g.terms.items():
                    k2 = (p2, mono_mul(e2, factor_exp))
                    if k2 == k:
                        continue
                    s = work.get(k2, None)
                    v = c2 * factor_c
                    if s is None:
                        if k2 in remainder:
                            # terms below current max already moved out stay there
                            s2 = remainder[k2] - v
                            if s2:
                                remainder[k2] = s2
                            else:
                                del remainder[k2]
                            continue
                        work[k2] = -v
                    else:
                        s = s - v
                        if s:
                            work[k2] = s
                        else:
                            del work[k2]
                reduced = True
                break
        if not reduced:
            remainder[k] = coeff
    return Vect(ring, f.rank, remainder)


def _s_pair(f, g):
    """S-vector of f and g; leading terms must share a position."""
    (pos, ef), cf = f.leading()
    (posg, eg), cg = g.leading()
    assert pos == posg
    lcm = mono_lcm(ef, eg)
    one = f.ring.field.one()
    return (f.term_mul(mono_div(lcm, ef), one / cf)
            - g.term_mul(mono_div(lcm, eg), one / cg))


def buchberger(gens, interreduce=True):
    """Reduced Groebner basis of the submodule generated by gens (list of Vect).

    The product criterion is applied in the rank-1 (ideal) case only, where it
    is valid.  Returns a deterministically sorted, monic, reduced basis.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return []
    ring = gens[0].ring
    rank = gens[0].rank
    for g in gens:
        if g.ring != ring:
            raise RingMismatchError(ring, g.ring)
        if g.rank != rank:
            raise ValueError("rank mismatch among generators")

    basis = [g.monic() for g in gens]
    pairs = []

    def add_pairs(new_index):
        (pos_n, e_n), _ = basis[new_index].leading()
        for i in range(new_index):
            (pos_i, e_i), _ = basis[i].leading()
            if pos_i != pos_n:
                continue
            if rank == 1 and mono_lcm(e_i, e_n) == mono_mul(e_i, e_n):
                continue  # product criterion (ideal case)
            deg = sum(mono_lcm(e_i, e_n))
            pairs.append((deg, i, new_index))

    for idx in range(len(basis)):
        add_pairs(idx)

    while pairs:
        pairs.sort()
        _, i, j = pairs.pop(0)
        s = _s_pair(basis[i], basis[j])
        r = normal_form(s, basis)
        if not r.is_zero():
            basis.append(r.monic())
            add_pairs(len(basis) - 1)

    if not interreduce:
        return basis

    # minimalize: drop elements whose leading term is divisible by another's
    basis.sort(key=lambda g: g.sort_key())
    minimal = []
    for idx, g in enumerate(basis):
        (pos, e), _ = g.leading()
        keep = True
        for jdx, h in enumerate(basis):
            if jdx == idx:
                continue
            (hpos, he), _ = h.leading()
            if hpos == pos and mono_divides(he, e):
                if he != e or jdx < idx:
                    keep = False
                    break
        if keep:
            minimal.append(g)

    # tail-reduce each element against the others
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        reduced.append(normal_form(g, others).monic())
    reduced = [g for g in reduced if not g.is_zero()]
    reduced.sort(key=lambda g: g.sort_key())
    return reduced


def is_groebner_certificate(basis):
    """Buchberger certificate: every S-pair of the basis reduces to zero."""
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            (pi, _), _ = basis[i].leading()
            (pj, _), _ = basis[j].leading()
            if pi != pj:
                continue
            if not normal_form(_s_pair(basis[i], basis[j]), basis).is_zero():
                return False
    return True


def member(f, basis):
    """Submodule membership via normal form."""
    return normal_form(f, basis).is_zero()


def syzygies(gens):
    """Generating set of the syzygy module of gens (list of Vect in P^r).

    Computed by a Groebner basis of the graph elements g_i (+) e_i inside
    P^(r+k) under an order where the first r positions dominate; basis
    elements with vanishing first block have syzygy parts generating the
    kernel of P^k -> P^r.
    """
    gens = list(gens)
    if not gens:
        return []
    ring = gens[0].ring
    r = gens[0].rank
    k = len(gens)
    graph = []
    for i, g in enumerate(gens):
        graph.append(g.embed(r + k, 0) + Vect.unit(ring, r + k, r + i))
    gb = buchberger(graph)
    result = []
    for g in gb:
        if all(p >= r for (p, _) in g.terms):
            result.append(g.restrict(r, r + k))
    result.sort(key=lambda s: s.sort_key())
    return result


def lt_ideal_dimension(gb, nvars):
    """Krull dimension of k[x]/J from the leading-term ideal of a rank-1 basis:
    the size of the largest variable subset S such that no leading monomial is
    supported entirely inside S."""
    if any(g.rank != 1 for g in gb):
        raise ValueError("dimension is defined for rank-1 (ideal) bases")
    lead_supports = []
    for g in gb:
        (_, e), _ = g.leading()
        lead_supports.append(frozenset(i for i, x in enumerate(e) if x > 0))
    if frozenset() in lead_supports:
        return -1  # unit ideal: empty ring, handled by callers
    from itertools import combinations
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            s = set(subset)
            if not any(sup <= s for sup in lead_supports):
                return size
    return 0
