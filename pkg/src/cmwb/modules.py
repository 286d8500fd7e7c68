"""Finitely generated modules as cokernels over polynomial quotient rings.

A ring presentation is k[x1..xn]/J; a module presentation is coker(A) for a
relation matrix A whose columns live in the free module over the ambient
polynomial ring.  Quotient rings are handled uniformly by folding J * e_j
into every relation submodule, so the whole Groebner stack runs over the
plain polynomial ring.
"""

from __future__ import annotations

from .groebner import (Vect, buchberger, member, normal_form, syzygies,
                       vect_from_poly)
class RingPresentation:
    """R = k[x1..xn]/J with a cached Groebner basis of J."""

    def __init__(self, poly_ring, ideal_gens=()):
        self.poly_ring = poly_ring
        self.ideal_gens = tuple(g for g in ideal_gens if not g.is_zero())
        for g in self.ideal_gens:
            if g.ring != poly_ring:
                raise ValueError("ideal generator outside the ambient ring")
        self.ideal_basis = buchberger([vect_from_poly(g) for g in self.ideal_gens])

    def reduce(self, poly):
        """Canonical representative of poly modulo J."""
        if not self.ideal_basis:
            return poly
        return normal_form(vect_from_poly(poly), self.ideal_basis).component(0)

    def is_trivial(self):
        """True iff J = (1), i.e. the quotient ring is zero."""
        return member(vect_from_poly(self.poly_ring.one()), self.ideal_basis)

    def free_module(self, rank=1):
        return ModulePresentation(self, rank, [])

    def parse(self, text):
        return self.reduce(self.poly_ring.parse(text))

    def extend(self):
        """Base change along R -> R[t] (fresh variable name)."""
        t = self.poly_ring.fresh_variable("t")
        big = self.poly_ring.extend(t)
        return RingPresentation(big, [big.lift(g) for g in self.ideal_gens])

    def __eq__(self, other):
        return (isinstance(other, RingPresentation)
                and self.poly_ring == other.poly_ring
                and self.ideal_basis == other.ideal_basis)

    def __hash__(self):
        return hash((self.poly_ring, tuple(self.ideal_basis)))

    def __repr__(self):
        if self.ideal_gens:
            return "Ring(%s / (%s))" % (",".join(self.poly_ring.variables),
                                        ", ".join(str(g) for g in self.ideal_gens))
        return "Ring(%s)" % ",".join(self.poly_ring.variables)


class RingSequence:
    """An ordered sequence of ring elements, reduced modulo J."""

    def __init__(self, ring_pres, elements, name=None):
        self.ring = ring_pres
        self.elements = tuple(ring_pres.reduce(e) for e in elements)
        self.name = name

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def prefix(self, i):
        return RingSequence(self.ring, self.elements[:i])

    def power(self, k):
        return RingSequence(self.ring, [e ** k for e in self.elements])

    def permute(self, perm):
        return RingSequence(self.ring, [self.elements[i] for i in perm])

    def lift(self, big_ring_pres):
        big = big_ring_pres.poly_ring
        return RingSequence(big_ring_pres, [big.lift(e) for e in self.elements])

    def map(self, fn, target_ring_pres):
        return RingSequence(target_ring_pres, [fn(e) for e in self.elements])

    def __eq__(self, other):
        return (isinstance(other, RingSequence) and self.ring == other.ring
                and self.elements == other.elements)

    def __hash__(self):
        return hash((self.ring, self.elements))

    def __repr__(self):
        return "Seq(%s)" % ", ".join(str(e) for e in self.elements)


class ModulePresentation:
    """M = coker(A) over R = k[x]/J, with g generators.

    ``relation_columns`` are the columns of A as vectors in P^g; the full
    relation submodule additionally contains J * e_j for every generator.
    """

    def __init__(self, ring_pres, gens, relation_columns=(), name=None):
        self.ring = ring_pres
        self.gens = gens
        self.name = name
        cols = []
        for c in relation_columns:
            if isinstance(c, (list, tuple)):
                c = Vect.from_polys(ring_pres.poly_ring, list(c))
            if c.rank != gens:
                raise ValueError("relation column rank %d != %d generators"
                                 % (c.rank, gens))
            if not c.is_zero():
                cols.append(c)
        self.relation_columns = tuple(cols)
        self._cache = {}

    @property
    def poly_ring(self):
        return self.ring.poly_ring

    def full_relations(self):
        """Relation columns together with J * e_j for every generator."""
        rels = list(self.relation_columns)
        P = self.poly_ring
        for j in range(self.gens):
            for g in self.ring.ideal_gens:
                rels.append(Vect.from_polys(P, [g if i == j else P.zero()
                                                for i in range(self.gens)]))
        return rels

    def relation_basis(self):
        """Reduced Groebner basis of the full relation submodule (cached)."""
        if "basis" not in self._cache:
            self._cache["basis"] = buchberger(self.full_relations())
        return self._cache["basis"]

    def contains(self, vect):
        """Is the ambient vector zero in M?"""
        return member(vect, self.relation_basis())

    def reduce(self, vect):
        return normal_form(vect, self.relation_basis())

    def is_zero(self):
        return all(self.contains(Vect.unit(self.poly_ring, self.gens, j))
                   for j in range(self.gens))

    def same_presentation(self, other):
        """Identical reduced relation bases on the same generator count."""
        return (self.ring == other.ring and self.gens == other.gens
                and self.relation_basis() == other.relation_basis())

    # -- operations ----------------------------------------------------------

    def quotient_by_sequence(self, seq):
        """M / (x1..xl)M: augment the relation columns by x_i * e_j."""
        P = self.poly_ring
        cols = list(self.relation_columns)
        for x in seq:
            for j in range(self.gens):
                cols.append(Vect.from_polys(P, [x if i == j else P.zero()
                                                for i in range(self.gens)]))
        return ModulePresentation(self.ring, self.gens, cols)

    def colon_generators(self, f):
        """Generators of the ambient colon (N : f) = {v : f*v in N}."""
        P = self.poly_ring
        scaled = [Vect.unit(P, self.gens, j).poly_mul(f) for j in range(self.gens)]
        rels = self.full_relations()
        sy = syzygies(scaled + rels)
        out = []
        seen = set()
        for s in sy:
            v = Vect(P, self.gens,
                     {(p, e): c for (p, e), c in s.terms.items() if p < self.gens})
            v = self.reduce(v)
            if not v.is_zero() and v.monic() not in seen:
                seen.add(v.monic())
                out.append(v.monic())
        out.sort(key=lambda v: v.sort_key())
        return out

    def scalar_kernel(self, f):
        """(0 :_M f) presented as a module (subquotient of M)."""
        gens = self.colon_generators(f)
        return self.subquotient(gens, [])

    def is_nonzerodivisor(self, f):
        """True iff f is a non-zero-divisor on M; otherwise a witness vector
        (nonzero in M, killed by f) is returned as the second element."""
        for v in self.colon_generators(f):
            if not self.contains(v):
                return False, v
        return True, None

    def subquotient(self, generators, extra_relations):
        """Present (<generators> + N') / N' where N' = N + <extra_relations>,
        as a cokernel on len(generators) generators."""
        P = self.poly_ring
        modulus = self.full_relations() + list(extra_relations)
        if not generators:
            return ModulePresentation(self.ring, 0, [])
        k = len(generators)
        sy = syzygies(list(generators) + modulus)
        rel_cols = []
        for s in sy:
            c = Vect(P, k, {(p, e): co for (p, e), co in s.terms.items() if p < k})
            if not c.is_zero():
                rel_cols.append(c)
        sub = ModulePresentation(self.ring, k, rel_cols)
        sub._cache["ambient_generators"] = list(generators)
        return sub

    def annihilator(self):
        """Generators of Ann(M) as an ideal of the polynomial ring (contains J)."""
        if "ann" in self._cache:
            return self._cache["ann"]
        P = self.poly_ring
        g = self.gens
        if g == 0:
            return [P.one()]
        # one stacked colon: f with f*e_j in N for all j simultaneously
        big_rank = g * g
        w = Vect(P, big_rank, {})
        for j in range(g):
            w = w + Vect.unit(P, big_rank, j * g + j)
        rels = []
        for j in range(g):
            for r in self.full_relations():
                rels.append(r.embed(big_rank, j * g))
        sy = syzygies([w] + rels)
        out = []
        seen = set()
        for s in sy:
            f = s.component(0)
            if not f.is_zero():
                f = f.monic()
                if f not in seen:
                    seen.add(f)
                    out.append(f)
        ann_basis = buchberger([vect_from_poly(f) for f in out])
        result = [b.component(0) for b in ann_basis]
        self._cache["ann"] = result
        return result

    def annihilator_basis(self):
        if "ann_basis" not in self._cache:
            self._cache["ann_basis"] = buchberger(
                [vect_from_poly(f) for f in self.annihilator()])
        return self._cache["ann_basis"]

    def extend_to_polynomial_ring(self):
        """The same presentation read over R[t] (flat base change)."""
        big_ring = self.ring.extend()
        big = big_ring.poly_ring
        cols = []
        for c in self.relation_columns:
            cols.append(Vect.from_polys(big, [big.lift(p) for p in c.components()]))
        return ModulePresentation(big_ring, self.gens, cols)

    def minimized_relations(self):
        """Relation columns with unit entries eliminated (generator pruning).

        Returns (ngens, columns) of an isomorphic presentation with no
        relation entry equal to a nonzero constant; used for minimal free
        resolutions of graded modules.
        """
        P = self.poly_ring
        cols = [list(c.components()) for c in self.relation_basis()]
        g = self.gens
        live = list(range(g))
        changed = True
        while changed:
            changed = False
            for ci, col in enumerate(cols):
                pivot = None
                for ri_idx, ri in enumerate(live):
                    ent = col[ri_idx]
                    if ent.is_constant() and not ent.is_zero():
                        pivot = ri_idx
                        break
                if pivot is None:
                    continue
                pc = col[pivot].constant_value()
                inv = P.field.one() / pc
                for cj, other in enumerate(cols):
                    if cj == ci:
                        continue
                    oc = other[pivot]
                    if oc.is_zero():
                        continue
                    for ri_idx in range(len(live)):
                        other[ri_idx] = other[ri_idx] - col[ri_idx] * oc.scale(inv)
                del live[pivot]
                for other in cols:
                    del other[pivot]
                del cols[ci]
                changed = True
                break
        vect_cols = [Vect.from_polys(P, col) for col in cols if any(not p.is_zero() for p in col)]
        return len(live), vect_cols

    def projective_dimension(self):
        """Length of the minimal free resolution, by iterated syzygies with
        presentation minimization at every step.  Valid for graded modules."""
        if self.is_zero():
            return 0
        ngens, cols = self.minimized_relations()
        depth = 0
        while cols:
            depth += 1
            basis = buchberger(cols)
            sy = syzygies(basis)
            if not sy:
                break
            step = ModulePresentation(RingPresentation(self.poly_ring, []),
                                      len(basis), sy)
            ngens, cols = step.minimized_relations()
        return depth

    def __repr__(self):
        return "Module(gens=%d, rels=%d over %r)" % (
            self.gens, len(self.relation_columns), self.ring)
