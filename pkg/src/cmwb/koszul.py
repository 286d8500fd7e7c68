"""Koszul complexes of ring sequences with module coefficients.

The complex for x1..xl on M is the tensor product of the two-term complexes
M --xi--> M.  Degree i has the wedge basis indexed by the size-i subsets of
{0..l-1} in lexicographic order, tensored with the module generators, so the
ambient free module at degree i has rank C(l,i) * g.  The sign convention is
the standard wedge one, certified at build time by d o d = 0.

The inter-level chain maps between the complexes of x^m and x^n (m >= n) are
diagonal: on the wedge basis vector of subset S they multiply by
prod_{k in S} x_k^(m-n).
"""

from __future__ import annotations

from itertools import combinations
from math import comb

from .groebner import Vect, buchberger, member, syzygies
from .modules import ModulePresentation
from .poly import PolyMatrix


class ChainComplex:
    """Koszul complex of a sequence on a module, with differentials as
    explicit columns over the polynomial ring."""

    def __init__(self, seq, module, power=1):
        if len(seq) >= 1 and power < 1:
            raise ValueError("power must be a positive integer")
        self.seq = seq
        self.module = module
        self.power = power
        self.ring = module.ring
        self.length = len(seq)
        self.g = module.gens
        P = module.poly_ring
        self.elements = [self.ring.reduce(x ** power) for x in seq]
        l = self.length
        self.subsets = [list(combinations(range(l), i)) for i in range(l + 1)]
        self.ranks = [comb(l, i) * self.g for i in range(l + 1)]
        # differentials[i] : degree i -> degree i-1, as columns (one per
        # ambient basis vector of degree i), for i = 1..l
        self.differentials = [None]
        for i in range(1, l + 1):
            index_below = {s: k for k, s in enumerate(self.subsets[i - 1])}
            cols = []
            for s in self.subsets[i]:
                for j in range(self.g):
                    terms = {}
                    for t, var in enumerate(s):
                        s2 = s[:t] + s[t + 1:]
                        block = index_below[s2]
                        coeff_poly = self.elements[var]
                        sign = 1 if t % 2 == 0 else -1
                        for e, c in coeff_poly.terms.items():
                            key = (block * self.g + j, e)
                            cur = terms.get(key)
                            v = c if sign > 0 else -c
                            if cur is None:
                                terms[key] = v
                            else:
                                cur = cur + v
                                if cur:
                                    terms[key] = cur
                                else:
                                    del terms[key]
                    cols.append(Vect(P, self.ranks[i - 1], terms))
            self.differentials.append(cols)
        self._cache = {}

    def differential_matrix(self, i):
        """d_i as a PolyMatrix (rows = rank at degree i-1, cols = degree i)."""
        P = self.module.poly_ring
        cols = self.differentials[i]
        m = PolyMatrix(P, self.ranks[i - 1], self.ranks[i])
        for j, col in enumerate(cols):
            for r, p in enumerate(col.components()):
                m[r, j] = p
        return m

    def boundary_certificate(self):
        """d_i o d_{i+1} = 0, exactly, in every degree."""
        for i in range(1, self.length):
            for col in self.differentials[i + 1]:
                image = Vect.zero(self.module.poly_ring, self.ranks[i - 1])
                for (pos, e), c in col.terms.items():
                    image = image + self.differentials[i][pos].term_mul(e, c)
                if not image.is_zero():
                    return False
        return True

    def degree_relations(self, i):
        """Relation submodule of degree i: block copies of the module's
        relation submodule (including J * e_j)."""
        key = ("rels", i)
        if key not in self._cache:
            nblocks = comb(self.length, i)
            rels = []
            for b in range(nblocks):
                for r in self.module.full_relations():
                    rels.append(r.embed(self.ranks[i], b * self.g))
            self._cache[key] = rels
        return self._cache[key]

    def cycle_generators(self, i):
        """Generators of {v in P^(rank i) : d_i(v) in relations of degree i-1}.
        For i = 0 these are the ambient unit vectors."""
        key = ("cycles", i)
        if key in self._cache:
            return self._cache[key]
        P = self.module.poly_ring
        if i == 0:
            result = [Vect.unit(P, self.ranks[0], j) for j in range(self.ranks[0])]
        else:
            cols = self.differentials[i]
            rels = self.degree_relations(i - 1)
            sy = syzygies(cols + rels)
            n = len(cols)
            result = []
            seen = set()
            for s in sy:
                v = Vect(P, n, {(p, e): c for (p, e), c in s.terms.items() if p < n})
                if not v.is_zero():
                    v = v.monic()
                    if v not in seen:
                        seen.add(v)
                        result.append(v)
            result.sort(key=lambda v: v.sort_key())
        self._cache[key] = result
        return result

    def boundary_submodule_basis(self, i):
        """Groebner basis of im(d_{i+1}) + relations at degree i."""
        key = ("bnd", i)
        if key not in self._cache:
            gens = list(self.degree_relations(i))
            if i < self.length:
                gens += self.differentials[i + 1]
            self._cache[key] = buchberger(gens)
        return self._cache[key]

    def homology_is_zero(self, i):
        """True iff every cycle generator is a boundary (modulo relations)."""
        if not 0 <= i <= self.length:
            raise IndexError("homological degree %d out of range" % i)
        basis = self.boundary_submodule_basis(i)
        return all(member(z, basis) for z in self.cycle_generators(i))

    def homology(self, i):
        """H_i as a module presentation (cycles modulo boundaries)."""
        if not 0 <= i <= self.length:
            raise IndexError("homological degree %d out of range" % i)
        ambient = ModulePresentation(self.ring, self.ranks[i],
                                     [])  # carrier for the subquotient call
        extra = list(self.degree_relations(i))
        if i < self.length:
            extra += self.differentials[i + 1]
        # degree_relations already contains J*e; ambient has none, so pass all
        return ambient.subquotient(self.cycle_generators(i), extra)


def koszul_complex(seq, module, power=1):
    return ChainComplex(seq, module, power)


class KoszulTowerMap:
    """The chain map from the complex at power m down to power n (m >= n):
    diagonal multiplication by prod_{k in S} x_k^(m-n) on each wedge block."""

    def __init__(self, seq, module, m, n):
        if m < n:
            raise ValueError("tower map needs m >= n (got m=%d, n=%d)" % (m, n))
        self.seq = seq
        self.module = module
        self.m = m
        self.n = n
        self.source = ChainComplex(seq, module, m)
        self.target = ChainComplex(seq, module, n)
        self.ring = module.ring
        self._rel_cache = {}

    def _target_relation_basis(self, i):
        if i not in self._rel_cache:
            self._rel_cache[i] = buchberger(self.target.degree_relations(i))
        return self._rel_cache[i]

    def block_multiplier(self, subset):
        P = self.module.poly_ring
        f = P.one()
        for k in subset:
            f = f * (self.seq[k] ** (self.m - self.n))
        return self.ring.reduce(f)

    def degree_matrix(self, i):
        """The degree-i component as a PolyMatrix (block diagonal)."""
        P = self.module.poly_ring
        r = self.source.ranks[i]
        mat = PolyMatrix(P, r, r)
        for b, s in enumerate(self.source.subsets[i]):
            f = self.block_multiplier(s)
            for j in range(self.module.gens):
                mat[b * self.module.gens + j, b * self.module.gens + j] = f
        return mat

    def apply(self, i, vect):
        """Apply the degree-i map to an ambient vector of the source."""
        P = self.module.poly_ring
        g = self.module.gens
        out = Vect.zero(P, self.target.ranks[i])
        for b, s in enumerate(self.source.subsets[i]):
            block = vect.restrict(b * g, (b + 1) * g)
            if block.is_zero():
                continue
            out = out + block.poly_mul(self.block_multiplier(s)).embed(
                self.target.ranks[i], b * g)
        return out

    def commuting_certificate(self):
        """d_i(target) o phi_i = phi_{i-1} o d_i(source), modulo the J-block
        relations of the target (exact over a plain polynomial ring)."""
        for i in range(1, self.source.length + 1):
            rel_basis = self._target_relation_basis(i - 1)
            for j, col in enumerate(self.source.differentials[i]):
                left = self.apply(i - 1, col)
                unit = Vect.unit(self.module.poly_ring, self.source.ranks[i], j)
                moved = self.apply(i, unit)
                right = Vect.zero(self.module.poly_ring, self.target.ranks[i - 1])
                for (pos, e), c in moved.terms.items():
                    right = right + self.target.differentials[i][pos].term_mul(e, c)
                diff = left - right
                if not diff.is_zero() and not member(diff, rel_basis):
                    return False
        return True

    def induced_map_is_zero(self, i):
        """True iff the induced map on degree-i homology is zero: every cycle
        generator upstairs maps into boundaries (mod relations) downstairs."""
        if i < 1:
            raise ValueError("induced-map test is for homological degree >= 1")
        basis = self.target.boundary_submodule_basis(i)
        for z in self.source.cycle_generators(i):
            if not member(self.apply(i, z), basis):
                return False
        return True


def tower_map(seq, module, m, n):
    return KoszulTowerMap(seq, module, m, n)
