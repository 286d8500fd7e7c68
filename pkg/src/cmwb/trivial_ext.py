"""Trivial (Nagata) extension of a ring presentation by a module, and the
verification harness for its Cohen-Macaulay transfer law.

The extension ring of R = k[x]/J by M = coker(A) on g generators is the
quotient ring

    T = k[x, y1..yg] / ( J  +  < sum_i A[i][j]*y_i : columns j >  +  <y_i*y_j> )

with the projection back to R killing every y.  Representing T as a quotient
polynomial ring lets the whole Groebner stack (dimension, depth, homology)
run on it unchanged; the pair model (r, m) with componentwise multiplication
is kept only as a differential-testing oracle for small ring arithmetic.
"""

from __future__ import annotations

from .cm import cm_check, maximal_cm_check
from .groebner import Vect, buchberger, vect_from_poly
from .invariants import NEG_INF, module_dimension
from .modules import ModulePresentation, RingPresentation, RingSequence
from .sequences import is_regular_sequence, is_weakly_proregular


class TrivialExtension:
    """T = R ⨝ M as an explicit quotient-ring presentation."""

    def __init__(self, ring_pres, module, check=True):
        if module.ring != ring_pres:
            raise ValueError("module is not over the given ring")
        if module.is_zero():
            raise ValueError("trivial extension by the zero module")
        self.base_ring = ring_pres
        self.module = module
        P = ring_pres.poly_ring
        g = module.gens
        # fresh y-variable names, deterministic
        names = []
        used = set(P.variables)
        i = 0
        while len(names) < g:
            cand = "y" if (g == 1 and "y" not in used) else "y%d" % (i + 1)
            i += 1
            if cand not in used:
                used.add(cand)
                names.append(cand)
        self.module_vars = tuple(names)
        big = P
        for name in self.module_vars:
            big = big.extend(name)
        self.poly_ring = big
        yg = [big.gen(n) for n in self.module_vars]
        ideal = [big.lift(f) for f in ring_pres.ideal_gens]
        for col in module.relation_columns:
            acc = big.zero()
            for i, comp in enumerate(col.components()):
                acc = acc + big.lift(comp) * yg[i]
            if not acc.is_zero():
                ideal.append(acc)
        for i in range(g):
            for j in range(i, g):
                ideal.append(yg[i] * yg[j])
        self.ring = RingPresentation(big, ideal)
        self.as_module = self.ring.free_module(1)
        if check:
            self.certify()

    # -- construction invariants --------------------------------------------

    def certify(self):
        if not self.square_zero_certificate():
            raise AssertionError("module ideal does not square to zero")
        if not self.projection_certificate():
            raise AssertionError("T/(y) does not present the base ring")
        if not self.module_ideal_certificate():
            raise AssertionError("the ideal (y) does not re-present the module")

    def square_zero_certificate(self):
        yg = [self.poly_ring.gen(n) for n in self.module_vars]
        return all(self.ring.reduce(a * b).is_zero()
                   for a in yg for b in yg)

    def projection_certificate(self):
        """Reduced bases of T/(y) and of R coincide after killing the y's."""
        big = self.poly_ring
        gens = [vect_from_poly(big.lift(f)) for f in self.base_ring.ideal_gens]
        gens += [vect_from_poly(big.gen(n)) for n in self.module_vars]
        quotient_basis = buchberger(gens)
        ext_gens = [vect_from_poly(g) for g in self.ring.ideal_gens]
        ext_gens += [vect_from_poly(big.gen(n)) for n in self.module_vars]
        return buchberger(ext_gens) == quotient_basis

    def module_ideal_certificate(self):
        """The ideal (y1..yg) of T, as a T-module, has the relation submodule
        predicted by M's presentation: base-changed columns of A, the
        products y_i * e_j, and J * e_j."""
        big = self.poly_ring
        g = self.module.gens
        yg = [big.gen(n) for n in self.module_vars]
        gens = [vect_from_poly(y) for y in yg]
        T_mod = self.ring.free_module(1)
        sub = T_mod.subquotient(gens, [])
        computed = sub.relation_basis()
        expected = []
        for col in self.module.relation_columns:
            expected.append(Vect.from_polys(
                big, [big.lift(p) for p in col.components()]))
        for i in range(g):
            for j in range(g):
                expected.append(Vect.from_polys(
                    big, [yg[i] if k == j else big.zero() for k in range(g)]))
        for f in self.base_ring.ideal_gens:
            for j in range(g):
                expected.append(Vect.from_polys(
                    big, [big.lift(f) if k == j else big.zero()
                          for k in range(g)]))
        return buchberger(expected) == computed

    # -- maps ----------------------------------------------------------------

    def project_poly(self, poly):
        """pi: T -> R, substitute every y by zero."""
        y_indices = {self.poly_ring._var_index[n] for n in self.module_vars}
        base_n = self.base_ring.poly_ring.nvars
        terms = {}
        for e, c in poly.terms.items():
            if any(e[i] for i in y_indices):
                continue
            key = e[:base_n]
            cur = terms.get(key)
            if cur is None:
                terms[key] = c
            else:
                cur = cur + c
                if cur:
                    terms[key] = cur
                else:
                    del terms[key]
        return self.base_ring.reduce(self.base_ring.poly_ring.from_terms(terms))

    def project_sequence(self, seq):
        return RingSequence(self.base_ring,
                            [self.project_poly(x) for x in seq])

    def lift_sequence(self, seq):
        """Inclusion R -> T applied to a sequence in R."""
        big = self.poly_ring
        return RingSequence(self.ring, [big.lift(x) for x in seq])


def build_trivial_extension(ring_pres, module, check=True):
    return TrivialExtension(ring_pres, module, check=check)


def quotient_iso_check(ext, seq):
    """T/xT is the trivial extension of (R/xR, M/xM): reduced ideal bases
    coincide under the canonical variable correspondence."""
    big = ext.poly_ring
    # left side: T / (x)
    left_gens = [vect_from_poly(g) for g in ext.ring.ideal_gens]
    left_gens += [vect_from_poly(big.lift(x)) for x in seq]
    left = buchberger(left_gens)
    # right side: trivial extension of the quotient pair
    qring = RingPresentation(ext.base_ring.poly_ring,
                             list(ext.base_ring.ideal_gens) + list(seq.elements))
    qmod = ModulePresentation(qring, ext.module.gens,
                              ext.module.relation_columns)
    if qmod.is_zero():
        # degenerate: M/xM = 0, no trivial extension on the right
        return None
    right_ext = TrivialExtension(qring, qmod, check=False)
    # same y names because generator count matches and base vars agree
    assert right_ext.module_vars == ext.module_vars
    right = buchberger([vect_from_poly(g) for g in right_ext.ring.ideal_gens])
    return left == right


def lemma_w_check(ext, seq, n_max=3, defect_max=4):
    """Weak proregularity transfers between the extension and the base: a
    sequence in T is weakly proregular on T iff its projection is weakly
    proregular on both R and M.  Evaluated at the probed bounds; undetermined
    outcomes are reported, never coerced."""
    on_T = is_weakly_proregular(seq, ext.as_module, n_max, defect_max)
    proj = ext.project_sequence(seq)
    on_R = is_weakly_proregular(proj, ext.base_ring.free_module(1),
                                n_max, defect_max)
    on_M = is_weakly_proregular(proj, ext.module, n_max, defect_max)
    outcomes = (on_T.outcome, on_R.outcome, on_M.outcome)
    if "undetermined_at_bound" in outcomes:
        biconditional = None
    else:
        biconditional = (on_T.outcome == "yes") == (
            on_R.outcome == "yes" and on_M.outcome == "yes")
    return {"sequence": [str(x) for x in seq],
            "projected": [str(x) for x in proj],
            "on_extension": on_T.to_json(),
            "on_base_ring": on_R.to_json(),
            "on_module": on_M.to_json(),
            "biconditional_holds": biconditional}


def theorem_harness(ring_pres, module, pool_budget=24):
    """Full transfer-law verification for one (R, M) pair.

    Computes the Cohen-Macaulay verdicts of T = R ⨝ M and R, the maximal-CM
    verdict of M, and the regular-to-weak-regular transfer over the base
    pool; asserts that cm(T) holds exactly when R is CM and M is maximal CM.
    """
    ext = build_trivial_extension(ring_pres, module)
    cm_T = cm_check(ext.as_module, budget=pool_budget)
    cm_R = cm_check(ring_pres.free_module(1), budget=pool_budget)
    max_cm = maximal_cm_check(module, ring_pres.free_module(1))
    from .cm import auto_pool
    transfer_rows = []
    transfer_ok = True
    for seq in auto_pool(ring_pres.free_module(1), budget=pool_budget):
        reg_R = is_regular_sequence(seq, ring_pres.free_module(1), weak=False)
        if not reg_R.is_yes:
            continue
        weak_M = is_regular_sequence(seq, module, weak=True)
        transfer_rows.append({"sequence": [str(x) for x in seq],
                              "regular_on_ring": True,
                              "weak_regular_on_module": weak_M.is_yes})
        if not weak_M.is_yes:
            transfer_ok = False
    lhs = cm_T.is_cm
    rhs = cm_R.is_cm and max_cm["maximal_cm"]
    record = {
        "extension_ring": repr(ext.ring),
        "dim_extension": _json_dim(module_dimension(ext.as_module)),
        "dim_ring": _json_dim(module_dimension(ring_pres.free_module(1))),
        "dim_module": _json_dim(module_dimension(module)),
        "cm_extension": cm_T.to_json(),
        "cm_ring": cm_R.to_json(),
        "maximal_cm_module": max_cm,
        "regular_transfer": {"rows": transfer_rows,
                             "all_transfer": transfer_ok},
        "equivalence": {"cm_extension": lhs,
                        "cm_ring_and_maximal_cm_module": rhs,
                        "holds": lhs == rhs},
    }
    return record


def _json_dim(d):
    if d == NEG_INF:
        return "-inf"
    return d


class PairOracle:
    """Differential-testing model of the extension ring: pairs (r, m) with
    (r, m)(r', m') = (rr', rm' + r'm).  Used only in tests, on small inputs."""

    def __init__(self, ext):
        self.ext = ext

    def split(self, poly):
        """Decompose a reduced element of T into (base part, module part),
        where the module part is the vector of y-coefficients."""
        big = self.ext.poly_ring
        base_n = self.ext.base_ring.poly_ring.nvars
        g = self.ext.module.gens
        y_idx = [big._var_index[n] for n in self.ext.module_vars]
        r_terms = {}
        m_cols = [dict() for _ in range(g)]
        for e, c in poly.terms.items():
            ydeg = [e[i] for i in y_idx]
            total = sum(ydeg)
            if total == 0:
                r_terms[e[:base_n]] = c
            elif total == 1:
                which = ydeg.index(1)
                m_cols[which][e[:base_n]] = c
            else:
                raise AssertionError("unreduced element: quadratic y term")
        base = self.ext.base_ring.poly_ring.from_terms(r_terms)
        parts = [self.ext.base_ring.poly_ring.from_terms(t) for t in m_cols]
        return base, parts

    def mul(self, a, b):
        """(r, m)(r', m') computed componentwise, then reassembled in T."""
        ra, ma = self.split(self.ext.ring.reduce(a))
        rb, mb = self.split(self.ext.ring.reduce(b))
        r = ra * rb
        m = [ra * q + rb * p for p, q in zip(ma, mb)]
        big = self.ext.poly_ring
        out = big.lift(r)
        for i, comp in enumerate(m):
            out = out + big.lift(comp) * big.gen(self.ext.module_vars[i])
        return self.ext.ring.reduce(out)
