"""Sequence predicates: regular, weakly proregular, parameter, strong parameter.

Weak proregularity is a bounded semi-decision: for each probed level n we
search for a defect d with the induced Koszul homology maps from level n+d
down to level n all zero.  "undetermined_at_bound" is a first-class outcome
and is never coerced to "no".

The parameter predicate is decided by the height test (height of the
generated ideal on the module equals the sequence length), which is
equivalent to the cohomological definition over the Noetherian finitely
generated scope of this kernel; the weak-proregularity and proper-quotient
conditions are certified alongside and recorded in the verdict.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .invariants import POS_INF, height_on_module
from .koszul import tower_map
from .modules import RingSequence

DEFAULT_N_MAX = 3
DEFAULT_DEFECT_MAX = 4

YES = "yes"
NO = "no"
UNDETERMINED = "undetermined_at_bound"


@dataclass
class SequenceVerdict:
    kind: str                      # regular | weakly_proregular | parameter | strong_parameter
    outcome: str                   # yes | no | undetermined_at_bound
    witness: dict = field(default_factory=dict)
    bounds: dict = field(default_factory=dict)
    details: dict = field(default_factory=dict)

    @property
    def is_yes(self):
        return self.outcome == YES

    def to_json(self):
        out = {"kind": self.kind, "outcome": self.outcome}
        if self.witness:
            out["witness"] = self.witness
        if self.bounds:
            out["bounds"] = self.bounds
        if self.details:
            out["details"] = self.details
        return out


def _vect_str(v):
    return "[" + "; ".join(str(c) for c in v.components()) + "]"


def is_regular_sequence(seq, module, weak=False):
    """Each element a non-zero-divisor on the successive quotients; the
    strict version additionally requires the final quotient to be nonzero.
    The empty sequence is regular on every module."""
    if len(seq) == 0:
        return SequenceVerdict("regular", YES,
                               details={"weak": weak, "reason": "empty sequence"})
    current = module
    for i, x in enumerate(seq):
        ok, witness = current.is_nonzerodivisor(x)
        if not ok:
            return SequenceVerdict(
                "regular", NO,
                witness={"failing_index": i, "element": str(x),
                         "kernel_generator": _vect_str(witness)})
        if i + 1 < len(seq):
            current = current.quotient_by_sequence(
                RingSequence(seq.ring, [x]))
    if not weak:
        if module.quotient_by_sequence(seq).is_zero():
            return SequenceVerdict("regular", NO,
                                   witness={"reason": "sequence generates the unit action: xM = M"})
    return SequenceVerdict("regular", YES,
                           details={"weak": weak})


def _single_element_stabilizes(x, module, bound):
    """(0 : x^n) = (0 : x^(n+1)) for some n <= bound; returns (n, found)."""
    for n in range(1, bound + 1):
        xn = x ** n
        higher = module.colon_generators(x ** (n + 1))
        colon_basis = None
        stable = True
        for v in higher:
            # v kills x^(n+1); stable iff it already kills x^n (mod relations)
            if not module.contains(v.poly_mul(xn)):
                stable = False
                break
        if stable:
            return n, True
    return bound, False


def is_weakly_proregular(seq, module,
                         n_max=DEFAULT_N_MAX, defect_max=DEFAULT_DEFECT_MAX):
    """Bounded check of weak proregularity.

    Fast paths: the empty sequence is vacuously weakly proregular; any weak
    regular sequence is (all higher homology vanishes at every power); a
    single element is weakly proregular iff its annihilator tower stabilizes.
    """
    bounds = {"n_max": n_max, "defect_max": defect_max}
    if len(seq) == 0:
        return SequenceVerdict("weakly_proregular", YES, bounds=bounds,
                               details={"reason": "empty sequence"})
    reg = is_regular_sequence(seq, module, weak=True)
    if reg.is_yes:
        return SequenceVerdict("weakly_proregular", YES, bounds=bounds,
                               details={"reason": "weak regular sequence"})
    if len(seq) == 1:
        n, found = _single_element_stabilizes(seq[0], module,
                                              n_max + defect_max)
        if found:
            return SequenceVerdict("weakly_proregular", YES, bounds=bounds,
                                   details={"reason": "annihilator tower stabilizes",
                                            "stable_at": n})
        return SequenceVerdict("weakly_proregular", UNDETERMINED, bounds=bounds,
                               witness={"reason": "no stabilization up to bound",
                                        "bound": n_max + defect_max})

    defects = {}
    for n in range(1, n_max + 1):
        found = None
        for m in range(n, n + defect_max + 1):
            tm = tower_map(seq, module, m, n)
            if all(tm.induced_map_is_zero(i) for i in range(1, len(seq) + 1)):
                found = m - n
                break
        if found is None:
            return SequenceVerdict(
                "weakly_proregular", UNDETERMINED, bounds=bounds,
                witness={"failing_level": n, "defect_bound": defect_max})
        defects[n] = found
    return SequenceVerdict("weakly_proregular", YES, bounds=bounds,
                           details={"defects": defects})


def is_parameter_sequence(seq, module,
                          n_max=DEFAULT_N_MAX, defect_max=DEFAULT_DEFECT_MAX):
    """Height test: the sequence is a parameter sequence iff the height of the
    generated ideal on the module equals the sequence length.  The verdict
    also records the weak-proregularity and proper-quotient certificates."""
    l = len(seq)
    if l == 0:
        return SequenceVerdict("parameter", YES,
                               details={"reason": "empty sequence"})
    ht = height_on_module(list(seq), module)
    wpr = is_weakly_proregular(seq, module, n_max, defect_max)
    proper = not module.quotient_by_sequence(seq).is_zero()
    details = {"height": "inf" if ht == POS_INF else ht,
               "length": l,
               "weakly_proregular": wpr.outcome,
               "proper_quotient": proper}
    if ht == l:
        if not proper:
            # ht finite forces xM != M in scope; cross-check defensively
            return SequenceVerdict("parameter", NO, witness={"reason": "xM = M"},
                                   details=details)
        return SequenceVerdict("parameter", YES, details=details)
    return SequenceVerdict(
        "parameter", NO,
        witness={"height": "inf" if ht == POS_INF else ht, "length": l},
        details=details)


def is_strong_parameter_sequence(seq, module,
                                 n_max=DEFAULT_N_MAX,
                                 defect_max=DEFAULT_DEFECT_MAX):
    """Every prefix is a parameter sequence; the witness names the first
    failing prefix."""
    prefix_outcomes = []
    for i in range(1, len(seq) + 1):
        v = is_parameter_sequence(seq.prefix(i), module, n_max, defect_max)
        prefix_outcomes.append(v.outcome)
        if not v.is_yes:
            return SequenceVerdict(
                "strong_parameter", v.outcome,
                witness={"failing_prefix_length": i,
                         "prefix_verdict": v.to_json()},
                details={"prefix_outcomes": prefix_outcomes})
    return SequenceVerdict("strong_parameter", YES,
                           details={"prefix_outcomes": prefix_outcomes})
