"""cmwb: exact-arithmetic workbench for commutative algebra over polynomial
quotient rings.

Core objects: sparse polynomials over QQ or GF(p), Groebner bases with
syzygies, cokernel module presentations, Koszul complexes, and on top of
them the sequence taxonomy (regular, weakly proregular, parameter, strong
parameter), grade/height/dimension invariants, Cohen-Macaulay verdicts, and
trivial (Nagata) extensions with their transfer-law harness.
"""

from .fields import QQ, PrimeField, parse_field
from .poly import MonomialOrder, Polynomial, PolyRing
from .groebner import Vect, buchberger, member, normal_form, syzygies
from .modules import ModulePresentation, RingPresentation, RingSequence
from .koszul import koszul_complex, tower_map
from .invariants import (NEG_INF, POS_INF, UnsupportedIdealError,
                         InternalConsistencyError, grade, grade_of_ideal,
                         height_on_module, minimal_primes, module_dimension,
                         pgrade)
from .sequences import (SequenceVerdict, is_parameter_sequence,
                        is_regular_sequence, is_strong_parameter_sequence,
                        is_weakly_proregular)
from .cm import CmVerdict, auto_pool, classical_certificate, cm_check, maximal_cm_check
from .trivial_ext import (TrivialExtension, build_trivial_extension,
                          lemma_w_check, quotient_iso_check, theorem_harness)
from .inputfmt import WorkbenchInput, format_input, parse_input

__version__ = "0.1.0"

__all__ = [
    "QQ", "PrimeField", "parse_field",
    "MonomialOrder", "Polynomial", "PolyRing",
    "Vect", "buchberger", "member", "normal_form", "syzygies",
    "ModulePresentation", "RingPresentation", "RingSequence",
    "koszul_complex", "tower_map",
    "NEG_INF", "POS_INF", "UnsupportedIdealError", "InternalConsistencyError",
    "grade", "grade_of_ideal", "height_on_module", "minimal_primes",
    "module_dimension", "pgrade",
    "SequenceVerdict", "is_parameter_sequence", "is_regular_sequence",
    "is_strong_parameter_sequence", "is_weakly_proregular",
    "CmVerdict", "auto_pool", "classical_certificate", "cm_check",
    "maximal_cm_check",
    "TrivialExtension", "build_trivial_extension", "lemma_w_check",
    "quotient_iso_check", "theorem_harness",
    "WorkbenchInput", "format_input", "parse_input",
    "__version__",
]
