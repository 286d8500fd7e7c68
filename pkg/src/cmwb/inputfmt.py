"""Line-oriented declarative input format for the workbench CLI.

A file declares one ambient ring followed by named modules and sequences,
and optionally self-contained (ring, module) pair blocks for the extension
harness.  Grammar (see docs/INPUT_FORMAT.md for the full description):

    field q | p:<prime>
    vars <name> <name> ...
    order grevlex | grlex | lex
    ideal <poly>, <poly>, ...

    module <name> gens <g>
    rel <poly>, ... (g entries, one relation column)
    end

    sequence <name>: <poly>, <poly>, ...

    pair <name>
    field/vars/order/ideal/gens/rel lines
    end

Blank lines and '#' comments are ignored.  Parsing then printing then
parsing again is the identity on canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .fields import parse_field
from .groebner import Vect
from .modules import ModulePresentation, RingPresentation, RingSequence
from .poly import MonomialOrder, PolyRing


class InputFormatError(ValueError):
    def __init__(self, lineno, message):
        super().__init__("line %d: %s" % (lineno, message))
        self.lineno = lineno


@dataclass
class WorkbenchInput:
    ring: RingPresentation = None
    modules: dict = field(default_factory=dict)     # name -> ModulePresentation
    sequences: dict = field(default_factory=dict)   # name -> RingSequence
    pairs: dict = field(default_factory=dict)       # name -> (ring, module)


class _RingBuilder:
    def __init__(self):
        self.field = None
        self.variables = None
        self.order = MonomialOrder("grevlex")
        self.ideal_texts = []
        self._built = None

    def build(self, lineno):
        if self._built is not None:
            return self._built
        if self.field is None:
            raise InputFormatError(lineno, "no 'field' declared")
        if self.variables is None:
            raise InputFormatError(lineno, "no 'vars' declared")
        poly_ring = PolyRing(self.field, self.variables, self.order)
        ideal = [poly_ring.parse(t) for t in self.ideal_texts]
        self._built = RingPresentation(poly_ring, ideal)
        return self._built


def _split_polys(text):
    """Split a comma-separated polynomial list at depth zero."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    if cur:
        parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_input(text, field_override=None):
    wi = WorkbenchInput()
    builder = _RingBuilder()
    mode = None          # None | ("module", name, g, cols) | ("pair", name, builder, g, cols)
    lines = text.splitlines()
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0].lower()

        if mode is not None and head == "end":
            if mode[0] == "module":
                _, name, g, cols = mode
                ring = builder.build(lineno)
                wi.modules[name] = ModulePresentation(ring, g, cols, name=name)
            else:
                _, name, pb, g, cols = mode
                pring = pb.build(lineno)
                if g is None:
                    raise InputFormatError(lineno, "pair %r has no 'gens'" % name)
                wi.pairs[name] = (pring,
                                  ModulePresentation(pring, g, cols, name=name))
            mode = None
            continue

        if mode is not None and mode[0] == "pair":
            _, name, pb, g, cols = mode
            if head == "field":
                if field_override is None:
                    pb.field = parse_field(line.split(None, 1)[1])
            elif head == "vars":
                pb.variables = tuple(words[1:])
            elif head == "order":
                pb.order = MonomialOrder(words[1].lower())
            elif head == "ideal":
                pb.ideal_texts.extend(_split_polys(line.split(None, 1)[1]))
            elif head == "gens":
                mode = ("pair", name, pb, int(words[1]), cols)
            elif head == "rel":
                ring = pb.build(lineno)
                entries = _split_polys(line.split(None, 1)[1])
                if g is None:
                    raise InputFormatError(lineno, "'rel' before 'gens'")
                if len(entries) != g:
                    raise InputFormatError(
                        lineno, "relation column has %d entries, expected %d"
                        % (len(entries), g))
                cols.append(Vect.from_polys(
                    ring.poly_ring, [ring.poly_ring.parse(e) for e in entries]))
            else:
                raise InputFormatError(lineno, "unexpected %r in pair block" % head)
            continue

        if mode is not None and mode[0] == "module":
            _, name, g, cols = mode
            if head != "rel":
                raise InputFormatError(lineno, "expected 'rel' or 'end' in module block")
            ring = builder.build(lineno)
            entries = _split_polys(line.split(None, 1)[1])
            if len(entries) != g:
                raise InputFormatError(
                    lineno, "relation column has %d entries, expected %d"
                    % (len(entries), g))
            cols.append(Vect.from_polys(
                ring.poly_ring, [ring.poly_ring.parse(e) for e in entries]))
            continue

        if head == "field":
            builder.field = (field_override if field_override is not None
                             else parse_field(line.split(None, 1)[1]))
        elif head == "vars":
            builder.variables = tuple(words[1:])
        elif head == "order":
            builder.order = MonomialOrder(words[1].lower())
        elif head == "ideal":
            builder.ideal_texts.extend(_split_polys(line.split(None, 1)[1]))
        elif head == "module":
            if len(words) < 4 or words[2].lower() != "gens":
                raise InputFormatError(lineno, "expected: module <name> gens <g>")
            mode = ("module", words[1], int(words[3]), [])
        elif head == "sequence":
            if ":" not in line:
                raise InputFormatError(lineno, "expected: sequence <name>: <polys>")
            header, body = line.split(":", 1)
            name = header.split()[1]
            ring = builder.build(lineno)
            elems = [ring.poly_ring.parse(t) for t in _split_polys(body)]
            wi.sequences[name] = RingSequence(ring, elems, name=name)
        elif head == "pair":
            pb = _RingBuilder()
            if field_override is not None:
                pb.field = field_override
            mode = ("pair", words[1], pb, None, [])
        else:
            raise InputFormatError(lineno, "unknown directive %r" % head)

    if mode is not None:
        raise InputFormatError(len(lines), "unterminated %s block" % mode[0])
    if wi.modules or wi.sequences:
        wi.ring = builder.build(len(lines))
    elif builder.field is not None and builder.variables is not None:
        wi.ring = builder.build(len(lines))
    return wi


def _ring_lines(ring_pres):
    out = ["field %s" % ring_pres.poly_ring.field.name,
           "vars %s" % " ".join(ring_pres.poly_ring.variables)]
    if ring_pres.poly_ring.order.kind != "grevlex":
        out.append("order %s" % ring_pres.poly_ring.order.kind)
    if ring_pres.ideal_gens:
        out.append("ideal %s" % ", ".join(str(g) for g in ring_pres.ideal_gens))
    return out


def format_input(wi):
    """Canonical text form of a parsed input; parse(format_input(x)) == x."""
    out = []
    if wi.ring is not None:
        out.extend(_ring_lines(wi.ring))
        out.append("")
    for name, mod in wi.modules.items():
        out.append("module %s gens %d" % (name, mod.gens))
        for col in mod.relation_columns:
            out.append("rel %s" % ", ".join(str(c) for c in col.components()))
        out.append("end")
        out.append("")
    for name, seq in wi.sequences.items():
        out.append("sequence %s: %s" % (name, ", ".join(str(x) for x in seq)))
    if wi.sequences:
        out.append("")
    for name, (ring, mod) in wi.pairs.items():
        out.append("pair %s" % name)
        out.extend(_ring_lines(ring))
        out.append("gens %d" % mod.gens)
        for col in mod.relation_columns:
            out.append("rel %s" % ", ".join(str(c) for c in col.components()))
        out.append("end")
        out.append("")
    return "\n".join(out).rstrip() + "\n"
