"""Sparse multivariate polynomials over an exact field, with monomial orders.

Monomials are exponent tuples whose length equals the ring's variable count.
Polynomials are immutable-by-convention sparse maps monomial -> coefficient;
zero coefficients are never stored.  Every ring carries one active monomial
order, used for canonical printing and by the Groebner engine.
"""

from __future__ import annotations

import re

from .fields import QQ


class RingMismatchError(ValueError):
    """Raised when an operation mixes elements of two different rings."""

    def __init__(self, left, right):
        super().__init__("ring mismatch: %s vs %s" % (left, right))
        self.left = left
        self.right = right


class MonomialOrder:
    """A monomial order: one of grevlex, lex, grlex, with an optional
    variable permutation applied before comparison."""

    KINDS = ("grevlex", "lex", "grlex")

    def __init__(self, kind="grevlex", permutation=None):
        if kind not in self.KINDS:
            raise ValueError("unknown monomial order: %r" % kind)
        self.kind = kind
        self.permutation = tuple(permutation) if permutation is not None else None

    def key(self, exp):
        """Sort key: larger key means larger monomial."""
        if self.permutation is not None:
            exp = tuple(exp[i] for i in self.permutation)
        if self.kind == "lex":
            return exp
        total = sum(exp)
        if self.kind == "grlex":
            return (total, exp)
        return (total, tuple(-e for e in reversed(exp)))

    def compare(self, e1, e2):
        if len(e1) != len(e2):
            raise ValueError("monomial length mismatch: %d vs %d" % (len(e1), len(e2)))
        k1, k2 = self.key(e1), self.key(e2)
        return (k1 > k2) - (k1 < k2)

    def __eq__(self, other):
        return (isinstance(other, MonomialOrder)
                and self.kind == other.kind
                and self.permutation == other.permutation)

    def __hash__(self):
        return hash((self.kind, self.permutation))

    def __repr__(self):
        return "MonomialOrder(%r)" % self.kind


def mono_mul(e1, e2):
    return tuple(a + b for a, b in zip(e1, e2))


def mono_divides(e1, e2):
    """True iff monomial e1 divides e2."""
    return all(a <= b for a, b in zip(e1, e2))


def mono_div(e1, e2):
    """e1 / e2, assuming divisibility."""
    return tuple(a - b for a, b in zip(e1, e2))


def mono_lcm(e1, e2):
    return tuple(max(a, b) for a, b in zip(e1, e2))


class PolyRing:
    """A polynomial ring k[x1..xn] with a fixed field and monomial order."""

    def __init__(self, field, variables, order=None):
        self.field = field
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        self.order = order if order is not None else MonomialOrder("grevlex")
        self.nvars = len(self.variables)
        self._var_index = {v: i for i, v in enumerate(self.variables)}
        self._zero_exp = (0,) * self.nvars

    # -- element constructors ------------------------------------------------

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {self._zero_exp: self.field.one()})

    def constant(self, c):
        c = self.field.from_int(c) if isinstance(c, int) else c
        if not c:
            return self.zero()
        return Polynomial(self, {self._zero_exp: c})

    def gen(self, name):
        i = self._var_index[name]
        exp = tuple(1 if j == i else 0 for j in range(self.nvars))
        return Polynomial(self, {exp: self.field.one()})

    def gens(self):
        return [self.gen(v) for v in self.variables]

    def monomial(self, exp, coeff=None):
        exp = tuple(exp)
        if len(exp) != self.nvars:
            raise ValueError("exponent length %d != %d variables" % (len(exp), self.nvars))
        c = coeff if coeff is not None else self.field.one()
        if not c:
            return self.zero()
        return Polynomial(self, {exp: c})

    def from_terms(self, terms):
        """Build a polynomial from a monomial -> coefficient map, dropping zeros."""
        return Polynomial(self, {e: c for e, c in terms.items() if c})

    def extend(self, new_variable):
        """The ring with one extra variable appended (same field and order kind)."""
        if new_variable in self._var_index:
            raise ValueError("variable %r already present" % new_variable)
        return PolyRing(self.field, self.variables + (new_variable,),
                        MonomialOrder(self.order.kind))

    def lift(self, poly):
        """Reinterpret a polynomial of a sub-ring (prefix of our variables) here."""
        pad = self.nvars - len(poly.ring.variables)
        assert poly.ring.variables == self.variables[:len(poly.ring.variables)]
        return Polynomial(self, {e + (0,) * pad: c for e, c in poly.terms.items()})

    def fresh_variable(self, stem="t"):
        """A variable name not already used in this ring."""
        if stem not in self._var_index:
            return stem
        i = 1
        while "%s%d" % (stem, i) in self._var_index:
            i += 1
        return "%s%d" % (stem, i)

    def parse(self, text):
        return _parse_poly(self, text)

    def __eq__(self, other):
        return (isinstance(other, PolyRing)
                and self.field == other.field
                and self.variables == other.variables
                and self.order == other.order)

    def __hash__(self):
        return hash((self.field, self.variables, self.order))

    def __repr__(self):
        return "PolyRing(%r, vars=%s)" % (self.field, ",".join(self.variables))


class Polynomial:
    """A sparse polynomial; ``terms`` maps exponent tuples to nonzero coefficients."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and self.ring._zero_exp in self.terms)

    def constant_value(self):
        return self.terms.get(self.ring._zero_exp, self.ring.field.zero())

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def _check(self, other):
        if self.ring != other.ring:
            raise RingMismatchError(self.ring, other.ring)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return Polynomial(self.ring, terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other):
        self._check(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = mono_mul(e1, e2)
                c = c1 * c2
                s = terms.get(e)
                if s is None:
                    terms[e] = c
                else:
                    s = s + c
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
        return Polynomial(self.ring, terms)

    def __pow__(self, n):
        result = self.ring.one()
        for _ in range(n):
            result = result * self
        return result

    def scale(self, c):
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {e: coeff * c for e, coeff in self.terms.items()})

    def term_mul(self, exp, c):
        """Multiply by the single term c * x^exp."""
        if not c:
            return self.ring.zero()
        return Polynomial(self.ring, {mono_mul(e, exp): coeff * c
                                      for e, coeff in self.terms.items()})

    def leading(self):
        """(exponent, coefficient) of the leading term under the ring order."""
        if not self.terms:
            raise ValueError("leading term of zero polynomial")
        e = max(self.terms, key=self.ring.order.key)
        return e, self.terms[e]

    def monic(self):
        if not self.terms:
            return self
        _, c = self.leading()
        one = self.ring.field.one()
        if c == one:
            return self
        inv = one / c
        return self.scale(inv)

    def sorted_terms(self):
        """Terms sorted strictly descending under the active order."""
        return sorted(self.terms.items(), key=lambda t: self.ring.order.key(t[0]),
                      reverse=True)

    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return "Poly(%s)" % poly_str(self)


# -- textual syntax ----------------------------------------------------------
#
# Grammar:  expr   := ['-'] term (('+'|'-') term)*
#           term   := factor (('*'|'/') factor)*
#           factor := atom ['^' integer]
#           atom   := integer | variable | '(' expr ')'
# Division is only allowed by constants, e.g. 1/2*x.

_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z0-9_]*|[-+*/^()])")


def _tokenize(text):
    tokens, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ValueError("bad character in polynomial: %r" % text[pos:])
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, ring, tokens):
        self.ring = ring
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i] if self.i < len(self.tokens) else None

    def next(self):
        tok = self.peek()
        self.i += 1
        return tok

    def expr(self):
        sign = 1
        if self.peek() in ("+", "-"):
            sign = -1 if self.next() == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while self.peek() in ("+", "-"):
            op = self.next()
            t = self.term()
            result = result - t if op == "-" else result + t
        return result

    def term(self):
        result = self.factor()
        while self.peek() in ("*", "/"):
            op = self.next()
            f = self.factor()
            if op == "*":
                result = result * f
            else:
                if not f.is_constant() or f.is_zero():
                    raise ValueError("division only by nonzero constants")
                one = self.ring.field.one()
                result = result.scale(one / f.constant_value())
        return result

    def factor(self):
        base = self.atom()
        if self.peek() == "^":
            self.next()
            tok = self.next()
            if tok is None or not tok.isdigit():
                raise ValueError("expected integer exponent")
            base = base ** int(tok)
        return base

    def atom(self):
        tok = self.next()
        if tok is None:
            raise ValueError("unexpected end of polynomial")
        if tok == "(":
            inner = self.expr()
            if self.next() != ")":
                raise ValueError("missing closing parenthesis")
            return inner
        if tok == "-":
            return -self.factor()
        if tok.isdigit():
            return self.ring.constant(int(tok))
        if tok in self.ring._var_index:
            return self.ring.gen(tok)
        raise ValueError("unknown variable %r (ring has %s)"
                         % (tok, ", ".join(self.ring.variables)))


def _parse_poly(ring, text):
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial")
    parser = _Parser(ring, tokens)
    result = parser.expr()
    if parser.peek() is not None:
        raise ValueError("trailing tokens in polynomial: %r" % parser.tokens[parser.i:])
    return result


def _mono_str(ring, exp):
    parts = []
    for v, e in zip(ring.variables, exp):
        if e == 1:
            parts.append(v)
        elif e > 1:
            parts.append("%s^%d" % (v, e))
    return "*".join(parts)


def poly_str(p):
    """Canonical text form; parse(poly_str(p)) == p."""
    if not p.terms:
        return "0"
    ring = p.ring
    field = ring.field
    one = field.one()
    chunks = []
    for exp, coeff in p.sorted_terms():
        mono = _mono_str(ring, exp)
        cs = field.coeff_str(coeff)
        negative = cs.startswith("-")
        body = cs[1:] if negative else cs
        if mono:
            if coeff == one:
                piece = mono
            elif coeff == -one and field is QQ:
                piece, negative = mono, True
            else:
                piece = "%s*%s" % (body, mono)
        else:
            piece = body
        if not chunks:
            chunks.append(("-" if negative else "") + piece)
        else:
            chunks.append((" - " if negative else " + ") + piece)
    return "".join(chunks)


class PolyMatrix:
    """A dense matrix of polynomials over one ring."""

    def __init__(self, ring, rows, cols, entries=None):
        self.ring = ring
        self.rows = rows
        self.cols = cols
        if entries is None:
            zero = ring.zero()
            self.entries = [[zero for _ in range(cols)] for _ in range(rows)]
        else:
            if len(entries) != rows or any(len(r) != cols for r in entries):
                raise ValueError("entry grid does not match shape %dx%d" % (rows, cols))
            self.entries = [list(r) for r in entries]

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __setitem__(self, ij, value):
        self.entries[ij[0]][ij[1]] = value

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("shape mismatch: %dx%d times %dx%d"
                             % (self.rows, self.cols, other.rows, other.cols))
        out = PolyMatrix(self.ring, self.rows, other.cols)
        for i in range(self.rows):
            for j in range(other.cols):
                acc = self.ring.zero()
                for k in range(self.cols):
                    acc = acc + self.entries[i][k] * other.entries[k][j]
                out.entries[i][j] = acc
        return out

    def scale(self, poly):
        out = PolyMatrix(self.ring, self.rows, self.cols)
        for i in range(self.rows):
            for j in range(self.cols):
                out.entries[i][j] = self.entries[i][j] * poly
        return out

    def is_zero(self):
        return all(e.is_zero() for row in self.entries for e in row)

    def __eq__(self, other):
        return (isinstance(other, PolyMatrix) and self.ring == other.ring
                and self.entries == other.entries)

    def __repr__(self):
        return "PolyMatrix(%dx%d)" % (self.rows, self.cols)
