"""Sparse multivariate polynomials over an exact coefficient field.

A monomial is a tuple of nonnegative exponents, one per ring variable;
a polynomial is a map monomial -> nonzero coefficient.  Everything is
immutable; arithmetic never mutates operands.

The text grammar (whitespace insignificant, implicit ``*`` forbidden)::

    expr   := ['-'] term (('+'|'-') term)*
    term   := factor (('*'|'/') factor)*
    factor := atom ['^' natural]
    atom   := natural | name | '(' expr ')'

``/`` is only allowed by a constant, which is how rational coefficients
``a/b`` and t-rational coefficients such as ``(t+1)/t`` are written.  A
name resolves to a ring variable, or to a generator of the coefficient
field (``t``, ``u``), otherwise it is an unknown-variable error.
"""

import re

from .errors import (
    ArityMismatchError,
    IncompatibleFieldError,
    ParseError,
    UnknownVariableError,
)
from .fields import _needs_parens, extends, field_of, format_elem, invert


def grevlex_key(mono):
    """Sort key: bigger key = bigger monomial in graded reverse lex."""
    return (sum(mono), tuple(-e for e in reversed(mono)))


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))

def monomial_divides(a, b):
    """True when x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))

def monomial_div(a, b):
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))

def monomial_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_up_to(nvars, degree):
    """All exponent tuples with total degree <= degree, grevlex ascending."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining + 1):
            rec(prefix + [e], remaining - e, slots - 1)

    rec([], degree, nvars)
    out.sort(key=grevlex_key)
    return out


def monomials_of_degree(nvars, degree):
    return [m for m in monomials_up_to(nvars, degree) if sum(m) == degree]


class PolyRing:
    """k[x_1, ..., x_n] with a fixed variable order."""

    def __init__(self, field, variables):
        variables = list(variables)
        if len(set(variables)) != len(variables) or any(not v for v in variables):
            raise ValueError("variable names must be distinct and nonempty")
        self.field = field
        self.variables = tuple(variables)

    @property
    def nvars(self):
        return len(self.variables)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.const(self.field.one())

    def const(self, c):
        c = self.field.coerce(c)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {(0,) * self.nvars: c})

    def var(self, i):
        exps = [0] * self.nvars
        exps[i] = 1
        return Polynomial(self, {tuple(exps): self.field.one()})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, exps, coeff=None):
        exps = tuple(exps)
        if len(exps) != self.nvars:
            raise ArityMismatchError(f"expected {self.nvars} exponents, got {len(exps)}")
        c = self.field.one() if coeff is None else self.field.coerce(coeff)
        if not c:
            return Polynomial(self, {})
        return Polynomial(self, {exps: c})

    def poly(self, terms):
        """Polynomial from a {exponent tuple: coefficient} map."""
        clean = {}
        for exps, c in terms.items():
            exps = tuple(exps)
            if len(exps) != self.nvars:
                raise ArityMismatchError(f"expected {self.nvars} exponents, got {len(exps)}")
            c = self.field.coerce(c)
            if c:
                clean[exps] = c
        return Polynomial(self, clean)

    def parse(self, text):
        return parse(text, self)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and other.field == self.field
            and other.variables == self.variables
        )

    def __hash__(self):
        return hash((self.field, self.variables))

    def __repr__(self):
        return f"{self.field!r}[{', '.join(self.variables)}]"


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # private by convention; never mutated

    def is_zero(self):
        return not self.terms

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero())

    def _lift(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise IncompatibleFieldError("polynomials from different rings")
            return other
        try:
            return self.ring.const(other)
        except IncompatibleFieldError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s:
                out[m] = s
            elif m in out:
                del out[m]
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return -(self - other)

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = monomial_mul(m1, m2)
                c = c1 * c2
                s = out.get(m)
                s = c if s is None else s + c
                if s:
                    out[m] = s
                elif m in out:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial) and other.ring != self.ring:
            return False
        try:
            other = self._lift(other)
        except IncompatibleFieldError:
            return NotImplemented
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def diff(self, i):
        """Formal partial derivative in the i-th variable."""
        if not 0 <= i < self.ring.nvars:
            raise IndexError(f"variable index {i} out of range")
        field = self.ring.field
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e == 0:
                continue
            nc = c * field.from_int(e)
            if not nc:
                continue  # exponent divisible by the characteristic
            nm = m[:i] + (e - 1,) + m[i + 1 :]
            out[nm] = nc
        return Polynomial(self.ring, out)

    def diff_multi(self, beta):
        """Iterated partial derivative with multi-index beta."""
        f = self
        for i, e in enumerate(beta):
            for _ in range(e):
                if f.is_zero():
                    return f
                f = f.diff(i)
        return f

    def evaluate(self, coords):
        """Value at a point; coordinates may lie in a field extension."""
        coords = list(coords)
        if len(coords) != self.ring.nvars:
            raise ArityMismatchError(
                f"point has {len(coords)} coordinates, ring has {self.ring.nvars} variables"
            )
        target = self.ring.field
        for c in coords:
            if isinstance(c, int):
                continue
            f = field_of(c)
            if f == target:
                continue
            if extends(f, target):
                target = f
            elif not extends(target, f):
                raise IncompatibleFieldError(
                    f"coordinate field {f!r} incompatible with {target!r}"
                )
        coords = [target.coerce(c) for c in coords]
        total = target.zero()
        for m, c in self.terms.items():
            v = target.coerce(c)
            for x, e in zip(coords, m):
                if e:
                    v = v * x**e
            total = total + v
        return total

    def translate(self, coords):
        """f(x + alpha): shift the point alpha to the origin."""
        coords = [self.ring.field.coerce(c) for c in coords]
        if len(coords) != self.ring.nvars:
            raise ArityMismatchError(
                f"point has {len(coords)} coordinates, ring has {self.ring.nvars} variables"
            )
        ring = self.ring
        shifted = [ring.var(i) + ring.const(a) for i, a in enumerate(coords)]
        out = ring.zero()
        for m, c in self.terms.items():
            term = ring.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * shifted[i] ** e
            out = out + term
        return out

    def graded_component(self, d):
        """Sum of the total-degree-d terms."""
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if sum(m) == d})

    def is_homogeneous(self):
        degrees = {sum(m) for m in self.terms}
        return len(degrees) <= 1

    def sorted_terms(self, key=grevlex_key, reverse=True):
        return sorted(self.terms.items(), key=lambda t: key(t[0]), reverse=reverse)

    def leading_monomial(self, key=grevlex_key):
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=key)

    def format(self, key=grevlex_key):
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms(key=key):
            mono = self._mono_str(m)
            cs = format_elem(c)
            sign = "+"
            if cs.startswith("-") and not _needs_parens(cs[1:]):
                sign, cs = "-", cs[1:]
            if mono is None:
                body = f"({cs})" if _needs_parens(cs) else cs
            elif cs == "1":
                body = mono
            else:
                body = (f"({cs})" if _needs_parens(cs) else cs) + "*" + mono
            parts.append((sign, body))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def _mono_str(self, m):
        pieces = []
        for name, e in zip(self.ring.variables, m):
            if e == 1:
                pieces.append(name)
            elif e > 1:
                pieces.append(f"{name}^{e}")
        return "*".join(pieces) if pieces else None

    def __str__(self):
        return self.format()

    def __repr__(self):
        return self.format()


def to_unipoly(f, target_field=None, embed=None):
    """One-variable Polynomial -> UniPoly, optionally embedding the
    coefficients into an extension field."""
    from .fields import UniPoly

    if f.ring.nvars != 1:
        raise ArityMismatchError("to_unipoly needs a one-variable ring")
    d = f.total_degree()
    field = target_field if target_field is not None else f.ring.field
    coeffs = [field.zero()] * (d + 1)
    for (e,), c in f.terms.items():
        coeffs[e] = embed(c) if embed is not None else c
    return UniPoly(field, coeffs)


# --- tokenizer, shared with the operator and script parsers ---------------

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")

INT, NAME, SYM, END = "int", "name", "sym", "end"


def tokenize(text, symbols="+-*/^(),"):
    """Token list of (kind, value, position)."""
    text = text.rstrip()  # trailing whitespace would backtrack into (.)
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        if m.group(1) is not None:
            tokens.append((INT, int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append((NAME, m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in symbols:
                raise ParseError(f"unexpected character {ch!r}", m.start(3))
            tokens.append((SYM, ch, m.start(3)))
        pos = m.end()
    tokens.append((END, None, len(text)))
    return tokens


class TokenStream:
    def __init__(self, tokens):
        self.tokens = tokens
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        if tok[0] != END:
            self.i += 1
        return tok

    def accept(self, kind, value=None):
        tok = self.peek()
        if tok[0] == kind and (value is None or tok[1] == value):
            return self.next()
        return None

    def expect(self, kind, value=None):
        tok = self.accept(kind, value)
        if tok is None:
            got = self.peek()
            want = value if value is not None else kind
            raise ParseError(f"expected {want!r}, found {got[1]!r}", got[2])
        return tok


class _PolyParser:
    """Recursive descent over a token stream producing Polynomial values."""

    def __init__(self, stream, ring):
        self.ts = stream
        self.ring = ring
        self.generators = ring.field.named_generators()

    def parse_expr(self):
        negate = self.ts.accept(SYM, "-") is not None
        if not negate:
            self.ts.accept(SYM, "+")
        value = self.parse_term()
        if negate:
            value = -value
        while True:
            if self.ts.accept(SYM, "+"):
                value = value + self.parse_term()
            elif self.ts.accept(SYM, "-"):
                value = value - self.parse_term()
            else:
                return value

    def parse_term(self):
        value = self.parse_factor()
        while True:
            if self.ts.accept(SYM, "*"):
                value = value * self.parse_factor()
            elif self.ts.peek()[:2] == (SYM, "/"):
                tok = self.ts.next()
                divisor = self.parse_factor()
                if divisor.total_degree() > 0:
                    raise ParseError("division by a non-constant", tok[2])
                if divisor.is_zero():
                    raise ParseError("division by zero", tok[2])
                c = divisor.coefficient((0,) * self.ring.nvars)
                value = value * self.ring.const(invert(c))
            else:
                return value

    def parse_factor(self):
        value = self.parse_atom()
        if self.ts.accept(SYM, "^"):
            tok = self.ts.expect(INT)
            value = value**tok[1]
        return value

    def parse_atom(self):
        tok = self.ts.peek()
        if tok[0] == INT:
            self.ts.next()
            return self.ring.const(self.ring.field.from_int(tok[1]))
        if tok[0] == NAME:
            self.ts.next()
            name = tok[1]
            if name in self.ring.variables:
                return self.ring.var(self.ring.variables.index(name))
            if name in self.generators:
                return self.ring.const(self.generators[name])
            raise UnknownVariableError(f"unknown variable {name!r}", tok[2])
        if tok[:2] == (SYM, "("):
            self.ts.next()
            value = self.parse_expr()
            self.ts.expect(SYM, ")")
            return value
        raise ParseError(f"unexpected token {tok[1]!r}", tok[2])


def parse(text, ring):
    """Parse polynomial text; raises ParseError with position on bad input."""
    ts = TokenStream(tokenize(text))
    value = _PolyParser(ts, ring).parse_expr()
    ts.expect(END)
    return value
