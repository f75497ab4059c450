"""Differential operators with polynomial coefficients.

An operator is a finite sum of normal-form terms c * x^alpha * d^beta
(all multiplications to the left of all derivatives).  Operators act on
polynomials; composition of arbitrary operators is out of scope, the
only product ever needed is the commutator with a polynomial, which the
Leibniz rule keeps inside normal form:

    d^beta . r = sum over gamma <= beta of C(beta, gamma) d^gamma(r) d^(beta-gamma)

Evaluation targets for solution-set membership: the ring itself, a
quotient by an ideal (via normal forms), or a point (evaluate there).
"""

from itertools import product as _cartesian
from math import comb

from .errors import IncompatibleFieldError, ParseError
from .fields import _needs_parens, format_elem, invert
from .poly import (
    END,
    INT,
    NAME,
    SYM,
    Polynomial,
    TokenStream,
    _PolyParser,
    grevlex_key,
    monomial_mul,
    tokenize,
)


class DiffOp:
    """Finite sum of terms c * x^alpha * d^beta."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {
            (tuple(a), tuple(b)): c for (a, b), c in terms.items() if c
        }

    @classmethod
    def zero(cls, ring):
        return cls(ring, {})

    @classmethod
    def identity(cls, ring):
        z = (0,) * ring.nvars
        return cls(ring, {(z, z): ring.field.one()})

    @classmethod
    def partial(cls, ring, i, power=1):
        z = (0,) * ring.nvars
        beta = list(z)
        beta[i] = power
        return cls(ring, {(z, tuple(beta)): ring.field.one()})

    @classmethod
    def from_functional(cls, ring, coords):
        """Operator with constant coefficients sum c_beta * d^beta."""
        z = (0,) * ring.nvars
        return cls(ring, {(z, tuple(b)): c for b, c in coords.items()})

    def is_zero(self):
        return not self.terms

    @property
    def order(self):
        """Filtration order: max derivative degree; -1 for the zero operator."""
        if not self.terms:
            return -1
        return max(sum(b) for _, b in self.terms)

    def _lift(self, other):
        if isinstance(other, DiffOp):
            if other.ring != self.ring:
                raise IncompatibleFieldError("operators from different rings")
            return other
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s:
                out[k] = s
            elif k in out:
                del out[k]
        return DiffOp(self.ring, out)

    def __neg__(self):
        return DiffOp(self.ring, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def scale(self, c):
        c = self.ring.field.coerce(c)
        return DiffOp(self.ring, {k: c * v for k, v in self.terms.items()})

    def premultiply(self, r):
        """r * delta for a polynomial r (the natural left R-action)."""
        out = {}
        for (a, b), c in self.terms.items():
            for m, rc in r.terms.items():
                k = (monomial_mul(a, m), b)
                s = out.get(k)
                v = c * rc
                s = v if s is None else s + v
                if s:
                    out[k] = s
                elif k in out:
                    del out[k]
        return DiffOp(self.ring, out)

    def apply(self, f):
        """The exact action sum c * x^alpha * d^beta (f)."""
        if f.ring != self.ring:
            raise IncompatibleFieldError("operator and polynomial from different rings")
        ring = self.ring
        out = ring.zero()
        for (alpha, beta), c in self.terms.items():
            g = f.diff_multi(beta)
            if g.is_zero():
                continue
            out = out + Polynomial(ring, {monomial_mul(m, alpha): c * gc for m, gc in g.terms.items()})
        return out

    def bracket(self, r):
        """[delta, r] = delta . r - r . delta, expanded by Leibniz.

        Satisfies apply(bracket(delta, r), f) = delta(r f) - r delta(f)
        and drops the filtration order by at least one.
        """
        if r.ring != self.ring:
            raise IncompatibleFieldError("operator and polynomial from different rings")
        ring = self.ring
        field = ring.field
        out = {}
        for (alpha, beta), c in self.terms.items():
            ranges = [range(e + 1) for e in beta]
            for gamma in _cartesian(*ranges):
                if not any(gamma):
                    continue  # the gamma = 0 term cancels against r*delta
                binom = 1
                for bi, gi in zip(beta, gamma):
                    binom *= comb(bi, gi)
                bc = field.from_int(binom)
                if not bc:
                    continue
                dr = r.diff_multi(gamma)
                if dr.is_zero():
                    continue
                rest = tuple(b - g for b, g in zip(beta, gamma))
                for m, rc in dr.terms.items():
                    k = (monomial_mul(alpha, m), rest)
                    v = c * bc * rc
                    s = out.get(k)
                    s = v if s is None else s + v
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return DiffOp(self.ring, out)

    def __eq__(self, other):
        if isinstance(other, DiffOp):
            return other.ring == self.ring and other.terms == self.terms
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (grevlex_key(kv[0][1]), grevlex_key(kv[0][0])),
            reverse=True,
        )

    def format(self):
        if not self.terms:
            return "0"
        parts = []
        for (alpha, beta), c in self.sorted_terms():
            pieces = []
            for name, e in zip(self.ring.variables, alpha):
                if e == 1:
                    pieces.append(name)
                elif e > 1:
                    pieces.append(f"{name}^{e}")
            for name, e in zip(self.ring.variables, beta):
                if e == 1:
                    pieces.append(f"d{name}")
                elif e > 1:
                    pieces.append(f"d{name}^{e}")
            cs = format_elem(c)
            sign = "+"
            if cs.startswith("-") and not _needs_parens(cs[1:]):
                sign, cs = "-", cs[1:]
            if not pieces:
                body = f"({cs})" if _needs_parens(cs) else cs
            elif cs == "1":
                body = "*".join(pieces)
            else:
                body = (f"({cs})" if _needs_parens(cs) else cs) + "*" + "*".join(pieces)
            parts.append((sign, body))
        out = parts[0][1] if parts[0][0] == "+" else "-" + parts[0][1]
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self):
        return [
            {"xexp": list(a), "dexp": list(b), "coeff": format_elem(c)}
            for (a, b), c in self.sorted_terms()
        ]

    def __str__(self):
        return self.format()

    def __repr__(self):
        return self.format()


class SolTarget:
    """Where operator values are tested for vanishing: the ring itself,
    the quotient modulo an ideal, or a point of the affine space."""

    INTO_RING = "into-ring"
    MODULO = "modulo-ideal"
    AT_POINT = "at-point"

    def __init__(self, mode, ideal=None, point=None):
        self.mode = mode
        self.ideal = ideal
        self.point = tuple(point) if point is not None else None

    @classmethod
    def into_ring(cls):
        return cls(cls.INTO_RING)

    @classmethod
    def modulo(cls, ideal):
        return cls(cls.MODULO, ideal=ideal)

    @classmethod
    def at_point(cls, point):
        return cls(cls.AT_POINT, point=point)

    def vanishes(self, g):
        """Does the polynomial g map to zero in the target?"""
        if self.mode == self.INTO_RING:
            return g.is_zero()
        if self.mode == self.MODULO:
            return self.ideal.normal_form(g).is_zero()
        value = g.evaluate(self.point)
        return not value

    def __repr__(self):
        if self.mode == self.MODULO:
            return f"SolTarget(modulo {self.ideal!r})"
        if self.mode == self.AT_POINT:
            return f"SolTarget(at {self.point})"
        return "SolTarget(into ring)"


def sol_membership(ops, target, f):
    """True when every operator sends f to zero in the target."""
    for delta in ops:
        if not target.vanishes(delta.apply(f)):
            return False
    return True


class _OpParser(_PolyParser):
    """Extends the polynomial grammar with d<var> atoms.  A term denotes
    the normal-form monomial c * x^alpha * d^beta regardless of the
    factor order it was written in; parenthesized subexpressions must be
    pure polynomials."""

    def parse_op_expr(self):
        negate = self.ts.accept(SYM, "-") is not None
        if not negate:
            self.ts.accept(SYM, "+")
        value = self.parse_op_term()
        if negate:
            value = value.scale(-self.ring.field.one())
        while True:
            if self.ts.accept(SYM, "+"):
                value = value + self.parse_op_term()
            elif self.ts.accept(SYM, "-"):
                value = value - self.parse_op_term()
            else:
                return value

    def parse_op_term(self):
        poly_part = self.ring.one()
        beta = [0] * self.ring.nvars
        while True:
            tok = self.ts.peek()
            if tok[0] == NAME and self._d_index(tok[1]) is not None:
                self.ts.next()
                power = 1
                if self.ts.accept(SYM, "^"):
                    power = self.ts.expect(INT)[1]
                beta[self._d_index(tok[1])] += power
            else:
                poly_part = poly_part * self.parse_factor()
            while self.ts.peek()[:2] == (SYM, "/"):
                tok = self.ts.next()
                divisor = self.parse_factor()
                if divisor.total_degree() > 0 or divisor.is_zero():
                    raise ParseError("division by a non-constant", tok[2])
                c = divisor.coefficient((0,) * self.ring.nvars)
                poly_part = poly_part * self.ring.const(invert(c))
            if self.ts.accept(SYM, "*"):
                continue
            break
        op = DiffOp(
            self.ring,
            {((0,) * self.ring.nvars, tuple(beta)): self.ring.field.one()},
        )
        return op.premultiply(poly_part)

    def _d_index(self, name):
        # an exact variable match wins over a d-prefixed reading
        if name in self.ring.variables:
            return None
        if len(name) > 1 and name[0] == "d" and name[1:] in self.ring.variables:
            return self.ring.variables.index(name[1:])
        return None


def parse_operator(text, ring):
    """Parse operator text such as 'dx', 'dy^2' or 'x*dx - dy'."""
    ts = TokenStream(tokenize(text))
    parser = _OpParser(ts, ring)
    value = parser.parse_op_expr()
    ts.expect(END)
    return value
