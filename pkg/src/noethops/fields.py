"""Exact coefficient fields.

Four kinds of field are supported, enough for every computation in this
package:

* ``QQ`` -- arbitrary-precision rationals (elements are
  :class:`fractions.Fraction`),
* ``GF(p)`` -- prime fields for machine-word-size primes,
* ``RatFuncField(base, "t")`` -- rational function fields like F_p(t)
  or Q(t),
* ``AlgExtField(base, "u", minpoly)`` -- simple algebraic extensions
  K[u]/(m(u)) with a caller-certified irreducible minimal polynomial.

Field objects mint and describe elements; the elements themselves carry
the usual arithmetic dunders, so code over a generic field just writes
``a * b + c``.  Everything is immutable and hashable.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import (
    IncompatibleFieldError,
    InconsistentExtensionError,
    NotInvertibleError,
)

_WORD_LIMIT = 1 << 64


def rational(num, den=1):
    """Canonical reduced rational with positive denominator."""
    return Fraction(num, den)


def invert(a):
    """Multiplicative inverse of a nonzero field element."""
    if isinstance(a, Fraction):
        if a == 0:
            raise NotInvertibleError("0 has no inverse")
        return 1 / a
    return a.inverse()


@lru_cache(maxsize=None)
def _is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond 2**64."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The field Q.  Elements are plain ``fractions.Fraction`` values."""

    characteristic = 0

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def coerce(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        raise IncompatibleFieldError(f"cannot coerce {x!r} into QQ")

    def named_generators(self):
        return {}

    def format(self, a):
        return str(a)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")

    def __repr__(self):
        return "QQ"


QQ = RationalField()


class PrimeField:
    """F_p for a prime p below 2**64."""

    def __init__(self, p):
        if not isinstance(p, int) or not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p >= _WORD_LIMIT:
            raise ValueError("prime-field moduli are limited to machine-word size")
        self.p = p
        self.characteristic = p

    def zero(self):
        return PrimeFieldElem(0, self.p)

    def one(self):
        return PrimeFieldElem(1, self.p)

    def from_int(self, n):
        return PrimeFieldElem(n % self.p, self.p)

    def coerce(self, x):
        if isinstance(x, PrimeFieldElem):
            if x.p != self.p:
                raise IncompatibleFieldError(f"element of F_{x.p} used in F_{self.p}")
            return x
        if isinstance(x, int):
            return self.from_int(x)
        raise IncompatibleFieldError(f"cannot coerce {x!r} into F_{self.p}")

    def named_generators(self):
        return {}

    def format(self, a):
        return str(a.value)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return f"GF({self.p})"


def GF(p):
    return PrimeField(p)


class PrimeFieldElem:
    __slots__ = ("value", "p")

    def __init__(self, value, p):
        self.value = value % p
        self.p = p

    @property
    def field(self):
        return PrimeField(self.p)

    def _lift(self, other):
        if isinstance(other, PrimeFieldElem):
            if other.p != self.p:
                raise IncompatibleFieldError("prime fields with different moduli")
            return other
        if isinstance(other, int):
            return PrimeFieldElem(other, self.p)
        return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElem(self.value + other.value, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElem(self.value - other.value, self.p)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return PrimeFieldElem(self.value * other.value, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __neg__(self):
        return PrimeFieldElem(-self.value, self.p)

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return PrimeFieldElem(pow(self.value, n, self.p), self.p)

    def inverse(self):
        if self.value == 0:
            raise NotInvertibleError(f"0 has no inverse in F_{self.p}")
        return PrimeFieldElem(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except IncompatibleFieldError:
            return NotImplemented
        if other is None:
            return NotImplemented
        return self.value == other.value

    def __bool__(self):
        return self.value != 0

    def __hash__(self):
        return hash((self.value, self.p))

    def __repr__(self):
        return f"{self.value}"


class UniPoly:
    """Dense univariate polynomial over a coefficient field.

    Used for the internals of rational function fields and algebraic
    extensions, and for residue-field computations in L[x].  The
    coefficient tuple is stored low degree first with no trailing zeros.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def const(cls, field, c):
        return cls(field, [field.coerce(c)])

    @classmethod
    def gen(cls, field):
        return cls(field, [field.zero(), field.one()])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def is_one(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == self.field.one()

    @property
    def lead(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def _lift(self, other):
        if isinstance(other, UniPoly):
            return other
        try:
            return UniPoly.const(self.field, other)
        except IncompatibleFieldError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return UniPoly(self.field, out)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

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
        if self.is_zero() or other.is_zero():
            return UniPoly(self.field, [])
        out = [self.field.zero()] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UniPoly(self.field, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly.const(self.field, self.field.one())
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_inv = invert(other.lead)
        rem = list(self.coeffs)
        quo = [self.field.zero()] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.degree
        while len(rem) - 1 >= d and rem:
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < d:
                break
            k = len(rem) - 1 - d
            q = rem[-1] * lead_inv
            quo[k] = q
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - q * c
            rem.pop()
        return UniPoly(self.field, quo), UniPoly(self.field, rem)

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def evaluate(self, x):
        """Horner evaluation; x may live in an extension of the field."""
        if not self.coeffs:
            return x - x if not isinstance(x, (int, Fraction)) else self.field.zero()
        acc = None
        for c in reversed(self.coeffs):
            acc = c if acc is None else acc * x + c
        return acc

    def monic(self):
        if self.is_zero():
            return self
        li = invert(self.lead)
        return UniPoly(self.field, [c * li for c in self.coeffs])

    def map_coeffs(self, fn, field):
        return UniPoly(field, [fn(c) for c in self.coeffs])

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs and self.field == other.field
        if self.is_zero():
            return other == 0
        if self.degree == 0:
            return self.coeffs[0] == other
        return NotImplemented

    def __bool__(self):
        return bool(self.coeffs)

    def __hash__(self):
        return hash(self.coeffs)

    def to_str(self, var):
        if not self.coeffs:
            return "0"
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                mono = None
            elif i == 1:
                mono = var
            else:
                mono = f"{var}^{i}"
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

    def __repr__(self):
        return self.to_str("T")


def uni_gcd(a, b):
    """Monic gcd in K[x]."""
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.monic()


def uni_ext_gcd(a, b):
    """(g, s, t) with s*a + t*b = g and g monic."""
    field = a.field
    zero = UniPoly(field, [])
    one = UniPoly.const(field, field.one())
    r0, r1 = a, b
    s0, s1 = one, zero
    t0, t1 = zero, one
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    li = invert(r0.lead)
    scale = UniPoly.const(field, li)
    return r0.monic(), s0 * scale, t0 * scale


class RatFuncField:
    """Rational function field base(var), e.g. F_p(t) or Q(t)."""

    def __init__(self, base, var="t"):
        self.base = base
        self.var = var
        self.characteristic = base.characteristic

    def zero(self):
        return RatFunc(self, UniPoly(self.base, []), self._one_poly())

    def one(self):
        return RatFunc(self, self._one_poly(), self._one_poly())

    def _one_poly(self):
        return UniPoly.const(self.base, self.base.one())

    def from_int(self, n):
        return RatFunc(self, UniPoly.const(self.base, self.base.from_int(n)), self._one_poly())

    def generator(self):
        return RatFunc(self, UniPoly.gen(self.base), self._one_poly())

    def coerce(self, x):
        if isinstance(x, RatFunc):
            if x.field != self:
                raise IncompatibleFieldError("rational functions over different bases")
            return x
        if isinstance(x, UniPoly) and x.field == self.base:
            return RatFunc(self, x, self._one_poly())
        base_elem = self.base.coerce(x)
        return RatFunc(self, UniPoly.const(self.base, base_elem), self._one_poly())

    def named_generators(self):
        gens = dict(self.base.named_generators())
        gens[self.var] = self.generator()
        return gens

    def format(self, a):
        num, den = a.num, a.den
        ns = num.to_str(self.var)
        sign = ""
        if ns.startswith("-") and not _needs_parens(ns[1:]):
            sign, ns = "-", ns[1:]
        if den.is_one():
            return sign + ns
        ds = den.to_str(self.var)
        if _needs_parens(ns):
            ns = f"({ns})"
        if _needs_parens(ds):
            ds = f"({ds})"
        return f"{sign}{ns}/{ds}"

    def __eq__(self, other):
        return (
            isinstance(other, RatFuncField)
            and other.base == self.base
            and other.var == self.var
        )

    def __hash__(self):
        return hash(("ratfunc", self.base, self.var))

    def __repr__(self):
        return f"{self.base!r}({self.var})"


class RatFunc:
    """num/den with monic, gcd-reduced denominator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num, den):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        g = uni_gcd(num, den)
        if not g.is_zero() and not g.is_one():
            num = num // g
            den = den // g
        li = invert(den.lead)
        if den.lead != den.field.one():
            scale = UniPoly.const(den.field, li)
            num = num * scale
            den = den * scale
        self.field = field
        self.num = num
        self.den = den

    def _lift(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise IncompatibleFieldError("rational functions over different bases")
            return other
        try:
            return self.field.coerce(other)
        except IncompatibleFieldError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return RatFunc(
            self.field,
            self.num * other.den + other.num * self.den,
            self.den * other.den,
        )

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

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
        return RatFunc(self.field, self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        return RatFunc(self.field, self.num**n, self.den**n)

    def inverse(self):
        if self.num.is_zero():
            raise NotInvertibleError("0 has no inverse")
        return RatFunc(self.field, self.den, self.num)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except IncompatibleFieldError:
            return NotImplemented
        if other is None:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        return self.field.format(self)


class AlgExtField:
    """Simple extension base[u]/(m(u)); m monic, caller-certified irreducible."""

    def __init__(self, base, var, minpoly):
        if minpoly.degree < 1:
            raise ValueError("minimal polynomial must have degree >= 1")
        if minpoly.lead != base.one():
            raise ValueError("minimal polynomial must be monic")
        self.base = base
        self.var = var
        self.minpoly = minpoly
        self.characteristic = base.characteristic

    def zero(self):
        return AlgExtElem(self, UniPoly(self.base, []))

    def one(self):
        return AlgExtElem(self, UniPoly.const(self.base, self.base.one()))

    def from_int(self, n):
        return AlgExtElem(self, UniPoly.const(self.base, self.base.from_int(n)))

    def generator(self):
        return AlgExtElem(self, UniPoly.gen(self.base) % self.minpoly)

    def coerce(self, x):
        if isinstance(x, AlgExtElem):
            if x.field != self:
                raise IncompatibleFieldError("elements of different extensions")
            return x
        base_elem = self.base.coerce(x)
        return AlgExtElem(self, UniPoly.const(self.base, base_elem))

    def named_generators(self):
        gens = {name: self.coerce(g) for name, g in self.base.named_generators().items()}
        gens[self.var] = self.generator()
        return gens

    def format(self, a):
        return a.rep.to_str(self.var)

    def __eq__(self, other):
        return (
            isinstance(other, AlgExtField)
            and other.base == self.base
            and other.var == self.var
            and other.minpoly == self.minpoly
        )

    def __hash__(self):
        return hash(("algext", self.base, self.var, self.minpoly))

    def __repr__(self):
        return f"{self.base!r}[{self.var}]/({self.minpoly.to_str(self.var)})"


class AlgExtElem:
    __slots__ = ("field", "rep")

    def __init__(self, field, rep):
        if rep.degree >= field.minpoly.degree:
            rep = rep % field.minpoly
        self.field = field
        self.rep = rep

    def _lift(self, other):
        if isinstance(other, AlgExtElem):
            if other.field != self.field:
                raise IncompatibleFieldError("elements of different extensions")
            return other
        try:
            return self.field.coerce(other)
        except IncompatibleFieldError:
            return None

    def __add__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return AlgExtElem(self.field, self.rep + other.rep)

    __radd__ = __add__

    def __neg__(self):
        return AlgExtElem(self.field, -self.rep)

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
        return AlgExtElem(self.field, (self.rep * other.rep) % self.field.minpoly)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is None:
            return NotImplemented
        return other * self.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self):
        if self.rep.is_zero():
            raise NotInvertibleError("0 has no inverse")
        g, s, _ = uni_ext_gcd(self.rep, self.field.minpoly)
        if g.degree != 0:
            # gcd(rep, m) nontrivial: m was not irreducible after all
            raise InconsistentExtensionError(
                f"zero divisor {self.field.format(self)} in "
                f"{self.field!r}; minimal polynomial is reducible"
            )
        return AlgExtElem(self.field, s % self.field.minpoly)

    def __eq__(self, other):
        try:
            other = self._lift(other)
        except IncompatibleFieldError:
            return NotImplemented
        if other is None:
            return NotImplemented
        return self.rep == other.rep

    def __bool__(self):
        return not self.rep.is_zero()

    def __hash__(self):
        return hash(("ext", self.rep))

    def __repr__(self):
        return self.field.format(self)


def field_of(x):
    """The field an element belongs to (Fraction means QQ)."""
    if isinstance(x, Fraction):
        return QQ
    if isinstance(x, (PrimeFieldElem, RatFunc, AlgExtElem)):
        return x.field
    raise IncompatibleFieldError(f"{x!r} is not a field element")


def format_elem(x):
    return field_of(x).format(x)


def extends(big, small):
    """True when `big` equals `small` or sits above it in a tower of
    rational-function / algebraic extensions."""
    while True:
        if big == small:
            return True
        base = getattr(big, "base", None)
        if base is None:
            return False
        big = base


def _needs_parens(s):
    """A formatted coefficient needs parentheses inside a product when it
    contains a top-level + or - (a leading minus counts)."""
    depth = 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and i > 0:
            return True
        elif ch == "-" and i == 0 and depth == 0:
            return True
    return False
