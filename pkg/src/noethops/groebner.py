"""Monomial orders, Buchberger's algorithm and ideal arithmetic.

The reduced Groebner basis of an ideal is computed once, cached, and is
unique for a fixed order (monic, auto-reduced, sorted ascending by
leading monomial).  Pair handling follows Gebauer-Moller: the three
lcm-divisibility criteria plus Buchberger's coprimality criterion, with
the normal selection strategy (smallest lcm degree, ties broken by the
monomial order, then by pair index) so runs are deterministic.

Intersections and saturations go through an auxiliary variable and a
block elimination order, the standard single-variable constructions.
"""

import threading
from itertools import combinations_with_replacement, product

from .errors import ArityMismatchError, IncompatibleFieldError
from .fields import invert
from .poly import (
    Polynomial,
    PolyRing,
    grevlex_key,
    monomial_div,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
)

LEX, GREVLEX, ELIM = "lex", "grevlex", "elimination"


class MonomialOrder:
    """Total order on monomials refining divisibility."""

    def __init__(self, kind, ring, block=0):
        if kind not in (LEX, GREVLEX, ELIM):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.ring = ring
        self.block = block

    @classmethod
    def grevlex(cls, ring):
        return cls(GREVLEX, ring)

    @classmethod
    def lex(cls, ring):
        return cls(LEX, ring)

    @classmethod
    def elimination(cls, ring, k):
        """Block order eliminating the first k variables."""
        return cls(ELIM, ring, block=k)

    def key(self, mono):
        if len(mono) != self.ring.nvars:
            raise ArityMismatchError(
                f"monomial arity {len(mono)} != ring arity {self.ring.nvars}"
            )
        if self.kind == GREVLEX:
            return grevlex_key(mono)
        if self.kind == LEX:
            return tuple(mono)
        k = self.block
        return (grevlex_key(mono[:k]), grevlex_key(mono[k:]))

    def compare(self, m1, m2):
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def leading_monomial(self, f):
        return max(f.terms, key=self.key)

    def __eq__(self, other):
        return (
            isinstance(other, MonomialOrder)
            and other.kind == self.kind
            and other.block == self.block
            and other.ring == self.ring
        )

    def __hash__(self):
        return hash((self.kind, self.block, self.ring))

    def __repr__(self):
        if self.kind == ELIM:
            return f"elimination({self.block})"
        return self.kind


def _mono_shift(terms, shift):
    return {monomial_mul(m, shift): c for m, c in terms.items()}


def _reduce_terms(terms, basis, order):
    """Full normal form of a term dict against (lt, terms) records sorted
    ascending by leading monomial; the first divisor found is therefore
    the one with the smallest leading monomial."""
    work = dict(terms)
    out = {}
    key = order.key
    while work:
        m = max(work, key=key)
        c = work.pop(m)
        hit = None
        for lt, gterms in basis:
            if monomial_divides(lt, m):
                hit = (lt, gterms)
                break
        if hit is None:
            out[m] = c
            continue
        lt, gterms = hit
        shift = monomial_div(m, lt)
        for tm, tc in gterms.items():
            if tm == lt:
                continue
            k2 = monomial_mul(tm, shift)
            s = work.get(k2)
            s = -(c * tc) if s is None else s - c * tc
            if s:
                work[k2] = s
            elif k2 in work:
                del work[k2]
    return out


def _monic_terms(terms, order):
    lt = max(terms, key=order.key)
    inv = invert(terms[lt])
    return {m: c * inv for m, c in terms.items()}, lt


class _GB:
    """Working state for Buchberger with Gebauer-Moller pair pruning."""

    def __init__(self, order):
        self.order = order
        self.elems = []    # term dicts, monic, never removed
        self.lts = []
        self.active = []   # indices with currently minimal leading terms
        self.pairs = []    # (degree, order key of lcm, i, j, lcm)

    def _basis_records(self):
        recs = [(self.lts[i], self.elems[i]) for i in self.active]
        recs.sort(key=lambda r: self.order.key(r[0]))
        return recs

    def reduce(self, terms):
        return _reduce_terms(terms, self._basis_records(), self.order)

    def add(self, terms):
        """Gebauer-Moller UPDATE with the new monic element."""
        order = self.order
        h = len(self.elems)
        terms, lt_h = _monic_terms(terms, order)
        self.elems.append(terms)
        self.lts.append(lt_h)

        # candidate pairs (g, h), keeping one representative per minimal lcm
        cand = []
        for g in self.active:
            cand.append((g, monomial_lcm(self.lts[g], lt_h)))
        kept = []
        for idx, (g, l) in enumerate(cand):
            coprime = monomial_mul(self.lts[g], lt_h) == l
            kept_lcms = [l2 for (_, l2, _) in kept]
            if coprime:
                kept.append((g, l, True))
                continue
            others = [l2 for k2, (_, l2) in enumerate(cand) if k2 != idx]
            if any(monomial_divides(l2, l) and l2 != l for l2 in others + kept_lcms):
                continue
            if any(l2 == l for (_, l2) in cand[idx + 1 :]) or l in kept_lcms:
                continue
            kept.append((g, l, False))

        # prune old pairs whose lcm is strictly killed by lt_h
        survivors = []
        for (deg, k, i, j, l) in self.pairs:
            if not monomial_divides(lt_h, l):
                survivors.append((deg, k, i, j, l))
            elif monomial_lcm(self.lts[i], lt_h) == l or monomial_lcm(self.lts[j], lt_h) == l:
                survivors.append((deg, k, i, j, l))
        self.pairs = survivors
        for g, l, coprime in kept:
            if not coprime:
                self.pairs.append((sum(l), order.key(l), g, h, l))

        self.active = [g for g in self.active if not monomial_divides(lt_h, self.lts[g])]
        self.active.append(h)

    def spoly(self, i, j):
        l = monomial_lcm(self.lts[i], self.lts[j])
        a = _mono_shift(self.elems[i], monomial_div(l, self.lts[i]))
        b = _mono_shift(self.elems[j], monomial_div(l, self.lts[j]))
        for m, c in b.items():
            s = a.get(m)
            s = -c if s is None else s - c
            if s:
                a[m] = s
            elif m in a:
                del a[m]
        return a

    def run(self, gen_terms):
        for terms in gen_terms:
            red = self.reduce(terms)
            if red:
                self.add(red)
        while self.pairs:
            best = min(self.pairs)
            self.pairs.remove(best)
            _, _, i, j, _ = best
            red = self.reduce(self.spoly(i, j))
            if red:
                self.add(red)
        # tail-reduce the minimal basis into the reduced one
        final = {g: self.elems[g] for g in self.active}
        for g in list(final):
            others = [(self.lts[i], final[i]) for i in final if i != g]
            others.sort(key=lambda r: self.order.key(r[0]))
            final[g] = _reduce_terms(final[g], others, self.order)
        polys = sorted(final.values(), key=lambda t: self.order.key(max(t, key=self.order.key)))
        return polys


class Ideal:
    """Generators plus a monomial order and a lazily cached reduced
    Groebner basis.  Value-like: the basis is computed at most once and
    published atomically, so concurrent readers never see a partial one."""

    def __init__(self, ring, generators, order=None):
        gens = []
        for g in generators:
            if not isinstance(g, Polynomial):
                raise TypeError(f"ideal generator {g!r} is not a Polynomial")
            if g.ring != ring:
                raise IncompatibleFieldError("generator from a different ring")
            if not g.is_zero():
                gens.append(g)
        self.ring = ring
        self.generators = tuple(gens)
        self.order = order if order is not None else MonomialOrder.grevlex(ring)
        self._gb = None
        self._lock = threading.Lock()

    @property
    def groebner_basis(self):
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    state = _GB(self.order)
                    term_dicts = state.run([dict(g.terms) for g in self.generators])
                    self._gb = tuple(Polynomial(self.ring, t) for t in term_dicts)
        return self._gb

    def _gb_records(self):
        return [(self.order.leading_monomial(g), g.terms) for g in self.groebner_basis]

    def normal_form(self, f):
        """Remainder of multivariate division by the reduced basis;
        zero exactly for ideal members."""
        if f.ring != self.ring:
            raise IncompatibleFieldError("polynomial from a different ring")
        if not self.generators:
            return f
        return Polynomial(self.ring, _reduce_terms(f.terms, self._gb_records(), self.order))

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def equals(self, other):
        return ideal_equal(self, other)

    def is_unit_ideal(self):
        gb = self.groebner_basis
        return len(gb) == 1 and gb[0].total_degree() == 0

    def leading_monomials(self):
        return [self.order.leading_monomial(g) for g in self.groebner_basis]

    def standard_monomials(self):
        """Monomials outside the leading-term ideal, grevlex ascending;
        None when there are infinitely many."""
        gb = self.groebner_basis
        if not gb:
            return None
        lts = self.leading_monomials()
        if self.is_unit_ideal():
            return []
        n = self.ring.nvars
        caps = []
        for i in range(n):
            pure = [
                lt[i]
                for lt in lts
                if all(e == 0 for j, e in enumerate(lt) if j != i)
            ]
            if not pure:
                return None
            caps.append(min(pure))
        out = [
            m
            for m in product(*(range(c) for c in caps))
            if not any(monomial_divides(lt, m) for lt in lts)
        ]
        out.sort(key=grevlex_key)
        return out

    def __add__(self, other):
        return ideal_sum(self, other)

    def __mul__(self, other):
        return ideal_product(self, other)

    def __pow__(self, n):
        return ideal_power(self, n)

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"Ideal({gens})"


def ideal(ring, *gens, order=None):
    """Convenience constructor accepting polynomial text or Polynomials."""
    polys = [ring.parse(g) if isinstance(g, str) else g for g in gens]
    return Ideal(ring, polys, order=order)


def _check_compatible(I, J):
    if I.ring != J.ring:
        raise IncompatibleFieldError("ideals in different rings")


def _dedupe(polys):
    seen = set()
    out = []
    for p in polys:
        fs = frozenset(p.terms.items())
        if fs not in seen:
            seen.add(fs)
            out.append(p)
    return out


def ideal_sum(I, J):
    _check_compatible(I, J)
    return Ideal(I.ring, _dedupe(list(I.generators) + list(J.generators)), I.order)


def ideal_product(I, J):
    _check_compatible(I, J)
    gens = [f * g for f in I.generators for g in J.generators]
    return Ideal(I.ring, _dedupe(gens), I.order)


def ideal_power(I, n):
    if n < 0:
        raise ValueError("ideal power requires n >= 0")
    if n == 0:
        return Ideal(I.ring, [I.ring.one()], I.order)
    gens = []
    for combo in combinations_with_replacement(I.generators, n):
        g = I.ring.one()
        for f in combo:
            g = g * f
        gens.append(g)
    return Ideal(I.ring, _dedupe(gens), I.order)


def _extended_ring(ring, aux_name="_w"):
    """Ring with one auxiliary variable in front, plus both transfer maps."""
    name = aux_name
    k = 0
    while name in ring.variables:
        name = f"{aux_name}{k}"
        k += 1
    ext = PolyRing(ring.field, (name,) + ring.variables)

    def up(f):
        return Polynomial(ext, {(0,) + m: c for m, c in f.terms.items()})

    def down(f):
        return Polynomial(ring, {m[1:]: c for m, c in f.terms.items()})

    return ext, up, down


def _eliminate_first(ext_ideal, down):
    kept = []
    for g in ext_ideal.groebner_basis:
        if all(m[0] == 0 for m in g.terms):
            kept.append(down(g))
    return kept


def intersect(I, J):
    """I cap J via the auxiliary variable: eliminate w from w*I + (1-w)*J."""
    _check_compatible(I, J)
    ext, up, down = _extended_ring(I.ring)
    w = ext.var(0)
    gens = [w * up(f) for f in I.generators]
    gens += [(ext.one() - w) * up(g) for g in J.generators]
    elim = Ideal(ext, gens, MonomialOrder.elimination(ext, 1))
    return Ideal(I.ring, _eliminate_first(elim, down), I.order)


def saturate(I, s):
    """(I : s^infinity) by the single-auxiliary-variable construction."""
    if not isinstance(s, Polynomial) or s.ring != I.ring:
        raise IncompatibleFieldError("saturation witness from a different ring")
    if s.is_zero():
        raise ValueError("cannot saturate by zero")
    ext, up, down = _extended_ring(I.ring)
    w = ext.var(0)
    gens = [up(f) for f in I.generators]
    gens.append(ext.one() - w * up(s))
    elim = Ideal(ext, gens, MonomialOrder.elimination(ext, 1))
    return Ideal(I.ring, _eliminate_first(elim, down), I.order)


def ideal_equal(I, J):
    """Structural identity of reduced bases under I's order."""
    _check_compatible(I, J)
    if J.order != I.order:
        J = Ideal(J.ring, J.generators, I.order)
    return I.groebner_basis == J.groebner_basis
