"""Independent brute-force oracles used to derive expected test values.

Deliberately does not reuse noethops.linalg: membership is decided by a
plain forward-elimination span check written from scratch, so Groebner
normal forms and Macaulay kernels are cross-checked against a second,
unrelated computation path.
"""

from noethops.fields import invert
from noethops.poly import monomial_mul, monomials_up_to


class Span:
    """Row span with incremental forward elimination."""

    def __init__(self, ncols, field):
        self.ncols = ncols
        self.field = field
        self.rows = []  # (pivot_col, normalized row), sorted by pivot_col

    def _residue(self, vec):
        vec = list(vec)
        for pc, row in self.rows:
            if vec[pc]:
                f = vec[pc]
                vec = [a - f * b for a, b in zip(vec, row)]
        return vec

    def insert(self, vec):
        res = self._residue(vec)
        pc = next((i for i, c in enumerate(res) if c), None)
        if pc is None:
            return False
        inv = invert(res[pc])
        self.rows.append((pc, [c * inv for c in res]))
        self.rows.sort(key=lambda r: r[0])
        return True

    def contains(self, vec):
        return not any(self._residue(vec))

    @property
    def dim(self):
        return len(self.rows)


class TruncatedMembershipOracle:
    """Membership in span_k { x^gamma * g_i : total degree <= bound }.

    For the ideals used in the tests this coincides with ideal
    membership for polynomials of degree <= bound.
    """

    def __init__(self, generators, bound):
        ring = generators[0].ring
        self.ring = ring
        self.bound = bound
        self.columns = {m: i for i, m in enumerate(monomials_up_to(ring.nvars, bound))}
        self.span = Span(len(self.columns), ring.field)
        zero = ring.field.zero()
        for g in generators:
            dg = g.total_degree()
            if dg > bound:
                continue
            for gamma in monomials_up_to(ring.nvars, bound - dg):
                row = [zero] * len(self.columns)
                for m, c in g.terms.items():
                    row[self.columns[monomial_mul(m, gamma)]] = c
                self.span.insert(row)

    def vector(self, f):
        zero = self.ring.field.zero()
        row = [zero] * len(self.columns)
        for m, c in f.terms.items():
            if sum(m) > self.bound:
                raise ValueError("polynomial exceeds the oracle truncation degree")
            row[self.columns[m]] = c
        return row

    def contains(self, f):
        return self.span.contains(self.vector(f))


def macaulay_matrix(generators, point, k):
    """Explicit Macaulay constraint matrix at the point, columns indexed
    by monomials of degree <= k in grevlex-ascending order."""
    ring = generators[0].ring
    columns = monomials_up_to(ring.nvars, k)
    index = {m: i for i, m in enumerate(columns)}
    zero = ring.field.zero()
    rows = []
    for g in generators:
        shifted = g.translate(point)
        for gamma in monomials_up_to(ring.nvars, k):
            row = [zero] * len(columns)
            nonzero = False
            for m, c in shifted.terms.items():
                beta = monomial_mul(m, gamma)
                if sum(beta) <= k:
                    row[index[beta]] = c
                    nonzero = True
            if nonzero:
                rows.append(row)
    return rows, columns


def macaulay_kernel_dimension(generators, point, k):
    """Kernel dimension of the Macaulay matrix by rank-nullity, using the
    independent Span elimination."""
    rows, columns = macaulay_matrix(generators, point, k)
    ring = generators[0].ring
    span = Span(len(columns), ring.field)
    for row in rows:
        span.insert(row)
    return len(columns) - span.dim
