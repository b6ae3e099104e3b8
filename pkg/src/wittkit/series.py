"""Truncated power series with unit constant term.

A UnitSeries holds 1 + c1 t + ... + cn t^n mod t^(n+1); the constant 1 is
implicit and never stored.  Series multiplication is the group law (it is
Witt addition under the coordinate identification), and witt_mul_series is
the second ring operation, routed through the formal-sum presentation so
that it is division-free and works over torsion rings.

The expansion (a1,...,an) -> prod (1 - a_i t^i) and its inverse, series
factorization, convert between Witt coordinates and series.  ghost_series
is the logarithmic-derivative map -t p'(t)/p(t), whose k-th coefficient is
the k-th ghost component; the sign is pinned so that 1 - at has ghost
(a, a^2, a^3, ...).
"""

from .rings import MismatchError, exact_div_by_integer

__all__ = [
    'UnitSeries', 'PlainSeries', 'series_mul', 'series_inverse',
    'expand_from_atoms', 'factor_to_coords', 'ghost_series',
    'series_from_ghost', 'witt_mul_series',
]


def _coerce_coeffs(ring, coeffs):
    return tuple(ring(c) for c in coeffs)


class UnitSeries:
    """1 + c1 t + ... + cn t^n, exact coefficients, fixed precision."""

    __slots__ = ('ring', 'prec', 'coeffs')

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = _coerce_coeffs(ring, coeffs)
        self.prec = len(self.coeffs)
        if self.prec < 1:
            raise ValueError('precision must be at least 1')

    def coeff(self, k):
        """Coefficient of t^k, 0 <= k <= prec."""
        if k == 0:
            return self.ring.one
        return self.coeffs[k - 1]

    def __eq__(self, other):
        return (isinstance(other, UnitSeries) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __hash__(self):
        return hash((self.ring, self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, UnitSeries):
            return NotImplemented
        if other.ring != self.ring or other.prec != self.prec:
            raise MismatchError('series multiplication needs equal rings and precisions')
        n = self.prec
        out = []
        for k in range(1, n + 1):
            c = self.coeffs[k - 1] + other.coeffs[k - 1]
            for i in range(1, k):
                c = c + self.coeffs[i - 1] * other.coeffs[k - i - 1]
            out.append(c)
        return UnitSeries(self.ring, out)

    def inverse(self):
        """The series q with self*q = 1 mod t^(prec+1)."""
        inv = []
        for k in range(1, self.prec + 1):
            c = self.coeffs[k - 1]
            for i in range(1, k):
                c = c + self.coeffs[i - 1] * inv[k - i - 1]
            inv.append(-c)
        return UnitSeries(self.ring, inv)

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError(f'bad series exponent {k!r}')
        base = self if k >= 0 else self.inverse()
        result = UnitSeries.one(self.ring, self.prec)
        for _ in range(abs(k)):
            result = result * base
        return result

    @classmethod
    def one(cls, ring, prec):
        return cls(ring, [ring.zero] * prec)

    def is_one(self):
        return all(c.is_zero() for c in self.coeffs)

    def order_at_least(self, k):
        """True when the series lies in 1 + t^k A[[t]]."""
        return all(c.is_zero() for c in self.coeffs[:k - 1])

    def __repr__(self):
        parts = ['1']
        for k, c in enumerate(self.coeffs, start=1):
            if not c.is_zero():
                parts.append(f'({c!r})*t^{k}' if k > 1 else f'({c!r})*t')
        return ' + '.join(parts)


class PlainSeries:
    """c1 t + ... + cn t^n: a series with no constant term.

    Used for ghost generating series; the k-th coefficient of
    ghost_series(p) is the k-th ghost component of the Witt vector
    that p represents.
    """

    __slots__ = ('ring', 'prec', 'coeffs')

    def __init__(self, ring, coeffs):
        self.ring = ring
        self.coeffs = _coerce_coeffs(ring, coeffs)
        self.prec = len(self.coeffs)

    def __eq__(self, other):
        return (isinstance(other, PlainSeries) and other.ring == self.ring
                and other.coeffs == self.coeffs)

    def __add__(self, other):
        if other.ring != self.ring or other.prec != self.prec:
            raise MismatchError('series addition needs equal rings and precisions')
        return PlainSeries(self.ring, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def pointwise_mul(self, other):
        if other.ring != self.ring or other.prec != self.prec:
            raise MismatchError('pointwise product needs equal rings and precisions')
        return PlainSeries(self.ring, [a * b for a, b in zip(self.coeffs, other.coeffs)])

    def __repr__(self):
        parts = [f'({c!r})*t^{k}' for k, c in enumerate(self.coeffs, start=1)
                 if not c.is_zero()]
        return ' + '.join(parts) if parts else '0'


def series_mul(p, q):
    """Cauchy product; this is Witt addition on the series model."""
    return p * q


def series_inverse(p):
    return p.inverse()


def _unpack_coords(coords, ring):
    coords = tuple(getattr(coords, 'coords', coords))
    if ring is None:
        if not coords:
            raise ValueError('cannot infer the ring of an empty coordinate list')
        ring = coords[0].ring
    return ring, tuple(ring(c) for c in coords)


def expand_from_atoms(coords, ring=None, prec=None):
    """prod_i (1 - a_i t^i) mod t^(prec+1) for coordinates (a_1, ..., a_n)."""
    ring, coords = _unpack_coords(coords, ring)
    n = prec if prec is not None else len(coords)
    w = [ring.one] + [ring.zero] * n
    for i, a in enumerate(coords, start=1):
        if i > n:
            break
        if a.is_zero():
            continue
        for k in range(n, i - 1, -1):
            w[k] = w[k] - a * w[k - i]
    return UnitSeries(ring, w[1:])


def factor_to_coords(p):
    """The unique (a_1, ..., a_n) with prod (1 - a_i t^i) = p mod t^(n+1).

    Long division: strip one factor per step and cancel it from the
    residual.  Needs no division by integers, so it is exact over every
    ring; this is the canonical series -> Witt conversion.
    """
    n = p.prec
    w = [p.ring.one] + list(p.coeffs)
    coords = []
    for i in range(1, n + 1):
        a = -w[i]
        coords.append(a)
        if a.is_zero():
            continue
        # divide the residual by (1 - a t^i), i.e. multiply by sum a^j t^(ij)
        for k in range(i, n + 1):
            w[k] = w[k] + a * w[k - i]
    return coords


def ghost_series(p):
    """-t p'(t)/p(t): the generating series of the ghost components.

    Uses only series inversion, so it is exact over every ring.
    """
    inv = p.inverse()
    n = p.prec
    numer = [p.coeff(k) * (-k) for k in range(1, n + 1)]   # -t p'
    out = []
    for k in range(1, n + 1):
        c = numer[k - 1]
        for i in range(1, k):
            c = c + numer[i - 1] * inv.coeffs[k - i - 1]
        out.append(c)
    return PlainSeries(p.ring, out)


def series_from_ghost(g):
    """The unit series p with ghost_series(p) = g.

    Solves -t p' = g p coefficient by coefficient; each step divides by
    k, so a DivisibilityFailure signals that g is not a ghost image.
    """
    cs = []
    for k in range(1, g.prec + 1):
        acc = g.coeffs[k - 1]
        for i in range(1, k):
            acc = acc + g.coeffs[i - 1] * cs[k - i - 1]
        cs.append(exact_div_by_integer(-acc, k))
    return UnitSeries(g.ring, cs)


def witt_mul_series(p, q):
    """The Witt product on unit series: (1-at) * (1-bt) = 1-abt.

    Factor both series to coordinates, multiply the Verschiebung atoms by
    the gcd/lcm rule, and expand back; bilinear over series
    multiplication and division-free.
    """
    if p.ring != q.ring or p.prec != q.prec:
        raise MismatchError('Witt product needs equal rings and precisions')
    from .formal import FormalSum, fs_mul, fs_to_series
    x = FormalSum.from_coords(p.ring, factor_to_coords(p))
    y = FormalSum.from_coords(q.ring, factor_to_coords(q))
    return fs_to_series(fs_mul(x, y), prec=p.prec)
