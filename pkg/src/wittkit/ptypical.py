"""Truncated p-typical Witt vectors.

Coordinates are indexed from 0 (slot i sits at the big-Witt index p^i);
the ghost components are w_k = sum_{i<=k} p^i * a_i^(p^(k-i)).  There is
no division-free presentation at p-typical indices, so the ring
operations always evaluate the universal p-typical polynomials, which
are generated over Z once per (p, length) and work over every ring
including p-torsion.

Also here: the Artin-Hasse exponential E(a) = exp(sum a^(p^i) t^(p^i) / p^i)
and the embedding x -> prod E(a_i t^(p^i)) of a p-typical vector into the
unit-series model over a Q-algebra.
"""

from fractions import Fraction

from .rings import (MismatchError, UnsupportedRing, QQ, PolynomialRing,
                    exact_div_by_integer)
from .series import UnitSeries, series_mul
from .witt import GhostVec

__all__ = [
    'PTypicalWitt', 'is_prime', 'pt_zero', 'pt_ghost', 'pt_from_ghost',
    'pt_add', 'pt_mul', 'pt_scalar', 'pt_verschiebung', 'pt_frobenius',
    'pt_restrict', 'artin_hasse_coeffs', 'pt_embed_big',
]


def is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class PTypicalWitt:
    """(a_0, ..., a_n) over a fixed ring, for a fixed prime p."""

    __slots__ = ('ring', 'p', 'coords')

    def __init__(self, ring, p, coords):
        if not is_prime(p):
            raise ValueError(f'{p} is not prime')
        self.ring = ring
        self.p = p
        self.coords = tuple(ring(c) for c in coords)
        if not self.coords:
            raise ValueError('length must be at least 1')

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        return (isinstance(other, PTypicalWitt) and other.ring == self.ring
                and other.p == self.p and other.coords == self.coords)

    def __repr__(self):
        return '(' + ', '.join(repr(c) for c in self.coords) + f' | p={self.p})'

    def __add__(self, other):
        return pt_add(self, other)

    def __mul__(self, other):
        return pt_mul(self, other)

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)


def pt_zero(ring, p, length):
    return PTypicalWitt(ring, p, [ring.zero] * length)


def _check_pair(x, y):
    if x.ring != y.ring or x.p != y.p or len(x) != len(y):
        raise MismatchError('p-typical vectors need equal rings, primes and lengths')


def pt_ghost(x):
    """w_k = sum_{i=0..k} p^i * a_i^(p^(k-i)), k = 0..n."""
    p = x.p
    out = []
    for k in range(len(x)):
        acc = x.ring.zero
        for i in range(k + 1):
            acc = acc + p ** i * x.coords[i] ** (p ** (k - i))
        out.append(acc)
    return GhostVec(x.ring, out)


def pt_from_ghost(g, p):
    """Solve the ghost equations for the coordinates (p-typical V-division)."""
    coords = []
    for k in range(len(g)):
        acc = g.components[k]
        for i in range(k):
            acc = acc - p ** i * coords[i] ** (p ** (k - i))
        coords.append(exact_div_by_integer(acc, p ** k))
    return PTypicalWitt(g.ring, p, coords)


def _eval_binary(kind, x, y):
    from .universal import gen_polys, eval_polys
    return eval_polys(gen_polys(kind, len(x), p=x.p), x, y)


def pt_add(x, y):
    _check_pair(x, y)
    return _eval_binary('pt_sum', x, y)


def pt_mul(x, y):
    _check_pair(x, y)
    return _eval_binary('pt_prod', x, y)


def pt_scalar(k, x):
    """k*x by repeated addition (k >= 0)."""
    if k < 0:
        raise ValueError('negative scalars are not needed here')
    acc = pt_zero(x.ring, x.p, len(x))
    for _ in range(k):
        acc = pt_add(acc, x)
    return acc


def pt_verschiebung(x):
    """V(a_0, ..., a_n) = (0, a_0, ..., a_(n-1)): shift, last slot drops."""
    return PTypicalWitt(x.ring, x.p, (x.ring.zero,) + x.coords[:-1])


def pt_frobenius(x):
    """F: ghost components shift down one slot, so the length drops by one."""
    if len(x) < 2:
        raise MismatchError('Frobenius needs length >= 2')
    from .universal import gen_polys, eval_polys
    return eval_polys(gen_polys('pt_frobenius', len(x), p=x.p), x)


def pt_restrict(x, length):
    if not 1 <= length <= len(x):
        raise MismatchError(f'cannot restrict length {len(x)} to {length}')
    return PTypicalWitt(x.ring, x.p, x.coords[:length])


def _exp_series(ring, taylor, prec):
    """exp of sum_(k>=1) taylor[k] t^k, over a Q-algebra."""
    e = [ring.one]
    for k in range(1, prec + 1):
        acc = ring.zero
        for i in range(1, k + 1):
            if not taylor[i].is_zero():
                acc = acc + i * taylor[i] * e[k - i]
        e.append(exact_div_by_integer(acc, k))
    return UnitSeries(ring, e[1:])


def artin_hasse_coeffs(p, prec):
    """The Artin-Hasse exponential E(a) = exp(sum a^(p^i) t^(p^i)/p^i).

    Returned as a unit series over Q[a] at the given precision.  Every
    coefficient has denominator prime to p even though the exponent
    series does not.
    """
    if not is_prime(p):
        raise ValueError(f'{p} is not prime')
    ring = PolynomialRing(QQ, ('a',))
    a = ring.gen('a')
    taylor = [ring.zero] * (prec + 1)
    q = 1
    i = 0
    while q <= prec:
        taylor[q] = exact_div_by_integer(a ** q, p ** i)
        q *= p
        i += 1
    return _exp_series(ring, taylor, prec)


def pt_embed_big(x, prec=None):
    """prod_i E(a_i t^(p^i)) over a Q-algebra.

    The resulting unit series represents the same element in the big
    model: the log-derivative of its inverse at index p^k is the k-th
    p-typical ghost component.
    """
    ring = x.ring
    if not ring.is_q_algebra:
        raise UnsupportedRing(f'the Artin-Hasse embedding needs a Q-algebra, not {ring}')
    p = x.p
    if prec is None:
        prec = p ** (len(x) - 1)
    result = UnitSeries.one(ring, prec)
    for i, a in enumerate(x.coords):
        if a.is_zero():
            continue
        taylor = [ring.zero] * (prec + 1)
        q, j = p ** i, 0
        while q <= prec:
            taylor[q] = exact_div_by_integer(a ** (p ** j), p ** j)
            q *= p
            j += 1
        result = series_mul(result, _exp_series(ring, taylor, prec))
    return result
