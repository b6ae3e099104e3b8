"""Truncated big Witt vectors W_n(A).

Ring structure, Teichmuller map, Verschiebung, Frobenius, norm, ghost map
and its V-division inverse, restriction, and Dwork's integrality
criterion.  Addition goes through series multiplication and
factorization; multiplication and Frobenius go through the formal-sum
presentation.  Both routes are division-free, so torsion rings are
first-class; the ghost route exists alongside as an exact check wherever
division by integers happens to succeed.
"""

import math
from collections import namedtuple

from .rings import (MismatchError, DivisibilityFailure, UnsupportedRing,
                    IntegerRing, PolynomialRing, RingElement,
                    exact_div_by_integer, apply_base_hom)
from .series import expand_from_atoms, factor_to_coords, series_mul
from .formal import FormalSum, divisors, fs_frobenius, fs_modified_ghost, fs_normal_form

__all__ = [
    'WittVec', 'GhostVec', 'DworkReport', 'teichmuller', 'witt_zero',
    'witt_one', 'witt_add', 'witt_neg', 'witt_sub', 'witt_mul', 'witt_scalar',
    'witt_pow', 'witt_verschiebung', 'witt_frobenius', 'witt_ghost',
    'witt_from_ghost', 'witt_norm', 'witt_restrict', 'witt_map', 'dwork_check',
]


class WittVec:
    """A length-n big Witt vector (a_1, ..., a_n) over a fixed ring."""

    __slots__ = ('ring', 'coords')

    def __init__(self, ring, coords):
        self.ring = ring
        self.coords = tuple(ring(c) for c in coords)
        if not self.coords:
            raise ValueError('length must be at least 1')

    def __len__(self):
        return len(self.coords)

    def __iter__(self):
        return iter(self.coords)

    def __eq__(self, other):
        return (isinstance(other, WittVec) and other.ring == self.ring
                and other.coords == self.coords)

    def __hash__(self):
        return hash((self.ring, self.coords))

    def __repr__(self):
        return '(' + ', '.join(repr(c) for c in self.coords) + ')'

    def __add__(self, other):
        return witt_add(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return witt_add(self, witt_neg(other))

    def __mul__(self, other):
        return witt_mul(self, other)

    def is_zero(self):
        return all(c.is_zero() for c in self.coords)


class GhostVec:
    """A vector of ghost components (w_1, ..., w_n); ring structure is pointwise."""

    __slots__ = ('ring', 'components')

    def __init__(self, ring, components):
        self.ring = ring
        self.components = tuple(ring(c) for c in components)

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other):
        return (isinstance(other, GhostVec) and other.ring == self.ring
                and other.components == self.components)

    def __repr__(self):
        return '<' + ', '.join(repr(c) for c in self.components) + '>'

    def __add__(self, other):
        self._check(other)
        return GhostVec(self.ring, [a + b for a, b in zip(self.components, other.components)])

    def __mul__(self, other):
        self._check(other)
        return GhostVec(self.ring, [a * b for a, b in zip(self.components, other.components)])

    def _check(self, other):
        if other.ring != self.ring or len(other) != len(self):
            raise MismatchError('ghost vectors need equal rings and lengths')


def _check_pair(x, y):
    if x.ring != y.ring or len(x) != len(y):
        raise MismatchError('Witt vectors need equal rings and lengths')


def witt_zero(ring, n):
    return WittVec(ring, [ring.zero] * n)


def witt_one(ring, n):
    return WittVec(ring, [ring.one] + [ring.zero] * (n - 1))


def teichmuller(x, ring=None):
    """tau(a_1, ..., a_n) = V^1(a_1) + V^2(a_2) + ... as a formal sum."""
    if isinstance(x, WittVec):
        return FormalSum.from_coords(x.ring, x.coords)
    return FormalSum.from_coords(ring, x)


def witt_add(x, y):
    _check_pair(x, y)
    p = series_mul(expand_from_atoms(x), expand_from_atoms(y))
    return WittVec(x.ring, factor_to_coords(p))


def witt_neg(x):
    return WittVec(x.ring, factor_to_coords(expand_from_atoms(x).inverse()))


def witt_sub(x, y):
    return witt_add(x, witt_neg(y))


def witt_mul(x, y):
    _check_pair(x, y)
    return WittVec(x.ring, fs_normal_form(teichmuller(x) * teichmuller(y)))


def witt_scalar(k, x):
    """k*x for an integer k (the Witt-ring Z-module structure)."""
    return WittVec(x.ring, fs_normal_form(k * teichmuller(x)))


def witt_pow(x, d):
    """x^d in the Witt ring, d >= 0."""
    return WittVec(x.ring, fs_normal_form(teichmuller(x) ** d))


def witt_verschiebung(r, x):
    """V^r: coordinate a_k moves to slot rk; everything else is 0."""
    if r < 1:
        raise ValueError('Verschiebung index must be positive')
    n = len(x)
    out = [x.ring.zero] * n
    for k, a in enumerate(x.coords, start=1):
        if k * r <= n:
            out[k * r - 1] = a
    return WittVec(x.ring, out)


def witt_frobenius(k, x):
    """F^k via the atom rule; on ghost components this is index dilation."""
    return WittVec(x.ring, fs_normal_form(fs_frobenius(k, teichmuller(x))))


def witt_ghost(x):
    """Ghost components: w_n = sum_{d|n} d * a_d^(n/d)."""
    return GhostVec(x.ring, fs_modified_ghost(teichmuller(x)))


def witt_from_ghost(g):
    """V-division: recover coordinates from ghost components.

    Subtracts the contributions of the coordinates already found and
    divides the residual n-th component by n.  Raises
    DivisibilityFailure when g is not an integral ghost image (or the
    ring does not allow the division).
    """
    coords = []
    for n in range(1, len(g) + 1):
        acc = g.components[n - 1]
        for d in divisors(n):
            if d < n:
                acc = acc - d * coords[d - 1] ** (n // d)
        coords.append(exact_div_by_integer(acc, n))
    return WittVec(g.ring, coords)


def witt_norm(d, x, route=None):
    """The multiplicative norm N^d.

    On ghost components the norm is y_t = x_(t/g)^g with g = gcd(d, t).
    Over rings where V-division succeeds (Z, Q, polynomial rings over
    them) the ghost route is used directly; otherwise the universal norm
    polynomials are evaluated.  `route` forces 'ghost' or 'universal'.
    """
    if d < 1:
        raise ValueError('norm index must be positive')
    if route not in (None, 'ghost', 'universal'):
        raise ValueError(f'unknown norm route {route!r}')
    if route != 'universal':
        g = witt_ghost(x)
        y = [g.components[t // math.gcd(d, t) - 1] ** math.gcd(d, t)
             for t in range(1, len(x) + 1)]
        try:
            return witt_from_ghost(GhostVec(x.ring, y))
        except DivisibilityFailure:
            if route == 'ghost':
                raise
    from .universal import gen_polys, eval_polys
    return eval_polys(gen_polys('norm', len(x), d=d), x)


def witt_restrict(x, m):
    """The restriction W_n -> W_m, m <= n: keep the first m coordinates."""
    if not 1 <= m <= len(x):
        raise MismatchError(f'cannot restrict a length-{len(x)} vector to length {m}')
    return WittVec(x.ring, x.coords[:m])


def witt_map(x, target, values=None):
    """Apply a coefficient-ring homomorphism to every coordinate."""
    return WittVec(target, [apply_base_hom(c, target, values) for c in x.coords])


DworkReport = namedtuple('DworkReport', ['ok', 'p', 'n'])


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _congruent(a, b, m, ring):
    diff = (a - b).value
    if isinstance(ring, IntegerRing):
        return diff % m == 0
    return all(c % m == 0 for _, c in diff)   # polynomial over Z


def dwork_check(g):
    """Dwork's criterion for ghost vectors over Z (or Z[vars]).

    (w_1, ..., w_N) is a ghost image of an integral Witt vector iff
    w_n = phi_p(w_(n/p)) mod p^(v_p(n)) for every prime p dividing every
    index n, where phi_p is a Frobenius lift: the identity on Z, and
    variable substitution x -> x^p on Z[vars].  Returns a DworkReport
    whose p/n name the first violated congruence (scanning n upward).
    """
    ring = g.ring
    poly_over_z = isinstance(ring, PolynomialRing) and isinstance(ring.base, IntegerRing)
    if not (isinstance(ring, IntegerRing) or poly_over_z):
        raise UnsupportedRing(f'Dwork criterion needs Z or Z[vars], not {ring}')
    for n in range(2, len(g) + 1):
        for p in _prime_factors(n):
            lower = g.components[n // p - 1]
            if poly_over_z:
                lower = RingElement(ring, tuple(sorted(
                    (tuple(e * p for e in exps), c) for exps, c in lower.value)))
            pk, m = 1, n
            while m % p == 0:          # pk = p^(v_p(n))
                pk *= p
                m //= p
            if not _congruent(g.components[n - 1], lower, pk, ring):
                return DworkReport(False, p, n)
    return DworkReport(True, None, None)
