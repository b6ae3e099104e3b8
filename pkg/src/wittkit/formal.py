"""Formal integer combinations of Verschiebung atoms V^i(a).

This is the presentation of the big Witt ring as the free abelian group
on atoms V^i(a) (a a nonzero ring element, i <= the truncation), with

    V^i(a) * V^j(b) = gcd(i,j) * V^lcm(i,j)(a^(j/g) b^(i/g)),  g = gcd(i,j).

Atoms are keyed by the exact element: V^1(a) + V^1(b) stays a two-atom
sum and is NOT identified with V^1(a+b), and the integer multiple
n*V^1(a) is distinct from V^1(na).  Everything is truncated eagerly:
atoms whose index escapes the truncation are dropped, i.e. we compute in
the quotient by the V-filtration.

Two independent normal-form procedures rewrite a sum as Witt coordinates:
fs_normal_form factors the characteristic series (division-free, every
ring), and fs_newton_normal_form V-divides the modified ghost vector
(needs exact division by integers).  They agree whenever both apply,
which the test suite exploits as a cross-check.

The cycle model of W(Z) lives here too: CycleSum is the special case
"all elements equal 1" with its classical gcd/lcm product.
"""

import math

from .rings import MismatchError, ZZ, exact_div_by_integer
from .series import UnitSeries, factor_to_coords

__all__ = [
    'FormalSum', 'CycleSum', 'divisors', 'fs_add', 'fs_mul', 'fs_frobenius',
    'fs_verschiebung', 'fs_trace', 'fs_modified_ghost', 'fs_to_series',
    'fs_normal_form', 'fs_newton_normal_form', 'cycle_mul', 'cycles_to_series',
]


def divisors(n):
    """Sorted positive divisors of n."""
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


class FormalSum:
    """A truncated integer combination of atoms V^i(a)."""

    __slots__ = ('ring', 'trunc', 'terms')

    def __init__(self, ring, trunc, terms=()):
        if trunc < 1:
            raise ValueError('truncation must be at least 1')
        self.ring = ring
        self.trunc = trunc
        merged = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, a), c in items:
            a = ring(a)
            if i < 1:
                raise ValueError(f'atom index must be positive, got {i}')
            if i > trunc or a.is_zero() or c == 0:
                continue
            key = (i, a)
            c = merged.get(key, 0) + c
            if c:
                merged[key] = c
            else:
                merged.pop(key, None)
        self.terms = merged

    @classmethod
    def zero(cls, ring, trunc):
        return cls(ring, trunc)

    @classmethod
    def atom(cls, ring, trunc, i, a, c=1):
        """c * V^i(a)."""
        return cls(ring, trunc, [((i, ring(a)), c)])

    @classmethod
    def one(cls, ring, trunc):
        return cls.atom(ring, trunc, 1, ring.one)

    @classmethod
    def from_coords(cls, ring, coords):
        """The Teichmuller sum V^1(a1) + V^2(a2) + ... of a coordinate list."""
        coords = list(coords)
        return cls(ring, len(coords),
                   [((i, a), 1) for i, a in enumerate(coords, start=1)])

    def atoms(self):
        """Canonically ordered (index, element, coefficient) triples."""
        return sorted(((i, a, c) for (i, a), c in self.terms.items()),
                      key=lambda t: (t[0], self.ring._sort_key(t[1].value)))

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if not isinstance(other, FormalSum):
            raise TypeError(f'expected a FormalSum, got {other!r}')
        if other.ring != self.ring or other.trunc != self.trunc:
            raise MismatchError('formal sums need equal rings and truncations')

    def __eq__(self, other):
        return (isinstance(other, FormalSum) and other.ring == self.ring
                and other.trunc == self.trunc and other.terms == self.terms)

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        for key, c in other.terms.items():
            c = terms.get(key, 0) + c
            if c:
                terms[key] = c
            else:
                del terms[key]
        out = FormalSum(self.ring, self.trunc)
        out.terms = terms
        return out

    def __neg__(self):
        out = FormalSum(self.ring, self.trunc)
        out.terms = {key: -c for key, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __rmul__(self, k):
        """Integer scaling of coefficients: n*V^1(a), not V^1(na)."""
        if not isinstance(k, int):
            return NotImplemented
        out = FormalSum(self.ring, self.trunc)
        if k:
            out.terms = {key: k * c for key, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, int):
            return self.__rmul__(other)
        self._check(other)
        terms = {}
        for (i, a), c in self.terms.items():
            for (j, b), d in other.terms.items():
                g = math.gcd(i, j)
                l = i * j // g
                if l > self.trunc:
                    continue
                elem = a ** (j // g) * b ** (i // g)
                if elem.is_zero():
                    continue
                key = (l, elem)
                cd = terms.get(key, 0) + c * d * g
                if cd:
                    terms[key] = cd
                else:
                    del terms[key]
        out = FormalSum(self.ring, self.trunc)
        out.terms = terms
        return out

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f'bad exponent {k!r}')
        result = FormalSum.one(self.ring, self.trunc)
        for _ in range(k):
            result = result * self
        return result

    def __repr__(self):
        if not self.terms:
            return '0'
        parts = []
        for i, a, c in self.atoms():
            atom = f'V^{i}({a!r})'
            if c == 1:
                parts.append(atom)
            elif c == -1:
                parts.append(f'-{atom}')
            else:
                parts.append(f'{c}*{atom}')
        out = parts[0]
        for part in parts[1:]:
            out += ' - ' + part[1:] if part.startswith('-') else ' + ' + part
        return out


def fs_add(x, y):
    return x + y


def fs_mul(x, y):
    return x * y


def fs_frobenius(k, x):
    """F^k, atom-wise: F^k(V^i(a)) = gcd(k,i) * V^(i/g)(a^(k/g))."""
    if k < 1:
        raise ValueError('Frobenius index must be positive')
    out = FormalSum(x.ring, x.trunc)
    terms = {}
    for (i, a), c in x.terms.items():
        g = math.gcd(k, i)
        elem = a ** (k // g)
        if elem.is_zero():
            continue
        key = (i // g, elem)
        c2 = terms.get(key, 0) + c * g
        if c2:
            terms[key] = c2
        else:
            del terms[key]
    out.terms = terms
    return out


def fs_verschiebung(k, x):
    """V^k: index multiplication; atoms escaping the truncation drop."""
    if k < 1:
        raise ValueError('Verschiebung index must be positive')
    return FormalSum(x.ring, x.trunc,
                     [((i * k, a), c) for (i, a), c in x.terms.items()])


def fs_trace(x):
    """Sum of c*a over the index-1 atoms: the trace in the quotient V>=1/V>=2."""
    acc = x.ring.zero
    for (i, a), c in x.terms.items():
        if i == 1:
            acc = acc + c * a
    return acc


def fs_modified_ghost(x):
    """Component k = trace of F^k(x), for k = 1..trunc.

    Integer coefficients never enter the ring before the final trace, so
    this is exact over every ring; on Teichmuller sums it reproduces the
    classical ghost map sum_{d|n} d*a_d^(n/d).
    """
    return [fs_trace(fs_frobenius(k, x)) for k in range(1, x.trunc + 1)]


def fs_to_series(x, prec=None):
    """prod over atoms of (1 - a t^i)^c; sends + to * and * to the Witt product."""
    n = x.trunc if prec is None else prec
    ring = x.ring
    w = [ring.one] + [ring.zero] * n
    for (i, a), c in x.terms.items():
        if i > n:
            continue
        for _ in range(abs(c)):
            if c > 0:
                for k in range(n, i - 1, -1):
                    w[k] = w[k] - a * w[k - i]
            else:
                for k in range(i, n + 1):
                    w[k] = w[k] + a * w[k - i]
    return UnitSeries(ring, w[1:])


def fs_normal_form(x):
    """Witt coordinates of x, by factoring its characteristic series.

    Division-free, hence valid over every ring including torsion.
    """
    return factor_to_coords(fs_to_series(x))


def fs_newton_normal_form(x):
    """Witt coordinates of x, by V-dividing its modified ghost vector.

    Solves p_k = sum_{d|k} d*w_d^(k/d) for the w_k in turn, dividing by k
    at each step; raises DivisibilityFailure over rings where a division
    has no unique solution.  Independent of fs_normal_form and equal to
    it whenever it succeeds.
    """
    ghost = fs_modified_ghost(x)
    coords = []
    for k in range(1, x.trunc + 1):
        acc = ghost[k - 1]
        for d in divisors(k):
            if d < k:
                acc = acc - d * coords[d - 1] ** (k // d)
        coords.append(exact_div_by_integer(acc, k))
    return coords


class CycleSum:
    """An integer combination c1*C1 + ... + cn*Cn of cycles."""

    __slots__ = ('trunc', 'coeffs')

    def __init__(self, coeffs):
        self.coeffs = tuple(int(c) for c in coeffs)
        self.trunc = len(self.coeffs)
        if self.trunc < 1:
            raise ValueError('truncation must be at least 1')

    def __eq__(self, other):
        return isinstance(other, CycleSum) and other.coeffs == self.coeffs

    def __add__(self, other):
        if other.trunc != self.trunc:
            raise MismatchError('cycle sums need equal truncations')
        return CycleSum([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        return cycle_mul(self, other)

    def __repr__(self):
        parts = [f'{c}*C{i}' for i, c in enumerate(self.coeffs, start=1) if c]
        return ' + '.join(parts) if parts else '0'


def cycle_mul(x, y):
    """Bilinear extension of C_i * C_j = gcd(i,j) * C_lcm(i,j)."""
    if x.trunc != y.trunc:
        raise MismatchError('cycle sums need equal truncations')
    out = [0] * x.trunc
    for i, c in enumerate(x.coeffs, start=1):
        if not c:
            continue
        for j, d in enumerate(y.coeffs, start=1):
            if not d:
                continue
            g = math.gcd(i, j)
            l = i * j // g
            if l <= x.trunc:
                out[l - 1] += c * d * g
    return CycleSum(out)


def cycles_to_series(c, prec=None):
    """prod (1 - t^i)^(-c_i) over Z.

    Note the inverse-power normalization: relative to fs_to_series this
    map is composed with series inversion, so it carries cycle sums to
    series products and cycle products to the Witt product twisted by an
    inversion.
    """
    n = c.trunc if prec is None else prec
    x = FormalSum(ZZ, n, [((i, ZZ.one), -k) for i, k in enumerate(c.coeffs, start=1)])
    return fs_to_series(x, prec=n)
