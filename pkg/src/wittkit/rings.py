"""Exact arithmetic for the pluggable coefficient rings.

Four ring families are supported: the integers Z, modular rings Z/m, the
rationals Q, and multivariate polynomial rings over Z or Q (and over Z/m,
which base change produces).  Elements are immutable and canonical: equal
elements have identical internal representations, so ``==`` and ``hash``
are structural.

Value representations:

  Z      arbitrary-precision int
  Z/m    int residue in [0, m)
  Q      fractions.Fraction (lowest terms, positive denominator)
  polys  sorted tuple of (exponent-vector, coefficient) pairs; exponent
         vectors are dense tuples aligned with the ring's variable list,
         zero coefficients are never stored

There is no floating point anywhere in the package.
"""

from fractions import Fraction
import math

__all__ = [
    'DomainError', 'MismatchError', 'DivisibilityFailure', 'UnsupportedRing',
    'SizeBoundError', 'Ring', 'RingElement', 'IntegerRing', 'ModularRing',
    'RationalRing', 'PolynomialRing', 'ZZ', 'QQ', 'Zmod', 'ring_from_string',
    'exact_div_by_integer', 'apply_base_hom', 'element_to_json',
    'element_from_json',
]


class DomainError(Exception):
    """Base class for arithmetic-domain errors (CLI exit code 2)."""
    kind = 'domain'


class MismatchError(DomainError):
    """Operands live in different rings or have incompatible shapes."""
    kind = 'mismatch'


class DivisibilityFailure(DomainError):
    """Exact division by an integer has no (unique) solution.

    Callers that have a division-free fallback (series factorization,
    universal polynomials) catch this and take the other route.
    """
    kind = 'divisibility'


class UnsupportedRing(DomainError):
    """The requested operation has no canonical meaning for this ring."""
    kind = 'unsupported-ring'


class SizeBoundError(DomainError):
    """A configured size bound (e.g. tensor-power dimension) was exceeded."""
    kind = 'size-bound'


class Ring:
    """A commutative-ring descriptor plus raw arithmetic on element values.

    Subclasses define the internal value representation and the primitive
    operations on raw values; user-facing arithmetic goes through
    :class:`RingElement`, which dispatches here.
    """

    def __call__(self, v):
        """Coerce v (an int, a raw value, or an element of this ring)."""
        if isinstance(v, RingElement):
            if v.ring != self:
                raise MismatchError(f'element of {v.ring} where {self} expected')
            return v
        if isinstance(v, int):
            return RingElement(self, self._of_int(v))
        return RingElement(self, self._canon(v))

    def of_int(self, k):
        """The canonical image of the integer k in this ring."""
        return RingElement(self, self._of_int(k))

    @property
    def zero(self):
        return self.of_int(0)

    @property
    def one(self):
        return self.of_int(1)

    @property
    def is_q_algebra(self):
        """True when every nonzero integer acts invertibly."""
        return False

    # Generic square-and-multiply; ModularRing overrides with pow(a, k, m).
    def _pow(self, a, k):
        result = self._of_int(1)
        while k:
            if k & 1:
                result = self._mul(result, a)
            k >>= 1
            if k:
                a = self._mul(a, a)
        return result

    def __ne__(self, other):
        return not self.__eq__(other)


class IntegerRing(Ring):

    def __str__(self):
        return 'Z'

    def __repr__(self):
        return 'IntegerRing()'

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash('Z')

    def _canon(self, v):
        if not isinstance(v, int):
            raise TypeError(f'cannot interpret {v!r} as an integer')
        return int(v)

    def _of_int(self, k):
        return int(k)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _div_int(self, a, k):
        q, r = divmod(a, k)
        return q if r == 0 else None

    def _to_json(self, a):
        return str(a)

    def _from_json(self, obj):
        if isinstance(obj, str):
            return int(obj, 10)
        if isinstance(obj, int):
            return obj
        raise ValueError(f'bad integer encoding: {obj!r}')

    def _str(self, a):
        return str(a)

    def _sort_key(self, a):
        return (a,)

    def random_element(self, rng, bound=9, **_):
        return self.of_int(rng.randint(-bound, bound))


class ModularRing(Ring):
    """The ring Z/m, residues stored in [0, m)."""

    def __init__(self, modulus):
        if not isinstance(modulus, int) or modulus < 2:
            raise ValueError(f'modulus must be an integer >= 2, got {modulus!r}')
        self.modulus = modulus

    def __str__(self):
        return f'Z/{self.modulus}'

    def __repr__(self):
        return f'ModularRing({self.modulus})'

    def __eq__(self, other):
        return isinstance(other, ModularRing) and other.modulus == self.modulus

    def __hash__(self):
        return hash(('Z/', self.modulus))

    def _canon(self, v):
        if not isinstance(v, int):
            raise TypeError(f'cannot interpret {v!r} as a residue')
        return v % self.modulus

    def _of_int(self, k):
        return k % self.modulus

    def _add(self, a, b):
        return (a + b) % self.modulus

    def _neg(self, a):
        return -a % self.modulus

    def _mul(self, a, b):
        return (a * b) % self.modulus

    def _pow(self, a, k):
        return pow(a, k, self.modulus)

    def _is_zero(self, a):
        return a == 0

    def _div_int(self, a, k):
        # k*y = a (mod m) has gcd(k, m) solutions when solvable; a unique
        # one exists exactly when k is a unit mod m.
        m = self.modulus
        if math.gcd(k, m) != 1:
            return None
        return a * pow(k % m, -1, m) % m

    def _to_json(self, a):
        return {'mod': self.modulus, 'val': str(a)}

    def _from_json(self, obj):
        if isinstance(obj, dict) and set(obj) == {'mod', 'val'}:
            if int(obj['mod']) != self.modulus:
                raise MismatchError(f'residue mod {obj["mod"]} where mod {self.modulus} expected')
            return int(obj['val']) % self.modulus
        if isinstance(obj, (str, int)):
            return int(obj) % self.modulus
        raise ValueError(f'bad residue encoding: {obj!r}')

    def _str(self, a):
        return str(a)

    def _sort_key(self, a):
        return (a,)

    def random_element(self, rng, **_):
        return self.of_int(rng.randrange(self.modulus))


class RationalRing(Ring):

    def __str__(self):
        return 'Q'

    def __repr__(self):
        return 'RationalRing()'

    def __eq__(self, other):
        return isinstance(other, RationalRing)

    def __hash__(self):
        return hash('Q')

    @property
    def is_q_algebra(self):
        return True

    def _canon(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        raise TypeError(f'cannot interpret {v!r} as a rational')

    def _of_int(self, k):
        return Fraction(k)

    def _add(self, a, b):
        return a + b

    def _neg(self, a):
        return -a

    def _mul(self, a, b):
        return a * b

    def _is_zero(self, a):
        return a == 0

    def _div_int(self, a, k):
        return a / k

    def _to_json(self, a):
        return {'num': str(a.numerator), 'den': str(a.denominator)}

    def _from_json(self, obj):
        if isinstance(obj, dict) and set(obj) == {'num', 'den'}:
            return Fraction(int(obj['num']), int(obj['den']))
        if isinstance(obj, (str, int)):
            return Fraction(int(obj))
        raise ValueError(f'bad rational encoding: {obj!r}')

    def _str(self, a):
        return str(a)

    def _sort_key(self, a):
        return (a.numerator, a.denominator)

    def random_element(self, rng, bound=9, **_):
        return self(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)))


class PolynomialRing(Ring):
    """Sparse multivariate polynomials over Z, Q, or Z/m.

    A value is a tuple of (exps, coef) pairs sorted by the exponent
    tuples, with coef a nonzero raw value of the base ring.
    """

    def __init__(self, base, names):
        if not isinstance(base, (IntegerRing, RationalRing, ModularRing)):
            raise ValueError(f'unsupported coefficient ring {base}')
        names = tuple(names)
        if not names or len(set(names)) != len(names) or not all(names):
            raise ValueError(f'variable names must be distinct and nonempty: {names!r}')
        self.base = base
        self.names = names

    def __str__(self):
        return f'poly:{self.base}[{",".join(self.names)}]'

    def __repr__(self):
        return f'PolynomialRing({self.base!r}, {self.names!r})'

    def __eq__(self, other):
        return (isinstance(other, PolynomialRing) and other.base == self.base
                and other.names == self.names)

    def __hash__(self):
        return hash(('poly', self.base, self.names))

    @property
    def is_q_algebra(self):
        return self.base.is_q_algebra

    def gen(self, name):
        """The variable `name` as an element."""
        i = self.names.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(self.names)))
        return RingElement(self, ((exps, self.base._of_int(1)),))

    def gens(self):
        return tuple(self.gen(v) for v in self.names)

    def _canon(self, v):
        terms = {}
        for exps, coef in v:
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(self.names) or any(e < 0 for e in exps):
                raise ValueError(f'bad exponent vector {exps!r}')
            coef = self.base._canon(coef) if not isinstance(coef, int) else self.base._of_int(coef)
            if exps in terms:
                coef = self.base._add(terms[exps], coef)
            terms[exps] = coef
        return tuple(sorted((e, c) for e, c in terms.items() if not self.base._is_zero(c)))

    def _of_int(self, k):
        c = self.base._of_int(k)
        if self.base._is_zero(c):
            return ()
        return (((0,) * len(self.names), c),)

    def _add(self, a, b):
        terms = dict(a)
        for exps, coef in b:
            if exps in terms:
                s = self.base._add(terms[exps], coef)
                if self.base._is_zero(s):
                    del terms[exps]
                else:
                    terms[exps] = s
            else:
                terms[exps] = coef
        return tuple(sorted(terms.items()))

    def _neg(self, a):
        return tuple((e, self.base._neg(c)) for e, c in a)

    def _mul(self, a, b):
        if not a or not b:
            return ()
        terms = {}
        for e1, c1 in a:
            for e2, c2 in b:
                exps = tuple(x + y for x, y in zip(e1, e2))
                c = self.base._mul(c1, c2)
                if exps in terms:
                    c = self.base._add(terms[exps], c)
                if self.base._is_zero(c):
                    terms.pop(exps, None)
                else:
                    terms[exps] = c
        return tuple(sorted(terms.items()))

    def _is_zero(self, a):
        return a == ()

    def _div_int(self, a, k):
        out = []
        for exps, coef in a:
            q = self.base._div_int(coef, k)
            if q is None:
                return None
            out.append((exps, q))
        return tuple(out)

    def _to_json(self, a):
        return {'vars': list(self.names),
                'terms': [{'exps': list(e), 'coef': self.base._to_json(c)} for e, c in a]}

    def _from_json(self, obj):
        if isinstance(obj, (str, int)):
            return self._of_int(int(obj))     # constant shorthand
        if isinstance(obj, dict) and 'terms' in obj:
            if 'vars' in obj and tuple(obj['vars']) != self.names:
                raise MismatchError(f'polynomial in {obj["vars"]} where {list(self.names)} expected')
            return self._canon((t['exps'], self.base._from_json(t['coef'])) for t in obj['terms'])
        raise ValueError(f'bad polynomial encoding: {obj!r}')

    def _monomial_str(self, exps, coef):
        factors = [f'{v}^{e}' if e > 1 else v
                   for v, e in zip(self.names, exps) if e > 0]
        if not factors:
            return self.base._str(coef)
        if coef == self.base._of_int(1):
            return '*'.join(factors)
        if coef == self.base._of_int(-1):
            return '-' + '*'.join(factors)
        return '*'.join([self.base._str(coef)] + factors)

    def _str(self, a):
        if not a:
            return '0'
        # leading term (largest exponent vector) first
        parts = [self._monomial_str(e, c) for e, c in reversed(a)]
        out = parts[0]
        for part in parts[1:]:
            out += ' - ' + part[1:] if part.startswith('-') else ' + ' + part
        return out

    def _sort_key(self, a):
        return tuple((e, self.base._sort_key(c)) for e, c in a)

    def random_element(self, rng, bound=9, terms=2, degree=2, **_):
        value = self.zero
        for _i in range(terms):
            exps = tuple(rng.randint(0, degree) for _ in self.names)
            coef = self.base.random_element(rng, bound=bound)
            mono = RingElement(self, ((exps, coef.value),)) if not coef.is_zero() else self.zero
            value = value + mono
        return value


class RingElement:
    """An immutable element of one of the supported rings."""

    __slots__ = ('ring', 'value')

    def __init__(self, ring, value):
        self.ring = ring
        self.value = value

    def __eq__(self, other):
        if isinstance(other, RingElement):
            return self.ring == other.ring and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ring._of_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, self.value))

    def __repr__(self):
        return self.ring._str(self.value)

    def is_zero(self):
        return self.ring._is_zero(self.value)

    def is_one(self):
        return self.value == self.ring._of_int(1)

    def _coerce(self, other):
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise MismatchError(f'mixed rings {self.ring} and {other.ring}')
            return other.value
        if isinstance(other, int):
            return self.ring._of_int(other)
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.value, v))

    __radd__ = __add__

    def __neg__(self):
        return RingElement(self.ring, self.ring._neg(self.value))

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._add(self.value, self.ring._neg(v)))

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return RingElement(self.ring, self.ring._mul(self.value, v))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f'exponent must be a nonnegative integer, got {k!r}')
        return RingElement(self.ring, self.ring._pow(self.value, k))


ZZ = IntegerRing()
QQ = RationalRing()


def Zmod(m):
    return ModularRing(m)


def ring_from_string(s):
    """Parse a ring spec: Z | Z/m | Q | poly:<base>[v1,v2,...]."""
    s = s.strip()
    if s == 'Z':
        return ZZ
    if s == 'Q':
        return QQ
    if s.startswith('Z/'):
        return ModularRing(int(s[2:]))
    if s.startswith('poly:') and s.endswith(']') and '[' in s:
        base_s, _, vars_s = s[5:-1].partition('[')
        base = ring_from_string(base_s)
        names = tuple(v.strip() for v in vars_s.split(','))
        return PolynomialRing(base, names)
    raise ValueError(f'cannot parse ring spec {s!r}')


def exact_div_by_integer(x, k):
    """The unique y with k*y = x, or raise DivisibilityFailure.

    Over Z and polynomial rings over Z this is coefficientwise
    divisibility; over Q it always succeeds; over Z/m it succeeds exactly
    when k is a unit mod m.
    """
    if k == 0:
        raise ValueError('division by zero integer')
    v = x.ring._div_int(x.value, k)
    if v is None:
        raise DivisibilityFailure(f'{x!r} is not divisible by {k} in {x.ring}')
    return RingElement(x.ring, v)


def _scalar_hom(base, target):
    """Map raw base-ring coefficients into `target`, or raise."""
    if isinstance(base, IntegerRing):
        return target._of_int
    if isinstance(base, RationalRing) and target.is_q_algebra:
        if isinstance(target, RationalRing):
            return lambda c: c
        return lambda c: target._div_int(target._of_int(c.numerator), c.denominator)
    raise UnsupportedRing(f'no canonical map of {base} coefficients into {target}')


def apply_base_hom(x, target, values=None):
    """Push x along a canonical ring map into `target`.

    Without `values`: the coefficientwise map (Z -> anything, Q -> a
    Q-algebra, Z[vars] -> R[vars] over such a map).  With `values` (a
    dict name -> element of target, or a sequence aligned with the
    variable list): polynomial evaluation.
    """
    ring = x.ring
    if values is not None:
        if not isinstance(ring, PolynomialRing):
            raise UnsupportedRing(f'cannot substitute into an element of {ring}')
        if not isinstance(values, dict):
            values = dict(zip(ring.names, values))
        args = [target(values[v]) for v in ring.names]
        hom = _scalar_hom(ring.base, target)
        acc = target.zero
        for exps, coef in x.value:
            term = RingElement(target, hom(coef))
            for arg, e in zip(args, exps):
                if e:
                    term = term * arg ** e
            acc = acc + term
        return acc

    if ring == target:
        return x
    if isinstance(ring, PolynomialRing):
        if not (isinstance(target, PolynomialRing) and target.names == ring.names):
            raise UnsupportedRing(f'no canonical map {ring} -> {target}')
        hom = _scalar_hom(ring.base, target.base)
        return target((e, hom(c)) for e, c in x.value)
    hom = _scalar_hom(ring, target)
    return RingElement(target, hom(x.value))


def element_to_json(x):
    return x.ring._to_json(x.value)


def element_from_json(ring, obj):
    return RingElement(ring, ring._from_json(obj))
