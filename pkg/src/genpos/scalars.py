"""Exact coefficient arithmetic: arbitrary-precision rationals and prime fields."""

from fractions import Fraction


class FieldMismatchError(ValueError):
    pass


def is_prime(n):
    """Deterministic Miller-Rabin, valid far beyond 64-bit inputs."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
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


class FpElement:
    """Residue class modulo a prime; both operands of any operation must share p."""

    __slots__ = ("val", "p")

    def __init__(self, val, p):
        self.val = val % p
        self.p = p

    def _other(self, other):
        if isinstance(other, FpElement):
            if other.p != self.p:
                raise FieldMismatchError(
                    "mixed prime fields: p=%d vs p=%d" % (self.p, other.p))
            return other
        if isinstance(other, int):
            return FpElement(other, self.p)
        if isinstance(other, Fraction):
            raise FieldMismatchError("cannot mix rationals with GF(%d)" % self.p)
        return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FpElement(self.val + o.val, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FpElement(self.val - o.val, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FpElement(o.val - self.val, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return FpElement(self.val * o.val, self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElement(self.val * pow(o.val, -1, self.p), self.p)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o.__truediv__(self)

    def __neg__(self):
        return FpElement(-self.val, self.p)

    def __pow__(self, e):
        if e < 0 and self.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.p)
        return FpElement(pow(self.val, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.p == other.p and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.p))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d mod %d" % (self.val, self.p)


class RationalField:
    """The rationals; elements are fractions.Fraction."""

    p = None

    def __call__(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, FpElement):
            raise FieldMismatchError("cannot coerce GF(%d) element to Q" % x.p)
        raise TypeError("cannot coerce %r to Q" % (x,))

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def parse(self, s):
        s = s.strip()
        if "mod" in s:
            raise ValueError("prime-field scalar %r in a rational context" % s)
        return Fraction(s)

    def to_str(self, a):
        return str(a)

    def random(self, rng):
        return Fraction(rng.randrange(-50, 51), rng.randrange(1, 20))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "Q"


class PrimeField:
    """GF(p) for prime p."""

    def __init__(self, p):
        if not is_prime(p):
            raise ValueError("%d is not prime" % p)
        self.p = p

    def __call__(self, x):
        if isinstance(x, FpElement):
            if x.p != self.p:
                raise FieldMismatchError(
                    "element of GF(%d) used in GF(%d)" % (x.p, self.p))
            return x
        if isinstance(x, int):
            return FpElement(x, self.p)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise ZeroDivisionError("denominator divisible by p=%d" % self.p)
            return FpElement(x.numerator * pow(x.denominator, -1, self.p), self.p)
        if isinstance(x, str):
            return self.parse(x)
        raise TypeError("cannot coerce %r to GF(%d)" % (x, self.p))

    @property
    def zero(self):
        return FpElement(0, self.p)

    @property
    def one(self):
        return FpElement(1, self.p)

    def parse(self, s):
        s = s.strip()
        if "mod" in s:
            k, p = s.split("mod")
            if int(p) != self.p:
                raise ValueError("scalar %r does not live in GF(%d)" % (s, self.p))
            return FpElement(int(k), self.p)
        return self(Fraction(s))

    def to_str(self, a):
        return "%d mod %d" % (self(a).val, self.p)

    def random(self, rng):
        return FpElement(rng.randrange(self.p), self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


QQ = RationalField()


def field_of(a):
    """Field an element belongs to."""
    if isinstance(a, Fraction):
        return QQ
    if isinstance(a, FpElement):
        return PrimeField(a.p)
    raise TypeError("not a field element: %r" % (a,))


def _factor(n):
    out = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def multiplicative_generator(field):
    """Smallest generator of GF(p)^*."""
    p = field.p
    if p == 2:
        return FpElement(1, 2)
    facs = _factor(p - 1)
    g = 2
    while True:
        if all(pow(g, (p - 1) // q, p) != 1 for q in facs):
            return FpElement(g, p)
        g += 1


def roots_of_unity(field, d):
    """All d-th roots of unity, sorted canonically; errors when there are fewer than d."""
    if d < 1:
        raise ValueError("order must be positive")
    if isinstance(field, RationalField):
        if d == 1:
            return [Fraction(1)]
        if d == 2:
            return [Fraction(1), Fraction(-1)]
        raise ValueError("Q has no primitive %d-th roots of unity" % d)
    p = field.p
    if (p - 1) % d != 0:
        raise ValueError("GF(%d) has no %d-th roots of unity (d must divide p-1)" % (p, d))
    g = multiplicative_generator(field)
    zeta = g ** ((p - 1) // d)
    roots = set()
    x = field.one
    for _ in range(d):
        roots.add(x.val)
        x = x * zeta
    assert len(roots) == d
    assert all(pow(v, d, p) == 1 for v in roots)
    return [FpElement(v, p) for v in sorted(roots)]
