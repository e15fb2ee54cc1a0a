"""Exact scalar arithmetic: rationals, Laurent polynomials in q, integers mod m.

Every ring element used in the package is immutable and supports +, -, *,
==; there is no floating point anywhere.  Rationals are plain
``fractions.Fraction`` values.  Ring *descriptor* objects (``QQ``, ``LQ``,
``IntegersMod(m)``) carry the constants and unit tests that matrices need.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotAUnit

Rational = Fraction


def rational_to_str(a) -> str:
    return str(Fraction(a))


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)


# ---------------------------------------------------------------------------
# Laurent polynomials in one variable q over the rationals.

class LaurentPoly:
    """Finite sum of c_e * q**e with exact rational coefficients.

    Terms are kept as a dict {exponent: coefficient} with no zero
    coefficients stored.  Instances are immutable; a unit is exactly a
    single-term polynomial.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    clean[int(e)] = clean.get(int(e), Fraction(0)) + c
                    if not clean[int(e)]:
                        del clean[int(e)]
        object.__setattr__(self, "terms", dict(clean))

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: Fraction(c)})

    @staticmethod
    def gen() -> "LaurentPoly":
        return LaurentPoly({1: Fraction(1)})

    @staticmethod
    def monomial(e, c=1) -> "LaurentPoly":
        return LaurentPoly({e: Fraction(c)})

    def is_zero(self) -> bool:
        return not self.terms

    def is_unit(self) -> bool:
        return len(self.terms) == 1

    def _coerce(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for e, c in other.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return LaurentPoly(t)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return LaurentPoly(t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise NotAUnit("Laurent polynomial with %d terms is not a unit" % len(self.terms))
        ((e, c),) = self.terms.items()
        return LaurentPoly({-e: Fraction(1) / c})

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises if the quotient is not a Laurent polynomial."""
        if other.is_zero():
            raise ZeroDivisionError
        if self.is_zero():
            return LaurentPoly()
        # shift both to ordinary polynomials and long-divide
        lo_s = min(self.terms)
        lo_o = min(other.terms)
        num = {e - lo_s: c for e, c in self.terms.items()}
        den = {e - lo_o: c for e, c in other.terms.items()}
        dden = max(den)
        lead = den[dden]
        quot = {}
        while num:
            dnum = max(num)
            if dnum < dden:
                raise NotAUnit("not divisible")
            k = dnum - dden
            f = num[dnum] / lead
            quot[k] = f
            for e, c in den.items():
                num[e + k] = num.get(e + k, Fraction(0)) - f * c
                if not num[e + k]:
                    del num[e + k]
        return LaurentPoly({e + lo_s - lo_o: c for e, c in quot.items()})

    def evaluate(self, q0) -> Fraction:
        q0 = Fraction(q0)
        return sum((c * q0 ** e for e, c in self.terms.items()), Fraction(0))

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def to_json(self):
        return [[e, rational_to_str(c)] for e, c in sorted(self.terms.items())]

    @staticmethod
    def from_json(data) -> "LaurentPoly":
        return LaurentPoly({int(e): rational_from_str(c) for e, c in data})

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e, c in sorted(self.terms.items()):
            if e == 0:
                bits.append(str(c))
            elif e == 1:
                bits.append("%s*q" % c)
            else:
                bits.append("%s*q^%d" % (c, e))
        return " + ".join(bits)


# ---------------------------------------------------------------------------
# Integers modulo m.

@dataclass(frozen=True)
class ZmInt:
    """A residue in [0, m); operations only between equal moduli."""

    residue: int
    m: int

    def __post_init__(self):
        assert self.m >= 2
        object.__setattr__(self, "residue", self.residue % self.m)

    def _check(self, other):
        if isinstance(other, int):
            return ZmInt(other, self.m)
        assert isinstance(other, ZmInt) and other.m == self.m, "modulus mismatch"
        return other

    def __add__(self, other):
        other = self._check(other)
        return ZmInt(self.residue + other.residue, self.m)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._check(other)
        return ZmInt(self.residue - other.residue, self.m)

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        other = self._check(other)
        return ZmInt(self.residue * other.residue, self.m)

    __rmul__ = __mul__

    def __neg__(self):
        return ZmInt(-self.residue, self.m)

    def __bool__(self):
        return self.residue != 0

    def __repr__(self):
        return "%d (mod %d)" % (self.residue, self.m)

    def to_json(self):
        return self.residue


def mod_inverse(a: ZmInt) -> ZmInt:
    """Multiplicative inverse mod m; NotAUnit when gcd(residue, m) != 1."""
    g = math.gcd(a.residue, a.m)
    if g != 1:
        raise NotAUnit("%r has gcd %d with the modulus" % (a, g))
    return ZmInt(pow(a.residue, -1, a.m), a.m)


def unit_group(m: int) -> set:
    """All units of Z_m as ZmInt values; cardinality is Euler's totient."""
    assert m >= 2
    return {ZmInt(r, m) for r in range(m) if math.gcd(r, m) == 1}


def subgroup_generated(m: int, gens) -> set:
    """Subgroup of Z_m^x generated by the given residues."""
    gens = [g % m for g in gens]
    assert all(math.gcd(g, m) == 1 for g in gens)
    seen = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = (a * g) % m
                if b not in seen:
                    seen.add(b)
                    nxt.append(b)
        frontier = nxt
    return seen


# ---------------------------------------------------------------------------
# Ring descriptors used by the matrix layer.

class RationalField:
    name = "rational"
    is_field = True

    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, k):
        return Fraction(k)

    def is_unit(self, a):
        return a != 0

    def inv(self, a):
        if a == 0:
            raise NotAUnit("0 is not a unit")
        return Fraction(1) / a

    def to_json(self, a):
        return rational_to_str(a)

    def __repr__(self):
        return "QQ"


class LaurentRing:
    name = "laurent"
    is_field = False

    zero = LaurentPoly()
    one = LaurentPoly.const(1)

    def from_int(self, k):
        return LaurentPoly.const(k)

    def is_unit(self, a):
        return a.is_unit()

    def inv(self, a):
        return a.inverse()

    def to_json(self, a):
        return a.to_json()

    def __repr__(self):
        return "QQ[q,q^-1]"


class IntegersMod:
    is_field = False  # set per instance when m is prime

    def __init__(self, m: int):
        assert m >= 2
        self.m = m
        self.name = "zm:%d" % m
        self.zero = ZmInt(0, m)
        self.one = ZmInt(1, m)
        self.is_field = is_probable_prime(m)

    def from_int(self, k):
        return ZmInt(k, self.m)

    def is_unit(self, a):
        return math.gcd(a.residue, self.m) == 1

    def inv(self, a):
        return mod_inverse(a)

    def to_json(self, a):
        return a.residue

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.m == self.m

    def __hash__(self):
        return hash(("zm", self.m))

    def __repr__(self):
        return "Z_%d" % self.m


QQ = RationalField()
LQ = LaurentRing()


# ---------------------------------------------------------------------------
# Deterministic primality / prime sampling for the Z_p rank oracle.

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin; deterministic for n < 3.3e24 with the fixed base set."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
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


def random_prime_above_2_30(rng) -> int:
    """A random prime > 2**30, for use as a Monte Carlo rank modulus."""
    while True:
        n = rng.randrange(2 ** 30 + 1, 2 ** 31) | 1
        if is_probable_prime(n):
            return n
