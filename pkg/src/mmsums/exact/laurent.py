"""Laurent polynomials in ``t`` with exact rational coefficients.

Coefficients are Python ints whenever possible and ``Fraction`` otherwise.
Storage is dense: a lowest exponent plus a tuple of coefficients whose first
and last entries are nonzero.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Mapping

_KRONECKER_MIN = 24


def _clean(c):
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    __slots__ = ("low", "coeffs")

    def __init__(self, terms: Mapping[int, object] | None = None):
        if not terms:
            self.low, self.coeffs = 0, ()
            return
        items = {e: c for e, c in terms.items() if c}
        if not items:
            self.low, self.coeffs = 0, ()
            return
        lo, hi = min(items), max(items)
        dense = [0] * (hi - lo + 1)
        for e, c in items.items():
            dense[e - lo] = _clean(c)
        self.low, self.coeffs = lo, tuple(dense)

    @classmethod
    def _raw(cls, low: int, coeffs) -> LaurentPoly:
        """Build from a dense list, trimming zeros at both ends."""
        start, end = 0, len(coeffs)
        while start < end and not coeffs[start]:
            start += 1
        while end > start and not coeffs[end - 1]:
            end -= 1
        obj = cls.__new__(cls)
        if start == end:
            obj.low, obj.coeffs = 0, ()
        else:
            obj.low = low + start
            obj.coeffs = tuple(_clean(c) for c in coeffs[start:end])
        return obj

    @classmethod
    def monomial(cls, exponent: int, coeff=1) -> LaurentPoly:
        return cls._raw(int(exponent), [coeff])

    @classmethod
    def constant(cls, value) -> LaurentPoly:
        return cls._raw(0, [value])

    @classmethod
    def binomial(cls, exponent: int, sign=1) -> LaurentPoly:
        """``1 - sign*t**exponent``."""
        exponent = int(exponent)
        if exponent == 0:
            return cls.constant(1 - sign)
        if exponent > 0:
            dense = [0] * (exponent + 1)
            dense[0], dense[-1] = 1, -sign
            return cls._raw(0, dense)
        dense = [0] * (-exponent + 1)
        dense[0], dense[-1] = -sign, 1
        return cls._raw(exponent, dense)

    @classmethod
    def geometric(cls, start: int, step: int, count: int) -> LaurentPoly:
        """``t**start + t**(start+step) + ... `` with ``count`` terms (step > 0)."""
        if count <= 0:
            return cls()
        dense = [0] * (step * (count - 1) + 1)
        for j in range(count):
            dense[step * j] = 1
        return cls._raw(start, dense)

    # basic queries

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def lowest_exponent(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no exponents")
        return self.low

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.high

    def leading_coefficient(self):
        return self.coeffs[-1] if self.coeffs else 0

    def trailing_coefficient(self):
        return self.coeffs[0] if self.coeffs else 0

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_constant(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def constant_value(self):
        if not self.coeffs:
            return 0
        if self.low == 0 and len(self.coeffs) == 1:
            return self.coeffs[0]
        raise ValueError(f"{self} is not constant")

    def terms(self) -> dict[int, object]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient(self, exponent: int):
        i = exponent - self.low
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return 0

    def is_integral(self) -> bool:
        return all(type(c) is int for c in self.coeffs)

    # arithmetic

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self == LaurentPoly.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __neg__(self):
        return LaurentPoly._raw(self.low, [-c for c in self.coeffs])

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        dense = [0] * (hi - lo + 1)
        off = self.low - lo
        for i, c in enumerate(self.coeffs):
            dense[off + i] = c
        off = other.low - lo
        for i, c in enumerate(other.coeffs):
            dense[off + i] += c
        return LaurentPoly._raw(lo, dense)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly()
            return LaurentPoly._raw(self.low, [c * other for c in self.coeffs])
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return LaurentPoly()
        return LaurentPoly._raw(self.low + other.low, _mul_dense(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if exponent < 0:
            raise ValueError("negative powers need a rational function")
        result = LaurentPoly.constant(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def shift(self, k: int) -> LaurentPoly:
        """Multiply by ``t**k``."""
        if not self.coeffs:
            return self
        return LaurentPoly._raw(self.low + k, self.coeffs)

    def scale(self, c) -> LaurentPoly:
        return self * c

    def substitute_power(self, k: int) -> LaurentPoly:
        """Replace ``t`` by ``t**k`` (k a nonzero integer)."""
        if k == 0:
            raise ValueError("t -> t**0 is not invertible")
        return LaurentPoly({k * e: c for e, c in self.terms().items()})

    def negate_variable(self) -> LaurentPoly:
        """Replace ``t`` by ``-t``."""
        return LaurentPoly._raw(
            self.low, [(-c if (self.low + i) % 2 else c) for i, c in enumerate(self.coeffs)]
        )

    def evaluate(self, t0):
        if not self.coeffs:
            return 0
        if isinstance(t0, (int, Fraction)):
            t0 = Fraction(t0)
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t0 + c
        if self.low:
            if t0 == 0:
                if self.low < 0:
                    raise ZeroDivisionError("negative power of t at t = 0")
                return 0
            acc = acc * t0**self.low
        return _clean(acc) if isinstance(acc, Fraction) else acc

    __call__ = evaluate

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.terms(), reverse=True):
            c = self.coefficient(e)
            parts.append(_term_str(c, e))
        text = " + ".join(parts)
        return text.replace("+ -", "- ")

    # division helpers

    def divmod_poly(self, divisor: LaurentPoly) -> tuple[LaurentPoly, LaurentPoly]:
        """Euclidean division treating both as polynomials after their shifts.

        Returns ``(q, r)`` with ``self == q*divisor + r`` and the remainder of
        lower span than ``divisor``.
        """
        if not divisor.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return LaurentPoly(), LaurentPoly()
        quo, rem = _divmod_dense(list(self.coeffs), divisor.coeffs)
        return (
            LaurentPoly._raw(self.low - divisor.low, quo),
            LaurentPoly._raw(self.low, rem),
        )

    def exact_div(self, divisor: LaurentPoly) -> LaurentPoly:
        quo, rem = self.divmod_poly(divisor)
        if rem.coeffs:
            raise ArithmeticError(f"{divisor} does not divide {self}")
        return quo

    def divides(self, other: LaurentPoly) -> bool:
        return not other.divmod_poly(self)[1].coeffs

    def content(self) -> Fraction:
        """Positive rational c such that self/c has coprime integer coefficients."""
        if not self.coeffs:
            return Fraction(0)
        den = 1
        for c in self.coeffs:
            if type(c) is Fraction:
                den = den * c.denominator // math.gcd(den, c.denominator)
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, int(c * den))
        return Fraction(g, den)

    def primitive(self) -> LaurentPoly:
        """Shifted to lowest exponent 0, content removed, positive leading term."""
        if not self.coeffs:
            return self
        c = self.content()
        if self.coeffs[-1] < 0:
            c = -c
        if c.denominator == 1 and self.is_integral():
            n = c.numerator
            return LaurentPoly._raw(0, [x // n for x in self.coeffs])
        return LaurentPoly._raw(0, [Fraction(x) / c for x in self.coeffs])

    def monic(self) -> LaurentPoly:
        lc = self.coeffs[-1]
        if lc == 1:
            return self
        inv = Fraction(1) / lc
        return LaurentPoly._raw(self.low, [c * inv for c in self.coeffs])


def _term_str(c, e):
    if e == 0:
        return str(c) if not isinstance(c, Fraction) else f"({c})"
    mono = "t" if e == 1 else f"t^{e}" if e > 0 else f"t^({e})"
    if c == 1:
        return mono
    if c == -1:
        return f"-{mono}"
    cs = f"({c})" if isinstance(c, Fraction) else str(c)
    return f"{cs}*{mono}"


def _coerce(x):
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, (int, Fraction)):
        return LaurentPoly.constant(x)
    return NotImplemented


def _mul_dense(a, b):
    if len(a) < len(b):
        a, b = b, a
    nz_b = [(j, c) for j, c in enumerate(b) if c]
    if len(nz_b) <= 4 or len(b) < _KRONECKER_MIN or not (_all_int(a) and _all_int(b)):
        out = [0] * (len(a) + len(b) - 1)
        for j, cb in nz_b:
            for i, ca in enumerate(a):
                if ca:
                    out[i + j] += ca * cb
        return out
    return _mul_kronecker(a, b)


def _all_int(seq):
    return all(type(c) is int for c in seq)


def _mul_kronecker(a, b):
    """Integer polynomial product through one big-integer multiplication."""
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    va = _pack(a, bits)
    vb = _pack(b, bits)
    return _unpack(va * vb, bits, len(a) + len(b) - 1)


def _pack(coeffs, bits):
    v = 0
    for c in reversed(coeffs):
        v = (v << bits) + c
    return v


def _unpack(v, bits, count):
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(count):
        c = v & mask
        if c >= half:
            c -= 1 << bits
        out.append(c)
        v = (v - c) >> bits
    return out


def _divmod_dense(num: list, den) -> tuple[list, list]:
    n, d = len(num), len(den)
    if n < d:
        return [0], num
    lc = den[-1]
    unit = lc == 1 or lc == -1
    quo = [0] * (n - d + 1)
    for k in range(n - d, -1, -1):
        c = num[k + d - 1]
        if not c:
            continue
        if unit:
            q = c * lc
        elif type(c) is int and type(lc) is int and c % lc == 0:
            q = c // lc
        else:
            q = Fraction(c) / lc
        quo[k] = q
        for j in range(d):
            if den[j]:
                num[k + j] -= q * den[j]
    return quo, num[: d - 1]


# gcd over Q[t]


def poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Monic gcd of the polynomial parts (monomial factors are units)."""
    if not a.coeffs:
        return b.shift(-b.low).monic() if b.coeffs else LaurentPoly.constant(1)
    if not b.coeffs:
        return a.shift(-a.low).monic()
    if len(a.coeffs) == 1 or len(b.coeffs) == 1:
        return LaurentPoly.constant(1)
    pa, pb = a.primitive(), b.primitive()
    g = _heuristic_gcd(list(pa.coeffs), list(pb.coeffs))
    if g is None:
        g = _prs_gcd(list(pa.coeffs), list(pb.coeffs))
    return LaurentPoly._raw(0, g).monic()


def _max_norm(c):
    return max(abs(x) for x in c)


def _eval_int(c, xi):
    v = 0
    for x in reversed(c):
        v = v * xi + x
    return v


def _interpolate(h, xi):
    """Recover symmetric base-xi digits."""
    out = []
    while h:
        g = h % xi
        if g > xi // 2:
            g -= xi
        out.append(g)
        h = (h - g) // xi
    return out


def _primitive_list(c):
    g = 0
    for x in c:
        g = math.gcd(g, x)
    if c[-1] < 0:
        g = -g
    return [x // g for x in c]


def _divides_int(d, f):
    if len(d) > len(f):
        return False
    if d[0] and f[0] % d[0]:
        return False
    _, rem = _divmod_dense(list(f), d)
    return not any(rem)


def _heuristic_gcd(f, g):
    xi = 2 * min(_max_norm(f), _max_norm(g)) + 29
    for _ in range(6):
        fx, gx = _eval_int(f, xi), _eval_int(g, xi)
        if fx and gx:
            h = math.gcd(fx, gx)
            cand = _interpolate(h, xi)
            if cand:
                cand = _primitive_list(cand)
                if _divides_int(cand, f) and _divides_int(cand, g):
                    return cand
        xi = xi * 73794 // 27011 + 1
    return None


def _prs_gcd(f, g):
    if len(f) < len(g):
        f, g = g, f
    f, g = _primitive_list(f), _primitive_list(g)
    while any(g):
        d = len(f) - len(g) + 1
        lc = g[-1]
        scaled = [x * lc**d for x in f]
        _, rem = _divmod_dense(scaled, g)
        while rem and not rem[-1]:
            rem.pop()
        f, g = g, (_primitive_list([int(x) for x in rem]) if rem else [])
        if not g:
            break
    return f


def lcm_int(values: Iterable[int]) -> int:
    out = 1
    for v in values:
        out = out * v // math.gcd(out, v)
    return out
