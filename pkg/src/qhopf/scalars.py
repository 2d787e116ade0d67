"""Exact arithmetic over Q(s) with s = q^(1/2), plus formal square roots.

Every coefficient in the package lives here.  A ScalarQ is a rational
function in s stored gcd-reduced with monic denominator, so equality is
decidable and structural.  A RadScalar adjoins a single formal square
root whose radicand is kept square-free; that is exactly the radical
structure the line-bundle kets and projectors need to close under
multiplication.

Polynomials are sparse dicts {exponent: Fraction}.  The gcd runs a
primitive polynomial remainder sequence over the integers to keep
coefficient growth under control.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

Poly = dict  # {int exponent >= 0: Fraction}, no zero values stored

_F0 = Fraction(0)
_F1 = Fraction(1)


# ---------------------------------------------------------------------------
# sparse polynomial helpers (internal)
# ---------------------------------------------------------------------------

def _pzero() -> Poly:
    return {}


def _pconst(c) -> Poly:
    c = Fraction(c)
    return {0: c} if c else {}


def _pmono(c, e: int) -> Poly:
    c = Fraction(c)
    return {e: c} if c else {}


def _padd(a: Poly, b: Poly) -> Poly:
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _F0) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def _pneg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) == 1:
        (ea, ca), = a.items()
        return {ea + eb: ca * cb for eb, cb in b.items()}
    if len(b) == 1:
        (eb, cb), = b.items()
        return {ea + eb: ca * cb for ea, ca in a.items()}
    out: Poly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            s = out.get(e, _F0) + ca * cb
            if s:
                out[e] = s
            else:
                out.pop(e, None)
    return out


def _pscale(a: Poly, c) -> Poly:
    c = Fraction(c)
    if not c:
        return {}
    return {e: v * c for e, v in a.items()}


def _pdeg(a: Poly) -> int:
    return max(a) if a else -1


def _plead(a: Poly) -> Fraction:
    return a[max(a)] if a else _F0


def _pval(a: Poly) -> int:
    """Lowest exponent present (valuation); -1 for the zero polynomial."""
    return min(a) if a else -1


def _pdivmod(a: Poly, b: Poly):
    """Exact euclidean division over Q[s]."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q: Poly = {}
    r = dict(a)
    db, lb = _pdeg(b), _plead(b)
    while r and _pdeg(r) >= db:
        e = _pdeg(r) - db
        c = _plead(r) / lb
        q[e] = q.get(e, _F0) + c
        for eb, cb in b.items():
            ee = eb + e
            s = r.get(ee, _F0) - cb * c
            if s:
                r[ee] = s
            else:
                r.pop(ee, None)
    return q, r


def _pint(a: Poly):
    """Scale to integer coefficients, primitive, positive lead; return dict {e: int}."""
    if not a:
        return {}, _F1
    lcm = 1
    for c in a.values():
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    ints = {e: int(c * lcm) for e, c in a.items()}
    g = 0
    for v in ints.values():
        g = math.gcd(g, v)
    if _plead(a) < 0:
        g = -g
    return {e: v // g for e, v in ints.items()}, Fraction(g, lcm)


def _ipseudo_rem(a, b):
    """Pseudo remainder of integer polys: lead(b)^(da-db+1) * a mod b."""
    da, db = _pdeg(a), _pdeg(b)
    lb = b[db]
    r = dict(a)
    while r and _pdeg(r) >= db:
        dr = _pdeg(r)
        lr = r[dr]
        r = {e: v * lb for e, v in r.items()}
        for eb, cb in b.items():
            e = eb + dr - db
            s = r.get(e, 0) - cb * lr
            if s:
                r[e] = s
            else:
                r.pop(e, None)
    return r


def _iprimitive(a):
    g = 0
    for v in a.values():
        g = math.gcd(g, v)
    if not g:
        return a
    if a[max(a)] < 0:
        g = -g
    return {e: v // g for e, v in a.items()}


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd over Q[s] via a primitive PRS on integer images."""
    if not a:
        return _pmonic(b)
    if not b:
        return _pmonic(a)
    x, _ = _pint(a)
    y, _ = _pint(b)
    if _pdeg(x) < _pdeg(y):
        x, y = y, x
    while y:
        r = _iprimitive(_ipseudo_rem(x, y))
        x, y = y, r
    return _pmonic({e: Fraction(v) for e, v in x.items()})


def _pmonic(a: Poly) -> Poly:
    if not a:
        return {}
    l = _plead(a)
    if l == 1:
        return dict(a)
    return {e: c / l for e, c in a.items()}


def _peval(a: Poly, x: Fraction) -> Fraction:
    tot = _F0
    for e, c in a.items():
        tot += c * x ** e
    return tot


def _pderiv(a: Poly) -> Poly:
    return {e - 1: c * e for e, c in a.items() if e}


def _pstr(a: Poly) -> str:
    """Render a (Laurent) polynomial in s as a string in q = s^2."""
    if not a:
        return "0"
    parts = []
    for e in sorted(a, reverse=True):
        c = a[e]
        if e == 0:
            parts.append(str(c))
            continue
        if c == 1:
            coeff = ""
        elif c == -1:
            coeff = "-"
        else:
            coeff = f"{c}*"
        if e == 2:
            parts.append(f"{coeff}q")
        elif e % 2 == 0:
            parts.append(f"{coeff}q^{e // 2}")
        else:
            parts.append(f"{coeff}q^({e}/2)")
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


def _int_sqrt_part(n: int):
    """n = square * rest with rest square-free; return (sqrt(square), rest)."""
    if n == 0:
        return 0, 0
    root, rest, d = 1, 1, 2
    m = n
    while d * d <= m:
        if m % d == 0:
            k = 0
            while m % d == 0:
                m //= d
                k += 1
            root *= d ** (k // 2)
            if k % 2:
                rest *= d
        d += 1 if d == 2 else 2
    return root, rest * m


# ---------------------------------------------------------------------------
# ScalarQ
# ---------------------------------------------------------------------------

class ScalarQ:
    """A rational function in s = q^(1/2), gcd-reduced, monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, _reduced=False):
        if isinstance(num, (int, Fraction)):
            num = _pconst(num)
        if den is None:
            den = {0: _F1}
        elif isinstance(den, (int, Fraction)):
            den = _pconst(den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not _reduced:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    @staticmethod
    def _reduce(num: Poly, den: Poly):
        if not num:
            return {}, {0: _F1}
        g = _pgcd(num, den)
        if _pdeg(g) > 0:
            num, _ = _pdivmod(num, g)
            den, _ = _pdivmod(den, g)
        l = _plead(den)
        if l != 1:
            num = {e: c / l for e, c in num.items()}
            den = {e: c / l for e, c in den.items()}
        return num, den

    # -- constructors ------------------------------------------------------
    @staticmethod
    def from_fraction(c) -> "ScalarQ":
        return ScalarQ(_pconst(c), None, _reduced=True)

    @staticmethod
    def s_power(k: int) -> "ScalarQ":
        """s^k for any integer k (q^(k/2))."""
        if k >= 0:
            return ScalarQ(_pmono(1, k), None, _reduced=True)
        return ScalarQ(_pconst(1), _pmono(1, -k), _reduced=True)

    @staticmethod
    def q_power(k: int) -> "ScalarQ":
        return ScalarQ.s_power(2 * k)

    # -- predicates --------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_one(self) -> bool:
        return self.num == {0: _F1} and self.den == {0: _F1}

    def is_rational(self) -> bool:
        return _pdeg(self.num) <= 0 and _pdeg(self.den) <= 0

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            return ScalarQ(_padd(self.num, other.num), dict(self.den))
        num = _padd(_pmul(self.num, other.den), _pmul(other.num, self.den))
        return ScalarQ(num, _pmul(self.den, other.den))

    __radd__ = __add__

    def __neg__(self):
        return ScalarQ(_pneg(self.num), dict(self.den), _reduced=True)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self.num or not other.num:
            return ZERO
        return ScalarQ(_pmul(self.num, other.num), _pmul(self.den, other.den))

    __rmul__ = __mul__

    def inv(self) -> "ScalarQ":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        return ScalarQ(dict(self.den), dict(self.num))

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other):
        return _coerce(other) * self.inv()

    def __pow__(self, k: int):
        if k == 0:
            return ONE
        if k < 0:
            return self.inv() ** (-k)
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.num.items()),
                               frozenset(self.den.items())))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- evaluation --------------------------------------------------------
    def eval_at(self, s0) -> Fraction:
        """Exact value at s = s0; raises on a genuine pole."""
        s0 = Fraction(s0)
        d = _peval(self.den, s0)
        if d == 0:
            raise ZeroDivisionError(f"pole at s = {s0}")
        return _peval(self.num, s0) / d

    def limit_at_one(self) -> Fraction:
        """Value at s = 1; removable singularities are already cancelled."""
        d = _peval(self.den, Fraction(1))
        if d == 0:
            raise ZeroDivisionError("pole at s = 1")
        return _peval(self.num, Fraction(1)) / d

    # -- rendering ---------------------------------------------------------
    def __repr__(self):
        return f"ScalarQ({self})"

    def __str__(self):
        if len(self.den) == 1:
            # denominator s^k: fold into Laurent exponents
            (ed, cd), = self.den.items()
            shifted = {e - ed: c / cd for e, c in self.num.items()}
            return _pstr(shifted)
        return f"({_pstr(self.num)})/({_pstr(self.den)})"

    def num_str(self) -> str:
        return _pstr(self.num)

    def den_str(self) -> str:
        return _pstr(self.den)


def _coerce(x):
    if isinstance(x, ScalarQ):
        return x
    if isinstance(x, (int, Fraction)):
        return ScalarQ.from_fraction(x)
    return NotImplemented


ZERO = ScalarQ.from_fraction(0)
ONE = ScalarQ.from_fraction(1)


# ---------------------------------------------------------------------------
# q-numbers
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def qnum2(x2: int) -> ScalarQ:
    """The q-number [x] for x = x2/2: (q^x - q^-x)/(q - q^-1).

    Half-integers are stored doubled so every index stays integral.
    """
    num = ScalarQ.s_power(x2) - ScalarQ.s_power(-x2)
    den = ScalarQ.s_power(2) - ScalarQ.s_power(-2)
    return num / den


def qnum(x: int) -> ScalarQ:
    """[x] for integer x; always a Laurent polynomial in q."""
    return qnum2(2 * x)


# ---------------------------------------------------------------------------
# square-free machinery and RadScalar
# ---------------------------------------------------------------------------

def _monic_sqsplit(p: Poly):
    """Monic p = A^2 * B with A, B monic and B square-free (over Q[s])."""
    if _pdeg(p) <= 0:
        return _pconst(1), _pconst(1)
    w = _pgcd(p, _pderiv(p))
    if _pdeg(w) <= 0:
        return _pconst(1), dict(p)
    s, r = _pdivmod(p, w)
    assert not r
    aw, bw = _monic_sqsplit(w)
    b, r = _pdivmod(s, bw)
    assert not r
    return _pmonic(_pmul(aw, bw)), _pmonic(b)


def square_free_split(p: Poly):
    """p = extracted^2 * radical with radical square-free; both returned.

    The polynomial square part comes from gcd(p, p'); the square part of
    the numeric content from integer factorisation.  The radical comes
    back as an integer polynomial with square-free content, so repeated
    normalisation is a fixed point.
    """
    if not p:
        return _pconst(1), {}
    ip, scale = _pint(p)  # p = scale * ip, ip primitive, positive lead
    lead = Fraction(ip[_pdeg(ip)])
    monic = {e: Fraction(v) / lead for e, v in ip.items()}
    a, b = _monic_sqsplit(monic)  # p = scale*lead * a^2 * b
    bi, mu = _pint(b)
    gamma = scale * lead * mu  # p = gamma * a^2 * bi
    sign = 1 if gamma >= 0 else -1
    num_root, num_rest = _int_sqrt_part(abs(gamma.numerator))
    den_root, den_rest = _int_sqrt_part(gamma.denominator)
    # sqrt(gamma) = (num_root/(den_root*den_rest)) * sqrt(sign*num_rest*den_rest)
    extracted = _pscale(a, Fraction(num_root, den_root * den_rest))
    radical = _pscale({e: Fraction(v) for e, v in bi.items()},
                      sign * num_rest * den_rest)
    return extracted, radical


class RadScalar:
    """rational * sqrt(radicand), radicand square-free, sqrt(1) implicit.

    Zero is canonically (0, 1).  Addition requires compatible radicands:
    the algebraic identities this package verifies always pair radicals
    up, so an incompatible sum signals a genuine bug and raises.
    """

    __slots__ = ("rat", "radicand")

    def __init__(self, rat: ScalarQ, radicand: ScalarQ = ONE, _normalized=False):
        if not isinstance(rat, ScalarQ):
            rat = _coerce(rat)
        if not isinstance(radicand, ScalarQ):
            radicand = _coerce(radicand)
        if not _normalized:
            rat, radicand = self._normalize(rat, radicand)
        self.rat = rat
        self.radicand = radicand

    @staticmethod
    def _normalize(rat: ScalarQ, radicand: ScalarQ):
        if rat.is_zero() or radicand.is_zero():
            if radicand.is_zero():
                return ZERO, ONE
            return ZERO, ONE
        if radicand.is_one():
            return rat, ONE
        # sqrt(N/D) = (1/D) sqrt(N*D)
        nd = _pmul(radicand.num, radicand.den)
        extracted, radical = square_free_split(nd)
        scale = ScalarQ(extracted, dict(radicand.den))
        rad = ScalarQ(radical, None) if radical else ZERO
        return rat * scale, (rad if not rad.is_one() else ONE)

    @staticmethod
    def from_scalar(x) -> "RadScalar":
        x = _coerce(x)
        return RadScalar(x, ONE, _normalized=True)

    @staticmethod
    def sqrt(radicand: ScalarQ) -> "RadScalar":
        return RadScalar(ONE, radicand)

    def is_zero(self) -> bool:
        return self.rat.is_zero()

    def is_rational(self) -> bool:
        return self.radicand.is_one()

    def as_scalar(self) -> ScalarQ:
        if not self.radicand.is_one():
            raise ValueError(f"not a rational element: sqrt({self.radicand})")
        return self.rat

    def __add__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        if self.radicand != other.radicand:
            raise ValueError(
                f"incompatible radicands: sqrt({self.radicand}) vs sqrt({other.radicand})")
        return RadScalar(self.rat + other.rat, self.radicand)

    __radd__ = __add__

    def __neg__(self):
        return RadScalar(-self.rat, self.radicand, _normalized=True)

    def __sub__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return _rcoerce(other) - self

    def __mul__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RAD_ZERO
        rat = self.rat * other.rat
        if self.radicand == other.radicand:
            return RadScalar(rat * self.radicand, ONE, _normalized=True)
        return RadScalar(rat, self.radicand * other.radicand)

    __rmul__ = __mul__

    def inv(self) -> "RadScalar":
        # 1/(r sqrt(p)) = (1/(r p)) sqrt(p)
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RadScalar((self.rat * self.radicand).inv(), self.radicand,
                         _normalized=True)

    def __truediv__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inv()

    def __eq__(self, other):
        other = _rcoerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.rat == other.rat and self.radicand == other.radicand

    def __hash__(self):
        return hash((self.rat, self.radicand))

    def __bool__(self):
        return not self.is_zero()

    def eval_at(self, s0) -> float:
        v = self.rat.eval_at(s0)
        if self.radicand.is_one():
            return Fraction(v)
        r = self.radicand.eval_at(s0)
        return float(v) * math.sqrt(float(r))

    def __repr__(self):
        if self.radicand.is_one():
            return f"RadScalar({self.rat})"
        return f"RadScalar({self.rat} * sqrt({self.radicand}))"

    def __str__(self):
        if self.radicand.is_one():
            return str(self.rat)
        return f"({self.rat})*sqrt({self.radicand})"


def _rcoerce(x):
    if isinstance(x, RadScalar):
        return x
    if isinstance(x, (int, Fraction, ScalarQ)):
        return RadScalar.from_scalar(x)
    return NotImplemented


RAD_ZERO = RadScalar.from_scalar(0)
RAD_ONE = RadScalar.from_scalar(1)


def rad_mul(a: RadScalar, b: RadScalar) -> RadScalar:
    """Product of radical scalars with square-free renormalisation."""
    return a * b
