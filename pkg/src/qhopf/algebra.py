"""The coordinate *-Hopf algebra of the quantum SU(2) group.

Elements are finite sums of normal-ordered monomials a^i c^j c*^k with
the a-letters leftmost; i is signed (i < 0 encodes the starred a).  The
defining exchange relations

    ac = q ca,   ac* = q c*a,   cc* = c*c,
    a*a + c*c = 1,   aa* + q^2 cc* = 1

make this ordering a confluent rewriting target, and every basis
monomial is an eigenvector of the circle-grading, so the winding
decomposition is free.  Coefficients are RadScalar throughout; purely
rational elements simply carry radicand 1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, NamedTuple

from .scalars import (ONE, RAD_ONE, RAD_ZERO, ZERO, RadScalar, ScalarQ,
                      _coerce, _rcoerce)


class Monomial(NamedTuple):
    """a^i c^j c*^k;  i > 0 means a^i, i < 0 means (a*)^(-i)."""
    a: int
    c: int
    cs: int

    def winding(self) -> int:
        return self.cs - self.c - self.a

    def degree(self) -> int:
        return abs(self.a) + self.c + self.cs

    def letters(self):
        """Generator letters left to right: 'a', 'A' (= a*), 'c', 'C' (= c*)."""
        out = ["a"] * self.a if self.a > 0 else ["A"] * (-self.a)
        return out + ["c"] * self.c + ["C"] * self.cs


MONO_ONE = Monomial(0, 0, 0)

_LETTER_WINDING = {"a": -1, "A": 1, "c": -1, "C": 1}
_LETTER_RIGHT_WEIGHT = {"a": -1, "A": 1, "c": 1, "C": -1}


@lru_cache(maxsize=None)
def _a_block_product(i1: int, i2: int):
    """Normal form of a^{i1} a^{i2} as a tuple of (t, ScalarQ): sum of
    coeff * a^{i1+i2} c^t c*^t terms.  Signed powers, opposite signs expand
    through aa* = 1 - q^2 cc* and a*a = 1 - c*c."""
    if i1 == 0 or i2 == 0 or (i1 > 0) == (i2 > 0):
        return ((0, ONE),)
    if i1 > 0:
        # a^{i1} a*^{j} = (a^{i1-1} a*^{j-1}) (1 - q^{2j} cc*), j = -i2
        inner = _a_block_product(i1 - 1, i2 + 1)
        mult = -ScalarQ.q_power(-2 * i2)
    else:
        # a*^{j} a^{i} = (a*^{j-1} a^{i-1}) (1 - q^{-2(i-1)} c*c), i = i2
        inner = _a_block_product(i1 + 1, i2 - 1)
        mult = -ScalarQ.q_power(-2 * (i2 - 1))
    out: dict = {}
    for t, coeff in inner:
        out[t] = out.get(t, ZERO) + coeff
        out[t + 1] = out.get(t + 1, ZERO) + coeff * mult
    return tuple((t, c) for t, c in sorted(out.items()) if not c.is_zero())


def monomial_mul(m1: Monomial, m2: Monomial):
    """Product of two normal monomials: list of (Monomial, ScalarQ)."""
    # move m2's a-block through m1's c-block: each a-letter of weight w
    # crossing one c-letter picks q^{-w}... uniformly q^{-(j1+k1)*i2}
    twist = ScalarQ.q_power(-(m1.c + m1.cs) * m2.a)
    out = []
    for t, coeff in _a_block_product(m1.a, m2.a):
        mono = Monomial(m1.a + m2.a, m1.c + m2.c + t, m1.cs + m2.cs + t)
        out.append((mono, coeff * twist))
    return out


class AlgElem:
    """Finite RadScalar-linear combination of normal-ordered monomials."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            terms = {}
        if not _clean:
            terms = {m: c for m, c in terms.items() if not c.is_zero()}
        self.terms = terms

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "AlgElem":
        return AlgElem({}, _clean=True)

    @staticmethod
    def one() -> "AlgElem":
        return AlgElem({MONO_ONE: RAD_ONE}, _clean=True)

    @staticmethod
    def monomial(m: Monomial, coeff=RAD_ONE) -> "AlgElem":
        coeff = _rcoerce(coeff)
        if coeff.is_zero():
            return AlgElem.zero()
        return AlgElem({m: coeff}, _clean=True)

    @staticmethod
    def scalar(x) -> "AlgElem":
        return AlgElem.monomial(MONO_ONE, _rcoerce(x))

    @staticmethod
    def from_letters(word: Iterable[str], coeff=RAD_ONE) -> "AlgElem":
        """Normal form of an arbitrary generator word ('a','A','c','C')."""
        out = AlgElem.monomial(MONO_ONE, _rcoerce(coeff))
        for letter in word:
            out = out * _LETTER_ELEMS[letter]
        return out

    # -- basics ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, ScalarQ, RadScalar)):
            other = AlgElem.scalar(other)
        if not isinstance(other, AlgElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        if isinstance(other, (int, Fraction, ScalarQ, RadScalar)):
            other = AlgElem.scalar(other)
        if not isinstance(other, AlgElem):
            return NotImplemented
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(m, None)
            else:
                out[m] = s
        return AlgElem(out, _clean=True)

    __radd__ = __add__

    def __neg__(self):
        return AlgElem({m: -c for m, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, x) -> "AlgElem":
        x = _rcoerce(x)
        if x.is_zero():
            return AlgElem.zero()
        return AlgElem({m: c * x for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ScalarQ, RadScalar)):
            return self.scale(other)
        if not isinstance(other, AlgElem):
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                c12 = c1 * c2
                for mono, q in monomial_mul(m1, m2):
                    s = out.get(mono)
                    v = c12 * q
                    s = v if s is None else s + v
                    if s.is_zero():
                        out.pop(mono, None)
                    else:
                        out[mono] = s
        return AlgElem(out, _clean=True)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, ScalarQ, RadScalar)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k: int):
        out = AlgElem.one()
        for _ in range(k):
            out = out * self
        return out

    # -- structure maps ----------------------------------------------------
    def star(self) -> "AlgElem":
        """The *-involution; RadScalar coefficients are real, hence fixed."""
        out = {}
        for m, c in self.terms.items():
            # (a^i c^j c*^k)* = c^k c*^j a^{-i} -> q^{i(j+k)} a^{-i} c^k c*^j
            twist = ScalarQ.q_power(m.a * (m.c + m.cs))
            out[Monomial(-m.a, m.cs, m.c)] = c * twist
        return AlgElem(out, _clean=True)

    def counit(self) -> RadScalar:
        tot = RAD_ZERO
        for m, c in self.terms.items():
            if m.c == 0 and m.cs == 0:
                tot = tot + c
        return tot

    def antipode(self) -> "AlgElem":
        out = AlgElem.zero()
        for m, c in self.terms.items():
            word = list(reversed(m.letters()))
            elem = AlgElem.monomial(MONO_ONE, c)
            for letter in word:
                elem = elem * _ANTIPODE_LETTERS[letter]
            out = out + elem
        return out

    def coproduct(self) -> "TensorElem":
        out = TensorElem.zero()
        for m, c in self.terms.items():
            t = TensorElem.scalar(c)
            for letter in m.letters():
                t = t * _COPRODUCT_LETTERS[letter]
            out = out + t
        return out

    # -- grading and states --------------------------------------------------
    def winding_components(self) -> dict:
        """Decompose by circle charge: {n: component in the n-th module}."""
        out: dict = {}
        for m, c in self.terms.items():
            out.setdefault(m.winding(), {})[m] = c
        return {n: AlgElem(d, _clean=True) for n, d in sorted(out.items())}

    def winding(self) -> int:
        """Charge of a homogeneous element; raises if mixed or zero."""
        ws = {m.winding() for m in self.terms}
        if len(ws) != 1:
            raise ValueError(f"element is not winding-homogeneous: {sorted(ws)}")
        return ws.pop()

    def is_coinvariant(self) -> bool:
        return all(m.winding() == 0 for m in self.terms)

    def haar(self) -> RadScalar:
        """The invariant state: kills everything except powers of cc*."""
        tot = RAD_ZERO
        for m, c in self.terms.items():
            if m.a == 0 and m.c == m.cs:
                k = m.c
                geo = ZERO
                for j in range(k + 1):
                    geo = geo + ScalarQ.q_power(2 * j)
                tot = tot + c * geo.inv()
        return tot

    def evaluate(self, s0) -> dict:
        """Coefficients at s = s0 as {Monomial: Fraction}; rational only."""
        out = {}
        for m, coeff in self.terms.items():
            v = coeff.as_scalar().eval_at(s0)
            if v:
                out[m] = v
        return out

    # -- rendering -----------------------------------------------------------
    def __repr__(self):
        return f"AlgElem({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            letters = []
            if m.a > 0:
                letters.append("a" + (f"^{m.a}" if m.a > 1 else ""))
            elif m.a < 0:
                letters.append("a*" + (f"^{-m.a}" if m.a < -1 else ""))
            if m.c:
                letters.append("c" + (f"^{m.c}" if m.c > 1 else ""))
            if m.cs:
                letters.append("c*" + (f"^{m.cs}" if m.cs > 1 else ""))
            body = " ".join(letters) if letters else "1"
            parts.append(f"({c}) {body}")
        return " + ".join(parts)

    def to_json(self):
        """Canonical JSON form: sorted list of term records."""
        rows = []
        for m in sorted(self.terms):
            c = self.terms[m]
            rows.append({
                "a": m.a, "c": m.c, "cstar": m.cs,
                "coeff_num": c.rat.num_str(),
                "coeff_den": c.rat.den_str(),
                "radicand_num": c.radicand.num_str(),
                "radicand_den": c.radicand.den_str(),
            })
        return rows


# generator elements -------------------------------------------------------

GEN_A = AlgElem.monomial(Monomial(1, 0, 0))
GEN_AS = AlgElem.monomial(Monomial(-1, 0, 0))
GEN_C = AlgElem.monomial(Monomial(0, 1, 0))
GEN_CS = AlgElem.monomial(Monomial(0, 0, 1))
UNIT = AlgElem.one()

_LETTER_ELEMS = {"a": GEN_A, "A": GEN_AS, "c": GEN_C, "C": GEN_CS}

_Q = ScalarQ.q_power(1)
_QI = ScalarQ.q_power(-1)

_ANTIPODE_LETTERS = {
    "a": GEN_AS,
    "A": GEN_A,
    "c": GEN_C.scale(-_Q),
    "C": GEN_CS.scale(-_QI),
}


def normalize(word: Iterable[str], coeff=RAD_ONE) -> AlgElem:
    """Normal-order an arbitrary word in the generators.

    Letters: 'a', 'A' = a*, 'c', 'C' = c*.
    """
    return AlgElem.from_letters(word, coeff)


# ---------------------------------------------------------------------------
# rank-2 tensors (for the coproduct and universal forms)
# ---------------------------------------------------------------------------

class TensorElem:
    """Element of the algebra tensor square, dict {(m1, m2): RadScalar}."""

    __slots__ = ("terms",)

    def __init__(self, terms=None, _clean=False):
        if terms is None:
            terms = {}
        if not _clean:
            terms = {k: c for k, c in terms.items() if not c.is_zero()}
        self.terms = terms

    @staticmethod
    def zero() -> "TensorElem":
        return TensorElem({}, _clean=True)

    @staticmethod
    def scalar(c) -> "TensorElem":
        c = _rcoerce(c)
        if c.is_zero():
            return TensorElem.zero()
        return TensorElem({(MONO_ONE, MONO_ONE): c}, _clean=True)

    @staticmethod
    def of(x: AlgElem, y: AlgElem) -> "TensorElem":
        out: dict = {}
        for m1, c1 in x.terms.items():
            for m2, c2 in y.terms.items():
                c = c1 * c2
                if not c.is_zero():
                    out[(m1, m2)] = c
        return TensorElem(out, _clean=True)

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TensorElem(out, _clean=True)

    def __neg__(self):
        return TensorElem({k: -c for k, c in self.terms.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, ScalarQ, RadScalar)):
            x = _rcoerce(other)
            return TensorElem({k: c * x for k, c in self.terms.items()})
        out: dict = {}
        for (l1, r1), c1 in self.terms.items():
            for (l2, r2), c2 in other.terms.items():
                c12 = c1 * c2
                for ml, ql in monomial_mul(l1, l2):
                    for mr, qr in monomial_mul(r1, r2):
                        key = (ml, mr)
                        v = c12 * ql * qr
                        s = out.get(key)
                        s = v if s is None else s + v
                        if s.is_zero():
                            out.pop(key, None)
                        else:
                            out[key] = s
        return TensorElem(out, _clean=True)

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def apply_left(self, f):
        """Map AlgElem -> RadScalar over the left slot, collect the right."""
        out = AlgElem.zero()
        for (ml, mr), c in self.terms.items():
            v = f(AlgElem.monomial(ml))
            if not v.is_zero():
                out = out + AlgElem.monomial(mr, c * v)
        return out

    def apply_right(self, f):
        out = AlgElem.zero()
        for (ml, mr), c in self.terms.items():
            v = f(AlgElem.monomial(mr))
            if not v.is_zero():
                out = out + AlgElem.monomial(ml, c * v)
        return out

    def multiply_out(self) -> AlgElem:
        out = AlgElem.zero()
        for (ml, mr), c in self.terms.items():
            out = out + AlgElem.monomial(ml, c) * AlgElem.monomial(mr)
        return out

    def coproduct_left(self) -> dict:
        """(coproduct x id): rank-3 tensor as {(m1, m2, m3): RadScalar}."""
        out: dict = {}
        for (ml, mr), c in self.terms.items():
            for (m1, m2), c2 in AlgElem.monomial(ml).coproduct().terms.items():
                key = (m1, m2, mr)
                v = c * c2
                s = out.get(key)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def coproduct_right(self) -> dict:
        """(id x coproduct): rank-3 tensor as {(m1, m2, m3): RadScalar}."""
        out: dict = {}
        for (ml, mr), c in self.terms.items():
            for (m2, m3), c2 in AlgElem.monomial(mr).coproduct().terms.items():
                key = (ml, m2, m3)
                v = c * c2
                s = out.get(key)
                s = v if s is None else s + v
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for (ml, mr) in sorted(self.terms):
            c = self.terms[(ml, mr)]
            bits.append(f"({c})*[{AlgElem.monomial(ml)}]x[{AlgElem.monomial(mr)}]")
        return " + ".join(bits)


_COPRODUCT_LETTERS = {
    "a": TensorElem.of(GEN_A, GEN_A) - TensorElem.of(GEN_CS.scale(_Q), GEN_C),
    "c": TensorElem.of(GEN_C, GEN_A) + TensorElem.of(GEN_AS, GEN_C),
    "A": TensorElem.of(GEN_AS, GEN_AS) - TensorElem.of(GEN_C.scale(_Q), GEN_CS),
    "C": TensorElem.of(GEN_CS, GEN_AS) + TensorElem.of(GEN_A, GEN_CS),
}
