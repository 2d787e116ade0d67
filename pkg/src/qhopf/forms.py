"""The 3D left-covariant exterior algebra on the quantum group.

A Form carries one algebra coefficient per left-invariant basis form,
written on the left:

    degree 0:  1
    degree 1:  w-, w+, wz
    degree 2:  w-^w+, w+^wz, wz^w-      (the Hodge-friendly basis)
    degree 3:  w-^w+^wz

Products of basis one-forms reduce through the braided exterior
relations

    w-^w+ + q^-2 w+^w- = 0,   wz^w- + q^4 w-^wz = 0,
    wz^w+ + q^-4 w+^wz = 0,   squares = 0,

and an algebra factor moves left past a basis form with the bimodule
weight q^n per +/- letter and q^2n per z letter on its charge-n part.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .actions import act_left
from .algebra import AlgElem, Monomial
from .scalars import ONE, RadScalar, ScalarQ

_Q = ScalarQ.q_power(1)

#: component keys in degree order
KEY0 = "1"
KEYS1 = ("m", "p", "z")
KEYS2 = ("mp", "pz", "zm")
KEY3 = "top"
ALL_KEYS = (KEY0,) + KEYS1 + KEYS2 + (KEY3,)

_KEY_DEGREE = {"1": 0, "m": 1, "p": 1, "z": 1,
               "mp": 2, "pz": 2, "zm": 2, "top": 3}

#: bimodule weight: w * x = q^(weight * n) x * w on the charge-n part
_KEY_WEIGHT = {"1": 0, "m": 1, "p": 1, "z": 2,
               "mp": 2, "pz": 3, "zm": 3, "top": 4}

#: letters making up each basis symbol
_KEY_LETTERS = {"1": (), "m": ("m",), "p": ("p",), "z": ("z",),
                "mp": ("m", "p"), "pz": ("p", "z"), "zm": ("z", "m"),
                "top": ("m", "p", "z")}

#: circle charge of each basis symbol under the right coaction
_KEY_CHARGE = {"1": 0, "m": -2, "p": 2, "z": 0,
               "mp": 0, "pz": 2, "zm": -2, "top": 0}

_LETTER_ORDER = {"m": 0, "p": 1, "z": 2}
_LETTER_WEIGHT = {"m": 1, "p": 1, "z": 2}

# braiding: swapping adjacent xy -> coeff * yx for x after y in the order
_SWAP = {
    ("p", "m"): -_Q ** 2,          # w+^w- = -q^2 w-^w+
    ("z", "m"): -_Q ** 4,          # wz^w- = -q^4 w-^wz
    ("z", "p"): -(ScalarQ.q_power(-4)),  # wz^w+ = -q^-4 w+^wz
}

# normal-ordered words -> canonical component key and conversion factor
_ORDERED_TO_KEY = {
    (): ("1", ONE),
    ("m",): ("m", ONE), ("p",): ("p", ONE), ("z",): ("z", ONE),
    ("m", "p"): ("mp", ONE),
    ("p", "z"): ("pz", ONE),
    ("m", "z"): ("zm", -(ScalarQ.q_power(-4))),  # w-^wz = -q^-4 wz^w-
    ("m", "p", "z"): ("top", ONE),
}


@lru_cache(maxsize=None)
def reduce_word(word):
    """Reduce a tuple of basis letters to (coeff, canonical key) or None."""
    word = list(word)
    coeff = ONE
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            if x == y:
                return None
            if _LETTER_ORDER[x] > _LETTER_ORDER[y]:
                word[i], word[i + 1] = y, x
                coeff = coeff * _SWAP[(x, y)]
                changed = True
                break
    key, conv = _ORDERED_TO_KEY[tuple(word)]
    return coeff * conv, key


def _twist(x: AlgElem, weight: int) -> AlgElem:
    """Sum over charge parts: q^(weight*n) x_n (commuting x past a form)."""
    if weight == 0 or x.is_zero():
        return x
    out = AlgElem.zero()
    for m, c in x.terms.items():
        out = out + AlgElem.monomial(m, c * ScalarQ.s_power(2 * weight * m.winding()))
    return out


# quantum vector fields ------------------------------------------------------

_XZ_SCALE = (ScalarQ.from_fraction(1) - ScalarQ.q_power(-2)).inv()


def x_plus(x: AlgElem) -> AlgElem:
    """q^(1/2) E K acting from the left."""
    return act_left("E", act_left("K", x)).scale(ScalarQ.s_power(1))


def x_minus(x: AlgElem) -> AlgElem:
    """q^(-1/2) F K acting from the left."""
    return act_left("F", act_left("K", x)).scale(ScalarQ.s_power(-1))


def x_z(x: AlgElem) -> AlgElem:
    """(1 - K^4)/(1 - q^-2): scalar -q^(1+n)[n] on the charge-n part."""
    k4 = act_left("K", act_left("K", act_left("K", act_left("K", x))))
    return (x - k4).scale(_XZ_SCALE)


_XZ_SCALE_num = _XZ_SCALE  # kept for clarity in d()


class Form:
    """An inhomogeneous element of the exterior algebra, left coefficients."""

    __slots__ = ("comp",)

    def __init__(self, comp=None, _clean=False):
        if comp is None:
            comp = {}
        if not _clean:
            comp = {k: v for k, v in comp.items() if not v.is_zero()}
        self.comp = comp

    # -- constructors ------------------------------------------------------
    @staticmethod
    def zero() -> "Form":
        return Form({}, _clean=True)

    @staticmethod
    def of(key: str, coeff: AlgElem) -> "Form":
        if coeff.is_zero():
            return Form.zero()
        return Form({key: coeff}, _clean=True)

    @staticmethod
    def from_algebra(x: AlgElem) -> "Form":
        return Form.of("1", x)

    @staticmethod
    def basis(key: str) -> "Form":
        return Form.of(key, AlgElem.one())

    def get(self, key: str) -> AlgElem:
        return self.comp.get(key, AlgElem.zero())

    # -- ring structure ----------------------------------------------------
    def __add__(self, other):
        out = dict(self.comp)
        for k, v in other.comp.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return Form(out, _clean=True)

    def __neg__(self):
        return Form({k: -v for k, v in self.comp.items()}, _clean=True)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, x) -> "Form":
        out = {k: v.scale(x) for k, v in self.comp.items()}
        return Form(out)

    def left_mul(self, x: AlgElem) -> "Form":
        return Form({k: x * v for k, v in self.comp.items()})

    def right_mul(self, x: AlgElem) -> "Form":
        """Multiply by an algebra element on the right, commuting it left."""
        return Form({k: v * _twist(x, _KEY_WEIGHT[k]) for k, v in self.comp.items()})

    def wedge(self, other: "Form") -> "Form":
        out = Form.zero()
        for k1, v1 in self.comp.items():
            for k2, v2 in other.comp.items():
                if _KEY_DEGREE[k1] + _KEY_DEGREE[k2] > 3:
                    raise ValueError("wedge exceeds the top degree")
                red = reduce_word(_KEY_LETTERS[k1] + _KEY_LETTERS[k2])
                if red is None:
                    continue
                coeff, key = red
                term = v1 * _twist(v2, _KEY_WEIGHT[k1])
                out = out + Form.of(key, term.scale(coeff))
        return out

    def __eq__(self, other):
        if not isinstance(other, Form):
            return NotImplemented
        return self.comp == other.comp

    def __hash__(self):
        return hash(frozenset(self.comp.items()))

    def is_zero(self) -> bool:
        return not self.comp

    # -- grading helpers ----------------------------------------------------
    def degrees(self):
        return sorted({_KEY_DEGREE[k] for k in self.comp})

    def degree(self) -> int:
        ds = self.degrees()
        if not ds:
            return 0
        if len(ds) > 1:
            raise ValueError(f"inhomogeneous form of degrees {ds}")
        return ds[0]

    def component(self, degree: int) -> "Form":
        return Form({k: v for k, v in self.comp.items()
                     if _KEY_DEGREE[k] == degree}, _clean=True)

    def is_horizontal(self) -> bool:
        return all(k not in ("z", "pz", "zm", "top") for k in self.comp)

    # -- calculus -----------------------------------------------------------
    def d(self) -> "Form":
        out = Form.zero()
        for k, v in self.comp.items():
            deg = _KEY_DEGREE[k]
            if deg == 3:
                continue
            dv = Form({"p": x_plus(v), "m": x_minus(v), "z": x_z(v)})
            out = out + dv.wedge(Form.basis(k))
            if deg == 1:
                out = out + Form.from_algebra(v).wedge(_D_BASIS1[k])
            # basis 2-forms are closed, nothing extra in degree 2
        return out

    def star_conj(self) -> "Form":
        """The graded *-involution (antilinear; coefficients are real)."""
        out = Form.zero()
        for k, v in self.comp.items():
            sign, key = _STAR_BASIS[k]
            out = out + Form.of(key, AlgElem.one().scale(sign)).right_mul(v.star())
        return out

    def coaction_charges(self) -> dict:
        """Split by total circle charge k: the part coacting with z^k."""
        out: dict = {}
        for key, v in self.comp.items():
            base = _KEY_CHARGE[key]
            for n, part in v.winding_components().items():
                charge = base - n
                cur = out.get(charge, Form.zero())
                out[charge] = cur + Form.of(key, part)
        return dict(sorted(out.items()))

    def charge(self) -> int:
        ch = self.coaction_charges()
        if not ch:
            return 0
        if len(ch) > 1:
            raise ValueError(f"form has mixed circle charges {sorted(ch)}")
        return next(iter(ch))

    # -- misc ----------------------------------------------------------------
    def __repr__(self):
        return f"Form({self})"

    def __str__(self):
        if not self.comp:
            return "0"
        names = {"1": "", "m": " w-", "p": " w+", "z": " wz",
                 "mp": " w-^w+", "pz": " w+^wz", "zm": " wz^w-",
                 "top": " w-^w+^wz"}
        return " + ".join(f"[{v}]{names[k]}" for k, v in
                          sorted(self.comp.items(), key=lambda kv: (_KEY_DEGREE[kv[0]], kv[0])))

    def to_json(self):
        return {k: self.get(k).to_json() for k in ALL_KEYS if k in self.comp}


# exterior derivatives of the basis one-forms on the canonical components:
#   d w- = -(1+q^-2) wz^w-
#   d w+ = q^2(1+q^2) wz^w+ = -(1+q^-2) w+^wz
#   d wz = - w-^w+
_ONE_PLUS_QM2 = ScalarQ.from_fraction(1) + ScalarQ.q_power(-2)
_D_BASIS1 = {
    "m": Form.of("zm", AlgElem.scalar(-_ONE_PLUS_QM2)),
    "p": Form.of("pz", AlgElem.scalar(-_ONE_PLUS_QM2)),
    "z": Form.of("mp", AlgElem.scalar(ScalarQ.from_fraction(-1))),
}

# star table: key -> (sign, key)
_STAR_BASIS = {
    "1": (ScalarQ.from_fraction(1), "1"),
    "m": (ScalarQ.from_fraction(-1), "p"),
    "p": (ScalarQ.from_fraction(-1), "m"),
    "z": (ScalarQ.from_fraction(-1), "z"),
    "mp": (ScalarQ.from_fraction(-1), "mp"),
    "pz": (ScalarQ.from_fraction(-1), "zm"),
    "zm": (ScalarQ.from_fraction(-1), "pz"),
    "top": (ScalarQ.from_fraction(1), "top"),
}


def d(form: Form) -> Form:
    return form.d()


def wedge(a: Form, b: Form) -> Form:
    return a.wedge(b)


def star_involution(form: Form) -> Form:
    return form.star_conj()


def right_mul(form: Form, x: AlgElem) -> Form:
    return form.right_mul(x)


def coaction_right(form: Form) -> dict:
    return form.coaction_charges()


# named basis forms ----------------------------------------------------------
OMEGA_MINUS = Form.basis("m")
OMEGA_PLUS = Form.basis("p")
OMEGA_Z = Form.basis("z")
TOP = Form.basis("top")
