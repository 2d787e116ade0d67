"""The standard quantum sphere: 2D calculus, Hodge star, Laplacian.

Sphere forms are quadruples (f0; f-, f+; f2): a charge-0 function, the
two one-form coefficients living in the charge -2/+2 modules, and the
two-form coefficient on the w-^w+ basis (the paper-facing w+^w- choice
differs by -q^2, recorded here once and for all in the product rule).

The sphere Hodge star needs a complex unit on one-forms only, so i is
adjoined as a (real, imaginary) pair of sphere forms rather than by
widening the scalar field of the whole kernel.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .algebra import GEN_A, GEN_AS, GEN_C, GEN_CS, AlgElem
from .forms import Form, x_minus, x_plus
from .hodge import HodgeParams
from .scalars import RadScalar, ScalarQ

_Q = ScalarQ.q_power(1)


def _check_charge(x: AlgElem, n: int, what: str):
    if x.is_zero():
        return
    ws = {m.winding() for m in x.terms}
    if ws != {n}:
        raise ValueError(f"{what} must sit in the charge-{n} module, got {sorted(ws)}")


class SphereForm:
    """Inhomogeneous form on the sphere; charge checks on construction."""

    __slots__ = ("f0", "fm", "fp", "f2")

    def __init__(self, f0=None, fm=None, fp=None, f2=None):
        z = AlgElem.zero()
        self.f0 = f0 if f0 is not None else z
        self.fm = fm if fm is not None else z
        self.fp = fp if fp is not None else z
        self.f2 = f2 if f2 is not None else z
        _check_charge(self.f0, 0, "the function part")
        _check_charge(self.fm, -2, "the w- coefficient")
        _check_charge(self.fp, 2, "the w+ coefficient")
        _check_charge(self.f2, 0, "the two-form coefficient")

    # -- constructors --------------------------------------------------------
    @staticmethod
    def zero() -> "SphereForm":
        return SphereForm()

    @staticmethod
    def function(f: AlgElem) -> "SphereForm":
        return SphereForm(f0=f)

    @staticmethod
    def one_form(fm: AlgElem, fp: AlgElem) -> "SphereForm":
        return SphereForm(fm=fm, fp=fp)

    @staticmethod
    def two_form(f2: AlgElem) -> "SphereForm":
        return SphereForm(f2=f2)

    # -- structure -------------------------------------------------------------
    def __add__(self, other):
        return SphereForm(self.f0 + other.f0, self.fm + other.fm,
                          self.fp + other.fp, self.f2 + other.f2)

    def __neg__(self):
        return SphereForm(-self.f0, -self.fm, -self.fp, -self.f2)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, x) -> "SphereForm":
        return SphereForm(self.f0.scale(x), self.fm.scale(x),
                          self.fp.scale(x), self.f2.scale(x))

    def __eq__(self, other):
        if not isinstance(other, SphereForm):
            return NotImplemented
        return (self.f0 == other.f0 and self.fm == other.fm
                and self.fp == other.fp and self.f2 == other.f2)

    def __hash__(self):
        return hash((self.f0, self.fm, self.fp, self.f2))

    def is_zero(self) -> bool:
        return (self.f0.is_zero() and self.fm.is_zero()
                and self.fp.is_zero() and self.f2.is_zero())

    def degrees(self):
        out = []
        if not self.f0.is_zero():
            out.append(0)
        if not (self.fm.is_zero() and self.fp.is_zero()):
            out.append(1)
        if not self.f2.is_zero():
            out.append(2)
        return out

    def degree(self) -> int:
        ds = self.degrees()
        if not ds:
            return 0
        if len(ds) > 1:
            raise ValueError(f"inhomogeneous sphere form of degrees {ds}")
        return ds[0]

    # -- product (derived from the 3D wedge; cross-checked against it) --------
    def wedge(self, other: "SphereForm") -> "SphereForm":
        if self.degrees() and other.degrees() and \
                max(self.degrees()) + max(other.degrees()) > 2:
            raise ValueError("product exceeds the top degree of the sphere calculus")
        f0, fm, fp, f2 = self.f0, self.fm, self.fp, self.f2
        g0, gm, gp, g2 = other.f0, other.fm, other.fp, other.f2
        return SphereForm(
            f0 * g0,
            f0 * gm + fm * g0,
            f0 * gp + fp * g0,
            f0 * g2 + f2 * g0 + (fm * gp).scale(_Q ** 2) - fp * gm,
        )

    __mul__ = wedge

    # -- 3D embedding ----------------------------------------------------------
    def to_form(self) -> Form:
        return Form({"1": self.f0, "m": self.fm, "p": self.fp, "mp": self.f2})

    @staticmethod
    def from_form(form: Form) -> "SphereForm":
        if not form.is_horizontal():
            raise ValueError("form has vertical components")
        for k, v in form.comp.items():
            if k not in ("1", "m", "p", "mp"):
                raise ValueError(f"unexpected component {k}")
        sf = SphereForm(form.get("1"), form.get("m"), form.get("p"), form.get("mp"))
        return sf

    def right_mul(self, x: AlgElem) -> "SphereForm":
        return SphereForm.from_form(self.to_form().right_mul(x))

    def left_mul(self, x: AlgElem) -> "SphereForm":
        return SphereForm.from_form(self.to_form().left_mul(x))

    # -- calculus ----------------------------------------------------------------
    def d(self) -> "SphereForm":
        df = SphereForm(fm=x_minus(self.f0), fp=x_plus(self.f0))
        curl = x_minus(self.fp) - x_plus(self.fm).scale(_Q ** 2)
        return df + SphereForm.two_form(curl)

    def __repr__(self):
        return (f"SphereForm(f0={self.f0}, w-:{self.fm}, w+:{self.fp}, "
                f"w-^w+:{self.f2})")


# generators -------------------------------------------------------------------

def sphere_generators():
    """B- = -a c*, B+ = q c a*, B0 = q^2/(1+q^2) - q^2 c c*."""
    b_minus = -(GEN_A * GEN_CS)
    b_plus = (GEN_C * GEN_AS).scale(_Q)
    const = (_Q ** 2) / (ScalarQ.from_fraction(1) + _Q ** 2)
    b_zero = AlgElem.scalar(const) - (GEN_C * GEN_CS).scale(_Q ** 2)
    return b_minus, b_zero, b_plus


def sphere_d(f: AlgElem) -> SphereForm:
    """d f = (X- f) w- + (X+ f) w+ for a coinvariant f."""
    _check_charge(f, 0, "the argument of the sphere differential")
    return SphereForm(fm=x_minus(f), fp=x_plus(f))


def delbar(f: AlgElem) -> SphereForm:
    """Antiholomorphic half of the differential."""
    _check_charge(f, 0, "the argument")
    return SphereForm(fm=x_minus(f))


def del_holo(f: AlgElem) -> SphereForm:
    """Holomorphic half of the differential."""
    _check_charge(f, 0, "the argument")
    return SphereForm(fp=x_plus(f))


def sphere_wedge(a: SphereForm, b: SphereForm) -> SphereForm:
    return a.wedge(b)


# ---------------------------------------------------------------------------
# complex layer: i enters only through the sphere Hodge star
# ---------------------------------------------------------------------------

class CScalar(NamedTuple):
    re: RadScalar
    im: RadScalar

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()


class CSphereForm:
    """Complexified sphere form: re + i im, with i^2 = -1."""

    __slots__ = ("re", "im")

    def __init__(self, re=None, im=None):
        self.re = re if re is not None else SphereForm.zero()
        self.im = im if im is not None else SphereForm.zero()

    @staticmethod
    def real(form: SphereForm) -> "CSphereForm":
        return CSphereForm(re=form)

    def __add__(self, other):
        return CSphereForm(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return CSphereForm(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return CSphereForm(-self.re, -self.im)

    def scale(self, x) -> "CSphereForm":
        return CSphereForm(self.re.scale(x), self.im.scale(x))

    def times_i(self) -> "CSphereForm":
        return CSphereForm(-self.im, self.re)

    def wedge(self, other: "CSphereForm") -> "CSphereForm":
        return CSphereForm(
            self.re.wedge(other.re) - self.im.wedge(other.im),
            self.re.wedge(other.im) + self.im.wedge(other.re),
        )

    def d(self) -> "CSphereForm":
        return CSphereForm(self.re.d(), self.im.d())

    def right_mul(self, x: AlgElem) -> "CSphereForm":
        return CSphereForm(self.re.right_mul(x), self.im.right_mul(x))

    def left_mul(self, x: AlgElem) -> "CSphereForm":
        return CSphereForm(self.re.left_mul(x), self.im.left_mul(x))

    def __eq__(self, other):
        if isinstance(other, SphereForm):
            other = CSphereForm.real(other)
        if not isinstance(other, CSphereForm):
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_zero(self) -> bool:
        return self.re.is_zero() and self.im.is_zero()

    def real_part(self) -> SphereForm:
        return self.re

    def __repr__(self):
        return f"CSphereForm(re={self.re!r}, im={self.im!r})"


def _star_real(sf: SphereForm, p: HodgeParams) -> SphereForm:
    """The star of a real sphere form is i times this real form:

        *(f0)        = i alpha'' f0 w-^w+
        *(x w-)      = i sgn(alpha'') x w-
        *(y w+)      = -i sgn(alpha'') y w+
        *(f2 w-^w+)  = -i alpha''^-1 f2
    """
    sgn = Fraction(p.sign_dprime())
    return SphereForm(
        f0=sf.f2.scale(-p.alpha_dprime.inv()),
        fm=sf.fm.scale(sgn),
        fp=sf.fp.scale(-sgn),
        f2=sf.f0.scale(p.alpha_dprime),
    )


def _hodge_c(form: CSphereForm, p: HodgeParams) -> CSphereForm:
    out_from_re = CSphereForm(im=_star_real(form.re, p))
    out_from_im = CSphereForm(im=_star_real(form.im, p)).times_i()
    return out_from_re + out_from_im


def sphere_hodge(form, p: HodgeParams) -> CSphereForm:
    """The sphere Hodge star; complex-valued on one-forms."""
    if isinstance(form, SphereForm):
        form = CSphereForm.real(form)
    return _hodge_c(form, p)


def sphere_integral(form, p: HodgeParams) -> CScalar:
    """Integral against i alpha'' w-^w+: nonzero on the top degree only."""
    if isinstance(form, SphereForm):
        form = CSphereForm.real(form)
    scale = -p.alpha_dprime.inv()
    # integral(f2 w-^w+) = -i alpha''^-1 h(f2)
    re_part = form.im.f2.haar() * scale * (-1)
    im_part = form.re.f2.haar() * scale
    return CScalar(re_part, im_part)


def sphere_laplacian(f: AlgElem, p: HodgeParams) -> AlgElem:
    """-[nu X-X+ + beta X+X-] on coinvariant functions."""
    _check_charge(f, 0, "the argument of the sphere Laplacian")
    return -(x_minus(x_plus(f)).scale(p.nu) + x_plus(x_minus(f)).scale(p.beta))


def sphere_laplacian_composed(f: AlgElem, p: HodgeParams) -> AlgElem:
    """star d star d through the complexified sphere calculus."""
    _check_charge(f, 0, "the argument of the sphere Laplacian")
    one = CSphereForm.real(SphereForm.function(f))
    res = sphere_hodge(sphere_hodge(one.d(), p).d(), p)
    if not res.im.is_zero():
        raise AssertionError("sphere Laplacian grew an imaginary part")
    out = res.re
    if not (out.fm.is_zero() and out.fp.is_zero() and out.f2.is_zero()):
        raise AssertionError("sphere Laplacian left the function sector")
    return out.f0


def sphere_spectrum(two_j: int, p: HodgeParams) -> ScalarQ:
    """-2 q nu [J][J+1] on the spin-J spherical harmonics."""
    from .scalars import qnum2
    return ScalarQ.from_fraction(-2) * _Q * p.nu * qnum2(two_j) * qnum2(two_j + 2)
