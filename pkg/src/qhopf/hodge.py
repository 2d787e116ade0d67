"""Hodge duality on the 3D exterior algebra and the total-space Laplacian.

The star operator is the left-linear extension of a finite table over
the invariant basis, parametrised by the volume coefficients alpha' and
alpha'' (both negative by convention) through

    gamma = alpha''^2 / alpha'^2,   nu = -1/alpha'',   beta = q^2 nu.

The Laplacian is implemented twice: as the quadratic operator in the
quantum vector fields and as the literal star-d-star-d composition.
The test suite holds the two against each other, so the closed form is
a verified consequence rather than an assumption.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import AlgElem
from .forms import Form, x_minus, x_plus, x_z
from .scalars import ONE, RadScalar, ScalarQ, qnum, qnum2

_Q2 = ScalarQ.q_power(1)


class HodgeParams:
    """The compatible parameter family (alpha', alpha''; beta, nu, gamma)."""

    __slots__ = ("alpha_prime", "alpha_dprime", "beta", "nu", "gamma")

    def __init__(self, alpha_prime=Fraction(-4), alpha_dprime=Fraction(-2)):
        ap = alpha_prime if isinstance(alpha_prime, ScalarQ) else ScalarQ.from_fraction(alpha_prime)
        app = alpha_dprime if isinstance(alpha_dprime, ScalarQ) else ScalarQ.from_fraction(alpha_dprime)
        if not ap.is_rational() or not app.is_rational():
            raise ValueError("volume coefficients must be rational constants")
        if ap.is_zero() or app.is_zero():
            raise ValueError("volume coefficients must be nonzero")
        self.alpha_prime = ap
        self.alpha_dprime = app
        self.nu = -app.inv()
        self.beta = ScalarQ.q_power(2) * self.nu
        self.gamma = (app * app) / (ap * ap)

    @staticmethod
    def classical(alpha=Fraction(1)) -> "HodgeParams":
        """Defaults tuned so the q -> 1 limit matches the round metric."""
        return HodgeParams(Fraction(-4) * alpha, Fraction(-2) * alpha)

    def sign_dprime(self) -> int:
        return 1 if self.alpha_dprime.limit_at_one() > 0 else -1

    def __repr__(self):
        return (f"HodgeParams(alpha'={self.alpha_prime}, alpha''={self.alpha_dprime}, "
                f"beta={self.beta}, nu={self.nu}, gamma={self.gamma})")


def _star_table(p: HodgeParams):
    ap, beta, nu, gamma = p.alpha_prime, p.beta, p.nu, p.gamma
    api = ap.inv()
    q6 = ScalarQ.q_power(3) ** 2
    return {
        "1": (ap, "top"),
        "m": (-ap * beta * ScalarQ.q_power(-6), "zm"),
        "p": (-ap * nu, "pz"),
        "z": (-ap * gamma, "mp"),
        "mp": (-api * gamma.inv(), "z"),
        "pz": (-api * nu.inv(), "p"),
        "zm": (-api * beta.inv() * ScalarQ.q_power(6), "m"),
        "top": (api, "1"),
    }


def hodge3(form: Form, p: HodgeParams) -> Form:
    """Left-linear Hodge star on the 3D exterior algebra."""
    table = _star_table(p)
    out = Form.zero()
    for key, coeff in form.comp.items():
        factor, new_key = table[key]
        out = out + Form.of(new_key, coeff.scale(factor))
    return out


def integral3(form: Form, p: HodgeParams) -> RadScalar:
    """Integral against the volume form: zero below the top degree."""
    top = form.get("top")
    return top.scale(p.alpha_prime.inv()).haar()


#: squared norms of the invariant basis under the graded inner product
def _inner_table(p: HodgeParams):
    ap2i = (p.alpha_prime * p.alpha_prime).inv()
    return {
        "1": ONE,
        "m": p.beta, "p": p.nu, "z": p.gamma,
        "mp": ap2i * p.gamma.inv(),
        "pz": ap2i * p.nu.inv(),
        "zm": ScalarQ.q_power(12) * ap2i * p.beta.inv(),
        "top": ap2i,
    }


def inner3(alpha: Form, beta: Form, p: HodgeParams) -> RadScalar:
    """Left-invariant graded inner product (alpha; beta) = h(b* a) (w_a, w_b)."""
    da, db = alpha.degrees(), beta.degrees()
    if (da or db) and da != db:
        raise ValueError(f"degree mismatch: {da} vs {db}")
    table = _inner_table(p)
    tot = RadScalar.from_scalar(0)
    for key, va in alpha.comp.items():
        vb = beta.comp.get(key)
        if vb is None:
            continue
        tot = tot + (vb.star() * va).haar() * table[key]
    return tot


# ---------------------------------------------------------------------------
# Laplacian, both routes
# ---------------------------------------------------------------------------

def laplacian3(x: AlgElem, p: HodgeParams) -> AlgElem:
    """-[nu X-X+ + beta X+X- + gamma XzXz] acting from the left."""
    out = x_minus(x_plus(x)).scale(p.nu)
    out = out + x_plus(x_minus(x)).scale(p.beta)
    out = out + x_z(x_z(x)).scale(p.gamma)
    return -out


def laplacian3_composed(x: AlgElem, p: HodgeParams) -> AlgElem:
    """star d star d, computed literally through the exterior algebra."""
    form = hodge3(hodge3(Form.from_algebra(x).d(), p).d(), p)
    for key in form.comp:
        if key != "1":
            raise AssertionError("star d star d left the scalar sector")
    return form.get("1")


def spectrum3(n: int, two_j: int, p: HodgeParams) -> ScalarQ:
    """Exact eigenvalue on the charge-n, spin two_j/2 eigenvectors."""
    if two_j < abs(n) or (two_j - n) % 2 != 0:
        raise ValueError(f"invalid spin/charge: n={n}, 2J={two_j}")
    j_minus = qnum2(two_j - n)       # [J - n/2]
    j_plus = qnum2(two_j + n + 2)    # [J + 1 + n/2]
    qn = qnum(n)
    jj = j_minus * j_plus
    inner = (p.nu * _Q2 * jj
             + p.beta * ScalarQ.q_power(-1) * (jj + qn)
             + p.gamma * ScalarQ.q_power(n + 2) * qn * qn)
    return -(ScalarQ.q_power(n) * inner)


# eigenvalues of the individual quadratic pieces (cross-checked in tests)

def xz_xz_eigenvalue(n: int) -> ScalarQ:
    return ScalarQ.q_power(2 * (n + 1)) * qnum(n) ** 2


def xp_xm_eigenvalue(n: int, two_j: int) -> ScalarQ:
    return ScalarQ.q_power(n - 1) * (qnum2(two_j - n) * qnum2(two_j + n + 2) + qnum(n))


def xm_xp_eigenvalue(n: int, two_j: int) -> ScalarQ:
    return ScalarQ.q_power(n + 1) * qnum2(two_j - n) * qnum2(two_j + n + 2)
