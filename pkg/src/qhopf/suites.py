"""Named verification suites behind the command line.

Every suite runs deterministically from a seed, reports one verdict per
check, and attaches a serialized counterexample to any failure.  The
classical suite compares the q = 1 evaluation of the symbolic results
against independently built commutative oracles (plain integers in
place of the braided brackets, Maurer-Cartan structure constants for
the calculus).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import sampling
from .actions import (act_left, act_right, act_word_left, casimir_eigenvalue,
                      casimir_left, casimir_right, eigenbasis_vector,
                      pairing, pw_basis, pw_element)
from .algebra import (GEN_A, GEN_AS, GEN_C, GEN_CS, AlgElem, Monomial,
                      normalize)
from .bundles import (Ket, Projector, galois_witness, hermitian_pairing,
                      partition_of_unity, section_of, equivariant_of)
from .forms import (ALL_KEYS, Form, OMEGA_MINUS, OMEGA_PLUS, OMEGA_Z,
                    reduce_word, x_minus, x_plus, x_z)
from .gauge import (Connection, braided_relation_defects, connection_one_form,
                    connection_projector, cov_d0, cov_d0_via_omega, cov_d1,
                    curvature, d_squared_via_omega, dplus_rewrite_images,
                    gauge_potential, gauged_laplacian, gauged_spectrum,
                    h_omega, h_omega_prime, lam_tilde, projector_curvature_lhs,
                    projector_curvature_rhs, verify_master_relation)
from .hodge import (HodgeParams, hodge3, inner3, integral3, laplacian3,
                    laplacian3_composed, spectrum3, xm_xp_eigenvalue,
                    xp_xm_eigenvalue, xz_xz_eigenvalue)
from .scalars import RadScalar, ScalarQ, qnum, qnum2
from .sphere import (CSphereForm, SphereForm, del_holo, delbar,
                     sphere_d, sphere_generators, sphere_hodge,
                     sphere_integral, sphere_laplacian,
                     sphere_laplacian_composed, sphere_spectrum)

SUITES = ("algebra", "actions", "calculus", "hodge", "sphere", "bundles",
          "gauge", "classical")


@dataclass
class CheckResult:
    check_id: str
    law: str
    ok: bool
    witness: str | None = None
    seconds: float = 0.0

    def to_json(self):
        out = {"id": self.check_id, "law": self.law, "ok": self.ok,
               "seconds": round(self.seconds, 4)}
        if self.witness is not None:
            out["witness"] = self.witness
        return out


@dataclass
class SuiteReport:
    suite: str
    seed: int
    samples: int
    checks: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def seconds(self) -> float:
        return sum(c.seconds for c in self.checks)

    def to_json(self):
        return {
            "suite": self.suite,
            "seed": self.seed,
            "samples": self.samples,
            "ok": self.ok,
            "seconds": round(self.seconds, 4),
            "checks": [c.to_json() for c in sorted(self.checks,
                                                   key=lambda c: c.check_id)],
        }


class _Runner:
    def __init__(self, suite, seed, samples):
        self.report = SuiteReport(suite, seed, samples)
        self.seed = seed
        self.samples = samples

    def check(self, check_id, law, fn):
        rng = random.Random((self.seed, check_id).__repr__())
        t0 = time.time()
        try:
            witness = fn(rng, self.samples)
        except Exception as exc:  # a crash is a failure with a witness
            witness = f"exception: {exc!r}"
        self.report.checks.append(CheckResult(
            check_id, law, witness is None,
            witness, time.time() - t0))


def _first(iterable):
    """Run sample thunks, returning the first witness or None."""
    for witness in iterable:
        if witness is not None:
            return witness
    return None


# ---------------------------------------------------------------------------
# algebra
# ---------------------------------------------------------------------------

def _suite_algebra(r: _Runner):
    def confluence(rng, samples):
        def one(_):
            word = sampling.rand_word(rng, 8)
            k = rng.randint(0, len(word))
            lhs = normalize(word)
            rhs = normalize(word[:k]) * normalize(word[k:])
            if lhs != rhs:
                return f"word={''.join(word)} split={k}"
        return _first(one(i) for i in range(samples))
    r.check("alg-01-confluence", "normal form is independent of rewrite order",
            confluence)

    def assoc(rng, samples):
        def one(_):
            x, y, z = (sampling.rand_elem(rng, 3, 3) for _ in range(3))
            if (x * y) * z != x * (y * z):
                return f"x={x}, y={y}, z={z}"
        return _first(one(i) for i in range(samples))
    r.check("alg-02-associative", "the product is associative", assoc)

    def star_props(rng, samples):
        def one(_):
            x, y = sampling.rand_elem(rng, 3, 3), sampling.rand_elem(rng, 3, 3)
            if x.star().star() != x:
                return f"involution fails on {x}"
            if (x * y).star() != y.star() * x.star():
                return f"antihomomorphism fails on {x}, {y}"
        return _first(one(i) for i in range(samples))
    r.check("alg-03-star", "star is an involutive antihomomorphism", star_props)

    def coassoc(rng, samples):
        def one(_):
            x = sampling.rand_elem(rng, 2, 2)
            t = x.coproduct()
            if t.coproduct_left() != t.coproduct_right():
                return f"x={x}"
        return _first(one(i) for i in range(min(samples, 20)))
    r.check("alg-04-coassociative", "the coproduct is coassociative", coassoc)

    def counit_law(rng, samples):
        def one(_):
            x = sampling.rand_elem(rng, 3, 3)
            t = x.coproduct()
            if t.apply_left(lambda e: e.counit()) != x:
                return f"left counit law fails on {x}"
            if t.apply_right(lambda e: e.counit()) != x:
                return f"right counit law fails on {x}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("alg-05-counit", "the counit laws hold", counit_law)

    def antipode_axiom(rng, samples):
        def one(_):
            x = sampling.rand_elem(rng, 2, 2)
            tot = AlgElem.zero()
            for (ml, mr), coeff in x.coproduct().terms.items():
                tot = tot + AlgElem.monomial(ml).antipode() * AlgElem.monomial(mr, coeff)
            if tot != AlgElem.scalar(x.counit()):
                return f"x={x}"
        return _first(one(i) for i in range(min(samples, 20)))
    r.check("alg-06-antipode", "m(S x id) coproduct = counit", antipode_axiom)

    def winding_additive(rng, samples):
        def one(_):
            n, m = rng.randint(-3, 3), rng.randint(-3, 3)
            x = sampling.rand_charged(rng, n)
            y = sampling.rand_charged(rng, m)
            xy = x * y
            if not xy.is_zero() and xy.winding() != n + m:
                return f"x={x}, y={y}"
            if x.star().winding() != -n:
                return f"star grading fails on {x}"
        return _first(one(i) for i in range(samples))
    r.check("alg-07-grading", "winding adds under products, flips under star",
            winding_additive)

    def haar_positive(rng, samples):
        s0 = Fraction(1, 2)
        def one(_):
            x = sampling.rand_elem(rng, 3, 3)
            val = (x.star() * x).haar().as_scalar().eval_at(s0)
            if val < 0:
                return f"h(x* x) = {val} < 0 at s={s0} for x={x}"
        return _first(one(i) for i in range(samples))
    r.check("alg-08-haar-positive", "the invariant state is positive at q=1/4",
            haar_positive)

    def haar_invariant(rng, samples):
        def one(_):
            x = sampling.rand_elem(rng, 3, 3)
            if act_right(x, "K").haar() != x.haar():
                return f"K fails on {x}"
            if not act_right(x, "E").haar().is_zero():
                return f"E fails on {x}"
            if not act_right(x, "F").haar().is_zero():
                return f"F fails on {x}"
        return _first(one(i) for i in range(samples))
    r.check("alg-09-haar-invariant", "the state is right invariant",
            haar_invariant)


# ---------------------------------------------------------------------------
# actions
# ---------------------------------------------------------------------------

def _suite_actions(r: _Runner):
    def module_law(rng, samples):
        def one(_):
            x, y = sampling.rand_elem(rng, 3, 3), sampling.rand_elem(rng, 3, 3)
            for g in "EF":
                lhs = act_left(g, x * y)
                rhs = (act_left(g, x) * act_left("K", y)
                       + act_left("k", x) * act_left(g, y))
                if lhs != rhs:
                    return f"{g} on x={x}, y={y}"
        return _first(one(i) for i in range(samples))
    r.check("act-01-leibniz", "the twisted Leibniz rule holds on products",
            module_law)

    def commute(rng, samples):
        def one(_):
            x = sampling.rand_elem(rng, 3, 3)
            for g1 in "KEF":
                for g2 in "KEF":
                    if act_right(act_left(g1, x), g2) != act_left(g1, act_right(x, g2)):
                        return f"[{g1}|>, <|{g2}] on {x}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("act-02-commute", "left and right actions commute", commute)

    def operator_relations(rng, samples):
        qq = ScalarQ.q_power(1)
        inv = (qq - qq.inv()).inv()
        def one(_):
            x = sampling.rand_elem(rng, 3, 3)
            if act_word_left("KEk", x) != act_left("E", x).scale(qq):
                return f"KEK^-1 != qE on {x}"
            lhs = act_word_left("EF", x) - act_word_left("FE", x)
            rhs = (act_word_left("KK", x) - act_word_left("kk", x)).scale(inv)
            if lhs != rhs:
                return f"[E,F] relation fails on {x}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("act-03-relations", "the defining relations hold as operators",
            operator_relations)

    def casimir_central(rng, samples):
        for p in range(0, 6):
            lam = casimir_eigenvalue(p)
            box = pw_basis(p)
            for t in range(p + 1):
                for rr in range(p + 1):
                    w = box[t][rr]
                    if casimir_left(w) != w.scale(lam):
                        return f"left eigenvalue fails at p={p},t={t},r={rr}"
                    if casimir_right(w) != w.scale(lam):
                        return f"right eigenvalue fails at p={p},t={t},r={rr}"
        return None
    r.check("act-04-casimir", "the Casimir is central with the exact eigenvalue",
            casimir_central)

    def grading_shift(rng, samples):
        def one(_):
            n = rng.randint(-3, 3)
            x = sampling.rand_charged(rng, n)
            up, down = act_left("E", x), act_left("F", x)
            if not up.is_zero() and up.winding() != n + 2:
                return f"E does not raise: {x}"
            if not down.is_zero() and down.winding() != n - 2:
                return f"F does not lower: {x}"
        return _first(one(i) for i in range(samples))
    r.check("act-05-grading", "E raises and F lowers the charge by two",
            grading_shift)

    def pairing_consistency(rng, samples):
        def one(_):
            x = sampling.rand_elem(rng, 2, 2)
            for g in ("K", "k", "E", "F"):
                via = x.coproduct().apply_right(lambda e, g=g: pairing(g, e))
                if via != act_left(g, x):
                    return f"left/{g} on {x}"
                via = x.coproduct().apply_left(lambda e, g=g: pairing(g, e))
                if via != act_right(x, g):
                    return f"right/{g} on {x}"
        return _first(one(i) for i in range(min(samples, 15)))
    r.check("act-06-pairing", "actions agree with the dual pairing", pairing_consistency)

    def boxes(rng, samples):
        for p in range(0, 6):
            box = pw_basis(p)
            for t in range(p + 1):
                for rr in range(p + 1):
                    w = box[t][rr]
                    if w.is_zero():
                        return f"vanishing box element p={p},t={t},r={rr}"
                    if w.winding() != p - 2 * t:
                        return f"wrong charge at p={p},t={t},r={rr}"
        return None
    r.check("act-07-boxes", "box elements are nonzero with charge p-2t", boxes)


# ---------------------------------------------------------------------------
# calculus
# ---------------------------------------------------------------------------

def _suite_calculus(r: _Runner):
    def d_squared(rng, samples):
        def one(_):
            x = sampling.rand_form(rng, rng.choice([0, 1]))
            if not x.d().d().is_zero():
                return f"x={x}"
        return _first(one(i) for i in range(samples))
    r.check("cal-01-d2", "d o d = 0", d_squared)

    def leibniz(rng, samples):
        def one(_):
            da, db = rng.choice([0, 1]), rng.choice([0, 1])
            al, be = sampling.rand_form(rng, da), sampling.rand_form(rng, db)
            sgn = -1 if da % 2 else 1
            if al.wedge(be).d() != al.d().wedge(be) + al.wedge(be.d()).scale(sgn):
                return f"deg=({da},{db}) al={al} be={be}"
        return _first(one(i) for i in range(samples))
    r.check("cal-02-leibniz", "the graded Leibniz rule holds", leibniz)

    def bimodule(rng, samples):
        def one(_):
            w = sampling.rand_form(rng, rng.choice([1, 2]))
            x, y = sampling.rand_elem(rng, 2, 3), sampling.rand_elem(rng, 2, 3)
            if w.right_mul(x).right_mul(y) != w.right_mul(x * y):
                return f"w={w} x={x} y={y}"
        return _first(one(i) for i in range(samples))
    r.check("cal-03-bimodule", "right multiplication is associative", bimodule)

    def exchange_weights(rng, samples):
        def one(_):
            n = rng.randint(-3, 3)
            phi = sampling.rand_charged(rng, n)
            if OMEGA_Z.right_mul(phi) != Form.of("z", phi.scale(ScalarQ.q_power(2 * n))):
                return f"wz exchange fails on charge {n}"
            if OMEGA_PLUS.right_mul(phi) != Form.of("p", phi.scale(ScalarQ.q_power(n))):
                return f"w+ exchange fails on charge {n}"
        return _first(one(i) for i in range(samples))
    r.check("cal-04-exchange", "basis forms exchange with the stated weights",
            exchange_weights)

    def star_compat(rng, samples):
        def one(_):
            x = sampling.rand_form(rng, 0)
            if x.d().star_conj() != x.star_conj().d():
                return f"x={x}"
            y = sampling.rand_form(rng, rng.choice([0, 1, 2, 3]))
            if y.star_conj().star_conj() != y:
                return f"involution fails on {y}"
        return _first(one(i) for i in range(samples))
    r.check("cal-05-star", "star squares to one and commutes with d on functions",
            star_compat)

    def covariance(rng, samples):
        def one(_):
            x = sampling.rand_form(rng, rng.choice([0, 1]))
            dch = x.d().coaction_charges()
            rec = {}
            for k, part in x.coaction_charges().items():
                dp = part.d()
                if not dp.is_zero():
                    rec[k] = rec.get(k, Form.zero()) + dp
            rec = {k: v for k, v in rec.items() if not v.is_zero()}
            if rec != dch:
                return f"x={x}"
        return _first(one(i) for i in range(min(samples, 30)))
    r.check("cal-06-covariance", "d commutes with the charge decomposition",
            covariance)

    def confluent_wedge(rng, samples):
        lhs = OMEGA_Z.wedge(OMEGA_PLUS).wedge(OMEGA_Z)
        rhs = OMEGA_Z.wedge(OMEGA_PLUS.wedge(OMEGA_Z))
        if not (lhs.is_zero() and rhs.is_zero()):
            return "wz^w+^wz did not vanish both ways"
        return None
    r.check("cal-07-confluence", "the wedge reduction is confluent", confluent_wedge)

    def anticommute_base(rng, samples):
        def one(_):
            al = Form({"p": sampling.rand_charged(rng, 2),
                       "m": sampling.rand_charged(rng, -2)})
            if not (OMEGA_Z.wedge(al) + al.wedge(OMEGA_Z)).is_zero():
                return f"al={al}"
        return _first(one(i) for i in range(samples))
    r.check("cal-08-anticommute", "wz anticommutes with base one-forms",
            anticommute_base)


# ---------------------------------------------------------------------------
# hodge
# ---------------------------------------------------------------------------

def _suite_hodge(r: _Runner):
    p = HodgeParams()

    def star_squared(rng, samples):
        for key in ALL_KEYS:
            b = Form.basis(key)
            if hodge3(hodge3(b, p), p) != b:
                return f"basis {key}"
        def one(_):
            f = Form({k: sampling.rand_elem(rng, 2, 3) for k in ALL_KEYS})
            if hodge3(hodge3(f, p), p) != f:
                return f"f={f}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("hod-01-square", "the star operator squares to the identity",
            star_squared)

    def two_routes(rng, samples):
        def one(_):
            n = rng.randint(-3, 3)
            x = sampling.rand_charged(rng, n)
            if laplacian3(x, p) != laplacian3_composed(x, p):
                return f"x={x}"
        return _first(one(i) for i in range(samples))
    r.check("hod-02-routes", "the quadratic operator equals star d star d",
            two_routes)

    def eigen_sweep(rng, samples):
        for n in range(-2, 3):
            for two_j in range(abs(n), abs(n) + 5, 2):
                lam = spectrum3(n, two_j, p)
                for l in range(two_j + 1):
                    phi = eigenbasis_vector(n, two_j, l)
                    if laplacian3(phi, p) != phi.scale(lam):
                        return f"(n={n}, 2J={two_j}, l={l})"
        return None
    r.check("hod-03-spectrum", "the exact spectrum matches the operator",
            eigen_sweep)

    def ingredients(rng, samples):
        for n in range(-2, 3):
            for two_j in range(abs(n), abs(n) + 3, 2):
                for l in (0, two_j):
                    phi = eigenbasis_vector(n, two_j, l)
                    if x_z(x_z(phi)) != phi.scale(xz_xz_eigenvalue(n)):
                        return f"vertical piece at (n={n}, 2J={two_j})"
                    if x_plus(x_minus(phi)) != phi.scale(xp_xm_eigenvalue(n, two_j)):
                        return f"+- piece at (n={n}, 2J={two_j})"
                    if x_minus(x_plus(phi)) != phi.scale(xm_xp_eigenvalue(n, two_j)):
                        return f"-+ piece at (n={n}, 2J={two_j})"
        return None
    r.check("hod-04-ingredients", "each quadratic piece has the stated eigenvalue",
            ingredients)

    def preserves_charge(rng, samples):
        def one(_):
            n = rng.randint(-3, 3)
            x = sampling.rand_charged(rng, n)
            lx = laplacian3(x, p)
            if not lx.is_zero() and lx.winding() != n:
                return f"x={x}"
        return _first(one(i) for i in range(samples))
    r.check("hod-05-charge", "the Laplacian preserves the charge modules",
            preserves_charge)

    def inner_integral(rng, samples):
        one_f = Form.from_algebra(AlgElem.one())
        if inner3(one_f, one_f, p) != RadScalar.from_scalar(1):
            return "(1,1) != 1"
        theta = Form.of("top", AlgElem.one().scale(p.alpha_prime))
        if integral3(theta, p) != RadScalar.from_scalar(1):
            return "volume does not integrate to 1"
        if not integral3(OMEGA_MINUS, p).is_zero():
            return "a one-form integrated to something nonzero"
        return None
    r.check("hod-06-normalisation", "inner product and integral normalisations",
            inner_integral)


# ---------------------------------------------------------------------------
# sphere
# ---------------------------------------------------------------------------

def _suite_sphere(r: _Runner):
    p = HodgeParams()

    def gen_table(rng, samples):
        b_minus, b_zero, b_plus = sphere_generators()
        q = ScalarQ.q_power(1)
        a2 = GEN_A * GEN_A
        checks = [
            (delbar(b_minus), SphereForm(fm=a2.scale(q.inv()))),
            (del_holo(b_plus), SphereForm(fp=(GEN_AS * GEN_AS).scale(q ** 2))),
            (delbar(b_zero), SphereForm(fm=(GEN_C * GEN_A).scale(q))),
            (del_holo(b_zero), SphereForm(fp=(GEN_CS * GEN_AS).scale(-(q ** 2)))),
            (delbar(b_plus), SphereForm(fm=(GEN_C * GEN_C).scale(q))),
            (del_holo(b_minus), SphereForm(fp=(GEN_CS * GEN_CS).scale(q ** 2))),
        ]
        for i, (got, want) in enumerate(checks):
            if got != want:
                return f"differential table row {i}"
        if b_zero.star() != b_zero:
            return "B0 is not selfadjoint"
        if b_plus.star() != b_minus.scale(-q):
            return "star(B+) != -q B-"
        return None
    r.check("sph-01-generators", "generator differentials and star structure",
            gen_table)

    def embed_product(rng, samples):
        def one(_):
            d1, d2 = rng.choice([0, 1, 2]), rng.choice([0, 1, 2])
            if d1 + d2 > 2:
                return None
            def mk(d):
                if d == 0:
                    return SphereForm.function(sampling.rand_charged(rng, 0))
                if d == 1:
                    return SphereForm.one_form(sampling.rand_charged(rng, -2),
                                               sampling.rand_charged(rng, 2))
                return SphereForm.two_form(sampling.rand_charged(rng, 0))
            x, y = mk(d1), mk(d2)
            via_3d = SphereForm.from_form(x.to_form().wedge(y.to_form()))
            if x.wedge(y) != via_3d:
                return f"deg=({d1},{d2})"
        return _first(one(i) for i in range(samples))
    r.check("sph-02-product", "the sphere product matches the 3D wedge",
            embed_product)

    def star_squared(rng, samples):
        def one(_):
            f = SphereForm.function(sampling.rand_charged(rng, 0))
            if sphere_hodge(sphere_hodge(f, p), p) != CSphereForm.real(f):
                return "degree 0"
            e = SphereForm.one_form(sampling.rand_charged(rng, -2),
                                    sampling.rand_charged(rng, 2))
            if sphere_hodge(sphere_hodge(e, p), p) != CSphereForm.real(-e):
                return "degree 1"
        return _first(one(i) for i in range(min(samples, 30)))
    r.check("sph-03-square", "star star = (-1)^(k(2-k)) on the sphere",
            star_squared)

    def symmetry(rng, samples):
        def one(_):
            e1 = SphereForm.one_form(sampling.rand_charged(rng, -2),
                                     sampling.rand_charged(rng, 2))
            e2 = SphereForm.one_form(sampling.rand_charged(rng, -2),
                                     sampling.rand_charged(rng, 2))
            lhs = sphere_hodge(e1, p).wedge(CSphereForm.real(e2))
            rhs = CSphereForm.real(e1).wedge(sphere_hodge(e2, p)).scale(-1)
            if lhs != rhs:
                return f"e1={e1!r} e2={e2!r}"
        return _first(one(i) for i in range(samples))
    r.check("sph-04-symmetry", "star(e)^e' = -e^star(e') on one-forms", symmetry)

    def right_linear(rng, samples):
        def one(_):
            e = SphereForm.one_form(sampling.rand_charged(rng, -2),
                                    sampling.rand_charged(rng, 2))
            f = sampling.rand_charged(rng, 0)
            if sphere_hodge(e.right_mul(f), p) != sphere_hodge(e, p).right_mul(f):
                return f"e={e!r} f={f}"
        return _first(one(i) for i in range(samples))
    r.check("sph-05-right-linear", "the sphere star is right linear", right_linear)

    def sandwich(rng, samples):
        def one(_):
            n = rng.choice([1, 2, -1, -2, 3, -3])
            phi = sampling.rand_charged(rng, n, 1, 2)
            phip = phi.star()
            e = SphereForm.one_form(sampling.rand_charged(rng, -2),
                                    sampling.rand_charged(rng, 2))
            lhs = sphere_hodge(
                SphereForm.from_form(e.to_form().left_mul(phip).right_mul(phi)), p)
            star_e = sphere_hodge(e, p)
            rhs = CSphereForm(
                re=SphereForm.from_form(star_e.re.to_form().left_mul(phip).right_mul(phi)),
                im=SphereForm.from_form(star_e.im.to_form().left_mul(phip).right_mul(phi)))
            if lhs != rhs:
                return f"one-form sandwich at n={n}"
            w2 = SphereForm.two_form(sampling.rand_charged(rng, 0))
            lhs2 = sphere_hodge(
                SphereForm.from_form(w2.to_form().left_mul(phip).right_mul(phi)), p)
            star_w = sphere_hodge(w2, p)
            f3 = star_w.re.to_form().left_mul(phip).right_mul(phi).scale(ScalarQ.q_power(2 * n))
            f4 = star_w.im.to_form().left_mul(phip).right_mul(phi).scale(ScalarQ.q_power(2 * n))
            rhs2 = CSphereForm(re=SphereForm.from_form(f3), im=SphereForm.from_form(f4))
            if lhs2 != rhs2:
                return f"two-form sandwich at n={n}"
        return _first(one(i) for i in range(min(samples, 20)))
    r.check("sph-06-sandwich", "the star passes through charged sandwiches",
            sandwich)

    def diff_relations(rng, samples):
        b_minus, b_zero, b_plus = sphere_generators()
        q = ScalarQ.q_power(1)
        lhs = del_holo(b_zero)
        rhs = (del_holo(b_plus).left_mul(b_minus).scale(q.inv())
               - del_holo(b_minus).left_mul(b_plus).scale(q ** 3))
        if lhs != rhs:
            return "holomorphic relation"
        lhs = delbar(b_zero)
        rhs = (delbar(b_minus).left_mul(b_plus).scale(q)
               - delbar(b_plus).left_mul(b_minus).scale(ScalarQ.q_power(-3)))
        if lhs != rhs:
            return "antiholomorphic relation"
        return None
    r.check("sph-07-relations", "the module relations among the differentials",
            diff_relations)

    def nondegenerate(rng, samples):
        def one(_):
            x = sampling.rand_charged(rng, -2)
            eta = SphereForm(fm=x)
            etap = SphereForm(fp=x.star())
            if sphere_integral(CSphereForm.real(etap.wedge(eta)), p).is_zero():
                return f"x={x}"
            y = sampling.rand_charged(rng, 0)
            f = SphereForm.function(y)
            f2 = SphereForm.two_form(y.star())
            if sphere_integral(CSphereForm.real(f2.wedge(f)), p).is_zero():
                return f"y={y}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("sph-08-nondegenerate", "pairing witnesses against the volume",
            nondegenerate)

    def laplacian_routes(rng, samples):
        def one(_):
            f = sampling.rand_charged(rng, 0)
            if sphere_laplacian(f, p) != sphere_laplacian_composed(f, p):
                return f"routes differ on {f}"
            if sphere_laplacian(f, p) != laplacian3(f, p):
                return f"restriction fails on {f}"
        return _first(one(i) for i in range(samples))
    r.check("sph-09-laplacian", "sphere Laplacian = star d star d = restriction",
            laplacian_routes)

    def spectrum(rng, samples):
        for two_j in range(0, 9, 2):
            lam = sphere_spectrum(two_j, p)
            for l in range(two_j + 1):
                phi = eigenbasis_vector(0, two_j, l)
                if sphere_laplacian(phi, p) != phi.scale(lam):
                    return f"(2J={two_j}, l={l})"
        return None
    r.check("sph-10-spectrum", "the sphere spectrum is exact", spectrum)


# ---------------------------------------------------------------------------
# bundles
# ---------------------------------------------------------------------------

def _suite_bundles(r: _Runner):
    def norms(rng, samples):
        for n in range(-4, 5):
            if Ket(n).braket() != AlgElem.one():
                return f"norm fails at n={n}"
        return None
    r.check("bun-01-norm", "every ket is normalised", norms)

    def projectors(rng, samples):
        for n in range(-4, 5):
            proj = Projector(n)
            if not proj.is_idempotent():
                return f"idempotency fails at n={n}"
            if not proj.is_selfadjoint():
                return f"selfadjointness fails at n={n}"
            if not proj.entries_coinvariant():
                return f"entries leave the base at n={n}"
        return None
    r.check("bun-02-projector", "projectors are idempotent selfadjoint over the base",
            projectors)

    def section_iso(rng, samples):
        def one(_):
            n = rng.randint(-3, 3)
            phi = sampling.rand_charged(rng, n)
            sig = section_of(phi, n)
            if equivariant_of(sig, n) != phi:
                return f"round trip fails at n={n}, phi={phi}"
            phip = sampling.rand_charged(rng, n)
            sigp = section_of(phip, n)
            if hermitian_pairing(sig, sigp) != phi * phip.star():
                return f"hermitian structure fails at n={n}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("bun-03-sections", "sections and equivariant maps are isomorphic",
            section_iso)

    def partition(rng, samples):
        def one(_):
            m = rng.randint(-3, 3)
            f = sampling.rand_charged(rng, m)
            tot = AlgElem.zero()
            for u, v in partition_of_unity(f, -2):
                if not u.is_zero() and u.winding() != 2:
                    return f"left factor off-charge at m={m}"
                if not v.is_zero() and v.winding() != m - 2:
                    return f"right factor off-charge at m={m}"
                tot = tot + u * v
            if tot != f:
                return f"decomposition fails at m={m}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("bun-04-partition", "the partition of unity decomposes every charge",
            partition)

    def galois(rng, samples):
        for n in range(-4, 5):
            ok, comp, exp = galois_witness(n)
            if not ok:
                return f"witness fails at n={n}: {comp}"
        return None
    r.check("bun-05-galois", "the canonical map hits 1 (x) (z^n - 1)", galois)


# ---------------------------------------------------------------------------
# gauge
# ---------------------------------------------------------------------------

def _suite_gauge(r: _Runner):
    p = HodgeParams()

    def projector_props(rng, samples):
        def one(_):
            conn = sampling.rand_connection(rng)
            f1 = sampling.rand_form(rng, 1)
            pi1 = connection_projector(f1.component(1), conn)
            if connection_projector(pi1.component(1), conn) != pi1:
                return "projector is not idempotent"
            n = rng.randint(-3, 3)
            phi = sampling.rand_charged(rng, n)
            lhs = connection_projector(Form.from_algebra(phi).d().component(1), conn)
            rhs = connection_one_form(-n, conn).left_mul(phi)
            if lhs != rhs:
                return f"vertical part of d differs at n={n}"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("gau-01-projector", "the vertical projector and its action on d",
            projector_props)

    def cov_routes(rng, samples):
        def one(_):
            conn = sampling.rand_connection(rng)
            n = rng.randint(-3, 3)
            phi = sampling.rand_charged(rng, n)
            d1, d2 = cov_d0(phi, conn), cov_d0_via_omega(phi, conn)
            if d1 != d2:
                return f"routes differ at n={n}"
            if not d1.is_horizontal():
                return f"derivative is not horizontal at n={n}"
            if not d1.is_zero() and d1.charge() != -n:
                return f"derivative has the wrong charge at n={n}"
            if n == 0 and d1 != Form.from_algebra(phi).d():
                return "base functions must have D = d"
        return _first(one(i) for i in range(min(samples, 25)))
    r.check("gau-02-covariant", "both covariant derivative routes agree",
            cov_routes)

    def strong(rng, samples):
        def one(_):
            conn = sampling.rand_connection(rng)
            n = rng.randint(-2, 2)
            phi = sampling.rand_charged(rng, n)
            dphi = cov_d0(phi, conn)
            if not dphi.get("z").is_zero():
                return f"vertical residue at n={n}"
            for key in ("p", "m"):
                y = dphi.get(key)
                if y.is_zero():
                    continue
                tot = AlgElem.zero()
                for u, v in partition_of_unity(y, -2):
                    tot = tot + u * v
                if tot != y:
                    return f"strong decomposition fails at n={n}"
        return _first(one(i) for i in range(min(samples, 15)))
    r.check("gau-03-strong", "every connection is strong", strong)

    def h_projectors(rng, samples):
        mono = Connection.monopole()
        for key in ALL_KEYS:
            if h_omega(Form.basis(key), mono) != h_omega_prime(Form.basis(key), mono):
                return f"monopole projectors differ on {key}"
        def one(_):
            conn = sampling.rand_connection(rng)
            if conn.is_monopole():
                return None
            w = Form.basis("pz")
            if h_omega(w, conn) == h_omega_prime(w, conn) and \
               h_omega(Form.basis("zm"), conn) == h_omega_prime(Form.basis("zm"), conn):
                return f"projectors coincide for a nonzero connection {conn!r}"
            n = rng.randint(-2, 2)
            phi = sampling.rand_charged(rng, n)
            if h_omega(Form.from_algebra(phi).d(), conn) != cov_d0(phi, conn):
                return f"h o d != D on functions at n={n}"
            h1 = sampling.rand_horizontal_one_form(rng, n)
            if h_omega(h1.d(), conn) != cov_d1(h1, conn):
                return f"h o d != D on one-forms at n={n}"
        return _first(one(i) for i in range(min(samples, 15)))
    r.check("gau-04-horizontal", "the two horizontal projectors and their derivative",
            h_projectors)

    def naive_extension(rng, samples):
        mono = Connection.monopole()
        if not all(f.is_zero() for f in braided_relation_defects(mono)):
            return "monopole defects do not vanish"
        lhs, rhs = dplus_rewrite_images(mono)
        if lhs != rhs:
            return "monopole rewriting disagrees"
        def one(_):
            conn = sampling.rand_connection(rng)
            if conn.is_monopole():
                return None
            if all(f.is_zero() for f in braided_relation_defects(conn)):
                return f"defects vanish for {conn!r}"
            lhs, rhs = dplus_rewrite_images(conn)
            if lhs == rhs:
                return f"rewriting agrees for {conn!r}"
        return _first(one(i) for i in range(min(samples, 10)))
    r.check("gau-05-naive", "the naive horizontal extension fails off the monopole",
            naive_extension)

    def potential_curvature(rng, samples):
        def one(i):
            conn = sampling.rand_connection(rng)
            n = rng.choice([1, -1, 2, -2])
            amat = gauge_potential(n, conn)
            proj = Projector(n)
            if amat.left_alg(proj.entries) != amat or amat.right_alg(proj.entries) != amat:
                return f"potential is not pinned by the projector at n={n}"
            ket = Ket(n)
            if amat.expectation(ket) != conn.base_form().scale(-lam_tilde(-n)):
                return f"potential expectation fails at n={n}"
            phi = sampling.rand_charged(rng, n, 2, 2)
            via_om = d_squared_via_omega(phi, conn)
            if via_om != curvature(n, conn).expectation(ket).left_mul(phi):
                return f"curvature mismatch at n={n}"
            if cov_d1(cov_d0(phi, conn), conn) != via_om:
                return f"second derivative mismatch at n={n}"
        return _first(one(i) for i in range(min(samples, 6)))
    r.check("gau-06-curvature", "gauge potential and curvature identities",
            potential_curvature)

    def lepro(rng, samples):
        for n in (1, -1, 2, -2):
            if projector_curvature_lhs(n) != projector_curvature_rhs(n):
                return f"projector curvature fails at n={n}"
        return None
    r.check("gau-07-lepro", "dp ^ dp p = -q^(-n-1)[n] p w+^w-", lepro)

    def gauged(rng, samples):
        for n in range(-2, 3):
            for two_j in range(abs(n), abs(n) + 5, 2):
                lam = gauged_spectrum(n, two_j, p)
                for l in range(two_j + 1):
                    phi = eigenbasis_vector(n, two_j, l)
                    if gauged_laplacian(phi, p) != phi.scale(lam):
                        return f"(n={n}, 2J={two_j}, l={l})"
            res = verify_master_relation(n, abs(n) + 4, p)
            bad = [row for row in res if not row["ok"]]
            if bad:
                return f"master relation fails at n={n}: {bad[:3]}"
        return None
    r.check("gau-08-gauged", "gauged spectrum and the master relation", gauged)


# ---------------------------------------------------------------------------
# classical limit
# ---------------------------------------------------------------------------

#: commutative structure constants in the (e, f, h) basis:
#: [h,e] = e, [h,f] = -f, [e,f] = 2h
_CLASSICAL_BRACKETS = {
    ("h", "e"): {"e": Fraction(1)},
    ("h", "f"): {"f": Fraction(-1)},
    ("e", "f"): {"h": Fraction(2)},
}


def _maurer_cartan_oracle():
    """d w^a = -(1/2) C^a_bc w^b ^ w^c from the brackets above."""
    order = ("e", "f", "h")
    out = {a: {} for a in order}
    for (b, c), img in _CLASSICAL_BRACKETS.items():
        for a, coeff in img.items():
            # contribution -coeff * w^b ^ w^c  (antisymmetrised pair)
            key = (b, c) if order.index(b) < order.index(c) else (c, b)
            sgn = 1 if key == (b, c) else -1
            out[a][key] = out[a].get(key, Fraction(0)) - sgn * coeff
    return {a: {k: v for k, v in d.items() if v} for a, d in out.items()}


#: dictionary from the invariant basis to the commutative one:
#: w+ -> w_e, w- -> w_f, wz -> -(1/2) w_h
_DICT_1FORM = {"p": ("e", Fraction(1)), "m": ("f", Fraction(1)),
               "z": ("h", Fraction(-1, 2))}


def _classical_2form(key: str, value: Fraction):
    """Translate a canonical 2-form component at q=1 into the e/f/h basis."""
    pairs = {"mp": ("m", "p"), "pz": ("p", "z"), "zm": ("z", "m")}[key]
    (n1, c1), (n2, c2) = _DICT_1FORM[pairs[0]], _DICT_1FORM[pairs[1]]
    coeff = value * c1 * c2
    order = ("e", "f", "h")
    if order.index(n1) < order.index(n2):
        return (n1, n2), coeff
    return (n2, n1), -coeff


def _suite_classical(r: _Runner):
    p = HodgeParams()

    def braidings(rng, samples):
        # every mixed relation collapses to plain anticommutation at q=1
        for s, t in (("m", "p"), ("m", "z"), ("p", "z")):
            c_st, k_st = reduce_word((s, t))
            c_ts, k_ts = reduce_word((t, s))
            if k_st != k_ts:
                return f"pair ({s},{t}) reduces to different keys"
            if c_st.limit_at_one() + c_ts.limit_at_one() != 0:
                return f"pair ({s},{t}) does not anticommute at q=1"
        return None
    r.check("cla-01-braidings", "exchange coefficients collapse to signs at q=1",
            braidings)

    def structure_constants(rng, samples):
        oracle = _maurer_cartan_oracle()
        for key1, (name, scale) in _DICT_1FORM.items():
            translated = {}
            for key2, coeff in Form.basis(key1).d().comp.items():
                value = coeff.terms[Monomial(0, 0, 0)].as_scalar().limit_at_one()
                pair, v = _classical_2form(key2, value / scale)
                translated[pair] = translated.get(pair, Fraction(0)) + v
            translated = {k: v for k, v in translated.items() if v}
            if translated != oracle[name]:
                return f"d w_{name}: got {translated}, oracle {oracle[name]}"
        return None
    r.check("cla-02-structure", "exterior derivatives match the Maurer-Cartan oracle",
            structure_constants)

    def actions_at_one(rng, samples):
        gens = {"a": GEN_A, "A": GEN_AS, "c": GEN_C, "C": GEN_CS}
        e_table = {"a": -GEN_CS, "A": AlgElem.zero(), "c": GEN_AS, "C": AlgElem.zero()}
        f_table = {"a": AlgElem.zero(), "A": GEN_C, "c": AlgElem.zero(), "C": -GEN_A}
        h_table = {"a": GEN_A.scale(Fraction(-1, 2)), "A": GEN_AS.scale(Fraction(1, 2)),
                   "c": GEN_C.scale(Fraction(-1, 2)), "C": GEN_CS.scale(Fraction(1, 2))}
        for name, g in gens.items():
            if x_plus(g).evaluate(1) != e_table[name].evaluate(1):
                return f"raising field at {name}"
            if x_minus(g).evaluate(1) != f_table[name].evaluate(1):
                return f"lowering field at {name}"
            if x_z(g).evaluate(1) != h_table[name].scale(-2).evaluate(1):
                return f"vertical field at {name}"
        return None
    r.check("cla-03-calculus", "vector fields collapse to the commutative derivations",
            actions_at_one)

    def spectra(rng, samples):
        nu1 = p.nu.limit_at_one()
        beta1 = p.beta.limit_at_one()
        gamma1 = p.gamma.limit_at_one()
        for n in range(-3, 4):
            for two_j in range(abs(n), abs(n) + 7, 2):
                jm = Fraction(two_j - n, 2)
                jp = Fraction(two_j + n + 2, 2)
                oracle = -(nu1 * jm * jp + beta1 * (jm * jp + n)
                           + gamma1 * n * n)
                if spectrum3(n, two_j, p).limit_at_one() != oracle:
                    return f"total spectrum at (n={n}, 2J={two_j})"
                oracle_g = -nu1 * (2 * jm * jp + n)
                if gauged_spectrum(n, two_j, p).limit_at_one() != oracle_g:
                    return f"gauged spectrum at (n={n}, 2J={two_j})"
            if n == 0:
                for two_j in range(0, 9, 2):
                    jj = Fraction(two_j, 2)
                    if sphere_spectrum(two_j, p).limit_at_one() != -2 * nu1 * jj * (jj + 1):
                        return f"sphere spectrum at 2J={two_j}"
        return None
    r.check("cla-04-spectra", "spectra at q=1 equal the bracket-free substitution",
            spectra)


_SUITE_BUILDERS = {
    "algebra": _suite_algebra,
    "actions": _suite_actions,
    "calculus": _suite_calculus,
    "hodge": _suite_hodge,
    "sphere": _suite_sphere,
    "bundles": _suite_bundles,
    "gauge": _suite_gauge,
    "classical": _suite_classical,
}


def run_suite(name: str, seed: int = 0, samples: int = 30) -> SuiteReport:
    if name not in _SUITE_BUILDERS:
        raise KeyError(f"unknown suite {name!r}; choose from {SUITES} or 'all'")
    runner = _Runner(name, seed, samples)
    _SUITE_BUILDERS[name](runner)
    return runner.report


def run_all(seed: int = 0, samples: int = 30):
    return [run_suite(name, seed, samples) for name in SUITES]
