"""Equivariant line bundles: kets, projectors, section isomorphisms, and
the constructive principality witness.

The ket of winding n has |n|+1 components whose coefficients carry a
formal square root of the combinatorial weight; every identity closes
because radicals always meet their partner, and the square-free
normaliser detects the pairing syntactically.
"""

from __future__ import annotations

from functools import lru_cache

from .actions import winding_cap
from .algebra import AlgElem, Monomial, TensorElem
from .scalars import ONE, RAD_ONE, RadScalar, ScalarQ


@lru_cache(maxsize=None)
def ket_weight(n: int, mu: int) -> ScalarQ:
    """The exact rational weight under the square root of component mu."""
    one = ScalarQ.from_fraction(1)
    if n >= 0:
        if not 0 <= mu <= n:
            raise ValueError(f"component {mu} outside 0..{n}")
        w = ScalarQ.q_power(2 * mu)
        for j in range(mu):
            w = w * (one - ScalarQ.q_power(-2 * (n - j)))
            w = w / (one - ScalarQ.q_power(-2 * (j + 1)))
        return w
    size = -n
    if not 0 <= mu <= size:
        raise ValueError(f"component {mu} outside 0..{size}")
    w = one
    for j in range(size - mu):
        w = w * (one - ScalarQ.q_power(2 * (size - j)))
        w = w / (one - ScalarQ.q_power(2 * (j + 1)))
    return w


class Ket:
    """|Psi(n)>: a normalised column over the charge-n module."""

    __slots__ = ("n", "components")

    def __init__(self, n: int):
        if abs(n) > winding_cap():
            raise ValueError(f"winding {n} exceeds cap {winding_cap()}")
        self.n = n
        comps = []
        for mu in range(abs(n) + 1):
            coeff = RadScalar.sqrt(ket_weight(n, mu))
            if n >= 0:
                word = "C" * mu + "A" * (n - mu)        # c*^mu a*^(n-mu)
            else:
                word = "c" * (-n - mu) + "a" * mu       # c^(|n|-mu) a^mu
            comps.append(AlgElem.from_letters(word, coeff))
        self.components = comps

    def __len__(self):
        return len(self.components)

    def bra(self):
        """Component stars, same order."""
        return [x.star() for x in self.components]

    def braket(self) -> AlgElem:
        """<Psi|Psi>; equals 1 by the sphere relation."""
        tot = AlgElem.zero()
        for x in self.components:
            tot = tot + x.star() * x
        return tot

    def __repr__(self):
        return f"Ket(n={self.n}, components={[str(x) for x in self.components]})"


def make_ket(n: int) -> Ket:
    return Ket(n)


class Projector:
    """|Psi><Psi|: an idempotent selfadjoint matrix over the sphere algebra."""

    __slots__ = ("n", "entries")

    def __init__(self, n: int):
        ket = Ket(n)
        bra = ket.bra()
        size = len(ket)
        self.n = n
        self.entries = [[ket.components[mu] * bra[nu] for nu in range(size)]
                        for mu in range(size)]

    def size(self) -> int:
        return len(self.entries)

    def matmul(self, other: "Projector"):
        size = self.size()
        out = []
        for mu in range(size):
            row = []
            for nu in range(size):
                tot = AlgElem.zero()
                for rho in range(size):
                    tot = tot + self.entries[mu][rho] * other.entries[rho][nu]
                row.append(tot)
            out.append(row)
        return out

    def is_idempotent(self) -> bool:
        return self.matmul(self) == self.entries

    def is_selfadjoint(self) -> bool:
        size = self.size()
        return all(self.entries[mu][nu].star() == self.entries[nu][mu]
                   for mu in range(size) for nu in range(size))

    def entries_coinvariant(self) -> bool:
        return all(x.is_coinvariant() for row in self.entries for x in row)

    def to_json(self):
        return [[x.to_json() for x in row] for row in self.entries]


def make_projector(n: int) -> Projector:
    return Projector(n)


# ---------------------------------------------------------------------------
# sections <-> equivariant elements
# ---------------------------------------------------------------------------

def section_of(phi: AlgElem, n: int):
    """<sigma_phi| = phi <Psi(n)|, a row of coinvariant elements."""
    if not phi.is_zero():
        for m in phi.terms:
            if m.winding() != n:
                raise ValueError(f"element has winding {m.winding()}, expected {n}")
    return [phi * comp for comp in Ket(n).bra()]


def equivariant_of(sigma, n: int, check_membership: bool = True) -> AlgElem:
    """<sigma|Psi(n)>: inverse of section_of on the image of the projector."""
    ket = Ket(n)
    if len(sigma) != len(ket):
        raise ValueError(f"row has {len(sigma)} components, expected {len(ket)}")
    if check_membership:
        proj = Projector(n)
        size = len(sigma)
        for nu in range(size):
            tot = AlgElem.zero()
            for mu in range(size):
                tot = tot + sigma[mu] * proj.entries[mu][nu]
            if tot != sigma[nu]:
                raise ValueError("row is not in the image of the projector")
    tot = AlgElem.zero()
    for s, comp in zip(sigma, ket.components):
        tot = tot + s * comp
    return tot


def hermitian_pairing(sigma, sigma_prime) -> AlgElem:
    """{<sigma|; <sigma'|} = sum_mu sigma_mu (sigma'_mu)*."""
    tot = AlgElem.zero()
    for s, sp in zip(sigma, sigma_prime):
        tot = tot + s * sp.star()
    return tot


def partition_of_unity(f: AlgElem, n: int = -2):
    """f = sum_mu u_mu v_mu with u_mu = (Psi(n)_mu)* and v_mu = Psi(n)_mu f."""
    ket = Ket(n)
    return [(comp.star(), comp * f) for comp in ket.components]


# ---------------------------------------------------------------------------
# universal one-forms and the principality witness
# ---------------------------------------------------------------------------

class UniversalOneForm:
    """An element of the kernel of multiplication inside the tensor square."""

    __slots__ = ("tensor",)

    def __init__(self, tensor: TensorElem, check: bool = True):
        if check and not tensor.multiply_out().is_zero():
            raise ValueError("not a universal one-form: multiplication is nonzero")
        self.tensor = tensor

    @staticmethod
    def delta(x: AlgElem) -> "UniversalOneForm":
        one = AlgElem.one()
        return UniversalOneForm(TensorElem.of(one, x) - TensorElem.of(x, one),
                                check=False)

    def __add__(self, other):
        return UniversalOneForm(self.tensor + other.tensor, check=False)

    def __sub__(self, other):
        return UniversalOneForm(self.tensor - other.tensor, check=False)

    def left_mul(self, x: AlgElem) -> "UniversalOneForm":
        return UniversalOneForm(TensorElem.of(x, AlgElem.one()) * self.tensor,
                                check=False)


def canonical_map(uof: UniversalOneForm) -> dict:
    """chi(x' (x) x) = x' x (x) z^k per circle charge k of the right leg.

    The result lives in the algebra tensored with the circle Laurent ring,
    returned as {k: AlgElem}.
    """
    out: dict = {}
    for (ml, mr), coeff in uof.tensor.terms.items():
        k = -mr.winding()
        prod = AlgElem.monomial(ml, coeff) * AlgElem.monomial(mr)
        if prod.is_zero():
            continue
        cur = out.get(k)
        cur = prod if cur is None else cur + prod
        if cur.is_zero():
            out.pop(k, None)
        else:
            out[k] = cur
    return {k: v for k, v in sorted(out.items()) if not v.is_zero()}


def galois_witness(n: int):
    """Check chi(<Psi(-n)| delta Psi(-n)>) = 1 (x) (z^n - 1).

    Returns (ok, computed, expected) with the two sides as {k: AlgElem}.
    """
    ket = Ket(-n)
    gamma = None
    for comp in ket.components:
        term = UniversalOneForm.delta(comp).left_mul(comp.star())
        gamma = term if gamma is None else gamma + term
    # gamma really is a universal one-form: sum of products vanishes
    assert gamma.tensor.multiply_out().is_zero()
    computed = canonical_map(gamma)
    one = AlgElem.one()
    expected = {} if n == 0 else {0: -one, n: one}
    return computed == expected, computed, expected
