"""Seeded random generators for property checks.

Everything is driven by a caller-supplied random.Random so every
failure is replayable from (seed, samples).  Exponents and term counts
stay small: the identities under test are polynomial, so small windows
already separate right from wrong, and exact arithmetic stays quick.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .algebra import AlgElem, Monomial
from .forms import Form
from .scalars import RadScalar


def rand_fraction(rng: random.Random) -> Fraction:
    num = rng.randint(-4, 4)
    if num == 0:
        num = 1
    return Fraction(num, rng.randint(1, 3))


def rand_monomial(rng: random.Random, max_exp: int = 4) -> Monomial:
    return Monomial(rng.randint(-max_exp, max_exp),
                    rng.randint(0, max_exp),
                    rng.randint(0, max_exp))


def rand_elem(rng: random.Random, max_terms: int = 5, max_exp: int = 4) -> AlgElem:
    out = AlgElem.zero()
    for _ in range(rng.randint(1, max_terms)):
        out = out + AlgElem.monomial(rand_monomial(rng, max_exp),
                                     RadScalar.from_scalar(rand_fraction(rng)))
    return out


def rand_word(rng: random.Random, max_len: int = 8):
    return [rng.choice("aAcC") for _ in range(rng.randint(0, max_len))]


def rand_charged(rng: random.Random, n: int, max_terms: int = 3,
                 max_exp: int = 3) -> AlgElem:
    """A nonzero element of the charge-n module, built monomial by monomial."""
    out = AlgElem.zero()
    for _ in range(rng.randint(1, max_terms)):
        c = rng.randint(0, max_exp)
        cs = rng.randint(0, max_exp)
        a = cs - c - n
        if abs(a) > max_exp + abs(n):
            continue
        out = out + AlgElem.monomial(Monomial(a, c, cs),
                                     RadScalar.from_scalar(rand_fraction(rng)))
    if out.is_zero():
        a = -n
        out = AlgElem.monomial(Monomial(a, 0, 0))
    return out


def rand_form(rng: random.Random, degree: int, max_exp: int = 3) -> Form:
    keys = {0: ("1",), 1: ("m", "p", "z"), 2: ("mp", "pz", "zm"),
            3: ("top",)}[degree]
    return Form({k: rand_elem(rng, 3, max_exp) for k in keys})


def rand_horizontal_one_form(rng: random.Random, n: int) -> Form:
    """A horizontal one-form of circle charge -n."""
    return Form({"p": rand_charged(rng, n + 2), "m": rand_charged(rng, n - 2)})


def rand_connection(rng: random.Random):
    from .gauge import Connection
    return Connection(rand_charged(rng, 2), rand_charged(rng, -2))
