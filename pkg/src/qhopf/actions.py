"""Left and right actions of the quantized enveloping algebra U_q(su(2)).

The four generators K, K^-1, E, F act on the coordinate algebra through
the dual pairing.  E and F are implemented by the coproduct-twisted
Leibniz rule applied letter by letter,

    E |> (x y) = (E |> x)(K |> y) + (K^-1 |> x)(E |> y),

seeded by the generator values; the closed forms on pure powers live in
the test suite as an independent oracle.  The dual pairing itself is a
second, independent implementation (coproduct recursion), so the
compatibility law  X |> x = x_(1) <X, x_(2)>  is a genuine cross-check.

Half-integer spins are carried as doubled integers throughout.
"""

from __future__ import annotations

import os
from functools import lru_cache

from .algebra import (GEN_A, GEN_AS, GEN_C, GEN_CS, AlgElem, Monomial,
                      MONO_ONE)
from .scalars import ONE, ZERO, RadScalar, ScalarQ, qnum2

_Q = ScalarQ.q_power(1)
_QI = ScalarQ.q_power(-1)

#: left-action seeds on single letters; missing entries act as zero
_LEFT_SEEDS = {
    "E": {"a": GEN_CS.scale(-_Q), "c": GEN_AS},
    "F": {"A": GEN_C, "C": GEN_A.scale(-_QI)},
}

#: right-action seeds
_RIGHT_SEEDS = {
    "E": {"A": GEN_CS.scale(-_Q), "c": GEN_A},
    "F": {"a": GEN_C, "C": GEN_AS.scale(-_QI)},
}

_LETTER_MONO = {
    "a": Monomial(1, 0, 0), "A": Monomial(-1, 0, 0),
    "c": Monomial(0, 1, 0), "C": Monomial(0, 0, 1),
}

# K |> letter = s^w letter; letter <| K = s^rw letter
_LEFT_W = {"a": -1, "A": 1, "c": -1, "C": 1}
_RIGHT_W = {"a": -1, "A": 1, "c": 1, "C": -1}


def winding_cap() -> int:
    return int(os.environ.get("QHOPF_CAP", "8"))


def _mono_from_letters(letters) -> Monomial:
    a = c = cs = 0
    for l in letters:
        if l == "a":
            a += 1
        elif l == "A":
            a -= 1
        elif l == "c":
            c += 1
        else:
            cs += 1
    return Monomial(a, c, cs)


def _act_mono(seeds, weights, m: Monomial, left_side: bool) -> AlgElem:
    """Twisted Leibniz sum over letter positions of a normal monomial."""
    letters = m.letters()
    total_w = sum(weights[l] for l in letters)
    out = AlgElem.zero()
    w_before = 0
    for p, letter in enumerate(letters):
        w = weights[letter]
        seed = seeds.get(letter)
        if seed is not None:
            w_after = total_w - w_before - w
            # prefix under K^-1, suffix under K (both sides share this shape)
            factor = ScalarQ.s_power(w_after - w_before)
            prefix = AlgElem.monomial(_mono_from_letters(letters[:p]))
            suffix = AlgElem.monomial(_mono_from_letters(letters[p + 1:]))
            out = out + (prefix * seed * suffix).scale(factor)
        w_before += w
    return out


def act_left(gen: str, x: AlgElem) -> AlgElem:
    """Left action of a single generator: 'K', 'k' (inverse), 'E' or 'F'."""
    if gen in ("K", "k"):
        sign = 1 if gen == "K" else -1
        out = AlgElem.zero()
        for m, c in x.terms.items():
            out = out + AlgElem.monomial(m, c * ScalarQ.s_power(sign * m.winding()))
        return out
    if gen not in ("E", "F"):
        raise ValueError(f"unknown generator {gen!r}")
    out = AlgElem.zero()
    for m, c in x.terms.items():
        out = out + _act_mono(_LEFT_SEEDS[gen], _LEFT_W, m, True).scale(c)
    return out


def act_right(x: AlgElem, gen: str) -> AlgElem:
    """Right action of a single generator."""
    if gen in ("K", "k"):
        sign = 1 if gen == "K" else -1
        out = AlgElem.zero()
        for m, c in x.terms.items():
            rw = sum(_RIGHT_W[l] for l in m.letters())
            out = out + AlgElem.monomial(m, c * ScalarQ.s_power(sign * rw))
        return out
    if gen not in ("E", "F"):
        raise ValueError(f"unknown generator {gen!r}")
    out = AlgElem.zero()
    for m, c in x.terms.items():
        out = out + _act_mono(_RIGHT_SEEDS[gen], _RIGHT_W, m, False).scale(c)
    return out


def act_word_left(word, x: AlgElem) -> AlgElem:
    """(g1 g2 ... gk) |> x = g1 |> (g2 |> ( ... |> x))."""
    for gen in reversed(list(word)):
        x = act_left(gen, x)
    return x


def act_word_right(x: AlgElem, word) -> AlgElem:
    """x <| (g1 g2 ... gk) = ((x <| g1) <| g2) ..."""
    for gen in word:
        x = act_right(x, gen)
    return x


class UqWord:
    """A scaled word in the generators, acting by composition."""

    __slots__ = ("word", "scale")

    def __init__(self, word, scale=ONE):
        self.word = tuple(word)
        self.scale = scale if isinstance(scale, RadScalar) else RadScalar.from_scalar(scale)

    def left(self, x: AlgElem) -> AlgElem:
        return act_word_left(self.word, x).scale(self.scale)

    def right(self, x: AlgElem) -> AlgElem:
        return act_word_right(x, self.word).scale(self.scale)

    def __repr__(self):
        return f"UqWord({''.join(self.word)!r}, scale={self.scale})"


# ---------------------------------------------------------------------------
# dual pairing (independent of the actions: coproduct recursion)
# ---------------------------------------------------------------------------

_GEN_PAIR = {
    ("K", "a"): ScalarQ.s_power(-1), ("K", "A"): ScalarQ.s_power(1),
    ("k", "a"): ScalarQ.s_power(1), ("k", "A"): ScalarQ.s_power(-1),
    ("E", "c"): ONE, ("F", "C"): -_QI,
}

_GEN_COUNIT = {"K": ONE, "k": ONE, "E": ZERO, "F": ZERO}


def _pair_gen_mono(gen: str, m: Monomial) -> ScalarQ:
    letters = m.letters()
    if not letters:
        return _GEN_COUNIT[gen]
    if gen in ("K", "k"):
        tot = ONE
        for l in letters:
            v = _GEN_PAIR.get((gen, l))
            if v is None:
                return ZERO
            tot = tot * v
        return tot
    # Delta E = E (x) K + K^-1 (x) E, same shape for F
    inv = {"K": "k", "k": "K"}
    tot = ZERO
    for p, letter in enumerate(letters):
        v = _GEN_PAIR.get((gen, letter))
        if v is None:
            continue
        pre = ONE
        for l in letters[:p]:
            w = _GEN_PAIR.get(("k", l))
            if w is None:
                pre = ZERO
                break
            pre = pre * w
        if pre.is_zero():
            continue
        post = ONE
        for l in letters[p + 1:]:
            w = _GEN_PAIR.get(("K", l))
            if w is None:
                post = ZERO
                break
            post = post * w
        tot = tot + pre * v * post
    return tot


def pairing(word, x: AlgElem) -> RadScalar:
    """<g1 g2 ... gk, x> extended through the coproducts on both sides."""
    word = list(word)
    if not word:
        return x.counit()
    if len(word) == 1:
        tot = RadScalar.from_scalar(0)
        for m, c in x.terms.items():
            v = _pair_gen_mono(word[0], m)
            if not v.is_zero():
                tot = tot + c * v
        return tot
    tot = RadScalar.from_scalar(0)
    for (ml, mr), c in x.coproduct().terms.items():
        v = _pair_gen_mono(word[0], ml)
        if v.is_zero():
            continue
        rest = pairing(word[1:], AlgElem.monomial(mr))
        tot = tot + c * v * rest
    return tot


# ---------------------------------------------------------------------------
# Casimir
# ---------------------------------------------------------------------------

_CAS_SCALE = ((_Q - _QI) ** 2).inv()
_QUARTER = ScalarQ.from_fraction(1) / 4


def casimir_left(x: AlgElem) -> AlgElem:
    """(q K^2 - 2 + q^-1 K^-2)/(q - q^-1)^2 + FE - 1/4, acting from the left."""
    k2 = act_word_left("KK", x)
    km2 = act_word_left("kk", x)
    quad = (k2.scale(_Q) - x.scale(2) + km2.scale(_QI)).scale(_CAS_SCALE)
    return quad + act_left("F", act_left("E", x)) - x.scale(_QUARTER)


def casimir_right(x: AlgElem) -> AlgElem:
    k2 = act_word_right(x, "KK")
    km2 = act_word_right(x, "kk")
    quad = (k2.scale(_Q) - x.scale(2) + km2.scale(_QI)).scale(_CAS_SCALE)
    return quad + act_right(act_right(x, "F"), "E") - x.scale(_QUARTER)


def casimir_eigenvalue(p: int) -> ScalarQ:
    """[(p+1)/2]^2 - 1/4 on the (p+1)^2-dimensional block."""
    return qnum2(p + 1) ** 2 - _QUARTER


# ---------------------------------------------------------------------------
# Peter-Weyl boxes
# ---------------------------------------------------------------------------

def pw_element(p: int, t: int, r: int) -> AlgElem:
    """w_{p:t,r} = F^t |> a*^p <| E^r."""
    if not (0 <= t <= p and 0 <= r <= p):
        raise ValueError(f"indices out of range: p={p}, t={t}, r={r}")
    x = AlgElem.monomial(Monomial(-p, 0, 0))
    for _ in range(t):
        x = act_left("F", x)
    for _ in range(r):
        x = act_right(x, "E")
    return x


def pw_basis(p: int):
    """The full (p+1) x (p+1) box as nested lists indexed [t][r]."""
    cap = winding_cap()
    if p > cap:
        raise ValueError(f"box size {p} exceeds cap {cap}")
    rows = []
    x = AlgElem.monomial(Monomial(-p, 0, 0))
    col = x
    for _t in range(p + 1):
        row = [col]
        cur = col
        for _r in range(p):
            cur = act_right(cur, "E")
            row.append(cur)
        rows.append(row)
        col = act_left("F", col)
    return rows


def eigenbasis_vector(n: int, two_j: int, l: int) -> AlgElem:
    """The joint eigenvector with circle charge n, spin two_j/2, slot l.

    Raw iterated actions, no unit normalisation: the spectral checks
    are eigenvalue checks and do not need one.
    """
    if two_j < abs(n) or (two_j - n) % 2 != 0:
        raise ValueError(f"invalid spin/charge: n={n}, 2J={two_j}")
    if not (0 <= l <= two_j):
        raise ValueError(f"slot l={l} outside 0..{two_j}")
    t = (two_j - n) // 2
    return pw_element(two_j, t, l)
