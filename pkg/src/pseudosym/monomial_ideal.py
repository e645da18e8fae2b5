"""Monomial ideals and the Bayer-Stillman Hilbert numerator recursion."""

import sys
from dataclasses import dataclass

from .errors import InternalLimit
from .local_algebra import Monomial
from .unipoly import ONE, UniPoly


def minimalize(gens):
    """Drop duplicates and every generator divisible by another one."""
    gens = sorted({Monomial(m) for m in gens}, key=lambda m: (m.degree, tuple(m)))
    kept = []
    for m in gens:
        if not any(k.divides(m) for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    gens: tuple

    def __init__(self, gens=()):
        object.__setattr__(self, "gens", minimalize(gens))

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def contains(self, m):
        return any(g.divides(m) for g in self.gens)


def colon(I, w):
    """``I : w`` generated by ``m / gcd(m, w)``."""
    w = Monomial(w)
    return MonomialIdeal(m / m.gcd(w) for m in I.gens)


def _one_minus_t_pow(d):
    return ONE - UniPoly.monomial(d)


def _pairwise_coprime(gens):
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if not gens[i].coprime(gens[j]):
                return False
    return True


def _degree_pivot(gens):
    # Highest degree first; ties broken by exponent tuple for determinism.
    return max(gens, key=lambda m: (m.degree, tuple(m)))


class _Recursion:
    def __init__(self, pivot, max_depth):
        self.pivot = pivot
        self.max_depth = max_depth
        self.memo = {}

    def run(self, gens, depth=0):
        if depth > self.max_depth:
            raise InternalLimit(f"Bayer-Stillman depth exceeded {self.max_depth}")
        key = gens
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if _pairwise_coprime(gens):
            result = ONE
            for m in gens:
                result = result * _one_minus_t_pow(m.degree)
        else:
            w = self.pivot(gens)
            rest = tuple(m for m in gens if m != w)
            result = self.step(rest, w, depth)
        self.memo[key] = result
        return result

    def step(self, rest, w, depth):
        # P(<J, w>) = P(J) - t^deg(w) P(J : w)
        J = MonomialIdeal(rest)
        quotient = colon(J, w)
        return (self.run(J.gens, depth + 1)
                - self.run(quotient.gens, depth + 1).shift(w.degree))


def bayer_stillman_P(I, pivot=None, sequence=None, max_depth=10_000):
    """Numerator of the Hilbert series of ``A / I`` over ``(1 - t)^nvars``.

    ``pivot`` picks the generator to split off from a generator tuple
    (default: largest degree).  ``sequence`` optionally fixes the first
    generators to peel off at the top level, in order; colon ideals met on
    the way always use ``pivot``.
    """
    if not isinstance(I, MonomialIdeal):
        I = MonomialIdeal(I)
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * max_depth + 100))
    try:
        rec = _Recursion(pivot or _degree_pivot, max_depth)
        if not sequence:
            return rec.run(I.gens)
        gens = list(I.gens)
        result = UniPoly()
        # Top-level chain: P(I) = P(I - w1) - t^d1 P((I - w1) : w1), then
        # the same on I - w1 with w2, and so on.
        for w in sequence:
            w = Monomial(w)
            if w not in gens:
                raise ValueError(f"{w} is not a minimal generator")
            gens.remove(w)
            J = MonomialIdeal(gens)
            result = result - rec.run(colon(J, w).gens).shift(w.degree)
        return result + rec.run(MonomialIdeal(gens).gens)
    finally:
        sys.setrecursionlimit(limit)


def staircase_hilbert(I, nvars, N):
    """H(0..N) of ``A / I`` by listing standard monomials degree by degree."""
    I = I if isinstance(I, MonomialIdeal) else MonomialIdeal(I)
    H = []
    for d in range(N + 1):
        H.append(sum(1 for e in _compositions(d, nvars) if not I.contains(e)))
    return H


def _compositions(d, k):
    if k == 1:
        yield Monomial((d,))
        return
    for first in range(d + 1):
        for rest in _compositions(d - first, k - 1):
            yield Monomial((first,) + tuple(rest))
