"""Parameters, generators and a brute-force order oracle for the semigroup.

A 4-generated pseudo-symmetric semigroup is pinned down by five integers
``alpha1..alpha4, alpha21``.  The order of an element ``s`` of the semigroup
is the largest number of generators summing to ``s``; counting elements by
order gives the Hilbert function of the associated graded ring.
"""

from dataclasses import dataclass, fields
from math import gcd

from .errors import InvalidParameters, checked


@dataclass(frozen=True)
class PseudoSymParams:
    alpha1: int
    alpha2: int
    alpha3: int
    alpha4: int
    alpha21: int

    def __post_init__(self):
        for name in ("alpha1", "alpha2", "alpha3", "alpha4"):
            if getattr(self, name) <= 1:
                raise InvalidParameters(f"{name} must be > 1")
        if not 0 < self.alpha21 < self.alpha1 - 1:
            raise InvalidParameters("need 0 < alpha21 < alpha1 - 1")

    def astuple(self):
        return tuple(getattr(self, f.name) for f in fields(self))


@dataclass(frozen=True)
class GeneratorTuple:
    n1: int
    n2: int
    n3: int
    n4: int

    def __iter__(self):
        return iter((self.n1, self.n2, self.n3, self.n4))


@dataclass(frozen=True)
class ConditionReport:
    cond1: bool
    cond2: bool
    cond3: bool
    cond4: bool
    ordered: bool
    coprime: bool

    @property
    def valid(self):
        return all(getattr(self, f.name) for f in fields(self))

    def failing(self):
        return [f.name for f in fields(self) if not getattr(self, f.name)]


def derive_generators(p):
    """Komeda's formulas for the four generators."""
    a1, a2, a3, a4, a21 = p.astuple()
    n1 = checked(a2 * a3 * (a4 - 1) + 1)
    n2 = checked(a21 * a3 * a4 + (a1 - a21 - 1) * (a3 - 1) + a3)
    n3 = checked(a1 * a4 + (a1 - a21 - 1) * (a2 - 1) * (a4 - 1) - a4 + 1)
    n4 = checked(a1 * a2 * (a3 - 1) + a21 * (a2 - 1) + a2)
    return GeneratorTuple(n1, n2, n3, n4)


def check_conditions(p):
    a1, a2, a3, a4, a21 = p.astuple()
    g = derive_generators(p)
    return ConditionReport(
        cond1=a1 > a4,
        cond2=a3 < a1 - a21,
        cond3=a4 < a2 + a3 - 1,
        cond4=a2 > a21 + 1,
        ordered=g.n1 < g.n2 < g.n3 < g.n4,
        coprime=gcd(g.n1, g.n2, g.n3, g.n4) == 1,
    )


@dataclass(frozen=True)
class OrderTable:
    """``ord[s]`` is the maximal factorization length of ``s``, or None."""

    bound: int
    ord: tuple

    def __getitem__(self, s):
        return self.ord[s]

    def in_semigroup(self, s):
        return self.ord[s] is not None


def compute_order_table(gens, bound):
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    gens = sorted(set(gens))
    table = [None] * (bound + 1)
    table[0] = 0
    for s in range(1, bound + 1):
        best = None
        for n in gens:
            if n > s:
                break
            prev = table[s - n]
            if prev is not None and (best is None or prev + 1 > best):
                best = prev + 1
        table[s] = best
    return OrderTable(bound, tuple(table))


def oracle_hilbert(gens, N):
    """H(0..N) by counting semigroup elements of each exact order.

    Every element of order n is a sum of n generators, hence at most
    ``n * max(gens)``; tabulating to ``N * max(gens)`` sees all of them.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    gens = tuple(gens)
    table = compute_order_table(gens, N * max(gens))
    H = [0] * (N + 1)
    for value in table.ord:
        if value is not None and value <= N:
            H[value] += 1
    return H
