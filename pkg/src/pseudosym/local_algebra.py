"""Binomial arithmetic under a local degree order.

Every polynomial handled here is a difference of two monomials with
coefficients +1 and -1.  That set is closed under s-polynomials and Mora
reduction, so no coefficient arithmetic is needed; zero is ``None``.

The order is negative degree lexicographic with X1 > X2 > X3 > X4: lower
total degree is larger, and on equal degree the monomial with the larger
exponent in the first differing variable is larger.  The unit monomial is
the maximum.  The lex tie-break is the one under which the closed leading
monomial formulas hold when both sides of a binomial share a degree.
"""

from dataclasses import dataclass
import re

from .errors import InternalLimit, NonBinomialEscape, checked


class Monomial(tuple):
    """Exponent vector.  Four entries in the curve setting, any length otherwise."""

    __slots__ = ()

    def __new__(cls, exps):
        exps = tuple(int(e) for e in exps)
        if any(e < 0 for e in exps):
            raise NonBinomialEscape(f"negative exponent in {exps}")
        return super().__new__(cls, exps)

    @classmethod
    def unit(cls, nvars=4):
        return cls((0,) * nvars)

    @property
    def degree(self):
        return sum(self)

    def divides(self, other):
        return all(a <= b for a, b in zip(self, other))

    def __mul__(self, other):
        return Monomial(a + b for a, b in zip(self, other))

    def __truediv__(self, other):
        return Monomial(a - b for a, b in zip(self, other))

    def lcm(self, other):
        return Monomial(max(a, b) for a, b in zip(self, other))

    def gcd(self, other):
        return Monomial(min(a, b) for a, b in zip(self, other))

    def coprime(self, other):
        return all(a == 0 or b == 0 for a, b in zip(self, other))

    def __str__(self):
        return render_monomial(self)

    def __repr__(self):
        return f"Monomial({tuple(self)})"


def order_key(m):
    """Sort key: larger key means larger in the local order."""
    return (-sum(m),) + tuple(m)


def compare(a, b):
    """Return -1, 0 or 1 as ``a`` is smaller, equal or greater than ``b``."""
    ka, kb = order_key(a), order_key(b)
    return (ka > kb) - (ka < kb)


@dataclass(frozen=True)
class Binomial:
    """``lead - tail`` with ``lead`` the larger monomial in the local order."""

    lead: Monomial
    tail: Monomial

    def __post_init__(self):
        if self.lead == self.tail:
            raise NonBinomialEscape("binomial with equal monomials is zero")
        if compare(self.lead, self.tail) < 0:
            raise ValueError("lead must be the larger monomial; use binomial()")

    @property
    def ecart(self):
        return self.tail.degree - self.lead.degree

    @property
    def monomials(self):
        return (self.lead, self.tail)

    def scale(self, m):
        return Binomial(self.lead * m, self.tail * m)

    def __str__(self):
        return f"{self.lead} - {self.tail}"


def binomial(a, b):
    """Orient ``a - b`` (up to sign) so the lead is the larger monomial; None if zero."""
    a, b = Monomial(a), Monomial(b)
    c = compare(a, b)
    if c == 0:
        return None
    return Binomial(a, b) if c > 0 else Binomial(b, a)


def spoly(f, g):
    """S-polynomial of two binomials, re-oriented, or None."""
    if f is None or g is None:
        return None
    lcm = f.lead.lcm(g.lead)
    # lcm/LM(f) * f - lcm/LM(g) * g: the leads cancel, the two tails remain.
    return binomial((lcm / g.lead) * g.tail, (lcm / f.lead) * f.tail)


def mora_nf(f, G, max_steps=100_000):
    """Mora's weak normal form of ``f`` with respect to ``G``.

    A reductor is chosen among all elements of the growing set ``T`` whose
    lead divides the current lead, minimal ecart first and list position
    breaking ties.  The current polynomial joins ``T`` whenever the chosen
    reductor has larger ecart.
    """
    if not G:
        raise ValueError("G must be nonempty")
    h = f
    T = list(G)
    for _ in range(max_steps):
        if h is None:
            return None
        best = None
        for g in T:
            if g.lead.divides(h.lead) and (best is None or g.ecart < best.ecart):
                best = g
        if best is None:
            return h
        if best.ecart > h.ecart:
            T.append(h)
        h = spoly(h, best)
    raise InternalLimit(f"Mora reduction exceeded {max_steps} steps")


def is_standard_basis(G):
    """Check every s-polynomial reduces to zero.

    Returns ``(True, None)`` or ``(False, (i, j, nf))`` for the first pair
    whose s-polynomial has a nonzero normal form.
    """
    G = list(G)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            nf = mora_nf(spoly(G[i], G[j]), G)
            if nf is not None:
                return False, (i, j, nf)
    return True, None


def leading_form(f):
    """Least-degree homogeneous part: the lead alone, or ``f`` if homogeneous."""
    if f.lead.degree < f.tail.degree:
        return f.lead
    return f


def s_degree(m, gens):
    return checked(sum(e * n for e, n in zip(m, gens)))


def is_toric(f, gens):
    return s_degree(f.lead, gens) == s_degree(f.tail, gens)


def render_monomial(m):
    parts = []
    for i, e in enumerate(m, start=1):
        if e == 1:
            parts.append(f"X{i}")
        elif e > 1:
            parts.append(f"X{i}^{e}")
    return "*".join(parts) if parts else "1"


_FACTOR = re.compile(r"X_?\{?(\d+)\}?(?:\^\{?(\d+)\}?)?")


def parse_monomial(text, nvars=4):
    """Inverse of :func:`render_monomial`; also accepts ``X_2^{11}X_3`` style."""
    exps = [0] * nvars
    text = text.strip()
    if text == "1":
        return Monomial(exps)
    pos = 0
    for m in _FACTOR.finditer(text):
        if text[pos:m.start()].strip("* ") != "":
            raise ValueError(f"cannot parse monomial {text!r}")
        exps[int(m.group(1)) - 1] += int(m.group(2) or 1)
        pos = m.end()
    if pos != len(text) or pos == 0:
        raise ValueError(f"cannot parse monomial {text!r}")
    return Monomial(exps)


def parse_binomial(text, nvars=4):
    """Parse ``"a - b"`` keeping the written orientation."""
    left, right = text.split("-")
    return parse_monomial(left, nvars), parse_monomial(right, nvars)
