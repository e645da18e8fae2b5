"""Dense integer polynomials in one variable ``t``."""

from .errors import NotDivisible


class UniPoly:
    """Immutable dense polynomial; ``coeffs[k]`` is the coefficient of t^k.

    Trailing zeros are trimmed, so equality is coefficient-list equality and
    the zero polynomial has an empty list.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def monomial(cls, exp, coeff=1):
        if exp < 0:
            raise ValueError(f"negative exponent {exp}")
        return cls([0] * exp + [coeff])

    @classmethod
    def from_terms(cls, terms):
        """Build from ``{exponent: coefficient}`` or an iterable of pairs."""
        items = terms.items() if isinstance(terms, dict) else terms
        items = list(items)
        if not items:
            return cls()
        top = max(e for e, _ in items)
        c = [0] * (top + 1)
        for e, a in items:
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            c[e] += a
        return cls(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def terms(self):
        return [(e, a) for e, a in enumerate(self.coeffs) if a]

    def support(self):
        return {e for e, a in enumerate(self.coeffs) if a}

    def __eq__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        return isinstance(other, UniPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        if isinstance(other, int):
            other = UniPoly([other])
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        c = list(a)
        for i, x in enumerate(b):
            c[i] += x
        return UniPoly(c)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return UniPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly()
        c = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    c[i + j] += x * y
        return UniPoly(c)

    __rmul__ = __mul__

    def __pow__(self, k):
        result = UniPoly([1])
        for _ in range(k):
            result = result * self
        return result

    def shift(self, k):
        """Multiply by t^k."""
        if k < 0:
            raise ValueError(f"negative shift {k}")
        if not self.coeffs:
            return self
        return UniPoly((0,) * k + self.coeffs)

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def partial_sums(self, n):
        """First ``n + 1`` coefficients of this polynomial divided by (1 - t)."""
        out, acc = [], 0
        for k in range(n + 1):
            acc += self.coeffs[k] if k < len(self.coeffs) else 0
            out.append(acc)
        return out

    def divmod_one_minus_t(self):
        """Quotient and remainder of division by (1 - t)."""
        # f = (1 - t) q + r: q_k = sum_{i<=k} f_i, r = f(1).
        if not self.coeffs:
            return UniPoly(), 0
        q, acc = [], 0
        for a in self.coeffs[:-1]:
            acc += a
            q.append(acc)
        return UniPoly(q), acc + self.coeffs[-1]

    def to_list(self):
        return list(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        return format_poly(self)


def divide_exact(f, k):
    """Divide by (1 - t)^k, insisting each step is exact."""
    q = f
    for step in range(1, k + 1):
        q, r = q.divmod_one_minus_t()
        if r != 0:
            raise NotDivisible(step, r)
    return q


def geom(lo, hi, step=1):
    """sum_{j=lo}^{hi} t^(j * step); zero when hi < lo."""
    if hi < lo:
        return UniPoly()
    return UniPoly.from_terms((j * step, 1) for j in range(lo, hi + 1))


def t(exp):
    return UniPoly.monomial(exp)


ONE = UniPoly([1])


def format_poly(p):
    """Signed-term rendering, e.g. ``1 - 3t^4 + 3t^5``."""
    if p.is_zero():
        return "0"
    out = []
    for e, a in p.terms():
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if e == 0:
            body = str(mag)
        else:
            var = "t" if e == 1 else f"t^{e}"
            body = var if mag == 1 else f"{mag}{var}"
        out.append((sign, body))
    first_sign, first = out[0]
    text = ("-" if first_sign == "-" else "") + first
    for sign, body in out[1:]:
        text += f" {sign} {body}"
    return text
