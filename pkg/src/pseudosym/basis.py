"""The explicit standard basis of the defining ideal and its leading monomials.

For parameters with ``alpha2 > alpha21 + 1`` the basis consists of

* ``f1[j] = X1^(a1 + j a21) - X2^(j a2) X3 X4^(a4 - j - 1)`` for j < a4,
* the three toric generators ``f2, f3, f4``,
* ``g[j, i] = X2^(((a4-1) i + j) a2 + 1) X4^(a4 - j - 1)
  - X1^(i a1 + ((a4-1) i + j + 1) a21 + 1) X3^(a3 - i - 1)``
  for ``s[j-1] <= i <= s[j]``,

where ``s[j]`` is the least ``s`` making the X2-side of ``g[j, s]`` have
strictly smaller degree than its X1-side.
"""

from dataclasses import dataclass, field

from .errors import (
    InvalidParameters,
    LeadingFormMismatch,
    MonotonicityViolation,
    checked,
)
from .local_algebra import Monomial, binomial, is_toric, render_monomial
from .monomial_ideal import MonomialIdeal
from .semigroup import check_conditions, derive_generators

_S_SEARCH_CAP = 10**6


def s_inequality(p, j, s):
    a1, a2, a3, a4, a21 = p.astuple()
    lhs = checked(((a4 - 1) * s + j) * a2 + a4 - j)
    rhs = checked(s * a1 + ((a4 - 1) * s + j + 1) * a21 + a3 - s)
    return lhs < rhs


def s_slope(p):
    """Growth of (rhs - lhs) of the s-inequality per unit of s."""
    a1, a2, _, a4, a21 = p.astuple()
    return a1 + (a4 - 1) * a21 - 1 - (a4 - 1) * a2


def s_closed_form(p, j, floor=0):
    """Least ``s >= floor`` solving the s-inequality, by solving it as linear."""
    a1, a2, a3, a4, a21 = p.astuple()
    slope = s_slope(p)
    if slope <= 0:
        raise InvalidParameters("s-inequality is not increasing in s")
    excess = j * a2 + a4 - j - (j + 1) * a21 - a3
    return max(floor, -((-(excess + 1)) // slope))


@dataclass(frozen=True)
class SParameters:
    s: tuple

    def __getitem__(self, j):
        return 0 if j == -1 else self.s[j]

    def __len__(self):
        return len(self.s)

    def __iter__(self):
        return iter(self.s)

    @property
    def last(self):
        return self.s[-1]


def compute_s(p):
    if s_slope(p) <= 0:
        raise InvalidParameters("s-inequality is not increasing in s")
    s = []
    prev = 0
    for j in range(p.alpha4):
        for below in range(prev):
            if s_inequality(p, j, below):
                raise MonotonicityViolation(
                    f"s_{j} would be {below} < s_{j - 1} = {prev}")
        cur = prev
        while not s_inequality(p, j, cur):
            cur += 1
            if cur > _S_SEARCH_CAP:
                raise InvalidParameters(f"no s_{j} below {_S_SEARCH_CAP}")
        s.append(cur)
        prev = cur
    return SParameters(tuple(s))


def _require_valid(p):
    # Coprimality is reported, not required: the family and its leading
    # ideal are unchanged when all generators share a factor.
    report = check_conditions(p)
    failing = [name for name in report.failing() if name != "coprime"]
    if failing:
        raise InvalidParameters(f"failing conditions: {', '.join(failing)}")


def _m(e1=0, e2=0, e3=0, e4=0):
    return Monomial((e1, e2, e3, e4))


def f1_monomials(p, j):
    a1, a2, a3, a4, a21 = p.astuple()
    return _m(e1=a1 + j * a21), _m(e2=j * a2, e3=1, e4=a4 - (j + 1))


def g_monomials(p, j, i):
    """(X2X4-side, X1X3-side) of g[j, i]."""
    a1, a2, a3, a4, a21 = p.astuple()
    if i + 1 > a3:
        raise InvalidParameters(f"g[{j},{i}] needs X3 exponent {a3 - i - 1} < 0")
    x2x4 = _m(e2=((a4 - 1) * i + j) * a2 + 1, e4=a4 - (j + 1))
    x1x3 = _m(e1=i * a1 + ((a4 - 1) * i + j + 1) * a21 + 1, e3=a3 - (i + 1))
    return x2x4, x1x3


@dataclass(frozen=True)
class BasisFamily:
    params: object
    s: SParameters
    f1j: tuple
    f2: object
    f3: object
    f4: object
    g: dict = field(hash=False)

    def members(self):
        """``(name, binomial)`` pairs in a fixed order."""
        out = [(f"f_{{1,{j}}}", f) for j, f in enumerate(self.f1j)]
        out += [("f_2", self.f2), ("f_3", self.f3), ("f_4", self.f4)]
        out += [(f"g_{{{j},{i}}}", f) for (j, i), f in sorted(self.g.items())]
        return out

    def binomials(self):
        return [f for _, f in self.members()]

    def __len__(self):
        return len(self.f1j) + 3 + len(self.g)


def build_family(p, s=None):
    _require_valid(p)
    a1, a2, a3, a4, a21 = p.astuple()
    s = s or compute_s(p)
    f1j = tuple(binomial(*f1_monomials(p, j)) for j in range(a4))
    f2 = binomial(_m(e2=a2), _m(e1=a21, e4=1))
    f3 = binomial(_m(e3=a3), _m(e1=a1 - a21 - 1, e2=1))
    f4 = binomial(_m(e4=a4), _m(e1=1, e2=a2 - 1, e3=a3 - 1))
    g = {}
    for j in range(a4):
        for i in range(s[j - 1], s[j] + 1):
            g[(j, i)] = binomial(*g_monomials(p, j, i))
    return BasisFamily(p, s, f1j, f2, f3, f4, g)


def f5(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return binomial(_m(e1=a21 + 1, e3=a3 - 1), _m(e2=1, e4=a4 - 1))


def lemma_lmf1j_check(p):
    a1, a2, _, a4, a21 = p.astuple()
    return all(j * a2 + a4 < a1 + j * a21 + j for j in range(a4))


def expected_leading_monomials(fam):
    """Leading monomials as the closed formulas predict them, keyed by name."""
    p, s = fam.params, fam.s
    a1, a2, a3, a4, a21 = p.astuple()
    out = {}
    for j in range(a4):
        out[f"f_{{1,{j}}}"] = f1_monomials(p, j)[1]
    out["f_2"] = _m(e1=a21, e4=1)
    out["f_3"] = _m(e3=a3)
    out["f_4"] = _m(e4=a4)
    for (j, i) in fam.g:
        x2x4, x1x3 = g_monomials(p, j, i)
        out[f"g_{{{j},{i}}}"] = x2x4 if i == s[j] else x1x3
    return out


def leading_monomials(fam):
    """Leading monomial of each member, checked against the closed formulas.

    When both sides of a member have the same degree its leading form is
    the whole binomial; the initial monomial of that form (the order's
    tie-break) is what generates the tangent-cone leading ideal.
    """
    expected = expected_leading_monomials(fam)
    out = []
    for name, f in fam.members():
        if f.lead != expected[name]:
            raise LeadingFormMismatch(
                f"{name}: computed {render_monomial(f.lead)}, "
                f"formula {render_monomial(expected[name])}")
        out.append((name, f.lead))
    return out


def leading_forms(fam):
    """Minimal generators of the leading ideal of the tangent cone."""
    return MonomialIdeal(m for _, m in leading_monomials(fam))


def is_tangent_cone_cm(tc):
    """False when X1 divides some minimal generator of the leading ideal."""
    return not any(m[0] > 0 for m in tc.gens)


def family_is_toric(fam):
    gens = tuple(derive_generators(fam.params))
    return all(is_toric(f, gens) for f in fam.binomials())


def proof_pivot_sequence(fam):
    """Leading monomials in the order the closed-form derivation peels them.

    First ``g[a4-i, s[a4-i]]`` for i = 1..a4, then the remaining ``g[k, .]``
    for k = a4-1 down to 1 with the second index descending, then ``f4, f3,
    f2`` and finally ``f1[a4-1], ..., f1[1]``.
    """
    a4 = fam.params.alpha4
    s = fam.s
    lm = dict(leading_monomials(fam))
    names = [f"g_{{{a4 - i},{s[a4 - i]}}}" for i in range(1, a4 + 1)]
    for k in range(a4 - 1, 0, -1):
        names += [f"g_{{{k},{i}}}" for i in range(s[k] - 1, s[k - 1] - 1, -1)]
    names += ["f_4", "f_3", "f_2"]
    names += [f"f_{{1,{a4 - j - 1}}}" for j in range(a4 - 1)]
    return [lm[n] for n in names]
