"""Hilbert series of the tangent cone: algorithmic and closed-form routes.

``P`` is the numerator over ``(1 - t)^4``, ``Q`` the numerator over
``(1 - t)``, and ``P1, P2`` the intermediate quotients, so that
``P = (1 - t) P1 = (1 - t)^2 P2 = (1 - t)^3 Q``.  Every range sum below
uses the empty-sum convention: an upper limit below the lower one
contributes zero.

Throughout, ``B`` is the double sum over ``i = 1..a4-1`` and
``j = s[i-1]..s[i]-1`` of ``t^(j a1 + ((a4-1) j + i + 1) a21 + a3 - j)``,
one term per ``g[i, j]`` whose leading monomial sits on the X1X3 side.
"""

from dataclasses import dataclass, field

from .basis import build_family, compute_s, is_tangent_cone_cm, leading_forms
from .errors import ConsistencyFailure
from .monomial_ideal import bayer_stillman_P
from .semigroup import derive_generators, oracle_hilbert
from .unipoly import ONE, UniPoly, divide_exact, geom, t


def _B(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    out = UniPoly()
    for i in range(1, a4):
        for j in range(s[i - 1], s[i]):
            out = out + t(j * a1 + ((a4 - 1) * j + (i + 1)) * a21 + a3 - j)
    return out


def _sum_sj(p, s, lo=0):
    """sum_{j=lo}^{a4-2} t^(((a4-1) s_j + j) a2 + a4 - j)"""
    a1, a2, a3, a4, a21 = p.astuple()
    out = UniPoly()
    for j in range(lo, a4 - 1):
        out = out + t(((a4 - 1) * s[j] + j) * a2 + a4 - j)
    return out


def _sum_ja2(p, lo, hi, offset):
    """sum_{j=lo}^{hi} t^(j a2 + offset - j)"""
    a2 = p.alpha2
    out = UniPoly()
    for j in range(lo, hi + 1):
        out = out + t(j * a2 + offset - j)
    return out


def closed_form_P(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    u = ONE - t(1)
    top = s[a4 - 1]
    P = ONE - t(a4)
    P -= t(a4) * u * (ONE - t(a21))
    P -= t(((a4 - 1) * top + a4 - 1) * a2 + 1) * u * u
    P -= u * _sum_ja2(p, 1, a4 - 1, a4)
    P -= t(a21 + 1) * (ONE - t((a4 - 2) * a2 + 1)
                       - (ONE - t(a2)) * _sum_ja2(p, 0, a4 - 3, a4 - 1))
    P -= u * u * (ONE - t(a21)) * _sum_sj(p, s)
    P -= (ONE - t((a4 - 1) * a2)) * u * u * _B(p, s)
    P -= t(a3) * ((ONE - t(a21 + 1)) * (ONE - t((a4 - 1) * a2))
                  - (ONE - t(a2)) * (ONE - t(a21)) * _sum_ja2(p, 0, a4 - 2, a4 - 1))
    return P


def closed_form_P1(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    u = ONE - t(1)
    top = s[a4 - 1]
    P1 = (ONE - t(a21 + 1)) * (geom(0, a4 - 2) - t(a3) * geom(0, (a4 - 1) * a2 - 1))
    P1 += t(a4 - 1) * (ONE - t((a4 - 1) * (a2 - 1) + 1))
    P1 -= (ONE - t(a21)) * _sum_ja2(p, 0, a4 - 2, a4) * (ONE - t(a3 - 1) * geom(0, a2 - 1))
    P1 -= t(((a4 - 1) * top + a4 - 1) * a2 + 1) * u
    P1 -= u * (ONE - t(a21)) * _sum_sj(p, s)
    P1 -= (ONE - t((a4 - 1) * a2)) * u * _B(p, s)
    return P1


def closed_form_P2(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    top = s[a4 - 1]
    P2 = (ONE - t(a3 + a21)) * geom(0, (a4 - 1) * a2 - a4).shift(a4 - 1)
    P2 -= (ONE - t(a2 + a3 - 2)) * t((a4 - 2) * a2 + 2) * geom(0, a21 - 1)
    P2 -= (ONE - t(a3 - 1)) * geom(0, a21 - 1) * _sum_ja2(p, 1, a4 - 2, a4)
    P2 += t((a4 - 1) * a2) * (ONE - t((a4 - 1) * top * a2 + 1))
    P2 += (ONE - t(a3)) * geom(0, a21) * geom(0, a4 - 2)
    P2 -= (ONE - t(a21)) * _sum_sj(p, s)
    P2 -= (ONE - t((a4 - 1) * a2)) * _B(p, s)
    return P2


def closed_form_Q(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    top = s[a4 - 1]
    Q = geom(0, a3 + a21 - 1) * geom(0, (a4 - 1) * a2 - a4).shift(a4 - 1)
    Q += t((a4 - 1) * a2) * geom(0, (a4 - 1) * top * a2)
    Q += t(a21) * geom(0, a3 - 1) * geom(0, a4 - 2)
    Q -= geom(0, (a4 - 1) * a2 - 1) * _B(p, s)
    Q += geom(0, a21 - 1) * (
        geom(0, a3 - 1) * geom(0, a4 - 2)
        - t((a4 - 2) * a2 + 2) * geom(0, a2 + a3 - 3)
        - _sum_sj(p, s)
        - geom(0, a3 - 2) * _sum_ja2(p, 1, a4 - 2, a4))
    return Q


def closed_form_P2_corrected(p, s):
    """``closed_form_P2`` with its second summand repaired.

    The stated summand ``(1 - t^(a2+a3-2)) t^((a4-2) a2 + 2) sum_{0}^{a21-1}``
    is off by ``t^a4 (1 - t^((a4-2)(a2-1))) sum_{0}^{a21-1}`` whenever a4 > 2.
    """
    a1, a2, a3, a4, a21 = p.astuple()
    fix = t(a4) * geom(0, a21 - 1) * (ONE - t((a4 - 2) * (a2 - 1)))
    return closed_form_P2(p, s) - fix


def closed_form_Q_corrected(p, s):
    """``closed_form_Q`` with ``t^((a4-2) a2 + 2) sum_{0}^{a2+a3-3}`` in the
    bracket replaced by ``t^a4 sum_{0}^{(a4-1) a2 + a3 - a4 - 1}``."""
    a1, a2, a3, a4, a21 = p.astuple()
    return closed_form_Q(p, s) + geom(0, a21 - 1) * (
        t((a4 - 2) * a2 + 2) * geom(0, a2 + a3 - 3)
        - t(a4) * geom(0, (a4 - 1) * a2 + a3 - a4 - 1))


def simplified_Q_terms(p, s):
    """The nine summands of the simplified Q, in their stated order."""
    a1, a2, a3, a4, a21 = p.astuple()
    top = s[a4 - 1]
    return [
        t(a4 - 1) * geom(0, a3 + a21 - 1) * geom(0, a2 - 1),
        t(a4 + a2 - 1 + a21) * geom(0, a2 - a21 - 2) * geom(0, a3 - 2)
        * geom(0, a4 - 3, step=a2 - 1),
        t((a4 - 1) * a2) * geom(0, (a4 - 1) * top * a2),
        t(a21) * geom(0, a3 - 1) * geom(0, a4 - 2),
        -(geom(0, (a4 - 1) * a2 - 1) * _B(p, s)),
        geom(0, a21 - 1) * geom(0, a3 - 1) * geom(0, a4 - 2),
        -(geom(0, a21 - 1) * _sum_sj(p, s)),
        t(a4 + a2 + a3 - 2) * geom(0, a21 - 1) * geom(0, (a4 - 3) * (a2 - 1) - a3),
        t(a4 + a2 + a3 + a21 - 2) * geom(0, (a4 - 3) * a2 - a3 - a21 - 2),
    ]


def closed_form_Q_simplified(p, s):
    return sum(simplified_Q_terms(p, s), UniPoly())


@dataclass
class HilbertReport:
    P: UniPoly
    P1: UniPoly
    P2: UniPoly
    Q: UniPoly
    H: list
    regularity_index: int
    multiplicity: int
    nondecreasing: bool
    closed_form_agrees: bool
    oracle_agrees: bool
    checks: dict = field(default_factory=dict)


def hilbert_report(p, oracle_depth=0, strict=True):
    """Run every route to the Hilbert series and cross-check them.

    With ``strict`` a disagreement between the algorithmic numerator and the
    closed forms of ``P`` or ``P1`` raises :class:`ConsistencyFailure`.  All
    other verdicts, the stated ``P2`` and ``Q`` included, go to ``checks``;
    ``closed_form_agrees`` is their conjunction over the stated forms,
    leaving out the ``_corrected`` variants.
    """
    from .identities import appendix_identity_checks

    s = compute_s(p)
    fam = build_family(p, s)
    tc = leading_forms(fam)
    P = bayer_stillman_P(tc)
    P1 = divide_exact(P, 1)
    P2 = divide_exact(P1, 1)
    Q = divide_exact(P2, 1)
    gens = derive_generators(p)

    checks = {
        "closed_form_P": closed_form_P(p, s) == P,
        "closed_form_P1": closed_form_P1(p, s) == P1,
        "closed_form_P2": closed_form_P2(p, s) == P2,
        "closed_form_Q": closed_form_Q(p, s) == Q,
        "closed_form_Q_simplified": closed_form_Q_simplified(p, s) == Q,
        "closed_form_P2_corrected": closed_form_P2_corrected(p, s) == P2,
        "closed_form_Q_corrected": closed_form_Q_corrected(p, s) == Q,
        "Q(1)=n1": Q(1) == gens.n1,
        "tangent_cone_not_cm": not is_tangent_cone_cm(tc),
    }
    checks.update(appendix_identity_checks(p, s))
    closed = all(v for k, v in checks.items()
                 if k.startswith("closed_form") and not k.endswith("_corrected"))
    if strict and not (checks["closed_form_P"] and checks["closed_form_P1"]):
        bad = [k for k in ("closed_form_P", "closed_form_P1") if not checks[k]]
        raise ConsistencyFailure(f"{p}: closed forms disagree: {', '.join(bad)}")

    # H is the partial sums of Q, so it is constant from n = deg Q on.
    regularity = Q.degree
    depth = max(oracle_depth, 0)
    H = Q.partial_sums(max(depth, regularity))
    oracle_ok = True
    if oracle_depth > 0:
        oracle_ok = oracle_hilbert(tuple(gens), oracle_depth) == H[:oracle_depth + 1]
    return HilbertReport(
        P=P, P1=P1, P2=P2, Q=Q, H=H,
        regularity_index=regularity,
        multiplicity=gens.n1,
        nondecreasing=all(c >= 0 for c in Q.coeffs),
        closed_form_agrees=closed,
        oracle_agrees=oracle_ok,
        checks=checks,
    )
