"""Polynomial identities used to rewrite Q, and the nonnegativity argument.

Each check expands both sides as integer polynomials and compares them.
The step checks test, on one instance, the claims the nonnegativity
argument rests on: which powers the positive summands cover, that the two
negative summands have coefficients in {0, -1}, that they never hit the
same power, and that the positive part reaches the highest degree.
"""

from .unipoly import UniPoly, geom, t
from .hilbert import _B, _sum_ja2, _sum_sj, closed_form_Q, simplified_Q_terms


def R1(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return geom(0, a3 + a21 - 1) * geom(0, (a4 - 1) * a2 - a4).shift(a4 - 1)


def R2(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return t((a4 - 2) * a2 + 2) * geom(0, a21 - 1) * geom(0, a2 + a3 - 3)


def S1(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return t(a4 - 1) * geom(0, a3 + a21 - 1) * geom(0, (a4 - 2) * (a2 - 1))


def S2(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return geom(0, a21 - 1) * geom(0, a3 - 2) * _sum_ja2(p, 1, a4 - 2, a4)


def S3(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return (t(a4 - 1) * geom(0, a3 + a21 - 1) * geom(0, a2 - 1)
            + t(a4 + a2 + a3 - 2) * geom(0, a21) * geom(0, (a4 - 3) * (a2 - 1) - 1))


def _cube_term(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return (t(a4 + a2 - 1 + a21) * geom(0, a2 - a21 - 2) * geom(0, a3 - 2)
            * geom(0, a4 - 3, step=a2 - 1))


def S4(p):
    return S3(p) + _cube_term(p)


def three_terms(p):
    """Second, fourth and fifth summands of the second rewriting of Q."""
    a1, a2, a3, a4, a21 = p.astuple()
    return (t(a4 + a2 + a3 - 2) * geom(0, a21) * geom(0, (a4 - 3) * (a2 - 1) - 1)
            - t((a4 - 2) * a2 + 2) * geom(0, a3 - 2) * geom(0, a2 - 2)
            + t((a4 - 2) * a2 + a21 + 2) * geom(0, a3 - 1) * geom(0, a2 - a21 - 3))


def three_terms_collapsed(p):
    a1, a2, a3, a4, a21 = p.astuple()
    return (t(a4 + a2 + a3 - 2) * geom(0, a21 - 1) * geom(0, (a4 - 3) * (a2 - 1) - a3)
            + t(a4 + a2 + a3 + a21 - 2) * geom(0, (a4 - 3) * a2 - a3 - a21 - 2))


def _common_tail(p, s):
    """Summands shared by both rewritings of Q."""
    a1, a2, a3, a4, a21 = p.astuple()
    top = s[a4 - 1]
    return (t((a4 - 1) * a2) * geom(0, (a4 - 1) * top * a2)
            + t(a21) * geom(0, a3 - 1) * geom(0, a4 - 2)
            - geom(0, (a4 - 1) * a2 - 1) * _B(p, s)
            - geom(0, a21 - 1) * _sum_sj(p, s))


def Q_first_rewrite(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    return (S1(p)
            + t((a4 - 2) * a2 + a21 + 2) * geom(0, a3 - 1) * geom(0, a2 - a21 - 3)
            + _common_tail(p, s)
            + geom(0, a21 - 1) * geom(0, a3 - 1) * geom(0, a4 - 2)
            - S2(p))


def Q_second_rewrite(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    return (t(a4 - 1) * geom(0, a3 + a21 - 1) * geom(0, a2 - 1)
            + _cube_term(p)
            + three_terms(p)
            + _common_tail(p, s)
            + geom(0, a21 - 1) * geom(0, a3 - 1) * geom(0, a4 - 2))


def Y_poly(p, s):
    return geom(0, p.alpha21 - 1) * _sum_sj(p, s)


def Z_poly(p, s):
    a1, a2, a3, a4, a21 = p.astuple()
    step = a1 + (a4 - 1) * a21 - 1
    out = UniPoly()
    for i in range(1, a4):
        lo, hi = step * s[i - 1], step * s[i] - 1
        out = out + geom(lo, hi).shift((i + 1) * a21 + a3)
    return out


def appendix_identity_checks(p, s):
    """Name -> verdict for every rewriting identity and proof-step claim."""
    a1, a2, a3, a4, a21 = p.astuple()
    top = s[a4 - 1]
    Q = closed_form_Q(p, s)
    terms = simplified_Q_terms(p, s)
    B = _B(p, s)
    fifth, seventh = terms[4], terms[6]

    checks = {}
    checks["R1-R2"] = R1(p) - R2(p) == (
        S1(p) + t((a4 - 2) * a2 + a21 + 2) * geom(0, a3 - 1) * geom(0, a2 - a21 - 3))
    checks["R1 split"] = R1(p) == (
        S1(p) + t((a4 - 2) * a2 + 2) * geom(0, a3 + a21 - 1) * geom(0, a2 - 3))
    checks["Q first rewrite"] = Q_first_rewrite(p, s) == Q
    checks["S1 split"] = S1(p) == (
        S3(p) + t(a4 + a2 - 1) * geom(0, a3 - 2) * geom(0, (a4 - 3) * (a2 - 1) - 1))
    checks["S2 shifted"] = S2(p) == (
        t(a4 + a2 - 1) * geom(0, a21 - 1) * geom(0, a3 - 2)
        * geom(0, a4 - 3, step=a2 - 1))
    checks["S1-S2"] = S1(p) - S2(p) == (
        S4(p) - t((a4 - 2) * a2 + 2) * geom(0, a3 - 2) * geom(0, a2 - 2))
    checks["Q second rewrite"] = Q_second_rewrite(p, s) == Q
    checks["three terms"] = three_terms(p) == three_terms_collapsed(p)

    # Step 4 rewriting of the fifth summand through Z.
    step = a1 + (a4 - 1) * a21 - 1
    checks["fifth term via Z"] = -fifth == (
        Z_poly(p, s) - geom((a4 - 1) * a2, step - 1) * B)

    positive = terms[0] + terms[1] + terms[2] + terms[5]
    cover = (a4 - 1) * (top + 1) * a2
    checks["step1 cover"] = all(
        c > 0 for c in (positive.coeffs + (0,) * (cover + 1))[:cover + 1])
    checks["step2 fifth coeffs in {0,-1}"] = all(c in (0, -1) for c in fifth.coeffs)
    checks["step3 seventh coeffs in {0,-1}"] = all(c in (0, -1) for c in seventh.coeffs)
    checks["step4 disjoint"] = not (fifth.support() & seventh.support())
    checks["step4 Y,Z disjoint"] = not (Y_poly(p, s).support() & Z_poly(p, s).support())
    negative = fifth + seventh
    # The argument only yields ">=": the top powers may coincide.
    checks["step5 degree"] = negative.is_zero() or positive.degree >= negative.degree
    return checks
