"""Closed-form Poincare series for fixed points of twisted suspensions.

Given a virtual representation V, these return the graded GF(2)-dimensions
of the homotopy of the V-twisted Eilenberg-MacLane spectrum of the constant
functor, one Laurent series per subgroup level.  The top-level Klein series
is a case split on the sign pattern of the (alpha, beta, gamma) part; the
three characters are interchangeable, so the pattern is canonicalized by
sorting.  Empty geometric sums are zero, which silently covers all the
degenerate boundary cases.
"""

from __future__ import annotations

from .groups import KLEIN
from .laurent import LaurentPoly, geom
from .reps import RepC2, RepK, restrict_rep_by_kernels


def _reverse(p):
    return LaurentPoly.from_dict({-e: coeff for e, coeff in p.as_dict().items()})


def _one_pos_two_neg(l, j, k):
    """Series for l alpha - j beta - k gamma, all parameters >= 1."""
    if l >= k or l >= j:
        # symmetric in (j, k); orient so the hypothesis l >= kk holds
        jj, kk = (j, k) if l >= k else (k, j)
        return (geom(0, jj - 2) * geom(0, l - kk)).shift(-jj) + \
            (geom(0, l - 1) * geom(0, kk - 1)).shift(-kk)
    return (geom(0, j - l - 2) * geom(0, k - l - 2)).shift(-(j + k - l)) + \
        (geom(0, l) * geom(0, l - 1)).shift(-(l + 1))


def _two_pos_one_neg(l, m, k):
    """Series for l alpha + m beta - k gamma with k >= 2.

    Derived from the one-positive case through the duality
    pi_d(S^V smash HF) = pi_(-d)(S^(4-rho-V) smash HF), so that the answer is
    the reflected, shifted series of (k-1) alpha - (l+1) beta - (m+1) gamma.
    The directly stated product formula for this sign pattern fails on
    corner parameters (it disagrees with the duality route and with the
    chain-level computation, e.g. at l = m = 1, k = 3), so the reduction
    is used for the whole range.
    """
    return _reverse(_one_pos_two_neg(k - 1, l + 1, m + 1)).shift(-3)


def two_pos_one_neg_printed(l, m, k):
    """The directly stated k >= 2 product formula; valid only away from
    corner parameters, kept for cross-checking."""
    return geom(-k, -1) * geom(0, k - 2) + \
        (geom(0, l - k) * geom(0, m - k)).shift(k)


def _klein_top_series(b, c, d):
    """Series for the (b*alpha + c*beta + d*gamma)-suspension at the top level."""
    sgn = sorted((b, c, d), reverse=True)
    pos = [x for x in sgn if x > 0]
    neg = [-x for x in sgn if x < 0]
    if len(neg) == 0:
        if len(pos) <= 2:
            out = LaurentPoly.one()
            for n in pos:
                out = out * geom(0, n)
            return out
        l, m, n = pos
        return geom(0, l) * geom(0, m) + geom(0, l + m).shift(1) * geom(0, n - 1)
    if len(neg) == 1:
        j = neg[0]
        if len(pos) <= 1:
            out = geom(-j, -2)
            for n in pos:
                out = out * geom(0, n)
            return out
        l, m = pos
        k = j
        if k == 1:
            return (geom(0, l - 1) * geom(0, m - 1)).shift(1)
        return _two_pos_one_neg(l, m, k)
    if len(neg) == 2:
        j, k = neg
        if len(pos) == 0:
            return geom(-j, -2) * geom(-k, -2)
        return _one_pos_two_neg(pos[0], j, k)
    i, j, k = neg
    inner = geom(0, j + k - 2) * geom(0, i - 2) + \
        (geom(0, k - 1) * geom(0, j - 1)).shift(i - 1)
    return inner.shift(-(i + j + k))


def poincare_K(v: RepK):
    """All level series for the V-twisted suspension over the Klein group.

    The top level is the closed form; cyclic levels come from restricting the
    representation (a character contributes trivially at exactly its kernel);
    the bottom level sees only the underlying sphere.
    """
    out = {"K": _klein_top_series(v.b, v.c, v.d).shift(v.a)}
    for h in KLEIN.cyclics:
        out[h] = poincare_C2(restrict_rep_by_kernels(v, h))["C2"]
    out["e"] = LaurentPoly.monomial(v.dim)
    return out


def poincare_C2(v: RepC2):
    """Level series over C2: fixed points and underlying, as a dict."""
    b = v.b
    if b >= 0:
        top = geom(0, b)
    elif b == -1:
        top = LaurentPoly.zero()
    else:
        top = geom(b, -2)
    return {"C2": top.shift(v.a), "e": LaurentPoly.monomial(v.dim)}


def poincare(v, level=None):
    """Series for a RepK or RepC2; one level, or the full dict when None."""
    table = poincare_K(v) if isinstance(v, RepK) else poincare_C2(v)
    if level is None:
        return table
    if level not in table:
        raise ValueError(f"unknown level {level!r}")
    return table[level]
