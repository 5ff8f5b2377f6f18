"""Builders and checkers for the q-congruences and identities.

Each statement has a builder producing both sides as lists of factored
terms (see qcongr.factored); exact RatFun sides come from fsum, and the
congruence checkers reduce the same term lists in the quotient ring,
choosing per sum between term-by-term modular reduction (when every term
denominator is a unit) and exact accumulation of the whole sum.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import comb
from typing import List, Optional, Tuple

from .congruence import CongruenceResult, ModRing, Modulus, reduce_sum_mod
from .errors import InvalidParams
from .factored import FTerm, fsum
from .poly import Poly, ZERO
from .primes import is_prime
from .qobjects import legendre, q_fermat_quotient, q_int
from .ratfun import RatFun
from .scalars import Rat

ONE_MINUS_Q = Poly([1, -1])


# ---------------------------------------------------------------------------
# truncated q-harmonic sums sum_{k=1}^{p-1} q^(b k) / [a k]^d
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class QhParams:
    """Parameter bundle (a, b, b_bar, d) with the derived residue r0 and
    convolution coefficients c_s of the closed-form evaluation."""

    a: int
    b: int
    d: int
    b_bar: Optional[int]
    p: int
    r0: int
    c_s: Tuple[int, ...]

    @staticmethod
    def for_prime(p: int, a: int, b: int, d: int, b_bar: Optional[int] = None) -> "QhParams":
        if not is_prime(p) or p < 3:
            raise InvalidParams("p must be an odd prime, got %d" % p)
        if a < 1 or d < 1 or b < 0:
            raise InvalidParams("need a, d >= 1 and b >= 0")
        if math.gcd(a, p) != 1:
            raise InvalidParams("a = %d must be coprime to p = %d" % (a, p))
        if b_bar is not None and (b_bar < 0 or a * d != b + b_bar):
            raise InvalidParams("need b + b_bar = a*d > 0")
        r0 = (-b * pow(a, -1, p)) % p
        c_s = tuple(
            sum(
                (-1) ** (s - k) * comb(r0 + k * p + d - 1, d - 1) * comb(d, s - k)
                for k in range(s + 1)
            )
            for s in range(d)
        )
        return QhParams(a, b, d, b_bar, p, r0, c_s)


def qh_terms(p: int, a: int, b: int, d: int) -> List[FTerm]:
    return [
        FTerm().times_qpow(b * k).times_qint(a * k, -d) for k in range(1, p)
    ]


def qh_sum(p: int, params: QhParams) -> RatFun:
    """The exact truncated sum as a rational function."""
    return fsum(qh_terms(p, params.a, params.b, params.d))


def qh_closed_form(p: int, params: QhParams) -> RatFun:
    """Closed-form evaluation: a rational constant times (1-q)^d."""
    d, r0 = params.d, params.r0
    main = sum(params.c_s[s] * comb(r0 + s * p, d) for s in range(d))
    corr = sum((-1) ** s * comb(d, s) * comb(s * p, 2 * d) for s in range(d + 1))
    const = Rat((-1) ** d * p * main - corr, p**d)
    return RatFun.from_poly((ONE_MINUS_Q**d).scale(const))


def qh_special(p: int, params: QhParams) -> RatFun:
    """Expanded closed forms for d = 1, 2, 3."""
    r0 = Rat(params.r0)
    d = params.d
    if d == 1:
        const = Rat(p - 1, 2) - r0
    elif d == 2:
        const = -Rat((p - 1) * (p - 5), 12) + r0 * (p - 2 - r0) / 2
    elif d == 3:
        const = -Rat((p - 1) * (p - 3), 8) - r0 * (
            p * p - 9 * p + 12 - 3 * r0 * (p - 3) + 2 * r0 * r0
        ) / 12
    else:
        raise InvalidParams("specializations exist for d in {1, 2, 3}")
    return RatFun.from_poly((ONE_MINUS_Q**d).scale(const))


def check_terms(
    lhs: List[FTerm], rhs: List[FTerm], m: Modulus, ring: Optional[ModRing] = None
) -> CongruenceResult:
    """Congruence test between two sums given as factored term lists."""
    if ring is None:
        ring = ModRing(m)
    l = reduce_sum_mod(lhs, ring)
    r = reduce_sum_mod(rhs, ring)
    w = ring.reduce(l - r)
    return CongruenceResult(w.is_zero(), w)


def qh_check(p: int, a: int, b: int, d: int) -> CongruenceResult:
    params = QhParams.for_prime(p, a, b, d)
    rhs = qh_closed_form(p, params)
    ring = ModRing(Modulus(p, 1))
    l = reduce_sum_mod(qh_terms(p, a, b, d), ring)
    w = ring.reduce(l - ring.reduce(rhs.num))
    return CongruenceResult(w.is_zero(), w)


# ---------------------------------------------------------------------------
# the reflection congruences (paired exponents b + b_bar = a*d)
# ---------------------------------------------------------------------------


def _qhpos_term_lists(p, params: QhParams, alternating: bool):
    a, b, d = params.a, params.b, params.d
    bb = params.b_bar
    lhs: List[FTerm] = []
    rhs: List[FTerm] = []
    for k in range(1, p):
        sk = (-1) ** k if alternating else 1
        s_b = (-1) ** d if alternating else (-1) ** (d - 1)
        lhs.append(FTerm(sk * s_b).times_qpow(b * k).times_qint(a * k, -d))
        lhs.append(FTerm(sk).times_qpow(bb * k).times_qint(a * k, -d))
        if b:
            rhs.append(
                FTerm(sk * b).times_one_minus(1).times_qint(p).times_qpow(bb * k).times_qint(a * k, -d)
            )
        rhs.append(
            FTerm(-sk * a * d).times_qint(p).times_qpow(bb * k).times_qint(a * k, -(d + 1))
        )
    return lhs, rhs


def _require_pair_params(p, params: QhParams):
    if params.b_bar is None:
        raise InvalidParams("b_bar is required (b + b_bar = a*d)")
    if p < 3:
        raise InvalidParams("p must be an odd prime")


def qhpos_sides(p: int, params: QhParams) -> Tuple[RatFun, RatFun]:
    _require_pair_params(p, params)
    lhs, rhs = _qhpos_term_lists(p, params, alternating=False)
    return fsum(lhs), fsum(rhs)


def qhneg_sides(p: int, params: QhParams) -> Tuple[RatFun, RatFun]:
    _require_pair_params(p, params)
    lhs, rhs = _qhpos_term_lists(p, params, alternating=True)
    return fsum(lhs), fsum(rhs)


def _qt(ring: ModRing, e: int, j: int, d: int) -> Poly:
    """Cached reduced representative of q^e / [j]^d."""
    key = ("qt", e, j, d)
    v = ring.memo.get(key)
    if v is None:
        v = ring.mul(ring.qpow(e), ring.qint_pow(j, -d))
        ring.memo[key] = v
    return v


def qhpos_check(
    p: int,
    params: QhParams,
    alternating: bool = False,
    ring: Optional[ModRing] = None,
) -> CongruenceResult:
    _require_pair_params(p, params)
    if ring is None:
        ring = ModRing(Modulus(p, 2))
    a, b, d, bb = params.a, params.b, params.d, params.b_bar
    s_b = (-1) ** d if alternating else (-1) ** (d - 1)
    lhs = r1 = r2 = ZERO
    for k in range(1, p):
        sk = (-1) ** k if alternating else 1
        t_bb = _qt(ring, bb * k, a * k, d)
        lhs = lhs + _qt(ring, b * k, a * k, d).scale(s_b * sk) + t_bb.scale(sk)
        r1 = r1 + t_bb.scale(sk)
        r2 = r2 + _qt(ring, bb * k, a * k, d + 1).scale(sk)
    qp = ring.reduce(q_int(p))
    rhs = ring.mul(ring.reduce(r2), qp).scale(-a * d)
    if b:
        rhs = rhs + ring.mul(ring.reduce(r1), ring.mul(qp, ONE_MINUS_Q)).scale(b)
    w = ring.reduce(lhs - rhs)
    return CongruenceResult(w.is_zero(), w)


def qhh_term_lists(p, b1, bb1, d1, b2, bb2, d2):
    if d1 != b1 + bb1 or d2 != b2 + bb2 or d1 <= 0 or d2 <= 0:
        raise InvalidParams("need d1 = b1 + b1_bar > 0 and d2 = b2 + b2_bar > 0")
    sgn = (-1) ** (d1 + d2)
    lhs: List[FTerm] = []
    for k in range(2, p):
        for j in range(1, k):
            lhs.append(
                FTerm().times_qpow(b1 * j + b2 * k).times_qint(j, -d1).times_qint(k, -d2)
            )
            lhs.append(
                FTerm(sgn).times_qpow(bb1 * j + bb2 * k).times_qint(j, -d1).times_qint(k, -d2)
            )
    s1 = [FTerm().times_qpow(b1 * j).times_qint(j, -d1) for j in range(1, p)]
    s2 = [FTerm().times_qpow(b2 * k).times_qint(k, -d2) for k in range(1, p)]
    diag = [FTerm().times_qpow((b1 + b2) * k).times_qint(k, -(d1 + d2)) for k in range(1, p)]
    return lhs, s1, s2, diag


def qhh_sides(p, b1, bb1, d1, b2, bb2, d2) -> Tuple[RatFun, RatFun]:
    lhs, s1, s2, diag = qhh_term_lists(p, b1, bb1, d1, b2, bb2, d2)
    return fsum(lhs), fsum(s1) * fsum(s2) - fsum(diag)


def _qhk(ring: ModRing, j: int, b: int, d: int) -> Poly:
    """Cached reduced representative of q^(b j) / [j]^d."""
    key = ("qhk", j, b, d)
    v = ring.memo.get(key)
    if v is None:
        v = ring.fterm(FTerm().times_qpow(b * j).times_qint(j, -d))
        ring.memo[key] = v
    return v


def qhh_check(p, b1, bb1, d1, b2, bb2, d2, ring: Optional[ModRing] = None) -> CongruenceResult:
    if d1 != b1 + bb1 or d2 != b2 + bb2 or d1 <= 0 or d2 <= 0:
        raise InvalidParams("need d1 = b1 + b1_bar > 0 and d2 = b2 + b2_bar > 0")
    if ring is None:
        ring = ModRing(Modulus(p, 1))
    # row-by-row: sum_{j<k} u(j) v(k) = sum_k v(k) * prefix(k-1)
    sgn = (-1) ** (d1 + d2)
    pre = pre_bar = ZERO
    acc = ZERO
    for k in range(2, p):
        pre = ring.reduce(pre + _qhk(ring, k - 1, b1, d1))
        pre_bar = ring.reduce(pre_bar + _qhk(ring, k - 1, bb1, d1))
        acc = acc + ring.mul(_qhk(ring, k, b2, d2), pre)
        acc = acc + ring.mul(_qhk(ring, k, bb2, d2), pre_bar).scale(sgn)
    s1 = ring.reduce(sum((_qhk(ring, j, b1, d1) for j in range(1, p)), ZERO))
    s2 = ring.reduce(sum((_qhk(ring, k, b2, d2) for k in range(1, p)), ZERO))
    diag = ring.reduce(sum((_qhk(ring, k, b1 + b2, d1 + d2) for k in range(1, p)), ZERO))
    w = ring.reduce(acc - ring.mul(s1, s2) + diag)
    return CongruenceResult(w.is_zero(), w)


# ---------------------------------------------------------------------------
# q-binomial reduction lemma and its consequences
# ---------------------------------------------------------------------------


def lemma_bc_terms(p: int, a: int, k: int, which: int):
    if not 1 <= k <= p - 1 or a < 1:
        raise InvalidParams("need 1 <= k <= p-1 and a >= 1")
    if which == 1:
        lhs = [FTerm().times_qbin(a * p - 1, k)]
        s = (-1) ** k
        rhs = [FTerm(s).times_qpow(-comb(k + 1, 2))]
        for j in range(1, k + 1):
            rhs.append(
                FTerm(-s * a).times_qpow(-comb(k + 1, 2)).times_qint(p).times_qint(j, -1)
            )
        return lhs, rhs, 2
    if which == 2:
        lhs = [FTerm().times_qbin(p - 1 + k, k)]
        rhs = [FTerm().times_qint(p).times_qint(k, -1)]
        for j in range(1, k):
            rhs.append(
                FTerm().times_qint(p, 2).times_qint(k, -1).times_qpow(j).times_qint(j, -1)
            )
        return lhs, rhs, 3
    if which == 3:
        lhs = [FTerm().times_qbin(p - 1 + k, k).times_qbin(p - 1, k, -1)]
        s = (-1) ** k
        base = FTerm(s).times_qpow(comb(k + 1, 2)).times_qint(p).times_qint(k, -1)
        rhs = [base.copy(), base.copy().times_qint(p).times_qint(k, -1)]
        for j in range(1, k):
            rhs.append(base.copy().times_qint(p).times_one_plus(j).times_qint(j, -1))
        return lhs, rhs, 3
    raise InvalidParams("which must be 1, 2 or 3")


def lemma_bc_check(p: int, a: int, k: int, which: int) -> CongruenceResult:
    lhs, rhs, power = lemma_bc_terms(p, a, k, which)
    return check_terms(lhs, rhs, Modulus(p, power))


def qcan_check(p: int, a: int) -> CongruenceResult:
    """[ap-1 choose p-1] == q^((a-1)*C(p,2))  (mod [p]^2)."""
    if a < 1:
        raise InvalidParams("a must be >= 1")
    lhs = [FTerm().times_qbin(a * p - 1, p - 1)]
    rhs = [FTerm().times_qpow((a - 1) * comb(p, 2))]
    return check_terms(lhs, rhs, Modulus(p, 2))


# ---------------------------------------------------------------------------
# the three introductory central-binomial pairs
# ---------------------------------------------------------------------------


def intro_terms(p: int, which: int):
    if which == 1:
        lhs = [FTerm().times_qpow(k).times_qbin(2 * k, k) for k in range(p)]
        rhs = [FTerm(legendre(p, 3)).times_qpow(p * p // 3)]
    elif which == 2:
        lhs = [
            FTerm((-1) ** k).times_qpow(-comb(k + 1, 2)).times_qbin(2 * k, k)
            for k in range(p)
        ]
        rhs = [FTerm(legendre(p, 5)).times_qpow(-(p**4 // 5))]
    elif which == 3:
        # summing from k = 0, like the q = 1 companion; a lower bound of 1
        # misses exactly the constant term and breaks the congruence
        lhs = [
            FTerm().times_qpow(k).times_poch_minus_q(k, -1).times_qbin(2 * k, k)
            for k in range(p)
        ]
        rhs = [FTerm((-1) ** ((p - 1) // 2)).times_qpow(p * p // 4)]
    else:
        raise InvalidParams("which must be 1, 2 or 3")
    return lhs, rhs


def intro_pair(p: int, which: int) -> Tuple[RatFun, RatFun]:
    lhs, rhs = intro_terms(p, which)
    return fsum(lhs), fsum(rhs)


def intro_check(p: int, which: int, power: int = 1) -> CongruenceResult:
    lhs, rhs = intro_terms(p, which)
    return check_terms(lhs, rhs, Modulus(p, power))


# ---------------------------------------------------------------------------
# the three headline q-congruences
# ---------------------------------------------------------------------------


def _one_q_q2(k: int, mid: int = 1) -> Poly:
    """1 + mid*q^k + q^(2k)."""
    return Poly.from_pairs([(0, 1), (k, mid), (2 * k, 1)])


def qc1_term_lists(p: int):
    s1 = [
        FTerm().times_qpow(k).times_poch_minus_q(k, -1).times_qint(k, -1).times_qbin(2 * k, k)
        for k in range(1, p)
    ]
    s2 = [
        FTerm((-1) ** k)
        .times_poly(_one_q_q2(k))
        .times_poch_minus_q(k, -1)
        .times_qint(k, -1)
        .times_qbin(2 * k, k, -1)
        for k in range(1, p)
    ]
    return s1, s2


def qc1_sides(p: int) -> Tuple[RatFun, RatFun, RatFun]:
    """Both sums of the first congruence and the q-Fermat quotient."""
    _require_headline_prime(p)
    s1, s2 = qc1_term_lists(p)
    return fsum(s1), fsum(s2), RatFun.from_poly(q_fermat_quotient(p))


def qc1_check(p: int) -> Tuple[CongruenceResult, CongruenceResult]:
    _require_headline_prime(p)
    s1, s2 = qc1_term_lists(p)
    m = Modulus(p, 1)
    ring = ModRing(m)
    rhs = ring.reduce(q_fermat_quotient(p))
    w1 = ring.reduce(reduce_sum_mod(s1, ring) - rhs)
    # terms with p/2 < k < p have [p]-divisible denominators: exact total only
    half = ring.reduce(reduce_sum_mod(s2, ring).scale(Rat(-1, 2)))
    w2 = ring.reduce(half - rhs)
    return CongruenceResult(w1.is_zero(), w1), CongruenceResult(w2.is_zero(), w2)


def qc2_term_lists(p: int):
    lhs = [
        FTerm()
        .times_poly(_one_q_q2(k))
        .times_qpow(-comb(k, 2))
        .times_one_plus(k, -2)
        .times_qint(k, -1)
        .times_qbin(2 * k, k)
        for k in range(1, p)
    ]
    rhs = [FTerm(Rat(p * p - 1, 24)).times_qint(p).times_one_minus(1, 2)]
    return lhs, rhs


def qc2_sides(p: int) -> Tuple[RatFun, RatFun]:
    _require_headline_prime(p)
    lhs, rhs = qc2_term_lists(p)
    return fsum(lhs), fsum(rhs)


def qc2_check(p: int) -> CongruenceResult:
    _require_headline_prime(p)
    lhs, rhs = qc2_term_lists(p)
    return check_terms(lhs, rhs, Modulus(p, 2))


def qc3_term_lists(p: int):
    lhs = [
        FTerm((-1) ** k)
        .times_poly(_one_q_q2(k, 3))
        .times_qpow(-comb(k, 2))
        .times_one_plus(k, -1)
        .times_qint(k, -2)
        .times_qbin(2 * k, k)
        for k in range(1, p)
    ]
    rhs = [FTerm(-1).times_qpow(k).times_qint(k, -2) for k in range(1, p)]
    rhs.append(FTerm(-Rat(p**4 - 1, 240)).times_qint(p, 2).times_one_minus(1, 4))
    return lhs, rhs


def qc3_sides(p: int) -> Tuple[RatFun, RatFun]:
    _require_headline_prime(p)
    lhs, rhs = qc3_term_lists(p)
    return fsum(lhs), fsum(rhs)


def qc3_check(p: int) -> CongruenceResult:
    _require_headline_prime(p)
    lhs, rhs = qc3_term_lists(p)
    return check_terms(lhs, rhs, Modulus(p, 3))


def _require_headline_prime(p: int):
    if p < 7 or not is_prime(p):
        raise InvalidParams("requires a prime p >= 7, got %d" % p)


# ---------------------------------------------------------------------------
# auxiliary evaluations used on the way
# ---------------------------------------------------------------------------


def sp_check(p: int) -> CongruenceResult:
    """sum 1/[k] == (1-q)(p-1)/2 + (p^2-1)(1-q)^2 [p] / 24  (mod [p]^2)."""
    if p < 5 or not is_prime(p):
        raise InvalidParams("requires a prime p > 3, got %d" % p)
    lhs = [FTerm().times_qint(k, -1) for k in range(1, p)]
    rhs = [
        FTerm(Rat(p - 1, 2)).times_one_minus(1),
        FTerm(Rat(p * p - 1, 24)).times_one_minus(1, 2).times_qint(p),
    ]
    return check_terms(lhs, rhs, Modulus(p, 2))


def qhpos3_check(p: int) -> CongruenceResult:
    """sum (q^k + q^(2k))/[k]^3 == -[p](1-q)^4 (p^4-1)/240  (mod [p]^2)."""
    _require_headline_prime(p)
    lhs = [
        FTerm().times_qpow(k).times_one_plus(k).times_qint(k, -3) for k in range(1, p)
    ]
    rhs = [FTerm(-Rat(p**4 - 1, 240)).times_qint(p).times_one_minus(1, 4)]
    return check_terms(lhs, rhs, Modulus(p, 2))


def sec5aux_check(p: int) -> Tuple[CongruenceResult, CongruenceResult]:
    """The two auxiliary evaluations modulo [p]_q:

    sum (q^k+q^(2k))/[k]^4 == (1-q)^4 (p^2-1)(p^2-4)/360
    and the same value for -sum_{j<k} (1+q^j)(q^k+q^(2k))/([j][k]^3).
    """
    _require_headline_prime(p)
    single = [
        FTerm().times_qpow(k).times_one_plus(k).times_qint(k, -4) for k in range(1, p)
    ]
    double = [
        FTerm(-1).times_one_plus(j).times_qpow(k).times_one_plus(k).times_qint(j, -1).times_qint(k, -3)
        for k in range(2, p)
        for j in range(1, k)
    ]
    rhs = [FTerm(Rat((p * p - 1) * (p * p - 4), 360)).times_one_minus(1, 4)]
    m = Modulus(p, 1)
    return check_terms(single, rhs, m), check_terms(double, rhs, m)


def section3_chain(p: int) -> List[Tuple[str, dict, CongruenceResult]]:
    """The chain of auxiliary congruences modulo [p]_q used for the first
    headline congruence: two harmonic-type sums equal to -Q_p(2; q), plus
    the index-reflection identities for q-integers and Pochhammer symbols.
    """
    _require_headline_prime(p)
    m = Modulus(p, 1)
    ring = ModRing(m)
    out: List[Tuple[str, dict, CongruenceResult]] = []
    pos_q = ring.reduce(q_fermat_quotient(p))
    neg_q = ring.reduce(-q_fermat_quotient(p))

    # the index reflections flip the sign of the dual sum, so this one is
    # congruent to +Q_p(2; q) (which is also what the headline congruence
    # needs; the -Q value belongs to the dual sum below)
    s_i = [
        FTerm().times_qpow(k).times_poch_minus_q(k, -1).times_qint(k, -1)
        for k in range(1, p)
    ]
    w = ring.reduce(reduce_sum_mod(s_i, ring) - pos_q)
    out.append(("harmonic-pochhammer", {}, CongruenceResult(w.is_zero(), w)))

    s_ii = [
        FTerm().times_qpow(-comb(k, 2)).times_poch_minus_q(k - 1).times_qint(k, -1)
        for k in range(1, p)
    ]
    w = ring.reduce(reduce_sum_mod(s_ii, ring) - neg_q)
    out.append(("dual-harmonic", {}, CongruenceResult(w.is_zero(), w)))

    for k in range(1, p):
        lhs = ring.reduce(q_int(p - k))
        rhs = ring.reduce(ring.mul(ring.qpow(-k), ring.qint(k)).scale(Rat(-1)))
        w = ring.reduce(lhs - rhs)
        out.append(("qint-reflection", {"k": k}, CongruenceResult(w.is_zero(), w)))
        la = ring.fterm(FTerm().times_poch_minus_q(p - k, -1))
        ra = ring.fterm(FTerm().times_qpow(-comb(k, 2)).times_poch_minus_q(k - 1))
        w = ring.reduce(la - ra)
        out.append(("pochhammer-reflection", {"k": k}, CongruenceResult(w.is_zero(), w)))
    return out


def andrews_alternating_sum(n: int) -> RatFun:
    """The alternating q-binomial sum that vanishes identically for odd n."""
    if n < 1 or n % 2 == 0:
        raise InvalidParams("n must be odd and positive, got %d" % n)
    terms = [
        FTerm((-1) ** (n - k))
        .times_qpow(comb(n - k, 2))
        .times_poch_minus_q(k, -1)
        .times_qbin(n, k)
        .times_qbin(2 * k, k)
        for k in range(n + 1)
    ]
    return fsum(terms)


def pp_series_check(q_value, terms: int) -> Tuple[Rat, Rat]:
    """Exact partial sums (through k = terms) of the two series that agree
    in the limit: sum (1+2q^k) q^(k^2) / ([k]^2 [2k choose k]) and
    sum q^k / [k]^2, both evaluated at a rational 0 < q < 1.
    """
    qv = Rat(q_value)
    if not 0 < qv < 1:
        raise InvalidParams("q must satisfy 0 < q < 1")
    if terms < 0:
        raise InvalidParams("terms must be nonnegative")
    one = Rat(1)
    lhs = Rat(0)
    rhs = Rat(0)
    qk = one  # q^k
    qsq = one  # q^(k^2)
    qint = Rat(0)  # [k] at q
    qbin = one  # [2k choose k] at q
    for k in range(1, terms + 1):
        qk = qk * qv
        qsq = qsq * qk * qk / qv  # q^(k^2) = q^((k-1)^2) * q^(2k-1)
        qint = qint + qk / qv
        qbin = qbin * (one - qv ** (2 * k - 1)) * (one - qv ** (2 * k)) / (one - qk) ** 2
        lhs += (1 + 2 * qk) * qsq / (qint * qint * qbin)
        rhs += qk / (qint * qint)
    return lhs, rhs
