"""q-WZ pairs: difference-equation verification and finite telescoping.

A pair (F, G) of term builders satisfies F(n+1,k) - F(n,k) = G(n,k+1) - G(n,k);
summing the relation over a triangular range yields the finite identity

    sum_{k=0}^{N-1} F(N,k) = sum_{n=0}^{N-1} (F(n+1,n) + G(n,n)) - sum_{n=0}^{N-1} G(n,0)

which is how the three summation identities checked here were found.
Verification is exhaustive exact evaluation on an (n, k) grid.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, Tuple

from .errors import BuilderUndefined, InvalidParams
from .factored import FTerm, fsum
from .poly import Poly
from .ratfun import RatFun
from .scalars import Rat

TermBuilder = Callable[[int, int], FTerm]


@dataclass(frozen=True)
class WzPair:
    id: str
    F: TermBuilder
    G: TermBuilder
    description: str


def _az_F(n: int, k: int) -> FTerm:
    return (
        FTerm((-1) ** k)
        .times_poch_minus_q(n, -1)
        .times_qint(k + 1, -1)
        .times_qbin(n + k + 1, k + 1, -1)
    )


def _az_G(n: int, k: int) -> FTerm:
    return _az_F(n, k).times_qpow(n + 1).times_one_plus(n + 1, -1)


def _sec4_F(n: int, k: int) -> FTerm:
    return (
        FTerm()
        .times_qpow(-comb(k + 1, 2))
        .times_qint(k + 1, -1)
        .times_qbin(n + k + 2, n + 1)
        .times_qbin(n + 1, k + 1, -1)
    )


def _sec4_G(n: int, k: int) -> FTerm:
    # standard form: -q^(n+2) (1-q^(k+1)) (1-q^(n+1-k)) F(n,k)
    #               / ((1+q^(n+2)) (1-q^(n+2))^2)
    # stored with (1-q^(n+1-k)) / [n+1 choose k+1] rewritten as
    # (1-q^(k+1)) / [n+1 choose k], which is also defined at k = n+1
    return (
        FTerm(-1)
        .times_qpow(n + 2 - comb(k + 1, 2))
        .times_one_minus(k + 1, 2)
        .times_qint(k + 1, -1)
        .times_qbin(n + k + 2, n + 1)
        .times_qbin(n + 1, k, -1)
        .times_one_plus(n + 2, -1)
        .times_one_minus(n + 2, -2)
    )


def _sec5_F(n: int, k: int) -> FTerm:
    return (
        FTerm((-1) ** k)
        .times_qpow(-comb(k + 1, 2))
        .times_one_plus(k + 1)
        .times_qint(k + 1, -2)
        .times_qbin(n + k + 2, n + 1)
        .times_qbin(n + 1, k + 1, -1)
    )


def _sec5_G(n: int, k: int) -> FTerm:
    # same rewriting as _sec4_G; the (1+q^(k+1)) factor of F cancels
    return (
        FTerm((-1) ** k)
        .times_qpow(n + 2 - comb(k + 1, 2))
        .times_one_minus(k + 1, 3)
        .times_qint(k + 1, -2)
        .times_qbin(n + k + 2, n + 1)
        .times_qbin(n + 1, k, -1)
        .times_one_minus(n + 2, -3)
    )


BUILTIN_PAIRS: Dict[str, WzPair] = {
    "az": WzPair("az", _az_F, _az_G, "inverse-binomial pair behind the alternating identity"),
    "sec4": WzPair("sec4", _sec4_F, _sec4_G, "pair behind the central-binomial/[k] identity"),
    "sec5": WzPair("sec5", _sec5_F, _sec5_G, "pair behind the central-binomial/[k]^2 identity"),
}


def register_pair(pair: WzPair) -> None:
    if pair.id in BUILTIN_PAIRS:
        raise InvalidParams("pair id %r already registered" % pair.id)
    BUILTIN_PAIRS[pair.id] = pair


def _term(builder: TermBuilder, n: int, k: int) -> FTerm:
    try:
        return builder(n, k)
    except Exception as exc:
        raise BuilderUndefined("builder failed at (n=%d, k=%d): %s" % (n, k, exc)) from exc


def wz_difference_check(pair: WzPair, n_max: int) -> bool:
    """F(n+1,k) - F(n,k) == G(n,k+1) - G(n,k) exactly for 0 <= k <= n <= n_max."""
    if n_max < 0:
        raise InvalidParams("n_max must be >= 0")
    for n in range(n_max + 1):
        for k in range(n + 1):
            diff = fsum(
                [
                    _term(pair.F, n + 1, k),
                    _term(pair.F, n, k).times_coef(-1),
                    _term(pair.G, n, k + 1).times_coef(-1),
                    _term(pair.G, n, k),
                ]
            )
            if not diff.is_zero():
                return False
    return True


def wz_telescope(pair: WzPair, N: int) -> Tuple[RatFun, RatFun]:
    """Both sides of the finite telescoped identity at level N (exact)."""
    if N < 1:
        raise InvalidParams("N must be >= 1")
    lhs = [_term(pair.F, N, k) for k in range(N)]
    rhs = []
    for n in range(N):
        rhs.append(_term(pair.F, n + 1, n))
        rhs.append(_term(pair.G, n, n))
        rhs.append(_term(pair.G, n, 0).times_coef(-1))
    return fsum(lhs), fsum(rhs)


# ---------------------------------------------------------------------------
# the three summation identities, built side by side from their definitions
# ---------------------------------------------------------------------------


def _one_q_q2(k: int, mid: int = 1) -> Poly:
    return Poly.from_pairs([(0, 1), (k, mid), (2 * k, 1)])


def _id2_sides(n: int):
    lhs = [
        FTerm((-1) ** k)
        .times_poly(_one_q_q2(k))
        .times_poch_minus_q(k, -1)
        .times_qint(k, -1)
        .times_qbin(2 * k, k, -1)
        for k in range(1, n + 1)
    ]
    rhs = [
        FTerm((-1) ** k).times_poch_minus_q(n, -1).times_qint(k, -1).times_qbin(n + k, k, -1)
        for k in range(1, n + 1)
    ]
    rhs += [
        FTerm(-1).times_qpow(k).times_poch_minus_q(k, -1).times_qint(k, -1)
        for k in range(1, n + 1)
    ]
    return lhs, rhs


def _id3_sides(n: int):
    lhs = [
        FTerm()
        .times_poly(_one_q_q2(k))
        .times_qpow(-comb(k, 2))
        .times_one_plus(k, -2)
        .times_qint(k, -1)
        .times_qbin(2 * k, k)
        for k in range(1, n + 1)
    ]
    rhs = [
        FTerm()
        .times_qpow(-comb(k, 2))
        .times_qint(k, -1)
        .times_qbin(n + k, k)
        .times_qbin(n, k, -1)
        for k in range(1, n + 1)
    ]
    rhs += [FTerm(-1).times_qpow(k).times_qint(2 * k, -1) for k in range(1, n + 1)]
    return lhs, rhs


def _id4_sides(n: int):
    lhs = [
        FTerm((-1) ** k)
        .times_poly(_one_q_q2(k, 3))
        .times_qpow(-comb(k, 2))
        .times_one_plus(k, -1)
        .times_qint(k, -2)
        .times_qbin(2 * k, k)
        for k in range(1, n + 1)
    ]
    rhs = [
        FTerm((-1) ** k)
        .times_one_plus(k)
        .times_qpow(-comb(k, 2))
        .times_qint(k, -2)
        .times_qbin(n + k, k)
        .times_qbin(n, k, -1)
        for k in range(1, n + 1)
    ]
    rhs += [FTerm(-1).times_qpow(k).times_qint(k, -2) for k in range(1, n + 1)]
    return lhs, rhs


_IDENTITY_SIDES = {"id2": _id2_sides, "id3": _id3_sides, "id4": _id4_sides}


def identity_sides(which: str, n: int) -> Tuple[RatFun, RatFun]:
    if which not in _IDENTITY_SIDES:
        raise InvalidParams("unknown identity %r" % which)
    if n < 1:
        raise InvalidParams("n must be >= 1")
    lhs, rhs = _IDENTITY_SIDES[which](n)
    return fsum(lhs), fsum(rhs)


def identity_check(which: str, n: int) -> bool:
    """Exact equality of both sides of one of the three identities."""
    lhs, rhs = identity_sides(which, n)
    return lhs == rhs


def id3_classical_identity(n: int) -> bool:
    """The q -> 1 limit of the second identity, checked in exact rationals:
    3/4 sum 1/k C(2k,k) == sum C(n+k,k)/(k C(n,k)) - 1/2 sum 1/k.
    """
    lhs = Rat(3, 4) * sum(Rat(comb(2 * k, k), k) for k in range(1, n + 1))
    rhs = sum(Rat(comb(n + k, k), k * comb(n, k)) for k in range(1, n + 1))
    rhs -= Rat(1, 2) * sum(Rat(1, k) for k in range(1, n + 1))
    return lhs == rhs
