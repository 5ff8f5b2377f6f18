"""Check catalog: maps stable check ids to runners producing records.

Prime-based checks take a prime and return one record per parameter
tuple; global checks (exact identities, the series check) ignore the
prime sweep and report prime = power = 0.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from . import classical, sums, wz
from .congruence import CongruenceResult, ModRing, Modulus
from .primes import primes_in_range
from .ratfun import RatFun
from .records import VerificationRecord
from .scalars import Rat, rat_str

GridOverrides = Dict[str, object]


@dataclass(frozen=True)
class CheckSpec:
    id: str
    kind: str  # "prime" | "global"
    run: Callable  # prime kind: (p, overrides) -> records; global: (overrides) -> records
    default_primes: Tuple[int, int] = (0, 0)
    min_p: int = 3
    experimental: bool = False
    description: str = ""


def _side_str(x) -> str:
    s = str(x)
    if len(s) > 400 and isinstance(x, RatFun):
        return "<rational function, num deg %d, den deg %d>" % (x.num.degree, x.den.degree)
    return s


def _cong_record(
    check_id: str,
    p: int,
    power: int,
    params: dict,
    res: CongruenceResult,
    t0: float,
    experimental: bool = False,
) -> VerificationRecord:
    return VerificationRecord(
        id=check_id,
        prime=p,
        power=power,
        params=params,
        holds=res.holds,
        experimental=experimental,
        lhs_reduced=str(res.witness),
        rhs_reduced="0",
        elapsed_ms=int((time.perf_counter() - t0) * 1000),
    )


def _residue(x, p: int, r: int) -> int:
    """Canonical integer representative of a rational modulo p**r."""
    m = p**r
    x = Rat(x)
    return int(x.numerator) * pow(int(x.denominator), -1, m) % m


# ---------------------------------------------------------------------------
# prime-based runners
# ---------------------------------------------------------------------------


def _run_intro(which: int, power: int = 1, experimental: bool = False):
    def run(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
        cid = "intro%d" % which + ("-sq" if power == 2 else "")
        t0 = time.perf_counter()
        res = sums.intro_check(p, which, power=power)
        params = {"pair": which}
        if which == 3:
            params["lower_bound"] = 0
        exp = experimental or p < 7
        return [_cong_record(cid, p, power, params, res, t0, exp)]

    return run


def _run_qc1(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    r1, r2 = sums.qc1_check(p)
    return [
        _cong_record("qc1", p, 1, {"chain": 1}, r1, t0),
        _cong_record("qc1", p, 1, {"chain": 2}, r2, t0),
    ]


def _run_qc2(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    return [_cong_record("qc2", p, 2, {}, sums.qc2_check(p), t0)]


def _run_qc3(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    return [_cong_record("qc3", p, 3, {}, sums.qc3_check(p), t0)]


def _qh_grid(p: int, overrides: GridOverrides):
    for a in overrides.get("a", (1, 2, 3)):
        if math.gcd(a, p) != 1:
            continue
        for b in overrides.get("b", (0, 1, 2, 3)):
            for d in overrides.get("d", (1, 2, 3)):
                yield a, b, d


def _run_qh(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    out = []
    for a, b, d in _qh_grid(p, overrides):
        t0 = time.perf_counter()
        res = sums.qh_check(p, a, b, d)
        out.append(_cong_record("qh", p, 1, {"a": a, "b": b, "d": d}, res, t0))
    return out


def _pair_grid(p: int, overrides: GridOverrides):
    for a in overrides.get("a", (1, 2)):
        if math.gcd(a, p) != 1:
            continue
        for d in overrides.get("d", (1, 2, 3)):
            for b in range(a * d + 1):
                yield a, b, d, a * d - b


def _run_qhpair(alternating: bool):
    cid = "qhneg" if alternating else "qhpos"

    def run(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
        out = []
        ring = ModRing(Modulus(p, 2))
        for a, b, d, bb in _pair_grid(p, overrides):
            t0 = time.perf_counter()
            params = sums.QhParams.for_prime(p, a, b, d, b_bar=bb)
            res = sums.qhpos_check(p, params, alternating=alternating, ring=ring)
            out.append(
                _cong_record(cid, p, 2, {"a": a, "b": b, "b_bar": bb, "d": d}, res, t0)
            )
        return out

    return run


def _run_qhh(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    out = []
    ds = overrides.get("d", (1, 2, 3))
    ring = ModRing(Modulus(p, 1))
    for d1 in ds:
        for b1 in range(d1 + 1):
            for d2 in ds:
                for b2 in range(d2 + 1):
                    t0 = time.perf_counter()
                    res = sums.qhh_check(p, b1, d1 - b1, d1, b2, d2 - b2, d2, ring=ring)
                    out.append(
                        _cong_record(
                            "qhh",
                            p,
                            1,
                            {"b1": b1, "d1": d1, "b2": b2, "d2": d2},
                            res,
                            t0,
                        )
                    )
    return out


def _run_bc(which: int):
    power = 2 if which == 1 else 3

    def run(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
        out = []
        for a in overrides.get("a", (1, 2, 3)):
            for k in range(1, p):
                t0 = time.perf_counter()
                res = sums.lemma_bc_check(p, a, k, which)
                out.append(
                    _cong_record("bc%d" % which, p, power, {"a": a, "k": k}, res, t0)
                )
        return out

    return run


def _run_qcan(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    out = []
    for a in overrides.get("a", (1, 2, 3)):
        t0 = time.perf_counter()
        out.append(_cong_record("qcan", p, 2, {"a": a}, sums.qcan_check(p, a), t0))
    return out


def _run_sp(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    return [_cong_record("sp", p, 2, {}, sums.sp_check(p), t0)]


def _run_qhpos3(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    return [_cong_record("qhpos3", p, 2, {}, sums.qhpos3_check(p), t0)]


def _run_sec5aux(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    single, double = sums.sec5aux_check(p)
    return [
        _cong_record("sec5aux", p, 1, {"sum": "single"}, single, t0),
        _cong_record("sec5aux", p, 1, {"sum": "double"}, double, t0),
    ]


def _run_sec3(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    out = []
    t0 = time.perf_counter()
    for subid, params, res in sums.section3_chain(p):
        params = dict(params)
        params["step"] = subid
        out.append(_cong_record("sec3", p, 1, params, res, t0))
        t0 = time.perf_counter()
    return out


def _run_pc(which: int):
    power = which

    def run(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
        t0 = time.perf_counter()
        holds = classical.verify_pc(p, which)
        s = classical.central_binomial_sums(p)
        if which == 1:
            lhs = _residue(s["half"], p, 1)
            rhs = _residue(classical.fermat_quotient_two(p), p, 1)
        elif which == 2:
            lhs, rhs = _residue(s["plain"], p, 2), 0
        else:
            lhs = _residue(Rat(5, 2) * s["alt2"], p, 3)
            rhs = _residue(-s["h2"], p, 3)
        return [
            VerificationRecord(
                id="pc%d" % which,
                prime=p,
                power=power,
                params={},
                holds=holds,
                lhs_reduced=str(lhs),
                rhs_reduced=str(rhs),
                elapsed_ms=int((time.perf_counter() - t0) * 1000),
            )
        ]

    return run


def _run_p5(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    t0 = time.perf_counter()
    holds = classical.verify_p5(p)
    lhs = sum(Rat(math.comb(2 * k, k), k) for k in range(1, p))
    rhs = Rat(-8, 3) * classical.harmonic_classical(p, 1)
    rhs += 2 * p**4 * classical.bernoulli(p - 5)
    return [
        VerificationRecord(
            id="p5",
            prime=p,
            power=5,
            params={},
            holds=holds,
            lhs_reduced=str(_residue(lhs, p, 5)),
            rhs_reduced=str(_residue(rhs, p, 5)),
            elapsed_ms=int((time.perf_counter() - t0) * 1000),
        )
    ]


def _run_harmonic(p: int, overrides: GridOverrides) -> List[VerificationRecord]:
    out = []
    for d in overrides.get("d", (1, 2, 3)):
        if p <= d + 2:
            continue
        t0 = time.perf_counter()
        r = 2 if d % 2 else 1
        holds = classical.harmonic_congruence_holds(p, d)
        out.append(
            VerificationRecord(
                id="harmonic",
                prime=p,
                power=r,
                params={"d": d},
                holds=holds,
                lhs_reduced=str(_residue(classical.harmonic_classical(p, d), p, r)),
                rhs_reduced="0",
                elapsed_ms=int((time.perf_counter() - t0) * 1000),
            )
        )
    return out


# ---------------------------------------------------------------------------
# global (prime-independent) runners
# ---------------------------------------------------------------------------


def _run_andrews(overrides: GridOverrides) -> List[VerificationRecord]:
    n_max = int(overrides.get("n_max", 21))
    out = []
    for n in range(1, n_max + 1, 2):
        t0 = time.perf_counter()
        value = sums.andrews_alternating_sum(n)
        out.append(
            VerificationRecord(
                id="andrews",
                prime=0,
                power=0,
                params={"n": n},
                holds=value.is_zero(),
                lhs_reduced=_side_str(value),
                rhs_reduced="0",
                elapsed_ms=int((time.perf_counter() - t0) * 1000),
            )
        )
    return out


def _run_identity(which: str):
    def run(overrides: GridOverrides) -> List[VerificationRecord]:
        n_max = int(overrides.get("n_max", 20))
        out = []
        for n in range(1, n_max + 1):
            t0 = time.perf_counter()
            lhs, rhs = wz.identity_sides(which, n)
            out.append(
                VerificationRecord(
                    id=which,
                    prime=0,
                    power=0,
                    params={"n": n},
                    holds=lhs == rhs,
                    lhs_reduced=_side_str(lhs),
                    rhs_reduced=_side_str(rhs),
                    elapsed_ms=int((time.perf_counter() - t0) * 1000),
                )
            )
        return out

    return run


def _run_wz(pair_id: str):
    def run(overrides: GridOverrides) -> List[VerificationRecord]:
        pair = wz.BUILTIN_PAIRS[pair_id]
        n_max = int(overrides.get("n_max", 15))
        big_n = int(overrides.get("N", 20))
        t0 = time.perf_counter()
        ok = wz.wz_difference_check(pair, n_max)
        rec1 = VerificationRecord(
            id="wz-" + pair_id,
            prime=0,
            power=0,
            params={"check": "difference", "n_max": n_max},
            holds=ok,
            lhs_reduced="F(n+1,k) - F(n,k)",
            rhs_reduced="G(n,k+1) - G(n,k)",
            elapsed_ms=int((time.perf_counter() - t0) * 1000),
        )
        t0 = time.perf_counter()
        lhs, rhs = wz.wz_telescope(pair, big_n)
        rec2 = VerificationRecord(
            id="wz-" + pair_id,
            prime=0,
            power=0,
            params={"check": "telescope", "N": big_n},
            holds=lhs == rhs,
            lhs_reduced=_side_str(lhs),
            rhs_reduced=_side_str(rhs),
            elapsed_ms=int((time.perf_counter() - t0) * 1000),
        )
        return [rec1, rec2]

    return run


def _run_pp(overrides: GridOverrides) -> List[VerificationRecord]:
    q_value = overrides.get("q", Rat(1, 2))
    terms = int(overrides.get("terms", 40))
    t0 = time.perf_counter()
    lhs, rhs = sums.pp_series_check(q_value, terms)
    return [
        VerificationRecord(
            id="pp",
            prime=0,
            power=0,
            params={"q": rat_str(Rat(q_value)), "terms": terms},
            holds=abs(lhs - rhs) <= Rat(1, 10**9),
            lhs_reduced=rat_str(lhs),
            rhs_reduced=rat_str(rhs),
            elapsed_ms=int((time.perf_counter() - t0) * 1000),
        )
    ]


# ---------------------------------------------------------------------------
# the catalog
# ---------------------------------------------------------------------------

CATALOG: Dict[str, CheckSpec] = {}


def _register(spec: CheckSpec) -> None:
    CATALOG[spec.id] = spec


for _w in (1, 2, 3):
    _register(
        CheckSpec(
            "intro%d" % _w,
            "prime",
            _run_intro(_w),
            (7, 29),
            min_p=3,
            description="introductory q-congruence, pair %d, mod [p]" % _w,
        )
    )
for _w in (1, 3):
    _register(
        CheckSpec(
            "intro%d-sq" % _w,
            "prime",
            _run_intro(_w, power=2, experimental=True),
            (7, 29),
            min_p=3,
            experimental=True,
            description="conjectured strengthening of pair %d, mod [p]^2" % _w,
        )
    )
_register(CheckSpec("qc1", "prime", _run_qc1, (7, 31), min_p=7,
                    description="chained central q-binomial congruences, mod [p]"))
_register(CheckSpec("qc2", "prime", _run_qc2, (7, 23), min_p=7,
                    description="central q-binomial sum, mod [p]^2"))
_register(CheckSpec("qc3", "prime", _run_qc3, (7, 17), min_p=7,
                    description="central q-binomial sum with [k]^2, mod [p]^3"))
_register(CheckSpec("qh", "prime", _run_qh, (5, 31), min_p=3,
                    description="truncated q-harmonic sums vs closed form, mod [p]"))
_register(CheckSpec("qhpos", "prime", _run_qhpair(False), (5, 23), min_p=3,
                    description="paired-exponent q-harmonic congruence, mod [p]^2"))
_register(CheckSpec("qhneg", "prime", _run_qhpair(True), (5, 23), min_p=3,
                    description="alternating paired-exponent congruence, mod [p]^2"))
_register(CheckSpec("qhh", "prime", _run_qhh, (5, 23), min_p=3,
                    description="double q-harmonic sums vs products, mod [p]"))
for _w in (1, 2, 3):
    _register(
        CheckSpec(
            "bc%d" % _w,
            "prime",
            _run_bc(_w),
            (5, 19),
            min_p=3,
            description="q-binomial reduction lemma, part %d" % _w,
        )
    )
_register(CheckSpec("qcan", "prime", _run_qcan, (5, 31), min_p=3,
                    description="q-analog of the classical binomial congruence, mod [p]^2"))
_register(CheckSpec("sp", "prime", _run_sp, (7, 23), min_p=5,
                    description="q-harmonic sum with [p]-correction term, mod [p]^2"))
_register(CheckSpec("qhpos3", "prime", _run_qhpos3, (7, 23), min_p=7,
                    description="cubic paired-exponent evaluation, mod [p]^2"))
_register(CheckSpec("sec5aux", "prime", _run_sec5aux, (7, 19), min_p=7,
                    description="quartic auxiliary sums, mod [p]"))
_register(CheckSpec("sec3", "prime", _run_sec3, (7, 23), min_p=7,
                    description="derivation chain: Fermat-quotient sums and reflections"))
_register(CheckSpec("pc1", "prime", _run_pc(1), (7, 101), min_p=7,
                    description="classical central binomial chain, mod p"))
_register(CheckSpec("pc2", "prime", _run_pc(2), (7, 101), min_p=7,
                    description="classical central binomial sum, mod p^2"))
_register(CheckSpec("pc3", "prime", _run_pc(3), (7, 101), min_p=7,
                    description="classical alternating central binomial sum, mod p^3"))
_register(CheckSpec("p5", "prime", _run_p5, (7, 101), min_p=7,
                    description="Bernoulli refinement, mod p^5"))
_register(CheckSpec("harmonic", "prime", _run_harmonic, (7, 101), min_p=5,
                    description="classical harmonic sum congruences"))
_register(CheckSpec("andrews", "global", _run_andrews,
                    description="alternating q-binomial sum vanishes for odd n"))
for _w in ("id2", "id3", "id4"):
    _register(CheckSpec(_w, "global", _run_identity(_w),
                        description="exact summation identity " + _w))
for _w in ("az", "sec4", "sec5"):
    _register(CheckSpec("wz-" + _w, "global", _run_wz(_w),
                        description="q-WZ pair %s: difference equation and telescoping" % _w))
_register(CheckSpec("pp", "global", _run_pp,
                    description="numeric series identity at rational 0 < q < 1"))


def run_check(
    check_id: str,
    primes: Optional[Tuple[int, int]] = None,
    overrides: Optional[GridOverrides] = None,
) -> List[VerificationRecord]:
    """Run one catalog check over a prime range (or its default range)."""
    if check_id not in CATALOG:
        raise KeyError("unknown check id %r" % check_id)
    spec = CATALOG[check_id]
    overrides = overrides or {}
    if spec.kind == "global":
        return spec.run(overrides)
    lo, hi = primes if primes is not None else spec.default_primes
    out: List[VerificationRecord] = []
    for p in primes_in_range(lo, hi):
        if p < spec.min_p:
            continue
        out.extend(spec.run(p, overrides))
    return out
