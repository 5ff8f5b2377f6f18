"""Command-line driver: sweep checks over primes and report results.

Subcommands:
    verify    run catalog checks over a prime range, text or JSON report
    identity  exact check of one of the three summation identities
    wz        difference-equation and telescoping check of a built-in pair
    pp        exact partial sums of the numeric series identity at rational q

Exit codes: 0 all (non-experimental) checks pass, 1 a check failed,
2 configuration or internal error.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from .checks import CATALOG
from .errors import QCongrError
from .primes import primes_in_range
from .records import VerificationRecord, records_to_json
from .scalars import Rat, rat_str
from . import sums, wz


@dataclass
class RunConfig:
    check_ids: List[str]
    prime_range: Optional[Tuple[int, int]] = None
    grid_overrides: Dict[str, object] = field(default_factory=dict)
    output_format: str = "text"
    output_path: Optional[str] = None
    parallelism: int = 1

    def validate(self) -> None:
        for cid in self.check_ids:
            if cid not in CATALOG:
                raise ValueError("unknown check id %r (see --help for the catalog)" % cid)
        if self.prime_range is not None and self.prime_range[0] > self.prime_range[1]:
            raise ValueError("prime range lo must be <= hi")
        if self.output_format not in ("text", "json"):
            raise ValueError("format must be text or json")
        if self.parallelism < 1:
            raise ValueError("jobs must be >= 1")


def _parse_primes(text: str) -> Tuple[int, int]:
    lo, sep, hi = text.partition("..")
    if not sep:
        raise ValueError("prime range must look like 7..23, got %r" % text)
    return int(lo), int(hi)


def _prime_task(args) -> List[VerificationRecord]:
    cid, p, overrides = args
    return CATALOG[cid].run(p, overrides)


def _collect(config: RunConfig) -> List[VerificationRecord]:
    prime_tasks = []
    records: List[VerificationRecord] = []
    for cid in config.check_ids:
        spec = CATALOG[cid]
        if spec.kind == "global":
            records.extend(spec.run(config.grid_overrides))
            continue
        lo, hi = config.prime_range if config.prime_range else spec.default_primes
        for p in primes_in_range(lo, hi):
            if p >= spec.min_p:
                prime_tasks.append((cid, p, config.grid_overrides))
    if config.parallelism > 1 and len(prime_tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            for chunk in pool.map(_prime_task, prime_tasks):
                records.extend(chunk)
    else:
        for task in prime_tasks:
            records.extend(_prime_task(task))
    records.sort(key=VerificationRecord.sort_key)
    return records


def _emit(records: List[VerificationRecord], config: RunConfig) -> None:
    if config.output_format == "json":
        text = records_to_json(records)
    else:
        lines = [r.text_line() for r in records]
        gating = [r for r in records if not r.experimental]
        failed = sum(1 for r in gating if not r.holds)
        lines.append(
            "%d records, %d gating, %d failed" % (len(records), len(gating), failed)
        )
        text = "\n".join(lines)
    if config.output_path:
        with open(config.output_path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def run(config: RunConfig) -> int:
    """Execute a verification sweep; return the process exit code."""
    config.validate()
    records = _collect(config)
    _emit(records, config)
    if any(not r.holds for r in records if not r.experimental):
        return 1
    return 0


def _cmd_verify(args) -> int:
    config = RunConfig(
        check_ids=[s.strip() for s in args.id.split(",") if s.strip()],
        prime_range=_parse_primes(args.primes) if args.primes else None,
        output_format=args.format,
        output_path=args.out,
        parallelism=args.jobs,
    )
    if not config.check_ids:
        raise ValueError("no check ids given")
    return run(config)


def _cmd_identity(args) -> int:
    ok = True
    for n in range(1, args.nmax + 1):
        holds = wz.identity_check(args.id, n)
        ok = ok and holds
        print("%s n=%d: %s" % (args.id, n, "PASS" if holds else "FAIL"))
    return 0 if ok else 1


def _cmd_wz(args) -> int:
    pair = wz.BUILTIN_PAIRS[args.pair]
    diff_ok = wz.wz_difference_check(pair, args.nmax)
    print("%s difference equation on 0 <= k <= n <= %d: %s"
          % (args.pair, args.nmax, "PASS" if diff_ok else "FAIL"))
    lhs, rhs = wz.wz_telescope(pair, max(args.nmax, 1))
    tel_ok = lhs == rhs
    print("%s telescoping at N=%d: %s"
          % (args.pair, max(args.nmax, 1), "PASS" if tel_ok else "FAIL"))
    return 0 if diff_ok and tel_ok else 1


def _cmd_pp(args) -> int:
    q_value = Rat(Fraction(args.q))
    lhs, rhs = sums.pp_series_check(q_value, args.terms)
    diff = abs(lhs - rhs)
    print("lhs = %s" % rat_str(lhs))
    print("rhs = %s" % rat_str(rhs))
    print("|lhs - rhs| = %s (~%.3g)" % (rat_str(diff), float(diff)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qcongr",
        description="exact verification of q-series congruences and identities",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pv = sub.add_parser("verify", help="run catalog checks over a prime sweep")
    pv.add_argument("--id", required=True,
                    help="comma-separated check ids; catalog: " + ", ".join(sorted(CATALOG)))
    pv.add_argument("--primes", default=None, metavar="LO..HI",
                    help="inclusive prime range (default: per-check range)")
    pv.add_argument("--format", choices=("text", "json"), default="text")
    pv.add_argument("--out", default=None, help="write the report to a file")
    pv.add_argument("--jobs", type=int, default=1, help="parallel prime-sweep workers")
    pv.set_defaults(func=_cmd_verify)

    pi = sub.add_parser("identity", help="exact identity check")
    pi.add_argument("--id", required=True, choices=("id2", "id3", "id4"))
    pi.add_argument("--nmax", type=int, default=10)
    pi.set_defaults(func=_cmd_identity)

    pw = sub.add_parser("wz", help="q-WZ pair verification")
    pw.add_argument("--pair", required=True, choices=("az", "sec4", "sec5"))
    pw.add_argument("--nmax", type=int, default=10)
    pw.set_defaults(func=_cmd_wz)

    pq = sub.add_parser("pp", help="numeric series identity at rational q")
    pq.add_argument("--q", required=True, help="rational in (0,1), e.g. 1/2")
    pq.add_argument("--terms", type=int, default=40)
    pq.set_defaults(func=_cmd_pp)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (QCongrError, ValueError, KeyError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
