"""``ffdet`` command line: sweeps of claim checks emitted as JSON lines or a table.

Exit status is 0 when every report matched, 1 on any mismatch and 2 for
usage errors or explicit parameters outside a claim's hypothesis.
"""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, TextIO

from . import paper_matrices as pm
from .field_core import FieldError, is_prime, make_extension_field
from .polyring import verify_lemma21
from .report import PreconditionError, VerificationReport

COMMANDS = ("verify-theorem", "verify-lemmas", "conjecture", "zoo", "det-tq", "field-info")
DEFAULT_MAX_Q = 200
DEFAULT_MAX_P = 200
# the rational A_p determinant grows quickly; the zoo sweep stays small by default
DEFAULT_ZOO_MAX_P = 50
DEFAULT_SEED = 2023
DEFAULT_TRIALS = 100


class UsageError(Exception):
    pass


def odd_prime_powers(bound: int) -> list[tuple[int, int, int]]:
    """(p, r, q) for every odd prime power q <= bound, ascending in q."""
    out = []
    for p in range(3, bound + 1, 2):
        if is_prime(p):
            q, r = p, 1
            while q <= bound:
                out.append((p, r, q))
                q, r = q * p, r + 1
    return sorted(out, key=lambda t: t[2])


def enumerate_valid_q(bound: int) -> list[tuple[int, int, int]]:
    """Odd prime powers q = 2 (mod 3) up to ``bound``."""
    if bound < 5:
        raise ValueError(f"bound must be at least 5, got {bound}")
    return [t for t in odd_prime_powers(bound) if t[2] % 3 == 2]


@dataclass
class RunConfig:
    command: str
    max_q: int | None = None
    max_p: int | None = None
    q: int | None = None
    p: int | None = None
    r: int | None = None
    lam: int | None = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS
    jobs: int = 1
    cache_path: str | None = None
    output_format: str = "json-lines"
    timings: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        for name in ("max_q", "max_p"):
            value = getattr(self, name)
            if value is not None and value < 5:
                raise UsageError(f"--{name.replace('_', '-')} must be at least 5")
        if self.jobs < 1:
            raise UsageError("--jobs must be positive")


Task = tuple[Callable[..., VerificationReport], tuple]


def _call(task: Task) -> VerificationReport:
    fn, args = task
    return fn(*args)


def _tasks(cfg: RunConfig) -> list[Task]:
    cache = cfg.cache_path
    if cfg.command == "verify-theorem":
        qs = [cfg.q] if cfg.q is not None else \
            [q for _, _, q in enumerate_valid_q(cfg.max_q or DEFAULT_MAX_Q)]
        return [(fn, (q, cache)) for q in qs for fn in (pm.check_theorem, pm.theorem_assembly_check)]
    if cfg.command == "verify-lemmas":
        bound = cfg.max_q or DEFAULT_MAX_Q
        tasks: list[Task] = [(_lemma21, (q, cache)) for _, _, q in enumerate_valid_q(bound)]
        tasks += [(pm.check_lemma22_random, (mod, cfg.trials, cfg.seed)) for mod in (7, 0)]
        tasks.append((pm.check_lemma22_grid, (3, 2)))
        tasks += [(pm.check_lemma23, (m,)) for m in range(1, 61)]
        tasks += [(pm.check_lemma24, (q, cache)) for _, _, q in odd_prime_powers(bound)]
        return tasks
    if cfg.command == "conjecture":
        ps = [cfg.p] if cfg.p is not None else \
            [p for p in range(5, (cfg.max_p or DEFAULT_MAX_P) + 1) if is_prime(p) and p % 3 == 2]
        return [(pm.check_corollary, (p,)) for p in ps]
    if cfg.command == "zoo":
        bound = cfg.max_p or DEFAULT_ZOO_MAX_P
        primes = [cfg.p] if cfg.p is not None else [p for p in range(3, bound + 1) if is_prime(p)]
        lams = [cfg.lam] if cfg.lam is not None else [0, 1, 2]
        tasks = [(pm.check_sun_sp, (p,)) for p in primes]
        tasks += [(pm.check_sun_ap, (p,)) for p in primes if p % 4 == 3]
        tasks += [(pm.check_carlitz, (p, lam)) for p in primes if p >= 5 for lam in lams]
        return tasks
    if cfg.command == "det-tq":
        if cfg.q is None:
            raise UsageError("det-tq needs --q")
        return [(pm.check_theorem, (cfg.q, cache))]
    raise AssertionError(cfg.command)


def _lemma21(q: int, cache=None) -> VerificationReport:
    return verify_lemma21(make_extension_field(*pm.factor_prime_power(q), cache))


def collect(cfg: RunConfig) -> list[VerificationReport]:
    """Run every check for ``cfg`` and return the reports in canonical order."""
    tasks = _tasks(cfg)
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(_call, tasks))
    else:
        reports = [_call(t) for t in tasks]
    return sorted(reports, key=VerificationReport.sort_key)


def format_table(reports: list[VerificationReport], timings: bool) -> str:
    rows = [("claim", "params", "computed", "predicted", "matched", "ms")]
    for rep in reports:
        params = " ".join(f"{k}={v}" for k, v in rep.params.items())
        rows.append((rep.claim.value, params, rep.computed, rep.predicted,
                     "yes" if rep.matched else "NO", str(rep.elapsed_ms if timings else 0)))
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def _field_info(cfg: RunConfig, out: TextIO) -> int:
    if cfg.p is None:
        raise UsageError("field-info needs --p")
    try:
        ctx = make_extension_field(cfg.p, cfg.r or 1, cfg.cache_path)
    except FieldError as exc:
        raise UsageError(str(exc)) from None
    modulus = ",".join(str(c) for c in ctx.modulus)
    if cfg.output_format == "table":
        print(f"F_{ctx.q} = F_{ctx.p}[T]/(f), f coefficients (constant first): {modulus}", file=out)
    else:
        print(json.dumps({"p": ctx.p, "r": ctx.r, "q": ctx.q, "modulus": modulus},
                         separators=(", ", ": ")), file=out)
    return 0


def run(cfg: RunConfig, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    try:
        if cfg.command == "field-info":
            return _field_info(cfg, out)
        reports = collect(cfg)
    except (UsageError, PreconditionError, FieldError, ValueError) as exc:
        print(f"ffdet: error: {exc}", file=err)
        return 2
    if cfg.q is not None or cfg.p is not None:
        # explicit parameters outside the hypothesis are usage errors
        bad = [r for r in reports if r.precondition_failed]
        if bad:
            for r in bad:
                print(f"ffdet: error: {r.claim.value}: {r.reason}", file=err)
            return 2
    if cfg.output_format == "table":
        print(format_table(reports, cfg.timings), file=out)
    else:
        for rep in reports:
            print(rep.to_json(timing=cfg.timings), file=out)
    return 0 if all(r.matched for r in reports) else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--q", type=int)
    common.add_argument("--p", type=int)
    common.add_argument("--r", type=int)
    common.add_argument("--lambda", dest="lam", type=int)
    common.add_argument("--max-q", type=int)
    common.add_argument("--max-p", type=int)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--cache", dest="cache_path", metavar="PATH",
                        help="irreducible-polynomial cache file")
    common.add_argument("--format", dest="output_format", default="json-lines",
                        choices=("json-lines", "table"))
    common.add_argument("--timings", action="store_true",
                        help="report wall-clock elapsed_ms (otherwise 0, keeping output reproducible)")

    parser = argparse.ArgumentParser(prog="ffdet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    helps = {
        "verify-theorem": "det T_q and each step of its evaluation for valid q <= --max-q",
        "verify-lemmas": "the four supporting lemmas",
        "conjecture": "2 det T_p is a quadratic residue for p = 2 mod 3, p <= --max-p",
        "zoo": "S_p, A_p and C_p(lambda) statements for small primes",
        "det-tq": "one determinant det T_q (--q) with its predicted value",
        "field-info": "modulus chosen for F_{p^r} (--p, --r)",
    }
    for name in COMMANDS:
        sub.add_parser(name, parents=[common], help=helps[name])
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(**vars(args))
    except UsageError as exc:
        print(f"ffdet: error: {exc}", file=sys.stderr)
        return 2
    return run(cfg)


if __name__ == "__main__":
    sys.exit(main())
