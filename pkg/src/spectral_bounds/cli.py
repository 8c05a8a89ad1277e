"""Command-line front end: ``spectral-bounds {estimate,verify,demo,replay,export}``.

Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse
error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .constructions import (
    BUILTIN_KERNELS,
    block_cyclic,
    block_cyclic_kth_power_blocks,
    cyclic_products,
    kernel_discretize,
    truncated_shift_family,
)
from .core import (
    NORM_IDS,
    WeightVector,
    hadamard_product,
    operator_norm,
    spectral_radius,
    weighted_hadamard_mean,
)
from .estimators import estimate
from .matrixio import (
    FORMAT_VERSION,
    MatrixFileError,
    dumps,
    load_matrix_set,
    write_matrix_set,
)
from .setalg import BudgetExceeded, OperatorSet
from .verifier import FAMILIES, InstanceConfig, SuiteResult, replay, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3

DEMOS = ("shift-gap", "zhan", "block-cyclic", "kernel")

SHIFT_CAVEAT = (
    "Every finite truncation of the shift family is nilpotent, so both radii are 0 "
    "in the limit; the gap rho = 0 < rho_hat = 1 of the infinite family shows up here "
    "only as the depth-limited bracket [0, 1] for depths below n."
)
FINITE_NOTE = "bounds computed for a finite operator set by exhaustive word enumeration"


class UsageError(Exception):
    pass


def _int_range(text: str) -> tuple[int, int]:
    try:
        if "-" in text:
            lo, hi = text.split("-", 1)
            return int(lo), int(hi)
        v = int(text)
        return v, v
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {text!r}") from None


def format_bracket(est) -> str:
    return (
        f"[{est.lower:.12g}, {est.upper:.12g}] "
        f"(depths {est.depth_lower}/{est.depth_upper}, norm {est.norm_id})"
    )


# ---------------------------------------------------------------- estimate


def cmd_estimate(args) -> int:
    results = []
    for path in args.paths:
        S = load_matrix_set(path)
        est = estimate(S, args.depth, args.norm, budget=args.budget, rtol=args.rtol)
        results.append((path, S, est))
        if not args.json:
            name = S.label or Path(path).name
            print(f"{name}: {len(S)} members, dim {S.dim}")
            print(f"  rho(S) and rho_hat(S) lie in {format_bracket(est)}")
            print(f"  lower attained by word {list(est.argmax_word.indices)}; "
                  f"upper attained at length {est.upper_length}")
            print(f"  note: {FINITE_NOTE}")
    if args.json:
        doc = {
            "format_version": FORMAT_VERSION,
            "command": "estimate",
            "results": [
                {
                    "file": str(p),
                    "label": S.label,
                    "dim": S.dim,
                    "members": len(S),
                    "estimate": est.to_dict(),
                    "note": FINITE_NOTE,
                }
                for p, S, est in results
            ],
        }
        print(dumps(doc))
    return EXIT_OK


# ---------------------------------------------------------------- verify


def _config_from_args(args) -> InstanceConfig:
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    unknown = [c for c in checks if c not in FAMILIES]
    if unknown or not checks:
        raise UsageError(
            f"unknown check name(s) {', '.join(unknown) or '<empty>'}; "
            f"valid options: {', '.join(FAMILIES)}"
        )
    return InstanceConfig(
        dim_range=args.dim,
        set_size_range=args.set_size,
        k_range=args.k,
        m_range=args.m,
        density=args.density,
        entry_scale=args.entry_scale,
        weight_mode=args.weight_mode,
        seed=args.seed,
        trials=args.trials,
        depth=args.depth,
        rtol=args.rtol,
        checks=checks,
        word_cap=args.word_cap,
        samples=args.samples,
        budget=args.budget,
        kind=args.kind,
    )


def _write_witnesses(result: SuiteResult, out: Path) -> list[Path]:
    out.mkdir(parents=True, exist_ok=True)
    written = {}
    for r in result.failures:
        key = (r.family, r.trial)
        if key in written:
            continue
        path = out / f"witness-{r.family}-seed{r.seed}-trial{r.trial}.json"
        path.write_text(dumps(r.witness))
        written[key] = path
    return list(written.values())


def cmd_verify(args) -> int:
    try:
        cfg = _config_from_args(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    result = run_suite(cfg, threads=args.threads)
    witnesses = _write_witnesses(result, Path(args.out)) if result.failures else []
    if args.json:
        doc = {
            "format_version": FORMAT_VERSION,
            "command": "verify",
            "config": asdict(cfg),
            "summary": result.summary,
            "failures": [r.to_dict() for r in result.failures],
            "witness_files": [str(p) for p in witnesses],
            "exit_status": result.exit_status,
        }
        print(dumps(doc))
    else:
        print(f"seed {cfg.seed}, {cfg.trials} trial(s), rtol {cfg.rtol:g}")
        width = max(len(k) for k in result.summary)
        for cid, s in result.summary.items():
            status = "PASS" if s["failed"] == 0 else "FAIL"
            print(f"  {status}  {cid:<{width}}  passed {s['passed']:>5}  failed {s['failed']:>3}"
                  f"  min slack {s['min_slack']:+.3e}")
        for p in witnesses:
            print(f"  witness written: {p}")
        print("all checks passed" if result.ok else f"{len(result.failures)} failing report(s)")
    return result.exit_status


def cmd_replay(args) -> int:
    try:
        witness = json.loads(Path(args.witness).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"{args.witness}: cannot read witness ({exc})") from None
    reports = replay(witness, args.rtol)
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.check_id}  lhs {r.lhs!r}  rhs {r.rhs!r}  slack {r.slack:+.3e}")
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------- demos


def demo_shift_gap(n: int = 8, norm_id: str = "row-sum") -> dict:
    S = truncated_shift_family(n, n - 1)
    est = estimate(S, n - 1, norm_id)
    chain = np.eye(n)
    for A in reversed(S.members):
        chain = chain @ A
    e1 = np.zeros(n)
    e1[0] = 1.0
    return {
        "demo": "shift-gap",
        "n": n,
        "count": n - 1,
        "depth": n - 1,
        "estimate": est.to_dict(),
        "chain_image_of_e1": (chain @ e1).tolist(),
        "caveat": SHIFT_CAVEAT,
    }


def demo_zhan(n: int = 5, seed: int = 0) -> dict:
    rng = np.random.default_rng(seed)
    A, B = rng.random((n, n)), rng.random((n, n))
    lhs = spectral_radius(hadamard_product(A, B))
    rhs = spectral_radius(A @ B)
    return {"demo": "zhan", "n": n, "seed": seed, "rho_hadamard": lhs, "rho_product": rhs,
            "slack": rhs - lhs}


def demo_block_cyclic(k: int = 2, n: int = 1, seed: int | None = None) -> dict:
    if seed is None:
        mats = [np.ones((n, n)) for _ in range(k)]
    else:
        rng = np.random.default_rng(seed)
        mats = [rng.random((n, n)) for _ in range(k)]
    T = block_cyclic(mats)
    rho_T = spectral_radius(T)
    rho_P = spectral_radius(cyclic_products(mats)[0])
    blocks = block_cyclic_kth_power_blocks(mats)
    err = max(float(np.max(np.abs(Bk - D))) for Bk, D in zip(blocks, cyclic_products(mats)))
    return {"demo": "block-cyclic", "k": k, "n": n, "rho_T": rho_T, "rho_T_pow_k": rho_T**k,
            "rho_cyclic_product": rho_P, "max_block_error": err}


def demo_kernel(name: str = "gauss", other: str = "hilbert", n: int = 32) -> dict:
    K1, K2 = kernel_discretize(name, n), kernel_discretize(other, n)
    w = WeightVector.uniform(2)
    G = weighted_hadamard_mean([K1, K2], w)
    r1, r2, rg = spectral_radius(K1), spectral_radius(K2), spectral_radius(G)
    return {
        "demo": "kernel",
        "n": n,
        "kernels": [name, other],
        "rho": [r1, r2],
        "norm_row_sum": [operator_norm(K1), operator_norm(K2)],
        "rho_geometric_mean": rg,
        "bound": float(np.prod(np.power([r1, r2], w.weights))),
    }


def cmd_demo(args) -> int:
    if args.name == "shift-gap":
        doc = demo_shift_gap(args.n or 8, args.norm)
    elif args.name == "zhan":
        doc = demo_zhan(args.n or 5, args.seed)
    elif args.name == "block-cyclic":
        doc = demo_block_cyclic(args.k, args.n or 1, args.seed if args.random else None)
    else:
        doc = demo_kernel(args.kernel, args.other_kernel, args.n or 32)
    if args.json:
        print(dumps(doc))
        return EXIT_OK
    if args.name == "shift-gap":
        e = doc["estimate"]
        print(f"truncated shift family n={doc['n']}, {doc['count']} members, depth {doc['depth']}")
        print(f"  bracket [{e['lower']:g}, {e['upper']:g}] "
              f"(depths {e['depth_lower']}/{e['depth_upper']}, norm {e['norm']})")
        print(f"  A_{doc['count']} ... A_1 e_1 = {doc['chain_image_of_e1']}")
        print(f"  caveat: {doc['caveat']}")
    elif args.name == "zhan":
        print(f"random {doc['n']}x{doc['n']} pair, seed {doc['seed']}")
        print(f"  rho(A o B) = {doc['rho_hadamard']:.12g}")
        print(f"  rho(AB)    = {doc['rho_product']:.12g}")
        print(f"  slack      = {doc['slack']:.3e}")
    elif args.name == "block-cyclic":
        print(f"block-cyclic T with k={doc['k']} blocks of size {doc['n']}")
        print(f"  rho(T) = {doc['rho_T']:.12g}")
        print(f"  rho(T)^k = {doc['rho_T_pow_k']:.12g}, rho(A_1...A_k) = "
              f"{doc['rho_cyclic_product']:.12g}")
        print(f"  max |diag block of T^k - cyclic product| = {doc['max_block_error']:.3e}")
    else:
        a, b = doc["kernels"]
        print(f"midpoint discretization, n={doc['n']}")
        print(f"  rho({a}) = {doc['rho'][0]:.12g}, rho({b}) = {doc['rho'][1]:.12g}")
        print(f"  rho({a}^(1/2) o {b}^(1/2)) = {doc['rho_geometric_mean']:.12g} "
              f"<= {doc['bound']:.12g}")
    return EXIT_OK


# ---------------------------------------------------------------- export


def cmd_export(args) -> int:
    if args.what == "shift":
        S = truncated_shift_family(args.n, args.count or args.n - 1)
    elif args.what == "shift-pair":
        S = OperatorSet(([[0.0, 1.0], [0.0, 0.0]], [[0.0, 0.0], [1.0, 0.0]]), "shift-pair")
    elif args.what == "identity":
        S = OperatorSet((np.eye(args.n),), "identity")
    else:
        S = OperatorSet((kernel_discretize(args.what, args.n),), args.what)
    write_matrix_set(args.output, S)
    return EXIT_OK


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spectral-bounds", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(q):
        q.add_argument("--rtol", type=float, default=1e-9)
        q.add_argument("--budget", type=int, default=None,
                       help="word budget (default 10^6 or $SPECTRAL_BOUNDS_BUDGET)")
        q.add_argument("--json", action="store_true")

    e = sub.add_parser("estimate", help="bracket rho and rho_hat of matrix-set files")
    e.add_argument("paths", nargs="+")
    e.add_argument("--depth", type=int, default=4)
    e.add_argument("--norm", choices=NORM_IDS, default="row-sum")
    common(e)
    e.set_defaults(func=cmd_estimate)

    v = sub.add_parser("verify", help="run randomized inequality checks")
    v.add_argument("--checks", default=",".join(FAMILIES),
                   help=f"comma-separated subset of {','.join(FAMILIES)}")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--dim", type=_int_range, default=(1, 6))
    v.add_argument("--set-size", type=_int_range, default=(1, 3))
    v.add_argument("--k", type=_int_range, default=(1, 3))
    v.add_argument("--m", type=_int_range, default=(1, 3))
    v.add_argument("--density", type=float, default=1.0)
    v.add_argument("--entry-scale", type=float, default=1.0)
    v.add_argument("--weight-mode", choices=("exact-one", "at-least-one"), default="exact-one")
    v.add_argument("--kind", choices=("random", "identity"), default="random")
    v.add_argument("--depth", type=int, default=4)
    v.add_argument("--word-cap", type=int, default=2000)
    v.add_argument("--samples", type=int, default=50)
    v.add_argument("--threads", type=int, default=1)
    v.add_argument("--out", default="witnesses")
    common(v)
    v.set_defaults(func=cmd_verify)

    r = sub.add_parser("replay", help="re-run the checks stored in a witness file")
    r.add_argument("witness")
    r.add_argument("--rtol", type=float, default=None)
    r.set_defaults(func=cmd_replay)

    d = sub.add_parser("demo", help="worked examples")
    d.add_argument("name", choices=DEMOS)
    d.add_argument("--n", type=int, default=None)
    d.add_argument("--k", type=int, default=2)
    d.add_argument("--seed", type=int, default=0)
    d.add_argument("--random", action="store_true", help="block-cyclic: random blocks")
    d.add_argument("--norm", choices=NORM_IDS, default="row-sum")
    d.add_argument("--kernel", choices=sorted(BUILTIN_KERNELS), default="gauss")
    d.add_argument("--other-kernel", choices=sorted(BUILTIN_KERNELS), default="hilbert")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_demo)

    x = sub.add_parser("export", help="write a built-in matrix set to a JSON file")
    x.add_argument("what", choices=("shift", "shift-pair", "identity") + tuple(sorted(BUILTIN_KERNELS)))
    x.add_argument("output")
    x.add_argument("--n", type=int, default=8)
    x.add_argument("--count", type=int, default=None)
    x.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"spectral-bounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MatrixFileError as exc:
        print(f"spectral-bounds: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"spectral-bounds: budget exceeded: {exc} "
              f"(raise --budget or $SPECTRAL_BOUNDS_BUDGET)", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"spectral-bounds: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
