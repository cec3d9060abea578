"""Command-line surface.

Exit codes: 0 success, 1 verification failure, 2 input error.  All
randomness is seed-controlled (default 0) and reports embed the seed, so
identical invocations produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from . import __version__
from .bijection import (red_hot_potato, red_hot_potato_inverse, trace_to_dots,
                        trace_to_json, verify_forest_identity)
from .enumeration import RootSpec, count_forests, enumerate_forests, forest_weight_sum
from .graphs import S0, S3, graph_to_json, pair_from_json, pair_to_dot, pair_to_json
from .matrices import (DET_METHODS, lewis_carroll_terms, matrix_from_json,
                       rational_to_json, weights_from_json)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_INPUT_ERROR = 2

N_CAP = 6


@dataclass
class RunConfig:
    command: str
    path: Optional[Path] = None
    n: Optional[int] = None
    seed: int = 0
    cap: int = 10 ** 6
    fmt: str = "text"
    method: str = "bareiss"
    inverse: bool = False
    trace: Optional[Path] = None
    dot_dir: Optional[Path] = None
    weights: Optional[Path] = None
    roots: Optional[str] = None
    cross: bool = False
    meta: Optional[str] = None
    list_items: bool = False
    force: bool = False


class InputError(Exception):
    pass


def _load_json(path: Path) -> dict:
    try:
        with open(path) as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}")


def _emit(cfg: RunConfig, payload: dict, text_lines) -> None:
    if cfg.fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _check_n(cfg: RunConfig, n: int) -> None:
    if n < 2:
        raise InputError("need n >= 2 (nodes 0, 1, 2 must exist)")
    if n > N_CAP and not cfg.force:
        raise InputError(f"n = {n} exceeds the exhaustive-enumeration cap {N_CAP}; "
                         "pass --force to override")


def cmd_verify_lc(cfg: RunConfig) -> int:
    try:
        M = matrix_from_json(_load_json(cfg.path))
        terms = lewis_carroll_terms(M)
    except (InputError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    names = ("det(M)", "det(M_{12,12})", "det(M_{2,2})", "det(M_{1,1})",
             "det(M_{2,1})", "det(M_{1,2})")
    d, d1212, d22, d11, d21, d12 = terms
    residual = d * d1212 - d22 * d11 + d21 * d12
    payload = {
        "command": "verify-lc",
        "dets": {name: rational_to_json(v) for name, v in zip(names, terms)},
        "residual": rational_to_json(residual),
        "passed": residual == 0,
    }
    lines = [f"{name} = {v}" for name, v in zip(names, terms)]
    lines.append(f"residual = {residual}")
    lines.append("PASS" if residual == 0 else "FAIL")
    _emit(cfg, payload, lines)
    return EXIT_OK if residual == 0 else EXIT_VERIFY_FAILED


def cmd_verify_forest(cfg: RunConfig) -> int:
    try:
        _check_n(cfg, cfg.n)
        weights = weights_from_json(_load_json(cfg.weights)) if cfg.weights else None
        if weights is not None and weights.n != cfg.n:
            raise InputError(f"weights file is for n = {weights.n}, command asked n = {cfg.n}")
    except (InputError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    report = verify_forest_identity(cfg.n, weights=weights, seed=cfg.seed, cap=cfg.cap)
    payload = {"command": "verify-forest", **report.to_dict()}
    lines = [f"n = {report.n}  seed = {report.seed}",
             f"|S0| = {report.s0_size}  |S3| = {report.s3_size}",
             f"chain length: min {report.chain_lengths[0]} "
             f"max {report.chain_lengths[1]} mean {report.chain_lengths[2]}"]
    if report.weighted_sums is not None:
        lines.append(f"weighted sums: {report.weighted_sums[0]} = {report.weighted_sums[1]}")
    if report.passed:
        lines.append(f"{report.s0_size} = {report.s3_size}, bijection verified")
    else:
        lines.extend(f"FAIL: {f}" for f in report.failures)
    _emit(cfg, payload, lines)
    return EXIT_OK if report.passed else EXIT_VERIFY_FAILED


def cmd_bijection(cfg: RunConfig) -> int:
    try:
        pair = pair_from_json(_load_json(cfg.path))
        kind = pair.classify().kind
        if cfg.inverse and kind != S3:
            raise InputError(f"--inverse needs a pair in S3, got {kind}")
        if not cfg.inverse and kind != S0:
            raise InputError(f"bijection needs a pair in S0 (all black, acyclic), got {kind}")
    except (InputError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    driver = red_hot_potato_inverse if cfg.inverse else red_hot_potato
    final, trace = driver(pair, cap=cfg.cap)
    if cfg.trace:
        with open(cfg.trace, "w") as fh:
            json.dump(trace_to_json(trace), fh, sort_keys=True, indent=2)
    if cfg.dot_dir:
        cfg.dot_dir.mkdir(parents=True, exist_ok=True)
        for i, dot in enumerate(trace_to_dots(trace)):
            (cfg.dot_dir / f"step_{i:03d}.dot").write_text(dot + "\n")
    if cfg.fmt == "dot":
        print(pair_to_dot(final, name="final"))
    else:
        payload = {"command": "bijection", "inverse": cfg.inverse,
                   "iterations": trace.iterations, "final": pair_to_json(final)}
        lines = [json.dumps(pair_to_json(final), sort_keys=True),
                 f"iterations = {trace.iterations}"]
        _emit(cfg, payload, lines)
    return EXIT_OK


def cmd_det(cfg: RunConfig) -> int:
    try:
        M = matrix_from_json(_load_json(cfg.path))
        value = DET_METHODS[cfg.method](M)
    except (InputError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _emit(cfg, {"command": "det", "method": cfg.method, "det": rational_to_json(value)},
          [str(value)])
    return EXIT_OK


def _parse_roots(text: str) -> frozenset:
    try:
        roots = frozenset(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise InputError(f"cannot parse root set {text!r}; expected e.g. 0,2")
    return roots


def cmd_mtt(cfg: RunConfig) -> int:
    try:
        W = weights_from_json(_load_json(cfg.path))
        if not cfg.cross and cfg.roots is None:
            raise InputError("choose --roots U or --cross")
        if cfg.cross and cfg.roots is not None:
            raise InputError("--roots and --cross are mutually exclusive")
        A = W.laplacian()
        if cfg.cross:
            if W.n < 2:
                raise InputError("--cross needs n >= 2")
            lhs = A.minor({0, 2}, {0, 1}).det() * A.minor({0, 1}, {0, 2}).det()
            rhs = (forest_weight_sum(RootSpec(W.n, frozenset({0, 2}), (1, 2)), W)
                   * forest_weight_sum(RootSpec(W.n, frozenset({0, 1}), (2, 1)), W))
            label = "det(A_{02,01}) * det(A_{01,02})"
            sum_label = "forbidden-pair weight sum"
        else:
            roots = _parse_roots(cfg.roots)
            spec = RootSpec(W.n, roots)   # raises if 0 not in roots
            lhs = A.minor(roots, roots).det()
            rhs = forest_weight_sum(spec, W)
            label = "det(A_{U,U})"
            sum_label = f"forest weight sum, roots {{{','.join(map(str, sorted(roots)))}}}"
    except (InputError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    passed = lhs == rhs
    payload = {"command": "mtt", "cross": cfg.cross,
               "det_value": rational_to_json(lhs), "sum_value": rational_to_json(rhs),
               "passed": passed}
    lines = [f"{label} = {lhs}", f"{sum_label} = {rhs}",
             "PASS" if passed else "FAIL"]
    _emit(cfg, payload, lines)
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def _parse_meta(text: str):
    for sep in ("->", "-", ":"):
        if sep in text:
            i, j = text.split(sep, 1)
            try:
                return (int(i), int(j))
            except ValueError:
                break
    raise InputError(f"cannot parse meta-edge {text!r}; expected e.g. 1-2")


def cmd_enumerate(cfg: RunConfig) -> int:
    try:
        _check_n(cfg, cfg.n)
        n = cfg.n
        if cfg.meta and cfg.roots is None:
            raise InputError("--meta needs --roots")
        if cfg.roots is not None:
            spec = RootSpec(n, _parse_roots(cfg.roots),
                            _parse_meta(cfg.meta) if cfg.meta else None)
            forests = list(enumerate_forests(spec))
            payload = {"command": "enumerate", "n": n,
                       "roots": sorted(spec.roots), "count": len(forests)}
            lines = [f"count = {len(forests)}"]
            if cfg.meta:
                payload["meta_edge"] = list(spec.meta_constraint)
            if cfg.list_items:
                payload["forests"] = [graph_to_json(g) for g in forests]
                lines.extend(json.dumps(graph_to_json(g), sort_keys=True) for g in forests)
        else:
            counts = {
                "R_0": count_forests(RootSpec(n, frozenset({0}))),
                "R_01": count_forests(RootSpec(n, frozenset({0, 1}))),
                "R_02": count_forests(RootSpec(n, frozenset({0, 2}))),
                "R_012": count_forests(RootSpec(n, frozenset({0, 1, 2}))),
                "R_02_meta_1_2": count_forests(RootSpec(n, frozenset({0, 2}), (1, 2))),
                "R_01_meta_2_1": count_forests(RootSpec(n, frozenset({0, 1}), (2, 1))),
            }
            counts["S0"] = counts["R_0"] * counts["R_012"]
            counts["S3"] = (counts["R_02"] * counts["R_01"]
                            - counts["R_02_meta_1_2"] * counts["R_01_meta_2_1"])
            payload = {"command": "enumerate", "n": n, "counts": counts}
            lines = [f"{k} = {v}" for k, v in counts.items()]
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    _emit(cfg, payload, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="redhotpotato",
        description="Exact determinant identities, rooted-forest enumeration, "
                    "and the red-hot-potato forest bijection.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_seed=True):
        p.add_argument("--format", dest="fmt", choices=("text", "json"), default="text")
        if with_seed:
            p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("verify-lc", help="check the Lewis Carroll identity on a matrix file")
    p.add_argument("path", type=Path, help="matrix JSON file")
    add_common(p, with_seed=False)

    p = sub.add_parser("verify-forest", help="run the bijection over all of S0 and verify it")
    p.add_argument("n", type=int)
    p.add_argument("--weights", type=Path, default=None, help="weights JSON file")
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.add_argument("--force", action="store_true", help="lift the n cap")
    add_common(p)

    p = sub.add_parser("bijection", help="map one S0 pair to S3 (or back with --inverse)")
    p.add_argument("path", type=Path, help="graph-pair JSON file")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--trace", type=Path, default=None, help="write the trace JSON here")
    p.add_argument("--dot-dir", type=Path, default=None, help="write one DOT per snapshot here")
    p.add_argument("--cap", type=int, default=10 ** 6)
    p.add_argument("--format", dest="fmt", choices=("text", "json", "dot"), default="text")

    p = sub.add_parser("det", help="exact determinant of a matrix file")
    p.add_argument("path", type=Path)
    p.add_argument("--method", choices=sorted(DET_METHODS), default="bareiss")
    add_common(p, with_seed=False)

    p = sub.add_parser("mtt", help="matrix-tree check: Laplacian minors vs forest sums")
    p.add_argument("path", type=Path, help="weights JSON file")
    p.add_argument("--roots", default=None, help="root set, e.g. 0,2")
    p.add_argument("--cross", action="store_true",
                   help="check the cross-minor product against forbidden pairs")
    add_common(p, with_seed=False)

    p = sub.add_parser("enumerate", help="forest and signed-set censuses")
    p.add_argument("n", type=int)
    p.add_argument("--roots", default=None)
    p.add_argument("--meta", default=None, help="meta-edge constraint, e.g. 1-2")
    p.add_argument("--list", dest="list_items", action="store_true")
    p.add_argument("--force", action="store_true")
    add_common(p, with_seed=False)

    return parser


COMMANDS = {
    "verify-lc": cmd_verify_lc,
    "verify-forest": cmd_verify_forest,
    "bijection": cmd_bijection,
    "det": cmd_det,
    "mtt": cmd_mtt,
    "enumerate": cmd_enumerate,
}


def main(argv=None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    for name in ("path", "n", "seed", "cap", "fmt", "method", "inverse", "trace",
                 "dot_dir", "weights", "roots", "cross", "meta", "list_items", "force"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    return COMMANDS[cfg.command](cfg)


if __name__ == "__main__":
    sys.exit(main())
