"""Command line driver: ``macdual <subcommand> [options] [FILE]``.

Reads a system file (or standard input), prints one JSON report on standard
output and diagnostics on standard error. Exit status is 0 on success, 1 for
usage or parse errors, 2 for mathematical failures.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import asdict, dataclass, field

from . import __version__
from .dual import (
    contract,
    full_dual_zero_dim,
    reduce_basis,
    span_contains,
    span_equal,
    truncated_dual_completion,
    truncated_dual_direct,
)
from .elimination import eliminating_dual, quotient_eliminating_dual
from .embedded import embedded_point_test
from .exceptions import InputError, MacdualError, RegularPositionError
from .hilbert import (
    hilbert_function,
    homogeneous_membership,
    regularity_and_multiplicity,
    standard_monomials,
)
from .io import (
    COMPLEX_MODE,
    EXACT_MODE,
    eliminating_to_json,
    format_polynomial,
    functional_to_json,
    m2_snippet,
    parse_polynomial,
    parse_system,
    scalar_to_json,
    space_to_json,
)
from .linalg import EXACT, SVD, RankPolicy
from .poly import Polynomial

log = logging.getLogger("macdual")

COMMANDS = ("dual", "fulldual", "elimdual", "colon-elim", "hilbert", "staircase", "member", "embedded")


@dataclass
class RunConfig:
    command: str
    input: str = "-"
    k: int | None = None
    d: int | None = None
    A: list[str] = field(default_factory=list)
    tol: float = 1e-8
    point_tol: float = 1e-8
    window: int | None = None
    seed: int = 0
    retries: int = 5
    mode: str | None = None
    assume_rho: int | None = None
    assume_mu: int | None = None
    kmax: int | None = None
    max_degree: int | None = None
    method: str = "direct"
    f: str | None = None
    verbose: bool = False
    m2: bool = False

    def validate(self):
        for name in ("tol", "point_tol"):
            v = getattr(self, name)
            if not 0 < v < 1:
                raise InputError(f"--{name.replace('_', '-')} must lie in (0, 1)")
        for name in ("k", "d", "kmax", "retries", "max_degree", "assume_rho", "assume_mu"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise InputError(f"--{name.replace('_', '-')} must be non-negative")
        if self.window is not None and self.window < 1:
            raise InputError("--window must be positive")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def _csv(text: str) -> list[str]:
    return [t for t in text.replace(" ", "").split(",") if t]


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("input", nargs="?", default="-", help="system file, '-' for stdin")
    common.add_argument("--tol", type=float, default=1e-8, help="relative SVD rank tolerance")
    common.add_argument("--point-tol", type=float, default=1e-8)
    common.add_argument("--mode", choices=(EXACT_MODE, COMPLEX_MODE))
    common.add_argument("--verbose", action="store_true")
    common.add_argument("--m2", action="store_true", help="add a Macaulay2 snippet of the basis")

    parser = _Parser(prog="macdual", description="Macaulay dual spaces and embedded points.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("dual", parents=[common], help="truncated dual space D^k")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--method", choices=("direct", "completion"), default="direct")

    p = sub.add_parser("fulldual", parents=[common], help="dual space of a 0-dimensional ideal")
    p.add_argument("--max-degree", type=int, default=20)

    for name, default_d, helptext in (
        ("elimdual", 1, "eliminating dual space E^d[I, A]"),
        ("colon-elim", 0, "E^d of the colon ideal I : <A> as x . E^(d+1)"),
    ):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--A", type=_csv, required=True, help="comma separated variables")
        p.add_argument("--d", type=int, default=default_d)
        p.add_argument("--max-degree", type=int)

    p = sub.add_parser("hilbert", parents=[common], help="local Hilbert function, rho, mu")
    p.add_argument("--kmax", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--assume-rho", type=int)
    p.add_argument("--assume-mu", type=int)

    p = sub.add_parser("staircase", parents=[common], help="standard monomials up to degree k")
    p.add_argument("--k", type=int, default=3)

    p = sub.add_parser("member", parents=[common], help="membership in a homogeneous ideal")
    p.add_argument("--f", required=True, help="polynomial to test")

    p = sub.add_parser("embedded", parents=[common], help="is the point an embedded component?")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--retries", type=int, default=5)
    p.add_argument("--window", type=int)
    p.add_argument("--assume-rho", type=int)
    p.add_argument("--assume-mu", type=int)
    p.add_argument("--max-degree", type=int)
    return parser


def parse_config(argv) -> RunConfig:
    ns = vars(build_parser().parse_args(argv))
    cfg = RunConfig(command=ns.pop("command"))
    for key, value in ns.items():
        setattr(cfg, key, value)
    cfg.validate()
    return cfg


def _read_input(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc


def _var_indices(names, wanted):
    out = []
    for w in wanted:
        if w not in names:
            raise InputError(f"unknown variable {w!r} in --A")
        out.append(names.index(w))
    return out


def _m2(report, basis, names, exact):
    report["m2"] = m2_snippet(basis, names, exact)


def run(cfg: RunConfig, text: str) -> dict:
    """Execute one subcommand and return the report (without config)."""
    system = parse_system(text, cfg.mode)
    names, ideal = system.names, system.ideal
    exact = system.mode == EXACT_MODE
    policy = RankPolicy(EXACT if exact else SVD, cfg.tol)
    if cfg.command != "embedded" and system.point is not None:
        ideal = ideal.translate(system.point, cfg.point_tol)
    out: dict = {"vars": names, "mode": system.mode}
    cmd = cfg.command

    if cmd == "dual":
        fn = truncated_dual_direct if cfg.method == "direct" else truncated_dual_completion
        space = fn(ideal, cfg.k, policy, point_tol=cfg.point_tol)
        out.update(space_to_json(space, names))
        basis = space.basis
    elif cmd == "fulldual":
        space = full_dual_zero_dim(ideal, policy, cfg.max_degree, point_tol=cfg.point_tol)
        out.update(space_to_json(space, names))
        if not space.complete:
            out["diagnostic"] = f"dual space did not stabilize by degree {cfg.max_degree}"
            out["exit_code"] = 2
        basis = space.basis
    elif cmd == "elimdual":
        A = _var_indices(names, cfg.A)
        E = eliminating_dual(ideal, A, cfg.d, policy, cfg.max_degree, point_tol=cfg.point_tol)
        out.update(eliminating_to_json(E, names))
        if not E.complete:
            out["diagnostic"] = "eliminating dual space did not stabilize (not in general position?)"
            out["exit_code"] = 2
        basis = E.basis
    elif cmd == "colon-elim":
        A = _var_indices(names, cfg.A)
        E = eliminating_dual(ideal, A, cfg.d + 1, policy, cfg.max_degree, point_tol=cfg.point_tol)
        if not E.complete:
            raise RegularPositionError(
                "eliminating dual space did not stabilize (not in general position?)"
            )
        Ed = eliminating_dual(ideal, A, cfg.d, policy, cfg.max_degree, point_tol=cfg.point_tol)
        if len(A) == 1:
            colon = quotient_eliminating_dual(E, A[0], policy)
            out.update(eliminating_to_json(colon, names))
            basis = colon.basis
        else:
            images = [
                contract(Polynomial.variable(i, ideal.nvars), q) for i in A for q in E.basis
            ]
            basis = reduce_basis(images, E.order, policy)
            out.update(
                {
                    "A": [names[i] for i in A],
                    "d": cfg.d,
                    "dim": len(basis),
                    "basis": [functional_to_json(q) for q in basis],
                    "complete": True,
                    "cap_used": E.cap_used,
                    "inclusion_in_E_d": span_contains(Ed.basis, basis, policy),
                }
            )
        out["source_d"] = cfg.d + 1
        out["source_dim"] = E.dim
        out["E_d_of_I_dim"] = Ed.dim
        out["equals_E_d_of_I"] = span_equal(basis, Ed.basis, policy)
    elif cmd == "hilbert":
        basis = None
        hd = None
        try:
            hd = regularity_and_multiplicity(ideal, cfg.window, None, policy, cfg.point_tol)
        except MacdualError as exc:
            if cfg.kmax is None:
                raise
            out["diagnostic"] = str(exc)
        if cfg.kmax is not None:
            values = hilbert_function(ideal, cfg.kmax, policy, cfg.point_tol).values
        else:
            values = hd.values
        rho = cfg.assume_rho if cfg.assume_rho is not None else (hd.rho if hd else None)
        mu = cfg.assume_mu if cfg.assume_mu is not None else (hd.mu if hd else None)
        certified = bool(hd and hd.certified) or (
            cfg.assume_rho is not None and cfg.assume_mu is not None
        )
        out.update(
            {
                "H": list(values),
                "rho": rho,
                "mu": mu,
                "certified": certified,
                "window": hd.window if hd else cfg.window,
                "k_max": len(values) - 1,
            }
        )
    elif cmd == "staircase":
        rep = standard_monomials(ideal, cfg.k, policy=policy, point_tol=cfg.point_tol)
        out.update(rep.to_json())
        basis = None
    elif cmd == "member":
        f = parse_polynomial(cfg.f, names)
        if not exact:
            f = f.to_complex()
        out["f"] = format_polynomial(f, names)
        out["member"] = homogeneous_membership(f, ideal, policy)
        basis = None
    elif cmd == "embedded":
        v = embedded_point_test(
            ideal, system.point, cfg.seed, cfg.retries, policy, cfg.point_tol,
            cfg.window, None, cfg.assume_rho, cfg.assume_mu, cfg.max_degree, cfg.verbose,
        )
        out.update(
            {
                "embedded": v.embedded,
                "k": v.k,
                "rho": v.rho,
                "mu": v.mu,
                "certified_hilbert": v.certified_hilbert,
                "dims": v.dims,
                "seed": v.seed,
                "matrix": [[scalar_to_json(c) for c in row] for row in v.matrix],
                "tolerances": v.tolerances,
                "retries": v.retries,
            }
        )
        if v.hilbert is not None:
            out["H"] = list(v.hilbert.values)
        basis = None
        if v.bases is not None:
            out["bases"] = {
                key: [functional_to_json(q) for q in val] for key, val in v.bases.items()
            }
            basis = v.bases["E_k"]
    else:  # pragma: no cover - argparse restricts choices
        raise InputError(f"unknown command {cmd}")

    if cfg.m2 and basis is not None:
        _m2(out, basis, names, exact)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0)
    except MacdualError as exc:
        print(f"macdual: error: {exc}", file=sys.stderr)
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}, "exit_code": 1})
        return 1
    logging.basicConfig(
        level=logging.INFO if cfg.verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(name)s: %(message)s",
    )
    try:
        report = run(cfg, _read_input(cfg.input))
        code = report.pop("exit_code", 0)
    except MacdualError as exc:
        print(f"macdual: {type(exc).__name__}: {exc}", file=sys.stderr)
        report = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = exc.exit_code
    except Exception as exc:  # noqa: BLE001 - every failure maps to an exit code
        print(f"macdual: internal error: {exc!r}", file=sys.stderr)
        report = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        code = 2
    report = {"command": cfg.command, "config": asdict(cfg), **report, "exit_code": code}
    _emit(report)
    return code


def _emit(report):
    json.dump(report, sys.stdout, indent=2, default=str)
    sys.stdout.write("\n")


if __name__ == "__main__":
    sys.exit(main())
