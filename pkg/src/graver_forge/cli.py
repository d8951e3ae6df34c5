"""Command-line front end: analyze, sparsify, generate and validate.

Exit codes: 0 success, 1 usage or parse error, 2 not-equivalent verdict,
3 budget exceeded, 4 validation failure.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from dataclasses import dataclass

from . import __version__
from .depth import cdd_depth, contraction_depth, cstar_depth, csdd_depth, deletion_depth
from .errors import BudgetExceeded, GraverForgeError
from .fields import QQ, FieldSpec, parse_field
from .forge import HARDNESS_KINDS, balanced_independent_set, gn_family, hardness_instance
from .graphs import ExceedsBudget, Graph, dual_graph, format_gr, incidence_graph, primal_graph, tree_depth
from .graver import graver_basis, matrix_circuits
from .linalg import RatMatrix, entry_complexity, format_rmx, independent_rows, read_rmx
from .matroid import matroid_of
from .precondition import DEFAULT_KAPPA_LIMIT, alg_tdD, alg_tdI, alg_tdP
from .validation import SUITES, run_suite

SCHEMA = "graver-forge/1"

EXIT_OK, EXIT_USAGE, EXIT_NOT_EQUIVALENT, EXIT_BUDGET, EXIT_VALIDATION = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    field: FieldSpec = QQ
    budget_depth: int | None = None
    graver_box: int | None = None
    kappa: int | None = None
    gen_bound: int = 2
    seed: int = 0
    json: bool = False

    def __post_init__(self):
        for name in ("budget_depth", "graver_box", "kappa", "gen_bound"):
            v = getattr(self, name)
            if v is not None and v <= 0:
                raise ValueError(f"--{name.replace('_', '-')} must be positive")


def _positive(text):
    v = int(text)
    if v <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _emit(payload: dict, cfg: RunConfig, out=None):
    out = out or sys.stdout
    payload = {"schema": SCHEMA, **payload}
    if cfg.json:
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        return
    for key, val in payload.items():
        if isinstance(val, dict):
            out.write(f"{key}:\n")
            for k, v in val.items():
                out.write(f"  {k}: {_short(v)}\n")
        else:
            out.write(f"{key}: {_short(val)}\n")


def _short(v):
    if isinstance(v, str) and "\n" in v:
        return "\n    " + v.rstrip("\n").replace("\n", "\n    ")
    return v


def _write(path, text):
    with open(path, "w") as fh:
        fh.write(text)


# ---------------------------------------------------------------- analyze

def cmd_analyze(path, cfg: RunConfig) -> tuple[dict, int]:
    A = read_rmx(path)
    M = matroid_of(A, cfg.field)
    exceeded = False
    report: dict = {"command": "analyze", "shape": list(A.shape), "field": repr(cfg.field),
                    "ec": entry_complexity(A)}
    graphs = {}
    for name, build in (("td_P", primal_graph), ("td_D", dual_graph), ("td_I", incidence_graph)):
        val, _ = tree_depth(build(A), cfg.budget_depth)
        if isinstance(val, ExceedsBudget):
            exceeded = True
            graphs[name] = {"exceeds_budget": cfg.budget_depth}
        else:
            graphs[name] = val
    report["tree_depth"] = graphs
    depths = {}
    runs = (("dd", deletion_depth, {}), ("cd", contraction_depth, {}), ("cdd", cdd_depth, {}),
            ("csd", cstar_depth, {"gen_bound": cfg.gen_bound}), ("csdd", csdd_depth, {"gen_bound": cfg.gen_bound}))
    for name, fn, kw in runs:
        if len(M) == 0:
            depths[name] = {"value": 0, "exactness": "exact"}
            continue
        rep = fn(M, budget=cfg.budget_depth, **kw)
        exceeded |= rep.exceeded
        depths[name] = {"value": {"exceeds_budget": cfg.budget_depth} if rep.exceeded else rep.value,
                        "exactness": rep.exactness}
    report["matroid"] = depths
    circ = matrix_circuits(A)
    report["circuits"] = {"count": len(circ.vectors), "c1": circ.c1, "c_inf": circ.c_inf, "kappa_dot": circ.kappa_dot}
    try:
        gs = graver_basis(A, box_bound=cfg.graver_box)
        report["graver"] = {"count": len(gs.vectors), "g1": gs.g1, "g_inf": gs.g_inf, "certified": gs.certified,
                            "vectors": [list(v) for v in gs.vectors] if len(gs.vectors) <= 20 else "omitted"}
    except BudgetExceeded as exc:
        exceeded = True
        report["graver"] = {"exceeds_budget": str(exc)}
    report["budget_exceeded"] = exceeded
    return report, EXIT_BUDGET if exceeded else EXIT_OK


# ---------------------------------------------------------------- sparsify

def cmd_sparsify(path, target, d, e, cfg: RunConfig, out_path=None, cert_path=None) -> tuple[dict, int]:
    A = read_rmx(path)
    notes = []
    if target == "primal":
        B = independent_rows(A)
        if B.nrows < A.nrows:
            notes.append(f"dropped {A.nrows - B.nrows} dependent row(s)")
        e = e if e is not None else max(1, entry_complexity(B))
        outcome = alg_tdP(B, d, e, kappa_override=cfg.kappa, kappa_limit=DEFAULT_KAPPA_LIMIT)
    elif target == "dual":
        outcome = alg_tdD(A, d, e, k_override=cfg.kappa, gen_bound=cfg.gen_bound)
    else:
        outcome = alg_tdI(A, d, gen_bound=cfg.gen_bound)
    report = {"command": "sparsify", "target": target, "d": d, **outcome.to_dict()}
    if notes:
        report["notes"] = notes
    if outcome.transformed:
        if out_path:
            _write(out_path, format_rmx(outcome.matrix))
        if cert_path and outcome.certificate is not None:
            _write(cert_path, json.dumps(outcome.certificate.to_dict(), indent=2, sort_keys=True) + "\n")
        return report, EXIT_OK
    return report, EXIT_NOT_EQUIVALENT


# ---------------------------------------------------------------- generate

def _gn_files(n, outdir, cfg):
    g = gn_family(n)
    pos = {v: i for i, v in enumerate(g.vertices)}
    lines = [f"{len(g.vertices)} {len(g.edges)}"] + [f"{pos[u]} {pos[v]}" for u, v in g.edges]
    stem = os.path.join(outdir, f"gn{n}")
    _write(stem + ".gr", "\n".join(lines) + "\n")
    _write(stem + ".rmx", g.matroid(cfg.field).to_rmx())
    manifest = {"family": "gn", "n": n, "vertices": len(g.vertices), "edges": len(g.edges),
                "r": pos[g.r], "b": pos[g.b], "path_length_range": [n, 2 * n],
                "max_circuit_size": 4 * n, "cd_lower_bound": math.comb(n, 2)}
    return manifest, [stem + ".gr", stem + ".rmx"]


def _parse_edges(text, nx, ny):
    edges = []
    for tok in text.split(","):
        tok = tok.strip()
        if not tok:
            continue
        a, b = tok.split("-")
        i, j = int(a), int(b)
        if not (0 <= i < nx and 0 <= j < ny):
            raise ValueError(f"edge {tok} out of range")
        edges.append((f"x{i}", f"y{j}"))
    return edges


def _hardness_files(nx, ny, edges, k, kind, outdir, cfg):
    X = [f"x{i}" for i in range(nx)]
    Y = [f"y{j}" for j in range(ny)]
    if edges is None:
        rng = random.Random(cfg.seed)
        edges = [(a, b) for a in X for b in Y if rng.random() < 0.5]
    G = Graph(X + Y, edges)
    M, threshold = hardness_instance(G, X, Y, k, cfg.field, kind)
    stem = os.path.join(outdir, f"hardness_{kind}")
    _write(stem + ".gr", format_gr(G))
    _write(stem + ".rmx", M.to_rmx())
    has_set = balanced_independent_set(G, X, Y, k)
    manifest = {"family": "hardness", "kind": kind, "X": X, "Y": Y, "k": k,
                "edges": [list(e) for e in G.edge_list()], "elements": len(M), "threshold": threshold,
                "balanced_independent_set": has_set,
                "expected": f"depth <= {threshold}" if has_set else f"depth > {threshold}"}
    return manifest, [stem + ".gr", stem + ".rmx"]


def cmd_generate(family, args, cfg: RunConfig) -> tuple[dict, int]:
    os.makedirs(args.out, exist_ok=True)
    if family == "gn":
        manifest, files = _gn_files(args.n, args.out, cfg)
    else:
        edges = _parse_edges(args.edges, args.x, args.y) if args.edges is not None else None
        manifest, files = _hardness_files(args.x, args.y, edges, args.k, args.kind, args.out, cfg)
    mpath = os.path.join(args.out, f"{family}_manifest.json")
    _write(mpath, json.dumps({"schema": SCHEMA, **manifest}, indent=2, sort_keys=True) + "\n")
    return {"command": "generate", "files": files + [mpath], "manifest": manifest}, EXIT_OK


# ---------------------------------------------------------------- validate

def cmd_validate(suite, cfg: RunConfig) -> tuple[dict, int]:
    names = list(SUITES) if suite == "all" else [suite]
    results = []
    for name in names:
        kw = {"field": cfg.field} if name == "graph-reduction" and cfg.field is not QQ else {}
        results.append(run_suite(name, seed=cfg.seed, **kw))
    ok = all(r.passed for r in results)
    if not cfg.json:
        for r in results:
            print(r.line(), file=sys.stderr)
    return {"command": "validate", "seed": cfg.seed, "passed": ok,
            "suites": [r.to_dict() for r in results]}, EXIT_OK if ok else EXIT_VALIDATION


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", default="q", help="q or gf:P")
    common.add_argument("--budget-depth", type=_positive, default=None)
    common.add_argument("--graver-box", type=_positive, default=None)
    common.add_argument("--kappa", type=_positive, default=None)
    common.add_argument("--gen-bound", type=_positive, default=2)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true")

    p = argparse.ArgumentParser(prog="graver-forge", description="Sparsify matrices under row operations and "
                                "compute their matroid depth parameters and Graver bases.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", parents=[common], help="report depth parameters, circuits and Graver basis")
    a.add_argument("matrix")

    s = sub.add_parser("sparsify", parents=[common], help="find an equivalent matrix with small tree-depth")
    s.add_argument("target", choices=["primal", "dual", "incidence"])
    s.add_argument("matrix")
    s.add_argument("-d", type=_positive, required=True, help="target tree-depth")
    s.add_argument("-e", type=_positive, default=None, help="entry complexity bound (primal; dual uses it as k)")
    s.add_argument("-o", "--out", default=None, help="write the equivalent matrix here")
    s.add_argument("--certificate", default=None, help="write the decomposition tree JSON here")

    g = sub.add_parser("generate", parents=[common], help="write instance families")
    gsub = g.add_subparsers(dest="family", required=True)
    gn = gsub.add_parser("gn", parents=[common])
    gn.add_argument("-n", type=_positive, required=True)
    gn.add_argument("-o", "--out", default=".")
    hd = gsub.add_parser("hardness", parents=[common])
    hd.add_argument("--x", type=_positive, default=2)
    hd.add_argument("--y", type=_positive, default=2)
    hd.add_argument("--edges", default=None, help="comma list of i-j meaning x_i y_j; random from --seed if omitted")
    hd.add_argument("-k", type=int, default=1)
    hd.add_argument("--kind", choices=HARDNESS_KINDS, default="cstar")
    hd.add_argument("-o", "--out", default=".")

    v = sub.add_parser("validate", parents=[common], help="run a seeded validation suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        cfg = RunConfig(parse_field(args.field), args.budget_depth, args.graver_box, args.kappa,
                        args.gen_bound, args.seed, args.json)
        if args.command == "analyze":
            report, code = cmd_analyze(args.matrix, cfg)
        elif args.command == "sparsify":
            report, code = cmd_sparsify(args.matrix, args.target, args.d, args.e, cfg, args.out, args.certificate)
        elif args.command == "generate":
            report, code = cmd_generate(args.family, args, cfg)
        else:
            report, code = cmd_validate(args.suite, cfg)
    except BudgetExceeded as exc:
        _emit({"error": "budget-exceeded", "message": str(exc)}, _fallback_cfg(args))
        return EXIT_BUDGET
    except (GraverForgeError, ValueError, TypeError, OSError) as exc:
        print(f"graver-forge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    _emit(report, cfg)
    return code


def _fallback_cfg(args):
    return RunConfig(json=getattr(args, "json", False))


if __name__ == "__main__":
    sys.exit(main())
