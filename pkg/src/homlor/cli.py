"""Command-line entry point: ``homlor {hom,certify,verify,search,formulas}``.

Exit codes: 0 success / certified / all hold, 1 not certified / a verdict
failed, 2 malformed input.  Rationals are printed as strings.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import random
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import formulas, verify
from .graphs import (
    LabelledBipartiteGraph,
    bipartition,
    complete_graph,
    complete_multipartite,
    cycle_graph,
    fraction_str,
    from_graph6,
    graph_from_json,
    hardcore,
    k_q_circ,
    path_graph,
)
from .homcount import bipartite_hom_count, g_chromatic_polynomial, hom_count
from .poly import SparsePolynomial, is_lorentzian
from .spectrum import is_antiferromagnetic


class InputError(Exception):
    pass


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


LITERALS = {
    "path": lambda arg: path_graph(int(arg)),
    "cycle": lambda arg: cycle_graph(int(arg)),
    "kq": lambda arg: complete_graph(int(arg)),
    "complete": lambda arg: complete_graph(int(arg)),
    "kq_circ": lambda arg: k_q_circ(int(arg)),
    "multipartite": lambda arg: complete_multipartite(_ints(arg)),
}


def literal_family(text: str):
    """Closed-form family descriptor for a literal like ``path:3``, else None."""
    kind, _, arg = text.partition(":")
    try:
        if kind == "path":
            return ("path", int(arg))
        if kind == "cycle":
            return ("cycle", int(arg))
        if kind == "multipartite":
            return ("multipartite", tuple(_ints(arg)))
    except ValueError:
        return None
    return None


def load_graph(text: str):
    """Inline literal, ``hardcore``, a .json/.g6 file, or ``-`` for graph6 on stdin."""
    try:
        if text == "hardcore":
            return hardcore()
        kind, sep, arg = text.partition(":")
        if sep and kind in LITERALS:
            return LITERALS[kind](arg)
        if text == "-":
            line = sys.stdin.readline().strip()
            if not line:
                raise InputError("no graph6 line on stdin")
            return from_graph6(line)
        path = Path(text)
        if not path.exists():
            raise InputError(f"{text}: no such file and not a graph literal")
        if path.suffix == ".json":
            return graph_from_json(path.read_text())
        lines = [x for x in path.read_text().split() if x]
        if not lines:
            raise InputError(f"{text}: empty graph6 file")
        return from_graph6(lines[0])
    except InputError:
        raise
    except Exception as exc:
        raise InputError(f"cannot read graph {text!r}: {exc}") from exc


def _dump(obj, out) -> None:
    out.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("HOMLOR_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"HOMLOR_THREADS must be an integer, got {env!r}")
    return os.cpu_count() or 1


def _range(text: str) -> list[int]:
    m = re.fullmatch(r"(\d+)\.\.(\d+)", text)
    if m:
        return list(range(int(m.group(1)), int(m.group(2)) + 1))
    return _ints(text)


# -- subcommands -----------------------------------------------------------------------


def cmd_hom(args, out) -> int:
    h, g = load_graph(args.H), load_graph(args.G)
    if (args.A is None) != (args.B is None):
        raise InputError("--A and --B go together")
    if args.A is not None:
        sides = bipartition(h)
        if sides is None:
            raise InputError("a bipartite count needs bipartite H")
        value = bipartite_hom_count(LabelledBipartiteGraph(h, *sides), g, _ints(args.A), _ints(args.B))
    else:
        value = hom_count(h, g)
    _dump({"hom": fraction_str(value)}, out)
    return 0


def cmd_certify(args, out) -> int:
    if args.kind == "afm":
        if args.G is None:
            raise InputError("certify afm needs --G")
        cert = is_antiferromagnetic(load_graph(args.G))
    else:
        if args.chromatic:
            f = g_chromatic_polynomial(load_graph(args.chromatic[0]), load_graph(args.chromatic[1]))
        elif args.poly:
            try:
                f = SparsePolynomial.from_json(Path(args.poly).read_text())
            except Exception as exc:
                raise InputError(f"cannot read polynomial {args.poly!r}: {exc}") from exc
        else:
            raise InputError("certify lorentzian needs --chromatic H G or --poly FILE")
        try:
            cert = is_lorentzian(f)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    _dump(cert.to_json(), out)
    return 0 if cert.verdict else 1


def _emit(verdicts, out) -> int:
    ok = True
    for v in verdicts:
        d = v if isinstance(v, dict) else v.to_json()
        ok &= d["holds"]
        _dump(d, out)
    return 0 if ok else 1


def cmd_verify(args, out) -> int:
    claim = args.claim
    if claim == "bipartite-swap":
        return _emit([verify.check_bipartite_swapping(load_graph(args.H), load_graph(args.G))], out)
    if claim == "cross-bipartite":
        h = load_graph(args.H)
        if args.Kq is not None:
            family = literal_family(args.H)
            verdicts = verify.check_cross_bipartite_swapping(
                h, complete_graph(args.Kq), "kq_reduced", args.Kq, family
            )
        elif args.G is not None:
            verdicts = verify.check_cross_bipartite_swapping(h, load_graph(args.G), "exhaustive_subsets")
        else:
            raise InputError("cross-bipartite needs --Kq or --G")
        return _emit(verdicts, out)
    if claim == "weighted-cross-bipartite":
        h, g = load_graph(args.H), load_graph(args.G)
        return _emit(verify.check_weighted_cross_bipartite(h, g, args.trials, args.seed), out)
    if claim in ("af", "corollary"):
        g = load_graph(args.G)
        f = g_chromatic_polynomial(complete_graph(args.t), g) if claim == "af" else None
        verdicts = []
        for k in range(args.trials):
            rng = random.Random(f"cli:{claim}:{args.seed}:{k}")
            if claim == "af":
                vectors = [verify.random_vector(rng, g.n) for _ in range(args.t)]
                verdicts.append(verify.check_af_inequality(f, vectors, args.seed))
            else:
                a, b = verify.random_vector(rng, g.n), verify.random_vector(rng, g.n)
                verdicts.append(verify.check_corollary_product(g, args.t, a, b, args.seed))
        return _emit(verdicts, out)
    raise InputError(f"unknown claim {claim!r}")


SEARCH_NAMES = {
    "zhao": "zhao_kq",
    "afm-swap": "bipartite_swap_afm",
    "cross-bipartite": "cross_bipartite_kq",
    "lorentzian-converse": "lorentzian_converse",
}


def cmd_search(args, out) -> int:
    claim = SEARCH_NAMES[args.claim]
    h_source = None
    if args.H_g6 is not None:
        stream = sys.stdin if args.H_g6 == "-" else open(args.H_g6)
        h_source = verify.read_graph6_stream(stream)
    config = {
        "claim": claim,
        "n_max": args.n_max,
        "q": args.q,
        "afm_seed": args.afm_seed,
        "afm_n_max": args.afm_n_max,
        "g_per_h": args.g_per_h,
        "family": args.family,
        "H_g6": args.H_g6,
        "seed": args.seed,
    }
    instances = verify.search_instances(
        claim,
        h_source,
        n_max=args.n_max,
        q_range=_range(args.q),
        afm_seed=args.afm_seed if args.afm_seed is not None else args.seed,
        afm_n_max=args.afm_n_max,
        g_per_h=args.g_per_h,
        family=args.family,
    )
    ckpt_path = Path(args.checkpoint) if args.checkpoint else (Path(args.out + ".ckpt") if args.out else None)
    state = verify.SearchState()
    if args.resume:
        if ckpt_path is None or not ckpt_path.exists():
            raise InputError("--resume needs an existing checkpoint (--checkpoint or --out)")
        saved = json.loads(ckpt_path.read_text())
        if saved.get("config") != config:
            raise InputError("checkpoint was written for a different configuration")
        state = verify.SearchState(saved["cursor"], saved["checked"], saved["failures"])

    def save(s):
        if ckpt_path is not None:
            tmp = ckpt_path.with_suffix(ckpt_path.suffix + ".tmp")
            tmp.write_text(json.dumps(s.to_json(config), sort_keys=True))
            tmp.replace(ckpt_path)

    threads = _threads(args)
    pool = ProcessPoolExecutor(threads) if threads > 1 else None
    try:
        for v in verify.search_counterexamples(instances, args.budget, state, save, pool):
            _dump(v, out)
            out.flush()
    finally:
        if pool is not None:
            pool.shutdown()
    summary = {"checked": state.checked, "failures": state.failures, "instances": state.cursor}
    print(json.dumps(summary, sort_keys=True), file=sys.stderr)
    return 0 if state.failures == 0 else 1


def cmd_formulas(args, out) -> int:
    kind = args.kind
    try:
        if kind == "path-odd":
            value = formulas.n_path_odd(args.d, args.a, args.b)
            oracle = (lambda: verify.oracle_path_odd(args.d, args.a, args.b))
        elif kind == "path-even":
            value = formulas.n_path_even(args.d, args.a, args.b, args.orientation)
            oracle = (lambda: verify.oracle_path_even(args.d, args.a, args.b, args.orientation))
        elif kind == "cycle":
            value = formulas.n_cycle(args.d, args.a, args.b)
            oracle = (lambda: verify.oracle_cycle(args.d, args.a, args.b))
        elif kind == "multipartite":
            rs = _ints(args.parts)
            value = formulas.n_multipartite(rs, args.a)
            oracle = (lambda: verify.oracle_multipartite(rs, args.a))
        else:
            rs = _ints(args.parts)
            value = formulas.n_multipartite_first_part(args.s1, rs, args.a, args.b, args.orientation)
            oracle = (lambda: verify.oracle_multipartite_first_part(args.s1, rs, args.a, args.b, args.orientation))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    result = {"formula": kind, "value": str(value)}
    if args.oracle:
        brute = oracle()
        result["oracle"] = str(brute)
        result["delta"] = str(value - brute)
    _dump(result, out)
    return 0 if result.get("delta", "0") == "0" else 1


# -- parser ----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=None, help="worker processes (default: HOMLOR_THREADS or CPU count)")
    common.add_argument("--out", default=None, help="output file (default stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="homlor", description="Exact homomorphism counts and Lorentzian checks.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("hom", parents=[common], help="weighted homomorphism count")
    s.add_argument("--H", required=True)
    s.add_argument("--G", required=True)
    s.add_argument("--A", default=None, help="bipartite count: subset for H's first side, e.g. 0,1")
    s.add_argument("--B", default=None, help="bipartite count: subset for H's second side")

    s = sub.add_parser("certify", parents=[common], help="AFM or Lorentzian certificate")
    s.add_argument("kind", choices=["afm", "lorentzian"])
    s.add_argument("--G", default=None)
    s.add_argument("--chromatic", nargs=2, metavar=("H", "G"), default=None)
    s.add_argument("--poly", default=None, help="polynomial JSON file")

    s = sub.add_parser("verify", parents=[common], help="check one inequality instance")
    s.add_argument("claim", choices=["bipartite-swap", "cross-bipartite", "weighted-cross-bipartite", "af", "corollary"])
    s.add_argument("--H", default=None)
    s.add_argument("--G", default=None)
    s.add_argument("--Kq", type=int, default=None)
    s.add_argument("--t", type=int, default=3)
    s.add_argument("--trials", type=int, default=100)

    s = sub.add_parser("search", parents=[common], help="counterexample sweep")
    s.add_argument("claim", choices=sorted(SEARCH_NAMES))
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--q", default="2..4", help="q range, e.g. 2..5 or 2,3")
    s.add_argument("--H-g6", default=None, help="graph6 file of source graphs, '-' for stdin")
    s.add_argument("--afm-seed", type=int, default=None)
    s.add_argument("--afm-n-max", type=int, default=4)
    s.add_argument("--g-per-h", type=int, default=5)
    s.add_argument("--family", choices=["paths", "cycles", "multipartite", "all"], default=None)
    s.add_argument("--budget", type=int, default=None)
    s.add_argument("--checkpoint", default=None)
    s.add_argument("--resume", action="store_true")

    s = sub.add_parser("formulas", parents=[common], help="closed-form colouring counts")
    s.add_argument("kind", choices=["path-odd", "path-even", "cycle", "multipartite", "multipartite-first"])
    s.add_argument("--d", type=int)
    s.add_argument("--a", type=int)
    s.add_argument("--b", type=int)
    s.add_argument("--s1", type=int)
    s.add_argument("--parts", default=None)
    s.add_argument("--orientation", choices=["ab", "ba"], default="ab")
    s.add_argument("--oracle", action="store_true")
    return p


COMMANDS = {
    "hom": cmd_hom,
    "certify": cmd_certify,
    "verify": cmd_verify,
    "search": cmd_search,
    "formulas": cmd_formulas,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    out = open(args.out, "a" if getattr(args, "resume", False) else "w") if args.out else sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except (InputError, ValueError, KeyError, IndexError) as exc:
        print(f"homlor: error: {exc}", file=sys.stderr)
        return 2
    finally:
        if out is not sys.stdout:
            out.close()


if __name__ == "__main__":
    sys.exit(main())
