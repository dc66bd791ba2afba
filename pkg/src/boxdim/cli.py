"""``boxdim`` command line.

Every subcommand prints ``<key> <value>`` lines on stdout. Exit status is 0
on success, 1 on bad input or a failed validation, 2 when a size cap or
capability limit is hit.
"""

from __future__ import annotations

import argparse
import math
import sys
from pathlib import Path

from .approx import ApproxParams, approx_box, approx_cube
from .errors import BoxdimError, CapabilityError, ParseError
from .exact import DEFAULT_K_MAX, exact_box_large_clique
from .graph import clique_residual_split, parse_graph
from .intervals import format_box_rep, parse_box_rep, validate_box_rep
from .nice import enumerate_nice_supergraphs
from .oracle import oracle_boxicity, oracle_chain_cover, oracle_cubicity, oracle_poset_dimension
from .reductions import (ChainCover, chain_cover_approx, parse_bipartite, parse_poset,
                         posetdim_approx)
from .unit import format_cube_rep, parse_cube_rep, validate_cube_rep


def kappa(n: int) -> int:
    """``2 ceil(n sqrt(log log n) / sqrt(log n))``, base-2 logs; ``2n`` for ``n <= 4``."""
    if n <= 4:
        return 2 * n
    lg = math.log2(n)
    return 2 * math.ceil(n * math.sqrt(math.log2(lg)) / math.sqrt(lg))


def format_chain_cover(cover: ChainCover, n: int) -> str:
    """``chaincover <n> <k>``, then per member ``member <i> <m>`` and ``e <u> <v>`` lines (1-based)."""
    lines = [f"chaincover {n} {len(cover)}"]
    for i, member in enumerate(cover):
        lines.append(f"member {i} {len(member)}")
        lines += [f"e {u + 1} {v + 1}" for u, v in sorted(member)]
    return "\n".join(lines) + "\n"


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err.strerror}") from None


def _write(path: str | None, text: str):
    if path:
        Path(path).write_text(text)


def _params(args, n: int) -> ApproxParams:
    return ApproxParams.for_n(n, args.k)


def cmd_exact(args, out):
    G = parse_graph(_read(args.input))
    b, B = exact_box_large_clique(G, k_max=args.k_max, threads=args.threads)
    _write(args.output, format_box_rep(B, G.n))
    out(f"boxicity {b}")


def cmd_approx_box(args, out):
    G = parse_graph(_read(args.input))
    params = _params(args, G.n)
    B, _ = approx_box(G, params, k_max=args.k_max, threads=args.threads)
    _write(args.output, format_box_rep(B, G.n))
    out(f"dimension {len(B)} bound-factor {params.box_factor} kappa {kappa(G.n)}")


def cmd_approx_cube(args, out):
    G = parse_graph(_read(args.input))
    params = _params(args, G.n)
    C, _ = approx_cube(G, params, k_max=args.k_max, threads=args.threads,
                       per_component=args.per_component, strict=not args.allow_weaker)
    _write(args.output, format_cube_rep(C, G.n))
    out(f"dimension {len(C)} bound-factor {params.cube_factor}")


def cmd_oracle_box(args, out):
    G = parse_graph(_read(args.input))
    b, B = oracle_boxicity(G, max_dim=args.max_dim)
    _write(args.output, format_box_rep(B, G.n))
    out(f"boxicity {b}")


def cmd_oracle_cube(args, out):
    G = parse_graph(_read(args.input))
    c, C = oracle_cubicity(G, max_dim=args.max_dim)
    _write(args.output, format_cube_rep(C, G.n))
    out(f"cubicity {c}")


def cmd_oracle_ch(args, out):
    B = parse_bipartite(_read(args.input))
    out(f"chain-cover {oracle_chain_cover(B)}")


def cmd_oracle_posetdim(args, out):
    P = parse_poset(_read(args.input))
    out(f"dimension {oracle_poset_dimension(P)}")


def cmd_chain_cover(args, out):
    B = parse_bipartite(_read(args.input))
    params = _params(args, B.graph.n)
    cover = chain_cover_approx(B, params, threads=args.threads)
    _write(args.output, format_chain_cover(cover, B.graph.n))
    out(f"chains {len(cover)} bound-factor {params.box_factor}")


def cmd_poset_dim(args, out):
    P = parse_poset(_read(args.input))
    params = _params(args, 2 * P.n)
    k, cover = posetdim_approx(P, params, threads=args.threads)
    _write(args.output, format_chain_cover(cover, 2 * P.n))
    out(f"dimension {k} bound-factor {params.box_factor}")


def _validate(args, out, parse, check) -> int:
    G = parse_graph(_read(args.graph))
    n, rep = parse(_read(args.rep))
    if n != G.n:
        raise ParseError(f"representation has {n} vertices, graph has {G.n}")
    verdict = check(G, rep)
    if verdict:
        out(f"valid yes dimension {len(rep)}")
        return 0
    out("valid no")
    out(f"witness {verdict.describe().removeprefix('invalid ')}")
    return 1


def cmd_validate_box(args, out):
    return _validate(args, out, parse_box_rep, validate_box_rep)


def cmd_validate_cube(args, out):
    return _validate(args, out, parse_cube_rep, validate_cube_rep)


def cmd_dump_nice(args, out):
    G = parse_graph(_read(args.input))
    split = clique_residual_split(G, args.k_max)
    if split is None:
        raise CapabilityError(f"no clique leaves at most {args.k_max} vertices outside")
    A, _ = split
    reps = [R for R, _ in enumerate_nice_supergraphs(G, A)]
    text = format_box_rep(reps, G.n)
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    out(f"candidates {len(reps)}")


COMMANDS = {
    "exact": (cmd_exact, "optimal boxicity for graphs with a clique on all but k vertices"),
    "approx-box": (cmd_approx_box, "approximate box representation"),
    "approx-cube": (cmd_approx_cube, "approximate cube representation"),
    "oracle-box": (cmd_oracle_box, "brute-force boxicity (n <= 8)"),
    "oracle-cube": (cmd_oracle_cube, "brute-force cubicity (n <= 8)"),
    "oracle-ch": (cmd_oracle_ch, "brute-force chain cover number of a bipartite graph"),
    "oracle-posetdim": (cmd_oracle_posetdim, "brute-force poset dimension"),
    "chain-cover": (cmd_chain_cover, "approximate chain cover of a bipartite graph"),
    "poset-dim": (cmd_poset_dim, "approximate poset dimension"),
    "validate-box": (cmd_validate_box, "check a box representation against a graph"),
    "validate-cube": (cmd_validate_cube, "check a cube representation against a graph"),
    "dump-nice": (cmd_dump_nice, "list every nice interval supergraph candidate"),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="boxdim", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text)
        if name.startswith("validate"):
            p.add_argument("--graph", required=True)
            p.add_argument("--rep", required=True)
            continue
        p.add_argument("--input", required=True)
        p.add_argument("--output")
        p.add_argument("--k", type=int)
        p.add_argument("--k-max", type=int, default=DEFAULT_K_MAX)
        p.add_argument("--max-dim", type=int)
        p.add_argument("--threads", type=int, default=1)
        p.add_argument("--per-component", action="store_true")
        p.add_argument("--allow-weaker", action="store_true",
                       help="approx-cube: accept a decomposition above the log bound")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", None) is not None and args.k < 1:
        print("error: --k must be positive", file=sys.stderr)
        return 1
    if getattr(args, "threads", 1) < 1:
        print("error: --threads must be positive", file=sys.stderr)
        return 1

    def out(line):
        print(line)

    func = COMMANDS[args.command][0]
    try:
        return func(args, out) or 0
    except CapabilityError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (BoxdimError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
