"""Command-line surface: compute, verify, generate, export, acceptance harness.

Exit codes: 0 success, 1 failed verification or failed acceptance check,
2 unreadable or malformed input, 3 non-block-graph input to a block-graph
command, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .blocks import BlockDecomposition, block_decomposition, block_cut_tree_dot
from .cover import (
    Cover,
    box_to_dict,
    cover_from_dict,
    cover_to_box_representation,
    cover_to_dict,
    min_cointerval_cover,
    min_threshold_cover,
    verify_cover,
)
from .errors import InputError, InternalInvariantError, NotBlockGraphError
from .generate import random_block_graph
from .graph import (
    Graph,
    parse_edgelist,
    parse_structured,
    serialize_edgelist,
    serialize_structured,
)
from .oracle import brute_coboxicity, brute_cothdim

PALETTE = (
    "red", "blue", "forestgreen", "darkorange", "purple",
    "saddlebrown", "deeppink", "teal", "olive", "navy",
)


@dataclass
class RunConfig:
    command: str
    input_path: str | None = None
    format: str = "edgelist"
    seed: int | None = None
    oracle: bool = False
    output_path: str | None = None
    kind: str = "cointerval"
    cover_path: str | None = None
    n: int = 50
    edge_block_prob: float = 0.6
    max_block: int = 5
    with_cover: bool = False
    dot_path: str | None = None
    quick: bool = False


def _read_text(path: str | None) -> str:
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _write_text(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _load_graph(cfg: RunConfig) -> Graph:
    text = _read_text(cfg.input_path)
    if cfg.format == "structured":
        return parse_structured(text)
    return parse_edgelist(text)


def export_dot(g: Graph, bd: BlockDecomposition, c: Cover | None = None) -> str:
    """DOT text for the graph (cover elements as colored edge groups)
    followed by its block-cut tree."""
    if bd.host != g:
        raise InputError("decomposition does not match the graph")
    color: dict[tuple[int, int], str] = {}
    if c is not None:
        for i, el in enumerate(c.elements):
            for e in sorted(el.edges):
                color.setdefault(e, PALETTE[i % len(PALETTE)])
    lines = ["graph G {"]
    for v in sorted(g.vertices):
        lines.append(f"  {v};")
    for u, v in sorted(g.edges):
        paint = color.get((u, v))
        suffix = f' [color="{paint}"]' if paint else ""
        lines.append(f"  {u} -- {v}{suffix};")
    lines.append("}")
    return "\n".join(lines) + "\n" + block_cut_tree_dot(bd)


def _cmd_value(cfg: RunConfig, threshold: bool) -> int:
    g = _load_graph(cfg)
    if threshold:
        cover, traces = min_threshold_cover(g)
    else:
        cover, traces = min_cointerval_cover(g)
    if cfg.oracle:
        brute = brute_cothdim(g) if threshold else brute_coboxicity(g)
        agree = "agree" if brute == len(cover.elements) else "DISAGREE"
        print(f"oracle {brute} ({agree})", file=sys.stderr)
        if brute != len(cover.elements):
            raise InternalInvariantError("algorithm disagrees with the exact oracle")
    print(len(cover.elements))
    if cfg.with_cover:
        _write_text(cfg.output_path, json.dumps(cover_to_dict(cover, traces), indent=2) + "\n")
    return 0


def _cmd_cover(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if cfg.kind == "threshold":
        cover, traces = min_threshold_cover(g)
    else:
        cover, traces = min_cointerval_cover(g)
    _write_text(cfg.output_path, json.dumps(cover_to_dict(cover, traces), indent=2) + "\n")
    if cfg.dot_path:
        _write_text(cfg.dot_path, export_dot(g, block_decomposition(g), cover))
    return 0


def _cmd_verify(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    try:
        payload = json.loads(_read_text(cfg.cover_path))
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed cover JSON: {exc}") from None
    cover = cover_from_dict(g, payload)
    report = verify_cover(g, cover)
    if report.valid:
        print("valid")
        return 0
    print("invalid")
    if report.not_subgraphs:
        print(f"  elements not subgraphs: {list(report.not_subgraphs)}")
    if report.recognition_failures:
        print(f"  elements failing {cover.kind} recognition: {list(report.recognition_failures)}")
    if report.uncovered:
        print(f"  uncovered edges: {sorted(report.uncovered)}")
    return 1


def _cmd_boxrep(cfg: RunConfig) -> int:
    g = _load_graph(cfg)
    if cfg.cover_path:
        cover = cover_from_dict(g, json.loads(_read_text(cfg.cover_path)))
    else:
        cover, _ = min_cointerval_cover(g)
    rep = cover_to_box_representation(g, cover)
    _write_text(cfg.output_path, json.dumps(box_to_dict(rep), indent=2) + "\n")
    return 0


def _cmd_gen(cfg: RunConfig) -> int:
    if cfg.seed is None:
        raise InputError("gen requires --seed")
    g = random_block_graph(cfg.n, cfg.seed, cfg.edge_block_prob, cfg.max_block)
    text = serialize_structured(g) if cfg.format == "structured" else serialize_edgelist(g)
    _write_text(cfg.output_path, text)
    return 0


def _cmd_harness(cfg: RunConfig) -> int:
    from .acceptance import run_all

    results = run_all(fast=cfg.quick)
    for res in results:
        print(res.line())
    return 0 if all(r.passed for r in results) else 1


def run(cfg: RunConfig) -> int:
    """Dispatch one command; returns the process exit status."""
    handlers = {
        "coboxicity": lambda: _cmd_value(cfg, threshold=False),
        "cothdim": lambda: _cmd_value(cfg, threshold=True),
        "cover": lambda: _cmd_cover(cfg),
        "verify": lambda: _cmd_verify(cfg),
        "boxrep": lambda: _cmd_boxrep(cfg),
        "gen": lambda: _cmd_gen(cfg),
        "harness": lambda: _cmd_harness(cfg),
    }
    try:
        return handlers[cfg.command]()
    except NotBlockGraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InternalInvariantError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 4


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="antcover",
        description="Co-boxicity and threshold co-dimension of block graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("--input", "-i", default=None, help="graph file ('-' for stdin)")
        p.add_argument("--format", "-f", choices=["edgelist", "structured"], default="edgelist")

    for name in ("coboxicity", "cothdim"):
        p = sub.add_parser(name, help=f"print the {name} of a block graph")
        add_input(p)
        p.add_argument("--oracle", action="store_true", help="cross-check against the exact oracle")
        p.add_argument("--cover", dest="with_cover", action="store_true", help="also emit the cover as JSON")
        p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("cover", help="emit a minimum cover with iteration traces")
    add_input(p)
    p.add_argument("--kind", choices=["cointerval", "threshold"], default="cointerval")
    p.add_argument("--output", "-o", default=None)
    p.add_argument("--dot", dest="dot_path", default=None, help="also write a DOT rendering")

    p = sub.add_parser("verify", help="verify a cover against a graph")
    add_input(p)
    p.add_argument("--cover", dest="cover_path", required=True, help="cover JSON file")

    p = sub.add_parser("boxrep", help="emit a box intersection model of the complement")
    add_input(p)
    p.add_argument("--cover", dest="cover_path", default=None, help="use this cover instead of computing one")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("gen", help="generate a seeded random block graph")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, default=50)
    p.add_argument("--edge-block-prob", type=float, default=0.6)
    p.add_argument("--max-block", type=int, default=5)
    p.add_argument("--format", "-f", choices=["edgelist", "structured"], default="edgelist")
    p.add_argument("--output", "-o", default=None)

    p = sub.add_parser("harness", help="run the acceptance suite")
    p.add_argument("--quick", action="store_true", help="reduced sizes for a smoke run")

    return parser


def parse_args(argv: list[str] | None = None) -> RunConfig:
    ns = _build_parser().parse_args(argv)
    cfg = RunConfig(command=ns.command)
    for field in (
        "input_path", "format", "seed", "oracle", "output_path", "kind",
        "cover_path", "n", "edge_block_prob", "max_block", "with_cover",
        "dot_path", "quick",
    ):
        attr = {"input_path": "input", "output_path": "output"}.get(field, field)
        if hasattr(ns, attr):
            setattr(cfg, field, getattr(ns, attr))
    return cfg


def main(argv: list[str] | None = None) -> int:
    return run(parse_args(argv))


if __name__ == "__main__":
    sys.exit(main())
