"""Command-line front end.

Exit codes: 0 success, 2 usage error, 3 unparsable input file,
4 invalid input (bad matrix, mismatched sizes, out-of-range flag),
5 enumeration limit refused.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import analysis, formats
from .analysis import EnumerationLimitError
from .core import DimensionError, train_hebbian
from .formats import ParseError
from .proximity import ProximityError, all_orders, activity_order, validate_proximity
from .recall import recall

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_PARSE = 3
EXIT_INVALID = 4
EXIT_LIMIT = 5


def _bits(v: Sequence[int]) -> str:
    return " ".join(f"{b:+d}" for b in v)


def _matrix_lines(M) -> list[str]:
    rows = [[f"{v:g}" for v in row] for row in M.tolist()]
    width = max(len(s) for row in rows for s in row)
    return ["  " + " ".join(s.rjust(width) for s in row) for row in rows]


def _load_pair(args):
    memories = formats.read_memories(args.memories)
    P = validate_proximity(formats.read_proximity(args.proximity))
    T = train_hebbian(memories)
    if P.n != T.shape[0]:
        raise DimensionError(
            f"memories have {T.shape[0]} neurons but the proximity matrix has {P.n}"
        )
    return memories, P, T


def cmd_train(args) -> tuple[dict, list[str]]:
    T = train_hebbian(formats.read_memories(args.memories))
    doc = {"kind": "train", "weights": formats.matrix_doc(T)}
    return doc, ["T ="] + _matrix_lines(T)


def cmd_orders(args) -> tuple[dict, list[str]]:
    P = validate_proximity(formats.read_proximity(args.proximity))
    orders = all_orders(P)
    doc = {
        "kind": "orders",
        "symmetric": P.symmetric,
        "proximity": formats.matrix_doc(P.distances),
        "orders": [list(o) for o in orders],
    }
    lines = [f"symmetric: {'yes' if P.symmetric else 'no'}"]
    lines += [f"neuron {o.start}: {o}" for o in orders]
    return doc, lines


def _parse_seed(text: str) -> list[int]:
    try:
        seed = [int(tok) for tok in text.split(",")]
    except ValueError:
        raise ValueError(f"bad seed {text!r}: expected comma-separated +1/-1 tokens") from None
    if not seed or any(b not in (1, -1) for b in seed):
        raise ValueError(f"bad seed {text!r}: expected comma-separated +1/-1 tokens")
    return seed


def cmd_recall(args) -> tuple[dict, list[str]]:
    memories, P, T = _load_pair(args)
    seed = _parse_seed(args.seed)
    order = activity_order(P, args.start)
    res = recall(T, order, seed)
    outcome = analysis.classify(res.normative_bits, memories, T)
    doc = {
        "kind": "recall",
        "start": args.start,
        "seed": seed,
        "result": formats.result_doc(res),
        "outcome": formats.outcome_doc(outcome),
    }
    if not args.trace:
        doc["result"]["trace"]["steps"] = []
        doc["result"]["trace"]["fragments"] = []
    lines = [
        f"order:      {order}",
        f"ordered:    {_bits(res.ordered_bits)}",
        f"normative:  {_bits(res.normative_bits)}",
        f"outcome:    {outcome.label()}" + ("" if outcome.fixed_point else " [not a fixed point]"),
    ]
    if args.trace:
        lines.append("trace:")
        for s in res.trace.steps:
            flag = "  zero input" if s.zero_input else ""
            lines.append(
                f"  pos {s.position} neuron {s.neuron}: net {s.net_input:+d} -> {s.bit:+d}{flag}"
            )
    return doc, lines


def cmd_map(args) -> tuple[dict, list[str]]:
    memories, P, T = _load_pair(args)
    pols = {"both": (1, -1), "+1": (1,), "1": (1,), "-1": (-1,)}[args.polarity]
    entries = analysis.neuron_memory_map(T, P, memories, pols)
    doc = {"kind": "map", "entries": [formats.map_entry_doc(e) for e in entries]}
    lines = ["neuron  order            seed  normative              outcome"]
    for e in entries:
        lines.append(
            f"{e.neuron:>6}  {str(e.order):<15}  {e.polarity:+d}    "
            f"{_bits(e.result.normative_bits):<21}  {e.outcome.label()}"
        )
    return doc, lines


def cmd_enumerate(args) -> tuple[dict, list[str]]:
    memories = formats.read_memories(args.memories)
    T = train_hebbian(memories)
    fps = analysis.enumerate_fixed_points(T, memories, limit=args.limit)
    counts = analysis.census(fps)
    doc = {
        "kind": "enumerate",
        "n": int(T.shape[0]),
        "fixed_points": [formats.outcome_doc(o) for o in fps],
        "counts": counts,
    }
    lines = [f"{len(fps)} fixed points among 2^{T.shape[0]} states"]
    lines += [f"  {_bits(o.vector)}  {o.label()}" for o in fps]
    lines += [f"{k}: {v}" for k, v in counts.items()]
    return doc, lines


def cmd_capacity(args) -> tuple[dict, list[str]]:
    if args.m_max < 1:
        raise ValueError(f"--m-max must be at least 1, got {args.m_max}")
    rep = analysis.capacity_sweep(args.n, range(1, args.m_max + 1), args.trials, args.seed)
    doc = {"kind": "capacity", "report": formats.capacity_doc(rep)}
    lines = [f"n={rep.n} trials={args.trials} seed={rep.rng_seed}", "   m  m/n    all-stored  per-memory"]
    for r in rep.rows:
        lines.append(
            f"{r.m:>4}  {r.m / rep.n:.3f}  {r.all_stored_fraction:>10.3f}  "
            f"{r.per_memory_stored_fraction:>10.4f}"
        )
    return doc, lines


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bmatrix",
        description="Hebbian memories recalled from single neurons along proximity orders.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("human", "machine"), default="human",
        help="human-readable table or JSON document (default: human)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", parents=[common], help="print the Hebbian weight matrix")
    p.add_argument("memories")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("orders", parents=[common], help="activity order from every neuron")
    p.add_argument("proximity")
    p.set_defaults(func=cmd_orders)

    p = sub.add_parser("recall", parents=[common], help="recall from one starting neuron")
    p.add_argument("memories")
    p.add_argument("proximity")
    p.add_argument("--start", type=int, required=True, help="1-based starting neuron")
    p.add_argument(
        "--seed", default="1",
        help="clamped bits along the order, e.g. 1 or -1 or '--seed=-1,1' (default: 1)",
    )
    p.add_argument("--trace", action="store_true", help="include every step's net input")
    p.set_defaults(func=cmd_recall)

    p = sub.add_parser("map", parents=[common], help="recall from every neuron and classify")
    p.add_argument("memories")
    p.add_argument("proximity")
    p.add_argument("--polarity", choices=("both", "+1", "1", "-1"), default="both")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("enumerate", parents=[common], help="all fixed points by exhaustive scan")
    p.add_argument("memories")
    p.add_argument("--limit", type=int, default=analysis.DEFAULT_ENUMERATION_LIMIT)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("capacity", parents=[common], help="Monte-Carlo storage rates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0, help="RNG seed (default: 0)")
    p.set_defaults(func=cmd_capacity)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        doc, lines = args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except EnumerationLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except (ProximityError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    if args.format == "machine":
        sys.stdout.write(formats.dumps(doc))
    else:
        print("\n".join(lines))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
