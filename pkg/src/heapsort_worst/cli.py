"""Command-line front end.

    heapsort-worst gen {heap,array} N [--out PATH] [--format text|json]
    heapsort-worst verify N_FROM N_TO [--out PATH] [--jobs J]
    heapsort-worst trace N {par,win} [--out PATH]
    heapsort-worst oracle N {perm,heap,worstset,singularity}
    heapsort-worst census [--out PATH]

Exit codes: 0 success, 1 mismatch or I/O error, 2 usage error.
"""

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Iterable, Optional, Sequence

from . import formulas, oracle
from .game import play, strategy_par, strategy_win
from .heap import removeall
from .hereditary import enumerate_hereditary
from .worstcase import SweepRow, sweep, worst_array, worst_heap

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# file formats

def format_values(values: Sequence[int], fmt: str) -> str:
    if fmt == "json":
        return json.dumps({"n": len(values), "values": list(values)}) + "\n"
    return ",".join(map(str, values)) + "\n"


def parse_values(text: str) -> list[int]:
    """Read either output format back."""
    text = text.strip()
    if text.startswith("{"):
        doc = json.loads(text)
        values = [int(v) for v in doc["values"]]
        if doc.get("n", len(values)) != len(values):
            raise ValueError("'n' does not match the number of values")
        return values
    return [int(tok) for tok in text.split(",")]


@contextmanager
def _output(path: Optional[str]):
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def write_rows(rows: Iterable[SweepRow], fh) -> Optional[int]:
    """Write the CSV and return the first N whose row does not match."""
    writer = csv.writer(fh)
    writer.writerow(SweepRow._fields)
    first_bad = None
    for row in rows:
        writer.writerow([*row[:-1], str(row.match).lower()])
        if not row.match and first_bad is None:
            first_bad = row.N
    return first_bad


def _shard(args):
    lo, hi = args
    return list(sweep(lo, hi))


def sweep_rows(n_from: int, n_to: int, jobs: int = 1) -> Iterable[SweepRow]:
    """Rows in ascending N; with several jobs the range is cut into contiguous shards."""
    if jobs <= 1 or n_to - n_from < 64:
        yield from sweep(n_from, n_to)
        return
    # several shards per worker so the costly high-N shards do not all land last
    bounds, lo = [], n_from
    step = max(16, (n_to - n_from + 1) // (4 * jobs))
    while lo <= n_to:
        hi = min(n_to, lo + step - 1)
        bounds.append((lo, hi))
        lo = hi + 1
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for rows in pool.map(_shard, bounds):
            yield from rows


def render_levels(heap: Sequence[int]) -> list[str]:
    lines, level, start = [], 0, 1
    while start <= len(heap):
        chunk = heap[start - 1 : 2 * start - 1]
        lines.append(f"Level {level}: " + " ".join(map(str, chunk)))
        level += 1
        start *= 2
    return lines


def trace_lines(n: int, strategy: str) -> list[str]:
    sched = strategy_win(n) if strategy == "win" else strategy_par(n)
    log = play([1], sched.pulls, snapshots=True)
    lines = []
    for idx, heap in enumerate(log.heaps):
        if idx:
            rec = log.records[idx - 1]
            lines += [f"H[{rec.move_index}] -> H[{rec.size_before + 1}]", ""]
        lines += render_levels(heap)
        lines.append("")
    lines.append("pulls: " + ",".join(map(str, log.pulls)))
    lines.append("moves: " + ",".join(map(str, log.moves)))
    return lines


# commands

def cmd_gen(args) -> int:
    if args.n < 2:
        raise UsageError("N must be at least 2")
    values = worst_heap(args.n) if args.kind == "heap" else worst_array(args.n)
    with _output(args.out) as fh:
        fh.write(format_values(values, args.format))
    return OK


def cmd_verify(args) -> int:
    if not 2 <= args.n_from <= args.n_to:
        raise UsageError("need 2 <= N_FROM <= N_TO")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    with _output(args.out) as fh:
        first_bad = write_rows(sweep_rows(args.n_from, args.n_to, args.jobs), fh)
    if first_bad is not None:
        print(f"mismatch at N={first_bad}", file=sys.stderr)
        return FAILED
    return OK


def cmd_trace(args) -> int:
    if args.n < 2:
        raise UsageError("N must be at least 2")
    with _output(args.out) as fh:
        fh.write("\n".join(trace_lines(args.n, args.strategy)) + "\n")
    return OK


def cmd_oracle(args) -> int:
    n, target = args.n, args.target
    try:
        if target == "perm":
            reports = [oracle.perm_worst(n, "makeheap"), oracle.perm_worst(n, "heapsort")]
            for phase, rep in zip(("makeheap", "heapsort"), reports):
                print(f"{phase}: N={n} max={rep.max_count} formula={rep.formula_value} "
                      f"agrees={str(rep.agrees).lower()} witness={rep.witness}")
            return OK if all(r.agrees for r in reports) else FAILED
        if target == "heap":
            rep = oracle.heap_worst_removeall(n)
            print(f"removeall: N={n} max={rep.max_count} formula={rep.formula_value} "
                  f"agrees={str(rep.agrees).lower()} witness={rep.witness}")
            return OK if rep.agrees else FAILED
        if target == "worstset":
            heaps = oracle.enumerate_worstcase_heaps(n)
            expected = formulas.removeall_max(n) if n >= 2 else 0
            counts = {removeall(h).comparisons for h in heaps}
            agrees = counts == {expected}
            print(f"worstset: N={n} heaps={len(heaps)} removeall={sorted(counts)} "
                  f"formula={expected} agrees={str(agrees).lower()}")
            return OK if agrees else FAILED
        result = oracle.singularity_check(n)
        print(f"singularity: N={n} {str(result).lower()}")
        return OK if result else FAILED
    except ValueError as exc:  # includes OracleLimitError
        raise UsageError(str(exc)) from exc


def cmd_census(args) -> int:
    census = enumerate_hereditary()
    with _output(args.out) as fh:
        json.dump(census.to_dict(), fh)
        fh.write("\n")
    if args.out not in (None, "-"):
        print(f"total={census.count} max_size={census.max_size}")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="heapsort-worst", description="Worst-case Heapsort inputs and counts.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a worst-case heap or input array")
    g.add_argument("kind", choices=["heap", "array"])
    g.add_argument("n", type=int, metavar="N")
    g.add_argument("--out")
    g.add_argument("--format", choices=["text", "json"], default="text")
    g.set_defaults(func=cmd_gen)

    v = sub.add_parser("verify", help="CSV of measured vs formula counts")
    v.add_argument("n_from", type=int, metavar="N_FROM")
    v.add_argument("n_to", type=int, metavar="N_TO")
    v.add_argument("--out")
    v.add_argument("--jobs", type=int, default=1)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("trace", help="print the game heaps level by level")
    t.add_argument("n", type=int, metavar="N")
    t.add_argument("strategy", choices=["par", "win"])
    t.add_argument("--out")
    t.set_defaults(func=cmd_trace)

    o = sub.add_parser("oracle", help="exhaustive cross-checks for small N")
    o.add_argument("n", type=int, metavar="N")
    o.add_argument("target", choices=["perm", "heap", "worstset", "singularity"])
    o.set_defaults(func=cmd_oracle)

    c = sub.add_parser("census", help="export the hereditary worst-case heaps as JSON")
    c.add_argument("--out")
    c.set_defaults(func=cmd_census)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAILED
