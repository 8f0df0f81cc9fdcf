"""Command line front end: ``indcut {solve,verify,reduce,gen,bench}``.

Exit codes: 0 success (``solve``: a cut exists), 10 no independent cut,
1 ``verify`` rejected the set, 2 bad input or refused parameters, 3 internal
invariant failure.
"""
from __future__ import annotations

import argparse
import csv
import io
import logging
import os
import sys
import tempfile
import time
from pathlib import Path

from . import generators
from .cover import CoverInvariantError, format_cover, make_cover
from .graph import ParseError, is_independent, parse_dimacs, write_dimacs
from .reduction import format_labels, parse_cnf, reduce_full
from .solver import STRATEGIES, CertificateError, solve, verify_cut

EXIT_OK, EXIT_REJECT, EXIT_INPUT, EXIT_INTERNAL, EXIT_NO_CUT = 0, 1, 2, 3, 10
BENCH_COLUMNS = ["instance", "n", "m", "max_deg", "cover_size", "partitions",
                 "twosat_calls", "has_cut", "wall_ms"]

log = logging.getLogger("indcut")


class UsageError(Exception):
    pass


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write ``text`` to ``path`` through a temp file and rename."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        os.unlink(tmp)
        raise


def _emit(text: str, out: str | None) -> None:
    if out:
        write_atomic(out, text)
    else:
        sys.stdout.write(text)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


# --- commands ---------------------------------------------------------------


def cmd_solve(args) -> int:
    g = parse_dimacs(_read(args.input))
    try:
        verdict = solve(g, strategy=args.strategy, n_jobs=args.jobs, brute_max_n=args.brute_max_n)
    except ValueError as exc:  # oracle size cap
        raise UsageError(str(exc)) from None
    if args.dump_cover:
        method = args.strategy if args.strategy != "brute" else "auto"
        write_atomic(args.dump_cover, format_cover(make_cover(g, method)))
    if args.format == "json":
        sys.stdout.write(verdict.to_json() + "\n")
    else:
        d = verdict.to_dict()
        line = "YES " + " ".join(map(str, d["certificate"])) if verdict.has_cut else "NO"
        sys.stdout.write(f"{line}\nreason: {verdict.reason}\n")
    return EXIT_OK if verdict.has_cut else EXIT_NO_CUT


def cmd_verify(args) -> int:
    g = parse_dimacs(_read(args.input))
    bad = [v for v in args.ids if not 1 <= v <= g.n]
    if bad:
        raise UsageError(f"vertex id(s) {bad} out of range 1..{g.n}")
    s = {v - 1 for v in args.ids}
    if not is_independent(g, s):
        print("set not independent")
        return EXIT_REJECT
    if not verify_cut(g, s):
        print("removal leaves connected graph")
        return EXIT_REJECT
    print("independent cut")
    return EXIT_OK


def cmd_reduce(args) -> int:
    inst = reduce_full(parse_cnf(_read(args.input)))
    st = inst.stages
    summary = (f"n'={st['n1']} m'={st['m1']} n''={st['n2']} m''={st['m2']} "
               f"order={st['order']} size={st['size']}\n")
    comments = [f"reduced from 3-SAT with n={st['n']} m={st['m']}"]
    graph_text = write_dimacs(inst.graph, comments)
    labels_path = args.labels or (args.output + ".labels" if args.output else None)
    if args.output:
        write_atomic(args.output, graph_text)
        if labels_path:
            write_atomic(labels_path, format_labels(inst))
        sys.stdout.write(summary)
    else:
        if labels_path:
            write_atomic(labels_path, format_labels(inst))
        sys.stdout.write(graph_text)
        sys.stderr.write(summary)
    return EXIT_OK


def cmd_gen(args) -> int:
    try:
        if args.family == "maxdeg":
            g = generators.maxdeg(args.n, args.delta, args.p, args.seed)
        elif args.family == "dense":
            g = generators.dense(args.n, args.beta, args.seed, p=args.p)
        elif args.family == "windmill":
            g = generators.windmills(args.sizes, connect=args.connect)
        else:
            g = generators.prismlike(args.k)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(write_dimacs(g), args.output)
    return EXIT_OK


def _bench_instances(args):
    if args.directory:
        d = Path(args.directory)
        if not d.is_dir():
            raise UsageError(f"{d} is not a directory")
        for path in sorted(p for p in d.iterdir() if p.is_file()):
            yield path.name, lambda p=path: parse_dimacs(p.read_text())
        return
    for n in args.sizes:
        for seed in range(args.seed, args.seed + args.repeats):
            name = f"maxdeg-{n}-{args.delta}-{args.p}-s{seed}"
            yield name, lambda n=n, seed=seed: generators.maxdeg(n, args.delta, args.p, seed)


def cmd_bench(args) -> int:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(BENCH_COLUMNS)
    for name, load in _bench_instances(args):
        try:
            g = load()
            start = time.perf_counter()
            verdict = solve(g, strategy=args.strategy, n_jobs=args.jobs)
            wall = (time.perf_counter() - start) * 1000
        except (OSError, UnicodeDecodeError, ParseError, ValueError) as exc:
            log.warning("%s: %s", name, exc)
            writer.writerow([name] + ["error"] * (len(BENCH_COLUMNS) - 1))
            continue
        st = verdict.stats
        cover_size = st.get("cover_size")
        if cover_size is None:
            cover_size = len(make_cover(g, "auto" if args.strategy == "brute" else args.strategy))
        writer.writerow([name, g.n, g.m, g.max_degree(), cover_size, st.get("partitions", 0),
                         st.get("twosat_calls", 0), int(verdict.has_cut), f"{wall:.3f}"])
    _emit(buf.getvalue(), args.output)
    return EXIT_OK


# --- parser -----------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="indcut", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="decide whether a DIMACS graph has an independent cut")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--format", choices=("json", "plain"), default="json")
    p.add_argument("--dump-cover", metavar="PATH")
    p.add_argument("--brute-max-n", type=int, default=26)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a candidate independent cut (1-based ids)")
    p.add_argument("input")
    p.add_argument("ids", type=int, nargs="*")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reduce", help="reduce a DIMACS CNF (clauses of at most 3 literals) to a graph")
    p.add_argument("input", nargs="?", default="-")
    p.add_argument("-o", "--output")
    p.add_argument("--labels", help="label sidecar path (default: OUTPUT.labels)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("gen", help="generate a test graph")
    p.add_argument("-o", "--output")
    fam = p.add_subparsers(dest="family", required=True)
    q = fam.add_parser("maxdeg")
    q.add_argument("n", type=int)
    q.add_argument("delta", type=int)
    q.add_argument("p", type=float)
    q.add_argument("--seed", type=int, default=0)
    q = fam.add_parser("dense")
    q.add_argument("n", type=int)
    q.add_argument("beta", type=float)
    q.add_argument("--p", type=float, default=0.5, help="edge probability of the sparse complement")
    q.add_argument("--seed", type=int, default=0)
    q = fam.add_parser("windmill")
    q.add_argument("sizes", type=int, nargs="+")
    q.add_argument("--connect", action="store_true")
    q = fam.add_parser("prismlike")
    q.add_argument("k", type=int)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("bench", help="solve a batch of instances and write CSV")
    p.add_argument("directory", nargs="?")
    p.add_argument("--sizes", type=_int_list, default=[20, 30, 40])
    p.add_argument("--delta", type=int, default=4)
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--repeats", type=int, default=1)
    p.add_argument("--strategy", choices=STRATEGIES, default="auto")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    if getattr(args, "jobs", 1) < 1:
        print("error: --jobs must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CertificateError, CoverInvariantError, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
