"""Command-line driver: ingest or generate a network, enumerate, write cliques and stats."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from typing import Sequence

from .generate import GeneratorParams, generate_random
from .network import COLUMN_ORDERS, ParseError, TemporalNetwork, read_network
from .oracle import OracleCapError, oracle_enumerate
from .pipeline import EnumerationResult, find_maximal_cliques

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_MISMATCH = 3

log = logging.getLogger("dgclique")

GENERATOR_KEYS = {"nodes": int, "instances": int, "t_min": int, "t_max": int, "seed": int, "weights": str}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad arguments; 2 is reserved for I/O errors here
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    delta: int
    gamma: float = 1.0
    input: str | None = None
    generate: GeneratorParams | None = None
    columns: str = "uvt"
    output: str | None = None
    format: str = "tsv"
    prune: bool = True
    oracle_validate: bool = False
    stats: str | None = None
    dump_stretch: str | None = None


def parse_generator(tokens: Sequence[str], seed: int | None = None) -> GeneratorParams:
    """Turn ``key=value`` tokens into generator parameters.

    ``weights=lo:hi`` draws integer weights uniformly from ``[lo, hi]``; without it
    every weight is 1.
    """
    values: dict = {}
    for token in tokens:
        key, sep, raw = token.partition("=")
        if not sep or key not in GENERATOR_KEYS:
            raise UsageError(f"bad generator parameter {token!r}; keys are {', '.join(GENERATOR_KEYS)}")
        try:
            values[key] = GENERATOR_KEYS[key](raw)
        except ValueError:
            raise UsageError(f"bad value in {token!r}") from None
    if "weights" in values:
        lo, sep, hi = values.pop("weights").partition(":")
        try:
            values["weight_range"] = (int(lo), int(hi))
        except ValueError:
            raise UsageError("weights must look like lo:hi with integer bounds") from None
        if not sep:
            raise UsageError("weights must look like lo:hi")
    if seed is not None:
        values["seed"] = seed
    return GeneratorParams(**values)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(
        prog="dgclique",
        description="Enumerate all (delta, gamma)-maximal cliques of a weighted temporal network.",
        epilog=(
            "Stats are a JSON object: N = clique count, C = max cardinality, "
            "D = max duration measured as t_e - t_b, plus per-phase wall time, visited "
            "states, pruned branches and peak memory where the platform reports it. "
            "Exit codes: 0 ok, 1 usage error, 2 I/O or parse error, 3 oracle mismatch."
        ),
    )
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--input", metavar="PATH", help="edge list with lines 'u v t [w]'")
    src.add_argument(
        "--generate",
        nargs="+",
        metavar="KEY=VAL",
        help="random network; keys: nodes, instances, t_min, t_max, seed, weights=lo:hi",
    )
    p.add_argument("--delta", type=int, required=True, help="window length in timestamp units")
    p.add_argument("--gamma", type=float, default=1.0, help="minimum window weight (default 1)")
    p.add_argument("--columns", choices=sorted(COLUMN_ORDERS), default="uvt", help="input column order")
    p.add_argument("--output", metavar="PATH", help="clique output file (default stdout)")
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.add_argument("--no-prune", dest="prune", action="store_false", help="disable branch pruning")
    p.add_argument(
        "--oracle-validate",
        action="store_true",
        help="compare against the exhaustive enumerator (tiny networks only)",
    )
    p.add_argument("--stats", metavar="PATH", help="write stats JSON here instead of stderr")
    p.add_argument("--dump-stretch", metavar="PATH", help="write the 2-node stretch records as TSV")
    p.add_argument("--seed", type=int, help="generator seed (overrides seed=)")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _natural(name) -> tuple:
    text = str(name)
    try:
        return (0, int(text), text)
    except ValueError:
        return (1, 0, text)


def format_cliques(network: TemporalNetwork, result: EnumerationResult, fmt: str) -> list[str]:
    rows = []
    for c in result.cliques:
        names = sorted((network.names[u] for u in c.nodes), key=_natural)
        rows.append((c.tb, c.te, [_natural(n) for n in names], names))
    rows.sort(key=lambda r: r[:3])
    if fmt == "jsonl":
        return [json.dumps({"nodes": names, "t_b": tb, "t_e": te}) for tb, te, _, names in rows]
    return ["\t".join(map(str, names)) + f"\t{tb}\t{te}" for tb, te, _, names in rows]


def parse_output(lines: Sequence[str], fmt: str) -> set[tuple[tuple[str, ...], int, int]]:
    """Read clique lines back into ``(names, t_b, t_e)`` triples; names come back as strings."""
    out = set()
    for line in lines:
        if not line.strip():
            continue
        if fmt == "jsonl":
            obj = json.loads(line)
            out.add((tuple(str(n) for n in obj["nodes"]), obj["t_b"], obj["t_e"]))
        else:
            *names, tb, te = line.rstrip("\n").split("\t")
            out.add((tuple(names), int(tb), int(te)))
    return out


def _peak_memory_kb() -> int | None:
    try:
        import resource
    except ImportError:
        return None
    peak = resource.getrusage(resource.RUSAGE_SELF).ru_maxrss
    # macOS reports bytes, Linux kilobytes
    return peak // 1024 if sys.platform == "darwin" else peak


def collect_stats(network: TemporalNetwork, config: RunConfig, result: EnumerationResult) -> dict:
    sink = result.sink
    return {
        "N": sink.count,
        "C": sink.max_cardinality,
        "D": sink.max_duration,
        "delta": config.delta,
        "gamma": config.gamma,
        "nodes": network.node_count,
        "edges": network.edge_count,
        "instances": network.instance_count,
        "stretch_records": len(result.store),
        "stretch_fallbacks": result.stretch_stats.fallbacks,
        "signed_route": result.signed,
        "visited": result.bulk_stats.visited,
        "pruned": result.bulk_stats.pruned_branches,
        "prune": config.prune,
        "seconds": {k: round(v, 6) for k, v in result.timings.items()},
        "peak_memory_kb": _peak_memory_kb(),
    }


def _load(config: RunConfig) -> TemporalNetwork:
    if config.generate is not None:
        return generate_random(config.generate)
    return read_network(config.input, config.columns)


def _write(path: str | None, lines: list[str]) -> None:
    text = "".join(line + "\n" for line in lines)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def run(config: RunConfig) -> int:
    try:
        network = _load(config)
    except (OSError, ParseError, UnicodeDecodeError) as exc:
        print(f"dgclique: cannot read input: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"dgclique: {exc}", file=sys.stderr)
        return EXIT_USAGE

    try:
        result = find_maximal_cliques(network, config.delta, config.gamma, prune=config.prune)
    except ValueError as exc:
        print(f"dgclique: {exc}", file=sys.stderr)
        return EXIT_USAGE

    stats = collect_stats(network, config, result)
    status = EXIT_OK
    if config.oracle_validate:
        try:
            expected = oracle_enumerate(network, config.delta, config.gamma)
        except OracleCapError as exc:
            print(f"dgclique: {exc}", file=sys.stderr)
            return EXIT_USAGE
        missing, extra = expected - result.cliques, result.cliques - expected
        stats["oracle"] = {"expected": len(expected), "missing": len(missing), "extra": len(extra)}
        if missing or extra:
            print(f"dgclique: oracle mismatch, {len(missing)} missing and {len(extra)} extra", file=sys.stderr)
            status = EXIT_MISMATCH

    try:
        _write(config.output, format_cliques(network, result, config.format))
        if config.dump_stretch:
            with open(config.dump_stretch, "w", encoding="utf-8") as fh:
                result.store.dump_tsv(fh)
        payload = json.dumps(stats, sort_keys=True)
        if config.stats:
            _write(config.stats, [payload])
        else:
            print(payload, file=sys.stderr)
    except OSError as exc:
        print(f"dgclique: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return status


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        generator = parse_generator(args.generate, args.seed) if args.generate else None
    except UsageError as exc:
        parser.error(str(exc))
    config = RunConfig(
        delta=args.delta,
        gamma=args.gamma,
        input=args.input,
        generate=generator,
        columns=args.columns,
        output=args.output,
        format=args.format,
        prune=args.prune,
        oracle_validate=args.oracle_validate,
        stats=args.stats,
        dump_stretch=args.dump_stretch,
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
