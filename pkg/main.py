"""Main entry point for the k-defect toolkit."""

import argparse
import sys
from pathlib import Path
from typing import List, Optional, Sequence

# Add project root to path
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from core.config import ENGINE_NAMES, get_config  # noqa: E402
from core.exceptions import KDefectError, ValidationError  # noqa: E402
from core.logger import get_logger, setup_logging  # noqa: E402

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_COUNTEREXAMPLES = 2


class ToolkitArgumentParser(argparse.ArgumentParser):
    """argparse with usage errors mapped to exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_ERROR)


def setup_environment(log_level: Optional[str] = None):
    """Set up logging and configuration."""
    config = get_config()
    setup_logging(
        log_level=log_level or config.log_level,
        log_file=config.log_file,
        log_max_bytes=config.log_max_bytes,
        log_backup_count=config.log_backup_count,
        human_readable=config.human_readable_logs,
    )
    logger = get_logger(__name__)
    logger.debug("k-defect toolkit", version="0.1.0")
    return config, logger


def load_input(args, config):
    """The single input graph from --file or a single-graph --family."""
    from families import corpus
    from graphs import load_graph

    if args.file:
        return load_graph(args.file, strict=args.strict or config.output.strict_input)
    items = corpus([args.family], args.seed)
    if len(items) != 1:
        raise ValidationError(
            f"family {args.family!r} yields {len(items)} graphs; these commands take one graph"
        )
    return items[0][1]


def make_cache(args):
    from engine import RecursionCache

    return RecursionCache(False if args.no_cache else None)


def _require_k(args) -> int:
    if args.k is None:
        raise ValidationError(f"--k is required for '{args.command}'")
    return args.k


def cmd_poly(args, config, logger) -> int:
    """phi_k(G; lambda), or its value at --lam."""
    from engine import defect_poly_flats, defect_vector
    from reporting import render_number, render_poly

    graph = load_input(args, config)
    k = _require_k(args)
    engine = args.engine or "dc"
    if engine == "flats":
        poly = defect_poly_flats(graph, k, make_cache(args))
    else:
        if not 0 <= k <= graph.m:
            raise ValidationError(f"k out of range: {k} not in 0..{graph.m}")
        poly = defect_vector(graph, engine, make_cache(args))[k]
    logger.info("Polynomial computed", k=k, engine=engine, degree=poly.degree)

    if args.lam is not None:
        print(render_number(poly.eval(args.lam), k, args.format or config.output.default_format))
    else:
        print(render_poly(poly, k, args.format or config.output.default_format))
    return EXIT_OK


def cmd_number(args, config, logger) -> int:
    """phi_k(G)."""
    from engine import defect_number, defect_number_by_flats, oracle_defect_number
    from reporting import render_number

    graph = load_input(args, config)
    k = _require_k(args)
    engine = args.engine or "dc"
    if engine == "flats":
        number = defect_number_by_flats(graph, k, make_cache(args))
    elif engine == "oracle":
        number = oracle_defect_number(graph, k)
    else:
        number = defect_number(graph, k, make_cache(args), engine)
    logger.info("Defect number computed", k=k, engine=engine, number=number)
    print(render_number(number, k, args.format or config.output.default_format))
    return EXIT_OK


def cmd_table(args, config, logger) -> int:
    from engine import defect_table
    from reporting import render_table

    graph = load_input(args, config)
    engines = [args.engine] if args.engine else None
    table = defect_table(graph, engines, make_cache(args))
    print(render_table(table, args.format or config.output.default_format))
    return EXIT_OK


def cmd_flats(args, config, logger) -> int:
    from engine import flats_of_size
    from reporting import render_flats

    graph = load_input(args, config)
    flats = flats_of_size(graph, _require_k(args))
    print(render_flats(flats, args.format or config.output.default_format))
    return EXIT_OK


def cmd_witness(args, config, logger) -> int:
    from engine import witness_coloring
    from reporting import render_witness

    graph = load_input(args, config)
    k = _require_k(args)
    coloring = witness_coloring(graph, k, make_cache(args))
    print(render_witness(coloring, k, args.format or config.output.default_format))
    return EXIT_OK


def cmd_family(args, config, logger) -> int:
    """Print every graph of a family, one per block (edge list) or line (graph6)."""
    from families import corpus
    from graphs import to_edge_list, to_graph6

    if not args.family:
        raise ValidationError("'family' needs --family")
    fmt = args.format or "edgelist"
    if fmt not in ("edgelist", "graph6"):
        raise ValidationError(f"format {fmt!r} not available for family; use edgelist, graph6")
    graphs = [graph for _, graph in corpus([args.family], args.seed)]
    if fmt == "graph6":
        print("\n".join(to_graph6(g) for g in graphs))
    else:
        print("\n".join(to_edge_list(g) for g in graphs), end="")
    return EXIT_OK


def cmd_verify(args, config, logger) -> int:
    from reporting import render_reports
    from verifier import claim_counts, run_claims

    options = dict(
        corpus=args.corpus or None,
        workers=args.workers,
        stop_at_first=True if args.stop_at_first else None,
        show_progress=True if args.progress else None,
        seed=args.seed,
    )
    if args.no_cache:
        options["cache"] = make_cache(args)
    reports = run_claims(args.claim or None, **options)
    print(render_reports(reports, args.format or config.output.default_format))
    counts = claim_counts(reports)
    logger.info("Verification finished", **counts)
    return EXIT_COUNTEREXAMPLES if counts["counterexamples"] else EXIT_OK


def cmd_bench(args, config, logger) -> int:
    from reporting import render_bench, run_bench

    families = args.corpus or ([args.family] if args.family else [])
    if not families:
        raise ValidationError("'bench' needs --family or --corpus")
    engines = args.engines or ["dc", "subset"]
    rows = run_bench(families, engines, False if args.no_cache else None, args.seed)
    print(render_bench(rows), end="")
    return EXIT_OK


def cmd_claims(args, config, logger) -> int:
    from reporting import render_claims
    from verifier import list_claims

    print(render_claims(list_claims(), args.format or "text"))
    return EXIT_OK


COMMANDS = {
    "poly": cmd_poly,
    "number": cmd_number,
    "table": cmd_table,
    "flats": cmd_flats,
    "witness": cmd_witness,
    "family": cmd_family,
    "verify": cmd_verify,
    "bench": cmd_bench,
    "claims": cmd_claims,
}


def _add_common(sub: argparse.ArgumentParser, with_input: bool = True) -> None:
    if with_input:
        source = sub.add_mutually_exclusive_group(required=True)
        source.add_argument("--file", help="Graph file (edge list, or graph6 with .g6 suffix)")
        source.add_argument("--family", help="Family instance, e.g. wheel:5 or kbipartite:3,4")
        sub.add_argument("--strict", action="store_true", help="Reject loops and parallel edges")
    sub.add_argument("--format", help="Output format")
    sub.add_argument("--no-cache", action="store_true", help="Disable memoization")
    sub.add_argument("--seed", type=int, help="Seed for randomtree families")
    sub.add_argument("--log-level", help="Override the configured log level")


def build_parser() -> argparse.ArgumentParser:
    parser = ToolkitArgumentParser(prog="kdefect", description="k-defect polynomials and numbers")
    subparsers = parser.add_subparsers(dest="command", parser_class=ToolkitArgumentParser)

    for name, help_text in (
        ("poly", "k-defect polynomial"),
        ("number", "k-defect number"),
        ("table", "Full defect table"),
        ("flats", "Flats of size k"),
        ("witness", "Coloring certifying the k-defect number"),
    ):
        sub = subparsers.add_parser(name, help=help_text)
        _add_common(sub)
        sub.add_argument("--k", type=int, help="Number of bad edges")
        sub.add_argument("--engine", choices=ENGINE_NAMES, help="Engine (default dc)")
        if name == "poly":
            sub.add_argument("--lam", type=int, help="Evaluate at this number of colors")

    family = subparsers.add_parser("family", help="Print the graphs of a family")
    family.add_argument("--family", required=True, help="Family, ranges allowed: wheel:4..8")
    _add_common(family, with_input=False)

    verify = subparsers.add_parser("verify", help="Check claims over corpora")
    verify.add_argument("--claim", action="append", help="Claim id (repeatable; default all)")
    verify.add_argument("--corpus", action="append", help="Family replacing the default corpus")
    verify.add_argument("--workers", type=int, help="Worker threads")
    verify.add_argument("--stop-at-first", action="store_true", help="Stop after a failing class")
    verify.add_argument("--progress", action="store_true", help="Show a progress bar")
    _add_common(verify, with_input=False)

    bench = subparsers.add_parser("bench", help="Time engines over a corpus")
    bench.add_argument("--family", help="Family to time")
    bench.add_argument("--corpus", action="append", help="Additional families")
    bench.add_argument("--engine", dest="engines", action="append", choices=ENGINE_NAMES)
    _add_common(bench, with_input=False)

    claims = subparsers.add_parser("claims", help="List the claim catalog")
    claims.add_argument("--format", help="text or json")
    claims.add_argument("--log-level", help="Override the configured log level")

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse arguments, run one command, return the exit code."""
    parser = build_parser()
    args = parser.parse_args(list(argv) if argv is not None else None)
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_ERROR

    logger = None
    try:
        config, logger = setup_environment(args.log_level)
        return COMMANDS[args.command](args, config, logger)
    except KDefectError as e:
        if logger is not None:
            logger.error("Command failed", command=args.command, error=str(e))
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("\nInterrupted by user", file=sys.stderr)
        return EXIT_ERROR
    except Exception as e:
        if logger is not None:
            logger.exception("Unexpected error", error=str(e))
        print(f"Unexpected error: {e}", file=sys.stderr)
        return EXIT_ERROR


def main(argv: Optional[List[str]] = None):
    """Run the main application entry point."""
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
