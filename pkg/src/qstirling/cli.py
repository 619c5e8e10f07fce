"""Command-line interface.

Subcommands: spectrum | cycle | sweep | meanfield | toy | converge-cutoff.
Every run is driven by a TOML configuration (--config PATH or a bundled
--preset NAME); --output/--format/--workers override the corresponding
config keys, and --plot additionally renders a figure next to the data file.

Exit codes: 0 success, 1 configuration error, 2 numerical failure, 3 I/O
error.
"""

from __future__ import annotations

import argparse
import sys

from .config import (
    COMMANDS,
    ConfigError,
    RunConfig,
    list_presets,
    load_config,
    load_preset,
    validate_for_command,
)
from .convergence import CutoffConvergenceError
from .eigensolve import EigensolveError
from .output import (
    cycle_records_to_csv,
    cycle_records_to_json,
    meanfield_to_csv,
    meanfield_to_json,
    spectrum_to_csv,
    spectrum_to_json,
    write_text,
)
from .sweeps import (
    run_converge_cutoff,
    run_cycle_command,
    run_meanfield,
    run_spectrum,
    run_sweep,
    run_toy,
)

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_NUMERIC = 2
EXIT_IO = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; here that is a config error.
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="qstirling",
        description="Stirling-cycle quantum heat engines: spectra, cycles, sweeps.",
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="|".join(COMMANDS))
    for name in COMMANDS:
        command = sub.add_parser(name, help=f"run the {name} command")
        source = command.add_mutually_exclusive_group(required=True)
        source.add_argument("--config", metavar="PATH", help="TOML configuration file")
        source.add_argument(
            "--preset",
            metavar="NAME",
            help=f"bundled configuration ({', '.join(list_presets())})",
        )
        command.add_argument("--output", metavar="PATH", help="data file; '-' for stdout")
        command.add_argument("--format", choices=("csv", "json"), help="output format")
        command.add_argument("--workers", type=int, help="parallel workers for sweeps")
        command.add_argument("--plot", metavar="PATH", help="also render a figure to PATH")
    return parser


def _load(args: argparse.Namespace) -> RunConfig:
    if args.preset:
        config = load_preset(args.preset)
    else:
        config = load_config(args.config)
    validate_for_command(config, args.command)
    return config


def _run(args: argparse.Namespace) -> int:
    config = _load(args)
    output = args.output or config.output or "-"
    fmt = args.format or config.format or "csv"
    workers = args.workers or config.workers or 1
    if workers < 1:
        raise ConfigError(f"workers must be positive, got {workers}")

    if args.command == "spectrum":
        table = run_spectrum(config)
        write_text(output, spectrum_to_csv(table) if fmt == "csv" else spectrum_to_json(table))
        if args.plot:
            from .plots import plot_spectrum

            plot_spectrum(table, args.plot)
        return EXIT_OK

    if args.command == "meanfield":
        rows = run_meanfield(config)
        write_text(output, meanfield_to_csv(rows) if fmt == "csv" else meanfield_to_json(rows))
        if args.plot:
            from .plots import plot_meanfield

            plot_meanfield(rows, args.plot)
        return EXIT_OK

    if args.command == "sweep":
        records = run_sweep(config, workers=workers)
    elif args.command == "cycle":
        records = run_cycle_command(config)
    elif args.command == "toy":
        records = run_toy(config)
    else:  # converge-cutoff
        records = run_converge_cutoff(config)

    failures = [r for r in records if r.status == "error"]
    if failures:
        print(f"warning: {len(failures)} of {len(records)} points failed", file=sys.stderr)
    write_text(output, cycle_records_to_csv(records) if fmt == "csv" else cycle_records_to_json(records))
    if args.plot:
        from .plots import plot_efficiency

        plot_efficiency(records, args.plot)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _run(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ArithmeticError, EigensolveError, CutoffConvergenceError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        # Parameter-domain errors raised by the library trace back to the config.
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
