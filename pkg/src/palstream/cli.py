"""Command-line front end: stream analysis, benchmarks, self-verification.

Exit codes: 0 success, 1 input/configuration error, 2 self-test failure.
"""

from __future__ import annotations

import io
import json
import sys
from typing import Iterator

import click

from . import selftest as selftest_module
from .bench import GENERATORS, BenchConfig, BenchMeasurement, run_config
from .detector import PalindromeDetector, StepReport
from .ukkonen import ChildStorageMode


@click.group()
@click.version_option(package_name="palstream")
def main() -> None:
    """Online detection of distinct palindromes in a symbol stream."""


# -- run ----------------------------------------------------------------------

_TABLE_HEADER = (f"{'n':>8} {'max_pal':>8} {'min_unique_suff':>16} "
                 f"{'new':>14} {'closure_len':>12} {'distinct_count':>15}")


def _span_text(report: StepReport) -> str | None:
    if report.new_palindrome is None:
        return None
    start, end = report.new_palindrome
    return f"{start}-{end}"


def _table_row(report: StepReport) -> str:
    new = _span_text(report) or "-"
    return (f"{report.n:>8} {report.max_pal:>8} {report.min_unique_suff:>16} "
            f"{new:>14} {report.closure_len:>12} {report.distinct_count:>15}")


def _json_record(report: StepReport) -> dict:
    return {
        "n": report.n,
        "max_pal": report.max_pal,
        "min_unique_suff": report.min_unique_suff,
        "new": _span_text(report),
        "closure_len": report.closure_len,
        "distinct_count": report.distinct_count,
    }


def _byte_symbols(stream) -> Iterator[int]:
    while True:
        chunk = stream.read(65536)
        if not chunk:
            return
        yield from chunk


def _token_symbols(stream) -> Iterator[str]:
    text = io.TextIOWrapper(stream, encoding="utf-8")
    tail = ""
    while True:
        chunk = text.read(65536)
        if not chunk:
            if tail:
                yield tail
            return
        chunk = tail + chunk
        parts = chunk.split()
        tail = parts.pop() if parts and not chunk[-1].isspace() else ""
        yield from parts


@main.command("run")
@click.argument("file", required=False, type=str)
@click.option("--format", "fmt", type=click.Choice(["table", "jsonl"]),
              default="table", show_default=True,
              help="Per-symbol output format.")
@click.option("--tokens", is_flag=True,
              help="Read whitespace-separated tokens instead of raw bytes.")
def run_command(file: str | None, fmt: str, tokens: bool) -> None:
    """Stream FILE (or stdin) through the detector, one record per symbol.

    Bytes are the symbols by default; --tokens switches to whitespace-
    separated tokens, which exercises large alphabets.  Output is flushed
    per record, so prefixes of the input always yield prefixes of the
    output.
    """
    if file is None or file == "-":
        stream = sys.stdin.buffer
        close_stream = False
    else:
        try:
            stream = open(file, "rb")
        except OSError as exc:
            click.echo(f"error: cannot read {file!r}: {exc}", err=True)
            sys.exit(1)
        close_stream = True

    out = sys.stdout
    detector = PalindromeDetector()
    header_written = False
    try:
        symbols = _token_symbols(stream) if tokens else _byte_symbols(stream)
        for report in detector.feed(symbols):
            if fmt == "table":
                if not header_written:
                    out.write(_TABLE_HEADER + "\n")
                    header_written = True
                out.write(_table_row(report) + "\n")
            else:
                out.write(json.dumps(_json_record(report)) + "\n")
            out.flush()
    except (OSError, UnicodeDecodeError) as exc:
        click.echo(f"error: failed reading input: {exc}", err=True)
        sys.exit(1)
    finally:
        if close_stream:
            stream.close()


# -- bench ----------------------------------------------------------------------

def _bench_table(results: list[BenchMeasurement]) -> str:
    header = (f"{'gen':>13} {'sigma':>6} {'n':>9} {'mode':>9} {'best_s':>9} "
              f"{'sym/s':>12} {'loop/4n':>12} {'nodes':>9} {'probes':>12}")
    lines = [header]
    for m in results:
        lines.append(
            f"{m.generator:>13} {m.sigma:>6} {m.n:>9} {m.mode:>9} "
            f"{m.wall_best:>9.4f} {m.symbols_per_sec:>12.0f} "
            f"{m.manacher_loop_iters:>6}/{m.manacher_loop_bound:<5} "
            f"{m.nodes:>9} {m.child_probes:>12}")
    return "\n".join(lines)


@main.command("bench")
@click.option("--gen", "generator", type=click.Choice(list(GENERATORS)),
              required=True, help="Input generator.")
@click.option("--sigma", type=int, default=2, show_default=True,
              help="Alphabet size for generated inputs.")
@click.option("--sizes", default="1000", show_default=True,
              help="Comma-separated input lengths, strictly increasing.")
@click.option("--mode", type=click.Choice(["ordered", "unordered"]),
              default="ordered", show_default=True,
              help="Child-storage mode of the suffix tree.")
@click.option("--reps", type=int, default=1, show_default=True,
              help="Repetitions per size (fresh seed each).")
@click.option("--seed", type=int, default=0, show_default=True,
              help="Base seed; identical seeds reproduce identical inputs.")
def bench_command(generator: str, sigma: int, sizes: str, mode: str,
                  reps: int, seed: int) -> None:
    """Measure wall time and structural counters over generated inputs.

    Emits one JSON object per configuration on stdout and a human-readable
    table on stderr.  Loop totals are checked against the 4n bound on every
    run.
    """
    try:
        size_list = tuple(int(part) for part in sizes.split(",") if part.strip())
    except ValueError:
        click.echo("error: --sizes must be comma-separated integers", err=True)
        sys.exit(1)
    cfg = BenchConfig(generator=generator, sigma=sigma, sizes=size_list,
                      mode=ChildStorageMode(mode), repetitions=reps, seed=seed)
    try:
        results = run_config(cfg)
    except (ValueError, RuntimeError) as exc:
        click.echo(f"error: {exc}", err=True)
        sys.exit(1)
    for measurement in results:
        click.echo(json.dumps(measurement.as_dict()))
    click.echo(_bench_table(results), err=True)


# -- selftest ---------------------------------------------------------------------

@main.command("selftest")
def selftest_command() -> None:
    """Check the engine against its reference trace and the oracles."""
    if not selftest_module.run(echo=click.echo):
        sys.exit(2)


if __name__ == "__main__":
    main()
