"""
Command line front end.

Value queries:

    xclassnum hurwitz -4                 # 1/2
    xclassnum classnum -23               # 3
    xclassnum weighted-classnum -3       # 1/3
    xclassnum point-count 5 1 1          # 8
    xclassnum census 7

Batch verification over a set of primes:

    xclassnum verify theorem1 --first-n-primes 10000 --workers 8 --format csv --out report.csv
    xclassnum verify lemma1 --max-p 300

`verify` streams one record per prime in ascending order, then writes a summary line to
stderr. Exit status is 0 when every record passes, 1 when any fails and 2 for usage or
configuration errors.

Report formats (bytes are identical for any worker count):

- `csv`: header `p,identity,lhs_twelfths,rhs_twelfths,pass`, one row per record, `lhs` and
    `rhs` as numerators over 12, `pass` as `true`/`false`.
- `json`: an array with one object per record,
    `{"p":5,"identity":"theorem1","lhs":{"num":12,"den":12},"rhs":{"num":12,"den":12},"pass":true}`,
    followed by a summary object `{"records":N,"passed":N,"failures":0}`.
- `table`: human readable, values reduced to lowest terms.
"""
from __future__ import annotations

import argparse
import csv
import dataclasses
import functools
import io
import json
import logging
import sys
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from enum import Enum
from logging import getLogger
from pathlib import Path
from typing import BinaryIO, Iterable, Iterator, List, Optional, TextIO, Tuple, Union

from xloop import xloop

from .errors import ContractError, RunConfigError
from .exactmath import first_primes, primes_below
from .hurwitz import HurwitzCache, hurwitz_class_number
from .identities import CHECKERS, IdentityKind, IdentityReport
from .montgomery import CurveParams, point_count, trace_census
from .qforms import HwConvention, HwOptions, class_number, weighted_class_number
from .settings import classnum_settings

log = getLogger(__name__)

__all__ = ["Command", "OutputFormat", "RunConfig", "run", "emit_csv", "emit_json", "main"]

Records = Union[IdentityReport, Iterable[IdentityReport]]


class Command(Enum):
    hurwitz = 'hurwitz'
    classnum = 'classnum'
    weighted_classnum = 'weighted-classnum'
    point_count = 'point-count'
    census = 'census'
    verify = 'verify'


class OutputFormat(Enum):
    table = 'table'
    csv = 'csv'
    json = 'json'


verify_identities = {
    'theorem1': IdentityKind.theorem1,
    'classical': IdentityKind.classical2p,
    'lemma1': IdentityKind.lemma1_census,
    'reindex': IdentityKind.reindex,
    'vanishing': IdentityKind.vanishing,
    'mass-formula': IdentityKind.mass_formula,
}
""" `verify` sub-command names to the identity they check. """

_query_commands = {
    Command.hurwitz: (('D',), "Kronecker-Hurwitz class number H_w(D)."),
    Command.classnum: (('d',), "Class number h(d) of a negative discriminant."),
    Command.weighted_classnum: (('d',), "Weighted class number h_w(d)."),
    Command.point_count: (('p', 'A', 'B'), "Points on By² = x³ + Ax² + x over F_p."),
    Command.census: (('p',), "Montgomery trace census for a prime p > 3."),
}
""" Integer argument names and help for every command except `verify`. """


@dataclasses.dataclass(frozen=True)
class RunConfig:
    """
    Everything one `run` needs. For `verify`, exactly one of `prime_bound` (primes `p <=
    prime_bound`) or `first_n_primes` selects the primes; the other commands take their
    integers from `arguments`.
    """
    command: Command
    arguments: Tuple[int, ...] = ()
    identity: Optional[IdentityKind] = None
    prime_bound: Optional[int] = None
    first_n_primes: Optional[int] = None
    workers: int = 1
    output_format: OutputFormat = OutputFormat.table
    output_path: Optional[Path] = None
    convention: HwConvention = HwConvention.standard

    def __post_init__(self):
        if self.workers < 1:
            raise RunConfigError(f"Worker count ({self.workers}) must be at least 1.")

        names, _ = _query_commands.get(self.command, ((), None))
        arity = len(names)
        if len(self.arguments) != arity:
            raise RunConfigError(
                f"Command ({self.command.value}) takes {arity} integer argument(s), "
                f"got ({len(self.arguments)})."
            )

        if self.command is not Command.verify:
            return

        if self.identity is None:
            raise RunConfigError("Command (verify) needs an identity to check.")
        if (self.prime_bound is None) == (self.first_n_primes is None):
            raise RunConfigError(
                "Exactly one of prime bound (--max-p) or prime count (--first-n-primes) "
                "must be given."
            )
        for name in ('prime_bound', 'first_n_primes'):
            value = getattr(self, name)
            if value is not None and value < 1:
                raise RunConfigError(f"The ({name}) value ({value}) must be positive.")

    def primes(self) -> List[int]:
        """ Ascending primes selected for `verify` (before applying the identity's minimum). """
        if self.first_n_primes is not None:
            return first_primes(self.first_n_primes)
        return primes_below(self.prime_bound + 1)


def _table_bound(identity: IdentityKind, max_prime: int) -> int:
    """ Largest `|Δ|` the identity evaluates `H_w` at, for priming the class-number table. """
    if identity is IdentityKind.classical2p:
        return 4 * max_prime
    return max_prime


def _init_worker(table_bound: int):
    HurwitzCache.grab().prime(table_bound)


def _check_prime(identity: IdentityKind, convention: HwConvention, p: int) -> IdentityReport:
    with HwOptions(convention=convention):
        return CHECKERS[identity](p)


def evaluate(
        identity: IdentityKind,
        primes: List[int],
        *,
        workers: int = 1,
        convention: HwConvention = HwConvention.standard
) -> Iterator[IdentityReport]:
    """
    Checks `identity` at each prime, yielding reports in the order of `primes` regardless of
    which worker finishes first. Each worker process has its own `HurwitzCache`; a
    single-worker run uses a fresh one that is dropped when the run ends.
    """
    if not primes:
        return

    table_bound = _table_bound(identity, max(primes))
    check = functools.partial(_check_prime, identity, convention)

    if workers == 1:
        # Scoped to this run; the caller's own cache is left untouched.
        run_cache = HurwitzCache()
        run_cache.prime(table_bound)
        for p in primes:
            with run_cache:
                report = check(p)
            yield report
        return

    log.info(f"Checking ({identity.value}) at {len(primes)} primes with {workers} workers.")
    with ProcessPoolExecutor(
            max_workers=workers, initializer=_init_worker, initargs=(table_bound,)
    ) as pool:
        yield from pool.map(check, primes, chunksize=classnum_settings.chunk_size)


def _record_json(report: IdentityReport) -> dict:
    return {
        "p": report.prime,
        "identity": report.identity.value,
        "lhs": {"num": report.lhs.num, "den": report.lhs.den},
        "rhs": {"num": report.rhs.num, "den": report.rhs.den},
        "pass": report.passed,
    }


def emit_csv(records: Records) -> Iterator[bytes]:
    """ CSV lines for `records` (one record or any iterable of them, sorted by prime). """
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator='\n')

    def row(*fields) -> bytes:
        writer.writerow(fields)
        line = buffer.getvalue()
        buffer.seek(0)
        buffer.truncate()
        return line.encode()

    yield row('p', 'identity', 'lhs_twelfths', 'rhs_twelfths', 'pass')
    for report in xloop(records):
        passed = 'true' if report.passed else 'false'
        yield row(report.prime, report.identity.value, report.lhs.num, report.rhs.num, passed)


def emit_json(records: Records) -> Iterator[bytes]:
    """ A JSON array of one compact object per line, the last one being the summary. """
    tally = Counter()
    yield b"[\n"
    for report in xloop(records):
        tally[report.passed] += 1
        yield json.dumps(_record_json(report), separators=(',', ':')).encode() + b",\n"

    summary = {
        "records": tally[True] + tally[False],
        "passed": tally[True],
        "failures": tally[False],
    }
    yield json.dumps(summary, separators=(',', ':')).encode() + b"\n]\n"


def emit_table(records: Records) -> Iterator[bytes]:
    yield f"{'p':>8}  {'identity':<14} {'lhs':>12} {'rhs':>12}  result\n".encode()
    for report in xloop(records):
        result = 'PASS' if report.passed else 'FAIL'
        line = (
            f"{report.prime:>8}  {report.identity.value:<14} "
            f"{str(report.lhs):>12} {str(report.rhs):>12}  {result}\n"
        )
        for mismatch in report.mismatches:
            line += f"{'':>10}{mismatch}\n"
        yield line.encode()


_emitters = {
    OutputFormat.table: emit_table,
    OutputFormat.csv: emit_csv,
    OutputFormat.json: emit_json,
}


def _census_lines(p: int, output_format: OutputFormat) -> Iterator[bytes]:
    census = trace_census(p)
    if output_format is OutputFormat.json:
        counts = {str(t): n for t, n in census.counts.items()}
        yield json.dumps({"p": p, "counts": counts}, separators=(',', ':')).encode() + b"\n"
        return

    if output_format is OutputFormat.csv:
        yield b"t,count\n"
        for t, n in census.counts.items():
            yield f"{t},{n}\n".encode()
        return

    for t, n in census.counts.items():
        yield f"{t:>6} {n:>10}\n".encode()
    yield f"total {census.total:>10}\n".encode()


def _query_lines(config: RunConfig) -> Iterator[bytes]:
    command = config.command
    args = config.arguments
    if command is Command.hurwitz:
        value = hurwitz_class_number(args[0])
    elif command is Command.classnum:
        value = class_number(args[0])
    elif command is Command.weighted_classnum:
        value = weighted_class_number(args[0])
    elif command is Command.point_count:
        value = point_count(CurveParams(*args))
    else:
        yield from _census_lines(args[0], config.output_format)
        return
    yield f"{value}\n".encode()


def run(config: RunConfig, *, out: BinaryIO = None, err: TextIO = None) -> int:
    """
    Executes `config`, writing the report to `out` (default: `config.output_path`, or
    stdout) and the summary line to `err` (default: stderr).

    Returns:
        Process exit status: 0 all-pass, 1 an identity failed, 2 bad input/configuration.
    """
    err = err if err is not None else sys.stderr

    if config.command is not Command.verify:
        try:
            lines = list(_query_lines(config))
        except ContractError as e:
            err.write(f"error: {e}\n")
            return 2
        _write(lines, config, out)
        return 0

    identity = config.identity
    primes = [p for p in config.primes() if p >= identity.min_prime]
    log.info(f"Verifying ({identity.value}) at {len(primes)} primes.")

    tally = Counter()

    def counted(reports: Iterable[IdentityReport]) -> Iterator[IdentityReport]:
        for report in reports:
            tally[report.passed] += 1
            if not report.passed:
                log.warning(f"Identity ({identity.value}) failed at p ({report.prime}): {report}")
            yield report

    reports = evaluate(
        identity, primes, workers=config.workers, convention=config.convention
    )
    try:
        _write(_emitters[config.output_format](counted(reports)), config, out)
    except OSError as e:
        err.write(f"error: could not write report: {e}\n")
        return 2

    passed, failed = tally[True], tally[False]
    err.write(f"{passed + failed} records: {passed} passed, {failed} failed\n")
    return 1 if failed else 0


def _write(chunks: Iterable[bytes], config: RunConfig, out: Optional[BinaryIO]):
    if out is not None:
        for chunk in chunks:
            out.write(chunk)
        return

    if config.output_path is not None:
        with open(config.output_path, 'wb') as stream:
            for chunk in chunks:
                stream.write(chunk)
        return

    stream = sys.stdout.buffer
    for chunk in chunks:
        stream.write(chunk)
    stream.flush()


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='xclassnum',
        description="Hurwitz class numbers, Montgomery trace censuses and identity checks.",
    )
    parser.add_argument('--log-level', default='WARNING', help="Logging level (stderr).")
    commands = parser.add_subparsers(dest='command', required=True)

    for command, (names, help_text) in _query_commands.items():
        sub = commands.add_parser(command.value, help=help_text)
        for name in names:
            sub.add_argument(name, type=int)
        if command is Command.census:
            _add_format(sub)

    verify = commands.add_parser('verify', help="Check an identity over a set of primes.")
    verify.add_argument('identity', choices=list(verify_identities))
    selection = verify.add_mutually_exclusive_group(required=True)
    selection.add_argument('--max-p', type=int, dest='prime_bound', help="Primes p <= N.")
    selection.add_argument('--first-n-primes', type=int, help="The first K primes.")
    verify.add_argument('--workers', type=int, default=None)
    _add_format(verify)
    verify.add_argument('--out', type=Path, default=None)
    verify.add_argument(
        '--convention',
        choices=[c.value for c in HwConvention],
        default=HwConvention.standard.value,
        help="h_w convention for d ≡ 2, 3 (mod 4); anything but `standard` should fail.",
    )
    return parser


def _add_format(sub: argparse.ArgumentParser):
    sub.add_argument('--format', choices=[f.value for f in OutputFormat], default=None)


def _config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    output_format = OutputFormat(
        getattr(args, 'format', None) or classnum_settings.default_format
    )

    if command is not Command.verify:
        names, _ = _query_commands[command]
        return RunConfig(
            command=command,
            arguments=tuple(getattr(args, name) for name in names),
            output_format=output_format,
        )

    workers = args.workers if args.workers is not None else classnum_settings.default_workers
    return RunConfig(
        command=command,
        identity=verify_identities[args.identity],
        prime_bound=args.prime_bound,
        first_n_primes=args.first_n_primes,
        workers=workers,
        output_format=output_format,
        output_path=args.out,
        convention=HwConvention(args.convention),
    )


def main(argv: Optional[List[str]] = None) -> int:
    args = _parser().parse_args(argv)
    logging.basicConfig(
        level=args.log_level.upper(),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
    )

    try:
        config = _config_from_args(args)
    except RunConfigError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    return run(config)


if __name__ == '__main__':
    sys.exit(main())
