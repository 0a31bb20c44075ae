"""Batch front-end: parse problems, run selected tests, emit verdicts.

Input is line oriented:

    sym: 3256147, 2143657, 4632175
    asym: 4123, 1342 -> 4312

Permutations are comma-separated; each word is either a contiguous digit
string (rank <= 9) or space-separated values.  Blank lines and ``#``
comments are skipped.  Output is text or JSON lines, one record per
problem, in input order.  Exit codes: 0 clean, 1 internal error, 2 any
input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, TextIO

from . import permcore, refsuite, rivals, schubpoly, vanishing
from .schubitope import FarkasCertificate, InfeasibleSubset
from .vanishing import Outcome, SchubertProblem, VanishingVerdict

KNOWN_TESTS = (
    "schubitope",
    "flexible",
    "bruhat",
    "descent_cycling",
    "root_game",
    "oracle",
)

DEFAULT_TESTS = ("schubitope",)


@dataclass
class Options:
    tests: tuple[str, ...] = DEFAULT_TESTS
    oracle_max_n: int = 6
    force_oracle: bool = False
    flexible_samples: int = 0
    seed: int = 0
    compress: bool = False
    stable: bool = False
    fmt: str = "text"
    jobs: int = 1


@dataclass
class ResultRecord:
    id: str
    n: int
    mode: str
    verdicts: dict[str, str] = field(default_factory=dict)
    certificates: dict[str, dict] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)
    oracle: Optional[int] = None
    elapsed_ms: int = 0

    def to_json_dict(self) -> dict:
        out: dict = {
            "id": self.id,
            "n": self.n,
            "mode": self.mode,
            "verdicts": dict(sorted(self.verdicts.items())),
            "elapsed_ms": self.elapsed_ms,
        }
        if self.certificates:
            out["certificates"] = dict(sorted(self.certificates.items()))
        if self.details:
            out["details"] = dict(sorted(self.details.items()))
        if self.oracle is not None:
            out["oracle"] = self.oracle
        return out

    @classmethod
    def from_json_dict(cls, data: dict) -> "ResultRecord":
        return cls(
            id=data["id"],
            n=data["n"],
            mode=data["mode"],
            verdicts=dict(data.get("verdicts", {})),
            certificates=dict(data.get("certificates", {})),
            details=dict(data.get("details", {})),
            oracle=data.get("oracle"),
            elapsed_ms=data.get("elapsed_ms", 0),
        )


@dataclass
class ErrorRecord:
    id: str
    line: int
    error: str

    def to_json_dict(self) -> dict:
        return {"id": self.id, "line": self.line, "error": self.error}


def parse_problem_line(line: str) -> SchubertProblem:
    """Parse one ``sym:`` or ``asym:`` line into a problem."""
    text = line.strip()
    if ":" not in text:
        raise ValueError("expected 'sym:' or 'asym:' prefix")
    head, _, body = text.partition(":")
    head = head.strip().lower()
    if head == "sym":
        factors = _parse_perm_list(body)
        if len(factors) < 2:
            raise ValueError("a symmetric problem needs at least two factors")
        return SchubertProblem(tuple(factors))
    if head == "asym":
        if "->" not in body:
            raise ValueError("an asymmetric problem needs '-> target'")
        left, _, right = body.partition("->")
        factors = _parse_perm_list(left)
        if not factors:
            raise ValueError("an asymmetric problem needs at least one factor")
        target = permcore.parse_permutation(right)
        return SchubertProblem(tuple(factors), target)
    raise ValueError(f"unknown mode {head!r}")


def _parse_perm_list(text: str) -> list[permcore.Perm]:
    parts = [p for p in (piece.strip() for piece in text.split(",")) if p]
    return [permcore.parse_permutation(p) for p in parts]


def _serialize_certificate(cert) -> dict:
    if isinstance(cert, InfeasibleSubset):
        return {
            "kind": "subset",
            "rows": list(cert.rows),
            "lhs": cert.lhs,
            "rhs": cert.rhs,
        }
    if isinstance(cert, FarkasCertificate):
        return {
            "kind": "farkas",
            "columns": list(cert.columns),
            "content": [str(x) for x in cert.content],
            "prefix": [[s, j, str(mult)] for (s, j), mult in cert.prefix],
        }
    raise TypeError(f"cannot serialize certificate {cert!r}")


def _record_verdict(record: ResultRecord, key: str, verdict: VanishingVerdict) -> None:
    record.verdicts[key] = verdict.outcome.value
    if verdict.certificate is not None:
        record.certificates[key] = _serialize_certificate(verdict.certificate)
    if verdict.detail:
        record.details[key] = verdict.detail


def run_problem(
    problem: SchubertProblem, record_id: str, options: Options, index: int
) -> ResultRecord:
    start = time.perf_counter()
    embedded = problem.embedded()
    n = len(embedded.factors[0])
    record = ResultRecord(id=record_id, n=n, mode=problem.mode)

    if "schubitope" in options.tests:
        if problem.mode == "symmetric":
            verdict = vanishing.symmetric_test(
                embedded.factors, compress=options.compress
            )
            _record_verdict(record, "schubitope_symmetric", verdict)
        else:
            verdict = vanishing.asymmetric_test(
                embedded.factors, embedded.target, compress=options.compress
            )
            _record_verdict(record, "schubitope_asymmetric", verdict)

    if (
        "flexible" in options.tests
        and problem.mode == "asymmetric"
        and options.flexible_samples > 0
    ):
        seed = options.seed * 1_000_003 + index
        verdict = vanishing.flexible_test_sampled(
            embedded.factors,
            embedded.target,
            samples=options.flexible_samples,
            seed=seed,
            compress=options.compress,
        )
        _record_verdict(record, "flexible", verdict)

    symmetrized = embedded.symmetrized()
    if "bruhat" in options.tests:
        _record_verdict(
            record, "bruhat", rivals.bruhat_vanishing_test(symmetrized.factors)
        )
    if "descent_cycling" in options.tests:
        if len(symmetrized.factors) == 3:
            try:
                triple = rivals.Triple(*symmetrized.factors)
                _record_verdict(record, "descent_cycling", rivals.dc_test(triple))
            except ValueError:
                record.verdicts["descent_cycling"] = Outcome.DEGREE_MISMATCH.value
        else:
            record.details["descent_cycling"] = "only defined for three factors"
    if "root_game" in options.tests:
        _record_verdict(
            record, "root_game", rivals.root_game_test(symmetrized.factors)
        )

    if "oracle" in options.tests and (n <= options.oracle_max_n or options.force_oracle):
        if problem.mode == "symmetric":
            record.oracle = schubpoly.intersection_number(embedded.factors)
        else:
            record.oracle = schubpoly.asymmetric_coefficient(
                embedded.factors, embedded.target
            )

    elapsed = time.perf_counter() - start
    record.elapsed_ms = 0 if options.stable else int(elapsed * 1000)
    return record


def run_batch(
    lines: Sequence[str], options: Options
) -> tuple[list[object], bool]:
    """Parse and evaluate every input line; order preserving.

    Returns the records (results interleaved with error records at their
    input positions) and whether any line failed to parse.
    """
    jobs: list[tuple[int, str, SchubertProblem]] = []
    records: dict[int, object] = {}
    had_error = False
    problem_index = 0
    for lineno, raw in enumerate(lines, start=1):
        text = raw.strip()
        if not text or text.startswith("#"):
            continue
        record_id = f"L{lineno}"
        try:
            problem = parse_problem_line(text)
        except ValueError as exc:
            had_error = True
            records[lineno] = ErrorRecord(record_id, lineno, str(exc))
            continue
        jobs.append((lineno, record_id, problem))
        problem_index += 1

    def evaluate(job: tuple[int, str, SchubertProblem], index: int) -> None:
        lineno, record_id, problem = job
        records[lineno] = run_problem(problem, record_id, options, index)

    if options.jobs > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=options.jobs) as pool:
            list(pool.map(lambda pair: evaluate(pair[1], pair[0]), enumerate(jobs)))
    else:
        for index, job in enumerate(jobs):
            evaluate(job, index)

    ordered = [records[k] for k in sorted(records)]
    return ordered, had_error


def _emit_text(record: object, out: TextIO) -> None:
    if isinstance(record, ErrorRecord):
        out.write(f"{record.id} ERROR line {record.line}: {record.error}\n\n")
        return
    assert isinstance(record, ResultRecord)
    out.write(f"{record.id} mode={record.mode} n={record.n}\n")
    for key in sorted(record.verdicts):
        out.write(f"  {key}: {record.verdicts[key]}\n")
        cert = record.certificates.get(key)
        if cert is not None:
            if cert["kind"] == "subset":
                rows = ",".join(str(r) for r in cert["rows"])
                out.write(
                    f"    certificate: rows {{{rows}}} give "
                    f"{cert['lhs']} > {cert['rhs']}\n"
                )
            else:
                out.write("    certificate: LP multipliers "
                          f"(content {' '.join(cert['content'])})\n")
        detail = record.details.get(key)
        if detail:
            out.write(f"    note: {detail}\n")
    if record.oracle is not None:
        out.write(f"  oracle: {record.oracle}\n")
    out.write(f"  elapsed_ms: {record.elapsed_ms}\n\n")


def emit_records(records: Sequence[object], options: Options, out: TextIO) -> None:
    if options.fmt == "jsonlines":
        for record in records:
            out.write(json.dumps(record.to_json_dict(), sort_keys=True))
            out.write("\n")
    else:
        for record in records:
            _emit_text(record, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schubvanish",
        description=(
            "Decide vanishing of Schubert intersection numbers with exact, "
            "certificate-producing tests."
        ),
    )
    parser.add_argument(
        "input",
        nargs="?",
        default="-",
        help="input file of problem lines; '-' or absent reads stdin",
    )
    parser.add_argument(
        "--tests",
        default=",".join(DEFAULT_TESTS),
        help=f"comma list from {{{','.join(KNOWN_TESTS)}}}",
    )
    parser.add_argument("--oracle-max-n", type=int, default=6)
    parser.add_argument(
        "--force-oracle",
        action="store_true",
        help="run the brute-force oracle even above --oracle-max-n "
        "(factorial blowup; expect minutes beyond rank 7)",
    )
    parser.add_argument("--flexible-samples", type=int, default=0)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument(
        "--compress",
        action="store_true",
        help="drop all-empty diagram columns before the LP (same decisions)",
    )
    parser.add_argument(
        "--stable",
        action="store_true",
        help="zero the timing fields so output is byte-reproducible",
    )
    parser.add_argument("--format", dest="fmt", choices=("text", "jsonlines"), default="text")
    parser.add_argument(
        "--jobs",
        type=int,
        default=max(1, os.cpu_count() or 1),
        help="worker pool size (default: available parallelism)",
    )
    parser.add_argument(
        "--selfcheck",
        action="store_true",
        help="run the pinned reference problems and report pass/fail",
    )
    return parser


def options_from_args(args: argparse.Namespace) -> Options:
    tests = tuple(t for t in (s.strip() for s in args.tests.split(",")) if t)
    unknown = [t for t in tests if t not in KNOWN_TESTS]
    if unknown:
        raise ValueError(f"unknown tests: {', '.join(unknown)}")
    return Options(
        tests=tests,
        oracle_max_n=args.oracle_max_n,
        force_oracle=args.force_oracle,
        flexible_samples=args.flexible_samples,
        seed=args.seed,
        compress=args.compress,
        stable=args.stable,
        fmt=args.fmt,
        jobs=max(1, args.jobs),
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.selfcheck:
            return 0 if refsuite.run_reference_report(sys.stdout) else 1
        options = options_from_args(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.input == "-":
            lines = sys.stdin.read().splitlines()
        else:
            with open(args.input, encoding="utf-8") as handle:
                lines = handle.read().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        records, had_error = run_batch(lines, options)
        emit_records(records, options, sys.stdout)
    except Exception as exc:  # internal failure, not an input problem
        print(f"internal error: {exc}", file=sys.stderr)
        return 1
    return 2 if had_error else 0


if __name__ == "__main__":
    sys.exit(main())
