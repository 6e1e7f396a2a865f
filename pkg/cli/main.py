"""rackit command line.

Exit codes: 0 when the command completed (any verdict), 2 on a defect,
3 on input, budget or I/O errors.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, NoReturn, Optional, Sequence

from rackit.braided.braiding import check_braid_equation
from rackit.braided.cocycle import constant_cocycle
from rackit.braided.types import RootOfUnity
from rackit.cli.examples import EXAMPLES, run_examples
from rackit.cli.report import Report
from rackit.cli.sweep import Sweep, parse_degrees
from rackit.config.env import EnvKeys, get_env, load_env
from rackit.config.run import RunConfig, load_run_config
from rackit.criteria.classify import classify_gl_class, classify_sym_class
from rackit.criteria.codec import parse_group_spec
from rackit.criteria.types import Certificate
from rackit.criteria.verify import verify_certificate
from rackit.errors import BudgetExceeded, DefectError, InputError
from rackit.log.logger import setup_logging
from rackit.log.paths import PathManager
from rackit.matgrp.types import PrimeFieldMatrix
from rackit.otype.symmetric import octa_refutation_search
from rackit.perm.ops import format_permutation
from rackit.rack.checks import check_rack
from rackit.rack.constructions import parse_rack_name
from rackit.rack.types import RackTable

logger = logging.getLogger("rackit.cli")

EXIT_OK = 0
EXIT_DEFECT = 2
EXIT_INPUT = 3


class _Parser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the input-error code."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _add_common_flags(parser: argparse.ArgumentParser, suppress: bool = False) -> None:
    """
    Flags accepted before or after the command name.

    On subcommands the defaults are suppressed so that a flag given before
    the command is not reset by the subparser.
    """

    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--config", type=Path, default=default(None), help="key=value run config file")
    parser.add_argument("--json", action="store_true", default=default(False), help="print the report as JSON")
    parser.add_argument("--output-dir", type=Path, default=default(None),
                        help="write logs and reports under this directory")
    parser.add_argument("--log-level", default=default(None), help="console log level (default WARNING)")
    parser.add_argument("--workers", type=int, default=default(None), help="sweep worker processes")
    parser.add_argument("--search-budget", type=int, default=default(None), help="pairs for the generic D_3 search")
    parser.add_argument("--word-depth", type=int, default=default(None), help="word length for character evaluation")
    parser.add_argument("--cache", type=Path, default=default(None), help="JSON-lines result cache")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="rackit",
        description="Detect D_p, D_p^(2), 𝔒 and 𝔒^(2) subracks in conjugacy classes and emit certificates.",
    )
    _add_common_flags(parser)
    common = _Parser(add_help=False)
    _add_common_flags(common, suppress=True)

    sub = parser.add_subparsers(dest="command", required=True)

    rack = sub.add_parser("rack", parents=[common], help="inspect a named rack or a rack file")
    rack.add_argument("name", help="octahedral, Xn:<odd n>, Dn:<n>, trivial:<n>, square:<name> or file:<path>")
    rack.add_argument("--check", choices=["braid"], action="append", default=[], help="extra checks")

    classify = sub.add_parser("classify", parents=[common], help="classify one conjugacy class")
    classify.add_argument("--group", required=True, help="sym:<m> or gl:<n>:<p>")
    classify.add_argument("--class", dest="class_spec", required=True,
                          help="cycle type such as 3,2,1 (sym); eigenvalues such as 1,6,2,4 "
                               "or file:<path> holding a diagonal matrix (gl)")
    classify.add_argument("--h", type=int, default=None, help="determinant twist (gl)")
    classify.add_argument("--generator", type=int, default=None, help="generator of GF(p)^× (gl)")

    sweep = sub.add_parser("sweep", parents=[common], help="classify every class of S_m for a range of m")
    sweep.add_argument("--degrees", required=True, help="a..b with 2 <= a <= b <= 14")

    examples = sub.add_parser("examples", parents=[common], help="replay the worked examples")
    examples.add_argument("tag", nargs="?", default="all", choices=["all", *EXAMPLES])

    refute = sub.add_parser("refute", parents=[common],
                            help="bounded search for octahedral families through the N-cycle")
    refute.add_argument("--n", type=int, required=True, help="N = 2^k, k >= 3")
    refute.add_argument("--budget", type=int, default=None, help="maximum candidates scanned")

    verify = sub.add_parser("verify", parents=[common],
                            help="re-verify certificates from a report, certificate or cache file")
    verify.add_argument("path", type=Path)

    return parser


# === Commands ===

def load_rack(name: str) -> RackTable:
    """
    Raises:
        InputError: On an unknown name, a missing file or malformed JSON.
    """
    if name.startswith("file:"):
        path = Path(name[len("file:"):])
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except OSError as e:
            raise InputError(f"Cannot read rack file {path}: {e}") from None
        except json.JSONDecodeError as e:
            raise InputError(f"Malformed rack file {path}: {e}") from None
        if not isinstance(data, dict):
            raise InputError(f"Rack file {path} must hold a JSON object")
        return RackTable.from_json(data, name=path.stem)
    return parse_rack_name(name)


def cmd_rack(name: str, checks: Sequence[str]) -> Report:
    report = Report("rack", {"name": name, "checks": list(checks)})
    with report.phase("build"):
        rack = load_rack(name)
    with report.phase("axioms"):
        diagnosis = check_rack(rack)
    report.results["size"] = rack.size
    report.results["table"] = rack.to_json()
    report.results["axioms"] = {"ok": diagnosis.ok, "reason": diagnosis.reason, "checked": diagnosis.checked}
    if "braid" in checks:
        if not diagnosis.ok:
            raise InputError(f"{name} is not a rack: {diagnosis.reason}")
        with report.phase("braid"):
            braid = check_braid_equation(constant_cocycle(rack, RootOfUnity.minus_one()))
        report.results["braid"] = {"q": "-1", "ok": braid.ok, "reason": braid.reason, "triples": braid.checked}
    return report


def parse_diagonal(text: str) -> List[int]:
    """
    "1,6,2,4" or "diag(1,6,2,4)" -> [1, 6, 2, 4].

    Raises:
        InputError: On malformed text.
    """
    body = text.strip()
    if body.startswith("diag(") and body.endswith(")"):
        body = body[len("diag("):-1]
    try:
        return [int(x) for x in body.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"Malformed eigenvalue list {text!r}") from None


def load_class_matrix(path: Path, n: int, p: int) -> List[int]:
    """
    Eigenvalues of a diagonal matrix stored as {"p", "n", "rows"} JSON.

    Raises:
        InputError: On a missing or malformed file, a matrix outside
            GL(n, p) or a matrix that is not diagonal.
    """
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise InputError(f"Cannot read matrix file {path}: {e}") from None
    except json.JSONDecodeError as e:
        raise InputError(f"Malformed matrix file {path}: {e}") from None
    if not isinstance(data, dict):
        raise InputError(f"Matrix file {path} must hold a JSON object")
    matrix = PrimeFieldMatrix.from_json(data)
    if (matrix.n, matrix.p) != (n, p):
        raise InputError(f"Matrix in {path} lies in GL({matrix.n}, {matrix.p}), expected GL({n}, {p})")
    off_diagonal = [(i, j) for i, row in enumerate(matrix.rows) for j, x in enumerate(row) if i != j and x]
    if off_diagonal:
        i, j = off_diagonal[0]
        raise InputError(f"Matrix in {path} is not diagonal: entry ({i + 1}, {j + 1}) is nonzero")
    return [matrix.rows[i][i] for i in range(n)]


def cmd_classify(
    group: str,
    class_spec: str,
    config: RunConfig,
    h: Optional[int] = None,
    generator: Optional[int] = None,
) -> Report:
    report = Report("classify", {"group": group, "class": class_spec, "search_budget": config.search_budget})
    kind, args = parse_group_spec(group)
    with report.phase("classify"):
        if kind == "sym":
            cert = classify_sym_class(args[0], class_spec, search_budget=config.search_budget)
        else:
            n, p = args
            if class_spec.startswith("file:"):
                diagonal = load_class_matrix(Path(class_spec[len("file:"):]), n, p)
            else:
                diagonal = parse_diagonal(class_spec)
            if len(diagonal) != n:
                raise InputError(f"{group} needs {n} eigenvalues, got {len(diagonal)}")
            cert = classify_gl_class(p, diagonal, h=h, generator=generator)
    with report.phase("verify"):
        report.add(cert)
    return report


def cmd_sweep(degrees: str, config: RunConfig, path_manager: Optional[PathManager] = None) -> Report:
    return Sweep(parse_degrees(degrees), config, path_manager).run()


def cmd_examples(selector: str, config: RunConfig) -> Report:
    report = Report("examples", {"selector": selector})
    with report.phase("replay"):
        results = run_examples(selector, config)
    for result in results:
        report.results[result.tag] = result.summary
        for cert in result.certificates:
            report.add(cert)
    return report


def cmd_refute(n: int, config: RunConfig, budget: Optional[int] = None) -> Report:
    budget = budget or config.refutation_budget
    report = Report("refute", {"n": n, "budget": budget})
    with report.phase("search"):
        result = octa_refutation_search(n, budget=budget)
    report.results.update({
        "candidates": result.candidates,
        "scanned": result.scanned,
        "exhaustive": result.exhaustive,
        "found": result.found,
    })
    if result.family is not None:
        report.results["family"] = [format_permutation(x) for x in result.family.members]
    return report


def _read_certificates(path: Path) -> List[Certificate]:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e}") from None
    try:
        data = json.loads(text)
        records = data["certificates"] if isinstance(data, dict) and "certificates" in data else [data]
    except json.JSONDecodeError:
        try:
            records = [json.loads(line) for line in text.splitlines() if line.strip()]
        except json.JSONDecodeError as e:
            raise InputError(f"{path} is neither JSON nor JSON lines: {e}") from None
    records = [r["certificate"] if isinstance(r, dict) and "certificate" in r else r for r in records]
    return [Certificate.from_dict(r) for r in records]


def cmd_verify(path: Path) -> Report:
    report = Report("verify", {"path": str(path)})
    with report.phase("verify"):
        certificates = _read_certificates(path)
        failed = [c for c in certificates if not verify_certificate(c)]
    report.results.update({"certificates": len(certificates), "verified": len(certificates) - len(failed)})
    for cert in failed:
        report.defects.append(f"{cert.group} {cert.label}: certificate fails re-verification")
    return report


# === Entry point ===

def _config(args: argparse.Namespace) -> RunConfig:
    overrides = {
        "search_budget": args.search_budget,
        "word_depth": args.word_depth,
        "workers": args.workers,
        "cache_path": args.cache,
        "output_format": "json" if args.json else None,
    }
    return load_run_config(args.config, {k: v for k, v in overrides.items() if v is not None})


def _dispatch(args: argparse.Namespace, config: RunConfig, path_manager: Optional[PathManager]) -> Report:
    if args.command == "rack":
        return cmd_rack(args.name, args.check)
    if args.command == "classify":
        return cmd_classify(args.group, args.class_spec, config, h=args.h, generator=args.generator)
    if args.command == "sweep":
        return cmd_sweep(args.degrees, config, path_manager)
    if args.command == "examples":
        return cmd_examples(args.tag, config)
    if args.command == "refute":
        return cmd_refute(args.n, config, args.budget)
    return cmd_verify(args.path)


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # usage errors exit with EXIT_INPUT, --help with 0
        return e.code if isinstance(e.code, int) else EXIT_INPUT
    load_env()
    output_dir = args.output_dir or get_env(EnvKeys.OUTPUT_DIR)
    try:
        path_manager = PathManager(Path(output_dir), run_name=args.command) if output_dir else None
        setup_logging("rackit", path_manager, args.log_level or get_env(EnvKeys.LOG_LEVEL) or "WARNING")
        config = _config(args)
        report = _dispatch(args, config, path_manager)
    except DefectError as e:
        logger.error(f"Defect: {e}")
        print(f"defect: {e}", file=sys.stderr)
        return EXIT_DEFECT
    except (InputError, BudgetExceeded, OSError) as e:
        logger.error(str(e))
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT

    if config.output_format == "json":
        print(report.to_json())
    else:
        print(report.render_text())
    if path_manager is not None:
        report.save(path_manager.get_report_path(args.command, "json"))
    return EXIT_OK if report.ok else EXIT_DEFECT


if __name__ == "__main__":
    sys.exit(main())
