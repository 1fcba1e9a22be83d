import argparse
import json
import sys
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Optional, TextIO

from app.models.hemiring import Hemiring
from app.models.subsets import IdealKind
from app.models.theorems import CATALOG
from app.services.corpus_service import CorpusService
from app.services.fuzzy_service import OPERATIONS, FuzzyService
from app.services.hemiring_service import HemiringService
from app.services.theorem_service import TheoremService
from app.utils.config import WorkbenchConfig
from app.utils.errors import InputError, QuarantineError, WorkbenchError
from app.utils.logger import LoggerConfig, get_logger

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_INPUT = 2


class Output:
    """
    Вывод результатов в stdout: json-lines для инструментов или текст для человека
    """

    def __init__(self, output_format: str, stream: Optional[TextIO] = None):
        self.format = output_format
        self.stream = stream or sys.stdout

    def record(self, data: Dict[str, Any], human: Optional[str] = None) -> None:
        if self.format == "json-lines":
            self.stream.write(json.dumps(data, ensure_ascii=False, default=str) + "\n")
        else:
            self.stream.write((human if human is not None else _human(data)) + "\n")

    def records(self, items: Iterable[Dict[str, Any]]) -> None:
        for item in items:
            self.record(item)


def _human(data: Dict[str, Any]) -> str:
    parts = []
    for key, value in data.items():
        if value is None or value == [] or value == {}:
            continue
        if isinstance(value, (dict, list)):
            value = json.dumps(value, ensure_ascii=False, default=str)
        parts.append(f"{key}={value}")
    return "  ".join(parts)


def _config(args: argparse.Namespace) -> WorkbenchConfig:
    return WorkbenchConfig.from_env(
        denominator=getattr(args, "denominator", None),
        output_format=args.format,
        log_level=args.log_level,
        log_format=args.log_format,
        log_file=args.log_file,
    )


def _reject_quarantined(hemiring: Hemiring, args: argparse.Namespace) -> None:
    if hemiring.quarantined and not getattr(args, "allow_quarantined", False):
        raise QuarantineError(f"{hemiring.name} is quarantined; pass --allow-quarantined",
                              {"structure": hemiring.name})


def cmd_verify(args, config: WorkbenchConfig, out: Output) -> int:
    report = HemiringService(config).verify(args.file)
    out.record(report.to_dict(), _human_axioms(report.to_dict()))
    return EXIT_OK if report.valid else EXIT_COUNTEREXAMPLE


def _human_axioms(data: Dict[str, Any]) -> str:
    lines = [f"valid={data['valid']}  commutative_mul={data['commutative_mul']}  identity={data['identity']}"]
    for violation in data["violations"]:
        lines.append(f"  {violation['axiom']} at ({', '.join(violation['witness'])}): "
                     f"{violation['lhs']} != {violation['rhs']}")
    return "\n".join(lines)


def cmd_ideals(args, config: WorkbenchConfig, out: Output) -> int:
    service = HemiringService(config)
    hemiring = service.load(args.file, quarantine=True)
    family = service.ideals(hemiring, IdealKind(args.kind))
    out.records(service.describe_family(family))
    return EXIT_OK


def cmd_closure(args, config: WorkbenchConfig, out: Output) -> int:
    service = HemiringService(config)
    hemiring = service.load(args.file, quarantine=True)
    subset, closed = service.closure(hemiring, args.set)
    out.record({"set": subset.format(), "h_closure": closed.format()},
               f"closure({subset.format()}) = {closed.format()}")
    return EXIT_OK


def cmd_generate_ideal(args, config: WorkbenchConfig, out: Output) -> int:
    service = HemiringService(config)
    hemiring = service.load(args.file, quarantine=True)
    ideal = service.generate(hemiring, args.set, IdealKind(args.kind))
    out.record({"generators": args.set, "kind": args.kind, "ideal": ideal.format()})
    return EXIT_OK


def cmd_classify(args, config: WorkbenchConfig, out: Output) -> int:
    service = HemiringService(config)
    hemiring = service.load(args.file, quarantine=True)
    _reject_quarantined(hemiring, args)
    if args.kind is not None:
        out.record(service.check_kind(hemiring, args.ideal, IdealKind(args.kind)))
        return EXIT_OK
    out.record(service.classify(hemiring, args.ideal).to_dict())
    return EXIT_OK


def cmd_fuzzy(args, config: WorkbenchConfig, out: Output) -> int:
    hemirings = HemiringService(config)
    fuzzy = FuzzyService(config)
    hemiring = hemirings.load(args.file, quarantine=True)
    left = fuzzy.load(args.lhs, hemiring)
    right = fuzzy.load(args.rhs, hemiring)
    result = fuzzy.combine(args.op, left, right, oracle=args.oracle)
    data: Dict[str, Any] = {"op": args.op, "result": result.as_dict()}
    if hemiring.quarantined:
        data["quarantined"] = True
    out.record(data, f"{args.op}: {result}" + ("  [quarantined]" if hemiring.quarantined else ""))
    return EXIT_OK


def cmd_fuzzy_ideals(args, config: WorkbenchConfig, out: Output) -> int:
    hemirings = HemiringService(config)
    fuzzy = FuzzyService(config)
    hemiring = hemirings.load(args.file, quarantine=True)
    _reject_quarantined(hemiring, args)
    family = fuzzy.ideals(hemiring)
    if args.classify:
        delta = fuzzy.load(args.classify, hemiring)
        out.record(fuzzy.classify(delta, family).to_dict())
        return EXIT_OK
    for member in family:
        out.record({"fuzzy_ideal": member.as_dict(), "constant": member.is_constant}, str(member))
    out.record({"summary": True, **family.scope()})
    return EXIT_OK


def cmd_check(args, config: WorkbenchConfig, out: Output) -> int:
    if args.corpus is None and args.file is None:
        raise InputError("check needs a structure file or --corpus")
    hemirings = HemiringService(config)
    if args.corpus is not None:
        corpus = CorpusService(config).load(args.corpus)
    else:
        corpus = [hemirings.load(args.file, quarantine=True)]
    statements = None if args.statements in (None, "all") else args.statements.split(",")
    service = TheoremService(config)
    reports, summary = service.check(corpus, statements, args.allow_quarantined)
    out.records(r.to_dict() for r in reports)
    if args.diagnostics:
        out.records(d.to_dict() for d in service.diagnostics(corpus))
    out.record(summary.to_dict())
    return EXIT_OK if summary.ok else EXIT_COUNTEREXAMPLE


def cmd_generate(args, config: WorkbenchConfig, out: Output) -> int:
    manifest = CorpusService(config).generate(args.order, args.out, args.strategy)
    out.record({"order": args.order, "count": manifest.counts[str(args.order)], "out": str(args.out)})
    return EXIT_OK


def cmd_fixtures(args, config: WorkbenchConfig, out: Output) -> int:
    for path in CorpusService(config).write_fixtures(args.out):
        out.record({"written": str(path)})
    return EXIT_OK


def cmd_statements(args, config: WorkbenchConfig, out: Output) -> int:
    for statement in CATALOG.values():
        out.record({"id": statement.id, "fuzzy": statement.fuzzy, "summary": statement.summary},
                   f"{statement.id:<9} {statement.summary}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hemiring", description="Finite hemiring and fuzzy h-ideal workbench")
    parser.add_argument("--format", choices=["human", "json-lines"], default=None)
    parser.add_argument("--log-level", default=None)
    parser.add_argument("--log-format", choices=["json", "standard"], default=None)
    parser.add_argument("--log-file", default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name: str, handler: Callable, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler)
        return p

    p = command("verify", cmd_verify, "check the hemiring axioms")
    p.add_argument("file", type=Path)

    p = command("ideals", cmd_ideals, "enumerate ideals of a kind")
    p.add_argument("file", type=Path)
    p.add_argument("--kind", choices=[k.value for k in IdealKind], default=IdealKind.H.value)

    p = command("closure", cmd_closure, "h-closure of a subset")
    p.add_argument("file", type=Path)
    p.add_argument("--set", required=True)

    p = command("generate-ideal", cmd_generate_ideal, "smallest ideal containing a subset")
    p.add_argument("file", type=Path)
    p.add_argument("--set", default="")
    p.add_argument("--kind", choices=[k.value for k in IdealKind], default=IdealKind.H.value)

    p = command("classify", cmd_classify, "classify an h-ideal")
    p.add_argument("file", type=Path)
    p.add_argument("--ideal", required=True)
    p.add_argument("--kind", choices=[k.value for k in IdealKind], default=None,
                   help="only test the ideal condition of this kind")
    p.add_argument("--allow-quarantined", action="store_true")

    p = command("fuzzy", cmd_fuzzy, "combine two fuzzy subsets")
    p.add_argument("file", type=Path)
    p.add_argument("--op", choices=OPERATIONS, required=True)
    p.add_argument("--lhs", type=Path, required=True)
    p.add_argument("--rhs", type=Path, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("-D", "--denominator", type=int, default=None)

    p = command("fuzzy-ideals", cmd_fuzzy_ideals, "enumerate grid fuzzy h-ideals")
    p.add_argument("file", type=Path)
    p.add_argument("-D", "--denominator", type=int, default=None)
    p.add_argument("--classify", type=Path, default=None, help="classify this fuzzy h-ideal instead")
    p.add_argument("--allow-quarantined", action="store_true")

    p = command("check", cmd_check, "run catalog statements")
    p.add_argument("file", type=Path, nargs="?")
    p.add_argument("--corpus", type=Path, default=None)
    p.add_argument("--statements", default="all")
    p.add_argument("-D", "--denominator", type=int, default=None)
    p.add_argument("--allow-quarantined", action="store_true")
    p.add_argument("--diagnostics", action="store_true")

    p = command("generate", cmd_generate, "write all hemirings of an order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--out", type=Path, required=True)
    p.add_argument("--strategy", choices=["plain", "backtracking"], default=None)

    p = command("fixtures", cmd_fixtures, "write the built-in structures")
    p.add_argument("--out", type=Path, default=Path("fixtures"))

    command("statements", cmd_statements, "list catalog statements")
    return parser


def run(argv: Optional[List[str]] = None, stream: Optional[TextIO] = None) -> int:
    """
    Разбирает аргументы, настраивает логирование и выполняет команду

    Returns:
        Код выхода: 0 успех, 1 контрпример или нарушение аксиом, 2 ошибка ввода
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_INPUT if e.code else EXIT_OK

    try:
        config = _config(args)
    except WorkbenchError as e:
        sys.stderr.write(f"error: {e.detail}\n")
        return e.exit_code
    LoggerConfig.setup_logging(
        level=config.log_level,
        format_type=config.log_format,
        log_to_file=config.log_file is not None,
        log_file_path=config.log_file or "hemiring_workbench.log",
    )
    logger.info("Запуск команды", command=args.command)

    try:
        code = args.handler(args, config, Output(config.output_format, stream))
        logger.info("Команда завершена", command=args.command, exit_code=code)
        return code
    except WorkbenchError as e:
        logger.warning("Команда отклонена", command=args.command, exit_code=e.exit_code, detail=e.detail)
        sys.stderr.write(f"error: {e.detail}\n")
        return e.exit_code
    except Exception as e:
        logger.exception("Неожиданная ошибка", command=args.command, error_type=type(e).__name__,
                         error_message=str(e))
        sys.stderr.write(f"internal error: {e}\n")
        return EXIT_INPUT
