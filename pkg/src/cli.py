"""
Command-line front end.

    python -m src.cli verify-all [--json] [--max-cosets N]
    python -m src.cli check T34-ORDER
    python -m src.cli braid act --braid "s1^2 s3 s2 s3^-1 s1^-2" --target gamma4 --reflect --involutory

Exit codes: 0 success, 1 a check failed, 2 something was inconclusive and
nothing failed, 3 usage or parse error. Configuration comes from flags only.
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional

from pydantic import ValidationError

from src import algebra, verification
from src.algebra import AlgebraError, CosetLimitExceeded, UnknownCheckError
from src.config import DEFAULT_DEGREE_MAX, DEFAULT_MAX_COSETS
from src.models import CheckStatus, CliConfig
from src.utils import apply_braid, format_candidate, format_certify_response, format_enum_result, format_klein

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INCONCLUSIVE = 2
EXIT_USAGE = 3

_STATUS_EXIT = {
    CheckStatus.PASS: EXIT_OK,
    CheckStatus.FAIL: EXIT_FAILED,
    CheckStatus.INCONCLUSIVE: EXIT_INCONCLUSIVE,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")

    parser = _Parser(prog="braidcert", description="Braid certificate toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify-all", parents=[common], help="run every check")
    p.add_argument("--json", dest="json_output", action="store_true")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("check", parents=[common], help="run one check")
    p.add_argument("check_id", metavar="ID")
    p.add_argument("--json", dest="json_output", action="store_true")
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = sub.add_parser("braid", help="braid actions")
    braid_sub = p.add_subparsers(dest="braid_command", required=True)
    act = braid_sub.add_parser("act", parents=[common], help="apply a braid to a loop, path or word")
    act.add_argument("--braid", required=True)
    act.add_argument("--target", required=True, help="gamma<i>, rho<j> or a word over g1..g4")
    act.add_argument("--reflect", action="store_true")
    act.add_argument("--involutory", action="store_true")

    p = sub.add_parser("coset-enum", parents=[common], help="Todd-Coxeter coset enumeration")
    p.add_argument("--presentation", type=Path, required=True)
    p.add_argument("--subgroup", help='subgroup generators separated by ";"')
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.add_argument("--json", dest="json_output", action="store_true")

    p = sub.add_parser("order", parents=[common], help="order of a word in a finite presented group")
    p.add_argument("--presentation", type=Path, required=True)
    p.add_argument("--word", required=True)
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)

    p = sub.add_parser("hom-search", parents=[common], help="homomorphisms into S_n")
    p.add_argument("--presentation", type=Path, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--involutions", action="store_true")
    p.add_argument("--require-nontrivial")
    p.add_argument("--json", dest="json_output", action="store_true")

    p = sub.add_parser("certify", parents=[common], help="search for a braid certificate")
    p.add_argument("--braid", required=True)
    p.add_argument("--degree-max", type=int, default=DEFAULT_DEGREE_MAX)
    p.add_argument("--json", dest="json_output", action="store_true")

    p = sub.add_parser("klein", parents=[common], help="quotients of the Klein bottle group G_k")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--max-cosets", type=int, default=DEFAULT_MAX_COSETS)
    p.add_argument("--json", dest="json_output", action="store_true")

    p = sub.add_parser("verify-hom", parents=[common], help="check generator images against every relator")
    p.add_argument("--presentation", type=Path, required=True)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument(
        "--image", dest="images", action="append", required=True, metavar="NAME=(CYCLES)"
    )
    return parser


def parse_config(argv: List[str]) -> CliConfig:
    namespace = vars(build_parser().parse_args(argv))
    if namespace.pop("braid_command", None):
        namespace["command"] = "braid act"
    try:
        return CliConfig(**namespace)
    except ValidationError as exc:
        problems = "; ".join(
            f"--{'.'.join(str(p) for p in e['loc']).replace('_', '-')}: {e['msg']}" for e in exc.errors()
        )
        raise UsageError(problems) from None


def _read_presentation(path: Path) -> algebra.Presentation:
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return algebra.parse_presentation(text)


# --- Subcommands ---

def _verify_all(config: CliConfig) -> int:
    report = verification.run_all(max_cosets=config.max_cosets, workers=config.workers)
    if config.json_output:
        print(report.canonical_json())
    else:
        width = max(len(c.id) for c in report.checks)
        for c in report.checks:
            print(f"{c.id:<{width}}  {c.status.value}")
            if c.status is not CheckStatus.PASS:
                print(f"{'':<{width}}    expected: {json.dumps(c.expected, ensure_ascii=False)}")
                print(f"{'':<{width}}    actual:   {json.dumps(c.actual, ensure_ascii=False)}")
        s = report.summary
        print(f"\n{s.passed} pass, {s.failed} fail, {s.inconclusive} inconclusive")
    return report.exit_code


def _check(config: CliConfig) -> int:
    result = verification.run_check(config.check_id, max_cosets=config.max_cosets)
    if config.json_output:
        print(result.model_dump_json(indent=2))
    else:
        print(f"{result.id}: {result.status.value}")
        print(f"  {result.description}")
        print(f"  ref:      {result.paper_ref}")
        print(f"  expected: {json.dumps(result.expected, ensure_ascii=False)}")
        print(f"  actual:   {json.dumps(result.actual, ensure_ascii=False)}")
    return _STATUS_EXIT[result.status]


def _braid_act(config: CliConfig) -> int:
    print(apply_braid(config.braid, config.target, config.reflect, config.involutory))
    return EXIT_OK


def _coset_enum(config: CliConfig) -> int:
    presentation = _read_presentation(config.presentation)
    subgroup = [
        algebra.parse_word(w, presentation.alphabet)
        for w in (config.subgroup or "").split(";")
        if w.strip()
    ]
    result = algebra.todd_coxeter(presentation, subgroup, config.max_cosets)
    if config.json_output:
        print(format_enum_result(result).model_dump_json(indent=2))
    else:
        print(f"status: {result.status.value}")
        print(f"cosets: {result.coset_count}")
        print(f"defined: {result.defined}")
        for name, perm in result.actions:
            print(f"{name}: {perm}")
    return EXIT_OK if result.is_finite else EXIT_INCONCLUSIVE


def _order(config: CliConfig) -> int:
    presentation = _read_presentation(config.presentation)
    word = algebra.parse_word(config.word, presentation.alphabet)
    try:
        print(algebra.element_order(presentation, word, config.max_cosets))
    except CosetLimitExceeded as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    return EXIT_OK


def _hom_search(config: CliConfig) -> int:
    presentation = _read_presentation(config.presentation)
    nontrivial = (
        algebra.parse_word(config.require_nontrivial, presentation.alphabet)
        if config.require_nontrivial
        else None
    )
    spec = algebra.SearchSpec(
        presentation,
        config.degree,
        restrict_to_involutions=config.involutions,
        require_nontrivial=nontrivial,
    )
    candidates = algebra.search(spec)
    if config.json_output:
        print(json.dumps([format_candidate(c) for c in candidates], indent=2))
    else:
        for candidate in candidates:
            print(candidate)
        print(f"{len(candidates)} homomorphism(s)")
    return EXIT_OK


def _certify(config: CliConfig) -> int:
    braid = algebra.parse_braid(config.braid)
    certificate = algebra.certify_braid(braid, config.degree_max)
    response = format_certify_response(config.braid, certificate)
    if config.json_output:
        print(response.model_dump_json(indent=2))
    elif response.certificate is None:
        print("status: unknown")
    else:
        cert = response.certificate
        print("status: valid")
        print(f"degree: {cert.degree}")
        for name, cycles in cert.images.items():
            print(f"{name} -> {cycles}")
        print(f"f = {cert.f_word} -> {cert.f_image}")
        print(f"a = {cert.a_word} -> {cert.a_image}")
        print(f"u = {cert.u_word} -> {cert.u_image}")
    return EXIT_OK if certificate is not None else EXIT_INCONCLUSIVE


def _klein(config: CliConfig) -> int:
    quotients = algebra.klein_quotients(config.k, config.max_cosets)
    response = format_klein(config.k, quotients)
    if config.json_output:
        print(response.model_dump_json(indent=2))
    else:
        for q in response.quotients:
            if q.exponent is None:
                print(f"G_{config.k} / <<{q.kernel}>>: {q.status}")
            else:
                print(f"G_{config.k} / <<{q.kernel}>>: order {q.order}, exponent {q.exponent}")
    finite = all(q.status is algebra.EnumStatus.FINITE for q in quotients)
    return EXIT_OK if finite else EXIT_INCONCLUSIVE


def _verify_hom(config: CliConfig) -> int:
    presentation = _read_presentation(config.presentation)
    images = algebra.parse_images(config.images, presentation.alphabet, config.degree)
    check = algebra.verify_hom(presentation, images)
    if check:
        print("homomorphism")
        return EXIT_OK
    print(f"fails on {check.failing_relator} -> {check.failing_image}")
    return EXIT_FAILED


COMMANDS: Dict[str, Callable[[CliConfig], int]] = {
    "verify-all": _verify_all,
    "check": _check,
    "braid act": _braid_act,
    "coset-enum": _coset_enum,
    "order": _order,
    "hom-search": _hom_search,
    "certify": _certify,
    "klein": _klein,
    "verify-hom": _verify_hom,
}


def main(argv: Optional[List[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        config = parse_config(argv)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        # --help
        return int(exc.code or 0)

    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    logger.debug("dispatching %s", config.command)
    try:
        return COMMANDS[config.command](config)
    except (AlgebraError, UnknownCheckError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
