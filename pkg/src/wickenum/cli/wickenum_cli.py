import argparse
import asyncio
import json
import logging
import sys
from contextlib import contextmanager
from math import factorial
from typing import TextIO

from pydantic import ValidationError

from wickenum.census.census_writer import CensusWriter, census_entry
from wickenum.census.graph_generator import generate_graphs_up_to
from wickenum.census.planar_graph_oracle import p_distribution
from wickenum.cli.messages.run_config_validation_messages import RunConfigValidationMessages
from wickenum.cli.run_config_errors import RunConfigValidationException
from wickenum.cli.run_config_validator import RunConfigValidator
from wickenum.cli.table_writer import TableWriter
from wickenum.common_domain.engine_errors import ScaleExceeded
from wickenum.common_domain.enum.graph_filter import GraphFilter
from wickenum.common_domain.enum.identity_kind import IdentityKind
from wickenum.common_domain.enum.integrand_kind import IntegrandKind
from wickenum.common_domain.enum.output_format import OutputFormat
from wickenum.common_domain.enum.split_choice import SplitChoice
from wickenum.common_domain.messages.ErrorMessages import ErrorMessages
from wickenum.common_domain.run_config import RunConfig
from wickenum.common_domain.validation_error import WickenumValidationError
from wickenum.common_domain.verification_report import VerificationReport
from wickenum.common_util.exact_codec import ExactCodec
from wickenum.common_util.trace_level_logger import TRACE_LEVEL, get_logger
from wickenum.integrands.integrand_integrator import integrate_spec
from wickenum.integrands.integrand_spec import IntegrandSpec
from wickenum.verification.identity_verifier import IdentityVerifier
from wickenum.verification.planar_convergence import (
    DEFAULT_CONVERGENCE_MAX_EDGES,
    DEFAULT_CONVERGENCE_N_MAX,
    PlanarConvergenceHarness,
)

logger = get_logger(__name__)

EXIT_PASS = 0
EXIT_CONFIG = 1
EXIT_SCALE = 2
EXIT_MISMATCH = 3

LOG_LEVELS = {
    "trace": TRACE_LEVEL,
    "debug": logging.DEBUG,
    "info": logging.INFO,
    "warning": logging.WARNING,
    "error": logging.ERROR,
}
KIND_ALIASES = {"omega": IntegrandKind.OMEGA_R}


def _symbolic_or_int(text: str) -> int | None:
    return None if text == "symbolic" else int(text)


def _int_list(text: str) -> list[int]:
    return [int(part) for part in text.split(",") if part.strip()]


def _total_range(text: str) -> tuple[int, int]:
    if ".." in text:
        low, high = text.split("..", 1)
        return int(low), int(high)
    return 2, int(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wickenum", description="Exact Wick-pairing engine for Gaussian matrix integrals"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument("--n", type=_symbolic_or_int, default=None, help="matrix dimension, or 'symbolic' (default)")
    shared.add_argument("--n-max", type=int, default=None)
    shared.add_argument("--r", type=int, default=None)
    shared.add_argument("--max-edges", type=int, default=None, help="bound on directed carrier edges")
    shared.add_argument("--max-m-degree", type=int, default=None)
    shared.add_argument("--max-z-order", type=int, default=None)
    shared.add_argument("--degrees", type=_int_list, default=None, help="comma-separated, e.g. 2,3,4")
    shared.add_argument("--sweep", type=_int_list, default=[4, 6, 8])
    shared.add_argument("--s-of-n", default="sqrt", help="sqrt, log or const:k")
    shared.add_argument("--format", dest="output_format", choices=[f.value for f in OutputFormat], default="json")
    shared.add_argument("--jobs", type=int, default=1)
    shared.add_argument("--out", default=None, help="output file (default: stdout)")
    shared.add_argument("--pairable-only", action="store_true")
    shared.add_argument("--log-level", choices=list(LOG_LEVELS), default="warning")

    integrate = commands.add_parser("integrate", parents=[shared], help="integrate one integrand")
    integrate.add_argument("--kind", required=True, choices=[*KIND_ALIASES, *(k.value for k in IntegrandKind)])

    verify = commands.add_parser("verify", parents=[shared], help="run a named identity")
    verify.add_argument("identity", choices=[identity.value for identity in IdentityKind])
    verify.add_argument("--split", choices=[choice.value for choice in SplitChoice], default=None)
    verify.add_argument("--total", type=_total_range, default=None, help="coin totals, 'a..b' or 'b'")

    census = commands.add_parser("census", parents=[shared], help="dump the isomorphism classes on n-max vertices")
    census.add_argument("--filter", dest="graph_filter", choices=[f.value for f in GraphFilter], default="all")
    census.add_argument("--dcdc", action="store_true")
    census.add_argument("--tdc", action="store_true")

    commands.add_parser("planar-count", parents=[shared], help="planar graph counts against the integral")
    commands.add_parser("maps", parents=[shared], help="alias of 'verify bipz'")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    values = {key: value for key, value in vars(args).items() if value is not None and key != "tdc"}
    if "kind" in values:
        values["kind"] = KIND_ALIASES.get(values["kind"], values["kind"])
    if args.command == "maps":
        values["identity"] = IdentityKind.BIPZ
    return RunConfig(**values)


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as stream:
            yield stream


def _raise_exception_on_invalid_config(cfg: RunConfig) -> None:
    is_config_valid, validation_issues = RunConfigValidator.is_config_valid(cfg)
    if not is_config_valid:
        error = RunConfigValidationException(RunConfigValidationMessages.CONFIG_VALIDATION_FAILED.key)
        validation_issues_as_string = json.dumps([vars(issue) for issue in validation_issues])
        error.add_note(validation_issues_as_string)
        raise error


def cmd_integrate(cfg: RunConfig, stream: TextIO) -> int:
    max_edges = cfg.max_m_degree if cfg.kind == IntegrandKind.PSI and cfg.max_m_degree is not None else cfg.max_edges
    spec = IntegrandSpec(
        kind=cfg.kind,
        n=cfg.n,
        r=cfg.r,
        max_edges=max_edges,
        max_z_order=cfg.max_z_order,
        degrees=cfg.degrees,
        pairable_only=cfg.pairable_only,
    )
    result = integrate_spec(spec)
    if cfg.output_format == OutputFormat.CSV:
        rows = [
            {"monomial": ExactCodec.encode_monomial(monomial), "coefficient": ExactCodec.encode_rational(value)}
            for monomial, value in result.items()
        ]
        TableWriter(OutputFormat.CSV).write(rows, ["monomial", "coefficient"], stream)
    else:
        payload = {
            "spec": spec.model_dump(mode="json"),
            "bounds": {"max_edges": max_edges, "max_z_order": cfg.max_z_order, "n": cfg.n},
            "reference_dimension": spec.resolved_reference_dimension() if cfg.n is None else None,
            "result": str(result),
            "terms": result.to_json_terms(),
        }
        stream.write(json.dumps(payload, sort_keys=True))
        stream.write("\n")
    return EXIT_PASS


def _write_report(report: VerificationReport, cfg: RunConfig, stream: TextIO) -> None:
    if cfg.output_format == OutputFormat.CSV:
        rows = [mismatch.model_dump() for mismatch in report.mismatches]
        TableWriter(OutputFormat.CSV).write(rows, ["section", "monomial", "lhs", "rhs"], stream)
    else:
        stream.write(report.model_dump_json(exclude_none=True))
        stream.write("\n")


def cmd_verify(cfg: RunConfig, stream: TextIO) -> int:
    verifier = IdentityVerifier(cfg.jobs, cfg.s_of_n, LOG_LEVELS[cfg.log_level])
    report = asyncio.run(verifier.verify(cfg.identity, cfg))
    _write_report(report, cfg, stream)
    return EXIT_PASS if report.passed else EXIT_MISMATCH


def cmd_census(cfg: RunConfig, stream: TextIO, with_tdc: bool = False) -> int:
    graphs = generate_graphs_up_to(cfg.n_max, cfg.graph_filter)
    entries = [census_entry(graph, with_tdc=with_tdc, with_dcdc=cfg.dcdc) for graph in graphs]
    CensusWriter(cfg.output_format, LOG_LEVELS[cfg.log_level]).write(entries, stream)
    return EXIT_PASS


def cmd_planar_count(cfg: RunConfig, stream: TextIO) -> int:
    max_edges = cfg.max_edges if cfg.max_edges is not None else DEFAULT_CONVERGENCE_MAX_EDGES
    n_max = cfg.n_max if cfg.n_max is not None else DEFAULT_CONVERGENCE_N_MAX
    harness = PlanarConvergenceHarness(cfg.s_of_n, LOG_LEVELS[cfg.log_level])
    computed = {(row.n, row.r): row for row in harness.rows(max_edges, cfg.sweep, n_max)}
    sweep = sorted(set(cfg.sweep))
    columns = ["n", "r", "p", *(f"value@{dimension}" for dimension in sweep)]
    columns += [f"residual@{dimension}" for dimension in sweep]
    columns.append("verdict")
    rows = []
    for n in range(1, n_max + 1):
        distribution = p_distribution(n)
        for r, oracle in sorted(distribution.items()):
            row = {"n": n, "r": r, "p": oracle}
            computed_row = computed.get((n, r))
            if computed_row is not None:
                row.update({f"value@{dimension}": value for dimension, value in computed_row.values.items()})
                row.update({f"residual@{dimension}": value for dimension, value in computed_row.residuals.items()})
                row["verdict"] = str(computed_row.verdict)
            rows.append(row)
        rows.append({"n": n, "r": "total", "p": sum(distribution.values())})
    TableWriter(cfg.output_format).write(rows, columns, stream)
    return EXIT_PASS


def _error_payload(error_type: ErrorMessages, *message_args) -> str:
    return WickenumValidationError.create(error_type, *message_args).model_dump_json()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=LOG_LEVELS[args.log_level], stream=sys.stderr)
    try:
        cfg = config_from_args(args)
        _raise_exception_on_invalid_config(cfg)
        with _output(cfg.out) as stream:
            match cfg.command:
                case "integrate":
                    return cmd_integrate(cfg, stream)
                case "verify" | "maps":
                    return cmd_verify(cfg, stream)
                case "census":
                    return cmd_census(cfg, stream, with_tdc=args.tdc)
                case "planar-count":
                    return cmd_planar_count(cfg, stream)
    except ScaleExceeded as error:
        logger.error(str(error))
        print(_error_payload(ErrorMessages.SCALE_EXCEEDED_ERROR, *error.message_args), file=sys.stderr)
        return EXIT_SCALE
    except RunConfigValidationException as error:
        notes = " ".join(getattr(error, "__notes__", []))
        print(_error_payload(ErrorMessages.CONFIG_ERROR, notes), file=sys.stderr)
        return EXIT_CONFIG
    except (ValidationError, ValueError) as error:
        print(_error_payload(ErrorMessages.CONFIG_ERROR, str(error)), file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
