import logging
import sys
from typing import List, Optional

import ujson
from transformers import HfArgumentParser

from src.automorphism import bispectral_quadruple, classify
from src.constants import (
    ASYMMETRY_THRESHOLD,
    EXPECTED_SYMMETRIC_RANK,
    MIN_SVD_GAP,
    SYMMETRY_DEFECT_TOLERANCE,
)
from src.contour import ContourError
from src.params import CLIArguments, ContourArguments, VerificationArguments, default_quadrature_spec
from src.quad import DivergentConfigurationError, TruncationError, build_integral_rep, eval_psi
from src.utils import complex_to_json, parse_complex, setup_logging, write_json
from src.verify import VerificationTask, cross_check_derivatives, symmetry_report, verify_bispectral

from .jobs import JobSpec, JobSpecError, load_job
from .parser import PolynomialParseError

logger = logging.getLogger(__name__)

COMMANDS = ("operators", "classify", "eval", "verify", "symmetry")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_DIVERGENT = 2
EXIT_TRUNCATION = 3


def _emit(payload: dict, path: Optional[str]):
    if path:
        write_json(payload, path)
        logger.info(f"Wrote {path}")
    print(ujson.dumps(payload, indent=2))


def run_operators(job: JobSpec, args: CLIArguments) -> int:
    operators = bispectral_quadruple(job.automorphism_word())
    text = operators.as_text()
    for name, value in text.items():
        print(f"{name} = {value}")
    _emit({"operators": text, "canonical_pair": operators.canonical_pair_holds()}, args.report_out)
    return EXIT_OK


def run_classify(job: JobSpec, args: CLIArguments) -> int:
    classification = classify(job.automorphism_word())
    print(classification.verdict.value)
    print(classification.detail)
    _emit({"classification": classification.to_dict()}, args.report_out)
    return EXIT_OK


def run_eval(job: JobSpec, args: CLIArguments, contour_args: ContourArguments) -> int:
    if args.x is None or args.z is None:
        raise ValueError("eval needs both --x and --z")
    word = job.automorphism_word()
    x, z = parse_complex(args.x), parse_complex(args.z)
    rep = build_integral_rep(
        word,
        job.contour_overrides(),
        allow_m_gt_2=args.allow_m_gt_2 or job.allow_m_gt_2,
        default_contour=contour_args.pair,
    )
    result = eval_psi(rep, x, z, job.quadrature_spec(word.m), method=job.method)
    print(f"psi({x}, {z}) = {result.value}")
    print(f"est_error = {result.est_error:.3e}")
    _emit(
        {
            "x": complex_to_json(x),
            "z": complex_to_json(z),
            "psi": complex_to_json(result.value),
            "est_error": result.est_error,
            "truncations": list(result.truncations),
        },
        args.report_out,
    )
    return EXIT_OK


def run_verify(job: JobSpec, args: CLIArguments, verify_args: VerificationArguments,
               contour_args: ContourArguments) -> int:
    word = job.automorphism_word()
    task = VerificationTask(
        word=word,
        grid=job.grid_points(word.m),
        spec=job.quadrature_spec(word.m),
        probes=tuple(job.probe_operators()),
        contours=job.contour_overrides(),
        tol=verify_args.tol if verify_args.tol is not None else job.tol,
        allow_m_gt_2=args.allow_m_gt_2 or job.allow_m_gt_2,
        method=job.method,
        default_contour=contour_args.pair,
    )
    report = verify_bispectral(task, workers=verify_args.workers, progress=verify_args.progress)
    payload = report.to_dict()
    passed = report.passed
    if verify_args.check_derivatives:
        rep = build_integral_rep(
            word, task.contours, allow_m_gt_2=task.allow_m_gt_2, default_contour=task.default_contour
        )
        derivatives = cross_check_derivatives(rep, task.grid, task.quadrature, step=verify_args.fd_step)
        payload["derivatives"] = derivatives.to_dict()
        passed = passed and derivatives.max_deviation <= task.tolerance
        payload["pass"] = passed
    if args.grid_out:
        report.to_frame().to_csv(args.grid_out, index=False)
        logger.info(f"Wrote {args.grid_out}")
    _emit(payload, args.report_out)
    for record in report.failures():
        logger.warning(f"{record.identity} at ({record.x}, {record.z}): residual {record.residual:.3e}")
    if report.records and len(report.inconclusive) == len(report.records):
        return EXIT_TRUNCATION
    return EXIT_OK if passed else EXIT_FAILED


def run_symmetry(args: CLIArguments, verify_args: VerificationArguments) -> int:
    report = symmetry_report(default_quadrature_spec(1), progress=verify_args.progress)
    _emit(report.to_dict(), args.report_out)
    passed = (
        max(report.defects["11"], report.defects["22"], report.defects["12+21"]) <= SYMMETRY_DEFECT_TOLERANCE
        and max(report.transpose_defects.values()) <= SYMMETRY_DEFECT_TOLERANCE
        and report.witness > ASYMMETRY_THRESHOLD
        and report.rank == EXPECTED_SYMMETRIC_RANK
        and report.gap >= MIN_SVD_GAP
    )
    return EXIT_OK if passed else EXIT_FAILED


def run(command: str, job: Optional[JobSpec], args: CLIArguments,
        verify_args: Optional[VerificationArguments] = None,
        contour_args: Optional[ContourArguments] = None) -> int:
    verify_args = verify_args or VerificationArguments()
    contour_args = contour_args or ContourArguments()
    try:
        if command == "symmetry":
            return run_symmetry(args, verify_args)
        if job is None:
            raise ValueError(f"{command} needs --job")
        if command == "operators":
            return run_operators(job, args)
        elif command == "classify":
            return run_classify(job, args)
        elif command == "eval":
            return run_eval(job, args, contour_args)
        elif command == "verify":
            return run_verify(job, args, verify_args, contour_args)
        else:
            raise ValueError(f"Unknown command: {command}")
    except DivergentConfigurationError as exc:
        print(ujson.dumps({"error": "divergent configuration", "report": exc.report.to_dict()}), file=sys.stderr)
        return EXIT_DIVERGENT
    except TruncationError as exc:
        print(ujson.dumps({"error": "truncation failure", "detail": str(exc),
                           "last_estimate": exc.last_estimate}), file=sys.stderr)
        return EXIT_TRUNCATION
    except (JobSpecError, PolynomialParseError, ContourError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILED


def main(argv: Optional[List[str]] = None) -> int:
    parser = HfArgumentParser((CLIArguments, VerificationArguments, ContourArguments))
    parser.add_argument("command", choices=COMMANDS, help="What to run on the job.")
    args, verify_args, contour_args, extra = parser.parse_args_into_dataclasses(args=argv, look_for_args_file=False)
    setup_logging(args.log_level)

    job = None
    if args.job is not None:
        try:
            job = load_job(args.job)
        except JobSpecError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_FAILED
    return run(extra.command, job, args, verify_args, contour_args)


if __name__ == "__main__":
    sys.exit(main())
