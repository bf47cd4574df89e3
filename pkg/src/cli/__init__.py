from .app import COMMANDS, main, run
from .jobs import FactorRecord, GridProduct, JobSpec, JobSpecError, QuadratureOverrides, load_job, parse_job
from .parser import PolynomialParseError, parse_operator, parse_poly, parse_rational, tokenize

__all__ = [
    "COMMANDS",
    "main",
    "run",
    "JobSpec",
    "JobSpecError",
    "FactorRecord",
    "GridProduct",
    "QuadratureOverrides",
    "load_job",
    "parse_job",
    "PolynomialParseError",
    "parse_poly",
    "parse_operator",
    "parse_rational",
    "tokenize",
]
