"""Exact upper bounds on quantum stabilizer code parameters."""

from .bounds import CodeParams, BoundReport, check_code, hamming_bound, singleton_bound
from .certificates import (
    Certificate,
    dominance_check,
    dominance_threshold,
    hamming_certificate,
    lp_bound,
    verify_conditions,
)
from .errors import CertificateInfeasibleError, DivisionUndefinedError, DomainError
from .krawtchouk import KrawtchoukContext, krawtchouk_eval, sphere_volume
from .mds import mds_exclusion_scan, mds_report

__version__ = "0.1.0"
