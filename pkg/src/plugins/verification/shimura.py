"""Shimura operator suites at p = q = 1"""

import logging

from src.algebra.exactpoly import format_scalar
from src.algebra.partitions import Partition
from src.algebra.shimura import eigenvalue_from_gamma, eigenvalue_on_spherical, verify_shimura
from src.core.report import VerificationReport
from src.plugins.base_plugin import BasePlugin

logger = logging.getLogger(__name__)

DEFAULT_PARTITIONS = ['', '1', '2', '1,1', '3', '2,1', '1,1,1']
DEFAULT_WEIGHTS = [[2, 0], [3, 0], [3, 1]]


class ShimuraPlugin(BasePlugin):
    """Γ(D_μ) is a nonzero multiple of I_μ, lies in Λ⁰ and vanishes where I_μ does"""

    @property
    def name(self) -> str:
        return "shimura"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        for text in self.section('verification').get('shimura_partitions', DEFAULT_PARTITIONS):
            mu = Partition.parse(text)
            result = verify_shimura(mu)
            constant = "none" if result.constant is None else format_scalar(result.constant)
            report.add(f"D_{mu}", result.ok, "nonzero c_mu, in Lambda0, vanishing",
                       f"c_mu={constant}, in_lambda0={result.in_lambda0}, "
                       f"vanishing_failures={len(result.vanishing_failures)}, "
                       f"invariance_failures={len(result.invariance_failures)}")
        return report


class EigenvaluePlugin(BasePlugin):
    """D_(1) on the spherical vector against Γ(D_(1))(2λ♮+ρ)"""

    @property
    def name(self) -> str:
        return "eigenvalue"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        for a, b in self.section('verification').get('eigenvalue_weights', DEFAULT_WEIGHTS):
            expected = eigenvalue_from_gamma(a, b)
            actual = eigenvalue_on_spherical(a, b)
            report.add(f"D_(1)({a}|{b})", expected == actual, format_scalar(expected), format_scalar(actual))
        return report
