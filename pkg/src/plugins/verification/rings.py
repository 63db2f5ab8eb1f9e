"""Ring suites: Λ⁰ dimensions, interpolation polynomials and generic triangularity"""

import logging
from typing import List, Tuple

from src.algebra.exactpoly import ExactPoly, format_scalar, proportionality, to_scalar
from src.algebra.interp import (
    DEFAULT_SLACK, degenerate_hooks, evaluation_table, is_upper_triangular, solve_interpolation,
    verify_extra_vanishing,
)
from src.algebra.partitions import Partition, enumerate_hooks
from src.algebra.susyring import DeformedParams, SusyProfile, groupoid_equivalence_check, hook_count, lambda0_basis
from src.core.report import VerificationReport
from src.plugins.base_plugin import BasePlugin

logger = logging.getLogger(__name__)

DIMENSION_PROFILES = [(1, 1), (2, 1), (1, 2), (2, 2)]
# (p, q, largest |μ|)
EXTRA_VANISHING_RANGES = [(1, 1, 4), (2, 1, 3), (1, 2, 3)]


def _target_11() -> List[Tuple[str, ExactPoly]]:
    vars = SusyProfile(1, 1).variables
    x2 = ExactPoly.variable(vars, "x1") ** 2
    y2 = ExactPoly.variable(vars, "y1") ** 2
    one = ExactPoly.constant(vars, 1)
    return [("2", (x2 - y2) * (x2 - one)), ("1,1", (x2 - y2) * (one - y2))]


class Lambda0Plugin(BasePlugin):
    """dim Λ⁰ in degree <= 2d equals the number of hooks of size <= d"""

    @property
    def name(self) -> str:
        return "lambda0"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        max_d = self.section('verification').get('lambda0_degree', 3)
        for p, q in DIMENSION_PROFILES:
            prof = SusyProfile(p, q)
            for d in range(1, max_d + 1):
                dim = len(lambda0_basis(prof, d))
                expected = hook_count(prof, d)
                report.add(f"dim({p},{q},d={d})", dim == expected, expected, dim)
        prof = SusyProfile(1, 1)
        for n, f in enumerate(lambda0_basis(prof, 2)):
            held = groupoid_equivalence_check(f, prof)
            report.add(f"groupoid(1,1)#{n}", held, True, held)
        return report


class InterpolationPlugin(BasePlugin):
    """Known I_μ at (1,1), normalization at 2λ♮+ρ, and extra vanishing"""

    @property
    def name(self) -> str:
        return "interpolation"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        slack = self.section('interp').get('slack', DEFAULT_SLACK)
        extra = self.section('interp').get('enlarge_slack', DEFAULT_SLACK)
        prof = SusyProfile(1, 1)

        for text, target in _target_11():
            mu = Partition.parse(text)
            res = solve_interpolation(mu, prof, slack)
            c = proportionality(res.poly, target)
            report.add(f"I_{mu} proportional", c is not None and bool(c), "nonzero multiple",
                       "not proportional" if c is None else format_scalar(c))

        res = solve_interpolation(Partition((2,)), prof, slack)
        value = res.poly.evaluate([to_scalar(3), to_scalar(1)])
        report.add("I_(2)(3,1)", value == to_scalar(4), "4", format_scalar(value))
        report.add("normalization_(2)", res.normalization_value == to_scalar(4), "4",
                   format_scalar(res.normalization_value))

        for p, q, top in EXTRA_VANISHING_RANGES:
            prof = SusyProfile(p, q)
            for mu in enumerate_hooks(prof.hook_profile(), top, "up-to"):
                res = solve_interpolation(mu, prof, slack)
                failures = verify_extra_vanishing(res, mu, prof, extra)
                report.add(f"extra_vanishing({p},{q}){mu}", not failures, "[]",
                           "[" + ", ".join(f"{lam}:{format_scalar(v)}" for lam, v in failures) + "]")
        return report


class TriangularityPlugin(BasePlugin):
    """
    [J_μ(λ♮)] is upper triangular with nonzero diagonal at generic parameters

    Degenerate parameters report the hooks where the normalization vanishes
    and check triangularity below the smallest such size.
    """

    @property
    def name(self) -> str:
        return "triangularity"

    def parameter_sets(self) -> List[DeformedParams]:
        settings = self.section('verification').get('triangularity', {})
        pairs = settings.get('params') or [{'k': '-3', 'h': '1/3'}, {'k': '-5/7', 'h': '2'}]
        return [DeformedParams(to_scalar(str(pair['k'])), to_scalar(str(pair['h']))) for pair in pairs]

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        settings = self.section('verification').get('triangularity', {})
        degree = settings.get('degree', 3)
        slack = self.section('interp').get('slack', DEFAULT_SLACK)
        prof = SusyProfile(1, 1)
        for params in self.parameter_sets():
            hooks, table = evaluation_table(prof, degree, params, slack)
            ok = is_upper_triangular(hooks, table)
            label = f"k={format_scalar(params.k)},h={format_scalar(params.h)}"
            diagonal = ",".join(format_scalar(table[n][n]) for n in range(len(hooks)))
            report.add(label, ok, "upper triangular, nonzero diagonal", f"diagonal [{diagonal}]")

        for entry in settings.get('degenerate') or []:
            params = DeformedParams(to_scalar(str(entry['k'])), to_scalar(str(entry['h'])))
            label = f"k={format_scalar(params.k)},h={format_scalar(params.h)}"
            expected = [Partition.parse(str(mu)) for mu in entry.get('hooks', [])]
            found = degenerate_hooks(prof, degree, params)
            report.add(f"{label} degenerate", found == expected,
                       [str(mu) for mu in expected], [str(mu) for mu in found])
            below = min((mu.size for mu in found), default=degree + 1) - 1
            if below < 0:
                continue
            logger.info(f"{label}: normalization vanishes at {[str(mu) for mu in found]}, checking degree <= {below}")
            hooks, table = evaluation_table(prof, min(below, degree), params, slack)
            report.add(f"{label} below degree {min(below, degree) + 1}", is_upper_triangular(hooks, table),
                       "upper triangular, nonzero diagonal", f"{len(hooks)} hooks")
        return report
