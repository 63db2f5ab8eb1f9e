"""Structure suites: the gl(2|2) bracket table and the restricted root data"""

import logging

from src.algebra.exactpoly import format_scalar
from src.algebra.superlie import check_bracket_table, check_super_jacobi, is_positive, restricted_roots, weyl_vector
from src.core.report import VerificationReport
from src.plugins.base_plugin import BasePlugin

logger = logging.getLogger(__name__)

# positive restricted root -> (even dim, odd dim)
EXPECTED_ROOTS = {
    (2, 0): (1, 0),
    (0, 2): (1, 0),
    (1, 1): (0, 2),
    (1, -1): (0, 2),
}
EXPECTED_RHO = ("-1", "1")


class BracketTablePlugin(BasePlugin):
    """All 64 tabulated superbrackets plus super-Jacobi on basis triples"""

    @property
    def name(self) -> str:
        return "brackets"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        for record in check_bracket_table():
            report.add(f"[{record.row},{record.column}]", record.ok, record.expected, record.actual)
        failures = check_super_jacobi()
        report.add("super_jacobi", not failures, "0 failing triples", f"{len(failures)} failing triples")
        return report


class RestrictedRootsPlugin(BasePlugin):
    """Root-space superdimensions and the Weyl vector of the symmetric pair"""

    @property
    def name(self) -> str:
        return "roots"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        positive = {root: dims for root, dims in restricted_roots().items() if is_positive(root)}
        for root, dims in EXPECTED_ROOTS.items():
            actual = positive.get(root)
            report.add(f"root{root}", actual == dims, f"({dims[0]}|{dims[1]})",
                       "missing" if actual is None else f"({actual[0]}|{actual[1]})")
        extra = sorted(set(positive) - set(EXPECTED_ROOTS))
        report.add("no_other_roots", not extra, "[]", str(extra))
        rho = tuple(format_scalar(c) for c in weyl_vector())
        report.add("rho", rho == EXPECTED_RHO, ",".join(EXPECTED_RHO), ",".join(rho))
        return report
