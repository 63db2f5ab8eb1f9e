"""Representation suites: finite-dimensionality by odd reflections and sphericity of Kac modules"""

import logging

from src.algebra.borel import hook_from_natural_11, kac_weight, kac_weight_11, oddref_dom_holds, verify_fd
from src.algebra.kacrep import (
    quasi_spherical_check, quasi_spherical_vector, spherical_candidate, spherical_vectors, typicality, vectors_rank,
)
from src.algebra.partitions import HookProfile, enumerate_hooks
from src.core.report import VerificationReport
from src.plugins.base_plugin import BasePlugin

logger = logging.getLogger(__name__)


class FiniteDimPlugin(BasePlugin):
    """Dominance after the reflection path, and the Kac weight closed form at (1,1)"""

    @property
    def name(self) -> str:
        return "finite_dim"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        fd = self.section('fd')
        max_size, max_p, max_q = fd.get('max_size', 6), fd.get('max_p', 3), fd.get('max_q', 3)
        for p in range(1, max_p + 1):
            for q in range(1, max_q + 1):
                prof = HookProfile(p, q)
                hooks = enumerate_hooks(prof, max_size, "up-to")
                failed = [r for r in (verify_fd(lam, prof) for lam in hooks) if not r.ok]
                report.add(f"verify_fd({p},{q})", not failed, f"{len(hooks)} pass",
                           f"{len(hooks) - len(failed)} pass" + "".join(f"; {r.lam} {r.final}" for r in failed))

        kac = self.section('kac')
        prof = HookProfile(1, 1)
        for a in range(1, kac.get('max_a', 5) + 1):
            for b in range(0, kac.get('max_b', 4) + 1):
                actual = kac_weight(hook_from_natural_11(a, b), prof).coeffs
                expected = kac_weight_11(a, b)
                report.add(f"kac_weight({a}|{b})", actual == expected, expected, actual)

        bound = fd.get('oddref_bound', 5)
        box = range(-bound, bound + 1)
        broken = [(x, y, z) for x in box for y in box for z in box if oddref_dom_holds(x, y, z) is False]
        report.add(f"oddref_dom[-{bound},{bound}]^3", not broken, "[]", str(broken[:5]))
        return report


class SphericityPlugin(BasePlugin):
    """
    K(λ̆) at p = q = 1 for 1 <= a <= max_a, 0 <= b <= max_b

    Off the b = a-1 family the spherical space is the line through
    ξ11ξ22 ⊗ v and λ̆ is typical. On it there is no spherical vector and
    the quasi-spherical vector passes its checks.
    """

    @property
    def name(self) -> str:
        return "sphericity"

    def run_checks(self) -> VerificationReport:
        report = VerificationReport(self.name)
        kac = self.section('kac')
        word_length = kac.get('word_length', 2)
        for a in range(1, kac.get('max_a', 5) + 1):
            for b in range(0, kac.get('max_b', 4) + 1):
                hw = kac_weight_11(a, b)
                vectors = spherical_vectors(hw)
                if b != a - 1:
                    spanned = len(vectors) == 1 and vectors_rank(vectors + [spherical_candidate(a, b)]) == 1
                    report.add(f"spherical({a}|{b})", spanned, "1, containing xi11 xi22 (x) v", len(vectors))
                    report.add(f"typical({a}|{b})", typicality(hw), True, typicality(hw))
                    continue
                report.add(f"no_spherical({a}|{b})", not vectors, 0, len(vectors))
                quasi_hw, omega = quasi_spherical_vector(a)
                result = quasi_spherical_check(quasi_hw, omega, word_length)
                report.add(f"quasi_spherical({a}|{b})", quasi_hw == hw and result.ok, "ok",
                           "ok" if result.ok else "; ".join(result.failures) or "span or cyclicity failed")
        return report
