"""
Interpolation polynomials I_μ (symmetric pair) and J_μ (deformed parameters)

Both are solved the same way: a linear system over a basis of the ring in
degree <= 2|μ|, one row per vanishing point plus the normalization row at μ.
When the normalization product is zero the system is solved homogeneously
and the result is flagged as degenerate.
"""

import csv
import io
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from .exactpoly import ExactMatrix, ExactPoly, ONE, Scalar, combine, format_scalar, to_scalar
from .partitions import Partition, enumerate_hooks, hook_order_key, hooks_not_containing, is_hook, lambda_natural
from .susyring import DeformedParams, SusyProfile, SusyRing, deformed_rho, rho_components, tau_map

logger = logging.getLogger(__name__)

DEFAULT_SLACK = 3


class InterpolationError(ValueError):
    """Raised when the interpolation system is inconsistent or underdetermined"""

    def __init__(self, message: str, solution_dim: int = 0, constraints: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.solution_dim = solution_dim
        self.constraints = constraints or {}


@dataclass(frozen=True)
class RhoVector:
    bosonic: Tuple[Scalar, ...]
    fermionic: Tuple[Scalar, ...]

    @property
    def values(self) -> Tuple[Scalar, ...]:
        return self.bosonic + self.fermionic

    def scaled(self, c: Any) -> 'RhoVector':
        c = to_scalar(c)
        return RhoVector(tuple(c * x for x in self.bosonic), tuple(c * x for x in self.fermionic))

    def to_json(self) -> Dict[str, List[str]]:
        return {"b": [format_scalar(x) for x in self.bosonic], "f": [format_scalar(x) for x in self.fermionic]}


@dataclass
class InterpResult:
    """Solved interpolation polynomial with the data of its linear system"""
    mu: Partition
    poly: ExactPoly
    solution_dim: int
    normalization_value: Scalar
    degenerate_flag: bool
    constraints_used: Dict[str, Any] = field(default_factory=dict)
    params: Optional[DeformedParams] = None

    def to_json(self) -> Dict[str, Any]:
        data = {
            "mu": self.mu.to_json(),
            "poly": self.poly.to_json(),
            "solution_dim": self.solution_dim,
            "normalization_value": format_scalar(self.normalization_value),
            "degenerate": self.degenerate_flag,
            "constraints": self.constraints_used,
        }
        if self.params is not None:
            data["params"] = {"k": format_scalar(self.params.k), "h": format_scalar(self.params.h)}
        return data


def rho(prof: SusyProfile) -> RhoVector:
    bosonic, fermionic = rho_components(prof)
    return RhoVector(tuple(to_scalar(x) for x in bosonic), tuple(to_scalar(x) for x in fermionic))


def varrho(prof: SusyProfile, params: DeformedParams) -> RhoVector:
    """Centers of the deformed ring; equals -ρ/2 at the specialized parameters"""
    bosonic, fermionic = deformed_rho(prof, params)
    return RhoVector(tuple(bosonic), tuple(fermionic))


def eval_point(lam: Partition, prof: SusyProfile) -> List[Scalar]:
    """2λ♮ + ρ, bosonic coordinates first"""
    hook = prof.hook_profile()
    if not is_hook(lam, hook):
        raise ValueError(f"{lam} is not a ({prof.p},{prof.q})-hook")
    natural = lambda_natural(lam, hook).values
    return [to_scalar(2 * n) + r for n, r in zip(natural, rho(prof).values)]


def natural_point(lam: Partition, prof: SusyProfile) -> List[Scalar]:
    hook = prof.hook_profile()
    if not is_hook(lam, hook):
        raise ValueError(f"{lam} is not a ({prof.p},{prof.q})-hook")
    return [to_scalar(n) for n in lambda_natural(lam, hook).values]


def normalization_value(mu: Partition, prof: SusyProfile) -> Scalar:
    """Product over boxes (i,j) of μ of (μ_i-j+μ'_j-i+1)(μ_i+j-μ'_j-i+2p-2q)"""
    total = 1
    for i, j in mu.boxes():
        arm, leg = mu.arm(i, j), mu.leg(i, j)
        total *= (arm + leg + 1) * (arm + 2 * j - leg - 2 * i + 2 * prof.p - 2 * prof.q)
    return to_scalar(total)


def general_normalization(mu: Partition, params: DeformedParams) -> Scalar:
    """Product over boxes of (μ_i-j-k(μ'_j-i)+1)(μ_i+j+k(μ'_j+i)+2h-1)"""
    k, h = params.k, params.h
    total = ONE
    for i, j in mu.boxes():
        arm, leg = mu.arm(i, j), mu.leg(i, j)
        first = k * (-leg) + (arm + 1)
        second = k * (leg + 2 * i) + h * 2 + (arm + 2 * j - 1)
        total = total * first * second
    return total


def _solve(mu: Partition, prof: SusyProfile, ring_: SusyRing, point: Callable[[Partition], List[Scalar]],
           norm: Scalar, slack: int) -> Tuple[ExactPoly, int, Dict[str, Any]]:
    hook = prof.hook_profile()
    d = mu.size
    basis = ring_.basis(d)
    vanishing = [lam for lam in enumerate_hooks(hook, d, "up-to") if lam != mu]
    rows = [[g.evaluate(point(lam)) for g in basis] for lam in vanishing]
    rhs = [to_scalar(0)] * len(rows)
    mu_row = [g.evaluate(point(mu)) for g in basis]
    degenerate = not norm
    rows.append(mu_row)
    rhs.append(to_scalar(0) if degenerate else norm)
    target_dim = 1 if degenerate else 0
    constraints = {"vanishing": [str(lam) for lam in vanishing], "normalization_point": str(mu), "extra": []}

    extra_sizes = iter(range(d + 1, d + slack + 1))
    while True:
        matrix = ExactMatrix(rows, len(basis))
        if degenerate:
            kernel = matrix.nullspace()
            if not kernel:
                raise InterpolationError(f"Only the zero polynomial satisfies the constraints for {mu}", 0, constraints)
            dim = len(kernel)
        else:
            solved = matrix.solve_affine(rhs)
            if solved is None:
                raise InterpolationError(f"Inconsistent interpolation constraints for {mu}", -1, constraints)
            particular, kernel = solved
            dim = len(kernel)
        if dim == target_dim:
            break
        size = next(extra_sizes, None)
        if size is None:
            raise InterpolationError(
                f"Solution space for {mu} is still {dim}-dimensional after {slack} extra-vanishing levels",
                dim, constraints)
        added = hooks_not_containing(mu, hook, size, size)
        logger.warning(f"{mu}: solution space dim {dim}, adding {len(added)} extra-vanishing points of size {size}")
        for lam in added:
            rows.append([g.evaluate(point(lam)) for g in basis])
            rhs.append(to_scalar(0))
            constraints["extra"].append(str(lam))

    if degenerate:
        poly = combine(basis, kernel[0]).leading_scaled(ring_.even_basis(d))
    else:
        poly = combine(basis, particular)
    return poly, dim, constraints


def solve_interpolation(mu: Partition, prof: SusyProfile, slack: int = DEFAULT_SLACK) -> InterpResult:
    """
    Interpolation polynomial I_μ in Λ⁰

    Args:
        mu: (p,q)-hook
        prof: Profile with x/y variable names
        slack: Number of extra-vanishing levels allowed when the reduced
            constraints leave the solution undetermined

    Returns:
        InterpResult whose polynomial vanishes at 2λ♮+ρ for every other
        hook λ with |λ| <= |μ|

    Raises:
        InterpolationError: inconsistent or underdetermined system
    """
    if not is_hook(mu, prof.hook_profile()):
        raise ValueError(f"{mu} is not a ({prof.p},{prof.q})-hook")
    norm = normalization_value(mu, prof)
    poly, dim, constraints = _solve(mu, prof, SusyRing.lambda0(prof), lambda lam: eval_point(lam, prof), norm, slack)
    if not norm:
        logger.warning(f"Degenerate normalization for I_{mu}, scaled by leading coefficient")
    return InterpResult(mu, poly, dim, norm, not norm, constraints)


def solve_general(mu: Partition, prof: SusyProfile, params: DeformedParams,
                  slack: int = DEFAULT_SLACK) -> InterpResult:
    """J_μ(z, w; k, h), vanishing at λ♮ for the other hooks of size <= |μ|"""
    if not params.is_generic:
        raise ValueError(f"Deformation parameter k must not be a positive rational, got {format_scalar(params.k)}")
    if not is_hook(mu, prof.hook_profile()):
        raise ValueError(f"{mu} is not a ({prof.p},{prof.q})-hook")
    deformed = prof.renamed("z", "w")
    norm = general_normalization(mu, params)
    ring_ = SusyRing.deformed(deformed, params)
    poly, dim, constraints = _solve(mu, deformed, ring_, lambda lam: natural_point(lam, deformed), norm, slack)
    return InterpResult(mu, poly, dim, norm, not norm, constraints, params)


def result_point(res: InterpResult, lam: Partition, prof: SusyProfile) -> List[Scalar]:
    return natural_point(lam, prof) if res.params is not None else eval_point(lam, prof)


def verify_extra_vanishing(res: InterpResult, mu: Partition, prof: SusyProfile,
                           slack: int = DEFAULT_SLACK) -> List[Tuple[Partition, Scalar]]:
    """Hooks λ ⊉ μ with |λ| <= |μ|+slack where the polynomial does not vanish"""
    failures = []
    for lam in hooks_not_containing(mu, prof.hook_profile(), 0, mu.size + slack):
        value = res.poly.evaluate(result_point(res, lam, prof))
        if value:
            failures.append((lam, value))
    if failures:
        logger.warning(f"Extra vanishing fails for {mu} at {len(failures)} points")
    return failures


def closed_form_11(mu: Partition) -> ExactPoly:
    """
    Product formula for I_μ at p = q = 1, μ = (a, 1^b) nonempty

    (x²-y²) Π_{1<=i<a} (x²-(2i-1)²) Π_{1<=j<=b} (y²-(2j-1)²), normalized like solve_interpolation.
    """
    prof = SusyProfile(1, 1)
    if not mu.parts:
        raise ValueError("Product formula needs a nonempty hook")
    if not is_hook(mu, prof.hook_profile()):
        raise ValueError(f"{mu} is not a (1,1)-hook")
    vars = prof.variables
    x2 = ExactPoly.variable(vars, "x1") ** 2
    y2 = ExactPoly.variable(vars, "y1") ** 2
    a, b = mu.part(1), len(mu) - 1
    poly = x2 - y2
    for i in range(1, a):
        poly = poly * (x2 - (2 * i - 1) ** 2)
    for j in range(1, b + 1):
        poly = poly * (y2 - (2 * j - 1) ** 2)
    norm = normalization_value(mu, prof)
    if not norm:
        return poly.leading_scaled(SusyRing.lambda0(prof).even_basis(mu.size))
    return poly * (norm / poly.evaluate(eval_point(mu, prof)))


def general_to_specialized(res: InterpResult, prof: SusyProfile) -> ExactPoly:
    """Pull a J_μ back to the x/y variables with z = (x-ρ)/2, w = (y-ρ)/2"""
    return tau_map(res.poly, prof)


def evaluation_table(prof: SusyProfile, d: int, params: Optional[DeformedParams] = None,
                     slack: int = DEFAULT_SLACK) -> Tuple[List[Partition], List[List[Scalar]]]:
    """
    Matrix of values [P_μ(point(λ))] over all hooks of size <= d

    Rows are μ and columns λ, both in hook order. P_μ is I_μ at points
    2λ♮+ρ, or J_μ at points λ♮ when params are given.
    """
    hooks = enumerate_hooks(prof.hook_profile(), d, "up-to")
    table = []
    for mu in hooks:
        if params is None:
            res = solve_interpolation(mu, prof, slack)
        else:
            res = solve_general(mu, prof, params, slack)
        table.append([res.poly.evaluate(result_point(res, lam, prof)) for lam in hooks])
    return hooks, table


def degenerate_hooks(prof: SusyProfile, d: int, params: DeformedParams) -> List[Partition]:
    """Hooks of size <= d whose general normalization vanishes at (k, h)"""
    return [mu for mu in enumerate_hooks(prof.hook_profile(), d, "up-to") if not general_normalization(mu, params)]


def is_upper_triangular(hooks: Sequence[Partition], table: Sequence[Sequence[Scalar]]) -> bool:
    """Zero below the diagonal in hook order and nonzero on it"""
    order = sorted(range(len(hooks)), key=lambda n: hook_order_key(hooks[n]))
    for r, row in enumerate(order):
        if not table[row][row]:
            return False
        for col in order[:r]:
            if table[row][col]:
                return False
    return True


def table_to_csv(hooks: Sequence[Partition], table: Sequence[Sequence[Scalar]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["mu\\lambda"] + [str(lam) for lam in hooks])
    for mu, row in zip(hooks, table):
        writer.writerow([str(mu)] + [format_scalar(v) for v in row])
    return buffer.getvalue()


__all__ = [
    'InterpolationError', 'RhoVector', 'InterpResult', 'rho', 'varrho', 'eval_point', 'natural_point',
    'normalization_value', 'general_normalization', 'solve_interpolation', 'solve_general',
    'verify_extra_vanishing', 'closed_form_11', 'general_to_specialized', 'evaluation_table', 'degenerate_hooks',
    'is_upper_triangular', 'table_to_csv', 'DEFAULT_SLACK',
]
