"""Even supersymmetric polynomial rings

SusyRing is the deformed ring of polynomials f(z, w) that are symmetric and
even in u_i = z_i - c_i and v_j = w_j - d_j, and invariant under the shift
z_i -> z_i + 1, w_j -> w_j - 1 on the hyperplane u_i - k v_j + (1+k)/2 = 0.
The ring Λ⁰ of the symmetric pair is the special case c = d = 0, k = -1, where
the hyperplane becomes x_i + y_j = 0.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Dict, List, Sequence, Tuple

from sympy.polys.appellseqs import dup_bernoulli
from sympy.polys.domains import QQ
from sympy.utilities.iterables import multiset_permutations

from .exactpoly import ExactMatrix, ExactPoly, Scalar, ZERO, combine, rational, scalar_div, to_scalar
from .partitions import HookProfile, Partition, enumerate_hooks, hook_order_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SusyProfile:
    """Numbers of bosonic and fermionic variables and their names"""
    p: int
    q: int
    bosonic: str = "x"
    fermionic: str = "y"

    def __post_init__(self):
        if self.p < 1 or self.q < 0:
            raise ValueError(f"SusyProfile needs p >= 1 and q >= 0, got ({self.p},{self.q})")
        if self.bosonic == self.fermionic:
            raise ValueError("Bosonic and fermionic variable names must differ")

    @property
    def bosonic_vars(self) -> Tuple[str, ...]:
        return tuple(f"{self.bosonic}{i}" for i in range(1, self.p + 1))

    @property
    def fermionic_vars(self) -> Tuple[str, ...]:
        return tuple(f"{self.fermionic}{j}" for j in range(1, self.q + 1))

    @property
    def variables(self) -> Tuple[str, ...]:
        return self.bosonic_vars + self.fermionic_vars

    def renamed(self, bosonic: str, fermionic: str) -> 'SusyProfile':
        return SusyProfile(self.p, self.q, bosonic, fermionic)

    def hook_profile(self) -> HookProfile:
        return HookProfile(self.p, self.q)


@dataclass(frozen=True)
class DeformedParams:
    """Deformation parameters (k, h) of the interpolation problem"""
    k: Any
    h: Any

    def __post_init__(self):
        object.__setattr__(self, 'k', to_scalar(self.k))
        object.__setattr__(self, 'h', to_scalar(self.h))
        if not self.k:
            raise ValueError("Deformation parameter k must be nonzero")

    @classmethod
    def specialized(cls, prof: SusyProfile) -> 'DeformedParams':
        """k = -1, h = p - q + 1/2, the parameters of the symmetric pair"""
        return cls(-1, rational(2 * (prof.p - prof.q) + 1, 2))

    @property
    def is_generic(self) -> bool:
        return not (not self.k.y and self.k.x > 0)


def deformed_rho(prof: SusyProfile, params: DeformedParams) -> Tuple[List[Scalar], List[Scalar]]:
    """
    Centers (ϱ^B, ϱ^F) of the deformed ring

    ϱ^B_i = -(h + k i),  ϱ^F_j = -(h + k/2 - 1/2 + j + k p)/k
    """
    k, h = params.k, params.h
    half = rational(1, 2)
    bosonic = [-(h + k * i) for i in range(1, prof.p + 1)]
    fermionic = [-scalar_div(h + k * half - half + j + k * prof.p, k) for j in range(1, prof.q + 1)]
    return bosonic, fermionic


def _monomial_symmetric(values: Sequence[ExactPoly], shape: Partition, vars: Tuple[str, ...]) -> ExactPoly:
    """m_shape(values) with values padded by zero exponents"""
    n = len(values)
    if len(shape) > n:
        return ExactPoly(vars)
    exponents = list(shape.parts) + [0] * (n - len(shape))
    total = ExactPoly(vars)
    for perm in multiset_permutations(exponents):
        term = ExactPoly.constant(vars, 1)
        for value, e in zip(values, perm):
            if e:
                term = term * value ** e
        total = total + term
    return total


def _bounded_partitions(max_len: int, size: int) -> List[Partition]:
    if max_len == 0:
        return [Partition(())] if size == 0 else []
    found = enumerate_hooks(HookProfile(max_len, 1), size, "exact")
    return [lam for lam in found if len(lam) <= max_len]


@dataclass
class SusyRing:
    """
    Deformed even supersymmetric ring

    Args:
        prof: Variable profile
        k: Deformation of the fermionic form, -1 for the symmetric pair
        bosonic_center: Evenness centers c_i of the z-variables
        fermionic_center: Evenness centers d_j of the w-variables
    """
    prof: SusyProfile
    k: Any = -1
    bosonic_center: Sequence[Any] = ()
    fermionic_center: Sequence[Any] = ()
    _basis_cache: Dict[int, List[ExactPoly]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.k = to_scalar(self.k)
        self.bosonic_center = tuple(to_scalar(c) for c in self.bosonic_center) or (ZERO,) * self.prof.p
        self.fermionic_center = tuple(to_scalar(c) for c in self.fermionic_center) or (ZERO,) * self.prof.q
        if len(self.bosonic_center) != self.prof.p or len(self.fermionic_center) != self.prof.q:
            raise ValueError("Centers must match the profile")

    @classmethod
    def lambda0(cls, prof: SusyProfile) -> 'SusyRing':
        return cls(prof)

    @classmethod
    def deformed(cls, prof: SusyProfile, params: DeformedParams) -> 'SusyRing':
        bosonic, fermionic = deformed_rho(prof, params)
        return cls(prof, params.k, bosonic, fermionic)

    @property
    def vars(self) -> Tuple[str, ...]:
        return self.prof.variables

    def _var(self, name: str) -> ExactPoly:
        return ExactPoly.variable(self.vars, name)

    def shifted_coordinates(self) -> Tuple[List[ExactPoly], List[ExactPoly]]:
        u = [self._var(z) - c for z, c in zip(self.prof.bosonic_vars, self.bosonic_center)]
        v = [self._var(w) - d for w, d in zip(self.prof.fermionic_vars, self.fermionic_center)]
        return u, v

    def even_basis(self, d: int) -> List[ExactPoly]:
        """
        Products m_a(u²) m_b(v²) with |a| + |b| <= d

        Ordered by |a|+|b|, then |a| descending, then partition order.
        """
        u, v = self.shifted_coordinates()
        u2 = [x * x for x in u]
        v2 = [y * y for y in v]
        basis = []
        for total in range(d + 1):
            for size_a in range(total, -1, -1):
                for a in _bounded_partitions(self.prof.p, size_a):
                    for b in _bounded_partitions(self.prof.q, total - size_a):
                        basis.append(_monomial_symmetric(u2, a, self.vars) * _monomial_symmetric(v2, b, self.vars))
        return basis

    def _translation_defect(self, f: ExactPoly, i: int, j: int, s: int = 1, t: int = -1) -> ExactPoly:
        """f(X + s e_i + t d_j) - f(X) restricted to its isotropic hyperplane"""
        z = self.prof.bosonic_vars[i]
        w = self.prof.fermionic_vars[j]
        shifted = f.substitute({z: self._var(z) + s, w: self._var(w) + t})
        # s u_i + k t v_j + (1+k)/2 = 0 solved for z_i
        v_j = self._var(w) - self.fermionic_center[j]
        offset = (1 + self.k) * rational(1, 2)
        z_on_plane = (v_j * (self.k * t) + offset) * (-s) + self.bosonic_center[i]
        return (shifted - f).substitute({z: z_on_plane})

    def translation_constraint(self, f: ExactPoly, i: int = 0, j: int = 0) -> ExactPoly:
        return self._translation_defect(f, i, j)

    def is_w0_invariant(self, f: ExactPoly) -> bool:
        """Invariance under sign changes and adjacent transpositions of u and v"""
        u, v = self.shifted_coordinates()
        for names, coords, centers in ((self.prof.bosonic_vars, u, self.bosonic_center),
                                       (self.prof.fermionic_vars, v, self.fermionic_center)):
            for idx, name in enumerate(names):
                flipped = f.substitute({name: -coords[idx] + centers[idx]})
                if flipped != f:
                    return False
            for idx in range(len(names) - 1):
                a, b = names[idx], names[idx + 1]
                swapped = f.substitute({a: coords[idx + 1] + centers[idx], b: coords[idx] + centers[idx + 1]})
                if swapped != f:
                    return False
        return True

    def contains(self, f: ExactPoly) -> bool:
        """W₀-invariance plus the translation condition for every isotropic pair"""
        if f.vars != self.vars:
            raise ValueError(f"Polynomial variables {f.vars} do not match ring {self.vars}")
        if not self.is_w0_invariant(f):
            return False
        return all(self._translation_defect(f, i, j).is_zero
                   for i in range(self.prof.p) for j in range(self.prof.q))

    def contains_reduced(self, f: ExactPoly) -> bool:
        """W₀-invariance plus translation on the (1,1) hyperplane only"""
        if not self.is_w0_invariant(f):
            return False
        if self.prof.q == 0:
            return True
        return self._translation_defect(f, 0, 0).is_zero

    def groupoid_contains(self, f: ExactPoly) -> bool:
        """Invariance under W₀ and every isotropic translation ±e_i ± d_j"""
        if not self.is_w0_invariant(f):
            return False
        for i in range(self.prof.p):
            for j in range(self.prof.q):
                for s, t in product((1, -1), repeat=2):
                    if not self._translation_defect(f, i, j, s, t).is_zero:
                        return False
        return True

    def basis(self, d: int) -> List[ExactPoly]:
        """Basis of the ring in degree <= 2d, from the (1,1) translation constraint"""
        if d in self._basis_cache:
            return self._basis_cache[d]
        even = self.even_basis(d)
        if self.prof.q == 0:
            self._basis_cache[d] = even
            return even
        defects = [self.translation_constraint(g) for g in even]
        monomials = sorted({exp for g in defects for exp in g.element.keys()})
        rows = [[g.coefficient(m) for g in defects] for m in monomials]
        kernel = ExactMatrix(rows, len(even)).nullspace()
        result = [combine(even, vec) for vec in kernel]
        logger.debug(f"Ring basis up to degree {2 * d}: {len(result)} of {len(even)} even elements")
        self._basis_cache[d] = result
        return result


def even_sym_basis(prof: SusyProfile, d: int) -> List[ExactPoly]:
    return SusyRing.lambda0(prof).even_basis(d)


def lambda0_basis(prof: SusyProfile, d: int) -> List[ExactPoly]:
    return SusyRing.lambda0(prof).basis(d)


def is_in_lambda0(f: ExactPoly, prof: SusyProfile) -> bool:
    return SusyRing.lambda0(prof).contains(f)


def groupoid_equivalence_check(f: ExactPoly, prof: SusyProfile) -> bool:
    """
    Compare the two characterizations of Λ⁰

    Returns:
        True iff (W₀ + translation on all isotropic hyperplanes, all sign
        variants) and (W₀ + translation on the (1,1) hyperplane) agree on f
    """
    ring_ = SusyRing.lambda0(prof)
    return ring_.groupoid_contains(f) == ring_.contains_reduced(f)


def rho_components(prof: SusyProfile) -> Tuple[List[int], List[int]]:
    """ρ_i = 2(p-i)+1-2q on the bosonic side, ρ_j = 2(q-j)+1 on the fermionic side"""
    bosonic = [2 * (prof.p - i) + 1 - 2 * prof.q for i in range(1, prof.p + 1)]
    fermionic = [2 * (prof.q - j) + 1 for j in range(1, prof.q + 1)]
    return bosonic, fermionic


def tau_map(f: ExactPoly, prof: SusyProfile) -> ExactPoly:
    """
    Change of variables z_i -> (x_i - ρ_i)/2, w_j -> (y_j - ρ_j)/2

    Args:
        f: Polynomial in the deformed variables, p bosonic then q fermionic
        prof: Target profile (x, y names)
    """
    if len(f.vars) != prof.p + prof.q:
        raise ValueError(f"Expected {prof.p + prof.q} variables, got {len(f.vars)}")
    target = prof.variables
    rho_b, rho_f = rho_components(prof)
    half = rational(1, 2)
    assignment = {}
    for source, name, r in zip(f.vars, target, rho_b + rho_f):
        assignment[source] = (ExactPoly.variable(target, name) - r) * half
    return f.substitute(assignment)


@lru_cache(maxsize=None)
def bernoulli_coefficients(n: int) -> Tuple[Any, ...]:
    """Coefficients of B_n, highest degree first"""
    return tuple(dup_bernoulli(n, QQ))


def bernoulli_of(n: int, arg: ExactPoly) -> ExactPoly:
    result = ExactPoly(arg.vars)
    for c in bernoulli_coefficients(n):
        result = result * arg + to_scalar(c)
    return result


def bernoulli_generator(l: int, prof: SusyProfile, params: DeformedParams) -> ExactPoly:
    """
    Bernoulli generator of the deformed ring in the z, w variables

    f_l = Σ_i [B_2l(z_i + h + k i + 1/2) - B_2l(h + k i + 1/2)]
        + k^(2l-1) Σ_j [B_2l(w_j + h/k - 1/(2k) + j/k + 1 + p) - B_2l(h/k - 1/(2k) + j/k + 1 + p)]
    """
    if l < 1:
        raise ValueError(f"Bernoulli generator index must be positive, got {l}")
    deformed = prof.renamed("z", "w")
    vars = deformed.variables
    k, h = params.k, params.h
    half = rational(1, 2)
    n = 2 * l
    f = ExactPoly(vars)
    for i, z in enumerate(deformed.bosonic_vars, start=1):
        shift = h + k * i + half
        f = f + bernoulli_of(n, ExactPoly.variable(vars, z) + shift) - bernoulli_of(n, ExactPoly.constant(vars, shift))
    weight = k ** (n - 1)
    for j, w in enumerate(deformed.fermionic_vars, start=1):
        shift = scalar_div(h, k) - scalar_div(half, k) + scalar_div(j, k) + 1 + prof.p
        f = f + (bernoulli_of(n, ExactPoly.variable(vars, w) + shift)
                 - bernoulli_of(n, ExactPoly.constant(vars, shift))) * weight
    return f


def hook_count(prof: SusyProfile, d: int) -> int:
    return len(enumerate_hooks(prof.hook_profile(), d, "up-to"))


__all__ = [
    'SusyProfile', 'DeformedParams', 'SusyRing', 'deformed_rho', 'even_sym_basis', 'lambda0_basis',
    'is_in_lambda0', 'groupoid_equivalence_check', 'rho_components', 'tau_map', 'bernoulli_generator',
    'bernoulli_coefficients', 'hook_count', 'hook_order_key',
]
