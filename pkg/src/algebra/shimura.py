"""
Shimura operators D_μ for (gl(2|2), gl(1|1)⊕gl(1|1))

S^d(p⁺) splits into k-isotypic components W_μ, one per (1,1)-hook μ of size d.
D_μ pairs a basis of W_μ with its dual basis in S^d(p⁻) through the supertrace
form and multiplies the two inside the enveloping algebra.
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .exactpoly import ExactMatrix, ExactPoly, ONE, Scalar, ZERO, format_scalar, proportionality, to_scalar
from .interp import InterpResult, eval_point, solve_interpolation
from .kacrep import KacModule, format_kac_vector
from .borel import kac_weight_11, hook_from_natural_11
from .partitions import HookProfile, Partition, enumerate_hooks, lambda_natural
from .superlie import DecompositionError, SuperElt, check_k_invariant, gamma, gl22, named
from .susyring import SusyProfile, is_in_lambda0

logger = logging.getLogger(__name__)

MAX_DEGREE = 3
PAIRING_CONVENTION = "monomial-factorial"
PROFILE = SusyProfile(1, 1)

Exps = Tuple[int, ...]
SymVector = Dict[Exps, Scalar]


def _add(target: Dict[Any, Scalar], key: Any, value: Scalar) -> None:
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def supertrace_pairing(y: Dict[int, Any], x: Dict[int, Any]) -> Scalar:
    """str(YX) for gl(2|2) elements in E coordinates"""
    total = ZERO
    for yi, yc in y.items():
        a, b = divmod(yi, 4)
        for xi, xc in x.items():
            c, d = divmod(xi, 4)
            if b == c and a == d:
                total = total + to_scalar(yc) * to_scalar(xc) * (1 if a < 2 else -1)
    return total


class SuperSymmetricAlgebra:
    """
    Free supercommutative algebra on elementary gl(2|2) generators

    Monomials are exponent tuples in generator order with odd exponents <= 1;
    they stand for the ordered product of the generators.
    """

    def __init__(self, labels: Sequence[str]):
        self.labels = list(labels)
        self.vectors = [named(x) for x in labels]
        if any(len(v) != 1 for v in self.vectors):
            raise ValueError("Generators must be elementary matrices")
        self.e_index = [next(iter(v)) for v in self.vectors]
        alg = gl22()
        self.parities = [alg.parities[i] for i in self.e_index]

    @property
    def n(self) -> int:
        return len(self.labels)

    def monomials(self, d: int) -> List[Exps]:
        bounds = [1 if p else d for p in self.parities]
        found = [e for e in product(*(range(b + 1) for b in bounds)) if sum(e) == d]
        return sorted(found, reverse=True)

    def parity(self, exps: Exps) -> int:
        return sum(e for e, p in zip(exps, self.parities) if p) % 2

    def letters(self, exps: Exps) -> List[int]:
        return [i for i, e in enumerate(exps) for _ in range(e)]

    def multiply(self, m: Exps, n: Exps) -> Optional[Tuple[int, Exps]]:
        sign = 1
        for i, (a, p) in enumerate(zip(m, self.parities)):
            if not (p and a):
                continue
            if n[i]:
                return None
            sign *= (-1) ** sum(1 for j in range(i) if self.parities[j] and n[j])
        return sign, tuple(a + b for a, b in zip(m, n))

    def mul(self, f: SymVector, g: SymVector) -> SymVector:
        out: SymVector = {}
        for m, a in f.items():
            for n, b in g.items():
                prod_ = self.multiply(m, n)
                if prod_ is not None:
                    _add(out, prod_[1], a * b * prod_[0])
        return out

    def generator(self, i: int) -> SymVector:
        return {tuple(1 if j == i else 0 for j in range(self.n)): ONE}

    def apply_derivation(self, f: SymVector, parity: int, images: Sequence[SymVector]) -> SymVector:
        """Left superderivation of the given parity determined by its values on generators"""
        out: SymVector = {}
        one = tuple([0] * self.n)
        for m, c in f.items():
            letters = self.letters(m)
            for t, letter in enumerate(letters):
                if not images[letter]:
                    continue
                left: SymVector = {one: ONE}
                for i in letters[:t]:
                    left = self.mul(left, self.generator(i))
                right: SymVector = {one: ONE}
                for i in letters[t + 1:]:
                    right = self.mul(right, self.generator(i))
                crossed = sum(self.parities[i] for i in letters[:t]) % 2
                sign = -1 if parity and crossed else 1
                for m2, c2 in self.mul(self.mul(left, images[letter]), right).items():
                    _add(out, m2, c * c2 * sign)
        return out

    def adjoint_images(self, x: Dict[int, Any]) -> List[SymVector]:
        """[x, g_i] expressed in the generators; raises when it leaves their span"""
        alg = gl22()
        images = []
        for vec in self.vectors:
            br = alg.bracket_vectors(x, vec)
            image: SymVector = {}
            for e, c in br.items():
                if e not in self.e_index:
                    raise ValueError(f"{alg.format_vector(br)} is not in the span of {self.labels}")
                image[self.generator(self.e_index.index(e)).popitem()[0]] = c
            images.append(image)
        return images

    def act(self, x: Dict[int, Any], f: SymVector) -> SymVector:
        alg = gl22()
        return self.apply_derivation(f, alg.vector_parity(x), self.adjoint_images(x))

    def weight(self, exps: Exps) -> Tuple[int, int, int, int]:
        total = [0, 0, 0, 0]
        for e_index, e in zip(self.e_index, exps):
            i, j = divmod(e_index, 4)
            total[i] += e
            total[j] -= e
        return tuple(total)

    def embed(self, f: SymVector) -> SuperElt:
        """Ordered product of generators inside the enveloping algebra"""
        return SuperElt({tuple(self.e_index[i] for i in self.letters(m)): c for m, c in f.items()})

    def format(self, f: SymVector) -> str:
        if not f:
            return "0"
        pieces = []
        for m in sorted(f, reverse=True):
            body = "*".join(f"{self.labels[i]}^{e}" if e > 1 else self.labels[i] for i, e in enumerate(m) if e)
            pieces.append(f"({format_scalar(f[m])})*{body or '1'}")
        return " + ".join(pieces)


P_PLUS = SuperSymmetricAlgebra(["X1", "X2", "eta12", "xi12"])
P_MINUS = SuperSymmetricAlgebra(["Y1", "Y2", "eta21", "xi21"])

RAISING = ["eta11", "xi22"]
LOWERING = ["xi11", "eta22"]


def pairing(f: Exps, g: SymVector) -> Scalar:
    """
    ∂_f g for a monomial f of S(p⁻) and g in S(p⁺)

    ∂_Y is the left superderivation with ∂_Y X = str(YX), and
    ∂_{f1⋯fd} = ∂_{f1} ∘ ⋯ ∘ ∂_{fd}.
    """
    zero = tuple([0] * P_PLUS.n)
    current = dict(g)
    for letter in reversed(P_MINUS.letters(f)):
        y = P_MINUS.vectors[letter]
        values = [supertrace_pairing(y, x) for x in P_PLUS.vectors]
        images = [{zero: c} if c else {} for c in values]
        current = P_PLUS.apply_derivation(current, P_MINUS.parities[letter], images)
        if not current:
            return ZERO
    return current.get(zero, ZERO)


def gram_matrix(minus: Sequence[Exps], plus: Sequence[SymVector]) -> List[List[Scalar]]:
    return [[pairing(f, g) for g in plus] for f in minus]


def _weight_target(mu: Partition) -> Tuple[int, int, int, int]:
    natural = lambda_natural(mu, HookProfile(1, 1))
    a, b = natural.bosonic[0], natural.fermionic[0]
    return a, -a, b, -b


def _check_degree(d: int) -> None:
    if not 0 <= d <= MAX_DEGREE:
        raise ValueError(f"Shimura degree must be between 0 and {MAX_DEGREE}, got {d}")


def highest_weight_vector(mu: Partition) -> SymVector:
    """
    The vector of S^|μ|(p⁺) of weight (a, -a | b, -b), λ♮ = (a | b), killed by η11 and ξ22

    Raises:
        DecompositionError: no such vector, or more than one up to scale
    """
    _check_degree(mu.size)
    target = _weight_target(mu)
    space = [m for m in P_PLUS.monomials(mu.size) if P_PLUS.weight(m) == target]
    if not space:
        raise DecompositionError(f"No monomials of weight {target} in degree {mu.size}")
    columns = []
    for m in space:
        image = {}
        for label in RAISING:
            for m2, c in P_PLUS.act(named(label), {m: ONE}).items():
                image[(label, m2)] = c
        columns.append(image)
    rows_index = sorted({r for col in columns for r in col})
    rows = [[col.get(r, ZERO) for col in columns] for r in rows_index]
    kernel = ExactMatrix(rows, len(space)).nullspace()
    if len(kernel) != 1:
        raise DecompositionError(f"Expected one highest weight vector for {mu}, found {len(kernel)}")
    return {m: c for m, c in zip(space, kernel[0]) if c}


def _rank(vectors: Sequence[SymVector]) -> int:
    keys = sorted({k for v in vectors for k in v})
    if not keys:
        return 0
    return ExactMatrix([[v.get(k, ZERO) for v in vectors] for k in keys], len(vectors)).rank()


def lowering_closure(v: SymVector) -> List[SymVector]:
    """Independent vectors spanning the k-submodule generated by a highest weight vector"""
    basis = [v]
    queue = [v]
    while queue:
        current = queue.pop(0)
        for label in LOWERING:
            image = P_PLUS.act(named(label), current)
            if image and _rank(basis + [image]) > len(basis):
                basis.append(image)
                queue.append(image)
    return basis


@lru_cache(maxsize=None)
def isotypic_decomposition(d: int) -> Dict[Partition, Tuple[SymVector, ...]]:
    """
    S^d(p⁺) as a sum of the components W_μ, |μ| = d

    Raises:
        DecompositionError: the components do not add up to S^d(p⁺)
    """
    _check_degree(d)
    components: Dict[Partition, Tuple[SymVector, ...]] = {}
    for mu in enumerate_hooks(HookProfile(1, 1), d, "exact"):
        if d == 0:
            components[mu] = ({tuple([0] * P_PLUS.n): ONE},)
        else:
            components[mu] = tuple(lowering_closure(highest_weight_vector(mu)))
    everything = [v for basis in components.values() for v in basis]
    expected = len(P_PLUS.monomials(d))
    if len(everything) != expected or _rank(everything) != expected:
        raise DecompositionError(f"Components of degree {d} span {_rank(everything)} of {expected} dimensions")
    logger.debug(f"Degree {d}: " + ", ".join(f"{mu}:{len(b)}" for mu, b in components.items()))
    return components


def dual_basis(mu: Partition) -> Tuple[List[SymVector], List[SymVector]]:
    """
    Basis of W_μ and the dual vectors in S^|μ|(p⁻) under the derivation pairing

    The full Gram matrix of all p⁻ monomials against the union of the W_ν
    bases is inverted, so the dual vectors pair to zero with every other
    component.

    Raises:
        DecompositionError: singular Gram matrix
    """
    components = isotypic_decomposition(mu.size)
    adapted, offset = [], 0
    for nu, basis in components.items():
        if nu == mu:
            offset = len(adapted)
        adapted.extend(basis)
    monomials = P_MINUS.monomials(mu.size)
    gram = ExactMatrix(gram_matrix(monomials, adapted), len(adapted))
    if gram.rank() != len(adapted):
        raise DecompositionError(f"Singular Gram matrix in degree {mu.size}")
    inverse = gram.inverse()
    basis = list(components[mu])
    duals = []
    for j in range(len(basis)):
        row = inverse.rows[offset + j]
        duals.append({m: c for m, c in zip(monomials, row) if c})
    return basis, duals


@dataclass
class ShimuraOp:
    mu: Partition
    element: SuperElt
    basis: List[SymVector] = field(default_factory=list)
    duals: List[SymVector] = field(default_factory=list)

    @property
    def degree(self) -> int:
        return self.element.degree


@lru_cache(maxsize=None)
def shimura_operator(mu: Partition) -> ShimuraOp:
    """D_μ = Σ_ℓ (-1)^{|v_ℓ|} v*_ℓ v_ℓ with p⁻ letters on the left"""
    if not mu.parts:
        return ShimuraOp(mu, SuperElt.scalar(1))
    basis, duals = dual_basis(mu)
    element = SuperElt()
    for v, dual in zip(basis, duals):
        sign = -1 if P_PLUS.parity(next(iter(v))) else 1
        element = element + P_MINUS.embed(dual) * P_PLUS.embed(v) * sign
    return ShimuraOp(mu, element, basis, duals)


def check_invariance(op: ShimuraOp) -> List[str]:
    """k-generators that fail to commute with D_μ"""
    return check_k_invariant(op.element)


@lru_cache(maxsize=None)
def gamma_of_shimura(mu: Partition) -> ExactPoly:
    """
    Γ(D_μ) as a polynomial in (x1, y1)

    Raises:
        DecompositionError: Γ(D_μ) vanishes
    """
    _check_degree(mu.size)
    poly = gamma(shimura_operator(mu).element, check=False)
    if poly.is_zero:
        raise DecompositionError(f"Γ(D_{mu}) is zero")
    return poly


@dataclass
class ShimuraReport:
    mu: Partition
    gamma: ExactPoly
    constant: Optional[Scalar]
    degenerate: bool
    in_lambda0: bool
    vanishing_failures: List[str]
    invariance_failures: List[str]

    @property
    def ok(self) -> bool:
        return (self.constant is not None and bool(self.constant) and self.in_lambda0
                and not self.vanishing_failures and not self.invariance_failures)

    def to_json(self) -> Dict[str, Any]:
        return {
            "mu": self.mu.to_json(),
            "gamma": self.gamma.to_json(),
            "c_mu": None if self.constant is None else format_scalar(self.constant),
            "degenerate": self.degenerate,
            "in_lambda0": self.in_lambda0,
            "vanishing_failures": self.vanishing_failures,
            "invariance_failures": self.invariance_failures,
            "pairing": PAIRING_CONVENTION,
            "ok": self.ok,
        }


def proportionality_constant(mu: Partition, interp: Optional[InterpResult] = None) -> Tuple[Optional[Scalar], bool]:
    """
    c_μ with Γ(D_μ) = c_μ I_μ, and whether I_μ had a degenerate normalization

    In the degenerate case I_μ is scaled by its leading coefficient, so c_μ
    is the ratio of leading coefficients.
    """
    interp = interp or solve_interpolation(mu, PROFILE)
    constant = proportionality(gamma_of_shimura(mu), interp.poly)
    if interp.degenerate_flag:
        logger.warning(f"c_{mu} taken as a ratio of leading coefficients")
    if constant is None:
        logger.error(f"Γ(D_{mu}) is not proportional to I_{mu}")
    return constant, interp.degenerate_flag


def verify_shimura(mu: Partition, extra_slack: int = 2, check_invariant: bool = True) -> ShimuraReport:
    """Γ(D_μ) against I_μ: proportionality, membership in Λ⁰ and vanishing"""
    poly = gamma_of_shimura(mu)
    constant, degenerate = proportionality_constant(mu)
    hook = HookProfile(1, 1)
    failures = []
    points = [lam for lam in enumerate_hooks(hook, mu.size, "up-to") if lam != mu]
    points += [lam for lam in enumerate_hooks(hook, mu.size + extra_slack, "up-to")
               if lam.size > mu.size and not lam.contains(mu)]
    for lam in points:
        value = poly.evaluate(eval_point(lam, PROFILE))
        if value:
            failures.append(f"{lam}: {format_scalar(value)}")
    invariance = check_invariance(shimura_operator(mu)) if check_invariant else []
    return ShimuraReport(mu, poly, constant, degenerate, is_in_lambda0(poly, PROFILE), failures, invariance)


def _spherical_vector(a: int, b: int) -> Tuple[KacModule, Dict]:
    module = KacModule(kac_weight_11(a, b))
    vectors = module.spherical_vectors()
    if len(vectors) != 1:
        raise DecompositionError(f"K{module.hw} has {len(vectors)} independent spherical vectors")
    return module, vectors[0]


def eigenvalue_on_spherical(a: int, b: int, mu: Partition = Partition((1,))) -> Scalar:
    """Scalar by which D_μ acts on the spherical vector of K(λ̆), λ♮ = (a | b)"""
    module, omega = _spherical_vector(a, b)
    image = module.act_element(shimura_operator(mu).element, omega)
    key, c = next(iter(omega.items()))
    scalar = image.get(key, ZERO) / c
    if any(image.get(k, ZERO) != scalar * v for k, v in omega.items()) or set(image) - set(omega):
        raise DecompositionError(f"D_{mu} does not act by a scalar on {format_kac_vector(omega)}")
    return scalar


def eigenvalue_from_gamma(a: int, b: int, mu: Partition = Partition((1,))) -> Scalar:
    """Γ(D_μ) at 2λ♮+ρ for λ = (a, 1^b)"""
    return gamma_of_shimura(mu).evaluate(eval_point(hook_from_natural_11(a, b), PROFILE))


__all__ = [
    'SuperSymmetricAlgebra', 'ShimuraOp', 'ShimuraReport', 'P_PLUS', 'P_MINUS', 'MAX_DEGREE',
    'PAIRING_CONVENTION', 'supertrace_pairing', 'pairing', 'gram_matrix', 'highest_weight_vector',
    'lowering_closure', 'isotypic_decomposition', 'dual_basis', 'shimura_operator', 'check_invariance',
    'gamma_of_shimura', 'proportionality_constant', 'verify_shimura', 'eigenvalue_on_spherical',
    'eigenvalue_from_gamma',
]
