"""
Kac modules K(λ̆) = Λ(g₋₁) ⊗ W̆(λ̆) of gl(2|2) with explicit action

g₋₁ is spanned by ξ11, ξ12, ξ21, ξ22 (in that order), g₁ by the η's, and g₀
is gl(2)⊕gl(2) acting on W̆ through ladder operators.
"""

import logging
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from .borel import kac_weight_11
from .exactpoly import ExactMatrix, ONE, Scalar, ZERO, format_scalar, to_scalar
from .superlie import SuperElt, elementary, gl22, named

logger = logging.getLogger(__name__)

Weight = Tuple[int, int, int, int]
Ladder = Tuple[int, int]
BasisKey = Tuple[Tuple[int, ...], Ladder]
KacVector = Dict[BasisKey, Scalar]

XI_LABELS = ["xi11", "xi12", "xi21", "xi22"]
ETA_LABELS = ["eta11", "eta12", "eta21", "eta22"]
XI = [elementary(3, 1), elementary(3, 2), elementary(4, 1), elementary(4, 2)]
ETA = [elementary(1, 3), elementary(1, 4), elementary(2, 3), elementary(2, 4)]
G0 = [elementary(i, j) for i, j in ((1, 1), (1, 2), (2, 1), (2, 2), (3, 3), (3, 4), (4, 3), (4, 4))]
K_GENERATORS = ["E11", "E22", "E33", "E44", "eta11", "xi11", "eta22", "xi22"]


def _add(target: Dict[Any, Scalar], key: Any, value: Scalar) -> None:
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


def root_weight(e_index: int) -> Weight:
    """ε_i - ε_j for E_ij, coordinates (ε1, ε2, δ1, δ2)"""
    i, j = divmod(e_index, 4)
    w = [0, 0, 0, 0]
    w[i] += 1
    w[j] -= 1
    return tuple(w)


@dataclass(frozen=True)
class Gl2PairModule:
    """
    Irreducible gl(2)⊕gl(2) module of highest weight (a, b | c, d)

    Basis v(k, l), 0 <= k <= a-b, 0 <= l <= c-d, of weight (b+k, a-k | d+l, c-l).
    """
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a < self.b or self.c < self.d:
            raise ValueError(f"Highest weight ({self.a},{self.b}|{self.c},{self.d}) is not dominant")

    @property
    def m1(self) -> int:
        return self.a - self.b

    @property
    def m2(self) -> int:
        return self.c - self.d

    @property
    def dim(self) -> int:
        return (self.m1 + 1) * (self.m2 + 1)

    def basis(self) -> List[Ladder]:
        return [(k, l) for k in range(self.m1 + 1) for l in range(self.m2 + 1)]

    def weight(self, v: Ladder) -> Weight:
        k, l = v
        return self.b + k, self.a - k, self.d + l, self.c - l

    def act(self, e_index: int, v: Ladder) -> Dict[Ladder, Scalar]:
        """Action of an even elementary matrix; odd ones are rejected"""
        i, j = (x + 1 for x in divmod(e_index, 4))
        k, l = v
        if (i <= 2) != (j <= 2):
            raise ValueError(f"E{i}{j} does not act on the even part")
        if i == j:
            return {v: to_scalar(self.weight(v)[i - 1])}
        if (i, j) == (1, 2):
            return {(k + 1, l): ONE} if k < self.m1 else {}
        if (i, j) == (2, 1):
            return {(k - 1, l): to_scalar(k * (self.m1 + 1 - k))} if k > 0 else {}
        if (i, j) == (3, 4):
            return {(k, l + 1): ONE} if l < self.m2 else {}
        return {(k, l - 1): to_scalar(l * (self.m2 + 1 - l))} if l > 0 else {}


def _wedge(s: int, subset: Tuple[int, ...]) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """ξ_s ∧ ξ_subset as (sign, sorted subset), None when it vanishes"""
    if s in subset:
        return None
    before = sum(1 for x in subset if x < s)
    return (-1) ** before, tuple(sorted(subset + (s,)))


class KacModule:
    """
    K(λ̆) for a gl(2)⊕gl(2)-dominant highest weight λ̆ = (a, b | c, d)

    Example:
        module = KacModule((2, 0, -1, -1))
        module.spherical_vectors()  # one vector, ξ11ξ22 ⊗ v(1, 0)
    """

    def __init__(self, hw: Sequence[int]):
        self.hw: Weight = tuple(int(x) for x in hw)
        self.top = Gl2PairModule(*self.hw)
        self.alg = gl22()
        self._cache: Dict[Tuple[int, BasisKey], KacVector] = {}

    @property
    def dim(self) -> int:
        return 16 * self.top.dim

    def basis(self) -> List[BasisKey]:
        subsets = [s for n in range(5) for s in combinations(range(4), n)]
        return [(s, w) for s in subsets for w in self.top.basis()]

    def weight_of(self, key: BasisKey) -> Weight:
        subset, w = key
        total = list(self.top.weight(w))
        for s in subset:
            for n, x in enumerate(root_weight(XI[s])):
                total[n] += x
        return tuple(total)

    def weight_space(self, target: Sequence[int]) -> List[BasisKey]:
        target = tuple(target)
        return [key for key in self.basis() if self.weight_of(key) == target]

    def _act_basis(self, e_index: int, key: BasisKey) -> KacVector:
        cache_key = (e_index, key)
        if cache_key in self._cache:
            return self._cache[cache_key]
        subset, w = key
        out: KacVector = {}
        if e_index in XI:
            wedge = _wedge(XI.index(e_index), subset)
            if wedge is not None:
                out[(wedge[1], w)] = to_scalar(wedge[0])
        elif not subset:
            if e_index not in ETA:
                for w2, c in self.top.act(e_index, w).items():
                    out[((), w2)] = c
        else:
            # x.(ξ_s.y) = [x, ξ_s].y + (-1)^{|x|} ξ_s.(x.y)
            s, rest = subset[0], subset[1:]
            inner = (rest, w)
            for l, c in self.alg.bracket(e_index, XI[s]).items():
                for k2, c2 in self._act_basis(l, inner).items():
                    _add(out, k2, c * c2)
            sign = -1 if self.alg.parities[e_index] else 1
            for k2, c2 in self._act_basis(e_index, inner).items():
                for k3, c3 in self._act_basis(XI[s], k2).items():
                    _add(out, k3, c2 * c3 * sign)
        self._cache[cache_key] = out
        return out

    def act(self, vec: Dict[int, Any], v: KacVector) -> KacVector:
        """Action of a gl(2|2) element given in E coordinates"""
        out: KacVector = {}
        for e_index, a in vec.items():
            a = to_scalar(a)
            for key, c in v.items():
                for k2, c2 in self._act_basis(e_index, key).items():
                    _add(out, k2, a * c * c2)
        return out

    def act_named(self, label: str, v: KacVector) -> KacVector:
        return self.act(named(label), v)

    def act_element(self, u: SuperElt, v: KacVector) -> KacVector:
        """Action of an enveloping algebra element; the rightmost letter acts first"""
        out: KacVector = {}
        for word, c in u.terms.items():
            current = dict(v)
            for letter in reversed(word):
                current = self.act({letter: ONE}, current)
                if not current:
                    break
            for key, value in current.items():
                _add(out, key, value * c)
        return out

    def spherical_vectors(self) -> List[KacVector]:
        """Basis of the vectors of weight zero killed by every k-generator"""
        domain = self.weight_space((0, 0, 0, 0))
        if not domain:
            return []
        columns = []
        for key in domain:
            image: Dict[Tuple[str, BasisKey], Scalar] = {}
            for label in K_GENERATORS:
                for k2, c in self.act_named(label, {key: ONE}).items():
                    image[(label, k2)] = c
            columns.append(image)
        rows_index = sorted({r for col in columns for r in col}, key=str)
        rows = [[col.get(r, ZERO) for col in columns] for r in rows_index]
        kernel = ExactMatrix(rows, len(domain)).nullspace()
        return [{key: c for key, c in zip(domain, vec) if c} for vec in kernel]


def exterior_degree(v: KacVector) -> Optional[int]:
    degrees = {len(key[0]) for key in v}
    return degrees.pop() if len(degrees) == 1 else None


def format_kac_vector(v: KacVector) -> List[Dict[str, Any]]:
    return [
        {"xi": [XI_LABELS[s] for s in key[0]], "k": key[1][0], "l": key[1][1], "coef": format_scalar(c)}
        for key, c in sorted(v.items(), key=lambda item: (len(item[0][0]), item[0]))
    ]


def vectors_rank(vectors: Sequence[KacVector]) -> int:
    keys = sorted({k for v in vectors for k in v}, key=str)
    if not keys or not vectors:
        return 0
    return ExactMatrix([[v.get(k, ZERO) for v in vectors] for k in keys], len(vectors)).rank()


def module_action(x: Any, v: KacVector, hw: Sequence[int]) -> KacVector:
    """x is a named element ("eta12", "<0,1,1,0>") or a vector in E coordinates"""
    module = KacModule(hw)
    return module.act(named(x) if isinstance(x, str) else x, v)


def spherical_vectors(hw: Sequence[int]) -> List[KacVector]:
    return KacModule(hw).spherical_vectors()


def typicality(hw: Sequence[int]) -> bool:
    """(λ̆+ρ̆, ε_i - δ_j) != 0 for all four isotropic roots, ρ̆ = (-1,-3|3,1)/2"""
    doubled = [2 * x + r for x, r in zip(hw, (-1, -3, 3, 1))]
    return all(doubled[i] + doubled[2 + j] for i in range(2) for j in range(2))


def highest_weight_11(a: int, b: int) -> Weight:
    """Kac highest weight at p = q = 1 for natural coordinates (a | b)"""
    return kac_weight_11(a, b)


def spherical_candidate(a: int, b: int) -> KacVector:
    """ξ11ξ22 ⊗ v(a-1, b), the spherical vector when b != a-1"""
    if b == a - 1:
        raise ValueError(f"({a},{b}) lies in the b = a-1 family")
    return {((0, 3), (a - 1, b)): ONE}


def quasi_spherical_vector(a: int) -> Tuple[Weight, KacVector]:
    """λ̆ = (a, -a+1 | a-1, -a) and ω = ξ11 ⊗ v of weight (1, 0 | -1, 0)"""
    if a < 1:
        raise ValueError(f"Quasi-spherical family needs a >= 1, got {a}")
    hw = (a, -a + 1, a - 1, -a)
    return hw, {((0,), (a, a - 1)): ONE}


@dataclass
class QuasiSphericalReport:
    hw: Weight
    k_span_rank: int
    omega_prime_in_span: bool
    cyclic: bool
    eta_annihilators: Dict[str, bool]
    word_length: int
    words_checked: int
    failures: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (self.k_span_rank == 1 and self.omega_prime_in_span and self.cyclic
                and all(self.eta_annihilators.values()) and not self.failures)

    def to_json(self) -> Dict[str, Any]:
        return {
            "hw": list(self.hw),
            "k_span_rank": self.k_span_rank,
            "omega_prime_in_span": self.omega_prime_in_span,
            "cyclic": self.cyclic,
            "eta_annihilators": self.eta_annihilators,
            "g0_word_length": self.word_length,
            "words_checked": self.words_checked,
            "failures": self.failures,
            "ok": self.ok,
        }


def quasi_spherical_check(hw: Sequence[int], omega: KacVector, word_length: int = 2) -> QuasiSphericalReport:
    """
    Check that ω is cyclic while k·ω = Cω' with ω' = ξ11ξ22 ⊗ v not cyclic

    ω' is tested against every product of two η's applied after a g₀ word of
    length <= word_length.

    Raises:
        ValueError: ω is not a weight-zero vector of exterior degree one
    """
    module = KacModule(hw)
    if exterior_degree(omega) != 1 or any(module.weight_of(k) != (0, 0, 0, 0) for k in omega):
        raise ValueError("Quasi-spherical input must be a weight-zero vector in Λ¹(g₋₁) ⊗ W̆")
    images = [module.act_named(label, omega) for label in K_GENERATORS]
    images = [v for v in images if v]
    omega_prime = {((0, 3), key[1]): c for key, c in omega.items()}
    span_rank = vectors_rank(images)
    in_span = span_rank == vectors_rank(images + [omega_prime])
    cyclic = bool(module.act_named("eta12", omega))
    annihilators = {label: not module.act_named(label, omega_prime) for label in ("eta11", "eta22")}

    failures = []
    words = [()]
    for n in range(1, word_length + 1):
        words.extend(product(G0, repeat=n))
    for word in words:
        moved = dict(omega_prime)
        for letter in reversed(word):
            moved = module.act({letter: ONE}, moved)
        if not moved:
            continue
        for i, j in combinations(range(4), 2):
            result = module.act({ETA[i]: ONE}, module.act({ETA[j]: ONE}, moved))
            if result:
                labels = "*".join(gl22().labels[x] for x in word) or "1"
                failures.append(f"{ETA_LABELS[i]}*{ETA_LABELS[j]}*{labels}")
    report = QuasiSphericalReport(tuple(hw), span_rank, in_span, cyclic, annihilators,
                                  word_length, len(words) * 6, failures)
    if not report.ok:
        logger.error(f"Quasi-sphericity fails for {tuple(hw)}: {failures[:3]}")
    return report


__all__ = [
    'Gl2PairModule', 'KacModule', 'KacVector', 'QuasiSphericalReport', 'XI', 'ETA', 'G0', 'K_GENERATORS',
    'root_weight', 'exterior_degree', 'format_kac_vector', 'vectors_rank', 'module_action', 'spherical_vectors',
    'typicality', 'highest_weight_11', 'spherical_candidate', 'quasi_spherical_vector', 'quasi_spherical_check',
]
