"""Chains of characters, odd reflections of marked weights, and Kac highest weights"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Tuple

from .partitions import HookProfile, Partition, is_hook, lambda_natural

logger = logging.getLogger(__name__)

BOSONIC = "e"
FERMIONIC = "d"
MARKERS = {BOSONIC: "•", FERMIONIC: "×"}


@dataclass(frozen=True)
class Character:
    """A character ε_i^± (kind "e") or δ_j^± (kind "d")"""
    kind: str
    index: int
    sign: str

    def __post_init__(self):
        if self.kind not in MARKERS or self.sign not in "+-" or len(self.sign) != 1:
            raise ValueError(f"Invalid character: {self.kind}{self.index}{self.sign}")

    @property
    def marker(self) -> str:
        return MARKERS[self.kind]

    @property
    def norm(self) -> int:
        """(c, c) for the supertrace form: +1 bosonic, -1 fermionic"""
        return 1 if self.kind == BOSONIC else -1

    def __str__(self) -> str:
        return f"{self.kind}{self.index}{self.sign}"


Chain = Tuple[Character, ...]


@dataclass(frozen=True)
class MarkedWeight:
    chain: Chain
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if len(self.chain) != len(self.coeffs):
            raise ValueError(f"Chain of length {len(self.chain)} with {len(self.coeffs)} coefficients")
        if len(set(self.chain)) != len(self.chain):
            raise ValueError("Each character must appear exactly once in a chain")
        object.__setattr__(self, 'coeffs', tuple(int(c) for c in self.coeffs))

    def character_vector(self) -> Dict[str, int]:
        return {str(c): x for c, x in zip(self.chain, self.coeffs)}

    def coefficient(self, label: str) -> int:
        return self.character_vector()[label]

    def to_json(self) -> Dict[str, Any]:
        return {"chain": [str(c) for c in self.chain], "coeffs": list(self.coeffs)}

    def __str__(self) -> str:
        return "(" + " ".join(f"{c.marker}{x}" for c, x in zip(self.chain, self.coeffs)) + ")"


def odd_reflect(w: MarkedWeight, pos: int) -> MarkedWeight:
    """
    Reflect along the odd simple root α = c_pos - c_{pos+1}

    The weight becomes w - α when (w, α) != 0, then the two characters swap.
    With x at the cross and y at the dot this reads
    (×x | •y) -> (•y+1 | ×x-1) and (•y | ×x) -> (×x+1 | •y-1) unless x = -y,
    in which case only the positions swap.

    Raises:
        ValueError: positions out of range or both characters of the same kind
    """
    if not 0 <= pos < len(w.chain) - 1:
        raise ValueError(f"No adjacent pair at position {pos} in a chain of length {len(w.chain)}")
    left, right = w.chain[pos], w.chain[pos + 1]
    if left.kind == right.kind:
        raise ValueError(f"{left} and {right} carry the same marker; their difference is an even root")
    a, b = w.coeffs[pos], w.coeffs[pos + 1]
    pairing = a * left.norm - b * right.norm
    if pairing:
        a, b = a - 1, b + 1
    chain = w.chain[:pos] + (right, left) + w.chain[pos + 2:]
    coeffs = w.coeffs[:pos] + (b, a) + w.coeffs[pos + 2:]
    return MarkedWeight(chain, coeffs)


def odd_reflect_inverse(w: MarkedWeight, pos: int) -> MarkedWeight:
    """Undo odd_reflect at the same position; the reflection along -α"""
    return odd_reflect(w, pos)


def is_dominant(w: MarkedWeight) -> bool:
    """Coefficients weakly decrease along the chain within each kind of character"""
    for kind in MARKERS:
        values = [x for c, x in zip(w.chain, w.coeffs) if c.kind == kind]
        if any(values[i] < values[i + 1] for i in range(len(values) - 1)):
            return False
    return True


def natural_chain(prof: HookProfile) -> Chain:
    """[ε1⁻..εp⁻ | δ1⁻..δq⁻ δq⁺..δ1⁺ | εp⁺..ε1⁺]"""
    p, q = prof.p, prof.q
    return (tuple(Character(BOSONIC, i, "-") for i in range(1, p + 1))
            + tuple(Character(FERMIONIC, j, "-") for j in range(1, q + 1))
            + tuple(Character(FERMIONIC, j, "+") for j in range(q, 0, -1))
            + tuple(Character(BOSONIC, i, "+") for i in range(p, 0, -1)))


def natural_chain_weight(lam: Partition, prof: HookProfile) -> MarkedWeight:
    """(λ_1..λ_p | ν_1..ν_q, -ν_q..-ν_1 | -λ_p..-λ_1) over the natural chain"""
    natural = lambda_natural(lam, prof)
    lam_b, nu = list(natural.bosonic), list(natural.fermionic)
    coeffs = lam_b + nu + [-x for x in reversed(nu)] + [-x for x in reversed(lam_b)]
    return MarkedWeight(natural_chain(prof), tuple(coeffs))


def push_bullet(w: MarkedWeight, start: int, stop: int) -> List[MarkedWeight]:
    """
    Move the character at start leftwards to stop by adjacent odd reflections

    Returns:
        Every intermediate weight, the input first
    """
    if stop > start:
        raise ValueError(f"Cannot push left from {start} to {stop}")
    trace = [w]
    for pos in range(start - 1, stop - 1, -1):
        w = odd_reflect(w, pos)
        trace.append(w)
    return trace


@dataclass
class FDReport:
    """Reflection path from the natural chain to the chain of the proof, with its checks"""
    lam: Partition
    prof: HookProfile
    trace: List[MarkedWeight]
    dominant: bool
    case: str
    tau: int
    l: int

    @property
    def claim_ok(self) -> bool:
        return self.case == "i" or self.tau == self.l

    @property
    def ok(self) -> bool:
        return self.dominant and self.claim_ok

    @property
    def final(self) -> MarkedWeight:
        return self.trace[-1]

    def to_json(self) -> Dict[str, Any]:
        return {
            "lambda": self.lam.to_json(),
            "p": self.prof.p,
            "q": self.prof.q,
            "case": self.case,
            "dominant": self.dominant,
            "tau": self.tau,
            "l": self.l,
            "claim_ok": self.claim_ok,
            "trace": [w.to_json() for w in self.trace],
        }


def verify_fd(lam: Partition, prof: HookProfile) -> FDReport:
    """
    Push εp⁺ left through all 2q fermionic characters and test dominance

    In the case λ_p < q the coefficient τ left on εp⁺ must equal the number
    of nonzero ν_j.
    """
    if not is_hook(lam, prof):
        raise ValueError(f"{lam} is not a ({prof.p},{prof.q})-hook")
    start = natural_chain_weight(lam, prof)
    trace = push_bullet(start, prof.p + 2 * prof.q, prof.p)
    final = trace[-1]
    tau = final.coeffs[prof.p]
    l = sum(1 for x in lambda_natural(lam, prof).fermionic if x > 0)
    case = "ii" if lam.part(prof.p) < prof.q else "i"
    report = FDReport(lam, prof, trace, is_dominant(final), case, tau, l)
    if not report.ok:
        logger.error(f"Finite-dimensionality check failed for {lam} at ({prof.p},{prof.q}): {final}")
    return report


def kac_weight(lam: Partition, prof: HookProfile) -> MarkedWeight:
    """
    Highest weight for the distinguished chain [ε⁻ ε⁺ | δ⁻ δ⁺]

    Starting from the natural chain, εp⁺, then εp-1⁺, ..., ε1⁺ are pushed
    left through the fermionic block.
    """
    if not is_hook(lam, prof):
        raise ValueError(f"{lam} is not a ({prof.p},{prof.q})-hook")
    w = natural_chain_weight(lam, prof)
    p, q = prof.p, prof.q
    for n in range(p):
        start = p + 2 * q + n
        w = push_bullet(w, start, p + n)[-1]
    return w


def kac_weight_11(a: int, b: int) -> Tuple[int, int, int, int]:
    """
    Closed form at p = q = 1 for λ♮ = (a | b), a >= 1

    (a, -b | b, -a) when b = a-1, otherwise (a, -a+2 | b-1, -b-1).
    """
    if a < 1 or b < 0:
        raise ValueError(f"Closed form needs a >= 1 and b >= 0, got ({a},{b})")
    if b == a - 1:
        return a, -b, b, -a
    return a, -a + 2, b - 1, -b - 1


def hook_from_natural_11(a: int, b: int) -> Partition:
    """The (1,1)-hook (a, 1^b) with natural coordinates (a | b)"""
    if b and a < 1:
        raise ValueError(f"No (1,1)-hook has natural coordinates ({a}|{b})")
    return Partition((a,) + (1,) * b)


def is_guaranteed_spherical(lam: Partition, prof: HookProfile) -> bool:
    """λ_p > max(λ'_1 - p, 0)"""
    if not is_hook(lam, prof):
        raise ValueError(f"{lam} is not a ({prof.p},{prof.q})-hook")
    return lam.part(prof.p) > max(lam.transpose().part(1) - prof.p, 0)


def reflection_trace(trace: List[MarkedWeight]) -> List[str]:
    """Aligned text rows, one per weight, each cell marker+character=coefficient"""
    cells = [[f"{c.marker}{c}={x}" for c, x in zip(w.chain, w.coeffs)] for w in trace]
    width = max((len(cell) for row in cells for cell in row), default=0)
    return ["  ".join(cell.ljust(width) for cell in row).rstrip() for row in cells]


def oddref_dom_holds(x: int, y: int, z: int) -> Optional[bool]:
    """
    Push •z left through (×x, ×y); None when x < y, else whether v >= w

    v and w are the cross coefficients after both reflections.
    """
    if x < y:
        return None
    chain = (Character(FERMIONIC, 1, "-"), Character(FERMIONIC, 2, "-"), Character(BOSONIC, 1, "+"))
    final = push_bullet(MarkedWeight(chain, (x, y, z)), 2, 0)[-1]
    v, w = final.coeffs[1], final.coeffs[2]
    return v >= w


__all__ = [
    'Character', 'MarkedWeight', 'FDReport', 'odd_reflect', 'odd_reflect_inverse', 'is_dominant',
    'natural_chain', 'natural_chain_weight', 'push_bullet', 'verify_fd', 'kac_weight', 'kac_weight_11',
    'hook_from_natural_11', 'is_guaranteed_spherical', 'reflection_trace', 'oddref_dom_holds',
]
