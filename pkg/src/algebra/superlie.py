"""
Lie superalgebras by structure constants, PBW straightening in the enveloping
algebra, and the Harish-Chandra projection for the pair (gl(2|2), gl(1|1)⊕gl(1|1))
"""

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple

from .exactpoly import ExactMatrix, ExactPoly, ONE, Scalar, ZERO, format_scalar, gaussian, rational, to_scalar

logger = logging.getLogger(__name__)

Word = Tuple[int, ...]
Vector = Dict[int, Scalar]

IMAG = gaussian(0, 1)
HALF = rational(1, 2)


class NonInvariantError(ValueError):
    """Raised when an element expected to commute with k does not"""


class DecompositionError(RuntimeError):
    """Raised when a structural decomposition is missing or not unique"""


def _accumulate(target: Dict[Any, Scalar], key: Any, value: Scalar) -> None:
    total = target.get(key, ZERO) + value
    if total:
        target[key] = total
    else:
        target.pop(key, None)


class LieSuperalgebra:
    """
    Finite-dimensional Lie superalgebra given by structure constants

    Args:
        labels: Names of the basis elements
        parities: 0 for even, 1 for odd, per basis element
        table: Map (i, j) -> {k: c} with [e_i, e_j] = Σ c e_k; missing pairs bracket to zero
    """

    def __init__(self, labels: Sequence[str], parities: Sequence[int], table: Mapping[Tuple[int, int], Vector]):
        if len(labels) != len(parities):
            raise ValueError("Every basis element needs a parity")
        self.labels = list(labels)
        self.parities = [int(p) % 2 for p in parities]
        self.table = {key: dict(value) for key, value in table.items() if value}

    @property
    def dim(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def bracket(self, i: int, j: int) -> Vector:
        return self.table.get((i, j), {})

    def bracket_vectors(self, u: Mapping[int, Any], v: Mapping[int, Any]) -> Vector:
        result: Vector = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.bracket(i, j).items():
                    _accumulate(result, k, to_scalar(a) * to_scalar(b) * c)
        return result

    def vector_parity(self, vec: Mapping[int, Any]) -> int:
        parities = {self.parities[i] for i, c in vec.items() if to_scalar(c)}
        if len(parities) > 1:
            raise ValueError(f"Vector {self.format_vector(vec)} is not homogeneous")
        return parities.pop() if parities else 0

    def format_vector(self, vec: Mapping[int, Any]) -> str:
        if not vec:
            return "0"
        pieces = []
        for i in sorted(vec):
            c = format_scalar(to_scalar(vec[i]))
            pieces.append(self.labels[i] if c == "1" else f"-{self.labels[i]}" if c == "-1" else f"({c})*{self.labels[i]}")
        return " + ".join(pieces).replace("+ -", "- ")

    def change_basis(self, labels: Sequence[str], vectors: Sequence[Mapping[int, Any]]) -> Tuple['LieSuperalgebra', ExactMatrix]:
        """
        Same algebra in a new basis

        Args:
            labels: Names of the new basis elements
            vectors: New basis elements in coordinates of the current basis

        Returns:
            (algebra in the new basis, matrix whose column t is e_t in new coordinates)

        Raises:
            DecompositionError: vectors do not form a basis
        """
        n = self.dim
        if len(vectors) != n:
            raise DecompositionError(f"Need {n} basis vectors, got {len(vectors)}")
        columns = ExactMatrix([[to_scalar(vectors[c].get(r, 0)) for c in range(n)] for r in range(n)], n)
        if columns.rank() != n:
            raise DecompositionError("New basis vectors are linearly dependent")
        inverse = columns.inverse()

        def coordinates(vec: Vector) -> Vector:
            out: Vector = {}
            for r, row in enumerate(inverse.rows):
                value = sum((row[i] * c for i, c in vec.items()), ZERO)
                if value:
                    out[r] = value
            return out

        parities = [self.vector_parity(v) for v in vectors]
        table = {}
        for a, b in product(range(n), repeat=2):
            table[(a, b)] = coordinates(self.bracket_vectors(vectors[a], vectors[b]))
        return LieSuperalgebra(labels, parities, table), inverse


def general_linear(m: int, n: int) -> LieSuperalgebra:
    """gl(m|n) in the elementary basis E_ij, indexed (i-1)(m+n) + (j-1)"""
    size = m + n

    def block(i: int) -> int:
        return 0 if i < m else 1

    labels, parities, table = [], [], {}
    for i, j in product(range(size), repeat=2):
        labels.append(f"E{i + 1}{j + 1}")
        parities.append(block(i) ^ block(j))
    for (i, j), (k, l) in product(product(range(size), repeat=2), repeat=2):
        entry: Vector = {}
        sign = -1 if (block(i) ^ block(j)) and (block(k) ^ block(l)) else 1
        if j == k:
            _accumulate(entry, i * size + l, ONE)
        if l == i:
            _accumulate(entry, k * size + j, to_scalar(-sign))
        if entry:
            table[(i * size + j, k * size + l)] = entry
    return LieSuperalgebra(labels, parities, table)


@lru_cache(maxsize=None)
def gl22() -> LieSuperalgebra:
    return general_linear(2, 2)


def elementary(i: int, j: int) -> int:
    """Index of E_ij in gl(2|2), 1-indexed rows and columns"""
    return (i - 1) * 4 + (j - 1)


NAMED: Dict[str, Tuple[int, int]] = {
    "X1": (1, 2), "Y1": (2, 1), "X2": (3, 4), "Y2": (4, 3),
    "eta11": (1, 3), "eta12": (1, 4), "eta21": (2, 3), "eta22": (2, 4),
    "xi11": (3, 1), "xi12": (3, 2), "xi21": (4, 1), "xi22": (4, 2),
}


def diagonal(a: Any, b: Any, c: Any, d: Any) -> Vector:
    vec: Vector = {}
    for pos, value in enumerate((a, b, c, d), start=1):
        if to_scalar(value):
            vec[elementary(pos, pos)] = to_scalar(value)
    return vec


def named(label: str) -> Vector:
    """
    Vector of a named gl(2|2) element

    Example:
        named("eta12")     # E14
        named("<1,0,1,0>") # E11 + E33
    """
    label = label.strip()
    if label.startswith("<") and label.endswith(">"):
        entries = [x for x in label[1:-1].replace(",", " ").split()]
        if len(entries) == 1 and len(entries[0]) == 4:
            entries = list(entries[0])
        if len(entries) != 4:
            raise ValueError(f"Diagonal element needs four entries: {label}")
        return diagonal(*(int(x) for x in entries))
    if label.startswith("E") and len(label) == 3 and label[1:].isdigit():
        i, j = int(label[1]), int(label[2])
        if not (1 <= i <= 4 and 1 <= j <= 4):
            raise ValueError(f"Unknown gl(2|2) element: {label}")
        return {elementary(i, j): ONE}
    if label not in NAMED:
        raise ValueError(f"Unknown gl(2|2) element: {label}")
    return {elementary(*NAMED[label]): ONE}


def parse_linear(text: str) -> Vector:
    """Signed sum of named elements, e.g. "-eta21" or "X1 - Y1" or "0" """
    text = text.strip()
    if text == "0":
        return {}
    result: Vector = {}
    sign = 1
    for token in text.replace("+", " + ").replace(" - ", " -- ").split():
        if token == "+":
            continue
        if token == "--":
            sign = -1
            continue
        if token.startswith("-"):
            sign, token = -sign, token[1:]
        for idx, c in named(token).items():
            _accumulate(result, idx, c * sign)
        sign = 1
    return result


# Superbracket [row, column] of the named gl(2|2) elements
BRACKET_ROWS = ["eta11", "eta12", "eta21", "eta22", "X1", "X2", "Y1", "Y2"]
BRACKET_COLUMNS = ["xi11", "xi12", "xi21", "xi22", "X1", "X2", "Y1", "Y2"]
BRACKET_TABLE: Dict[str, List[str]] = {
    "eta11": ["<1,0,1,0>", "X1", "Y2", "0", "0", "eta12", "-eta21", "0"],
    "eta12": ["X2", "0", "<1,0,0,1>", "X1", "0", "0", "-eta22", "eta11"],
    "eta21": ["Y1", "<0,1,1,0>", "0", "Y2", "-eta11", "eta22", "0", "0"],
    "eta22": ["0", "X2", "Y1", "<0,1,0,1>", "-eta12", "0", "0", "eta21"],
    "X1": ["-xi12", "0", "-xi22", "0", "0", "0", "<1,-1,0,0>", "0"],
    "X2": ["0", "0", "xi11", "xi12", "0", "0", "0", "<0,0,1,-1>"],
    "Y1": ["0", "-xi11", "0", "-xi21", "<-1,1,0,0>", "0", "0", "0"],
    "Y2": ["xi21", "xi22", "0", "0", "0", "<0,0,-1,1>", "0", "0"],
}


@dataclass
class BracketCheck:
    row: str
    column: str
    expected: str
    actual: str

    @property
    def ok(self) -> bool:
        return self.expected == self.actual

    def to_json(self) -> Dict[str, Any]:
        return {"row": self.row, "column": self.column, "expected": self.expected, "actual": self.actual, "ok": self.ok}


def bracket(a: str, b: str) -> Vector:
    """Supercommutator of two named gl(2|2) elements, as a vector in the E basis"""
    return gl22().bracket_vectors(named(a), named(b))


def check_bracket_table() -> List[BracketCheck]:
    """Compare all 64 tabulated superbrackets with the computed ones"""
    alg = gl22()
    records = []
    for row in BRACKET_ROWS:
        for column, expected in zip(BRACKET_COLUMNS, BRACKET_TABLE[row]):
            actual = alg.format_vector(bracket(row, column))
            records.append(BracketCheck(row, column, alg.format_vector(parse_linear(expected)), actual))
    failed = [r for r in records if not r.ok]
    if failed:
        logger.error(f"{len(failed)} bracket table entries disagree")
    return records


def check_super_jacobi(alg: Optional[LieSuperalgebra] = None) -> List[Tuple[int, int, int]]:
    """Basis triples violating the graded Jacobi identity"""
    alg = alg or gl22()
    par = alg.parities
    failures = []
    for i, j, k in product(range(alg.dim), repeat=3):
        total: Vector = {}
        for (a, b, c) in ((i, j, k), (j, k, i), (k, i, j)):
            sign = -1 if par[a] and par[c] else 1
            inner = alg.bracket(b, c)
            for idx, value in alg.bracket_vectors({a: ONE}, inner).items():
                _accumulate(total, idx, value * sign)
        if total:
            failures.append((i, j, k))
    return failures


class SuperElt:
    """Element of the enveloping algebra as a map from words to coefficients"""
    __slots__ = ('terms',)

    def __init__(self, terms: Optional[Mapping[Word, Any]] = None):
        self.terms: Dict[Word, Scalar] = {}
        for word, c in (terms or {}).items():
            _accumulate(self.terms, tuple(word), to_scalar(c))

    @classmethod
    def scalar(cls, c: Any) -> 'SuperElt':
        return cls({(): c})

    @classmethod
    def from_vector(cls, vec: Mapping[int, Any]) -> 'SuperElt':
        return cls({(i,): c for i, c in vec.items()})

    @classmethod
    def of(cls, *labels: str) -> 'SuperElt':
        """Product of named gl(2|2) elements"""
        result = cls.scalar(1)
        for label in labels:
            result = result * cls.from_vector(named(label))
        return result

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self) -> int:
        return max((len(w) for w in self.terms), default=-1)

    def parity(self, alg: LieSuperalgebra) -> int:
        parities = {sum(alg.parities[i] for i in w) % 2 for w in self.terms}
        if len(parities) > 1:
            raise ValueError("Element is not homogeneous")
        return parities.pop() if parities else 0

    def __add__(self, other: 'SuperElt') -> 'SuperElt':
        result = SuperElt(self.terms)
        for w, c in other.terms.items():
            _accumulate(result.terms, w, c)
        return result

    def __neg__(self) -> 'SuperElt':
        return SuperElt({w: -c for w, c in self.terms.items()})

    def __sub__(self, other: 'SuperElt') -> 'SuperElt':
        return self + (-other)

    def __mul__(self, other: Any) -> 'SuperElt':
        if not isinstance(other, SuperElt):
            c = to_scalar(other)
            return SuperElt({w: v * c for w, v in self.terms.items()})
        result = SuperElt()
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _accumulate(result.terms, w1 + w2, c1 * c2)
        return result

    def __rmul__(self, other: Any) -> 'SuperElt':
        return self * other

    def __eq__(self, other: Any) -> bool:
        return isinstance(other, SuperElt) and self.terms == other.terms

    __hash__ = None

    def format(self, alg: LieSuperalgebra) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = format_scalar(self.terms[w])
            body = "*".join(alg.labels[i] for i in w)
            if not body:
                pieces.append(c)
            elif c in ("1", "-1"):
                pieces.append(("-" if c == "-1" else "") + body)
            else:
                pieces.append(f"({c})*{body}")
        return " + ".join(pieces).replace("+ -", "- ")


def supercommutator(x: SuperElt, u: SuperElt, alg: LieSuperalgebra) -> SuperElt:
    sign = -1 if x.parity(alg) and u.parity(alg) else 1
    return x * u - u * x * sign


class PBWStraightener:
    """
    Rewrites words into PBW order for a fixed total order of the basis

    Out-of-order neighbours yx become (-1)^{|x||y|} xy + [y, x], and odd squares
    become half their bracket.
    """

    def __init__(self, alg: LieSuperalgebra, order: Optional[Sequence[int]] = None):
        order = list(range(alg.dim)) if order is None else list(order)
        if sorted(order) != list(range(alg.dim)):
            raise ValueError("Order must be a permutation of the basis indices")
        self.alg = alg
        self.rank = {idx: r for r, idx in enumerate(order)}
        self._insert_cache: Dict[Tuple[Word, int], Dict[Word, Scalar]] = {}

    def is_ordered(self, word: Word) -> bool:
        for a, b in zip(word, word[1:]):
            if self.rank[a] > self.rank[b] or (a == b and self.alg.parities[a]):
                return False
        return True

    def insert(self, word: Word, g: int) -> Dict[Word, Scalar]:
        """Normal form of word·g for an ordered word"""
        key = (word, g)
        cached = self._insert_cache.get(key)
        if cached is not None:
            return cached
        alg = self.alg
        result: Dict[Word, Scalar] = {}
        if not word:
            result[(g,)] = ONE
        else:
            prefix, last = word[:-1], word[-1]
            if self.rank[last] < self.rank[g] or (last == g and not alg.parities[g]):
                result[word + (g,)] = ONE
            elif last == g:
                for l, c in alg.bracket(g, g).items():
                    for w, c2 in self.insert(prefix, l).items():
                        _accumulate(result, w, c * c2 * HALF)
            else:
                sign = -1 if alg.parities[last] and alg.parities[g] else 1
                for w, c in self.insert(prefix, g).items():
                    for w2, c2 in self.insert(w, last).items():
                        _accumulate(result, w2, c * c2 * sign)
                for l, c in alg.bracket(last, g).items():
                    for w, c2 in self.insert(prefix, l).items():
                        _accumulate(result, w, c * c2)
        self._insert_cache[key] = result
        return result

    def order_word(self, word: Word) -> Dict[Word, Scalar]:
        state: Dict[Word, Scalar] = {(): ONE}
        for g in word:
            nxt: Dict[Word, Scalar] = {}
            for w, c in state.items():
                for w2, c2 in self.insert(w, g).items():
                    _accumulate(nxt, w2, c * c2)
            state = nxt
        return state

    def normal_order(self, u: SuperElt) -> SuperElt:
        result = SuperElt()
        for w, c in u.terms.items():
            for w2, c2 in self.order_word(w).items():
                _accumulate(result.terms, w2, c * c2)
        return result


def normal_order(u: SuperElt, order: Optional[Sequence[int]] = None,
                 alg: Optional[LieSuperalgebra] = None) -> SuperElt:
    """PBW normal form of u for the given basis order (gl(2|2) index order by default)"""
    return PBWStraightener(alg or gl22(), order).normal_order(u)


def normal_order_adjacent(u: SuperElt, order: Optional[Sequence[int]] = None,
                          alg: Optional[LieSuperalgebra] = None) -> SuperElt:
    """Same normal form reached by rewriting the leftmost out-of-order pair first"""
    alg = alg or gl22()
    straightener = PBWStraightener(alg, order)
    rank = straightener.rank
    pending = dict(u.terms)
    done: Dict[Word, Scalar] = {}
    while pending:
        word, c = pending.popitem()
        for pos in range(len(word) - 1):
            a, b = word[pos], word[pos + 1]
            if rank[a] > rank[b] or (a == b and alg.parities[a]):
                head, tail = word[:pos], word[pos + 2:]
                if a == b:
                    for l, v in alg.bracket(a, a).items():
                        _accumulate(pending, head + (l,) + tail, c * v * HALF)
                else:
                    sign = -1 if alg.parities[a] and alg.parities[b] else 1
                    _accumulate(pending, head + (b, a) + tail, c * sign)
                    for l, v in alg.bracket(a, b).items():
                        _accumulate(pending, head + (l,) + tail, c * v)
                break
        else:
            _accumulate(done, word, c)
    return SuperElt(done)


Root = Tuple[int, int]


@dataclass
class PairData:
    """
    The symmetric pair (gl(2|2), gl(1|1)⊕gl(1|1)) and its Iwasawa-type decomposition

    Vectors are in the E basis of gl(2|2). The adapted algebra lists n⁻, then
    a = (x, y), then k; coordinates on a* are x1 = λ(x) and y1 = λ(y).
    """
    algebra: LieSuperalgebra
    k_basis: List[Vector]
    p_plus: List[Vector]
    p_minus: List[Vector]
    a_basis: List[Vector]
    n_minus: List[Vector]
    root_spaces: Dict[Root, Tuple[List[Vector], List[Vector]]]
    adapted: LieSuperalgebra
    to_adapted: ExactMatrix
    k_labels: List[str] = field(default_factory=list)

    @property
    def n_b(self) -> int:
        return len(self.n_minus) + len(self.a_basis)

    def adapted_coordinates(self, e_index: int) -> Vector:
        return {r: row[e_index] for r, row in enumerate(self.to_adapted.rows) if row[e_index]}


K_LABELS = ["E11", "E22", "E33", "E44", "eta11", "xi11", "eta22", "xi22"]
P_PLUS_LABELS = ["X1", "X2", "eta12", "xi12"]
P_MINUS_LABELS = ["Y1", "Y2", "eta21", "xi21"]


def theta(vec: Mapping[int, Any]) -> Vector:
    """Involution E_ij -> s_i s_j E_ij with s = (1,-1,1,-1)"""
    signs = (1, -1, 1, -1)
    return {idx: to_scalar(c) * signs[idx // 4] * signs[idx % 4] for idx, c in vec.items()}


def grading_degree(vec: Mapping[int, Any]) -> int:
    """Eigenvalue of ad J, J = diag(1,-1,1,-1)/2, on a homogeneous vector"""
    signs = (1, -1, 1, -1)
    degrees = {(signs[idx // 4] - signs[idx % 4]) // 2 for idx, c in vec.items() if to_scalar(c)}
    if len(degrees) != 1:
        raise ValueError("Vector is not homogeneous for the short grading")
    return degrees.pop()


def _ad_matrix(alg: LieSuperalgebra, x: Vector) -> List[List[Scalar]]:
    n = alg.dim
    columns = [alg.bracket_vectors(x, {t: ONE}) for t in range(n)]
    return [[columns[t].get(r, ZERO) for t in range(n)] for r in range(n)]


def root_space_decomposition(alg: LieSuperalgebra, a_basis: Sequence[Vector],
                             grid: Sequence[int] = (-2, -1, 0, 1, 2)) -> Dict[Root, Tuple[List[Vector], List[Vector]]]:
    """
    Joint eigenspaces of ad a, split into even and odd parts

    Raises:
        ValueError: the eigenspaces on the grid do not span the algebra
    """
    ads = [_ad_matrix(alg, x) for x in a_basis]
    spaces: Dict[Root, Tuple[List[Vector], List[Vector]]] = {}
    total = 0
    for root in product(grid, repeat=len(a_basis)):
        parts = []
        for parity in (0, 1):
            cols = [t for t in range(alg.dim) if alg.parities[t] == parity]
            rows = []
            for ad, value in zip(ads, root):
                for r in range(alg.dim):
                    rows.append([ad[r][t] - (value if r == t else 0) for t in cols])
            kernel = ExactMatrix(rows, len(cols)).nullspace()
            parts.append([{cols[i]: c for i, c in enumerate(vec) if c} for vec in kernel])
        if parts[0] or parts[1]:
            spaces[tuple(root)] = (parts[0], parts[1])
            total += len(parts[0]) + len(parts[1])
    if total != alg.dim:
        raise ValueError("non-semisimple adjoint action")
    return spaces


def is_positive(root: Root) -> bool:
    """Lexicographic positivity, bosonic coordinate first"""
    for c in root:
        if c:
            return c > 0
    return False


@lru_cache(maxsize=None)
def symmetric_pair() -> PairData:
    alg = gl22()
    k_basis = [named(x) for x in K_LABELS]
    p_plus = [named(x) for x in P_PLUS_LABELS]
    p_minus = [named(x) for x in P_MINUS_LABELS]
    a_basis = [
        {elementary(1, 2): IMAG, elementary(2, 1): -IMAG},
        {elementary(3, 4): IMAG, elementary(4, 3): -IMAG},
    ]
    spaces = root_space_decomposition(alg, a_basis)
    n_minus, n_labels = [], []
    for root in sorted(spaces):
        if root != (0, 0) and not is_positive(root):
            even, odd = spaces[root]
            for m, vec in enumerate(even + odd):
                n_minus.append(vec)
                n_labels.append(f"n{root}#{m}")
    labels = n_labels + ["a_x", "a_y"] + K_LABELS
    adapted, to_adapted = alg.change_basis(labels, n_minus + a_basis + k_basis)
    logger.debug(f"Symmetric pair: dim n- {len(n_minus)}, dim a {len(a_basis)}, dim k {len(k_basis)}")
    return PairData(alg, k_basis, p_plus, p_minus, a_basis, n_minus, spaces, adapted, to_adapted, K_LABELS)


def restricted_roots(pair: Optional[PairData] = None) -> Dict[Root, Tuple[int, int]]:
    """Nonzero restricted roots with (even dim, odd dim) of their root spaces"""
    pair = pair or symmetric_pair()
    return {root: (len(even), len(odd)) for root, (even, odd) in pair.root_spaces.items() if root != (0, 0)}


def deformed_multiplicity(dims: Tuple[int, int]) -> Scalar:
    even, odd = dims
    return rational(-(even - odd), 2)


def weyl_vector(pair: Optional[PairData] = None) -> Tuple[Scalar, ...]:
    """Half the sum of positive roots weighted by superdimension"""
    total = [ZERO, ZERO]
    for root, (even, odd) in restricted_roots(pair).items():
        if is_positive(root):
            for n, c in enumerate(root):
                total[n] = total[n] + to_scalar(c * (even - odd))
    return tuple(c * HALF for c in total)


A_VARS = ("x1", "y1")


class HarishChandraProjector:
    """
    π: U -> S(a) along Uk + n⁻U, computed in the right module U/n⁻U

    A state is a map from PBW words in k to polynomials on a*; letters of the
    input act on the right. The projection is the coefficient of the empty word.
    """

    def __init__(self, pair: Optional[PairData] = None):
        self.pair = pair or symmetric_pair()
        self.adapted = self.pair.adapted
        self.n_b = self.pair.n_b
        self.a_offset = len(self.pair.n_minus)
        self.straightener = PBWStraightener(self.adapted)
        self._act_cache: Dict[Tuple[Word, int], Dict[Word, ExactPoly]] = {}
        self._prefix_cache: Dict[Word, Dict[Word, ExactPoly]] = {(): {(): ExactPoly.constant(A_VARS, 1)}}
        self._letters = [self.pair.adapted_coordinates(t) for t in range(self.pair.algebra.dim)]

    def _word_parity(self, word: Word) -> int:
        return sum(self.adapted.parities[i] for i in word) % 2

    def _times_k(self, state: Dict[Word, ExactPoly], letter: int) -> Dict[Word, ExactPoly]:
        out: Dict[Word, ExactPoly] = {}
        for word, poly in state.items():
            for w2, c in self.straightener.insert(word, letter).items():
                _add_poly(out, w2, poly * c)
        return out

    def _act_b(self, word: Word, j: int) -> Dict[Word, ExactPoly]:
        """The state of 1·K·b_j for an ordered k-word K and b basis element j"""
        key = (word, j)
        if key in self._act_cache:
            return self._act_cache[key]
        out: Dict[Word, ExactPoly] = {}
        odd_j = self.adapted.parities[j]
        if j >= self.a_offset:
            sign = -1 if odd_j and self._word_parity(word) else 1
            _add_poly(out, word, ExactPoly.variable(A_VARS, A_VARS[j - self.a_offset]) * sign)
        for i, letter in enumerate(word):
            head, tail = word[:i], word[i + 1:]
            eps = -1 if odd_j and self._word_parity(tail) else 1
            for l, c in self.adapted.bracket(letter, j).items():
                if l < self.n_b:
                    partial = self._act_b(head, l)
                    for t in tail:
                        partial = self._times_k(partial, t)
                    for w2, poly in partial.items():
                        _add_poly(out, w2, poly * (c * eps))
                else:
                    for w2, c2 in self.straightener.order_word(head + (l,) + tail).items():
                        _add_poly(out, w2, ExactPoly.constant(A_VARS, c * c2 * eps))
        self._act_cache[key] = out
        return out

    def _times_letter(self, state: Dict[Word, ExactPoly], e_index: int) -> Dict[Word, ExactPoly]:
        out: Dict[Word, ExactPoly] = {}
        for c, coeff in self._letters[e_index].items():
            if c >= self.n_b:
                partial = self._times_k(state, c)
            else:
                partial = {}
                for word, poly in state.items():
                    for w2, q in self._act_b(word, c).items():
                        _add_poly(partial, w2, poly * q)
            for w2, poly in partial.items():
                _add_poly(out, w2, poly * coeff)
        return out

    def state(self, word: Word) -> Dict[Word, ExactPoly]:
        cached = self._prefix_cache.get(word)
        if cached is None:
            cached = self._times_letter(self.state(word[:-1]), word[-1])
            self._prefix_cache[word] = cached
        return cached

    def project(self, u: SuperElt) -> ExactPoly:
        result = ExactPoly(A_VARS)
        for word, c in u.terms.items():
            value = self.state(word).get(())
            if value is not None:
                result = result + value * c
        return result


def _add_poly(target: Dict[Word, ExactPoly], key: Word, poly: ExactPoly) -> None:
    current = target.get(key)
    total = poly if current is None else current + poly
    if total.is_zero:
        target.pop(key, None)
    else:
        target[key] = total


@lru_cache(maxsize=None)
def _projector() -> HarishChandraProjector:
    return HarishChandraProjector()


def hc_projection(u: SuperElt, pair: Optional[PairData] = None) -> ExactPoly:
    """
    Harish-Chandra projection of u (E-basis words) to a polynomial in (x1, y1)

    Example:
        hc_projection(SuperElt.of("Y1", "X1"))  # x1^2/4 + x1/2
    """
    projector = _projector() if pair is None else HarishChandraProjector(pair)
    return projector.project(u)


def hc_projection_literal(u: SuperElt, pair: Optional[PairData] = None) -> ExactPoly:
    """π(u) by straightening in the order (n⁻, a, k) and keeping the pure a-words"""
    pair = pair or symmetric_pair()
    a_offset, n_b = len(pair.n_minus), pair.n_b
    letters = [pair.adapted_coordinates(t) for t in range(pair.algebra.dim)]
    expanded: Dict[Word, Scalar] = {}
    for word, c in u.terms.items():
        for choice in product(*(letters[t].items() for t in word)):
            coeff = c
            for _, v in choice:
                coeff = coeff * v
            _accumulate(expanded, tuple(idx for idx, _ in choice), coeff)
    ordered = PBWStraightener(pair.adapted).normal_order(SuperElt(expanded))
    result = ExactPoly(A_VARS)
    x = [ExactPoly.variable(A_VARS, v) for v in A_VARS]
    for word, c in ordered.terms.items():
        if all(a_offset <= i < n_b for i in word):
            term = ExactPoly.constant(A_VARS, c)
            for i in word:
                term = term * x[i - a_offset]
            result = result + term
    return result


def check_k_invariant(u: SuperElt, pair: Optional[PairData] = None) -> List[str]:
    """Labels of k-basis elements whose supercommutator with u is nonzero"""
    pair = pair or symmetric_pair()
    alg = pair.algebra
    failures = []
    for label, vec in zip(pair.k_labels, pair.k_basis):
        commutator = supercommutator(SuperElt.from_vector(vec), u, alg)
        if not normal_order(commutator, alg=alg).is_zero:
            failures.append(label)
    return failures


def gamma(u: SuperElt, pair: Optional[PairData] = None, check: bool = True) -> ExactPoly:
    """
    Γ(u)(X) = π(u)(X - ρ) for k-invariant u

    Raises:
        NonInvariantError: u does not commute with k
    """
    pair = pair or symmetric_pair()
    if check:
        failures = check_k_invariant(u, pair)
        if failures:
            raise NonInvariantError(f"Element does not commute with {', '.join(failures)}")
    rho = weyl_vector(pair)
    projected = hc_projection(u, None if pair is symmetric_pair() else pair)
    shift = {name: ExactPoly.variable(A_VARS, name) - r for name, r in zip(A_VARS, rho)}
    return projected.substitute(shift)


def d_one() -> SuperElt:
    """Y1X1 - Y2X2 - η21ξ12 + ξ21η12, the degree-one invariant operator"""
    return (SuperElt.of("Y1", "X1") - SuperElt.of("Y2", "X2")
            - SuperElt.of("eta21", "xi12") + SuperElt.of("xi21", "eta12"))


__all__ = [
    'LieSuperalgebra', 'SuperElt', 'PBWStraightener', 'PairData', 'HarishChandraProjector', 'BracketCheck',
    'NonInvariantError', 'DecompositionError', 'general_linear', 'gl22', 'elementary', 'named', 'diagonal',
    'parse_linear', 'bracket', 'check_bracket_table', 'check_super_jacobi', 'supercommutator', 'normal_order',
    'normal_order_adjacent', 'theta', 'grading_degree', 'root_space_decomposition', 'is_positive',
    'symmetric_pair', 'restricted_roots', 'deformed_multiplicity', 'weyl_vector', 'hc_projection',
    'hc_projection_literal', 'check_k_invariant', 'gamma', 'd_one', 'A_VARS', 'BRACKET_TABLE',
]
