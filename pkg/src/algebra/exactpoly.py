"""Exact scalars, multivariate polynomials and linear algebra over QQ(i)

Everything in the toolkit is computed over the Gaussian rationals; there is
no floating point anywhere in this module.
"""

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from sympy.polys.domains import QQ, QQ_I
from sympy.polys.matrices import DomainMatrix
from sympy.polys.rings import ring

logger = logging.getLogger(__name__)

Scalar = Any
Exponent = Tuple[int, ...]

ZERO = QQ_I.zero
ONE = QQ_I.one


def rational(numerator: int, denominator: int = 1) -> Scalar:
    return QQ_I(QQ(numerator, denominator), 0)


def gaussian(re: Any, im: Any) -> Scalar:
    return to_scalar(re) + to_scalar(im) * QQ_I(0, 1)


def to_scalar(value: Any) -> Scalar:
    """Coerce ints, Fractions, QQ elements and exact strings into QQ(i)"""
    if QQ_I.of_type(value):
        return value
    if isinstance(value, int):
        return QQ_I(value, 0)
    if isinstance(value, Fraction):
        return rational(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_scalar(value)
    return QQ_I(QQ.convert(value), 0)


def _format_rational(q: Any) -> str:
    n, d = int(QQ.numer(q)), int(QQ.denom(q))
    return str(n) if d == 1 else f"{n}/{d}"


def _parse_rational(text: str) -> Any:
    if '/' in text:
        n, d = text.split('/')
        return QQ(int(n), int(d))
    return QQ(int(text), 1)


def format_scalar(z: Scalar) -> str:
    """
    Exact string form of a scalar

    Example:
        "3", "-1/16", "1/2+3/4*i", "-3/4*i"
    """
    z = to_scalar(z)
    re, im = z.x, z.y
    if not im:
        return _format_rational(re)
    im_text = _format_rational(im) + "*i"
    if not re:
        return im_text
    sign = "" if im_text.startswith("-") else "+"
    return _format_rational(re) + sign + im_text


def parse_scalar(text: str) -> Scalar:
    text = text.strip().replace(" ", "")
    if not text.endswith("*i"):
        return QQ_I(_parse_rational(text), 0)
    body = text[:-2]
    split = max(body.rfind('+'), body.rfind('-'))
    if split <= 0:
        return QQ_I(0, _parse_rational(body))
    return QQ_I(_parse_rational(body[:split]), _parse_rational(body[split:].lstrip('+')))


def is_rational(z: Scalar) -> bool:
    return not to_scalar(z).y


def scalar_div(a: Any, b: Any) -> Scalar:
    b = to_scalar(b)
    if not b:
        raise ZeroDivisionError("division by an exact zero")
    return QQ_I.quo(to_scalar(a), b)


@lru_cache(maxsize=None)
def _poly_ring(names: Tuple[str, ...]):
    if not names:
        raise ValueError("A polynomial ring needs at least one variable")
    return ring(",".join(names), QQ_I)[0]


class ExactPoly:
    """Polynomial with Gaussian-rational coefficients over named variables"""

    __slots__ = ("vars", "element")

    def __init__(self, vars: Sequence[str], element: Any = None):
        self.vars: Tuple[str, ...] = tuple(vars)
        poly_ring = _poly_ring(self.vars)
        self.element = poly_ring.zero if element is None else element

    @property
    def ring(self):
        return _poly_ring(self.vars)

    @classmethod
    def constant(cls, vars: Sequence[str], value: Any) -> 'ExactPoly':
        poly_ring = _poly_ring(tuple(vars))
        return cls(vars, poly_ring.ground_new(to_scalar(value)))

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> 'ExactPoly':
        vars = tuple(vars)
        if name not in vars:
            raise ValueError(f"Unknown variable {name}; ring has {vars}")
        return cls(vars, _poly_ring(vars).gens[vars.index(name)])

    @classmethod
    def from_terms(cls, vars: Sequence[str], terms: Mapping[Exponent, Any]) -> 'ExactPoly':
        vars = tuple(vars)
        clean = {}
        for exp, coeff in terms.items():
            if len(exp) != len(vars):
                raise ValueError(f"Exponent {exp} does not match variables {vars}")
            c = to_scalar(coeff)
            if c:
                clean[tuple(exp)] = c
        return cls(vars, _poly_ring(vars).from_dict(clean))

    def terms(self) -> Dict[Exponent, Scalar]:
        return dict(self.element.items())

    @property
    def is_zero(self) -> bool:
        return not self.element

    def degree(self) -> int:
        """Total degree, -1 for the zero polynomial"""
        if not self.element:
            return -1
        return max(sum(exp) for exp in self.element.keys())

    def _coerce(self, other: Any) -> Any:
        if isinstance(other, ExactPoly):
            if other.vars != self.vars:
                raise ValueError(f"Variable mismatch: {self.vars} vs {other.vars}")
            return other.element
        return self.ring.ground_new(to_scalar(other))

    def __add__(self, other: Any) -> 'ExactPoly':
        return ExactPoly(self.vars, self.element + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Any) -> 'ExactPoly':
        return ExactPoly(self.vars, self.element - self._coerce(other))

    def __rsub__(self, other: Any) -> 'ExactPoly':
        return ExactPoly(self.vars, self._coerce(other) - self.element)

    def __mul__(self, other: Any) -> 'ExactPoly':
        return ExactPoly(self.vars, self.element * self._coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> 'ExactPoly':
        return self * scalar_div(ONE, other)

    def __neg__(self) -> 'ExactPoly':
        return ExactPoly(self.vars, -self.element)

    def __pow__(self, n: int) -> 'ExactPoly':
        return ExactPoly(self.vars, self.element ** n)

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, ExactPoly):
            return self.vars == other.vars and self.element == other.element
        try:
            return self.element == self._coerce(other)
        except (TypeError, ValueError):
            return NotImplemented

    __hash__ = None

    def evaluate(self, point: Sequence[Any]) -> Scalar:
        return poly_eval(self, point)

    def substitute(self, assignment: Mapping[str, 'ExactPoly']) -> 'ExactPoly':
        return affine_substitute(self, assignment)

    def coefficient(self, exp: Exponent) -> Scalar:
        return self.element.get(tuple(exp), ZERO)

    def leading_scaled(self, basis: Sequence['ExactPoly']) -> 'ExactPoly':
        """Scale so the first nonzero coordinate in the given basis is 1"""
        coords = coordinates_in(self, basis)
        for c in coords:
            if c:
                return self / c
        return self

    def to_json(self) -> Dict[str, Any]:
        ordered = sorted(self.element.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))
        return {
            "vars": list(self.vars),
            "terms": [{"exp": list(exp), "coef": format_scalar(c)} for exp, c in ordered],
        }

    @classmethod
    def from_json(cls, data: Mapping[str, Any]) -> 'ExactPoly':
        return cls.from_terms(data["vars"], {tuple(t["exp"]): parse_scalar(t["coef"]) for t in data["terms"]})

    def __str__(self) -> str:
        if not self.element:
            return "0"
        pieces = []
        for term in self.to_json()["terms"]:
            factors = [f"{v}^{e}" if e > 1 else v for v, e in zip(self.vars, term["exp"]) if e]
            coef = term["coef"]
            if not factors:
                pieces.append(coef)
            elif coef == "1":
                pieces.append("*".join(factors))
            elif coef == "-1":
                pieces.append("-" + "*".join(factors))
            else:
                if "*i" in coef and ("+" in coef[1:] or "-" in coef[1:]):
                    coef = f"({coef})"
                pieces.append(coef + "*" + "*".join(factors))
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"ExactPoly({self})"


def poly_eval(f: ExactPoly, point: Sequence[Any]) -> Scalar:
    """Exact evaluation of f at a point given in variable order"""
    values = [to_scalar(v) for v in point]
    if len(values) != len(f.vars):
        raise ValueError(f"Point has {len(values)} coordinates, polynomial has {len(f.vars)} variables")
    total = ZERO
    for exp, coeff in f.element.items():
        term = coeff
        for value, e in zip(values, exp):
            if e:
                term = term * value ** e
        total += term
    return total


def affine_substitute(f: ExactPoly, assignment: Mapping[str, ExactPoly]) -> ExactPoly:
    """
    Substitute polynomials for the variables of f

    Args:
        f: Polynomial to transform
        assignment: Image of each variable; all images share one variable set.
            Variables of f without an image are kept when the target ring has them.

    Returns:
        The composed polynomial in the images' variables
    """
    if not assignment:
        return f
    targets = {g.vars for g in assignment.values()}
    if len(targets) != 1:
        raise ValueError("All substituted polynomials must live in the same ring")
    target_vars = targets.pop()
    images = []
    for name in f.vars:
        if name in assignment:
            images.append(assignment[name])
        elif name in target_vars:
            images.append(ExactPoly.variable(target_vars, name))
        else:
            images.append(None)

    if target_vars == f.vars:
        gens = f.ring.gens
        pairs = [(gens[i], img.element) for i, img in enumerate(images) if img is not None]
        return ExactPoly(f.vars, f.element.compose(pairs))

    result = ExactPoly(target_vars)
    powers: Dict[Tuple[int, int], ExactPoly] = {}
    for exp, coeff in f.element.items():
        term = ExactPoly.constant(target_vars, coeff)
        for i, e in enumerate(exp):
            if not e:
                continue
            if images[i] is None:
                raise ValueError(f"No image given for variable {f.vars[i]}")
            if (i, e) not in powers:
                powers[(i, e)] = images[i] ** e
            term = term * powers[(i, e)]
        result = result + term
    return result


def coordinates_in(f: ExactPoly, basis: Sequence[ExactPoly]) -> List[Scalar]:
    """Coordinates of f in a linearly independent family of polynomials"""
    monomials = sorted({exp for g in list(basis) + [f] for exp in g.element.keys()})
    rows = [[g.coefficient(m) for g in basis] for m in monomials]
    solved = ExactMatrix(rows, len(basis)).solve_affine([f.coefficient(m) for m in monomials])
    if solved is None:
        raise ValueError("Polynomial is not in the span of the basis")
    return solved[0]


def combine(basis: Sequence[ExactPoly], coeffs: Iterable[Any]) -> ExactPoly:
    result = ExactPoly(basis[0].vars)
    for g, c in zip(basis, coeffs):
        c = to_scalar(c)
        if c:
            result = result + g * c
    return result


def proportionality(f: ExactPoly, g: ExactPoly) -> Optional[Scalar]:
    """Scalar c with f = c*g, or None when f and g are not proportional"""
    if g.is_zero:
        return ZERO if f.is_zero else None
    exp, gc = next(iter(g.element.items()))
    c = scalar_div(f.coefficient(exp), gc)
    return c if f == g * c else None


class ExactMatrix:
    """Dense matrix over QQ(i) backed by sympy's DomainMatrix"""

    def __init__(self, rows: Sequence[Sequence[Any]], cols: Optional[int] = None):
        self.rows: List[List[Scalar]] = [[to_scalar(v) for v in row] for row in rows]
        if cols is None:
            cols = len(self.rows[0]) if self.rows else 0
        if any(len(row) != cols for row in self.rows):
            raise ValueError("Ragged matrix rows")
        self.shape = (len(self.rows), cols)

    def _domain_matrix(self) -> DomainMatrix:
        return DomainMatrix(self.rows, self.shape, QQ_I)

    def nullspace(self) -> List[List[Scalar]]:
        """Basis of the right nullspace, deterministic for a given matrix"""
        m, n = self.shape
        if n == 0:
            return []
        if m == 0:
            return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        return self._domain_matrix().nullspace().to_list()

    def rank(self) -> int:
        m, n = self.shape
        if m == 0 or n == 0:
            return 0
        return self._domain_matrix().rank()

    def apply(self, vector: Sequence[Any]) -> List[Scalar]:
        vector = [to_scalar(v) for v in vector]
        return [sum((a * b for a, b in zip(row, vector)), ZERO) for row in self.rows]

    def inverse(self) -> 'ExactMatrix':
        m, n = self.shape
        if m != n:
            raise ValueError(f"Cannot invert a {m}x{n} matrix")
        if m == 0:
            return ExactMatrix([], 0)
        return ExactMatrix(self._domain_matrix().inv().to_list(), n)

    def solve_affine(self, rhs: Sequence[Any]) -> Optional[Tuple[List[Scalar], List[List[Scalar]]]]:
        """
        Solve M x = rhs

        Returns:
            (particular solution, homogeneous basis), or None when inconsistent
        """
        m, n = self.shape
        rhs = [to_scalar(v) for v in rhs]
        if len(rhs) != m:
            raise ValueError(f"Right-hand side has {len(rhs)} entries for {m} rows")
        particular = [ZERO] * n
        if m == 0:
            return particular, self.nullspace()
        augmented = DomainMatrix([row + [b] for row, b in zip(self.rows, rhs)], (m, n + 1), QQ_I)
        reduced, pivots = augmented.rref()
        if n in pivots:
            return None
        reduced_rows = reduced.to_list()
        for r, c in enumerate(pivots):
            particular[c] = reduced_rows[r][n]
        return particular, self.nullspace()
