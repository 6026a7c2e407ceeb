"""Exact rationals and sparse multivariate Laurent polynomials.

Scalars are :class:`fractions.Fraction`, which is already canonical
(positive denominator, reduced).  A :class:`LaurentPoly` is a dict from
exponent vectors to nonzero coefficients over a fixed tuple of variable
names; exponents may be negative.
"""

from __future__ import annotations

import random
from fractions import Fraction
from numbers import Rational as _RationalABC
from types import MappingProxyType
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import ContextMismatch, ResampleExhausted, UnassignedVariable, ZeroToNegativePower

Rational = Fraction
Scalar = Union[int, Fraction]
Exponents = tuple  # tuple[int, ...], one slot per declared variable

__all__ = [
    "Rational", "LaurentPoly", "PolyRing",
    "poly_add", "poly_mul", "poly_pow", "poly_eval", "poly_equal",
    "rand_rational", "distinct_rationals", "sparse_exponents", "interpolate",
]


def _as_fraction(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, _RationalABC)):
        return Fraction(c)
    raise TypeError(f"exact coefficient required, got {type(c).__name__}")


def sparse_exponents(exps: Sequence[int]) -> dict[int, int]:
    """Map form of an exponent vector: ``{var index: exponent}``, zeros dropped."""
    return {i: e for i, e in enumerate(exps) if e}


class LaurentPoly:
    """Immutable sparse Laurent polynomial with rational coefficients.

    ``terms`` maps exponent vectors (tuples of length ``len(variables)``)
    to coefficients.  Zero coefficients never survive construction, so
    two polynomials are equal exactly when their term maps are.
    """

    __slots__ = ("variables", "_terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Optional[Mapping[Sequence[int], Scalar]] = None):
        self.variables = tuple(variables)
        nv = len(self.variables)
        clean: dict[Exponents, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != nv:
                raise ValueError(f"exponent vector {exps} does not match {nv} variables")
            c = _as_fraction(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
        self._terms = {k: v for k, v in clean.items() if v}
        self._hash = None

    @classmethod
    def _from_clean(cls, variables: tuple, terms: dict) -> "LaurentPoly":
        # caller guarantees: no zero coefficients, keys of the right length
        obj = object.__new__(cls)
        obj.variables = variables
        obj._terms = terms
        obj._hash = None
        return obj

    # construction helpers

    @classmethod
    def constant(cls, variables: Sequence[str], c: Scalar) -> "LaurentPoly":
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def monomial(cls, variables: Sequence[str], exps: Sequence[int], coeff: Scalar = 1) -> "LaurentPoly":
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def variable(cls, variables: Sequence[str], which: Union[int, str]) -> "LaurentPoly":
        variables = tuple(variables)
        idx = variables.index(which) if isinstance(which, str) else which
        exps = [0] * len(variables)
        exps[idx] = 1
        return cls(variables, {tuple(exps): 1})

    # views

    @property
    def terms(self) -> Mapping[Exponents, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exps), Fraction(0))

    def degree(self, var: Union[int, str]) -> int:
        """Largest exponent of ``var``; raises on the zero polynomial."""
        idx = self._index(var)
        if not self._terms:
            raise ValueError("degree of the zero polynomial")
        return max(k[idx] for k in self._terms)

    def _index(self, var: Union[int, str]) -> int:
        return self.variables.index(var) if isinstance(var, str) else var

    # arithmetic

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.variables != self.variables:
                raise ContextMismatch(f"{self.variables} vs {other.variables}")
            return other
        return LaurentPoly.constant(self.variables, _as_fraction(other))

    def __add__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentPoly._from_clean(self.variables, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._from_clean(self.variables, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        return (-self) + other

    def __mul__(self, other) -> "LaurentPoly":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Exponents, Fraction] = {}
        get = out.get
        for k1, v1 in self._terms.items():
            for k2, v2 in other._terms.items():
                k = tuple([a + b for a, b in zip(k1, k2)])
                out[k] = get(k, 0) + v1 * v2
        return LaurentPoly._from_clean(self.variables, {k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = LaurentPoly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.variables == other.variables and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == LaurentPoly.constant(self.variables, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.variables, frozenset(self._terms.items())))
        return self._hash

    # evaluation and substitution

    def evaluate(self, assignment: Mapping[Union[int, str], Scalar]) -> Fraction:
        """Exact value at a point.

        ``assignment`` may be keyed by variable index or by name.  Only
        variables that actually occur need a value.
        """
        values: dict[int, Fraction] = {}
        for key, val in assignment.items():
            values[self._index(key)] = _as_fraction(val)
        used = {i for k in self._terms for i, e in enumerate(k) if e}
        for i in used:
            if i not in values:
                raise UnassignedVariable(self.variables[i])
            if values[i] == 0 and any(k[i] < 0 for k in self._terms):
                raise ZeroToNegativePower(self.variables[i])
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for i, e in enumerate(exps):
                if e:
                    term *= values[i] ** e
            total += term
        return total

    def rescale(self, factors: Mapping[Union[int, str], Scalar]) -> "LaurentPoly":
        """Substitute ``v -> factor * v`` for each listed variable."""
        fs = {self._index(k): _as_fraction(f) for k, f in factors.items()}
        if any(f == 0 for f in fs.values()):
            raise ValueError("rescale factors must be nonzero")
        out = {}
        for exps, c in self._terms.items():
            for i, f in fs.items():
                if exps[i]:
                    c *= f ** exps[i]
            out[exps] = c
        return LaurentPoly._from_clean(self.variables, out)

    # display

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps in sorted(self._terms, reverse=True):
            c = self._terms[exps]
            factors = []
            for name, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            if not factors:
                parts.append(str(c))
            elif c == 1:
                parts.append("*".join(factors))
            elif c == -1:
                parts.append("-" + "*".join(factors))
            else:
                parts.append(f"{c}*" + "*".join(factors))
        return " + ".join(parts).replace("+ -", "- ")


class PolyRing:
    """A declared variable list; hands out generators and constants."""

    def __init__(self, names: Iterable[str]):
        self.variables = tuple(names)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")

    def __repr__(self) -> str:
        return f"PolyRing{self.variables}"

    def __len__(self) -> int:
        return len(self.variables)

    def gen(self, which: Union[int, str]) -> LaurentPoly:
        return LaurentPoly.variable(self.variables, which)

    def gens(self) -> tuple:
        return tuple(self.gen(i) for i in range(len(self.variables)))

    def __call__(self, c: Scalar) -> LaurentPoly:
        return LaurentPoly.constant(self.variables, c)

    @property
    def zero(self) -> LaurentPoly:
        return LaurentPoly(self.variables)

    @property
    def one(self) -> LaurentPoly:
        return self(1)

    def monomial(self, exps: Sequence[int], coeff: Scalar = 1) -> LaurentPoly:
        return LaurentPoly.monomial(self.variables, exps, coeff)

    def from_terms(self, terms: Mapping[Sequence[int], Scalar]) -> LaurentPoly:
        return LaurentPoly(self.variables, terms)


def poly_add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def poly_mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def poly_pow(p: LaurentPoly, k: int) -> LaurentPoly:
    return p ** k


def poly_eval(p: LaurentPoly, assignment: Mapping[Union[int, str], Scalar]) -> Fraction:
    return p.evaluate(assignment)


def poly_equal(p: LaurentPoly, q: LaurentPoly) -> bool:
    if p.variables != q.variables:
        raise ContextMismatch(f"{p.variables} vs {q.variables}")
    return p == q


# sampling

NUM_BOUND = 1000
DEN_BOUND = 100


def rand_rational(
    rng: random.Random,
    num_bound: int = NUM_BOUND,
    den_bound: int = DEN_BOUND,
    reject: Optional[Callable[[Fraction], bool]] = None,
    retries: int = 100,
) -> Fraction:
    """Draw ``p/q`` with ``p`` uniform in ``[-num_bound, num_bound]`` and ``q`` in ``[1, den_bound]``.

    If ``reject`` returns True the value is redrawn, at most ``retries``
    more times, after which :class:`ResampleExhausted` is raised.
    """
    for _ in range(retries + 1):
        value = Fraction(rng.randint(-num_bound, num_bound), rng.randint(1, den_bound))
        if reject is None or not reject(value):
            return value
    raise ResampleExhausted(f"no acceptable rational after {retries + 1} draws")


def distinct_rationals(
    rng: random.Random,
    k: int,
    nonzero: bool = True,
    reject: Optional[Callable[[Fraction], bool]] = None,
    retries: int = 100,
) -> list[Fraction]:
    """``k`` pairwise distinct random rationals (nonzero by default)."""
    out: list[Fraction] = []

    def bad(v: Fraction) -> bool:
        return (nonzero and v == 0) or v in out or (reject is not None and reject(v))

    for _ in range(k):
        out.append(rand_rational(rng, reject=bad, retries=retries))
    return out


def interpolate(xs: Sequence[Scalar], ys: Sequence[Scalar]) -> list[Fraction]:
    """Coefficients ``[c0, c1, ...]`` of the unique polynomial of degree < len(xs)
    through the points, by Newton divided differences."""
    xs = [_as_fraction(x) for x in xs]
    coef = [_as_fraction(y) for y in ys]
    if len(xs) != len(coef) or len(set(xs)) != len(xs):
        raise ValueError("need equally many distinct nodes and values")
    m = len(xs)
    for level in range(1, m):
        for i in range(m - 1, level - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level])
    # Newton form -> monomial basis, Horner style from the top coefficient
    poly = [Fraction(0)] * m
    for k in range(m - 1, -1, -1):
        shifted = [Fraction(0)] + poly[:-1]
        poly = [s - xs[k] * p for s, p in zip(shifted, poly)]
        poly[0] += coef[k]
    return poly
