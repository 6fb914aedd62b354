"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial lives in a fixed ambient ring Q[x_1, ..., x_n]; terms are kept as
a map from dense exponent tuples to nonzero ``Fraction`` coefficients and are
always iterated in graded lexicographic order (highest term first).

Variable indices in the Python API are 0-based.  The text format uses the
1-based names ``x1 ... xn``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

Exponent = tuple[int, ...]

_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.match(text):
            raise ValueError(f"malformed rational {value!r}")
        if "/" in text:
            num, den = text.split("/")
            if int(den) == 0:
                raise ZeroDivisionError(f"zero denominator in {value!r}")
            return Fraction(int(num), int(den))
        return Fraction(int(text))
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def rational_text(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


def _grlex_key(exp: Exponent):
    # sorted() ascending on this key puts the grlex-largest term first
    return (-sum(exp), tuple(-e for e in exp))


def grlex_greater(a: Exponent, b: Exponent) -> bool:
    return _grlex_key(a) < _grlex_key(b)


@dataclass(frozen=True)
class RationalPoint:
    """An exact evaluation point, optionally tagged with a positivity cone.

    With ``cone_tag = T`` the coordinates must satisfy x_i > 0 for i in T and
    x_j >= 0 elsewhere.
    """

    coords: tuple[Fraction, ...]
    cone_tag: frozenset[int] | None = None

    def __post_init__(self):
        coords = tuple(as_rational(c) for c in self.coords)
        object.__setattr__(self, "coords", coords)
        if self.cone_tag is not None:
            tag = frozenset(self.cone_tag)
            object.__setattr__(self, "cone_tag", tag)
            for i, c in enumerate(coords):
                if i in tag and c <= 0:
                    raise ValueError(f"coordinate {i} must be > 0 in the tagged cone, got {c}")
                if i not in tag and c < 0:
                    raise ValueError(f"coordinate {i} must be >= 0 in the tagged cone, got {c}")
            if any(i < 0 or i >= len(coords) for i in tag):
                raise ValueError("cone tag index out of range")

    @classmethod
    def of(cls, values: Iterable, cone_tag: Iterable[int] | None = None) -> "RationalPoint":
        return cls(tuple(values), None if cone_tag is None else frozenset(cone_tag))

    @classmethod
    def ones(cls, n: int) -> "RationalPoint":
        return cls(tuple(Fraction(1) for _ in range(n)))

    def __len__(self) -> int:
        return len(self.coords)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.coords)

    def __getitem__(self, i: int) -> Fraction:
        return self.coords[i]

    def is_positive(self) -> bool:
        return all(c > 0 for c in self.coords)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coords)

    def support(self) -> frozenset[int]:
        return frozenset(i for i, c in enumerate(self.coords) if c != 0)

    def scaled(self, lam) -> "RationalPoint":
        lam = as_rational(lam)
        tag = self.cone_tag if lam > 0 else None
        return RationalPoint(tuple(lam * c for c in self.coords), tag)

    def __str__(self) -> str:
        return "(" + ", ".join(str(c) for c in self.coords) + ")"


def _coords(point, n: int) -> Sequence[Fraction]:
    coords = point.coords if isinstance(point, RationalPoint) else [as_rational(c) for c in point]
    if len(coords) != n:
        raise ValueError(f"point has dimension {len(coords)}, polynomial has {n} variables")
    return coords


@dataclass(frozen=True)
class HomogeneityProfile:
    is_homogeneous: bool
    degree: int | None
    is_multi_affine: bool


class Polynomial:
    """Immutable polynomial in ``num_vars`` variables over Q."""

    __slots__ = ("num_vars", "_terms", "_hash")

    def __init__(self, num_vars: int, terms: Mapping[Exponent, object] | None = None):
        if num_vars < 0:
            raise ValueError("num_vars must be non-negative")
        cleaned: dict[Exponent, Fraction] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != num_vars:
                raise ValueError(f"exponent {exp} does not have length {num_vars}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = as_rational(coeff)
            if c:
                cleaned[exp] = cleaned.get(exp, Fraction(0)) + c
                if not cleaned[exp]:
                    del cleaned[exp]
        self._set(num_vars, cleaned)

    def _set(self, num_vars: int, terms: dict[Exponent, Fraction]):
        ordered = {e: terms[e] for e in sorted(terms, key=_grlex_key)}
        assert all(c != 0 for c in ordered.values())
        object.__setattr__(self, "num_vars", num_vars)
        object.__setattr__(self, "_terms", ordered)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, num_vars: int, terms: dict[Exponent, Fraction]) -> "Polynomial":
        # trusted path: terms already validated, zeros still filtered here
        p = cls.__new__(cls)
        p._set(num_vars, {e: c for e, c in terms.items() if c})
        return p

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # constructors

    @classmethod
    def zero(cls, num_vars: int) -> "Polynomial":
        return cls._raw(num_vars, {})

    @classmethod
    def constant(cls, num_vars: int, value) -> "Polynomial":
        return cls._raw(num_vars, {(0,) * num_vars: as_rational(value)})

    @classmethod
    def variable(cls, num_vars: int, i: int) -> "Polynomial":
        if not 0 <= i < num_vars:
            raise IndexError(f"variable index {i} out of range for {num_vars} variables")
        exp = [0] * num_vars
        exp[i] = 1
        return cls._raw(num_vars, {tuple(exp): Fraction(1)})

    @classmethod
    def monomial(cls, num_vars: int, indices: Iterable[int], coeff=1) -> "Polynomial":
        exp = [0] * num_vars
        for i in indices:
            if not 0 <= i < num_vars:
                raise IndexError(f"variable index {i} out of range for {num_vars} variables")
            exp[i] += 1
        return cls._raw(num_vars, {tuple(exp): as_rational(coeff)})

    # inspection

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Exponent, Fraction]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def leading_term(self) -> tuple[Exponent, Fraction]:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        return next(iter(self._terms.items()))

    def total_degree(self) -> int | None:
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def constant_value(self) -> Fraction | None:
        """The value if the polynomial is constant, else None."""
        if not self._terms:
            return Fraction(0)
        if len(self._terms) == 1:
            exp, c = self.leading_term()
            if not any(exp):
                return c
        return None

    def homogeneity_profile(self) -> HomogeneityProfile:
        degrees = {sum(e) for e in self._terms}
        multi_affine = all(e <= 1 for exp in self._terms for e in exp)
        if not degrees:
            return HomogeneityProfile(True, None, True)
        if len(degrees) == 1:
            return HomogeneityProfile(True, degrees.pop(), multi_affine)
        return HomogeneityProfile(False, None, multi_affine)

    def variables_used(self) -> frozenset[int]:
        return frozenset(i for exp in self._terms for i, e in enumerate(exp) if e)

    # equality / hashing

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.num_vars, other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.num_vars == other.num_vars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.num_vars, tuple(self._terms.items()))))
        return self._hash

    # arithmetic

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.num_vars != self.num_vars:
                raise ValueError(
                    f"variable-count mismatch: {self.num_vars} vs {other.num_vars}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial.constant(self.num_vars, other)
        raise TypeError(f"unsupported operand {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return Polynomial._raw(self.num_vars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.num_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "Polynomial":
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) - c
        return Polynomial._raw(self.num_vars, out)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            c = Fraction(other)
            if not c:
                return Polynomial.zero(self.num_vars)
            return Polynomial._raw(self.num_vars, {e: c * v for e, v in self._terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw(self.num_vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        result = Polynomial.constant(self.num_vars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of an exact division; raises ArithmeticError on a remainder."""
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lead_exp, lead_c = divisor.leading_term()
        if len(divisor) == 1:
            out = {}
            for e, c in self._terms.items():
                q = tuple(a - b for a, b in zip(e, lead_exp))
                if any(x < 0 for x in q):
                    raise ArithmeticError("inexact polynomial division")
                out[q] = c / lead_c
            return Polynomial._raw(self.num_vars, out)
        rem = dict(self._terms)
        quot: dict[Exponent, Fraction] = {}
        div_terms = list(divisor._terms.items())
        while rem:
            e = min(rem, key=_grlex_key)
            q = tuple(a - b for a, b in zip(e, lead_exp))
            if any(x < 0 for x in q):
                raise ArithmeticError("inexact polynomial division")
            c = rem[e] / lead_c
            quot[q] = c
            for de, dc in div_terms:
                t = tuple(a + b for a, b in zip(q, de))
                v = rem.get(t, 0) - c * dc
                if v:
                    rem[t] = v
                else:
                    rem.pop(t, None)
        return Polynomial._raw(self.num_vars, quot)

    # calculus

    def partial(self, i: int) -> "Polynomial":
        if not 0 <= i < self.num_vars:
            raise IndexError(f"variable index {i} out of range for {self.num_vars} variables")
        out = {}
        for e, c in self._terms.items():
            k = e[i]
            if k:
                out[e[:i] + (k - 1,) + e[i + 1:]] = c * k
        return Polynomial._raw(self.num_vars, out)

    def gradient(self) -> list["Polynomial"]:
        return [self.partial(i) for i in range(self.num_vars)]

    def directional_derivative(self, a) -> "Polynomial":
        coords = _coords(a, self.num_vars)
        out: dict[Exponent, Fraction] = {}
        for i, ai in enumerate(coords):
            if not ai:
                continue
            for e, c in self._terms.items():
                k = e[i]
                if k:
                    t = e[:i] + (k - 1,) + e[i + 1:]
                    out[t] = out.get(t, 0) + ai * c * k
        return Polynomial._raw(self.num_vars, out)

    def apply_as_operator(self, target: "Polynomial") -> "Polynomial":
        """P(d/dx_1, ..., d/dx_n) applied to ``target``."""
        target = self._coerce(target)
        out: dict[Exponent, Fraction] = {}
        for alpha, pc in self._terms.items():
            for beta, fc in target._terms.items():
                if any(b < a for a, b in zip(alpha, beta)):
                    continue
                falling = 1
                for a, b in zip(alpha, beta):
                    for t in range(a):
                        falling *= b - t
                e = tuple(b - a for a, b in zip(alpha, beta))
                out[e] = out.get(e, 0) + pc * fc * falling
        return Polynomial._raw(self.num_vars, out)

    # substitution / evaluation

    def evaluate(self, a) -> Fraction:
        coords = _coords(a, self.num_vars)
        total = Fraction(0)
        for e, c in self._terms.items():
            v = c
            for x, k in zip(coords, e):
                if k:
                    v *= x ** k
                    if not v:
                        break
            total += v
        return total

    def restrict_to_zero(self, indices: Iterable[int]) -> "Polynomial":
        """Substitute 0 for the listed variables; the ambient ring is unchanged."""
        idx = set(indices)
        for i in idx:
            if not 0 <= i < self.num_vars:
                raise IndexError(f"variable index {i} out of range for {self.num_vars} variables")
        return Polynomial._raw(
            self.num_vars,
            {e: c for e, c in self._terms.items() if not any(e[i] for i in idx)})

    def project(self, keep: Sequence[int]) -> "Polynomial":
        """Re-embed in the ring of the kept variables (in the given order).

        Every dropped variable must be absent from the polynomial.
        """
        keep = list(keep)
        dropped = set(range(self.num_vars)) - set(keep)
        if dropped & self.variables_used():
            raise ValueError("cannot project away a variable the polynomial depends on")
        return Polynomial._raw(
            len(keep), {tuple(e[i] for i in keep): c for e, c in self._terms.items()})

    def embed(self, num_vars: int, positions: Sequence[int]) -> "Polynomial":
        """Inverse of ``project``: variable k goes to ``positions[k]``."""
        if len(positions) != self.num_vars:
            raise ValueError("one position per variable required")
        out = {}
        for e, c in self._terms.items():
            big = [0] * num_vars
            for k, pos in enumerate(positions):
                big[pos] = e[k]
            out[tuple(big)] = c
        return Polynomial._raw(num_vars, out)

    # text

    def to_text(self) -> str:
        if not self._terms:
            return "0/1"
        parts = []
        for e, c in self._terms.items():
            factors = [rational_text(c)]
            for i, k in enumerate(e):
                if k == 1:
                    factors.append(f"x{i + 1}")
                elif k > 1:
                    factors.append(f"x{i + 1}^{k}")
            parts.append(" * ".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.num_vars}, {self.to_text()!r})"


_TERM_SPLIT = re.compile(r"\s+\+\s+")
_VAR_RE = re.compile(r"^x(\d+)(?:\^(\d+))?$")


def parse_polynomial(text: str, num_vars: int | None = None) -> Polynomial:
    """Parse the canonical text format (``1/2 * x1^2 * x3 + -1/1 * x2``).

    A bare variable factor without a coefficient is accepted as coefficient 1.
    When ``num_vars`` is omitted the largest variable index is used.
    """
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial text")
    raw_terms = []
    max_var = 0
    for chunk in _TERM_SPLIT.split(text):
        coeff = Fraction(1)
        powers: dict[int, int] = {}
        for factor in (f.strip() for f in chunk.split("*")):
            if not factor:
                raise ValueError(f"malformed term {chunk!r}")
            m = _VAR_RE.match(factor)
            if m:
                i = int(m.group(1))
                if i < 1:
                    raise ValueError("variables are numbered from x1")
                powers[i] = powers.get(i, 0) + int(m.group(2) or 1)
                max_var = max(max_var, i)
            else:
                coeff *= as_rational(factor)
        raw_terms.append((coeff, powers))
    n = max_var if num_vars is None else num_vars
    if max_var > n:
        raise ValueError(f"variable x{max_var} exceeds num_vars={n}")
    out: dict[Exponent, Fraction] = {}
    for coeff, powers in raw_terms:
        e = [0] * n
        for i, k in powers.items():
            e[i - 1] = k
        e = tuple(e)
        out[e] = out.get(e, 0) + coeff
    return Polynomial._raw(n, out)


def elementary_symmetric(n: int, k: int) -> Polynomial:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    out = {}
    for subset in combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        out[tuple(e)] = Fraction(1)
    return Polynomial._raw(n, out)


def iterated_directional_derivative(f: Polynomial, a, times: int) -> Polynomial:
    for _ in range(times):
        f = f.directional_derivative(a)
    return f

