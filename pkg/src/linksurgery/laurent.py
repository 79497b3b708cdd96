"""Sparse multivariable Laurent polynomials with exact integer coefficients.

A :class:`LaurentPoly` lives in ``Z[t1^±1, ..., tn^±1]`` and is stored as a
map from exponent tuples to nonzero Python ints. Values are immutable; every
operation returns a new polynomial.

The determinant kernel (:func:`det`) uses fraction-free Bareiss elimination
with :func:`exact_div`, falling back to cofactor expansion for small
matrices.
"""
from __future__ import annotations

import json
import re
from types import MappingProxyType
from typing import Mapping, Sequence, Union

__all__ = [
    "LaurentPoly",
    "Monomial",
    "NotDivisibleError",
    "add",
    "mul",
    "exact_div",
    "substitute",
    "det",
    "det_bareiss",
    "det_cofactor",
    "normalize_symmetric",
    "equal_up_to_units",
    "from_text",
    "from_json",
]

Exponents = tuple


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`exact_div` when the divisor does not divide."""


class LaurentPoly:
    """Element of ``Z[t1^±1, ..., tn^±1]``.

    Parameters
    ----------
    nvars : int
        Number of variables.
    terms : mapping, optional
        ``{exponent tuple: coefficient}``; zero coefficients are dropped.
    """

    __slots__ = ("nvars", "_terms", "_hash")

    def __init__(self, nvars: int, terms: Mapping[Exponents, int] | None = None):
        if nvars < 0:
            raise ValueError("nvars must be nonnegative")
        clean = {}
        if terms:
            for exps, c in terms.items():
                exps = tuple(int(e) for e in exps)
                if len(exps) != nvars:
                    raise ValueError(
                        f"exponent vector {exps} has length {len(exps)}, expected {nvars}"
                    )
                c = int(c)
                if c:
                    clean[exps] = c
        self.nvars = nvars
        self._terms = clean
        self._hash = None

    # -- constructors -----------------------------------------------------

    @classmethod
    def _raw(cls, nvars: int, terms: dict) -> "LaurentPoly":
        # terms must already be clean (tuple keys, nonzero int values)
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, nvars: int) -> "LaurentPoly":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int = 1) -> "LaurentPoly":
        return cls._raw(nvars, {(0,) * nvars: int(c)} if c else {})

    @classmethod
    def monomial(cls, nvars: int, exps: Sequence[int], coeff: int = 1) -> "LaurentPoly":
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def var(cls, nvars: int, i: int, power: int = 1) -> "LaurentPoly":
        """The monomial ``t_{i+1}^power`` (``i`` is 0-based)."""
        if not 0 <= i < nvars:
            raise IndexError(f"variable index {i} out of range for {nvars} variables")
        exps = [0] * nvars
        exps[i] = power
        return cls._raw(nvars, {tuple(exps): 1})

    @classmethod
    def univariate(cls, coeffs: Sequence[int], shift: int = 0) -> "LaurentPoly":
        """One-variable polynomial ``sum coeffs[k] t^(k+shift)``."""
        return cls(1, {(k + shift,): c for k, c in enumerate(coeffs) if c})

    # -- basic protocol ---------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponents, int]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.constant(self.nvars, other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self._terms.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self.nvars}, {self.to_text()!r})"

    def __str__(self) -> str:
        return self.to_text()

    def sorted_terms(self) -> list[tuple[Exponents, int]]:
        """Terms in canonical (lexicographic by exponent vector) order."""
        return sorted(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_unit(self) -> bool:
        if len(self._terms) != 1:
            return False
        (c,) = self._terms.values()
        return abs(c) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and (0,) * self.nvars in self._terms)

    def min_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        return tuple(min(col) for col in zip(*self._terms))

    def max_exponents(self) -> tuple[int, ...]:
        if not self._terms:
            raise ValueError("zero polynomial has no support")
        return tuple(max(col) for col in zip(*self._terms))

    def support_variables(self) -> set[int]:
        return {i for exps in self._terms for i, e in enumerate(exps) if e}

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.nvars != self.nvars:
                raise ValueError(
                    f"variable-count mismatch: {self.nvars} vs {other.nvars}"
                )
            return other
        if isinstance(other, int):
            return LaurentPoly.constant(self.nvars, other)
        raise TypeError(f"cannot combine LaurentPoly with {type(other).__name__}")

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return LaurentPoly.zero(self.nvars)
            return LaurentPoly._raw(self.nvars, {e: c * other for e, c in self._terms.items()})
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                out[e] = get(e, 0) + ca * cb
        return LaurentPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.unit_inverse() ** (-n)
        result = LaurentPoly.constant(self.nvars, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of a unit ``±t^a``; anything else raises."""
        if not self.is_unit():
            raise NotDivisibleError(f"{self} is not a unit")
        ((e, c),) = self._terms.items()
        return LaurentPoly._raw(self.nvars, {tuple(-x for x in e): c})

    def shift(self, exps: Sequence[int]) -> "LaurentPoly":
        """Multiply by the monomial ``t^exps``."""
        return LaurentPoly._raw(
            self.nvars,
            {tuple(x + y for x, y in zip(e, exps)): c for e, c in self._terms.items()},
        )

    def invert_variables(self) -> "LaurentPoly":
        """Apply ``t_i -> t_i^-1`` to every variable."""
        return LaurentPoly._raw(
            self.nvars, {tuple(-x for x in e): c for e, c in self._terms.items()}
        )

    def drop_variable(self, i: int) -> "LaurentPoly":
        """Same polynomial over the variables other than ``i``; ``t_i`` must not occur."""
        if i in self.support_variables():
            raise ValueError(f"variable t{i + 1} occurs in {self}")
        return LaurentPoly._raw(
            self.nvars - 1, {e[:i] + e[i + 1:]: c for e, c in self._terms.items()}
        )

    def embed(self, nvars: int, positions: Sequence[int]) -> "LaurentPoly":
        """Re-home variable ``k`` as variable ``positions[k]`` in an ``nvars`` ring."""
        if len(positions) != self.nvars:
            raise ValueError("one target position per variable is required")
        out = {}
        for e, c in self._terms.items():
            new = [0] * nvars
            for k, x in zip(positions, e):
                new[k] += x
            out[tuple(new)] = c
        return LaurentPoly(nvars, out)

    def evaluate_at_one(self) -> int:
        return sum(self._terms.values())

    # -- serialization ----------------------------------------------------

    def to_text(self) -> str:
        """Canonical text, e.g. ``t1^-1 - 1 + t1``."""
        if not self._terms:
            return "0"
        parts = []
        for k, (e, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                f"t{i + 1}" if x == 1 else f"t{i + 1}^{x}" for i, x in enumerate(e) if x
            )
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if k == 0:
                parts.append(body if c > 0 else "-" + body)
            else:
                parts.append(("+ " if c > 0 else "- ") + body)
        return " ".join(parts)

    def to_json_obj(self) -> dict:
        return {"vars": self.nvars, "terms": [list(e) + [c] for e, c in self.sorted_terms()]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))


Monomial = LaurentPoly  # a one-term LaurentPoly; units are the ±1-coefficient case

Polyish = Union[LaurentPoly, int]


def add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


def _lex_max(terms: Mapping) -> tuple:
    return max(terms)


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return ``q`` with ``q * b == a``.

    Raises :class:`NotDivisibleError` if no such Laurent polynomial exists.
    The quotient's per-variable degree range is fixed by those of ``a`` and
    ``b``, which bounds the peeling of lex-leading terms.
    """
    b = a._coerce(b)
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly.zero(a.nvars)
    n = a.nvars
    if b.is_monomial():
        ((eb, cb),) = b._terms.items()
        out = {}
        for e, c in a._terms.items():
            qc, r = divmod(c, cb)
            if r:
                raise NotDivisibleError(f"{cb} does not divide coefficient {c}")
            out[tuple(x - y for x, y in zip(e, eb))] = qc
        return LaurentPoly._raw(n, out)

    lo = [x - y for x, y in zip(a.min_exponents(), b.min_exponents())]
    hi = [x - y for x, y in zip(a.max_exponents(), b.max_exponents())]
    if any(l > h for l, h in zip(lo, hi)):
        raise NotDivisibleError(f"({b}) does not divide ({a})")
    bt = b.sorted_terms()
    lead_e, lead_c = bt[-1]
    rem = dict(a._terms)
    quot = {}
    while rem:
        e = _lex_max(rem)
        c = rem[e]
        qc, r = divmod(c, lead_c)
        qe = tuple(x - y for x, y in zip(e, lead_e))
        if r or any(not (l <= x <= h) for x, l, h in zip(qe, lo, hi)):
            raise NotDivisibleError(f"({b}) does not divide ({a})")
        quot[qe] = qc
        for eb, cb in bt:
            te = tuple(x + y for x, y in zip(qe, eb))
            v = rem.get(te, 0) - qc * cb
            if v:
                rem[te] = v
            else:
                rem.pop(te, None)
    return LaurentPoly._raw(n, quot)


def substitute(p: LaurentPoly, images: Sequence[Polyish]) -> LaurentPoly:
    """Apply the ring homomorphism ``t_i -> images[i]``.

    Images must share a variable count (ints are allowed when at least one
    image is a polynomial, or are treated as constants in a 0-variable ring
    otherwise). Negative exponents require the image to be a unit.
    """
    if len(images) != p.nvars:
        raise ValueError(f"expected {p.nvars} images, got {len(images)}")
    target = None
    for im in images:
        if isinstance(im, LaurentPoly):
            if target is None:
                target = im.nvars
            elif im.nvars != target:
                raise ValueError("images must share a common variable set")
    if target is None:
        target = 0
    ims = [im if isinstance(im, LaurentPoly) else LaurentPoly.constant(target, im) for im in images]
    cache: dict = {}

    def power(i: int, e: int) -> LaurentPoly:
        key = (i, e)
        if key not in cache:
            cache[key] = ims[i] ** e
        return cache[key]

    result = LaurentPoly.zero(target)
    for e, c in p.sorted_terms():
        term = LaurentPoly.constant(target, c)
        for i, x in enumerate(e):
            if x:
                term = term * power(i, x)
        result = result + term
    return result


# -- determinants ----------------------------------------------------------

COFACTOR_THRESHOLD = 3


def _check_square(M: Sequence[Sequence[LaurentPoly]]) -> int:
    n = len(M)
    for row in M:
        if len(row) != n:
            raise ValueError("matrix is not square")
    return n


def det_cofactor(M: Sequence[Sequence[LaurentPoly]], nvars: int | None = None) -> LaurentPoly:
    """Laplace expansion along the sparsest row."""
    n = _check_square(M)
    if nvars is None:
        nvars = M[0][0].nvars if n else 0
    if n == 0:
        return LaurentPoly.constant(nvars, 1)
    if n == 1:
        return M[0][0]
    r = min(range(n), key=lambda i: sum(1 for x in M[i] if x))
    total = LaurentPoly.zero(nvars)
    for j, entry in enumerate(M[r]):
        if not entry:
            continue
        minor = [row[:j] + row[j + 1:] for i, row in enumerate(M) if i != r]
        sub = det_cofactor(minor, nvars)
        total = total + (entry * sub if (r + j) % 2 == 0 else -(entry * sub))
    return total


def det_bareiss(M: Sequence[Sequence[LaurentPoly]], nvars: int | None = None) -> LaurentPoly:
    """Fraction-free (Bareiss) elimination with row pivoting."""
    n = _check_square(M)
    if nvars is None:
        nvars = M[0][0].nvars if n else 0
    if n == 0:
        return LaurentPoly.constant(nvars, 1)
    A = [list(row) for row in M]
    sign = 1
    prev = LaurentPoly.constant(nvars, 1)
    for k in range(n - 1):
        candidates = [i for i in range(k, n) if A[i][k]]
        if not candidates:
            return LaurentPoly.zero(nvars)
        piv = min(candidates, key=lambda i: len(A[i][k]))
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        akk = A[k][k]
        for i in range(k + 1, n):
            aik = A[i][k]
            for j in range(k + 1, n):
                num = A[i][j] * akk
                if aik and A[k][j]:
                    num = num - aik * A[k][j]
                A[i][j] = exact_div(num, prev) if num else num
            A[i][k] = LaurentPoly.zero(nvars)
        prev = akk
    d = A[n - 1][n - 1]
    return d if sign > 0 else -d


def det(M: Sequence[Sequence[LaurentPoly]], nvars: int | None = None, method: str = "auto") -> LaurentPoly:
    """Determinant of a square matrix of Laurent polynomials.

    ``method`` is ``"auto"`` (cofactor up to ``COFACTOR_THRESHOLD``, Bareiss
    above), ``"bareiss"`` or ``"cofactor"``. ``nvars`` is needed only for
    empty matrices.
    """
    n = _check_square(M)
    if method == "auto":
        method = "cofactor" if n <= COFACTOR_THRESHOLD else "bareiss"
    if method == "bareiss":
        return det_bareiss(M, nvars)
    if method == "cofactor":
        return det_cofactor(M, nvars)
    raise ValueError(f"unknown determinant method {method!r}")


# -- units and normalization -----------------------------------------------

def normalize_symmetric(p: LaurentPoly) -> LaurentPoly:
    """Canonical representative of ``p`` up to multiplication by ``±t^a``.

    Each variable's exponent range is centered (``min + max`` becomes 0, or
    1 when the width is odd), so symmetric classes land on their symmetric
    representative. The sign makes the lexicographically-first term positive.
    """
    if p.is_zero():
        return p
    lo, hi = p.min_exponents(), p.max_exponents()
    shift = [-((l + h) // 2) for l, h in zip(lo, hi)]
    q = p.shift(shift)
    first_c = q.sorted_terms()[0][1]
    return q if first_c > 0 else -q


def equal_up_to_units(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True iff ``a = ±t^k b`` for some exponent vector ``k``."""
    b = a._coerce(b)
    if len(a) != len(b):
        return False
    return normalize_symmetric(a) == normalize_symmetric(b)


# -- parsing ---------------------------------------------------------------

_FACTOR_RE = re.compile(r"^(?:t(\d+)(?:\^(-?\d+))?|(\d+))$")


def _split_terms(text: str) -> list[str]:
    # split on +/- that are not exponent signs
    terms, cur = [], ""
    for ch in text:
        if ch in "+-" and cur.strip() and not cur.rstrip().endswith("^"):
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    if cur.strip():
        terms.append(cur)
    return terms


def from_text(text: str, nvars: int) -> LaurentPoly:
    """Parse the canonical text form (``t1^-2*t2 - 3 + t1``)."""
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero(nvars)
    out: dict = {}
    for raw in _split_terms(text):
        s = raw.replace(" ", "")
        sign = 1
        if s[0] in "+-":
            sign = -1 if s[0] == "-" else 1
            s = s[1:]
        if not s:
            raise ValueError(f"malformed term in {text!r}")
        coeff = 1
        exps = [0] * nvars
        for factor in s.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise ValueError(f"malformed factor {factor!r} in {text!r}")
            if m.group(3) is not None:
                coeff *= int(m.group(3))
            else:
                i = int(m.group(1)) - 1
                if not 0 <= i < nvars:
                    raise ValueError(f"variable t{i + 1} out of range for {nvars} variables")
                exps[i] += int(m.group(2) or 1)
        key = tuple(exps)
        out[key] = out.get(key, 0) + sign * coeff
    return LaurentPoly(nvars, out)


def from_json(data: Union[str, dict]) -> LaurentPoly:
    if isinstance(data, str):
        data = json.loads(data)
    n = int(data["vars"])
    terms = {}
    for row in data["terms"]:
        if len(row) != n + 1:
            raise ValueError(f"term {row} does not have {n} exponents and a coefficient")
        key = tuple(row[:n])
        terms[key] = terms.get(key, 0) + int(row[n])
    return LaurentPoly(n, terms)


def matrix_product(A: Sequence[Sequence[LaurentPoly]], B: Sequence[Sequence[LaurentPoly]], nvars: int) -> list[list[LaurentPoly]]:
    """Plain product of two Laurent-polynomial matrices."""
    inner = len(B)
    cols = len(B[0]) if B else 0
    out = []
    for row in A:
        if len(row) != inner:
            raise ValueError("inner dimensions do not match")
        new = []
        for j in range(cols):
            acc = LaurentPoly.zero(nvars)
            for k in range(inner):
                if row[k] and B[k][j]:
                    acc = acc + row[k] * B[k][j]
            new.append(acc)
        out.append(new)
    return out


def identity_matrix(n: int, nvars: int) -> list[list[LaurentPoly]]:
    one, zero = LaurentPoly.constant(nvars, 1), LaurentPoly.zero(nvars)
    return [[one if i == j else zero for j in range(n)] for i in range(n)]

