"""Exact Laurent polynomials and rational functions in s = t^(1/2).

Every scalar in the engine is a Laurent polynomial (or a reduced ratio of
two of them) in the formal variable s, with arbitrary-precision rational
coefficients.  Working in s rather than t keeps all exponents integral:
an exponent e in s-units represents t^(e/2), so even exponents are the
honest powers of t and odd exponents are the half-integer powers that
orbit dimensions can introduce.

Values are immutable and hashable; all operations are pure functions, so
everything here is safe to share across concurrent tasks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .errors import NotDivisible, NotPolynomial, Singular

__all__ = [
    "LaurentPoly",
    "RationalFunction",
    "mat_mul",
    "mat_transpose",
    "mat_identity",
    "mat_inverse",
    "mat_scale",
    "lift_matrix",
    "lower_matrix",
]


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"coefficient must be exact (int/Fraction/str), got {type(value).__name__}")


class LaurentPoly:
    """A Laurent polynomial in s, stored as {exponent: coefficient}.

    The term map is canonical: zero coefficients are never stored, and two
    values compare equal exactly when their term maps agree.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, object] | Iterable[tuple[int, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        canon: dict[int, Fraction] = {}
        for exp, c in items:
            if not isinstance(exp, int):
                raise TypeError(f"exponent must be int, got {type(exp).__name__}")
            c = _coeff(c)
            if c:
                canon[exp] = canon.get(exp, Fraction(0)) + c
                if not canon[exp]:
                    del canon[exp]
        self._terms = canon
        self._hash = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "LaurentPoly":
        return _ONE

    @classmethod
    def monomial(cls, exp_s: int, coeff=1) -> "LaurentPoly":
        """c * s^exp_s."""
        return cls({exp_s: coeff})

    @classmethod
    def t(cls, power: int = 1, coeff=1) -> "LaurentPoly":
        """c * t^power, i.e. an even s-exponent."""
        return cls({2 * power: coeff})

    @classmethod
    def constant(cls, value) -> "LaurentPoly":
        return cls({0: value})

    @classmethod
    def from_t_coeffs(cls, coeffs: Mapping[int, object]) -> "LaurentPoly":
        """Build from {t-power: coefficient}."""
        return cls({2 * k: v for k, v in coeffs.items()})

    # -- inspection --------------------------------------------------------

    def items(self) -> Iterator[tuple[int, Fraction]]:
        return iter(sorted(self._terms.items()))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def coeff(self, exp_s: int) -> Fraction:
        return self._terms.get(exp_s, Fraction(0))

    def t_coeff(self, power: int) -> Fraction:
        """Coefficient of t^power."""
        return self.coeff(2 * power)

    @property
    def valuation(self) -> int | None:
        """Smallest s-exponent, or None for the zero polynomial."""
        return min(self._terms) if self._terms else None

    @property
    def degree(self) -> int | None:
        """Largest s-exponent, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def is_t_polynomial(self) -> bool:
        """True if all exponents are even and nonnegative (a polynomial in t)."""
        return all(e >= 0 and e % 2 == 0 for e in self._terms)

    def has_integer_coeffs(self) -> bool:
        return all(c.denominator == 1 for c in self._terms.values())

    def has_nonnegative_coeffs(self) -> bool:
        return all(c > 0 for c in self._terms.values())

    def __call__(self, s_value: Fraction | int) -> Fraction:
        """Evaluate at an exact nonzero rational value of s."""
        s_value = Fraction(s_value)
        return sum((c * s_value ** e for e, c in self._terms.items()), Fraction(0))

    def at_t_one(self) -> Fraction:
        """Value at t = 1 (equivalently s = 1): the coefficient sum."""
        return sum(self._terms.values(), Fraction(0))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for e, c in other._terms.items():
            acc = terms.get(e, Fraction(0)) + c
            if acc:
                terms[e] = acc
            else:
                terms.pop(e, None)
        return _raw(terms)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return _raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "LaurentPoly":
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        terms: dict[int, Fraction] = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                acc = terms.get(e, Fraction(0)) + ca * cb
                if acc:
                    terms[e] = acc
                else:
                    terms.pop(e, None)
        return _raw(terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = _ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def scale(self, c) -> "LaurentPoly":
        c = _coeff(c)
        if not c:
            return _ZERO
        return _raw({e: v * c for e, v in self._terms.items()})

    def shift(self, exp_s: int) -> "LaurentPoly":
        """Multiply by the monomial s^exp_s."""
        return _raw({e + exp_s: c for e, c in self._terms.items()})

    def bar(self) -> "LaurentPoly":
        """The involution s -> s^(-1): every exponent is negated."""
        return _raw({-e: c for e, c in self._terms.items()})

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Return q with q * divisor == self; raise NotDivisible otherwise."""
        if divisor.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero:
            return _ZERO
        va, vb = self.valuation, divisor.valuation
        q, r = _poly_divmod(_shifted(self._terms, -va), _shifted(divisor._terms, -vb))
        if r:
            raise NotDivisible(f"({self}) is not divisible by ({divisor})")
        return _raw(_shifted(q, va - vb))

    # -- equality / hashing -------------------------------------------------

    def __eq__(self, other) -> bool:
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- rendering / serialization ------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e, c in sorted(self._terms.items(), reverse=True):
            mono = _monomial_str(e)
            if mono == "1":
                body = str(c if c > 0 else -c)
            else:
                mag = c if c > 0 else -c
                body = mono if mag == 1 else f"{mag}*{mono}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        chunks = []
        for e, c in sorted(self._terms.items(), reverse=True):
            if e == 0:
                mono = ""
            elif e == 2:
                mono = "t"
            elif e % 2 == 0:
                mono = f"t^{{{e // 2}}}"
            else:
                mono = f"t^{{{e}/2}}"
            mag = c if c > 0 else -c
            coeff = "" if (mag == 1 and mono) else _frac_latex(mag)
            body = f"{coeff}{mono}" or "1"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def to_triples(self) -> list[list]:
        """Serialize as [[exp_s, "num", "den"], ...] sorted by exponent."""
        return [[e, str(c.numerator), str(c.denominator)] for e, c in sorted(self._terms.items())]

    @classmethod
    def from_triples(cls, data) -> "LaurentPoly":
        terms = {}
        for entry in data:
            exp, num, den = entry
            terms[int(exp)] = Fraction(int(num), int(den))
        return cls(terms)


def _monomial_str(e: int) -> str:
    if e == 0:
        return "1"
    if e == 2:
        return "t"
    if e % 2 == 0:
        return f"t^{e // 2}"
    return f"t^({e}/2)"


def _frac_latex(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"\\tfrac{{{c.numerator}}}{{{c.denominator}}}"


def _raw(terms: dict[int, Fraction]) -> LaurentPoly:
    p = LaurentPoly.__new__(LaurentPoly)
    p._terms = terms
    p._hash = None
    return p


def _as_poly(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LaurentPoly.constant(value) if value else _ZERO
    return NotImplemented


_ZERO = _raw({})
_ONE = _raw({0: Fraction(1)})


def _shifted(terms: dict[int, Fraction], by: int) -> dict[int, Fraction]:
    return {e + by: c for e, c in terms.items()}


def _poly_divmod(a: dict[int, Fraction], b: dict[int, Fraction]):
    """Long division of ordinary polynomials given as nonneg-exponent dicts."""
    db = max(b)
    lead = b[db]
    q: dict[int, Fraction] = {}
    r = dict(a)
    while r and max(r) >= db:
        dr = max(r)
        f = r[dr] / lead
        q[dr - db] = f
        for e, c in b.items():
            acc = r.get(e + dr - db, Fraction(0)) - f * c
            if acc:
                r[e + dr - db] = acc
            else:
                r.pop(e + dr - db, None)
    return q, r


def _poly_gcd(a: dict[int, Fraction], b: dict[int, Fraction]) -> dict[int, Fraction]:
    """Monic gcd of ordinary polynomials (dict form, not both zero)."""
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, r
    lead = a[max(a)]
    return {e: c / lead for e, c in a.items()}


class RationalFunction:
    """A reduced ratio of two Laurent polynomials in s.

    Canonical form: numerator and denominator share no polynomial factor,
    the denominator has valuation 0, and its lowest coefficient is 1.  The
    representation is therefore unique and equality is structural.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly = _ONE):
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            self.num, self.den = _ZERO, _ONE
            return
        vn, vd = num.valuation, den.valuation
        a = _shifted(num._terms, -vn)
        b = _shifted(den._terms, -vd)
        g = _poly_gcd(a, b)
        if max(g) > 0 or g[0] != 1:
            a, _ = _poly_divmod(a, g)
            b, _ = _poly_divmod(b, g)
        low = b[0]
        num = _raw({e + vn - vd: c / low for e, c in a.items()})
        den = _raw({e: c / low for e, c in b.items()})
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p: LaurentPoly) -> "RationalFunction":
        return cls(p)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return _RF_ZERO

    @classmethod
    def one(cls) -> "RationalFunction":
        return _RF_ONE

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def is_polynomial(self) -> bool:
        """True when the reduced denominator is a unit monomial."""
        return len(self.den._terms) == 1

    def to_poly(self) -> LaurentPoly:
        """Return the underlying LaurentPoly, or raise NotPolynomial."""
        if not self.is_polynomial():
            raise NotPolynomial(f"({self}) is not a Laurent polynomial")
        ((e, c),) = self.den._terms.items()
        return self.num.shift(-e).scale(1 / c)

    def __add__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by the zero rational function")
        return RationalFunction(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def inverse(self) -> "RationalFunction":
        return _RF_ONE / self

    def __eq__(self, other) -> bool:
        other = _as_rf(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return not self.is_zero

    def __str__(self) -> str:
        if self.den == _ONE:
            return str(self.num)
        return f"({self.num}) / ({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({str(self)!r})"


def _as_rf(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, LaurentPoly):
        return RationalFunction(value)
    if isinstance(value, (int, Fraction)):
        return RationalFunction(LaurentPoly.constant(value))
    return NotImplemented


_RF_ZERO = RationalFunction(_ZERO)
_RF_ONE = RationalFunction(_ONE)


# -- exact linear algebra ----------------------------------------------------
#
# Matrices are lists of rows.  The helpers are generic over any ring with
# +/-/* (LaurentPoly or RationalFunction); inversion works over the
# rational-function field, where plain Gaussian elimination is exact
# because every intermediate entry is reduced by gcd.


def mat_transpose(m):
    return [list(col) for col in zip(*m)]


def mat_mul(a, b):
    if not a or not b:
        return []
    inner = len(b)
    if any(len(row) != inner for row in a):
        raise ValueError("matrix shape mismatch")
    bt = mat_transpose(b)
    out = []
    for row in a:
        out_row = []
        for col in bt:
            acc = row[0] * col[0]
            for x, y in zip(row[1:], col[1:]):
                acc = acc + x * y
            out_row.append(acc)
        out.append(out_row)
    return out


def mat_identity(n: int, one=None):
    one = _RF_ONE if one is None else one
    zero = one - one
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_scale(m, factor):
    return [[entry * factor for entry in row] for row in m]


def lift_matrix(m):
    """LaurentPoly matrix -> RationalFunction matrix."""
    return [[RationalFunction(entry) for entry in row] for row in m]


def lower_matrix(m):
    """RationalFunction matrix -> LaurentPoly matrix (NotPolynomial on failure)."""
    return [[entry.to_poly() for entry in row] for row in m]


def mat_inverse(m):
    """Exact inverse of a square RationalFunction matrix via Gauss-Jordan."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    work = [[_as_rf(entry) for entry in row] for row in m]
    aug = [row + [_RF_ONE if i == j else _RF_ZERO for j in range(n)] for i, row in enumerate(work)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not aug[r][col].is_zero), None)
        if pivot is None:
            raise Singular(f"matrix has no pivot in column {col}")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [entry * inv for entry in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
