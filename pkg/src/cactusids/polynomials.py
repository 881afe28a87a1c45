"""Exact univariate polynomial and rational-function arithmetic over the integers.

Polynomials are immutable ascending coefficient tuples with no trailing zeros.
Rational functions reduce on construction (polynomial gcd via the subresultant
PRS, joint integer content, sign normalisation), so equal functions compare
equal structurally. Everything here is pure and safe to share across threads.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Union


class Polynomial:
    """Univariate polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficient required, got {c!r}")
        self.coeffs: tuple[int, ...] = tuple(cs)

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls(())

    @classmethod
    def one(cls) -> "Polynomial":
        return cls((1,))

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def monomial(cls, coeff: int, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be nonnegative")
        return cls((0,) * power + (coeff,))

    # -- basic queries ------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, power: int) -> int:
        if 0 <= power < len(self.coeffs):
            return self.coeffs[power]
        return 0

    def leading(self) -> int:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self) -> int:
        """Nonnegative gcd of all coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def primitive_part(self) -> "Polynomial":
        c = self.content()
        if c in (0, 1):
            return self
        return Polynomial(v // c for v in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = Polynomial.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x^k."""
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)!r})"

    def __str__(self):
        return format_poly(self)


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """Dispatch exact add/sub/mul; results are in canonical trimmed form."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r} (expected add, sub or mul)")


def format_poly(p: Polynomial, var: str = "x") -> str:
    """Render ascending-power text like ``1 - 3x - x^2 - 2x^3``."""
    if p.is_zero:
        return "0"
    parts = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif k == 1:
            body = var if mag == 1 else f"{mag}{var}"
        else:
            body = f"{var}^{k}" if mag == 1 else f"{mag}{var}^{k}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


# -- division helpers ------------------------------------------------


def poly_divmod_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Divide ``a`` by ``b`` when the division is exact over the integers.

    Raises ArithmeticError if ``b`` does not divide ``a`` exactly; used after
    gcd computations and inside Bareiss elimination, where exactness is a
    structural guarantee.
    """
    if b.is_zero:
        raise ZeroDivisionError("polynomial division by zero")
    if a.is_zero:
        return Polynomial()
    rem = list(a.coeffs)
    db, lb = b.degree, b.leading()
    out = [0] * (len(rem) - db)
    for i in range(len(rem) - 1, db - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        q, r = divmod(c, lb)
        if r:
            raise ArithmeticError("inexact polynomial division")
        out[i - db] = q
        for j, bc in enumerate(b.coeffs):
            rem[i - db + j] -= q * bc
    if any(rem[:db]):
        raise ArithmeticError("inexact polynomial division (nonzero remainder)")
    return Polynomial(out)


def pseudo_rem(a: Polynomial, b: Polynomial) -> Polynomial:
    """Pseudo-remainder prem(a, b) = lc(b)^(deg a - deg b + 1) * a  mod  b."""
    if b.is_zero:
        raise ZeroDivisionError("pseudo-remainder by zero")
    da, db = a.degree, b.degree
    if da < db:
        return a
    lb = b.leading()
    rem = list(a.coeffs)
    for i in range(da, db - 1, -1):
        c = rem[i]
        # one full scaling per elimination step keeps the textbook scale factor
        for j in range(i):
            rem[j] *= lb
        if c:
            for j in range(db):
                rem[i - db + j] -= c * b.coeffs[j]
        rem[i] = 0
    return Polynomial(rem[:db])


def _int_div_exact(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact integer division in subresultant PRS")
    return q


def _scalar_div_exact(p: Polynomial, k: int) -> Polynomial:
    return Polynomial(_int_div_exact(c, k) for c in p.coeffs)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor via the subresultant PRS.

    Result is primitive with positive leading coefficient, scaled by the gcd
    of the two contents. gcd(0, 0) = 0.
    """
    if a.is_zero and b.is_zero:
        return Polynomial()
    if a.is_zero:
        return _positive(b)
    if b.is_zero:
        return _positive(a)

    cont = gcd(a.content(), b.content())
    prev, cur = a.primitive_part(), b.primitive_part()
    if prev.degree < cur.degree:
        prev, cur = cur, prev

    delta = prev.degree - cur.degree
    beta = -1 if delta % 2 == 0 else 1  # (-1)^(delta+1)
    psi = -1
    while True:
        r = pseudo_rem(prev, cur)
        if r.is_zero:
            result = cur
            break
        if cur.degree == 0:
            result = Polynomial.one()
            break
        nxt = _scalar_div_exact(r, beta)
        lc_cur = cur.leading()
        d_old = delta
        prev, cur = cur, nxt
        delta = prev.degree - cur.degree
        if d_old == 1:
            psi = -lc_cur
        elif d_old > 1:
            psi = _int_div_exact((-lc_cur) ** d_old, psi ** (d_old - 1))
        beta = -lc_cur * psi**delta
    return _positive(result.primitive_part()) * cont


def _positive(p: Polynomial) -> Polynomial:
    if not p.is_zero and p.leading() < 0:
        return -p
    return p


PolyLike = Union[Polynomial, Sequence[int], int]


def as_poly(value: PolyLike) -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, int):
        return Polynomial((value,))
    return Polynomial(value)


class RationalGF:
    """Ratio of integer polynomials, canonically reduced on construction.

    Canonical form: numerator and denominator share no polynomial factor and
    no integer content, and the denominator's lowest nonzero coefficient is
    positive. Power-series extraction additionally requires a nonzero
    denominator constant term (checked in :func:`series`, not here, so the
    type can also carry intermediate Gaussian-elimination values).
    """

    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator: PolyLike, denominator: PolyLike = 1):
        num, den = as_poly(numerator), as_poly(denominator)
        if den.is_zero:
            raise ZeroDivisionError("zero denominator polynomial")
        if num.is_zero:
            num, den = Polynomial(), Polynomial.one()
        else:
            g = poly_gcd(num, den)
            if g.degree > 0 or g.leading() != 1:
                num = poly_divmod_exact(num, g)
                den = poly_divmod_exact(den, g)
            c = gcd(num.content(), den.content())
            if c > 1:
                num = Polynomial(v // c for v in num.coeffs)
                den = Polynomial(v // c for v in den.coeffs)
        if not den.is_zero:
            low = next(c for c in den.coeffs if c != 0)
            if low < 0:
                num, den = -num, -den
        self.numerator = num
        self.denominator = den

    @property
    def is_zero(self) -> bool:
        return self.numerator.is_zero

    def __eq__(self, other):
        if not isinstance(other, RationalGF):
            return NotImplemented
        return (
            self.numerator == other.numerator
            and self.denominator == other.denominator
        )

    def __hash__(self):
        return hash(("RationalGF", self.numerator.coeffs, self.denominator.coeffs))

    def __add__(self, other):
        other = _coerce_gf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalGF(
            self.numerator * other.denominator + other.numerator * self.denominator,
            self.denominator * other.denominator,
        )

    __radd__ = __add__

    def __neg__(self):
        return RationalGF(-self.numerator, self.denominator)

    def __sub__(self, other):
        other = _coerce_gf(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce_gf(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _coerce_gf(other)
        if other is NotImplemented:
            return NotImplemented
        return RationalGF(
            self.numerator * other.numerator, self.denominator * other.denominator
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce_gf(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalGF(
            self.numerator * other.denominator, self.denominator * other.numerator
        )

    def __repr__(self):
        return (
            f"RationalGF({list(self.numerator.coeffs)!r}, "
            f"{list(self.denominator.coeffs)!r})"
        )

    def __str__(self):
        return format_gf(self)

    def series(self, upto: int) -> list:
        """Power-series coefficients 0..upto, exact.

        Integrality is not assumed: entries are ints when integral and
        ``Fraction`` otherwise (a fractional entry signals a malformed
        claimed generating function).
        """
        if self.denominator[0] == 0:
            raise ValueError(
                "denominator constant term is zero; series is not extractable"
            )
        d0 = self.denominator[0]
        out = []
        for n in range(upto + 1):
            acc = Fraction(self.numerator[n])
            for i in range(1, n + 1):
                di = self.denominator[i]
                if di:
                    acc -= di * out[n - i]
            val = acc / d0
            out.append(val)
        return [int(v) if v.denominator == 1 else v for v in out]


def _coerce_gf(value):
    if isinstance(value, RationalGF):
        return value
    if isinstance(value, (Polynomial, int)):
        return RationalGF(value, 1)
    return NotImplemented


def format_gf(gf: RationalGF, var: str = "x") -> str:
    """Render like ``(1 - x + 2x^2)/(1 - 3x - x^2 - 2x^3)``."""
    num = format_poly(gf.numerator, var)
    den = format_poly(gf.denominator, var)
    num_terms = sum(1 for c in gf.numerator.coeffs if c)
    den_terms = sum(1 for c in gf.denominator.coeffs if c)
    num_txt = f"({num})" if num_terms > 1 else num
    den_txt = f"({den})" if den_terms > 1 else den
    if gf.denominator == Polynomial.one():
        return num_txt
    return f"{num_txt}/{den_txt}"


def gf_to_json_dict(gf: RationalGF) -> dict:
    return {"num": list(gf.numerator.coeffs), "den": list(gf.denominator.coeffs)}
