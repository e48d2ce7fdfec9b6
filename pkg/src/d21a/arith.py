"""Exact arithmetic in Q(a), rational functions in one indeterminate.

Polynomials are tuples of ``gmpy2.mpq`` coefficients, lowest degree first,
with no trailing zeros (the zero polynomial is ``()``).
A :class:`Scalar` is a reduced fraction of two such polynomials whose
denominator is monic, so two equal scalars are structurally equal.
"""
from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Optional, Tuple, Union

from gmpy2 import mpq

Poly = Tuple[mpq, ...]

_ZERO: Poly = ()
_ONE: Poly = (mpq(1),)


class ScalarSyntaxError(ValueError):
    """Raised by :func:`parse_scalar` with the offending character position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


# ---------------------------------------------------------------------------
# dense polynomial helpers over Q


def _strip(c) -> Poly:
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _padd(p: Poly, q: Poly) -> Poly:
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _strip(out)


def _pneg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def _psub(p: Poly, q: Poly) -> Poly:
    return _padd(p, _pneg(q))


def _pmul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return _ZERO
    if len(p) == 1:
        c = p[0]
        return tuple(c * x for x in q)
    if len(q) == 1:
        c = q[0]
        return tuple(c * x for x in p)
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _strip(out)


def _pscale(p: Poly, c: mpq) -> Poly:
    if not c:
        return _ZERO
    return tuple(c * x for x in p)


def _pdivmod(p: Poly, q: Poly) -> Tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lead = q[-1]
    if len(r) - 1 < dq:
        return _ZERO, tuple(r)
    quo = [mpq(0)] * (len(r) - dq)
    for k in range(len(r) - 1 - dq, -1, -1):
        c = r[k + dq] / lead
        quo[k] = c
        if c:
            for j, b in enumerate(q):
                r[k + j] -= c * b
    return _strip(quo), _strip(r[:dq])


def _pmonic(p: Poly) -> Poly:
    lead = p[-1]
    if lead == 1:
        return p
    return tuple(c / lead for c in p)


def _pgcd(p: Poly, q: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm over Q."""
    while q:
        p, q = q, _pdivmod(p, q)[1]
    return _pmonic(p) if p else _ZERO


def _peval(p: Poly, x) -> mpq:
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------


class Scalar:
    """An element of Q(a), stored as a reduced fraction with monic denominator."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, value: Union["Scalar", int, Fraction, str] = 0):
        if isinstance(value, Scalar):
            self.num, self.den = value.num, value.den
        elif isinstance(value, str):
            other = parse_scalar(value)
            self.num, self.den = other.num, other.den
        else:
            v = mpq(value) if not isinstance(value, Fraction) else mpq(value.numerator, value.denominator)
            self.num = (v,) if v else _ZERO
            self.den = _ONE
        self._hash = None

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "Scalar":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        obj._hash = None
        return obj

    @classmethod
    def from_polys(cls, num, den=_ONE) -> "Scalar":
        """Build ``num/den`` from coefficient sequences (lowest degree first)."""
        num = _strip(_q(c) for c in num)
        den = _strip(_q(c) for c in den)
        if not den:
            raise ZeroDivisionError("zero denominator")
        return cls._normalized(num, den)

    @classmethod
    def _normalized(cls, num: Poly, den: Poly) -> "Scalar":
        if not num:
            return cls._raw(_ZERO, _ONE)
        if len(den) > 1:
            g = _pgcd(num, den)
            if len(g) > 1:
                num = _pdivmod(num, g)[0]
                den = _pdivmod(den, g)[0]
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return cls._raw(num, den)

    @classmethod
    def alpha(cls) -> "Scalar":
        """The indeterminate itself."""
        return cls._raw((mpq(0), mpq(1)), _ONE)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_constant(self) -> bool:
        return len(self.num) <= 1 and len(self.den) == 1

    def is_polynomial(self) -> bool:
        return len(self.den) == 1

    def constant(self) -> Fraction:
        """The rational value of a constant scalar."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return _frac(self.num[0]) if self.num else Fraction(0)

    def as_integer(self) -> Optional[int]:
        """The integer ``n`` if this scalar is the constant ``n``, else ``None``."""
        if not self.is_constant():
            return None
        v = self.constant()
        return int(v) if v.denominator == 1 else None

    def specialize(self, alpha0) -> Fraction:
        """Evaluate at ``a = alpha0``; the parameter values 0 and -1 are excluded."""
        alpha0 = Fraction(alpha0)
        if alpha0 in (0, -1):
            raise ValueError(f"alpha = {alpha0} is excluded")
        x = _q(alpha0)
        d = _peval(self.den, x)
        if d == 0:
            raise ZeroDivisionError(f"pole of {self} at alpha = {alpha0}")
        return _frac(_peval(self.num, x) / d)

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num:
            return other
        if not other.num:
            return self
        if self.den == other.den:
            if len(self.den) == 1:
                return Scalar._raw(_padd(self.num, other.num), _ONE)
            return Scalar._normalized(_padd(self.num, other.num), self.den)
        b, d = self.den, other.den
        g = _pgcd(b, d) if len(b) > 1 and len(d) > 1 else _ONE
        if len(g) > 1:
            b_g, d_g = _pdivmod(b, g)[0], _pdivmod(d, g)[0]
        else:
            b_g, d_g = b, d
        t = _padd(_pmul(self.num, d_g), _pmul(other.num, b_g))
        if not t:
            return ZERO
        # any common factor of t and b*d/g divides g
        if len(g) > 1:
            g2 = _pgcd(t, g)
            if len(g2) > 1:
                t = _pdivmod(t, g2)[0]
                g = _pdivmod(g, g2)[0]
        den = _pmul(_pmul(b_g, d_g), g)
        lead = den[-1]
        if lead != 1:
            t = tuple(c / lead for c in t)
            den = tuple(c / lead for c in den)
        return Scalar._raw(t, den)

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(_pneg(self.num), self.den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self.num or not other.num:
            return ZERO
        if len(self.den) == 1 and len(other.den) == 1:
            return Scalar._raw(_pmul(self.num, other.num), _ONE)
        # cancel across before multiplying: both inputs are already reduced
        n1, d1, n2, d2 = self.num, self.den, other.num, other.den
        if len(d2) > 1 and len(n1) > 1:
            g = _pgcd(n1, d2)
            if len(g) > 1:
                n1, d2 = _pdivmod(n1, g)[0], _pdivmod(d2, g)[0]
        if len(d1) > 1 and len(n2) > 1:
            g = _pgcd(n2, d1)
            if len(g) > 1:
                n2, d1 = _pdivmod(n2, g)[0], _pdivmod(d1, g)[0]
        num, den = _pmul(n1, n2), _pmul(d1, d2)
        lead = den[-1]
        if lead != 1:
            num = tuple(c / lead for c in num)
            den = tuple(c / lead for c in den)
        return Scalar._raw(num, den)

    __rmul__ = __mul__

    def inverse(self) -> "Scalar":
        if not self.num:
            raise ZeroDivisionError("division by zero scalar")
        return Scalar._normalized(self.den, self.num)

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other.num:
            raise ZeroDivisionError("division by zero scalar")
        if other.is_constant():
            c = other.num[0]
            return Scalar._raw(tuple(x / c for x in self.num), self.den)
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self.num == other.num and self.den == other.den

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __hash__(self):
        if self._hash is None:
            if self.is_constant():
                self._hash = hash(self.constant())
            else:
                self._hash = hash((self.num, self.den))
        return self._hash

    def __bool__(self):
        return bool(self.num)

    # -- printing ---------------------------------------------------------

    def __str__(self):
        if self.is_constant():
            return _fmt_rational(self.constant())
        if len(self.den) == 1:
            return _fmt_poly(self.num)
        return f"{_fmt_poly(self.num)}/{_fmt_poly(self.den)}"

    def __repr__(self):
        return f"Scalar({str(self)!r})"


def _q(x) -> mpq:
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    return mpq(x)


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def _coerce(x) -> Scalar:
    if isinstance(x, Scalar):
        return x
    if isinstance(x, (int, Rational)):
        return Scalar(x)
    return NotImplemented


def _fmt_rational(c) -> str:
    if c < 0:
        return f"(-{_fmt_rational(-c)})"
    if c.denominator == 1:
        return str(c.numerator)
    return f"({c.numerator}/{c.denominator})"


def _fmt_poly(p: Poly) -> str:
    terms = []
    for k, c in enumerate(p):
        if not c:
            continue
        factors = [_fmt_rational(c)] if (k == 0 or c != 1) else []
        factors += ["a"] * k
        terms.append("*".join(factors))
    if len(terms) == 1:
        return f"({terms[0]})"
    return "(" + "+".join(terms) + ")"


ZERO = Scalar(0)
ONE = Scalar(1)
ALPHA = Scalar.alpha()


def as_scalar(x) -> Scalar:
    """Coerce ints, Fractions and expression strings to :class:`Scalar`."""
    if isinstance(x, Scalar):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    return Scalar(x)


def as_integer(x: Scalar) -> Optional[int]:
    return as_scalar(x).as_integer()


def specialize(x: Scalar, alpha0) -> Fraction:
    return as_scalar(x).specialize(alpha0)


def substitute(x: Scalar, alpha0) -> Scalar:
    """Specialize ``x`` at ``alpha0`` and return the value as a constant Scalar."""
    return Scalar(specialize(x, alpha0))


def is_positive_integer(x: Scalar) -> bool:
    n = as_scalar(x).as_integer()
    return n is not None and n >= 1


# ---------------------------------------------------------------------------
# parser
#
#   expr   := term (('+'|'-') term)*
#   term   := factor (('*'|'/') factor)*
#   factor := RATIONAL | 'a' | '(' expr ')' | '-' factor
#   RATIONAL := INT ('/' INT)?
#
# A RATIONAL's optional '/INT' is consumed greedily; the value is identical to
# reading it as a division, so precedence is unaffected.


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _int(self) -> int:
        self._skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ScalarSyntaxError("expected integer", start)
        return int(self.text[start:self.pos])

    def parse(self) -> Scalar:
        value = self.expr()
        self._skip()
        if self.pos != len(self.text):
            raise ScalarSyntaxError(f"unexpected {self.text[self.pos]!r}", self.pos)
        return value

    def expr(self) -> Scalar:
        value = self.term()
        while self._peek() in ("+", "-") and self._peek():
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> Scalar:
        value = self.factor()
        while self._peek() in ("*", "/") and self._peek():
            op = self.text[self.pos]
            at = self.pos
            self.pos += 1
            rhs = self.factor()
            if op == "*":
                value = value * rhs
            else:
                if rhs.is_zero():
                    raise ZeroDivisionError(f"division by zero at position {at}")
                value = value / rhs
        return value

    def factor(self) -> Scalar:
        ch = self._peek()
        if ch == "":
            raise ScalarSyntaxError("unexpected end of input", self.pos)
        if ch.isdigit():
            n = self._int()
            save = self.pos
            self._skip()
            if self._peek() == "/":
                self.pos += 1
                self._skip()
                if self.pos < len(self.text) and self.text[self.pos].isdigit():
                    at = self.pos
                    d = self._int()
                    if d == 0:
                        raise ZeroDivisionError(f"division by zero at position {at}")
                    return Scalar(Fraction(n, d))
                self.pos = save
            else:
                self.pos = save
            return Scalar(n)
        if ch == "a":
            self.pos += 1
            return ALPHA
        if ch == "(":
            self.pos += 1
            value = self.expr()
            if self._peek() != ")":
                raise ScalarSyntaxError("expected ')'", self.pos)
            self.pos += 1
            return value
        if ch == "-":
            self.pos += 1
            return -self.factor()
        raise ScalarSyntaxError(f"unexpected {ch!r}", self.pos)


def parse_scalar(text: str) -> Scalar:
    """Parse a scalar expression in ``a``, e.g. ``"(2*a+2)/(a+1)"``."""
    return _Parser(text).parse()
