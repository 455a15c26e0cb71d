"""Exact arithmetic in the deformation parameter.

AlphaPoly is a dense polynomial in one indeterminate (printed as "a") with
Fraction coefficients.  RatFunc is a quotient of two of them kept in lowest
terms with a monic denominator, which makes equality a plain comparison.
"""

from fractions import Fraction

from .errors import DivisionByZero, NotPolynomial, PoleAtPoint

__all__ = [
    "AlphaPoly", "RatFunc", "ALPHA", "ONE",
    "ratfunc_arith", "substitute_beta", "substitute_alpha",
    "eval_at", "poly_gcd",
]


def _frac(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError("expected int or Fraction, got %r" % (x,))


class AlphaPoly:
    """Coefficients ascending by degree; the zero polynomial stores nothing."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, (int, Fraction)):
            coeffs = (coeffs,)
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    def coeff(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # ---- ring operations ----

    @staticmethod
    def _coerce(other):
        if isinstance(other, AlphaPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return AlphaPoly((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return AlphaPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return AlphaPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.is_zero or o.is_zero:
            return AlphaPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(o.coeffs):
                    out[i + j] += ci * cj
        return AlphaPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        assert isinstance(n, int) and n >= 0
        out = AlphaPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return AlphaPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        lead = o.coeffs[-1]
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] / lead
            quo[k] = c
            if c:
                for j, oj in enumerate(o.coeffs):
                    rem[k + j] -= c * oj
        return AlphaPoly(quo), AlphaPoly(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Quotient when the division is known to be exact."""
        q, r = divmod(self, other)
        assert r.is_zero, "division was not exact"
        return q

    def monic(self):
        if self.is_zero:
            return self
        lead = self.coeffs[-1]
        return AlphaPoly([c / lead for c in self.coeffs])

    def __call__(self, x):
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def shift(self, c):
        """The composed polynomial p(a + c)."""
        c = _frac(c)
        acc = AlphaPoly()
        unit = AlphaPoly((c, 1))
        for coef in reversed(self.coeffs):
            acc = acc * unit + coef
        return acc

    # ---- comparisons ----

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else 0)
        return hash(self.coeffs)

    def __bool__(self):
        return not self.is_zero

    # ---- serialization ----

    def to_text(self, var="a"):
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            elif k == 1:
                parts.append("%s*%s" % (c, var))
            else:
                parts.append("%s*%s^%d" % (c, var, k))
        return " + ".join(parts).replace("+ -", "- ")

    @classmethod
    def from_text(cls, text, var="a"):
        s = text.strip()
        if s in ("", "0"):
            return cls()
        coeffs = {}
        for token in s.replace("- ", "+ -").split("+"):
            token = token.strip()
            if not token:
                continue
            if var in token:
                head, _, tail = token.partition(var)
                head = head.strip().rstrip("*").strip()
                if head in ("", "-"):
                    head += "1"
                power = int(tail.lstrip("^")) if tail else 1
                coef = Fraction(head)
            else:
                power = 0
                coef = Fraction(token)
            coeffs[power] = coeffs.get(power, Fraction(0)) + coef
        out = [Fraction(0)] * (max(coeffs) + 1)
        for k, c in coeffs.items():
            out[k] = c
        return cls(out)

    def to_json(self):
        return [[str(c.numerator), str(c.denominator)] for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls([Fraction(int(num), int(den)) for num, den in data])

    def __repr__(self):
        return "AlphaPoly(%s)" % self.to_text()


ALPHA = AlphaPoly((0, 1))
ONE = AlphaPoly((1,))


def poly_gcd(a, b):
    """Monic greatest common divisor over the rationals."""
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


class RatFunc:
    """Reduced quotient of AlphaPolys.  den is monic and coprime to num."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = num if isinstance(num, AlphaPoly) else AlphaPoly(num)
        den = den if isinstance(den, AlphaPoly) else AlphaPoly(den)
        if den.is_zero:
            raise DivisionByZero("zero denominator")
        if num.is_zero:
            self.num, self.den = AlphaPoly(), ONE
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
        lead = den.leading
        if lead != 1:
            num = num * (1 / lead)
            den = den * (1 / lead)
        self.num, self.den = num, den

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (AlphaPoly, int, Fraction)):
            return RatFunc(other)
        return None

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_polynomial(self):
        return self.den == ONE

    def as_poly(self):
        if not self.is_polynomial:
            raise NotPolynomial("denominator is %s" % self.den.to_text())
        return self.num

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.is_zero:
            raise DivisionByZero("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_polynomial:
            return hash(self.num)
        return hash((self.num.coeffs, self.den.coeffs))

    def __bool__(self):
        return not self.is_zero

    def eval_at(self, x):
        x = _frac(x)
        dv = self.den(x)
        if dv == 0:
            raise PoleAtPoint("denominator vanishes at %s" % x)
        return self.num(x) / dv

    def to_text(self, var="a"):
        if self.is_polynomial:
            return self.num.to_text(var)
        return "(%s)/(%s)" % (self.num.to_text(var), self.den.to_text(var))

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(AlphaPoly.from_json(data["num"]), AlphaPoly.from_json(data["den"]))

    def __repr__(self):
        return "RatFunc(%s)" % self.to_text()


_OPS = {
    "+": lambda a, b: a + b,
    "-": lambda a, b: a - b,
    "*": lambda a, b: a * b,
    "/": lambda a, b: a / b,
}
# unicode spellings accepted on input
_OPS["−"] = _OPS["-"]
_OPS["×"] = _OPS["*"]
_OPS["÷"] = _OPS["/"]


def ratfunc_arith(a, b, op):
    """Apply one of the four field operations, given by its symbol."""
    if op not in _OPS:
        raise ValueError("unknown operation %r" % (op,))
    return _OPS[op](RatFunc._coerce(a), RatFunc._coerce(b))


def _require_poly(p):
    if isinstance(p, RatFunc):
        return p.as_poly()
    if isinstance(p, AlphaPoly):
        return p
    return AlphaPoly(p)


def substitute_beta(p):
    """Rewrite p(a) as a polynomial in b where a = b + 1."""
    return _require_poly(p).shift(1)


def substitute_alpha(q):
    """Inverse of substitute_beta."""
    return _require_poly(q).shift(-1)


def eval_at(p, x):
    """Exact value of a polynomial or rational function at a rational point."""
    if isinstance(p, AlphaPoly):
        return p(x)
    return RatFunc._coerce(p).eval_at(x)
