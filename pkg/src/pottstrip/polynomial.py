"""Exact polynomial and rational-function arithmetic in the variables Q, v, Q0.

Everything this package computes -- transfer-matrix entries, partition
functions, amplitudes, duality prefactors -- is a sparse polynomial in the
cluster weight Q, the bond weight v and the boundary cluster weight Q0, with
arbitrary-precision rational coefficients.  No floats appear anywhere, so
every identity can be asserted with zero tolerance.

A monomial is an exponent triple ``(deg_Q, deg_v, deg_Q0)``; monomials are
ordered lexicographically on that triple, and a polynomial's terms are
serialized in decreasing monomial order so output is deterministic.

Substituting a quotient for a variable (e.g. the dual temperature v -> Q/v)
leaves the polynomial ring; the result is a :class:`RationalFunction`, a
normalized numerator/denominator pair.  Normalization removes the common
monomial content and scales the denominator to be primitive with positive
leading coefficient; cancellation of non-trivial polynomial GCDs is not
attempted, so equality of rational functions is decided by cross
multiplication.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Iterator, Mapping, Union

VARIABLES = ("Q", "v", "Q0")

Monomial = tuple[int, int, int]
Scalar = Union[int, Fraction]

_ZERO = Fraction(0)


def _var_index(name: str) -> int:
    try:
        return VARIABLES.index(name)
    except ValueError:
        raise ValueError(f"unknown variable {name!r}; expected one of {VARIABLES}") from None


class MultiPoly:
    """A sparse polynomial in (Q, v, Q0) over the rationals.

    Instances are immutable; arithmetic returns new objects and never keeps a
    zero coefficient, so two polynomials are equal iff their term dicts are.

    >>> p = Q + v
    >>> print(p * p)
    Q^2 + 2*Q*v + v^2
    >>> print((Q - 1) ** 0)
    1
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if not c:
                    continue
                dq, dv, dq0 = mono
                if dq < 0 or dv < 0 or dq0 < 0:
                    raise ValueError(f"negative exponent in monomial {mono}")
                clean[(int(dq), int(dv), int(dq0))] = c
        self._terms = clean

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls) -> "MultiPoly":
        return cls()

    @classmethod
    def one(cls) -> "MultiPoly":
        return cls({(0, 0, 0): 1})

    @classmethod
    def constant(cls, c: Scalar) -> "MultiPoly":
        return cls({(0, 0, 0): Fraction(c)})

    @classmethod
    def variable(cls, name: str) -> "MultiPoly":
        mono = [0, 0, 0]
        mono[_var_index(name)] = 1
        return cls({tuple(mono): 1})

    @classmethod
    def monomial(cls, coeff: Scalar, mono: Monomial) -> "MultiPoly":
        return cls({mono: Fraction(coeff)})

    # ------------------------------------------------------------------
    # inspection

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        """Yield (monomial, coefficient) pairs in decreasing monomial order."""
        for mono in sorted(self._terms, reverse=True):
            yield mono, self._terms[mono]

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), _ZERO)

    def degree(self, name: str) -> int:
        """Largest exponent of ``name`` appearing; 0 for the zero polynomial."""
        i = _var_index(name)
        return max((m[i] for m in self._terms), default=0)

    def variables(self) -> frozenset[str]:
        """Names of the variables that actually occur."""
        used = [False, False, False]
        for m in self._terms:
            for i in range(3):
                used[i] = used[i] or m[i] > 0
        return frozenset(n for i, n in enumerate(VARIABLES) if used[i])

    def leading_monomial(self) -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.leading_monomial()]

    def content(self) -> Fraction:
        """The positive rational c with self/c integral and primitive."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = gcd(num, c.numerator)
            den = lcm(den, c.denominator)
        return Fraction(num, den)

    # ------------------------------------------------------------------
    # ring operations

    def _scaled(self, c: Fraction) -> "MultiPoly":
        if not c:
            return MultiPoly()
        return MultiPoly({m: k * c for m, k in self._terms.items()})

    @staticmethod
    def _coerce(other) -> "MultiPoly | None":
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.constant(other)
        return None

    def __add__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in q._terms.items():
            s = out.get(m, _ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        res = MultiPoly()
        res._terms = out
        return res

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return self._scaled(Fraction(-1))

    def __sub__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "MultiPoly":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in q._terms.items():
                m = (m1[0] + m2[0], m1[1] + m2[1], m1[2] + m2[2])
                s = out.get(m, _ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    out.pop(m, None)
        res = MultiPoly()
        res._terms = out
        return res

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "MultiPoly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        result = MultiPoly.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self._terms == q._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # ------------------------------------------------------------------
    # substitution and evaluation

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        """Exact value at a rational point.

        Raises ValueError if a variable occurring in the polynomial has no
        assigned value.  Extra assignments are ignored.
        """
        vals = []
        for i, name in enumerate(VARIABLES):
            if name in assignment:
                vals.append(Fraction(assignment[name]))
            else:
                if any(m[i] > 0 for m in self._terms):
                    raise ValueError(f"no value assigned to variable {name!r}")
                vals.append(_ZERO)
        total = Fraction(0)
        for m, c in self._terms.items():
            total += c * vals[0] ** m[0] * vals[1] ** m[1] * vals[2] ** m[2]
        return total

    def subs_poly(self, name: str, value: "MultiPoly | Scalar") -> "MultiPoly":
        """Substitute a polynomial (or constant) for a variable."""
        val = self._coerce(value)
        if val is None:
            raise TypeError("subs_poly needs a MultiPoly or rational constant")
        i = _var_index(name)
        out = MultiPoly.zero()
        powers: dict[int, MultiPoly] = {0: MultiPoly.one()}

        def power(e: int) -> MultiPoly:
            if e not in powers:
                powers[e] = power(e - 1) * val
            return powers[e]

        for m, c in self._terms.items():
            rest = list(m)
            e = rest[i]
            rest[i] = 0
            out = out + MultiPoly.monomial(c, tuple(rest)) * power(e)
        return out

    def substitute(self, name: str, value: "RationalFunction | MultiPoly | Scalar") -> "RationalFunction":
        """Substitute a rational function for a variable.

        >>> print((v * v).substitute("v", RationalFunction(Q, v)))
        (Q^2)/(v^2)
        """
        if not isinstance(value, RationalFunction):
            coerced = self._coerce(value)
            if coerced is None:
                raise TypeError("substitute needs a RationalFunction, MultiPoly or rational")
            return RationalFunction(self.subs_poly(name, coerced), MultiPoly.one())
        i = _var_index(name)
        d = self.degree(name)
        num = MultiPoly.zero()
        num_pows: dict[int, MultiPoly] = {0: MultiPoly.one()}
        den_pows: dict[int, MultiPoly] = {0: MultiPoly.one()}

        def grow(cache: dict[int, MultiPoly], base: MultiPoly, e: int) -> MultiPoly:
            if e not in cache:
                cache[e] = grow(cache, base, e - 1) * base
            return cache[e]

        for m, c in self._terms.items():
            rest = list(m)
            e = rest[i]
            rest[i] = 0
            term = MultiPoly.monomial(c, tuple(rest))
            term = term * grow(num_pows, value.num, e)
            term = term * grow(den_pows, value.den, d - e)
            num = num + term
        return RationalFunction(num, grow(den_pows, value.den, d))

    def quotient_by_monomial(self, mono: Monomial) -> "MultiPoly":
        """Exact division by a monomial; every term must be divisible.

        A failure here means a quantity expected to carry a factor (such as
        Q**j in a partition-function sector with j wrapping clusters) does
        not, i.e. an upstream bug -- so it raises rather than truncating.
        """
        dq, dv, dq0 = mono
        out: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            if m[0] < dq or m[1] < dv or m[2] < dq0:
                raise ValueError(
                    f"{self} is not divisible by monomial {mono}"
                )
            out[(m[0] - dq, m[1] - dv, m[2] - dq0)] = c
        res = MultiPoly()
        res._terms = out
        return res

    # ------------------------------------------------------------------
    # serialization

    def to_json_obj(self) -> list[dict]:
        """JSON-ready encoding: one object per term, decreasing monomial order.

        Coefficients are decimal strings ("3", "-1/2") so the round trip is
        bit exact.
        """
        out = []
        for mono, c in self.terms():
            out.append(
                {
                    "Q": mono[0],
                    "v": mono[1],
                    "Q0": mono[2],
                    "coeff": str(c),
                }
            )
        return out

    @classmethod
    def from_json_obj(cls, data) -> "MultiPoly":
        if not isinstance(data, list):
            raise ValueError("polynomial encoding must be a list of term objects")
        terms: dict[Monomial, Fraction] = {}
        for item in data:
            if not isinstance(item, dict):
                raise ValueError("each term must be an object")
            try:
                mono = (int(item["Q"]), int(item["v"]), int(item["Q0"]))
                coeff = Fraction(item["coeff"])
            except (KeyError, ValueError, TypeError) as exc:
                raise ValueError(f"malformed polynomial term {item!r}") from exc
            if mono in terms:
                raise ValueError(f"duplicate monomial {mono}")
            terms[mono] = coeff
        return cls(terms)

    # ------------------------------------------------------------------
    # display

    @staticmethod
    def _format_monomial(mono: Monomial) -> str:
        parts = []
        for name, e in zip(VARIABLES, mono):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for i, (mono, c) in enumerate(self.terms()):
            mono_s = self._format_monomial(mono)
            mag = abs(c)
            if mono_s and mag == 1:
                body = mono_s
            elif mono_s:
                body = f"{mag}*{mono_s}"
            else:
                body = str(mag)
            if i == 0:
                sign = "-" if c < 0 else ""
                pieces.append(f"{sign}{body}")
            else:
                pieces.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


class RationalFunction:
    """A quotient of two MultiPoly values, kept in a normalized form.

    Normalization cancels the common monomial content of numerator and
    denominator and rescales so the denominator is integral, primitive and
    has positive leading coefficient.  Polynomial GCDs beyond that are not
    cancelled, so ``==`` compares by cross multiplication.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: MultiPoly, den: MultiPoly | Scalar = 1):
        if not isinstance(num, MultiPoly):
            num = MultiPoly.constant(num)
        coerced = MultiPoly._coerce(den)
        if coerced is None:
            raise TypeError("denominator must be a MultiPoly or rational")
        den = coerced
        if den.is_zero:
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero:
            num, den = MultiPoly.zero(), MultiPoly.one()
        else:
            shift = tuple(
                min(
                    min(m[i] for m in num._terms),
                    min(m[i] for m in den._terms),
                )
                for i in range(3)
            )
            if any(shift):
                num = num.quotient_by_monomial(shift)
                den = den.quotient_by_monomial(shift)
            scale = den.content()
            if den.leading_coefficient() < 0:
                scale = -scale
            num = num._scaled(1 / scale)
            den = den._scaled(1 / scale)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, p: MultiPoly | Scalar) -> "RationalFunction":
        coerced = MultiPoly._coerce(p)
        if coerced is None:
            raise TypeError("from_poly needs a MultiPoly or rational")
        return cls(coerced, MultiPoly.one())

    @property
    def is_polynomial(self) -> bool:
        return self.den == MultiPoly.one()

    def as_poly(self) -> MultiPoly:
        if not self.is_polynomial:
            raise ValueError(f"{self} is not in polynomial form")
        return self.num

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    @staticmethod
    def _coerce(other) -> "RationalFunction | None":
        if isinstance(other, RationalFunction):
            return other
        p = MultiPoly._coerce(other)
        if p is None:
            return None
        return RationalFunction(p, MultiPoly.one())

    def __add__(self, other) -> "RationalFunction":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return RationalFunction(self.num * q.den + q.num * self.den, self.den * q.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other) -> "RationalFunction":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self + (-q)

    def __rsub__(self, other) -> "RationalFunction":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q + (-self)

    def __mul__(self, other) -> "RationalFunction":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return RationalFunction(self.num * q.num, self.den * q.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        if q.num.is_zero:
            raise ZeroDivisionError("division by zero rational function")
        return RationalFunction(self.num * q.den, self.den * q.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return q / self

    def __pow__(self, n: int) -> "RationalFunction":
        if not isinstance(n, int):
            raise ValueError("rational-function powers must be integers")
        if n < 0:
            if self.num.is_zero:
                raise ZeroDivisionError("negative power of zero")
            return RationalFunction(self.den ** (-n), self.num ** (-n))
        return RationalFunction(self.num ** n, self.den ** n)

    def __eq__(self, other) -> bool:
        q = self._coerce(other)
        if q is None:
            return NotImplemented
        return self.num * q.den == q.num * self.den

    __hash__ = None  # equality is cross-multiplicative, not structural

    def subs_poly(self, name: str, value: MultiPoly | Scalar) -> "RationalFunction":
        return RationalFunction(self.num.subs_poly(name, value), self.den.subs_poly(name, value))

    def evaluate(self, assignment: Mapping[str, Scalar]) -> Fraction:
        d = self.den.evaluate(assignment)
        if not d:
            raise ZeroDivisionError(f"denominator {self.den} vanishes at {dict(assignment)}")
        return self.num.evaluate(assignment) / d

    def to_json_obj(self) -> dict:
        return {"num": self.num.to_json_obj(), "den": self.den.to_json_obj()}

    @classmethod
    def from_json_obj(cls, data) -> "RationalFunction":
        if not isinstance(data, dict) or "num" not in data or "den" not in data:
            raise ValueError("rational function encoding must have num and den")
        return cls(MultiPoly.from_json_obj(data["num"]), MultiPoly.from_json_obj(data["den"]))

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"


#: The three generators of the coefficient ring, ready for expressions
#: like ``(Q + v) ** 3 - Q0 * v``.
Q = MultiPoly.variable("Q")
v = MultiPoly.variable("v")
Q0 = MultiPoly.variable("Q0")

ZERO = MultiPoly.zero()
ONE = MultiPoly.one()
