"""Scalar domains.

Entries of a :class:`~matorder.matrix.Matrix` are stored as native Python
values; the matrix carries a single :class:`Domain` that says how to read
them:

======================  ======================  ==========================
domain                  payload type            text token
======================  ======================  ==========================
``INT``                 ``int``                 ``-3``
``ModDomain(m)``        ``int`` in ``[0, m)``   ``4``
``RAT``                 ``Fraction``            ``-3/4``
``GAUSS``               ``GaussianRational``    ``1/2-3i``
``CF64``                ``complex``             ``1.5e-3+2i``
======================  ======================  ==========================
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, NamedTuple, Union


class DomainError(ValueError):
    """Raised for mixed-domain or unsupported-domain operations."""


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0):
        if isinstance(re, GaussianRational):
            if im:
                raise TypeError("cannot combine GaussianRational real part with imaginary part")
            re, im = re.re, re.im
        object.__setattr__(self, "re", _exact_fraction(re))
        object.__setattr__(self, "im", _exact_fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    @staticmethod
    def _lift(other: Any) -> "GaussianRational | None":
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        d = o.norm2()
        if d == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({self.re!s}, {self.im!s})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


def _exact_fraction(x: Any) -> Fraction:
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"expected int or Fraction, got {type(x).__name__}")


# --------------------------------------------------------------------------
# text tokens

_RAT = r"\d+(?:/\d+)?"
_FLT = r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?"
_INT_RE = re.compile(r"[+-]?\d+")
_RAT_RE = re.compile(rf"[+-]?{_RAT}")


def _complex_re(num: str) -> re.Pattern:
    return re.compile(
        rf"(?:(?P<re>[+-]?{num})(?:(?P<sign>[+-])(?P<im>{num})?i)?"
        rf"|(?P<isign>[+-]?)(?P<imonly>{num})?i)"
    )


_GAUSS_RE = _complex_re(_RAT)
_CF_RE = _complex_re(_FLT)


def _parse_rat(tok: str) -> Fraction:
    if "/" in tok:
        p, q = tok.split("/")
        if int(q) == 0:
            raise ValueError("zero denominator")
        return Fraction(int(p), int(q))
    return Fraction(int(tok))


def _split_complex(pattern: re.Pattern, tok: str):
    m = pattern.fullmatch(tok)
    if m is None:
        return None
    if m.group("re") is not None:
        re_part = m.group("re")
        if m.group("sign") is None:
            return re_part, None
        return re_part, m.group("sign") + (m.group("im") or "1")
    return None, (m.group("isign") or "+") + (m.group("imonly") or "1")


# --------------------------------------------------------------------------
# domains


@dataclass(frozen=True)
class Domain:
    """Base class; concrete domains are frozen singletons (``ModDomain`` per modulus)."""

    exact = True
    is_field = False

    @property
    def tag(self) -> str:
        raise NotImplementedError

    def coerce(self, value: Any) -> Any:
        raise NotImplementedError

    def normalize(self, value: Any) -> Any:
        return value

    def zero(self) -> Any:
        return self.coerce(0)

    def one(self) -> Any:
        return self.coerce(1)

    def conj(self, value: Any) -> Any:
        return value

    def inv(self, value: Any) -> Any:
        raise DomainError(f"division is not available in {self.tag}")

    def parse(self, token: str) -> Any:
        raise NotImplementedError

    def format(self, value: Any) -> str:
        return str(value)

    def __str__(self):
        return self.tag


@dataclass(frozen=True)
class IntDomain(Domain):
    @property
    def tag(self) -> str:
        return "int"

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            if isinstance(value, Fraction) and value.denominator == 1:
                return int(value)
            raise DomainError(f"int domain cannot hold {value!r}")
        return value

    def parse(self, token):
        if not _INT_RE.fullmatch(token):
            raise ValueError(f"malformed integer {token!r}")
        return int(token)


@dataclass(frozen=True)
class ModDomain(Domain):
    m: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise DomainError(f"modulus must be a positive integer, got {self.m!r}")

    @property
    def tag(self) -> str:
        return f"mod:{self.m}"

    @property
    def is_field(self) -> bool:
        return is_prime(self.m)

    def coerce(self, value):
        if isinstance(value, bool) or not isinstance(value, int):
            raise DomainError(f"mod:{self.m} domain cannot hold {value!r}")
        return value % self.m

    def normalize(self, value):
        return value % self.m

    def inv(self, value):
        if not self.is_field:
            raise DomainError(f"mod:{self.m} is not a field")
        if value % self.m == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(value, -1, self.m)

    def parse(self, token):
        if not re.fullmatch(r"\d+", token):
            raise ValueError(f"malformed residue {token!r}")
        v = int(token)
        if v >= self.m:
            raise ValueError(f"residue {v} out of range [0, {self.m})")
        return v


@dataclass(frozen=True)
class RationalDomain(Domain):
    is_field = True

    @property
    def tag(self) -> str:
        return "rat"

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            if value.im != 0:
                raise DomainError(f"rat domain cannot hold {value}")
            return value.re
        return _exact_fraction(value)

    def inv(self, value):
        return 1 / Fraction(value)

    def parse(self, token):
        if not _RAT_RE.fullmatch(token):
            raise ValueError(f"malformed rational {token!r}")
        return _parse_rat(token)


@dataclass(frozen=True)
class GaussianDomain(Domain):
    is_field = True

    @property
    def tag(self) -> str:
        return "gauss"

    def coerce(self, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise DomainError("gauss domain does not accept floats")
        return GaussianRational(value)

    def conj(self, value):
        return value.conjugate()

    def inv(self, value):
        return 1 / value

    def parse(self, token):
        parts = _split_complex(_GAUSS_RE, token)
        if parts is None:
            raise ValueError(f"malformed Gaussian rational {token!r}")
        re_tok, im_tok = parts
        re_v = _parse_rat(re_tok) if re_tok else Fraction(0)
        im_v = _parse_rat(im_tok) if im_tok else Fraction(0)
        return GaussianRational(re_v, im_v)


@dataclass(frozen=True)
class ComplexFloatDomain(Domain):
    exact = False
    is_field = True

    @property
    def tag(self) -> str:
        return "cf64"

    def coerce(self, value):
        if isinstance(value, bool):
            raise DomainError("bool is not a scalar")
        try:
            z = complex(value)
        except TypeError as exc:
            raise DomainError(f"cf64 domain cannot hold {value!r}") from exc
        if not cmath.isfinite(z):
            raise DomainError(f"non-finite value {value!r}")
        return z

    def conj(self, value):
        return value.conjugate()

    def inv(self, value):
        return 1 / value

    def parse(self, token):
        parts = _split_complex(_CF_RE, token)
        if parts is None:
            raise ValueError(f"malformed complex float {token!r}")
        re_tok, im_tok = parts
        return complex(float(re_tok) if re_tok else 0.0, float(im_tok) if im_tok else 0.0)

    def format(self, value):
        re_s = repr(float(value.real))
        if value.imag == 0:
            return re_s
        sign = "-" if math.copysign(1.0, value.imag) < 0 else "+"
        return f"{re_s}{sign}{abs(value.imag)!r}i"


INT = IntDomain()
RAT = RationalDomain()
GAUSS = GaussianDomain()
CF64 = ComplexFloatDomain()


@lru_cache(maxsize=None)
def mod(m: int) -> ModDomain:
    return ModDomain(m)


def domain_from_tag(tag: str) -> Domain:
    if tag == "int":
        return INT
    if tag == "rat":
        return RAT
    if tag == "gauss":
        return GAUSS
    if tag == "cf64":
        return CF64
    m = re.fullmatch(r"mod:(\d+)", tag)
    if m and int(m.group(1)) >= 1:
        return mod(int(m.group(1)))
    raise DomainError(f"unknown domain tag {tag!r}")


def is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


class Scalar(NamedTuple):
    """A single tagged scalar, as returned by :meth:`Matrix.scalar`."""

    domain: Domain
    value: Union[int, Fraction, GaussianRational, complex]

    def __str__(self):
        return self.domain.format(self.value)
