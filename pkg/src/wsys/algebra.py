"""Exact sparse multivariate polynomial arithmetic over the rationals.

Variables are named by strings drawn from a fixed alphabet:

* ``"N"`` -- the dimension parameter,
* ``"C1", "C2", ...`` -- the Casimir variables (any positive index),
* ``"eps", "z", "u", "v", "w", "x", "y"`` -- specialization variables.

The fixed total order on variables is ``N < C1 < C2 < ... < eps < z < u <
v < w < x < y``; it determines the canonical ordering of factors inside a
monomial and the canonical ordering of monomials in the printed form (see
:func:`poly_to_string`).

:class:`RatFunc` is a univariate rational function in ``z`` whose
denominator is a power of ``1 - z`` (the only pole the interlace family
ever produces); it is kept normalized so equality is structural.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Union

from .errors import DomainError

# A monomial is a tuple of (variable, exponent) pairs, sorted by the fixed
# variable order, with all exponents positive.  The empty tuple is the
# constant monomial.
Monomial = tuple[tuple[str, int], ...]

Coeflike = Union[int, Fraction]
Polylike = Union["Poly", int, Fraction]

_FIXED_VARS = {
    "N": (0, 0),
    "eps": (2, 0),
    "z": (2, 1),
    "u": (2, 2),
    "v": (2, 3),
    "w": (2, 4),
    "x": (2, 5),
    "y": (2, 6),
}


def var_key(name: str) -> tuple[int, int]:
    """Sort key realizing the fixed variable order."""
    if name in _FIXED_VARS:
        return _FIXED_VARS[name]
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) >= 1:
        return (1, int(name[1:]))
    raise DomainError(f"unknown variable {name!r}")


def casimir(k: int) -> str:
    """Name of the k-th Casimir variable."""
    if k < 1:
        raise DomainError(f"Casimir index must be >= 1, got {k}")
    return f"C{k}"


def _frac(value: Coeflike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise DomainError(f"not a rational coefficient: {value!r}")


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps: dict[str, int] = dict(a)
    for var, e in b:
        exps[var] = exps.get(var, 0) + e
    return tuple(sorted(exps.items(), key=lambda it: var_key(it[0])))


class Poly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, Coeflike] | None = None):
        cleaned: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coef in terms.items():
                c = _frac(coef)
                if c:
                    cleaned[mono] = c
        object.__setattr__(self, "terms", cleaned)

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls()

    @classmethod
    def one(cls) -> "Poly":
        return cls({(): Fraction(1)})

    @classmethod
    def const(cls, value: Coeflike) -> "Poly":
        return cls({(): _frac(value)})

    @classmethod
    def var(cls, name: str, exp: int = 1) -> "Poly":
        var_key(name)  # validates
        if exp < 0:
            raise DomainError(f"negative exponent {exp} for {name}")
        if exp == 0:
            return cls.one()
        return cls({((name, exp),): Fraction(1)})

    @staticmethod
    def coerce(value: Polylike) -> "Poly":
        if isinstance(value, Poly):
            return value
        return Poly.const(value)

    # -- ring structure -------------------------------------------------

    def __add__(self, other: Polylike) -> "Poly":
        other = Poly.coerce(other)
        terms = dict(self.terms)
        for mono, coef in other.terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coef
        return Poly(terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly({mono: -coef for mono, coef in self.terms.items()})

    def __sub__(self, other: Polylike) -> "Poly":
        return self + (-Poly.coerce(other))

    def __rsub__(self, other: Polylike) -> "Poly":
        return Poly.coerce(other) - self

    def __mul__(self, other: Polylike) -> "Poly":
        other = Poly.coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                terms[mono] = terms.get(mono, Fraction(0)) + c1 * c2
        return Poly(terms)

    __rmul__ = __mul__

    def __pow__(self, exp: int) -> "Poly":
        if exp < 0:
            raise DomainError(f"negative exponent {exp}")
        result = Poly.one()
        for _ in range(exp):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def variables(self) -> set[str]:
        return {var for mono in self.terms for var, _ in mono}

    def total_degree(self) -> int:
        return max((sum(e for _, e in mono) for mono in self.terms), default=0)

    def coefficient(self, mono: Mapping[str, int]) -> Fraction:
        key = tuple(
            sorted(((v, e) for v, e in mono.items() if e), key=lambda it: var_key(it[0]))
        )
        return self.terms.get(key, Fraction(0))

    def constant_term(self) -> Fraction:
        return self.terms.get((), Fraction(0))

    # -- substitution and evaluation --------------------------------------

    def subs(self, bindings: Mapping[str, Polylike]) -> "Poly":
        """Simultaneous substitution; unbound variables pass through."""
        coerced = {name: Poly.coerce(val) for name, val in bindings.items()}
        result = Poly.zero()
        for mono, coef in self.terms.items():
            term = Poly.const(coef)
            for var, e in mono:
                factor = coerced.get(var)
                term = term * (factor ** e if factor is not None else Poly.var(var, e))
            result = result + term
        return result

    def evaluate(self, values: Mapping[str, Coeflike]) -> Fraction:
        """Numeric evaluation; every occurring variable must be bound."""
        total = Fraction(0)
        for mono, coef in self.terms.items():
            prod = coef
            for var, e in mono:
                if var not in values:
                    raise DomainError(f"unbound variable {var!r} in evaluation")
                prod *= _frac(values[var]) ** e
            total += prod
        return total

    # -- printing ----------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order: ascending total degree, ties broken by
        the exponent vector read from the highest variable down (smaller
        exponent on the highest differing variable comes first)."""
        support = sorted(self.variables(), key=var_key, reverse=True)

        def key(item: tuple[Monomial, Fraction]):
            mono, _ = item
            exps = dict(mono)
            return (
                sum(e for _, e in mono),
                tuple(exps.get(var, 0) for var in support),
            )

        return sorted(self.terms.items(), key=key)

    def __str__(self) -> str:
        return poly_to_string(self)

    def __repr__(self) -> str:
        return f"Poly({poly_to_string(self)})"


def _term_text(mono: Monomial, coef: Fraction) -> str:
    mag = abs(coef)
    if not mono:
        return str(mag)
    factors = "*".join(f"{var}^{e}" if e > 1 else var for var, e in mono)
    return factors if mag == 1 else f"{mag}*{factors}"


def poly_to_string(p: Poly) -> str:
    """Canonical text form; the interchange format for CLI and golden files."""
    items = p.sorted_terms()
    if not items:
        return "0"
    parts: list[str] = []
    for i, (mono, coef) in enumerate(items):
        text = _term_text(mono, coef)
        if i == 0:
            parts.append(f"-{text}" if coef < 0 else text)
        else:
            parts.append(f" - {text}" if coef < 0 else f" + {text}")
    return "".join(parts)


def poly_subst(p: Poly, bindings: Mapping[str, Polylike]) -> Poly:
    """Module-level alias of :meth:`Poly.subs`."""
    return p.subs(bindings)


# -- univariate helpers (in z) -------------------------------------------


def poly_coeffs_z(p: Poly) -> list[Fraction]:
    """Coefficient list [c0, c1, ...] of a polynomial univariate in z."""
    coeffs: dict[int, Fraction] = {}
    for mono, coef in p.terms.items():
        if not mono:
            coeffs[0] = coeffs.get(0, Fraction(0)) + coef
        elif len(mono) == 1 and mono[0][0] == "z":
            deg = mono[0][1]
            coeffs[deg] = coeffs.get(deg, Fraction(0)) + coef
        else:
            raise DomainError(f"polynomial not univariate in z: {p}")
    top = max(coeffs, default=0)
    return [coeffs.get(i, Fraction(0)) for i in range(top + 1)]


def coeffs_to_poly_z(coeffs: Iterable[Coeflike]) -> Poly:
    terms: dict[Monomial, Fraction] = {}
    for i, c in enumerate(coeffs):
        c = _frac(c)
        if c:
            terms[() if i == 0 else (("z", i),)] = c
    return Poly(terms)


@dataclass(frozen=True)
class RatFunc:
    """num / (1-z)^dpow, normalized: num never divisible by 1-z when dpow > 0."""

    num: Poly
    dpow: int

    @classmethod
    def make(cls, num: Poly, dpow: int) -> "RatFunc":
        if dpow < 0:
            raise DomainError(f"negative denominator power {dpow}")
        coeffs = poly_coeffs_z(num)  # validates univariate-in-z
        while dpow > 0 and sum(coeffs) == 0 and any(coeffs):
            # num(1) = 0: divide by (1-z); quotient coefficients are the
            # prefix sums of the dividend's.
            running = Fraction(0)
            quotient: list[Fraction] = []
            for c in coeffs[:-1]:
                running += c
                quotient.append(running)
            coeffs = quotient
            dpow -= 1
        if not any(coeffs):
            return cls(Poly.zero(), 0)
        return cls(coeffs_to_poly_z(coeffs), dpow)

    @classmethod
    def from_poly(cls, p: Polylike) -> "RatFunc":
        return cls.make(Poly.coerce(p), 0)

    def __add__(self, other: "RatFunc") -> "RatFunc":
        d = max(self.dpow, other.dpow)
        one_minus_z = Poly.one() - Poly.var("z")
        a = self.num * one_minus_z ** (d - self.dpow)
        b = other.num * one_minus_z ** (d - other.dpow)
        return RatFunc.make(a + b, d)

    def __sub__(self, other: "RatFunc") -> "RatFunc":
        return self + RatFunc(-other.num, other.dpow)

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(self.num * other.num, self.dpow + other.dpow)

    def __pow__(self, exp: int) -> "RatFunc":
        if exp < 0:
            raise DomainError(f"negative exponent {exp}")
        result = RatFunc.from_poly(1)
        for _ in range(exp):
            result = result * self
        return result

    def is_polynomial(self) -> bool:
        return self.dpow == 0

    def series(self, order: int) -> list[Fraction]:
        """Taylor coefficients of z^0 .. z^order at z = 0."""
        if order < 0:
            raise DomainError(f"negative series order {order}")
        coeffs = poly_coeffs_z(self.num)
        out: list[Fraction] = []
        for n in range(order + 1):
            if self.dpow == 0:
                out.append(coeffs[n] if n < len(coeffs) else Fraction(0))
            else:
                # 1/(1-z)^d = sum_k comb(k+d-1, d-1) z^k
                total = Fraction(0)
                for k, c in enumerate(coeffs):
                    if k > n:
                        break
                    total += c * comb(n - k + self.dpow - 1, self.dpow - 1)
                out.append(total)
        return out

    def evaluate(self, zval: Coeflike) -> Fraction:
        zval = _frac(zval)
        if zval == 1 and self.dpow > 0:
            raise DomainError("pole at z = 1")
        return self.num.evaluate({"z": zval}) / (1 - zval) ** self.dpow

    def __str__(self) -> str:
        if self.dpow == 0:
            return poly_to_string(self.num)
        denom = "(1-z)" if self.dpow == 1 else f"(1-z)^{self.dpow}"
        return f"({poly_to_string(self.num)}) / {denom}"


def poly_subst_rat(p: Poly, bindings: Mapping[str, RatFunc]) -> RatFunc:
    """Substitute rational functions for every variable of p."""
    missing = p.variables() - set(bindings)
    if missing:
        raise DomainError(f"unbound variables in rational substitution: {sorted(missing)}")
    power_cache: dict[tuple[str, int], RatFunc] = {}

    def bound_power(var: str, e: int) -> RatFunc:
        got = power_cache.get((var, e))
        if got is None:
            got = bindings[var] ** e
            power_cache[(var, e)] = got
        return got

    total = RatFunc.from_poly(0)
    for mono, coef in p.terms.items():
        term = RatFunc.from_poly(Poly.const(coef))
        for var, e in mono:
            term = term * bound_power(var, e)
        total = total + term
    return total


def ratfunc_series(r: RatFunc, order: int) -> list[Fraction]:
    """Module-level alias of :meth:`RatFunc.series`."""
    return r.series(order)
