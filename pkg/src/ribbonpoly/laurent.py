"""Exact sparse multivariate Laurent polynomials with half-integer exponents.

Monomials map variable names to *doubled* exponents, so an entry ``("q", 3)``
means ``q^(3/2)`` and ``("x", -2)`` means ``x^-1``.  Coefficients are exact
integers.  The variable ``w`` is idempotent: every product is reduced by
``w^2 = w``, so a ``w`` exponent is always 0 or 1 (doubled: 0 or 2).

Nothing here is specific to graphs; the polynomial modules build the actual
invariants on top of this ring.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

Monomial = Tuple[Tuple[str, int], ...]
Scalar = Union[int, Fraction]

IDEMPOTENT_VAR = "w"


def _norm_mono(items: Iterable[Tuple[str, int]]) -> Monomial:
    acc: Dict[str, int] = {}
    for var, exp2 in items:
        acc[var] = acc.get(var, 0) + exp2
    if acc.get(IDEMPOTENT_VAR, 0) > 2:
        acc[IDEMPOTENT_VAR] = 2
    return tuple(sorted((v, e) for v, e in acc.items() if e != 0))


def _sqrt_fraction(value: Fraction) -> Fraction:
    if value < 0:
        raise ValueError("cannot take a square root of a negative value exactly")
    num, den = value.numerator, value.denominator
    rn, rd = _isqrt_exact(num), _isqrt_exact(den)
    return Fraction(rn, rd)


def _isqrt_exact(n: int) -> int:
    import math

    r = math.isqrt(n)
    if r * r != n:
        raise ValueError(f"{n} is not a perfect square; half-integer exponent cannot be evaluated")
    return r


class LaurentPoly:
    """Immutable sparse Laurent polynomial over the integers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, int] | None = None):
        clean: Dict[Monomial, int] = {}
        if terms:
            for mono, coeff in terms.items():
                if coeff == 0:
                    continue
                m = _norm_mono(mono)
                c = clean.get(m, 0) + coeff
                if c:
                    clean[m] = c
                elif m in clean:
                    del clean[m]
        self._terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly({(): c}) if c else LaurentPoly()

    @staticmethod
    def var(name: str, exp2: int = 2, coeff: int = 1) -> "LaurentPoly":
        """The monomial ``coeff * name^(exp2/2)`` (exp2 is the doubled exponent)."""
        return LaurentPoly({((name, exp2),): coeff})

    @staticmethod
    def monomial(powers: Mapping[str, int], coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({tuple(powers.items()): coeff})

    # -- ring operations ----------------------------------------------

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            n = terms.get(m, 0) + c
            if n:
                terms[m] = n
            elif m in terms:
                del terms[m]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = {m: -c for m, c in self._terms.items()}
        return out

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            if other == 0:
                return LaurentPoly()
            out = LaurentPoly.__new__(LaurentPoly)
            out._terms = {m: c * other for m, c in self._terms.items()}
            return out
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        terms: Dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = _norm_mono(m1 + m2)
                n = terms.get(m, 0) + c1 * c2
                if n:
                    terms[m] = n
                elif m in terms:
                    del terms[m]
        out = LaurentPoly.__new__(LaurentPoly)
        out._terms = terms
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if len(self._terms) == 1:
                (m, c), = self._terms.items()
                if c in (1, -1):
                    inv = LaurentPoly({tuple((v, -e) for v, e in m): c})
                    return inv ** (-n)
            raise ValueError("negative powers only of unit monomials")
        result = LaurentPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._terms == LaurentPoly.const(other)._terms
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- inspection ----------------------------------------------------

    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def variables(self) -> set:
        return {v for m in self._terms for v, _ in m}

    def coefficient(self, powers: Mapping[str, int]) -> int:
        return self._terms.get(_norm_mono(powers.items()), 0)

    def constant_monomial(self) -> bool:
        return len(self._terms) <= 1 and all(m == () for m in self._terms)

    # -- substitution and evaluation ------------------------------------

    def rename_vars(self, mapping: Mapping[str, str]) -> "LaurentPoly":
        terms: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            nm = _norm_mono((mapping.get(v, v), e) for v, e in m)
            terms[nm] = terms.get(nm, 0) + c
        return LaurentPoly(terms)

    def substitute(self, var: str, value: "LaurentPoly") -> "LaurentPoly":
        """Replace ``var`` by ``value``.

        Negative or half-integer exponents of ``var`` require ``value`` to be
        a unit monomial (so the power stays in the ring); integer nonnegative
        exponents accept any polynomial.
        """
        out = LaurentPoly()
        for m, c in self._terms.items():
            exp2 = dict(m).get(var, 0)
            rest = LaurentPoly({tuple((v, e) for v, e in m if v != var): c})
            if exp2 == 0:
                out = out + rest
            elif exp2 % 2 == 0 and exp2 > 0:
                out = out + rest * (value ** (exp2 // 2))
            else:
                out = out + rest * _unit_power(value, exp2)
        return out

    def substitute_one(self, var: str) -> "LaurentPoly":
        """Set ``var`` to 1 (valid for any exponent, including halves)."""
        terms: Dict[Monomial, int] = {}
        for m, c in self._terms.items():
            nm = tuple((v, e) for v, e in m if v != var)
            terms[nm] = terms.get(nm, 0) + c
        return LaurentPoly(terms)

    def eval_at(self, point: Mapping[str, Scalar]) -> Fraction:
        total = Fraction(0)
        for m, c in self._terms.items():
            val = Fraction(c)
            for var, exp2 in m:
                if var not in point:
                    raise ValueError(f"no value supplied for variable {var!r}")
                base = Fraction(point[var])
                if exp2 % 2 == 0:
                    val *= base ** (exp2 // 2)
                else:
                    val *= _sqrt_fraction(base) ** exp2
            total += val
        return total

    # -- rendering -------------------------------------------------------

    def _sorted_terms(self):
        def key(item):
            m, _ = item
            total = sum(e for _, e in m)
            return (-total, tuple((v, -e) for v, e in m))

        return sorted(self._terms.items(), key=key)

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self._sorted_terms():
            frag = _mono_text(m)
            if frag == "1":
                body = str(abs(c))
            elif abs(c) == 1:
                body = frag
            else:
                body = f"{abs(c)}*{frag}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def to_json_terms(self) -> dict:
        """JSON-friendly term list; exponents are doubled integers."""
        return {
            "exponent_encoding": "doubled (value 2 means exponent 1, value 1 means exponent 1/2)",
            "terms": [
                {"coeff": c, "monomial": {v: e for v, e in m}}
                for m, c in self._sorted_terms()
            ],
        }

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()})"


def _unit_power(value: LaurentPoly, exp2: int) -> LaurentPoly:
    if len(value._terms) == 1:
        (m, c), = value._terms.items()
        if c in (1, -1):
            if exp2 % 2 == 0:
                k = exp2 // 2
                return LaurentPoly({tuple((v, e * k) for v, e in m): c ** abs(k) if k else 1})
            # half-integer power of a monomial: all doubled exponents must stay integral
            if c == 1 and all((e * exp2) % 2 == 0 for v, e in m):
                return LaurentPoly({tuple((v, e * exp2 // 2) for v, e in m): 1})
    if value == LaurentPoly.const(1):
        return LaurentPoly.const(1)
    raise ValueError("fractional or negative power of a non-unit polynomial")


def _mono_text(m: Monomial) -> str:
    if not m:
        return "1"
    frags = []
    for var, exp2 in m:
        if exp2 == 2:
            frags.append(var)
        elif exp2 % 2 == 0:
            frags.append(f"{var}^{exp2 // 2}")
        else:
            frags.append(f"{var}^({exp2}/2)")
    return "*".join(frags)


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)
