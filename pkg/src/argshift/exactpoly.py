"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a map from monomials to rational coefficients.  Monomials are
dense exponent tuples (one non-negative int per variable), coefficients are
``fractions.Fraction``.  Zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are equal, and the zero
polynomial has an empty term map.

All arithmetic is exact; there is no floating-point path anywhere.  The
canonical text form (used in reports, golden files and cache files) lists
terms in descending graded reverse lexicographic order, e.g.
``3/2*x0^2*x2 - x1``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator, Mapping

Monomial = tuple[int, ...]
Coeff = Fraction


def grevlex_key(mono: Monomial) -> tuple:
    """Sort key for graded reverse lexicographic order (x0 > x1 > ...).

    Larger key = larger monomial.  Compare by total degree first, then by the
    reversed, negated exponent vector.
    """
    return (sum(mono), tuple(-e for e in reversed(mono)))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    """Quotient monomial a / b; caller must ensure divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


class Poly:
    """Immutable-by-convention sparse polynomial in ``arity`` variables."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Monomial, Coeff] | None = None):
        self.arity = arity
        clean: dict[Monomial, Coeff] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != arity:
                    raise ValueError(f"monomial {mono} has wrong length for arity {arity}")
                c = Fraction(coeff)
                if c != 0:
                    clean[mono] = c
        self.terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, arity: int) -> "Poly":
        return cls(arity)

    @classmethod
    def constant(cls, arity: int, value) -> "Poly":
        return cls(arity, {(0,) * arity: Fraction(value)})

    @classmethod
    def variable(cls, arity: int, index: int) -> "Poly":
        if not 0 <= index < arity:
            raise IndexError(f"variable index {index} out of range for arity {arity}")
        exp = [0] * arity
        exp[index] = 1
        return cls(arity, {tuple(exp): Fraction(1)})

    @classmethod
    def linear_form(cls, coeffs: Iterable) -> "Poly":
        """Sum coeffs[k] * x_k."""
        coeffs = list(coeffs)
        arity = len(coeffs)
        terms = {}
        for k, c in enumerate(coeffs):
            c = Fraction(c)
            if c != 0:
                exp = [0] * arity
                exp[k] = 1
                terms[tuple(exp)] = c
        return cls(arity, terms)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, mono: Monomial) -> Coeff:
        return self.terms.get(mono, Fraction(0))

    def sorted_terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in descending grevlex order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda t: grevlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[tuple[Monomial, Coeff]]:
        return iter(self.terms.items())

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _check_same_ring(self, other: "Poly") -> None:
        if self.arity != other.arity:
            raise ValueError(f"arity mismatch: {self.arity} != {other.arity}")

    def __add__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.arity, other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        out = dict(self.terms)
        for mono, coeff in other.terms.items():
            s = out.get(mono, Fraction(0)) + coeff
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        p = Poly.__new__(Poly)
        p.arity = self.arity
        p.terms = out
        return p

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = Poly.__new__(Poly)
        p.arity = self.arity
        p.terms = {m: -c for m, c in self.terms.items()}
        return p

    def __sub__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(self.arity, other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            p = Poly.__new__(Poly)
            p.arity = self.arity
            p.terms = {} if c == 0 else {m: cc * c for m, cc in self.terms.items()}
            return p
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_same_ring(other)
        out: dict[Monomial, Coeff] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                s = out.get(m, Fraction(0)) + ca * cb
                if s:
                    out[m] = s
                else:
                    del out[m]
        p = Poly.__new__(Poly)
        p.arity = self.arity
        p.terms = out
        return p

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.arity, 1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- calculus and evaluation -------------------------------------------

    def diff(self, var_index: int) -> "Poly":
        """Formal partial derivative with respect to variable var_index."""
        if not 0 <= var_index < self.arity:
            raise IndexError(f"variable index {var_index} out of range")
        out: dict[Monomial, Coeff] = {}
        for mono, coeff in self.terms.items():
            e = mono[var_index]
            if e == 0:
                continue
            m = list(mono)
            m[var_index] = e - 1
            out[tuple(m)] = coeff * e
        return Poly(self.arity, out)

    def gradient(self) -> list["Poly"]:
        return [self.diff(k) for k in range(self.arity)]

    def evaluate(self, point: Iterable) -> Coeff:
        """Exact evaluation at a rational point of length arity."""
        vals = [Fraction(v) for v in point]
        if len(vals) != self.arity:
            raise ValueError(f"point length {len(vals)} != arity {self.arity}")
        total = Fraction(0)
        for mono, coeff in self.terms.items():
            term = coeff
            for e, v in zip(mono, vals):
                if e:
                    term *= v**e
            total += term
        return total

    def substitute(self, images: list["Poly"]) -> "Poly":
        """Compose: replace variable k by images[k] (exact).

        All images must share one target arity.  Constant and affine images
        are allowed, so this covers both linear changes of variables and
        affine chart substitutions.
        """
        if len(images) != self.arity:
            raise ValueError(f"need {self.arity} images, got {len(images)}")
        if not images:
            raise ValueError("cannot substitute in a 0-variable ring")
        target = images[0].arity
        for g in images:
            if g.arity != target:
                raise ValueError("images have mismatched arities")
        result = Poly.zero(target)
        power_cache: dict[tuple[int, int], Poly] = {}

        def img_pow(k: int, e: int) -> Poly:
            got = power_cache.get((k, e))
            if got is None:
                got = images[k] ** e
                power_cache[(k, e)] = got
            return got

        for mono, coeff in self.terms.items():
            term = Poly.constant(target, coeff)
            for k, e in enumerate(mono):
                if e:
                    term = term * img_pow(k, e)
            result = result + term
        return result

    def homogeneous_components(self) -> dict[int, "Poly"]:
        """Split into homogeneous parts: {degree: component}, no zero entries."""
        buckets: dict[int, dict[Monomial, Coeff]] = {}
        for mono, coeff in self.terms.items():
            buckets.setdefault(sum(mono), {})[mono] = coeff
        return {d: Poly(self.arity, t) for d, t in sorted(buckets.items())}

    def div_exact(self, g: "Poly") -> "Poly":
        """Exact quotient self / g; raises ValueError if g does not divide self.

        Needed by fraction-free elimination, where divisions are exact by
        construction.
        """
        self._check_same_ring(g)
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        g_terms = g.sorted_terms()
        g_lm, g_lc = g_terms[0]
        rem = dict(self.terms)
        quo: dict[Monomial, Coeff] = {}
        while rem:
            m = max(rem, key=grevlex_key)
            if not mono_divides(g_lm, m):
                raise ValueError("inexact polynomial division")
            q_mono = mono_div(m, g_lm)
            q_coeff = rem[m] / g_lc
            quo[q_mono] = q_coeff
            for gm, gc in g_terms:
                k = mono_mul(gm, q_mono)
                s = rem.get(k, Fraction(0)) - gc * q_coeff
                if s:
                    rem[k] = s
                else:
                    rem.pop(k, None)
        return Poly(self.arity, quo)

    # -- canonical text form -------------------------------------------------

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.arity}, {format_poly(self)!r})"


def format_poly(p: Poly) -> str:
    """Canonical text: grevlex-descending terms, e.g. ``3/2*x0^2*x2 - x1``."""
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for idx, (mono, coeff) in enumerate(p.sorted_terms()):
        factors = []
        for k, e in enumerate(mono):
            if e == 1:
                factors.append(f"x{k}")
            elif e > 1:
                factors.append(f"x{k}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = str(mag) + "*" + "*".join(factors)
        if idx == 0:
            pieces.append(("-" if coeff < 0 else "") + body)
        else:
            pieces.append((" - " if coeff < 0 else " + ") + body)
    return "".join(pieces)


def parse_poly(text: str, arity: int) -> Poly:
    """Inverse of format_poly for the canonical text form."""
    s = text.strip()
    if s == "0":
        return Poly.zero(arity)
    # normalize separators so we can split on whitespace
    s = s.replace(" - ", " -").replace(" + ", " +")
    terms: dict[Monomial, Fraction] = {}
    for chunk in s.split():
        sign = Fraction(1)
        if chunk.startswith("-"):
            sign = Fraction(-1)
            chunk = chunk[1:]
        elif chunk.startswith("+"):
            chunk = chunk[1:]
        coeff = Fraction(1)
        exps = [0] * arity
        for factor in chunk.split("*"):
            if factor.startswith("x"):
                if "^" in factor:
                    var, _, pow_s = factor.partition("^")
                    exps[int(var[1:])] += int(pow_s)
                else:
                    exps[int(factor[1:])] += 1
            else:
                coeff *= Fraction(factor)
        mono = tuple(exps)
        terms[mono] = terms.get(mono, Fraction(0)) + sign * coeff
    return Poly(arity, terms)
