"""Sparse multivariate polynomials over exact rationals.

Terms are keyed by exponent vectors (tuples of length ``n``); coefficients
are ``fractions.Fraction`` and zero coefficients are never stored, so two
polynomials are equal exactly when their term maps are.  The monomial order
throughout is graded lex: compare total degree first, then the exponent
tuples lexicographically.
"""

import math
from fractions import Fraction
from numbers import Rational

from .combinat import check_vector


def graded_lex_key(nu):
    """Sort key realizing the graded lex order on exponent vectors."""
    return (sum(nu), nu)


def graded_lex_compare(mu, nu) -> int:
    """-1, 0 or 1 as ``mu`` is below, equal to, or above ``nu`` in graded lex."""
    mu, nu = check_vector(mu), check_vector(nu)
    if len(mu) != len(nu):
        raise ValueError(f"vectors of different lengths: {mu} vs {nu}")
    a, b = graded_lex_key(mu), graded_lex_key(nu)
    return (a > b) - (a < b)


class Polynomial:
    """Immutable sparse polynomial in ``n`` variables over Q."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError(f"need at least one variable, got n = {n}")
        self.n = n
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = check_vector(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length != {n}")
            coeff = Fraction(coeff)
            if coeff:
                clean[exps] = coeff
        self._terms = clean

    # construction helpers

    @classmethod
    def zero(cls, n):
        return cls(n)

    @classmethod
    def constant(cls, n, value):
        return cls(n, {(0,) * n: value})

    @classmethod
    def monomial(cls, n, exps, coeff=1):
        return cls(n, {tuple(exps): coeff})

    @classmethod
    def variable(cls, n, i):
        """The variable x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} outside [1, {n}]")
        exps = [0] * n
        exps[i - 1] = 1
        return cls(n, {tuple(exps): 1})

    # inspection

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self):
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def support(self):
        """The exponent vectors carrying nonzero coefficients (a set view)."""
        return self._terms.keys()

    def items(self):
        return self._terms.items()

    def sorted_terms(self):
        """Terms as (exponents, coefficient) pairs, descending graded lex."""
        return sorted(self._terms.items(),
                      key=lambda item: graded_lex_key(item[0]), reverse=True)

    def coefficient(self, nu) -> Fraction:
        return self._terms.get(tuple(nu), Fraction(0))

    def leading_monomial(self):
        """Graded-lex-greatest (exponents, coefficient) pair; error on zero."""
        if not self._terms:
            raise ValueError("the zero polynomial has no leading monomial")
        exps = max(self._terms, key=graded_lex_key)
        return exps, self._terms[exps]

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def homogeneous_components(self) -> dict:
        """Map degree -> homogeneous part (zero polynomial omitted)."""
        parts = {}
        for exps, coeff in self._terms.items():
            parts.setdefault(sum(exps), {})[exps] = coeff
        return {d: Polynomial(self.n, t) for d, t in sorted(parts.items())}

    # arithmetic

    def _require_same_ring(self, other):
        if self.n != other.n:
            raise ValueError(f"mixed variable counts: {self.n} vs {other.n}")

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            new = terms.get(exps, 0) + coeff
            if new:
                terms[exps] = new
            else:
                terms.pop(exps, None)
        out = Polynomial.__new__(Polynomial)
        out.n, out._terms = self.n, terms
        return out

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out._terms = {e: -c for e, c in self._terms.items()}
        return out

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def scale(self, value):
        value = Fraction(value)
        out = Polynomial.__new__(Polynomial)
        out.n = self.n
        out._terms = {e: c * value for e, c in self._terms.items()} if value else {}
        return out

    def __mul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        self._require_same_ring(other)
        terms = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                new = terms.get(exps, 0) + c1 * c2
                if new:
                    terms[exps] = new
                else:
                    terms.pop(exps, None)
        out = Polynomial.__new__(Polynomial)
        out.n, out._terms = self.n, terms
        return out

    def __rmul__(self, other):
        if isinstance(other, Rational):
            return self.scale(other)
        return NotImplemented

    def __repr__(self):
        if not self._terms:
            return f"Polynomial({self.n}, 0)"
        body = " + ".join(f"{coeff}*X^{exps}" for exps, coeff in self.sorted_terms())
        return f"Polynomial({self.n}, {body})"


def diff_pairing(p: Polynomial, q: Polynomial) -> Fraction:
    """Apply ``p`` as a differential operator to ``q`` and evaluate at zero:
    the bilinear form with <X^nu, X^mu> = 0 for nu != mu and
    <X^nu, X^nu> = prod(nu_i!).
    """
    p._require_same_ring(q)
    total = Fraction(0)
    small, large = (p, q) if len(p) <= len(q) else (q, p)
    for exps, coeff in small.items():
        other = large.coefficient(exps)
        if other:
            weight = math.prod(math.factorial(e) for e in exps)
            total += coeff * other * weight
    return total
