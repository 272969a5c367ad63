"""Exact Laurent polynomials in a half-integer power of q.

Values of the refined counts live in the ring of Laurent polynomials in
``q^(1/2)`` with integer coefficients. A polynomial is stored sparsely as a
map from the half-exponent ``k`` (meaning the term ``q^(k/2)``) to its
coefficient; zero coefficients are never stored, so two polynomials are
equal exactly when their term maps are. Coefficients are Python integers,
hence exact at any size.
"""

from __future__ import annotations

from typing import Dict, Iterator, Mapping, Tuple


class BadArity(ValueError):
    """The normalization exponent requires at least two ends."""


class RefinedPolynomial:
    """Immutable sparse Laurent polynomial in ``q^(1/2)``.

    Supports ``+``, ``-``, ``*`` (with polynomials and integers) and ``**``
    with nonnegative integer exponents. Instances are never mutated after
    construction, so they can be shared and cached freely.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        self._terms: Dict[int, int] = {
            int(k): int(c) for k, c in (terms or {}).items() if c != 0
        }

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls) -> "RefinedPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "RefinedPolynomial":
        return cls({0: 1})

    @classmethod
    def monomial(cls, half_exp: int, coeff: int = 1) -> "RefinedPolynomial":
        """The single term ``coeff * q^(half_exp/2)``."""
        return cls({half_exp: coeff})

    # -- inspection -------------------------------------------------------

    @property
    def support(self) -> Tuple[int, ...]:
        """Half-exponents with nonzero coefficient, in decreasing order."""
        return tuple(sorted(self._terms, reverse=True))

    def coefficient(self, half_exp: int) -> int:
        return self._terms.get(half_exp, 0)

    def items(self) -> Iterator[Tuple[int, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def is_palindromic(self) -> bool:
        """True iff the coefficients of ``q^(k/2)`` and ``q^(-k/2)`` agree for all k."""
        return all(self._terms.get(-k) == c for k, c in self._terms.items())

    def uniform_parity(self) -> bool:
        """True iff all exponents are integers, or all are strict half-integers."""
        return len({k & 1 for k in self._terms}) <= 1

    def evaluate_at_one(self) -> int:
        """Sum of all coefficients, i.e. the value at q = 1."""
        return sum(self._terms.values())

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RefinedPolynomial):
            return other
        if isinstance(other, int):
            return RefinedPolynomial({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        terms = dict(self._terms)
        for k, c in other._terms.items():
            s = terms.get(k, 0) + c
            if s:
                terms[k] = s
            else:
                terms.pop(k, None)
        return RefinedPolynomial(terms)

    __radd__ = __add__

    def __neg__(self):
        return RefinedPolynomial({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        prod: Dict[int, int] = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                k = k1 + k2
                s = prod.get(k, 0) + c1 * c2
                if s:
                    prod[k] = s
                else:
                    del prod[k]
        return RefinedPolynomial(prod)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = RefinedPolynomial.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    # -- rendering --------------------------------------------------------

    def to_text(self) -> str:
        """Human form, terms in strictly decreasing exponent order.

        Integer exponents render as ``q^3``, half exponents as ``q^(5/2)``,
        the unit power as ``q``, and the constant term bare, e.g.
        ``q^3 + 10*q^2 + 55*q + 172 + 55*q^-1 + 10*q^-2 + q^-3``.
        """
        if not self._terms:
            return "0"
        parts = []
        for k in self.support:
            c = self._terms[k]
            mag = _power_text(k)
            if mag is None:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mag
            else:
                body = f"{abs(c)}*{mag}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def to_json_dict(self) -> Dict[str, str]:
        """JSON form: half-exponent and coefficient both as decimal strings."""
        return {str(k): str(self._terms[k]) for k in self.support}

    @classmethod
    def from_json_dict(cls, data: Mapping[str, str]) -> "RefinedPolynomial":
        return cls({int(k): int(c) for k, c in data.items()})

    def __repr__(self):
        return f"RefinedPolynomial({self.to_text()!r})"

    __str__ = to_text


def _power_text(half_exp: int):
    """Render ``q^(half_exp/2)``; None means the q^0 constant."""
    if half_exp == 0:
        return None
    if half_exp % 2 == 0:
        n = half_exp // 2
        return "q" if n == 1 else f"q^{n}"
    return f"q^({half_exp}/2)"


_Q_ANALOG_CACHE: Dict[int, RefinedPolynomial] = {}


def q_analog(a: int) -> RefinedPolynomial:
    """The quantum integer ``[a]_q = (q^(a/2) - q^(-a/2)) / (q^(1/2) - q^(-1/2))``.

    For positive ``a`` this is the a-term sum ``q^((a-1)/2) + ... + q^(-(a-1)/2)``;
    ``[0]_q`` is zero and ``[-a]_q = -[a]_q``, matching the defining quotient.
    """
    poly = _Q_ANALOG_CACHE.get(a)
    if poly is None:
        if a == 0:
            poly = RefinedPolynomial.zero()
        elif a > 0:
            poly = RefinedPolynomial({k: 1 for k in range(a - 1, -a, -2)})
        else:
            poly = -q_analog(-a)
        _Q_ANALOG_CACHE[a] = poly
    return poly


def mikhalkin_normalization(p: RefinedPolynomial, m: int) -> RefinedPolynomial:
    """Multiply by ``(q^(1/2) - q^(-1/2))^(m-2)``, clearing quantum-integer denominators.

    ``m`` is the number of ends of the underlying degree and must be at
    least 2.
    """
    if m < 2:
        raise BadArity(f"need m >= 2 ends, got {m}")
    return p * RefinedPolynomial({1: 1, -1: -1}) ** (m - 2)
