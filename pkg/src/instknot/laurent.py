"""Integer Laurent polynomials in one variable."""

from __future__ import annotations

from fractions import Fraction


class LaurentPoly:
    """Finitely supported integer coefficients indexed by integer exponents."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        data = {}
        for e, c in dict(coeffs or {}).items():
            if c:
                data[int(e)] = int(c)
        self.coeffs = data

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def var(exp: int = 1, coef: int = 1) -> "LaurentPoly":
        return LaurentPoly({exp: coef})

    def terms(self):
        return sorted(self.coeffs.items())

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.terms()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self.coeffs.items()})
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                key = e1 + e2
                out[key] = out.get(key, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            raise ValueError("negative powers are only defined for monomials")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def substitute_power(self, k: int) -> "LaurentPoly":
        """t -> t^k; k may be negative but not zero."""
        if k == 0:
            raise ValueError("substituting t -> 1 collapses the grading")
        return LaurentPoly({e * k: c for e, c in self.coeffs.items()})

    def reversed_variable(self) -> "LaurentPoly":
        return self.substitute_power(-1)

    def is_symmetric(self) -> bool:
        return self == self.reversed_variable()

    def min_exp(self) -> int:
        return min(self.coeffs) if self.coeffs else 0

    def max_exp(self) -> int:
        return max(self.coeffs) if self.coeffs else 0

    def coefficient(self, e: int) -> int:
        return self.coeffs.get(e, 0)

    def evaluate(self, value: Fraction) -> Fraction:
        value = Fraction(value)
        return sum((c * value**e for e, c in self.coeffs.items()), Fraction(0))

    def second_derivative_at_one(self) -> int:
        return sum(c * e * (e - 1) for e, c in self.coeffs.items())

    def exact_div(self, other: "LaurentPoly") -> "LaurentPoly":
        """Quotient self / other, raising ValueError on a nonzero remainder."""
        if not other:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self:
            return LaurentPoly.zero()
        rem = dict(self.coeffs)
        lead = other.max_exp()
        lead_c = other.coeffs[lead]
        quot: dict[int, int] = {}
        while rem:
            top = max(rem)
            c, r = divmod(rem[top], lead_c)
            if r:
                raise ValueError("division is not exact")
            quot[top - lead] = c
            for e, oc in other.coeffs.items():
                key = e + top - lead
                val = rem.get(key, 0) - c * oc
                if val:
                    rem[key] = val
                else:
                    rem.pop(key, None)
        return LaurentPoly(quot)

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in self.terms():
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"LaurentPoly({dict(self.terms())!r})"
