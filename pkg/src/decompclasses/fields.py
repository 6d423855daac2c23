"""Exact scalar fields: the rationals and finite fields F_{p^k}.

Rationals are plain :class:`fractions.Fraction` values.  A finite field of
order ``p**k`` is realised as polynomials over F_p modulo a fixed monic
irreducible polynomial.  The polynomials used by default are:

    ====  ==  ==========================
    p     k   modulus (low -> high coeffs)
    ====  ==  ==========================
    2     2   x^2 + x + 1
    2     3   x^3 + x + 1
    2     4   x^4 + x + 1
    3     2   x^2 + 2x + 2
    3     3   x^3 + 2x + 1
    5     2   x^2 + 4x + 2
    5     3   x^3 + 3x + 3
    7     2   x^2 + 6x + 3
    7     3   x^3 + 6x^2 + 4
    ====  ==  ==========================

(Conway polynomials.)  For any other ``(p, k)`` the lexicographically first
monic irreducible polynomial of degree ``k`` is used.  Elements print as
polynomials in the generator ``a``.
"""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from functools import lru_cache

# coefficient tuples, constant term first
MODULI: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def check_characteristic(p: int) -> int:
    """Validate a field characteristic: zero or a prime."""
    if not isinstance(p, int) or isinstance(p, bool) or not (p == 0 or is_prime(p)):
        raise ValueError(f"characteristic must be 0 or a prime, got {p!r}")
    return p


def _poly_mod(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = [c % p for c in a]
    k = len(m) - 1
    inv_lead = pow(m[-1], -1, p)
    for i in range(len(a) - 1, k - 1, -1):
        c = a[i] * inv_lead % p
        if c:
            for j in range(k + 1):
                a[i - k + j] = (a[i - k + j] - c * m[j]) % p
    return (a + [0] * k)[:k]


def _has_factor_of_degree(m: tuple[int, ...], p: int, d: int) -> bool:
    for tail in itertools.product(range(p), repeat=d):
        f = tail + (1,)
        if not any(_poly_mod(list(m), f, p)):
            return True
    return False


def is_irreducible(m: tuple[int, ...], p: int) -> bool:
    """Brute-force irreducibility test of a monic polynomial over F_p."""
    k = len(m) - 1
    if k < 1 or m[-1] % p != 1:
        return False
    return not any(_has_factor_of_degree(m, p, d) for d in range(1, k // 2 + 1))


@lru_cache(maxsize=None)
def default_modulus(p: int, k: int) -> tuple[int, ...]:
    if (p, k) in MODULI:
        return MODULI[(p, k)]
    for tail in itertools.product(range(p), repeat=k):
        m = tail + (1,)
        if is_irreducible(m, p):
            return m
    raise AssertionError("no irreducible polynomial found")  # unreachable


class FiniteField:
    """The field with ``p**k`` elements.

    Elements are encoded by the integer whose base-``p`` digits are the
    polynomial coefficients (constant term = least significant digit).
    """

    def __init__(self, p: int, k: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
        if k < 1:
            raise ValueError("k must be positive")
        if modulus is None:
            modulus = (0, 1) if k == 1 else default_modulus(p, k)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != k + 1 or not is_irreducible(modulus, p):
            raise ValueError(f"{modulus} is not a monic irreducible of degree {k} over F_{p}")
        self.p = p
        self.k = k
        self.order = p**k
        self.modulus = modulus
        self._mul_cache: dict[tuple[int, int], int] = {}

    @property
    def characteristic(self) -> int:
        return self.p

    def __repr__(self) -> str:
        return f"FiniteField({self.p}, {self.k})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FiniteField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def _digits(self, code: int) -> list[int]:
        out = []
        for _ in range(self.k):
            code, r = divmod(code, self.p)
            out.append(r)
        return out

    def _code(self, digits) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + d % self.p
        return code

    def __call__(self, value) -> "FFElement":
        if isinstance(value, FFElement):
            if value.field != self:
                raise ValueError("element belongs to a different field")
            return value
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise ZeroDivisionError(f"{value} has no image in F_{self.p}")
            return FFElement(self, value.numerator % self.p) / FFElement(self, value.denominator % self.p)
        if isinstance(value, (tuple, list)):
            if len(value) > self.k:
                value = _poly_mod(list(value), self.modulus, self.p)
            return FFElement(self, self._code(value))
        if isinstance(value, int):
            return FFElement(self, value % self.p)
        raise TypeError(f"cannot coerce {value!r} into {self}")

    def zero(self) -> "FFElement":
        return FFElement(self, 0)

    def one(self) -> "FFElement":
        return FFElement(self, 1)

    def gen(self) -> "FFElement":
        return self((0, 1)) if self.k > 1 else self.one()

    def elements(self):
        return (FFElement(self, c) for c in range(self.order))

    def random_element(self, rng: random.Random) -> "FFElement":
        return FFElement(self, rng.randrange(self.order))

    def _mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        key = (a, b) if a <= b else (b, a)
        hit = self._mul_cache.get(key)
        if hit is None:
            da, db = self._digits(a), self._digits(b)
            prod = [0] * (2 * self.k - 1)
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        prod[i + j] += x * y
            hit = self._code(_poly_mod(prod, self.modulus, self.p))
            self._mul_cache[key] = hit
        return hit


class FFElement:
    __slots__ = ("field", "code")

    def __init__(self, field: FiniteField, code: int):
        self.field = field
        self.code = code

    def _coerce(self, other) -> "FFElement | None":
        if isinstance(other, FFElement):
            if other.field != self.field:
                raise ValueError("mixing elements of different fields")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.field(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        f = self.field
        if f.k == 1:
            return FFElement(f, (self.code + o.code) % f.p)
        return FFElement(f, f._code([x + y for x, y in zip(f._digits(self.code), f._digits(o.code))]))

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        if f.k == 1:
            return FFElement(f, -self.code % f.p)
        return FFElement(f, f._code([-x for x in f._digits(self.code)]))

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
        return FFElement(self.field, self.field._mul(self.code, o.code))

    __rmul__ = __mul__

    def inverse(self) -> "FFElement":
        if self.code == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        result, base = self.field.one(), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FFElement):
            return self.field == other.field and self.code == other.code
        if isinstance(other, int) and not isinstance(other, bool):
            return self.code == other % self.field.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.modulus, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __repr__(self) -> str:
        f = self.field
        if f.k == 1:
            return str(self.code)
        terms = []
        for i, c in reversed(list(enumerate(f._digits(self.code)))):
            if not c:
                continue
            mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
            coef = str(c) if (c != 1 or i == 0) else ""
            terms.append(coef + mono)
        return "+".join(terms) or "0"

    def __lt__(self, other: "FFElement") -> bool:
        # arbitrary but fixed order, used only for canonical output
        return self.code < other.code


def characteristic_of(x) -> int:
    """Characteristic of the field an exact scalar lives in (ints count as rational)."""
    if isinstance(x, FFElement):
        return x.field.p
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return 0
    raise TypeError(f"not an exact scalar: {x!r}")


def coerce(x, p: int, field: FiniteField | None = None):
    """Map an exact scalar into characteristic ``p`` (Fraction for p = 0)."""
    if p == 0:
        if isinstance(x, FFElement):
            raise ValueError("finite-field element given where a rational was expected")
        return Fraction(x)
    if isinstance(x, FFElement):
        if x.field.p != p:
            raise ValueError(f"element of characteristic {x.field.p} given for p = {p}")
        return x
    return (field or FiniteField(p))(x)
