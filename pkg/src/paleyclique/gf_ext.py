"""The quadratic extension GF(q^2) = GF(q)(alpha) with alpha^2 = d.

An :class:`ExtElement` is the pair ``(x, y)`` standing for ``x + y*alpha``
with ``x, y`` base-field codes.  Each element also has a canonical index
``x + q*y`` in ``0..q^2-1`` which the graph code uses for bitmaps.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import DIsASquare, DivisionByZero, NotAUnit
from .gf_base import GF, make_base_field, prime_factors


class ExtElement:
    __slots__ = ("field", "x", "y")

    def __init__(self, field: "ExtField", x: int, y: int = 0):
        self.field = field
        self.x = x
        self.y = y

    @property
    def index(self) -> int:
        return self.x + self.field.q * self.y

    def _coerce(self, other):
        if isinstance(other, ExtElement):
            return other
        if isinstance(other, int):
            return self.field.element(self.field.base(other))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field.base
        return ExtElement(self.field, F.add(self.x, other.x), F.add(self.y, other.y))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field.base
        return ExtElement(self.field, F.sub(self.x, other.x), F.sub(self.y, other.y))

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __neg__(self):
        F = self.field.base
        return ExtElement(self.field, F.neg(self.x), F.neg(self.y))

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        F = self.field.base
        x1, y1, x2, y2 = self.x, self.y, other.x, other.y
        x = F.add(F.mul(x1, x2), F.mul(F.mul(y1, y2), self.field.d))
        y = F.add(F.mul(x1, y2), F.mul(x2, y1))
        return ExtElement(self.field, x, y)

    __rmul__ = __mul__

    def scale(self, c: int) -> "ExtElement":
        """Multiply by the base-field element ``c``."""
        F = self.field.base
        return ExtElement(self.field, F.mul(c, self.x), F.mul(c, self.y))

    def inverse(self) -> "ExtElement":
        if not self:
            raise DivisionByZero("inverse of 0 in GF(q^2)")
        F = self.field.base
        n_inv = F.inv(self.field.norm(self))
        return ExtElement(self.field, F.mul(self.x, n_inv), F.mul(F.neg(self.y), n_inv))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.x or self.y)

    def __eq__(self, other):
        if isinstance(other, ExtElement):
            return self.x == other.x and self.y == other.y and self.field is other.field
        if isinstance(other, int):
            return self == self._coerce(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.x, self.y))

    def __lt__(self, other):
        return self.index < other.index

    def conjugate(self) -> "ExtElement":
        return self.field.frobenius(self, self.field.e)

    def __repr__(self):
        from .textio import format_element

        return f"<{format_element(self)} in GF({self.field.q}^2)>"


@dataclass(frozen=True)
class CircleSubgroups:
    Q: frozenset
    Q0: frozenset
    Q1: frozenset


class ExtField:
    """GF(q^2) over a :class:`GF` base with a fixed non-square ``d``.

    ``d`` defaults to the smallest non-square of the base field.  The
    primitive element ``beta`` and the discrete-log table are built on first
    use; everything else is cheap.
    """

    def __init__(self, base: GF, d: int | None = None):
        self.base = base
        self.q = base.q
        self.p = base.p
        self.e = base.e
        if d is None:
            d = base.smallest_nonsquare()
        d = d % self.q if base.e == 1 else d
        if d == 0 or base.is_square(d):
            raise DIsASquare(f"d={d} is a square in GF({self.q}); alpha would not generate GF(q^2)")
        self.d = d
        self.size = self.q * self.q
        self.order = self.size - 1
        self.zero = ExtElement(self, 0, 0)
        self.one = ExtElement(self, 1, 0)
        self.alpha = ExtElement(self, 0, 1)

    def element(self, x: int, y: int = 0) -> ExtElement:
        return ExtElement(self, x, y)

    def from_index(self, i: int) -> ExtElement:
        return self._elements[i]

    def elements(self) -> tuple[ExtElement, ...]:
        """All of GF(q^2) in index order."""
        return self._elements

    @cached_property
    def _elements(self):
        q = self.q
        return tuple(ExtElement(self, x, y) for y in range(q) for x in range(q))

    def units(self) -> tuple[ExtElement, ...]:
        return self._elements[1:]

    def subfield(self):
        """GF(q) embedded as ``{c + 0*alpha}``."""
        return [ExtElement(self, c, 0) for c in range(self.q)]

    def sort_key(self, g: ExtElement):
        """Coefficient-tuple order: ``y`` first, then ``x``."""
        return (self.base.sort_key(g.y), self.base.sort_key(g.x))

    # -- structure maps ------------------------------------------------

    def norm(self, g: ExtElement) -> int:
        F = self.base
        return F.sub(F.mul(g.x, g.x), F.mul(F.mul(g.y, g.y), self.d))

    def trace(self, g: ExtElement) -> int:
        return self.base.add(g.x, g.x)

    @cached_property
    def _alpha_frob(self):
        # alpha^(p^i) = alpha * d^((p^i - 1)/2)
        F = self.base
        return [F.pow(self.d, (self.p ** i - 1) // 2) for i in range(2 * self.e)]

    def frobenius(self, g: ExtElement, i: int = 1) -> ExtElement:
        """``g ** (p**i)``; ``i = e`` gives the conjugation ``x + y*a -> x - y*a``."""
        i %= 2 * self.e
        F = self.base
        return ExtElement(self, F.frobenius(g.x, i), F.mul(F.frobenius(g.y, i), self._alpha_frob[i]))

    def galois_exponents(self) -> list[int]:
        return [self.p ** i for i in range(2 * self.e)]

    # -- primitive element and logs ------------------------------------

    def multiplicative_order(self, g: ExtElement) -> int:
        if not g:
            raise NotAUnit("0 has no multiplicative order")
        n = self.order
        for r in prime_factors(self.order):
            while n % r == 0 and (g ** (n // r)) == self.one:
                n //= r
        return n

    @cached_property
    def beta(self) -> ExtElement:
        """Smallest primitive element of GF(q^2)* in :meth:`sort_key` order."""
        factors = prime_factors(self.order)
        F = self.base
        xs = sorted(F.elements(), key=F.sort_key)
        for y in xs:
            for x in xs:
                g = ExtElement(self, x, y)
                if g and all(g ** (self.order // r) != self.one for r in factors):
                    return g
        raise AssertionError("no primitive element")  # pragma: no cover

    @cached_property
    def omega(self) -> ExtElement:
        return self.beta ** (self.q - 1)

    @cached_property
    def _log_table(self) -> list[int]:
        log = [-1] * self.size
        g = self.one
        b = self.beta
        for k in range(self.order):
            log[g.index] = k
            g = g * b
        return log

    def log(self, g: ExtElement) -> int:
        if not g:
            raise NotAUnit("0 has no discrete logarithm")
        return self._log_table[g.index]

    # -- squares -------------------------------------------------------

    def is_square_by_norm(self, g: ExtElement) -> bool:
        if not g:
            raise NotAUnit("0 is not a unit")
        return self.base.is_square(self.norm(g))

    def is_square_by_log(self, g: ExtElement) -> bool:
        return self.log(g) % 2 == 0

    def is_square(self, g: ExtElement) -> bool:
        """Squareness of a unit, via the norm criterion and the beta-log, which must agree."""
        a = self.is_square_by_norm(g)
        if a != self.is_square_by_log(g):  # pragma: no cover - would mean broken tables
            raise AssertionError(f"squareness routes disagree at {g!r}")
        return a

    @cached_property
    def square_bitmap(self) -> bytearray:
        """``bitmap[i] == 1`` iff the element of index ``i`` is a nonzero square."""
        F = self.base
        q = self.q
        sq_base = bytearray(q)
        for k in range(0, F.order, 2):
            sq_base[F.exp(k)] = 1
        nd = [F.mul(F.mul(y, y), self.d) for y in range(q)]
        xx = [F.mul(x, x) for x in range(q)]
        out = bytearray(self.size)
        for y in range(q):
            row = y * q
            for x in range(q):
                out[row + x] = sq_base[F.sub(xx[x], nd[y])]
        out[0] = 0
        return out

    # -- unit circle ---------------------------------------------------

    def circle_subgroups(self) -> CircleSubgroups:
        return _circle(self)

    def __repr__(self):
        return f"GF({self.q}^2, d={self.d})"


@lru_cache(maxsize=None)
def _circle(E: ExtField) -> CircleSubgroups:
    Q = frozenset(g for g in E.units() if E.norm(g) == 1)
    Q0 = frozenset(g * g for g in Q)
    Q1 = Q - Q0
    return CircleSubgroups(Q, Q0, Q1)


@lru_cache(maxsize=None)
def make_extension(q: int, d: int | None = None) -> ExtField:
    return ExtField(make_base_field(q), d)
