"""Table-driven arithmetic in GF(q) for odd prime powers q.

Elements are plain ``int`` codes in ``0..q-1``: the code of
``c0 + c1*t + ... + c_{e-1}*t^{e-1}`` is ``sum(c_i * p**i)``, so the prime
subfield GF(p) occupies codes ``0..p-1`` with their usual integer meaning.

Whenever the construction needs a "smallest" element it compares the
coefficient tuples ``(c0, c1, ...)`` lexicographically (see
:meth:`GF.sort_key`); for prime fields this is plain integer order.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import product

from .errors import DivisionByZero, NotAnOddPrimePower, NotAUnit, SizeLimitExceeded

MAX_Q = 1 << 13


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` by trial division."""
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def odd_prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``, or raise NotAnOddPrimePower."""
    if not isinstance(q, int) or q < 3 or q % 2 == 0:
        raise NotAnOddPrimePower(f"q={q} is not an odd prime power")
    ps = prime_factors(q)
    if len(ps) != 1:
        raise NotAnOddPrimePower(f"q={q} is not an odd prime power (factors {ps})")
    p = ps[0]
    e = 0
    n = q
    while n > 1:
        n //= p
        e += 1
    return p, e


def _poly_mulmod(a, b, modulus, p):
    """Multiply digit tuples ``a*b`` modulo the monic ``modulus`` over GF(p)."""
    e = len(modulus) - 1
    prod = [0] * (2 * e - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for k in range(len(prod) - 1, e - 1, -1):
        c = prod[k]
        if c:
            for j in range(e + 1):
                prod[k - e + j] = (prod[k - e + j] - c * modulus[j]) % p
    return tuple(prod[:e])


def _poly_divides(f, g, p):
    """True iff monic ``f`` divides ``g`` over GF(p) (tuples low-degree-first)."""
    g = list(g)
    df = len(f) - 1
    for k in range(len(g) - 1, df - 1, -1):
        c = g[k]
        if c:
            for j in range(df + 1):
                g[k - df + j] = (g[k - df + j] - c * f[j]) % p
    return not any(g[:df])


def is_irreducible(poly, p: int) -> bool:
    """Exhaustive check that no monic polynomial of degree 1..deg/2 divides ``poly``."""
    e = len(poly) - 1
    for k in range(1, e // 2 + 1):
        for low in product(range(p), repeat=k):
            if _poly_divides(low + (1,), poly, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``e``, low-degree-first."""
    for low in product(range(p), repeat=e):
        poly = low + (1,)
        if is_irreducible(poly, p):
            return poly
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class GF:
    """The finite field GF(q), q = p**e odd, with log/antilog and Zech tables.

    Construction is deterministic: the modulus is the smallest monic
    irreducible and the generator the smallest primitive element, both by
    coefficient-tuple order.  Instances are immutable once built.
    """

    def __init__(self, q: int):
        p, e = odd_prime_power(q)
        if q > MAX_Q:
            raise SizeLimitExceeded(f"q={q} exceeds the supported maximum {MAX_Q}")
        self.p, self.e, self.q = p, e, q
        self.modulus = smallest_irreducible(p, e)
        self.order = q - 1
        self._half = (q - 1) // 2

        factors = prime_factors(q - 1)
        one = (1,) + (0,) * (e - 1)
        for cand in product(range(p), repeat=e):
            if not any(cand):
                continue
            cand = tuple(cand)
            if all(self._digits_pow(cand, (q - 1) // r) != one for r in factors):
                break
        self._generator_digits = cand

        exp = [0] * (q - 1)
        log = [-1] * q
        x = one
        for k in range(q - 1):
            c = self.from_digits(x)
            exp[k] = c
            log[c] = k
            x = _poly_mulmod(x, cand, self.modulus, p)
        self._exp = exp
        self._log = log
        self.generator = exp[1]

        # zech[k] = log(1 + g^k), or -1 where 1 + g^k == 0
        zech = [-1] * (q - 1)
        for k in range(q - 1):
            s = self._add_digits(exp[k], 1)
            zech[k] = log[s] if s else -1
        self._zech = zech

    # -- representation ------------------------------------------------

    def _digits_pow(self, digits, n):
        result = (1,) + (0,) * (self.e - 1)
        base = digits
        while n:
            if n & 1:
                result = _poly_mulmod(result, base, self.modulus, self.p)
            base = _poly_mulmod(base, base, self.modulus, self.p)
            n >>= 1
        return result

    def digits(self, a: int) -> tuple[int, ...]:
        """Coefficient tuple ``(c0, ..., c_{e-1})`` of code ``a``."""
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return tuple(out)

    def from_digits(self, digits) -> int:
        code = 0
        for c in reversed(tuple(digits)):
            code = code * self.p + c % self.p
        return code

    def _add_digits(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        da, db = self.digits(a), self.digits(b)
        return self.from_digits(tuple((x + y) % self.p for x, y in zip(da, db)))

    def sort_key(self, a: int) -> tuple[int, ...]:
        return self.digits(a)

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def log(self, a: int) -> int:
        """Discrete log of ``a`` to the base of :attr:`generator`."""
        if a == 0:
            raise NotAUnit("0 has no discrete logarithm")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % self.order]

    def symmetric(self, a: int) -> int:
        """Integer in ``-(p-1)/2..(p-1)/2``; prime fields only."""
        if self.e != 1:
            raise ValueError("symmetric integer form needs a prime field")
        return a - self.p if a > self.p // 2 else a

    def __call__(self, n: int) -> int:
        """Embed an integer n into the prime subfield."""
        return n % self.p

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a + b) % self.p
        if a == 0:
            return b
        if b == 0:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self.order]
        if z < 0:
            return 0
        return self._exp[(la + z) % self.order]

    def neg(self, a: int) -> int:
        if self.e == 1:
            return (-a) % self.p
        if a == 0:
            return 0
        return self._exp[(self._log[a] + self._half) % self.order]

    def sub(self, a: int, b: int) -> int:
        if self.e == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.e == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of 0 in GF(%d)" % self.q)
        return self._exp[(-self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        if b == 0:
            raise DivisionByZero("division by 0 in GF(%d)" % self.q)
        if a == 0:
            return 0
        return self._exp[(self._log[a] - self._log[b]) % self.order]

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise DivisionByZero("0 raised to a negative power")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % self.order]

    def frobenius(self, a: int, i: int = 1) -> int:
        """``a ** (p**i)``."""
        return self.pow(a, pow(self.p, i % self.e))

    # -- squares -------------------------------------------------------

    def is_square(self, a: int) -> bool:
        if a == 0:
            raise NotAUnit("0 is neither a square nor a non-square unit")
        return self._log[a] % 2 == 0

    def squares(self) -> list[int]:
        return sorted(self._exp[k] for k in range(0, self.order, 2))

    def smallest_nonsquare(self) -> int:
        return min((a for a in self.units() if self._log[a] % 2), key=self.sort_key)

    def smallest_unit(self) -> int:
        """The nonzero element with the smallest coefficient tuple."""
        return self._smallest_unit

    @cached_property
    def _smallest_unit(self) -> int:
        return min(self.units(), key=self.sort_key)

    def __repr__(self):
        return f"GF({self.q})"


@lru_cache(maxsize=None)
def make_base_field(q: int) -> GF:
    return GF(q)
