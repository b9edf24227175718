"""Exact arithmetic in the rings Z[2cos(pi/L)].

An element is stored as the integer coefficient tuple of a polynomial in
``c = 2cos(pi/L)`` of degree below ``deg Psi``, where ``Psi`` is the minimal
polynomial of ``c``.  Signs are decided exactly by evaluating over a dyadic
interval isolating ``c`` among the roots of ``Psi``.

Coefficients are held to a fixed signed word width (64 bits by default)
and every operation checks for overflow.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache

from .core import INF

__all__ = [
    "BaseRing",
    "RingElem",
    "RingOverflowError",
    "cyclotomic_polynomial",
    "minimal_polynomial",
    "chebyshev_D",
    "get_ring",
    "embed",
    "ring_arith",
    "sign",
    "lift",
    "set_word_bits",
    "word_bits",
]


class RingOverflowError(OverflowError):
    pass


_WORD_BITS = int(os.environ.get("MINROOTS_WORD_BITS", "64"))
_LIMIT = 1 << (_WORD_BITS - 1)

# bits of the initial isolating interval
_ISOLATION_BITS = 64


def set_word_bits(bits: int) -> None:
    """Change the checked coefficient width (also settable via MINROOTS_WORD_BITS)."""
    global _WORD_BITS, _LIMIT
    if bits < 8:
        raise ValueError("word width must be at least 8 bits")
    _WORD_BITS = bits
    _LIMIT = 1 << (bits - 1)


def word_bits() -> int:
    return _WORD_BITS


def _check(coeffs):
    for c in coeffs:
        if c >= _LIMIT or c < -_LIMIT:
            raise RingOverflowError(
                f"ring coefficient {c} exceeds the {_WORD_BITS}-bit word width; "
                "raise it with set_word_bits() or MINROOTS_WORD_BITS"
            )
    return coeffs


# -- integer polynomials, coefficient lists low degree first -----------------

def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _pmul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdivexact(a, b):
    """Exact division of integer polynomials; ``b`` monic."""
    a = list(a)
    db = len(b) - 1
    q = [0] * (len(a) - db)
    for k in range(len(q) - 1, -1, -1):
        c = a[k + db]
        q[k] = c
        if c:
            for j, y in enumerate(b):
                a[k + j] -= c * y
    if any(a):
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Phi_n by the division recursion (z^n - 1) / prod_{d | n, d < n} Phi_d."""
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _pdivexact(num, cyclotomic_polynomial(d))
    return tuple(num)


@lru_cache(maxsize=None)
def _D_polys(k: int) -> tuple[tuple[int, ...], ...]:
    """D_0..D_k with D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}."""
    out = [(2,), (0, 1)]
    while len(out) <= k:
        a, b = out[-1], out[-2]
        nxt = [0] + list(a)
        for i, y in enumerate(b):
            nxt[i] -= y
        out.append(tuple(_trim(nxt)))
    return tuple(out[: k + 1])


def chebyshev_D(k: int) -> tuple[int, ...]:
    """Integer polynomial D_k with D_k(2cos t) = 2cos(k t)."""
    return _D_polys(k)[k]


@lru_cache(maxsize=None)
def minimal_polynomial(L: int) -> tuple[int, ...]:
    """Minimal polynomial of 2cos(pi/L), coefficients low degree first.

    Phi_{2L}(z) is palindromic of degree 2d, so z^{-d} Phi_{2L}(z) is a
    polynomial of degree d in x = z + 1/z.  Levels 1 and 3 both give x - 1.
    """
    if L < 1:
        raise ValueError("level must be positive")
    if L == 1:
        L = 3
    phi = cyclotomic_polynomial(2 * L)
    d = (len(phi) - 1) // 2
    psi = [phi[d]]
    for k in range(1, d + 1):
        dk = chebyshev_D(k)
        psi += [0] * (len(dk) - len(psi))
        for i, y in enumerate(dk):
            psi[i] += phi[d + k] * y
    return tuple(_trim(psi))


# -- Sturm sequences for the isolating interval ------------------------------

def _feval(p, x):
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def _frem(a, b):
    a = [Fraction(c) for c in a]
    while len(a) >= len(b) and any(a):
        q = a[-1] / b[-1]
        shift = len(a) - len(b)
        for i, y in enumerate(b):
            a[shift + i] -= q * y
        a.pop()
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def _sturm_chain(p):
    p0 = [Fraction(c) for c in p]
    p1 = [Fraction(i * c) for i, c in enumerate(p)][1:]
    chain = [p0, p1]
    while len(chain[-1]) > 1 or chain[-1][0] != 0:
        r = _frem(chain[-2], chain[-1])
        if not any(r):
            break
        chain.append([-c for c in r])
        if len(r) == 1:
            break
    return chain


def _sign_changes(chain, x):
    signs = [v for v in (_feval(p, x) for p in chain) if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if (a > 0) != (b > 0))


def _isolate_largest_root(psi, bits):
    """Dyadic (A, A+1) / 2^bits bracketing the largest root of psi in (0, 2)."""
    chain = _sturm_chain(psi)

    def count(a, b):  # roots in (a, b]
        return _sign_changes(chain, a) - _sign_changes(chain, b)

    lo, hi = Fraction(0), Fraction(2)
    if count(lo, hi) < 1:
        raise ArithmeticError("no root of the minimal polynomial in (0, 2)")
    k = 0
    while k < bits or count(lo, hi) != 1:
        mid = (lo + hi) / 2
        if count(mid, hi) >= 1:
            lo = mid
        else:
            hi = mid
        k += 1
    # the starting width is 2, so the width is now 2^(1-k)
    scale = 1 << (k - 1)
    a = lo * scale
    assert a.denominator == 1 and (hi - lo) * scale == 1
    return int(a), k - 1


# -- the ring ---------------------------------------------------------------

class BaseRing:
    """The ring Z[c] for c = 2cos(pi/L).  Obtain instances through :func:`get_ring`."""

    def __init__(self, level: int):
        if level == 1:
            level = 3
        self.level = level
        self.psi = minimal_polynomial(level)
        self.degree = d = len(self.psi) - 1
        # rows express x^d .. x^{2d-2} in the basis 1..x^{d-1}
        red = []
        cur = [-c for c in self.psi[:d]]
        for _ in range(max(d - 1, 0)):
            red.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(d):
                    cur[i] -= top * self.psi[i]
        self._red = tuple(red)
        if d > 1:
            self._A, self._bits = _isolate_largest_root(self.psi, _ISOLATION_BITS)
            self._lo_pows, self._hi_pows = _scaled_powers(self._A, self._bits, d)
        self.zero = RingElem(self, (0,) * d)
        self.one = self.const(1)

    def __repr__(self) -> str:
        return f"BaseRing({self.level})"

    def __reduce__(self):
        return (get_ring, (self.level,))

    def const(self, n: int) -> RingElem:
        return RingElem(self, _check((n,) + (0,) * (self.degree - 1)))

    def __call__(self, value) -> RingElem:
        if isinstance(value, RingElem):
            return lift(value, self)
        if isinstance(value, int):
            return self.const(value)
        return self.from_coeffs(value)

    def from_coeffs(self, coeffs) -> RingElem:
        """Reduce an arbitrary-length polynomial in c modulo Psi."""
        return RingElem(self, _check(self._reduce(list(coeffs))))

    @property
    def gen(self) -> RingElem:
        """The element c = 2cos(pi/L) itself."""
        return self.from_coeffs((0, 1))

    def isolating_interval(self) -> tuple[Fraction, Fraction]:
        if self.degree == 1:
            c = Fraction(-self.psi[0])
            return c, c
        den = 1 << self._bits
        return Fraction(self._A, den), Fraction(self._A + 1, den)

    def weight(self, m) -> RingElem:
        """-2 (alpha_s . alpha_t) for m = m_{s,t}: c_m, 0 for m = 2, 2 for m infinite."""
        if m is INF:
            return self.const(2)
        return embed(m, self)

    def _reduce(self, p):
        d = self.degree
        if len(p) <= d:
            return tuple(p) + (0,) * (d - len(p))
        if d == 1:
            # c is the rational integer -psi[0]
            c = -self.psi[0]
            acc = 0
            for x in reversed(p):
                acc = acc * c + x
            return (acc,)
        # extend reduction rows if the input is longer than a product
        while len(p) > 2 * d - 1:
            top = p.pop()
            if top:
                base = len(p) - d
                for i in range(d):
                    p[base + i] -= top * self.psi[i]
        out = p[:d]
        for k in range(d, len(p)):
            ck = p[k]
            if ck:
                row = self._red[k - d]
                for i in range(d):
                    out[i] += ck * row[i]
        return tuple(out)


def _scaled_powers(A, bits, d):
    lo = tuple(A ** i << (bits * (d - 1 - i)) for i in range(d))
    hi = tuple((A + 1) ** i << (bits * (d - 1 - i)) for i in range(d))
    return lo, hi


def get_ring(level: int) -> BaseRing:
    """Shared ring instance for a level; levels 1 and 3 are the same ring."""
    return _ring_cache(3 if level == 1 else level)


@lru_cache(maxsize=None)
def _ring_cache(level: int) -> BaseRing:
    return BaseRing(level)


class RingElem:
    """Element of a :class:`BaseRing`; immutable and hashable."""

    __slots__ = ("ring", "c")

    def __init__(self, ring: BaseRing, coeffs: tuple[int, ...]):
        self.ring = ring
        self.c = coeffs

    def _coerce(self, other):
        if isinstance(other, RingElem):
            if other.ring is not self.ring:
                raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.c
        if isinstance(other, int):
            return (other,) + (0,) * (self.ring.degree - 1)
        return NotImplemented

    def __add__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return oc
        return RingElem(self.ring, _check(tuple(a + b for a, b in zip(self.c, oc))))

    __radd__ = __add__

    def __sub__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return oc
        return RingElem(self.ring, _check(tuple(a - b for a, b in zip(self.c, oc))))

    def __rsub__(self, other):
        oc = self._coerce(other)
        if oc is NotImplemented:
            return oc
        return RingElem(self.ring, _check(tuple(b - a for a, b in zip(self.c, oc))))

    def __neg__(self):
        return RingElem(self.ring, _check(tuple(-a for a in self.c)))

    def __mul__(self, other):
        if isinstance(other, int):
            return RingElem(self.ring, _check(tuple(a * other for a in self.c)))
        oc = self._coerce(other)
        if oc is NotImplemented:
            return oc
        a, b = self.c, oc
        d = len(a)
        if d == 1:
            return RingElem(self.ring, _check((a[0] * b[0],)))
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return RingElem(self.ring, _check(self.ring._reduce(prod)))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.ring.one
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, RingElem):
            if other.ring is self.ring:
                return self.c == other.c
            if self.is_const() and other.is_const():
                return self.c[0] == other.c[0]
            return self.ring.level == other.ring.level and self.c == other.c
        if isinstance(other, int):
            return self.c[0] == other and not any(self.c[1:])
        return NotImplemented

    def __hash__(self):
        if not any(self.c[1:]):
            return hash(self.c[0])
        return hash((self.ring.level, self.c))

    def __bool__(self):
        return any(self.c)

    def is_const(self) -> bool:
        return not any(self.c[1:])

    def is_one(self) -> bool:
        return self.c[0] == 1 and not any(self.c[1:])

    def __int__(self):
        if not self.is_const():
            raise ValueError(f"{self} is not an integer")
        return self.c[0]

    def sign(self) -> int:
        return sign(self)

    def __float__(self):
        import math

        x = 2 * math.cos(math.pi / self.ring.level)
        return float(sum(a * x ** i for i, a in enumerate(self.c)))

    def render(self) -> str:
        """Canonical text: ``a`` for constants, else ``poly{L}:a0,a1,...``."""
        if self.is_const():
            return str(self.c[0])
        return f"poly{self.ring.level}:" + ",".join(map(str, self.c))

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"RingElem({self.render()})"


def parse_elem(text: str, ring: BaseRing | None = None) -> RingElem:
    """Inverse of :meth:`RingElem.render`.  Constants land in ``ring`` (integers if None)."""
    text = text.strip()
    if text.startswith("poly"):
        head, _, body = text.partition(":")
        level = int(head[4:])
        r = get_ring(level)
        coeffs = tuple(int(x) for x in body.split(","))
        if len(coeffs) != r.degree:
            raise ValueError(f"expected {r.degree} coefficients in {text!r}")
        el = RingElem(r, _check(coeffs))
        return lift(el, ring) if ring is not None and ring is not r else el
    n = int(text)
    return (ring or get_ring(3)).const(n)


def embed(m: int, ring: BaseRing) -> RingElem:
    """c_m = 2cos(pi/m) inside the ring of level L, as D_{L/m}(c_L)."""
    if m is INF:
        raise ValueError("embed needs a finite order; use ring.weight for infinity")
    if m == 2:
        return ring.zero
    if m == 3:
        return ring.const(1)
    if ring.level % m:
        raise ValueError(f"order {m} does not divide the ring level {ring.level}")
    return _embed_cached(m, ring.level)


@lru_cache(maxsize=None)
def _embed_cached(m: int, level: int) -> RingElem:
    ring = get_ring(level)
    return ring.from_coeffs(chebyshev_D(level // m))


def ring_arith(a: RingElem, b: RingElem, op: str) -> RingElem:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


@lru_cache(maxsize=None)
def _lift_images(src_level: int, dst_level: int):
    src, dst = get_ring(src_level), get_ring(dst_level)
    if dst.level % src.level:
        raise ValueError(f"cannot lift level {src.level} into level {dst.level}")
    x = embed(src.level, dst)
    images = [dst.one]
    for _ in range(1, src.degree):
        images.append(images[-1] * x)
    return images


def lift(a: RingElem, ring: BaseRing) -> RingElem:
    """Image of ``a`` under Z[c_M] -> Z[c_L] for M dividing L."""
    if a.ring is ring:
        return a
    if a.is_const():
        return ring.const(a.c[0])
    images = _lift_images(a.ring.level, ring.level)
    out = ring.zero
    for coef, img in zip(a.c, images):
        if coef:
            out = out + img * coef
    return out


def sign(a: RingElem) -> int:
    """Exact sign of ``a`` evaluated at c = 2cos(pi/L)."""
    c = a.c
    if len(c) == 1 or not any(c[1:]):
        x = c[0]
        return (x > 0) - (x < 0)
    ring = a.ring
    lo_p, hi_p = ring._lo_pows, ring._hi_pows
    low = high = 0
    for coef, pl, ph in zip(c, lo_p, hi_p):
        if coef > 0:
            low += coef * pl
            high += coef * ph
        elif coef < 0:
            low += coef * ph
            high += coef * pl
    if low > 0:
        return 1
    if high < 0:
        return -1
    return _refine_sign(a)


def _refine_sign(a: RingElem) -> int:
    if not any(a.c):
        return 0
    ring = a.ring
    lo, hi = ring.isolating_interval()
    psi = ring.psi
    s_lo = _feval(psi, lo) > 0
    while True:
        mid = (lo + hi) / 2
        v = _feval(psi, mid)
        if v == 0:  # c is irrational here, so this cannot happen
            raise ArithmeticError("rational root of an irreducible polynomial")
        if (v > 0) == s_lo:
            lo = mid
        else:
            hi = mid
        low = high = Fraction(0)
        for i, coef in enumerate(a.c):
            if coef > 0:
                low += coef * lo ** i
                high += coef * hi ** i
            elif coef < 0:
                low += coef * hi ** i
                high += coef * lo ** i
        if low > 0:
            return 1
        if high < 0:
            return -1
