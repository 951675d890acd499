"""Exact arithmetic for the three coefficient fields.

* GF(p^f), built as GF(p)[x]/(m) with a monic irreducible modulus m.  The
  default modulus is the lexicographically smallest monic irreducible of
  degree f, comparing coefficient tuples low-to-high.
* Q, handled through `fractions.Fraction`.
* GF(p)(t), rational functions over a prime field, with denominators monic
  and fractions in lowest terms.

On top of the fields sit places: a prime of Q, a monic irreducible of
GF(p)[t], or the degree place at infinity.  Each carries its residue field
and exact valuation / residue / unit-decomposition maps.

Elements are immutable and ordinary arithmetic operators work throughout,
including mixed expressions with Python ints (1 - x, 1/x, ...).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache


class FieldError(Exception):
    pass


INFINITY = "infinity"  # the place at infinity of GF(p)(t)


# ---------------------------------------------------------------------------
# polynomials over GF(p) with plain int coefficients (moduli, GF(p^f) guts)
# ---------------------------------------------------------------------------


def _zp_trim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _zp_add(a, b, p):
    n = max(len(a), len(b))
    return _zp_trim([( (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _zp_sub(a, b, p):
    n = max(len(a), len(b))
    return _zp_trim([( (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)])


def _zp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _zp_trim(out)


def _zp_divmod(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    binv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and a:
        shift = len(a) - len(b)
        factor = (a[-1] * binv) % p
        q[shift] = factor
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bc) % p
        _zp_trim(a)
    return _zp_trim(q), a


def _zp_pow_mod(a, e, mod, p):
    result = [1]
    base = _zp_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _zp_divmod(_zp_mul(result, base, p), mod, p)[1]
        base = _zp_divmod(_zp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _zp_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _zp_divmod(a, b, p)[1]
    if a:  # make monic
        inv = pow(a[-1], -1, p)
        a = [(c * inv) % p for c in a]
    return a


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _zp_is_irreducible(m, p):
    """Irreducibility of a monic polynomial over GF(p), via x^(p^i) - x gcds."""
    f = len(m) - 1
    if f < 1:
        return False
    x = [0, 1]
    # no factor of degree d <= f/2: gcd(x^(p^d) - x, m) == 1
    power = x
    for d in range(1, f // 2 + 1):
        power = _zp_pow_mod(power, p, m, p)
        g = _zp_gcd(_zp_sub(power, x, p), m, p)
        if g != [1]:
            return False
    return True


def _smallest_irreducible(p, f):
    """Monic irreducible of degree f with lexicographically smallest
    coefficient tuple (compared low-to-high)."""
    if f == 1:
        return [0, 1]  # x itself
    # enumerate constant-first tuples in ascending integer encoding
    for code in range(p**f):
        coeffs = []
        c = code
        for _ in range(f):
            coeffs.append(c % p)
            c //= p
        m = coeffs + [1]
        if _zp_is_irreducible(m, p):
            return m
    raise FieldError(f"no irreducible of degree {f} over GF({p})")  # unreachable


# ---------------------------------------------------------------------------
# GF(p^f)
# ---------------------------------------------------------------------------

_FQ_CACHE: dict = {}


class FqField:
    """The finite field GF(p^f) = GF(p)[x]/(modulus)."""

    def __init__(self, p, f, modulus=None):
        if not is_prime(p):
            raise FieldError(f"{p} is not prime")
        if f < 1:
            raise FieldError("exponent must be positive")
        if modulus is None:
            modulus = _smallest_irreducible(p, f)
        modulus = [int(c) % p for c in modulus]
        if len(modulus) != f + 1 or modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree f")
        if not _zp_is_irreducible(modulus, p):
            raise FieldError("modulus is reducible")
        self.p = p
        self.f = f
        self.q = p**f
        self.modulus = tuple(modulus)
        self.kind = "finite"
        self._dlog = None
        self._squares = None

    def __eq__(self, other):
        return (
            isinstance(other, FqField)
            and (self.p, self.f, self.modulus) == (other.p, other.f, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.f, self.modulus))

    def __repr__(self):
        return f"GF({self.p})" if self.f == 1 else f"GF({self.p}^{self.f})"

    # -- element construction ----------------------------------------------

    def elem(self, v) -> "FqElem":
        """Integers are taken mod p (multiples of 1); lists/tuples are
        coefficient vectors; strings are polynomial literals in x."""
        if isinstance(v, FqElem):
            if v.field != self:
                raise FieldError("element of a different field")
            return v
        if isinstance(v, int):
            return self.from_int(v)
        if isinstance(v, str):
            return self._parse(v)
        coeffs = [int(c) % self.p for c in v]
        if len(coeffs) > self.f:
            raise FieldError("too many coefficients")
        coeffs += [0] * (self.f - len(coeffs))
        return FqElem(self, tuple(coeffs))

    def from_code(self, code):
        """Element whose coefficient vector is the base-p digits of `code`;
        this is the canonical enumeration order of the field."""
        coeffs = []
        c = code
        for _ in range(self.f):
            coeffs.append(c % self.p)
            c //= self.p
        return FqElem(self, tuple(coeffs))

    def from_int(self, n):
        coeffs = [n % self.p] + [0] * (self.f - 1)
        return FqElem(self, tuple(coeffs))

    def zero(self):
        return FqElem(self, (0,) * self.f)

    def one(self):
        return self.from_int(1)

    def gen(self):
        """Residue class of x (only meaningful for f > 1)."""
        if self.f == 1:
            raise FieldError("prime field has no polynomial generator")
        return self.from_code(self.p)

    def elements(self):
        return [self.from_code(c) for c in range(self.q)]

    def units(self):
        return [self.from_code(c) for c in range(1, self.q)]

    def _parse(self, s: str) -> "FqElem":
        coeffs = _parse_poly_string(s, "x", lambda n: n % self.p)
        if len(coeffs) > self.f:
            # reduce modulo the modulus
            rem = _zp_divmod(coeffs, list(self.modulus), self.p)[1]
            coeffs = rem
        coeffs = list(coeffs) + [0] * (self.f - len(coeffs))
        return FqElem(self, tuple(coeffs[: self.f]))

    # -- field-level queries ------------------------------------------------

    def is_square(self, x: "FqElem") -> bool:
        """For odd q: x^((q-1)/2) == 1.  In characteristic 2 every element is
        a square."""
        if x.is_zero():
            raise FieldError("zero has no square class")
        if self.p == 2:
            return True
        return x ** ((self.q - 1) // 2) == self.one()

    def squares(self):
        if self._squares is None:
            self._squares = {u for u in self.units() if self.is_square(u)}
        return self._squares

    def nonsquare(self):
        """Smallest nonsquare unit in enumeration order (odd q)."""
        if self.p == 2:
            raise FieldError("characteristic 2 has no nonsquares")
        for u in self.units():
            if not self.is_square(u):
                return u
        raise FieldError("unreachable")

    def primitive_element(self):
        for u in self.units():
            if u.multiplicative_order() == self.q - 1:
                return u
        raise FieldError("unreachable")

    def dlog(self, x: "FqElem") -> int:
        """Discrete log base the smallest primitive element."""
        if self._dlog is None:
            g = self.primitive_element()
            table = {}
            acc = self.one()
            for k in range(self.q - 1):
                table[acc] = k
                acc = acc * g
            self._dlog = table
        return self._dlog[x]

    def format_elem(self, x: "FqElem") -> str:
        if self.f == 1:
            return str(x.coeffs[0])
        return _format_poly(list(x.coeffs), "x")


def ff_make(p, f, modulus=None) -> FqField:
    """Cached constructor so equal fields are identical objects."""
    key = (p, f, tuple(int(c) for c in modulus) if modulus is not None else None)
    cached = _FQ_CACHE.get(key)
    if cached is None:
        cached = FqField(p, f, modulus)
        _FQ_CACHE[key] = cached
        # register under the explicit modulus too
        _FQ_CACHE.setdefault((p, f, cached.modulus), cached)
    return cached


class FqElem:
    """Element of an FqField; `coeffs` is the reduced residue, low degree
    first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = coeffs

    def code(self):
        c = 0
        for a in reversed(self.coeffs):
            c = c * self.field.p + a
        return c

    def is_zero(self):
        return all(c == 0 for c in self.coeffs)

    def _coerce(self, other):
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldError("mixed fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        p = self.field.p
        return FqElem(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        p = self.field.p
        return FqElem(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        fld = self.field
        prod = _zp_mul(list(self.coeffs), list(o.coeffs), fld.p)
        rem = _zp_divmod(prod, list(fld.modulus), fld.p)[1]
        rem += [0] * (fld.f - len(rem))
        return FqElem(fld, tuple(rem))

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        result = self.field.one()
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def multiplicative_order(self):
        if self.is_zero():
            raise FieldError("zero has no multiplicative order")
        acc = self
        for k in range(1, self.field.q):
            if acc == self.field.one():
                return k
            acc = acc * self
        raise FieldError("unreachable")

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.field.from_int(other)
        return (
            isinstance(other, FqElem)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field.p, self.field.f, self.field.modulus, self.coeffs))

    def __repr__(self):
        return self.field.format_elem(self)


# ---------------------------------------------------------------------------
# polynomial string handling (shared by GF(p^f) literals in x and GF(p)[t]
# literals in t); comma-free, e.g. "t^2+3t+1", "2x", "-t^3+4"
# ---------------------------------------------------------------------------


def _parse_poly_string(s, var, norm):
    s = s.replace(" ", "").replace("*", "")
    if not s:
        raise FieldError("empty polynomial literal")
    # split into signed terms
    terms = []
    buf = ""
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] not in "^+-":
            terms.append(buf)
            buf = ch
        else:
            buf += ch
    terms.append(buf)
    coeffs: dict[int, int] = {}
    for term in terms:
        if not term or term in "+-":
            raise FieldError(f"bad polynomial literal {s!r}")
        sign = 1
        if term[0] == "+":
            term = term[1:]
        elif term[0] == "-":
            sign = -1
            term = term[1:]
        if var in term:
            head, _, tail = term.partition(var)
            coeff = int(head) if head else 1
            if tail.startswith("^"):
                exp = int(tail[1:])
            elif tail == "":
                exp = 1
            else:
                raise FieldError(f"bad polynomial term {term!r}")
        else:
            coeff = int(term)
            exp = 0
        coeffs[exp] = coeffs.get(exp, 0) + sign * coeff
    deg = max(coeffs) if coeffs else 0
    out = [norm(coeffs.get(i, 0)) for i in range(deg + 1)]
    while out and out[-1] == 0:
        out.pop()
    return out


def _format_poly(coeffs, var):
    if not any(coeffs):
        return "0"
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if isinstance(c, FqElem):
            if c.is_zero():
                continue
            cs = c.field.format_elem(c)
        else:
            if c == 0:
                continue
            cs = str(c)
        if e == 0:
            parts.append(cs)
        else:
            head = "" if cs == "1" else cs
            parts.append(f"{head}{var}" if e == 1 else f"{head}{var}^{e}")
    return "+".join(parts)


# ---------------------------------------------------------------------------
# Q
# ---------------------------------------------------------------------------


class RationalField:
    """Handle object for Q; elements are `fractions.Fraction`."""

    kind = "Q"

    def one(self):
        return Fraction(1)

    def zero(self):
        return Fraction(0)

    def elem(self, v):
        if isinstance(v, Fraction):
            return v
        if isinstance(v, int):
            return Fraction(v)
        if isinstance(v, str):
            return Fraction(v.strip())
        raise FieldError(f"cannot read rational from {v!r}")

    def format_elem(self, v: Fraction) -> str:
        return str(v)

    def __repr__(self):
        return "Q"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")


QQ = RationalField()


def factor_int(n: int) -> dict[int, int]:
    """Prime factorisation of a nonzero integer by trial division."""
    if n == 0:
        raise FieldError("cannot factor zero")
    n = abs(n)
    out: dict[int, int] = {}
    for p in (2, 3):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    d = 5
    while d * d <= n:
        for p in (d, d + 2):
            while n % p == 0:
                out[p] = out.get(p, 0) + 1
                n //= p
        d += 6
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


# ---------------------------------------------------------------------------
# GF(p)[t] and GF(p)(t)
# ---------------------------------------------------------------------------


class Poly:
    """Polynomial over an FqField, low degree first, trailing zeros trimmed."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        cs = [field.elem(c) if not isinstance(c, FqElem) else c for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        if self.is_zero():
            raise FieldError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_monic(self):
        return not self.is_zero() and self.leading() == self.field.one()

    def monic(self):
        if self.is_zero():
            return self
        inv = self.leading().inverse()
        return Poly(self.field, [c * inv for c in self.coeffs])

    def __add__(self, other):
        other = _poly_coerce(self.field, other)
        n = max(len(self.coeffs), len(other.coeffs))
        z = self.field.zero()
        return Poly(
            self.field,
            [
                (self.coeffs[i] if i < len(self.coeffs) else z)
                + (other.coeffs[i] if i < len(other.coeffs) else z)
                for i in range(n)
            ],
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_poly_coerce(self.field, other))

    def __rsub__(self, other):
        return _poly_coerce(self.field, other) - self

    def __neg__(self):
        return Poly(self.field, [-c for c in self.coeffs])

    def __mul__(self, other):
        other = _poly_coerce(self.field, other)
        if self.is_zero() or other.is_zero():
            return Poly(self.field, [])
        z = self.field.zero()
        out = [z] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(self.field, out)

    __rmul__ = __mul__

    def __divmod__(self, other):
        other = _poly_coerce(self.field, other)
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        z = self.field.zero()
        q = [z] * max(0, len(rem) - len(other.coeffs) + 1)
        binv = other.leading().inverse()
        while len(rem) >= len(other.coeffs) and rem:
            shift = len(rem) - len(other.coeffs)
            factor = rem[-1] * binv
            q[shift] = factor
            for i, bc in enumerate(other.coeffs):
                rem[shift + i] = rem[shift + i] - factor * bc
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(self.field, q), Poly(self.field, rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __pow__(self, e):
        out = Poly(self.field, [1])
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def gcd(self, other):
        a, b = self, _poly_coerce(self.field, other)
        while not b.is_zero():
            a, b = b, a % b
        return a.monic() if not a.is_zero() else a

    def evaluate(self, x: FqElem):
        acc = self.field.zero()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def int_coeffs(self):
        """Lift of the coefficients to ints (prime base field only)."""
        if self.field.f != 1:
            raise FieldError("integer lift needs a prime base field")
        return [c.coeffs[0] for c in self.coeffs]

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and other.field == self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __lt__(self, other):
        # enumeration order: by degree, then coefficient codes low-to-high
        key_s = (self.degree, tuple(c.code() for c in self.coeffs))
        key_o = (other.degree, tuple(c.code() for c in other.coeffs))
        return key_s < key_o

    def __repr__(self):
        return _format_poly(list(self.coeffs), "t")


def _poly_coerce(field, v):
    if isinstance(v, Poly):
        if v.field != field:
            raise FieldError("mixed base fields")
        return v
    if isinstance(v, (int, FqElem)):
        return Poly(field, [v])
    raise FieldError(f"cannot treat {v!r} as a polynomial")


class RatFuncField:
    """The rational function field GF(q)(t).  Places of degree > 1 need a
    prime base field (their residue fields are built as GF(p)[t]/(pi))."""

    kind = "ratfunc"

    def __init__(self, base: FqField):
        self.base = base
        self._irreducibles: list[Poly] = []
        self._irr_degree = 0

    def t(self):
        return RatFunc(self, Poly(self.base, [0, 1]), Poly(self.base, [1]))

    def one(self):
        return RatFunc(self, Poly(self.base, [1]), Poly(self.base, [1]))

    def zero(self):
        return RatFunc(self, Poly(self.base, []), Poly(self.base, [1]))

    def poly(self, coeffs) -> Poly:
        return Poly(self.base, coeffs)

    def elem(self, v) -> "RatFunc":
        if isinstance(v, RatFunc):
            if v.field != self:
                raise FieldError("element of a different function field")
            return v
        if isinstance(v, (int, FqElem)):
            return RatFunc(self, _poly_coerce(self.base, v), Poly(self.base, [1]))
        if isinstance(v, Poly):
            return RatFunc(self, v, Poly(self.base, [1]))
        if isinstance(v, str):
            return self._parse(v)
        raise FieldError(f"cannot read rational function from {v!r}")

    def _parse(self, s: str) -> "RatFunc":
        s = s.strip().replace(" ", "")
        if "/" in s:
            num_s, _, den_s = s.partition("/")
        else:
            num_s, den_s = s, "1"
        num = Poly(self.base, _parse_poly_string(num_s.strip("()"), "t", lambda n: n))
        den = Poly(self.base, _parse_poly_string(den_s.strip("()"), "t", lambda n: n))
        return RatFunc(self, num, den)

    def format_elem(self, v: "RatFunc") -> str:
        num = _format_poly(list(v.num.coeffs), "t")
        if v.den.degree == 0:
            return num
        den = _format_poly(list(v.den.coeffs), "t")
        return f"({num})/({den})"

    def monic_irreducibles(self, up_to_degree):
        """Monic irreducibles of degree <= up_to_degree in enumeration order
        (degree, then coefficient codes).  Trial division by the smaller
        irreducibles is complete because the list grows in degree order."""
        while self._irr_degree < up_to_degree:
            d = self._irr_degree + 1
            q = self.base.q
            for code in range(q**d):
                coeffs = []
                c = code
                for _ in range(d):
                    coeffs.append(self.base.from_code(c % q))
                    c //= q
                cand = Poly(self.base, coeffs + [self.base.one()])
                if all(
                    not (cand % f).is_zero()
                    for f in self._irreducibles
                    if 2 * f.degree <= d
                ):
                    self._irreducibles.append(cand)
            self._irr_degree = d
        return [f for f in self._irreducibles if f.degree <= up_to_degree]

    def is_irreducible(self, poly: Poly) -> bool:
        if poly.degree < 1:
            return False
        self.monic_irreducibles(poly.degree // 2)
        m = poly.monic()
        return all(
            not (m % f).is_zero()
            for f in self._irreducibles
            if f.degree <= poly.degree // 2
        )

    def factor_poly(self, poly: Poly) -> dict[Poly, int]:
        """Factor a nonzero polynomial into monic irreducibles (the leading
        coefficient is dropped)."""
        if poly.is_zero():
            raise FieldError("cannot factor zero")
        m = poly.monic()
        out: dict[Poly, int] = {}
        d = 1
        while m.degree >= 1:
            if 2 * d > m.degree:
                out[m] = out.get(m, 0) + 1
                break
            for f in self.monic_irreducibles(d):
                if f.degree != d:
                    continue
                while (m % f).is_zero():
                    out[f] = out.get(f, 0) + 1
                    m = m // f
            d += 1
        return out

    def __eq__(self, other):
        return isinstance(other, RatFuncField) and other.base == self.base

    def __hash__(self):
        return hash(("ratfunc", self.base))

    def __repr__(self):
        return f"{self.base!r}(t)"


@lru_cache(maxsize=None)
def rational_function_field(p, f=1) -> RatFuncField:
    return RatFuncField(ff_make(p, f))


class RatFunc:
    """Reduced fraction of polynomials; denominator monic and coprime to the
    numerator."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field, num: Poly, den: Poly):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = num.gcd(den)
        if not g.is_zero() and g.degree > 0:
            num, den = num // g, den // g
        lc = den.leading()
        if lc != field.base.one():
            inv = lc.inverse()
            num = num * inv
            den = den * inv
        self.field = field
        self.num = num
        self.den = den

    def is_zero(self):
        return self.num.is_zero()

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            if other.field != self.field:
                raise FieldError("mixed function fields")
            return other
        if isinstance(other, (int, FqElem, Poly)):
            return self.field.elem(other)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * o.den - o.num * self.den, self.den * o.den)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o - self

    def __neg__(self):
        return RatFunc(self.field, -self.num, self.den)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.field, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc(self.field, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o / self

    def __pow__(self, e):
        if e < 0:
            return (1 / self) ** (-e)
        out = self.field.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def degree(self):
        """deg num - deg den (the zero function has degree -infinity; raises)."""
        if self.is_zero():
            raise FieldError("zero has no degree")
        return self.num.degree - self.den.degree

    def __eq__(self, other):
        if isinstance(other, (int, FqElem, Poly)):
            other = self.field.elem(other)
        return (
            isinstance(other, RatFunc)
            and other.field == self.field
            and other.num == self.num
            and other.den == self.den
        )

    def __hash__(self):
        return hash((self.field, self.num, self.den))

    def __repr__(self):
        return self.field.format_elem(self)


# ---------------------------------------------------------------------------
# places
# ---------------------------------------------------------------------------


class Place:
    """A discrete rank-1 place: a prime of Q, a monic irreducible of
    GF(p)[t], or the place at infinity of GF(p)(t)."""

    def __init__(self, kind, datum, field=None):
        self.kind = kind
        self.datum = datum
        self.field = field
        if kind == "Q":
            if not is_prime(datum):
                raise FieldError(f"{datum} is not prime")
            self.residue_field = ff_make(datum, 1)
        elif kind == "ratfunc":
            if not isinstance(field, RatFuncField):
                raise FieldError("function-field place needs its field")
            if datum is INFINITY:
                self.residue_field = field.base
            else:
                if not isinstance(datum, Poly) or not datum.is_monic():
                    raise FieldError("place datum must be a monic polynomial")
                if not field.is_irreducible(datum):
                    raise FieldError("place datum is reducible")
                if datum.degree == 1:
                    self.residue_field = field.base
                elif field.base.f == 1:
                    self.residue_field = ff_make(
                        field.base.p, datum.degree, datum.int_coeffs()
                    )
                else:
                    raise FieldError(
                        "higher-degree places need a prime base field"
                    )
        else:
            raise FieldError(f"unknown place kind {kind!r}")

    @classmethod
    def of_prime(cls, p):
        return cls("Q", p)

    @classmethod
    def of_poly(cls, field: RatFuncField, pi: Poly):
        return cls("ratfunc", pi.monic(), field)

    @classmethod
    def at_infinity(cls, field: RatFuncField):
        return cls("ratfunc", INFINITY, field)

    def uniformizer(self):
        if self.kind == "Q":
            return Fraction(self.datum)
        if self.datum is INFINITY:
            return 1 / self.field.t()
        return self.field.elem(self.datum)

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and other.kind == self.kind
            and other.datum == self.datum
            and other.field == self.field
        )

    def __hash__(self):
        return hash((self.kind, self.datum, self.field))

    def __repr__(self):
        if self.kind == "Q":
            return f"Place(Q, {self.datum})"
        if self.datum is INFINITY:
            return "Place(infinity)"
        return f"Place({self.datum!r})"

    def label(self) -> str:
        if self.kind == "Q":
            return str(self.datum)
        if self.datum is INFINITY:
            return "infinity"
        return _format_poly(list(self.datum.coeffs), "t")


def valuation(place: Place, a) -> int:
    """Exact order of `a` at the place.  Errors on zero input."""
    if place.kind == "Q":
        a = QQ.elem(a)
        if a == 0:
            raise FieldError("valuation of zero")
        p = place.datum
        v = 0
        n = a.numerator
        while n % p == 0:
            n //= p
            v += 1
        d = a.denominator
        while d % p == 0:
            d //= p
            v -= 1
        return v
    a = place.field.elem(a)
    if a.is_zero():
        raise FieldError("valuation of zero")
    if place.datum is INFINITY:
        return a.den.degree - a.num.degree
    pi = place.datum
    v = 0
    n = a.num
    while (n % pi).is_zero():
        n = n // pi
        v += 1
    d = a.den
    while (d % pi).is_zero():
        d = d // pi
        v -= 1
    return v


def residue(place: Place, a) -> FqElem:
    """Image of a valuation-zero element in the residue field."""
    if valuation(place, a) != 0:
        raise FieldError("residue of a nonunit")
    k = place.residue_field
    if place.kind == "Q":
        p = place.datum
        a = QQ.elem(a)
        return k.from_int(a.numerator * pow(a.denominator, -1, p))
    if place.datum is INFINITY:
        # equal degrees: ratio of leading coefficients
        return a.num.leading() / a.den.leading()
    pi = place.datum
    n, d = a.num % pi, a.den % pi
    if pi.degree == 1:
        root = -pi.coeffs[0]
        return n.evaluate(root) / d.evaluate(root)
    # residue field is GF(p)[t]/(pi) itself
    dinv_coeffs = _poly_inverse_mod(d, pi)
    r = (n * dinv_coeffs) % pi
    lift = r.int_coeffs()
    return k.elem(lift + [0] * (k.f - len(lift)))


def _poly_inverse_mod(a: Poly, m: Poly) -> Poly:
    """Inverse of a modulo m via extended Euclid."""
    fld = a.field
    r0, r1 = m, a % m
    s0, s1 = Poly(fld, []), Poly(fld, [1])
    while not r1.is_zero():
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ZeroDivisionError("element not invertible modulo the place")
    return s0 * r0.leading().inverse()


def unit_decompose(place: Place, a, uniformizer):
    """Write a = (unit) * uniformizer^r and return (r, residue of the unit).

    The pair (residue, r mod 2) pins down the square class of `a` relative to
    the splitting the uniformizer induces."""
    if valuation(place, uniformizer) != 1:
        raise FieldError("uniformizer must have valuation 1")
    r = valuation(place, a)
    return r, residue(place, a * uniformizer ** (-r))
