"""Square-class groups and their group rings with dyadic coefficients.

The square-class group of F is F^x/(F^x)^2.  Classes are stored canonically:

* finite field, odd q: one bit (square / nonsquare); trivial for even q;
* Q: a sign bit plus the finite set of primes with odd exponent;
* GF(p)(t): the square-class bit of the leading coefficient, the finite set
  of monic irreducibles with odd exponent, and the parity of the degree (the
  datum seen by the place at infinity; it is determined by the irreducible
  set and checked at construction).

Ring elements are finitely supported maps class -> dyadic rational, which
makes one arithmetic path serve both R_F = Z[F^x/(F^x)^2] and its
localization Z[1/2] (x) R_F; integrality is checked where it matters.

The residue ring homomorphisms rho_{pi,eps} send <u pi^r> to eps^r <ubar>
for a chosen uniformizer pi and sign eps.
"""

from __future__ import annotations

from fractions import Fraction

from .fields import (
    FieldError,
    FqElem,
    FqField,
    Place,
    Poly,
    QQ,
    RatFunc,
    RatFuncField,
    RationalField,
    factor_int,
    unit_decompose,
)


class GroupRingError(Exception):
    pass


class NotIntegral(GroupRingError):
    """A dyadic coefficient appeared where an integer was required."""


# ---------------------------------------------------------------------------
# dyadic rationals
# ---------------------------------------------------------------------------


class Dyadic:
    """num / 2^den2 in lowest terms (num odd or zero whenever den2 > 0)."""

    __slots__ = ("num", "den2")

    def __init__(self, num, den2=0):
        num = int(num)
        den2 = int(den2)
        if den2 < 0:
            num <<= -den2
            den2 = 0
        if num == 0:
            den2 = 0
        while den2 > 0 and num % 2 == 0:
            num //= 2
            den2 -= 1
        self.num = num
        self.den2 = den2

    @classmethod
    def from_fraction(cls, fr: Fraction) -> "Dyadic":
        den = fr.denominator
        k = den.bit_length() - 1
        if den != 1 << k:
            raise NotIntegral(f"{fr} is not a dyadic rational")
        return cls(fr.numerator, k)

    def as_fraction(self) -> Fraction:
        return Fraction(self.num, 1 << self.den2)

    def __add__(self, other):
        other = _dyadic(other)
        k = max(self.den2, other.den2)
        return Dyadic(
            (self.num << (k - self.den2)) + (other.num << (k - other.den2)), k
        )

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_dyadic(other))

    def __rsub__(self, other):
        return _dyadic(other) + (-self)

    def __neg__(self):
        return Dyadic(-self.num, self.den2)

    def __mul__(self, other):
        other = _dyadic(other)
        return Dyadic(self.num * other.num, self.den2 + other.den2)

    __rmul__ = __mul__

    def is_zero(self):
        return self.num == 0

    def is_integral(self):
        return self.den2 == 0

    def __bool__(self):
        return self.num != 0

    def __eq__(self, other):
        other = _dyadic(other)
        return self.num == other.num and self.den2 == other.den2

    def __hash__(self):
        return hash((self.num, self.den2))

    def __repr__(self):
        return str(self.num) if self.den2 == 0 else f"{self.num}/2^{self.den2}"


def _dyadic(v) -> Dyadic:
    if isinstance(v, Dyadic):
        return v
    if isinstance(v, int):
        return Dyadic(v)
    if isinstance(v, Fraction):
        return Dyadic.from_fraction(v)
    raise GroupRingError(f"cannot treat {v!r} as a dyadic rational")


# ---------------------------------------------------------------------------
# square classes
# ---------------------------------------------------------------------------


class SquareClass:
    """Canonical element of F^x / (F^x)^2.  `field` is the field handle
    (FqField, QQ, or RatFuncField); `data` the canonical payload."""

    __slots__ = ("field", "data")

    def __init__(self, field, data):
        self.field = field
        self.data = data

    # -- constructors --------------------------------------------------------

    @classmethod
    def identity(cls, field):
        if isinstance(field, FqField):
            return cls(field, 0)
        if isinstance(field, RationalField):
            return cls(field, (0, frozenset()))
        if isinstance(field, RatFuncField):
            return cls(field, (0, frozenset(), 0))
        raise GroupRingError(f"no square classes for {field!r}")

    def is_identity(self):
        return self == SquareClass.identity(self.field)

    def __mul__(self, other):
        if not isinstance(other, SquareClass) or other.field != self.field:
            raise GroupRingError("classes of different fields")
        if isinstance(self.field, FqField):
            return SquareClass(self.field, self.data ^ other.data)
        if isinstance(self.field, RationalField):
            s1, p1 = self.data
            s2, p2 = other.data
            return SquareClass(self.field, (s1 ^ s2, p1 ^ p2))
        b1, i1, d1 = self.data
        b2, i2, d2 = other.data
        return SquareClass(self.field, (b1 ^ b2, i1 ^ i2, d1 ^ d2))

    def representative(self):
        """A canonical field element in this class."""
        if isinstance(self.field, FqField):
            return self.field.one() if self.data == 0 else self.field.nonsquare()
        if isinstance(self.field, RationalField):
            sign, primes = self.data
            n = -1 if sign else 1
            for p in sorted(primes):
                n *= p
            return Fraction(n)
        bit, irreds, _parity = self.data
        out = self.field.one()
        if bit:
            out = out * self.field.base.nonsquare()
        for pi in sorted(irreds):
            out = out * self.field.elem(pi)
        return out

    def canonical_str(self) -> str:
        rep = self.representative()
        if isinstance(self.field, FqField):
            return self.field.format_elem(rep)
        if isinstance(self.field, RationalField):
            return str(rep)
        return self.field.format_elem(rep)

    def __eq__(self, other):
        return (
            isinstance(other, SquareClass)
            and other.field == self.field
            and other.data == self.data
        )

    def __hash__(self):
        return hash((self.field, self.data))

    def __lt__(self, other):
        return _class_sort_key(self) < _class_sort_key(other)

    def __repr__(self):
        return f"<{self.canonical_str()}>"


def _class_sort_key(c: SquareClass):
    if isinstance(c.field, FqField):
        return (c.data,)
    if isinstance(c.field, RationalField):
        sign, primes = c.data
        return (sign, sorted(primes))
    bit, irreds, parity = c.data
    return (bit, sorted(irreds), parity)


def square_class(field, a) -> SquareClass:
    """Canonical square class of a nonzero element; multiplicative in `a`."""
    if isinstance(field, FqField):
        x = field.elem(a)
        if x.is_zero():
            raise GroupRingError("zero has no square class")
        if field.p == 2:
            return SquareClass(field, 0)
        return SquareClass(field, 0 if field.is_square(x) else 1)
    if isinstance(field, RationalField):
        x = QQ.elem(a)
        if x == 0:
            raise GroupRingError("zero has no square class")
        sign = 1 if x < 0 else 0
        primes = set()
        for n in (x.numerator, x.denominator):
            for p, e in factor_int(n).items():
                if e % 2:
                    primes.symmetric_difference_update({p})
        return SquareClass(field, (sign, frozenset(primes)))
    if isinstance(field, RatFuncField):
        x = field.elem(a)
        if x.is_zero():
            raise GroupRingError("zero has no square class")
        lc = x.num.leading()  # den is monic, so this is the leading coefficient
        bit = 0 if field.base.p == 2 or field.base.is_square(lc) else 1
        irreds = set()
        for poly in (x.num, x.den):
            if poly.degree >= 1:
                for pi, e in field.factor_poly(poly).items():
                    if e % 2:
                        irreds.symmetric_difference_update({pi})
        parity = x.degree() % 2
        cls = SquareClass(field, (bit, frozenset(irreds), parity))
        assert sum(pi.degree for pi in irreds) % 2 == parity
        return cls
    raise GroupRingError(f"no square classes for {field!r}")


# ---------------------------------------------------------------------------
# group ring
# ---------------------------------------------------------------------------


class GroupRingElement:
    """Finitely supported map SquareClass -> Dyadic over one field handle."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        clean = {}
        for cls, coeff in (terms or {}).items():
            coeff = _dyadic(coeff)
            if not coeff.is_zero():
                clean[cls] = coeff
        self.terms = clean

    @classmethod
    def zero(cls, field):
        return cls(field, {})

    @classmethod
    def one(cls, field):
        return cls(field, {SquareClass.identity(field): Dyadic(1)})

    @classmethod
    def of_class(cls, c: SquareClass, coeff=1):
        return cls(c.field, {c: _dyadic(coeff)})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for c, v in other.terms.items():
            out[c] = out.get(c, Dyadic(0)) + v
        return GroupRingElement(self.field, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __neg__(self):
        return GroupRingElement(self.field, {c: -v for c, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Dyadic, Fraction)):
            d = _dyadic(other)
            return GroupRingElement(
                self.field, {c: v * d for c, v in self.terms.items()}
            )
        other = self._coerce(other)
        out: dict = {}
        for c1, v1 in self.terms.items():
            for c2, v2 in other.terms.items():
                c = c1 * c2
                out[c] = out.get(c, Dyadic(0)) + v1 * v2
        return GroupRingElement(self.field, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, GroupRingElement):
            if other.field != self.field:
                raise GroupRingError("mixed group rings")
            return other
        if isinstance(other, (int, Dyadic, Fraction)):
            return GroupRingElement.one(self.field) * other
        raise GroupRingError(f"cannot treat {other!r} as a group ring element")

    def augmentation(self) -> Dyadic:
        total = Dyadic(0)
        for v in self.terms.values():
            total = total + v
        return total

    def is_integral(self):
        return all(v.is_integral() for v in self.terms.values())

    def __eq__(self, other):
        return (
            isinstance(other, GroupRingElement)
            and other.field == self.field
            and other.terms == self.terms
        )

    def __hash__(self):
        return hash((self.field, frozenset(self.terms.items())))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = [f"{v!r}*{c!r}" for c, v in sorted(self.terms.items(), key=lambda t: _class_sort_key(t[0]))]
        return " + ".join(parts)

    # -- JSON ----------------------------------------------------------------

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda t: _class_sort_key(t[0]))
        return [
            {"class": c.canonical_str(), "num": v.num, "den2": v.den2}
            for c, v in items
        ]

    @classmethod
    def from_json(cls, field, payload):
        terms = {}
        for item in payload:
            c = square_class(field, _parse_field_elem(field, item["class"]))
            coeff = Dyadic(item["num"], item.get("den2", 0))
            terms[c] = terms.get(c, Dyadic(0)) + coeff
        return cls(field, terms)


def _parse_field_elem(field, literal):
    if isinstance(field, RationalField):
        return QQ.elem(literal)
    return field.elem(literal)


# -- shorthand constructors ----------------------------------------------------


def ang(field, a) -> GroupRingElement:
    """<a>, the class of `a` as a ring element."""
    return GroupRingElement.of_class(square_class(field, a))


def dbl(field, a) -> GroupRingElement:
    """<<a>> = <a> - 1, the augmentation-ideal basis element."""
    return ang(field, a) - 1


def p_plus(field, a) -> GroupRingElement:
    return ang(field, a) + 1


def p_minus(field, a) -> GroupRingElement:
    one = GroupRingElement.one(field)
    return one - ang(field, a)


def e_plus(field, a) -> GroupRingElement:
    return p_plus(field, a) * Dyadic(1, 1)


def e_minus(field, a) -> GroupRingElement:
    return p_minus(field, a) * Dyadic(1, 1)


# ---------------------------------------------------------------------------
# residue homomorphisms rho_{pi, eps}
# ---------------------------------------------------------------------------


class Rho:
    """Ring homomorphism R_F -> R_k at a place: <u pi^r> -> eps^r <ubar>."""

    def __init__(self, place: Place, uniformizer, eps: int):
        if eps not in (1, -1):
            raise GroupRingError("eps must be +1 or -1")
        from .fields import valuation

        if valuation(place, uniformizer) != 1:
            raise FieldError("uniformizer must have valuation 1")
        self.place = place
        self.uniformizer = uniformizer
        self.eps = eps
        self.residue_field = place.residue_field

    def _global_field(self):
        return QQ if self.place.kind == "Q" else self.place.field

    def on_class(self, c: SquareClass):
        """Return (sign, residue class) with sign = eps^{v(rep)}."""
        rep = c.representative()
        r, ubar = unit_decompose(self.place, rep, self.uniformizer)
        sign = self.eps if r % 2 else 1
        return sign, square_class(self.residue_field, ubar)

    def __call__(self, x: GroupRingElement) -> GroupRingElement:
        out: dict = {}
        for c, v in x.terms.items():
            sign, rc = self.on_class(c)
            coeff = v if sign == 1 else -v
            out[rc] = out.get(rc, Dyadic(0)) + coeff
        return GroupRingElement(self.residue_field, out)


def rho(place: Place, uniformizer, eps: int) -> Rho:
    return Rho(place, uniformizer, eps)
