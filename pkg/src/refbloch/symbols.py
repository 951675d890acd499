"""Formal symbol sums and the distinguished elements built from them.

A SymbolSum is a finite R_F-linear combination of pre-Bloch symbols [a],
a in F^x, kept purely formal: no relations are applied until the sum is
evaluated inside a presented group (finite fields) or specialized through a
place (global fields).  [1] is allowed and evaluates to 0 everywhere.

The distinguished elements:

    psi_1(x) = [x] + <-1>[x^-1]
    psi_2(x) = <1-x>(<x>[x] + [x^-1])            (0 for x = 1)
    Ctilde(x) = [x] + <-1>[1-x]
    C(x) = Ctilde(x) + <<1-x>> psi_1(x)          (constant in x; the value b_F)
    D(x) = [x] + <-1>[1/(1-x^-1)] - psi_1(1/(1-x))   (the value c_F = 2 b_F)

and the twisted five-term relator

    S_{x,y} = [x] - [y] + <x>[y/x] - <x^-1 - 1>[(1-x^-1)/(1-y^-1)]
              + <1-x>[(1-x)/(1-y)].
"""

from __future__ import annotations

from .groupring import GroupRingElement, ang, dbl, square_class


class SymbolError(Exception):
    pass


def _is_zero(v):
    return v == 0 if isinstance(v, int) else (v.is_zero() if hasattr(v, "is_zero") else v == 0)


def _is_one(field, v):
    return v == field.one() if hasattr(field, "one") else v == 1


class SymbolSum:
    """terms: list of (GroupRingElement coefficient, nonzero argument)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        clean = []
        for coeff, arg in terms or []:
            if not isinstance(coeff, GroupRingElement):
                coeff = GroupRingElement.one(field) * coeff
            if coeff.field != field:
                raise SymbolError("coefficient over the wrong field")
            if _is_zero(arg):
                raise SymbolError("symbol arguments must be nonzero")
            if not coeff.is_zero():
                clean.append((coeff, arg))
        self.terms = clean

    @classmethod
    def zero(cls, field):
        return cls(field, [])

    def __add__(self, other):
        if not isinstance(other, SymbolSum) or other.field != self.field:
            raise SymbolError("sums over different fields")
        return SymbolSum(self.field, self.terms + other.terms)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return SymbolSum(self.field, [(-c, a) for c, a in self.terms])

    def scale(self, factor) -> "SymbolSum":
        """Multiply every coefficient by a group ring element (or scalar)."""
        if not isinstance(factor, GroupRingElement):
            factor = GroupRingElement.one(self.field) * factor
        return SymbolSum(self.field, [(factor * c, a) for c, a in self.terms])

    def collected(self):
        """Terms with equal (class, argument) pairs merged; purely cosmetic,
        evaluation does its own accumulation."""
        acc: dict = {}
        for coeff, arg in self.terms:
            key = arg
            acc[key] = acc.get(key, GroupRingElement.zero(self.field)) + coeff
        return [(c, a) for a, c in acc.items() if not c.is_zero()]

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"({c!r})[{a!r}]" for c, a in self.terms)

    def to_json(self):
        return {
            "field": field_spec_string(self.field),
            "terms": [
                {"coeff": c.to_json(), "arg": _format_arg(self.field, a)}
                for c, a in self.terms
            ],
        }


def sym(field, a, coeff=1) -> SymbolSum:
    return SymbolSum(field, [(coeff, a)])


def psi(field, i: int, x) -> SymbolSum:
    """The 1-cocycle liftings of the Suslin elements; psi_i(1) = 0."""
    if i not in (1, 2):
        raise SymbolError("psi index must be 1 or 2")
    if _is_zero(x):
        raise SymbolError("psi needs a nonzero argument")
    if _is_one(field, x):
        return SymbolSum.zero(field)
    if i == 1:
        return sym(field, x) + sym(field, 1 / x, ang(field, -1))
    front = ang(field, 1 - x)
    return sym(field, x, front * ang(field, x)) + sym(field, 1 / x, front)


def suslin(field, x) -> SymbolSum:
    """Classical  [x] + [x^-1]  (image of psi_i under coinvariants)."""
    if _is_zero(x):
        raise SymbolError("nonzero argument required")
    if _is_one(field, x):
        return SymbolSum.zero(field)
    return sym(field, x) + sym(field, 1 / x)


def constant(field, kind: str, x) -> SymbolSum:
    """The elements Ctilde(x), C(x) (= b_F) and D(x) (= c_F = 2 b_F)."""
    if _is_zero(x) or _is_one(field, x):
        raise SymbolError("argument must avoid 0 and 1")
    if kind == "Ctilde":
        return sym(field, x) + sym(field, 1 - x, ang(field, -1))
    if kind == "C":
        return constant(field, "Ctilde", x) + psi(field, 1, x).scale(dbl(field, 1 - x))
    if kind == "D":
        return (
            sym(field, x)
            + sym(field, 1 / (1 - 1 / x), ang(field, -1))
            - psi(field, 1, 1 / (1 - x))
        )
    raise SymbolError(f"unknown constant kind {kind!r}")


def five_term(field, x, y) -> SymbolSum:
    """The twisted five-term relator S_{x,y} (x, y != 0, 1)."""
    for v in (x, y):
        if _is_zero(v) or _is_one(field, v):
            raise SymbolError("five-term arguments must avoid 0 and 1")
    terms = [
        (GroupRingElement.one(field), x),
        (-GroupRingElement.one(field), y),
        (ang(field, x), y / x),
        (-ang(field, 1 / x - 1), (1 - 1 / x) / (1 - 1 / y)),
        (ang(field, 1 - x), (1 - x) / (1 - y)),
    ]
    # x = y leaves [1] entries; they are kept formal and evaluate to 0
    return SymbolSum(field, terms)


# -- literals -----------------------------------------------------------------


def field_spec_string(field) -> str:
    kind = getattr(field, "kind", None)
    if kind == "Q":
        return "Q"
    if kind == "finite":
        return f"GF({field.q})" if field.f == 1 else f"GF({field.p}^{field.f})"
    if kind == "ratfunc":
        return f"GF({field.base.q})(t)"
    raise SymbolError(f"unknown field handle {field!r}")


def _format_arg(field, a) -> str:
    return field.format_elem(a) if hasattr(field, "format_elem") else str(a)
