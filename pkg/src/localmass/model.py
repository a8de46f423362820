"""Parameter space and combinatorial skeleton of the filtered module.

A local field ``F`` with finite residue field of characteristic ``p`` enters
the computations only through its parameters: ``p``, the residue degree ``f``
(so ``q = p**f``), and the absolute ramification index ``e``, which is
``math.inf`` for a field of equal characteristic (Laurent series over the
residue field) and a finite integer for a finite extension of the p-adics.

Conjugacy classes of separable degree-p extensions of ``F`` correspond to
stable lines in a filtered module attached to ``F``.  That module decomposes
into eigen-blocks, one per character class of the degree-(p-1) abelian
closure, and each block sits at a well-defined filtration level.  This module
encodes the block layout (levels, character valuations, dimensions), the
level arithmetic, and the break/discriminant arithmetic of the tame
subextension; :mod:`localmass.mass` turns the layout into masses and counts.

Characters are reduced to the data the formulas consume: a valuation class
mod ``p - 1``, optional full coordinates in the basis (uniformizer class,
residue-unit generator class), and a distinguished marker for the trivial
character and for the mod-p cyclotomic character.  In equal characteristic
(and for ``p = 2``) the cyclotomic character is the trivial one.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

#: Absolute ramification index of an equal-characteristic field.
INFINITE_E = math.inf

#: Distinguished markers for character classes (also the wire spelling).
GENERIC = "none"
TRIVIAL = "trivial"
OMEGA = "omega"


def is_prime(n: int) -> bool:
    """Primality by trial division; adequate for the parameter sizes here."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class LocalField:
    """Parameters (p, f, e) of a local field with residue cardinality q = p^f.

    ``e`` is a finite integer for mixed characteristic and ``math.inf`` for
    equal characteristic; no integer sentinel is ever used, so stratum loops
    can compare against ``e`` directly.
    """

    p: int
    f: int
    e: int | float

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if not isinstance(self.f, int) or self.f < 1:
            raise ValueError(f"residue degree f = {self.f!r} must be an integer >= 1")
        if self.e == INFINITE_E:
            return
        if not isinstance(self.e, int) or self.e < 1:
            raise ValueError(
                f"ramification index e = {self.e!r} must be an integer >= 1 or infinite"
            )

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def equal_char(self) -> bool:
        """True when the field has equal characteristic (e infinite)."""
        return self.e == INFINITE_E

    def to_json_obj(self) -> dict:
        return {
            "p": self.p,
            "f": self.f,
            "e": "inf" if self.equal_char else self.e,
            "q": self.q,
        }


@dataclass(frozen=True)
class CharClass:
    """A character class: valuation mod p-1, optional coordinates, marker.

    ``coords = (a, b)`` are exponents in the basis (uniformizer class,
    residue-unit generator class), so ``a`` is the valuation.
    """

    valuation: int
    distinguished: str = GENERIC
    coords: tuple[int, int] | None = None

    def __post_init__(self) -> None:
        if self.distinguished not in (GENERIC, TRIVIAL, OMEGA):
            raise ValueError(f"unknown marker {self.distinguished!r}")
        if self.distinguished == TRIVIAL:
            if self.valuation != 0 or self.coords not in (None, (0, 0)):
                raise ValueError("trivial character must have valuation 0 and coords (0, 0)")
        if self.coords is not None and self.coords[0] != self.valuation:
            raise ValueError("first coordinate must equal the valuation")


def trivial_char() -> CharClass:
    return CharClass(0, TRIVIAL, (0, 0))


def generic_char(valuation: int, coords: tuple[int, int] | None = None) -> CharClass:
    return CharClass(valuation, GENERIC, coords)


def omega_char(field: LocalField, coords: tuple[int, int] | None = None) -> CharClass:
    """The cyclotomic character class of ``field`` (trivial in equal char)."""
    if omega_is_trivial(field):
        return trivial_char()
    v = cyclotomic_valuation(field)
    if coords is not None and coords[0] % (field.p - 1) != v:
        raise ValueError("cyclotomic coordinates must have valuation e mod p-1")
    return CharClass(v, OMEGA, coords)


def omega_is_trivial(field: LocalField) -> bool:
    """Whether the cyclotomic character is the trivial one.

    True in equal characteristic by convention, and for p = 2 always (the
    mod-2 cyclotomic character has trivial target).
    """
    return field.equal_char or field.p == 2


def char_is_omega(field: LocalField, chi: CharClass) -> bool:
    if chi.distinguished == OMEGA:
        return True
    return omega_is_trivial(field) and chi.distinguished == TRIVIAL


def char_is_trivial(field: LocalField, chi: CharClass) -> bool:
    if chi.distinguished == TRIVIAL:
        return True
    return omega_is_trivial(field) and chi.distinguished == OMEGA


def validate_char(field: LocalField, chi: CharClass) -> None:
    """Check the field-dependent character invariants."""
    if chi.distinguished == OMEGA:
        if chi.valuation % (field.p - 1) != cyclotomic_valuation(field):
            raise ValueError("cyclotomic character must have valuation e mod p-1")
    if chi.distinguished == TRIVIAL and chi.valuation != 0:
        raise ValueError("trivial character must have valuation 0")


def nth_prime_to_p(p: int, n: int) -> int:
    """The n-th positive integer prime to p (0 for n = 0).

    This is the unique strictly increasing function of n >= 1 whose image is
    the set of positive integers not divisible by p; the possible nonzero
    filtration levels below the top one are exactly these integers.
    """
    if n < 0:
        raise ValueError("index must be >= 0")
    if n == 0:
        return 0
    return n + (n - 1) // (p - 1)


def cyclotomic_valuation(field: LocalField) -> int:
    """Valuation class of the cyclotomic character: e mod p-1, or 0 in equal char."""
    if omega_is_trivial(field):
        return 0
    return field.e % (field.p - 1)


def _slot_for_valuation(field: LocalField, valuation: int, i: int) -> int:
    # Unique j in [1, p-1] with valuation + i + j == cyclotomic valuation mod p-1.
    m = field.p - 1
    return (cyclotomic_valuation(field) - valuation - i - 1) % m + 1


def stratum_slot(field: LocalField, chi: CharClass, i: int) -> int:
    """Position j in [1, p-1] of chi's eigen-block within stratum i.

    Determined by ``valuation(chi) + i + j == cyclotomic valuation`` mod p-1;
    periodic in i with period p-1.  For p = 2 the interval [1, 1] forces j = 1.
    """
    if i < 0:
        raise ValueError("stratum index must be >= 0")
    validate_char(field, chi)
    return _slot_for_valuation(field, chi.valuation, i)


def stratum_level(field: LocalField, chi: CharClass, i: int) -> int:
    """Filtration level p*i + j of chi's eigen-block in stratum i.

    Always prime to p.  In mixed characteristic only strata i < e exist; the
    top level p*e belongs to the separate stratum of the trivial character.
    """
    if not field.equal_char and i >= field.e:
        raise ValueError("stratum beyond ramification bound")
    return field.p * i + stratum_slot(field, chi, i)


def unramified_level() -> int:
    """Level of the distinguished line, i.e. of the unramified extension."""
    return 0


def eigenspace_dim(field: LocalField, chi: CharClass, t: int) -> int:
    """Dimension over F_p of chi's eigenspace after t filtration strata.

    Each stratum contributes f dimensions to every character class; the
    cyclotomic character owns the extra level-0 line.  In mixed
    characteristic ``t = e`` means the full space, where the trivial
    character gains one more dimension from the top-level line.
    """
    if t < 0:
        raise ValueError("step must be >= 0")
    if not field.equal_char and t > field.e:
        raise ValueError("step beyond ramification bound")
    validate_char(field, chi)
    dim = t * field.f
    if char_is_omega(field, chi):
        dim += 1
    if not field.equal_char and t == field.e and char_is_trivial(field, chi):
        dim += 1
    return dim


def enumerate_characters(
    field: LocalField, omega_coords: tuple[int, int] | None = None
) -> list[CharClass]:
    """All (p-1)^2 character classes as coordinate pairs, in (a, b) order.

    The valuation of ``(a, b)`` is ``a``, so each valuation class carries
    exactly p-1 characters.  The trivial character is (0, 0).  In equal
    characteristic the trivial character is also the cyclotomic one; in mixed
    characteristic the cyclotomic class is marked only when its coordinates
    are supplied (they are not determined by the field parameters alone).
    """
    m = max(field.p - 1, 1)
    if omega_coords is not None:
        omega_coords = (omega_coords[0] % m, omega_coords[1] % m)
        if not omega_is_trivial(field) and omega_coords[0] != cyclotomic_valuation(field):
            raise ValueError("cyclotomic coordinates must have valuation e mod p-1")
        if omega_is_trivial(field) and omega_coords != (0, 0):
            raise ValueError("cyclotomic character is trivial for this field")
    chars = []
    for a in range(m):
        for b in range(m):
            if (a, b) == (0, 0):
                marker = TRIVIAL
            elif omega_coords is not None and (a, b) == omega_coords:
                marker = OMEGA
            else:
                marker = GENERIC
            chars.append(CharClass(a, marker, (a, b)))
    return chars


@dataclass(frozen=True)
class EigenBlock:
    """One eigen-block of the filtered module: where, whose, and how big."""

    level: int
    valuation: int
    dim: int
    distinguished: str  # "omega" | "trivial" | "none"

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "vbar": self.valuation,
            "dim": self.dim,
            "distinguished": self.distinguished,
        }


@dataclass(frozen=True)
class FilteredLayout:
    """Explicit eigen-block decomposition of the filtered module."""

    field: LocalField
    max_level: int
    blocks: tuple[EigenBlock, ...]

    @property
    def total_dim(self) -> int:
        return sum(b.dim for b in self.blocks)

    def to_json_obj(self) -> list[dict]:
        return [b.to_json_obj() for b in self.blocks]


def layout(field: LocalField, max_level: int | None = None) -> FilteredLayout:
    """Block layout up to ``max_level``.

    In mixed characteristic the bound is clamped to the top level p*e and may
    be omitted; in equal characteristic the module is infinite-dimensional,
    so a finite bound is required.  One block is emitted per character class
    per stratum (dimension f each), plus the level-0 line of the cyclotomic
    character and, in mixed characteristic, the top-level line of the trivial
    character.  At full truncation in mixed characteristic the dimensions sum
    to 2 + (p-1)^2 * e * f.
    """
    p, f = field.p, field.f
    m = max(p - 1, 1)
    if field.equal_char:
        if max_level is None:
            raise ValueError("max_level required for an equal-characteristic field")
        bound = max_level
    else:
        top = p * field.e
        bound = top if max_level is None else min(max_level, top)

    blocks = [EigenBlock(0, cyclotomic_valuation(field), 1, OMEGA)]
    level = 1
    while level <= bound:
        if level % p != 0 and not (not field.equal_char and level >= p * field.e):
            w = (cyclotomic_valuation(field) - level) % m
            markers = []
            if omega_is_trivial(field):
                if w == 0:
                    markers.append(OMEGA)
            else:
                if w == cyclotomic_valuation(field):
                    markers.append(OMEGA)
                if w == 0:
                    markers.append(TRIVIAL)
            markers.extend([GENERIC] * (m - len(markers)))
            blocks.extend(EigenBlock(level, w, f, mk) for mk in markers)
        level += 1
    if not field.equal_char and p * field.e <= bound:
        blocks.append(EigenBlock(p * field.e, 0, 1, TRIVIAL))
    return FilteredLayout(field, bound, tuple(blocks))


@dataclass(frozen=True)
class BreakData:
    """Ramification data of a degree-p extension read off its Galois closure.

    ``b`` is the unique ramification break of the wild subgroup, ``t`` the
    order of the tame inertia quotient, and ``r`` the residual degree of the
    tame subextension.  The break is always prime to the tame order.
    """

    b: int
    t: int
    r: int

    def __post_init__(self) -> None:
        if self.b < 1 or self.t < 1 or self.r < 1:
            raise ValueError("break data must be positive")
        if math.gcd(self.b, self.t) != 1:
            raise ValueError("break must be prime to the tame inertia order")


def discriminant_valuation(p: int, bd: BreakData) -> int:
    """Valuation (p-1)(b+t)/t of the discriminant of the degree-p extension.

    Obtained by computing the closure's discriminant along the two towers of
    the closure diagram; integrality is re-checked at runtime because break
    data may come from external input.
    """
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if (p - 1) % bd.t != 0:
        raise ValueError("inconsistent break data")
    num = (p - 1) * (bd.b + bd.t)
    if num % bd.t != 0:
        raise ValueError("inconsistent break data")
    return num // bd.t
