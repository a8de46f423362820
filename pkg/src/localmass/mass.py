"""Masses, per-character contributions, counts, and the tame analogue.

The ramified separable degree-p extensions of a local field, weighted by
``q**-c`` where ``c`` is the wild part of the discriminant valuation, have
total mass exactly ``p``.  Each conjugacy class corresponds to a stable line
in the filtered module of :mod:`localmass.model`; a line at level ``d`` in
the eigenspace of a character ``chi`` accounts for one extension when ``chi``
is the cyclotomic character and for ``p`` conjugate extensions otherwise,
each weighted ``q**-d``.  Summing level by level gives every quantity here:

* :func:`char_contribution` — the mass carried by one character class,
  as a direct sum over strata (finite in mixed characteristic, a closed-form
  geometric series in equal characteristic);
* :func:`char_contribution_closed` — the same value through an independent
  closed-form expression, kept as a permanent cross-check;
* :func:`total_mass` — the full report, asserting the total is exactly p;
* :func:`count_extensions` / :func:`count_table` — how many extensions and
  conjugacy classes live at each level;
* the Galois-closure filters — masses of the extensions whose closure group
  is constrained (cyclic, split by an unramified extension, of given order);
* :func:`tame_mass` — the two-dimensional degree-p' analogue, p' != p.

All values are exact ``Fraction``s; a violated internal identity raises
:class:`MassInvariantError` instead of returning a wrong report.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .model import (
    OMEGA,
    CharClass,
    LocalField,
    char_is_omega,
    char_is_trivial,
    cyclotomic_valuation,
    enumerate_characters,
    generic_char,
    is_prime,
    omega_char,
    omega_is_trivial,
    stratum_level,
    stratum_slot,
    trivial_char,
    validate_char,
)
from .rationals import format_rational, geom_finite, geom_infinite, rat_pow


class MassInvariantError(RuntimeError):
    """An internal exact identity failed; the report would be wrong."""


@dataclass(frozen=True)
class LevelCount:
    """Extensions and conjugacy classes at one filtration level."""

    level: int
    lines: int
    extensions: int
    conjugacy_classes: int

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "lines": self.lines,
            "extensions": self.extensions,
            "conjugacy_classes": self.conjugacy_classes,
        }


@dataclass(frozen=True)
class MassReport:
    """Per-valuation contributions and the asserted total mass.

    ``per_vbar[w]`` is the ramified below-top contribution of one character
    of valuation ``w``; ``tres_extra`` is the top-level mass (nonzero only in
    mixed characteristic), attributed to the trivial character.
    """

    field: LocalField
    per_vbar: dict[int, Fraction]
    tres_extra: Fraction
    total: Fraction
    counts: dict[int, LevelCount] | None = None

    @property
    def grand_total(self) -> Fraction:
        """Total over all degree-p extensions, the unramified one included."""
        return self.total + 1

    def to_json_obj(self) -> dict:
        obj = {
            "field": self.field.to_json_obj(),
            "per_vbar": {str(w): format_rational(c) for w, c in sorted(self.per_vbar.items())},
            "tres_extra": format_rational(self.tres_extra),
            "total_ramified": format_rational(self.total),
            "grand_total": format_rational(self.grand_total),
        }
        if self.counts is not None:
            obj["counts"] = {str(d): rec.to_json_obj() for d, rec in sorted(self.counts.items())}
        return obj


@dataclass(frozen=True)
class TameReport:
    """Mass data for degree-p' extensions, p' prime to the residue characteristic."""

    pprime: int
    p: int
    q: int
    deg_kprime: int
    omega_trivial: bool
    ramified_count: int
    conjugacy_classes: int
    mass: Fraction

    @property
    def grand_total(self) -> Fraction:
        return self.mass + 1

    def to_json_obj(self) -> dict:
        return {
            "pprime": self.pprime,
            "p": self.p,
            "q": self.q,
            "deg_kprime": self.deg_kprime,
            "omega_trivial": self.omega_trivial,
            "ramified_count": self.ramified_count,
            "conjugacy_classes": self.conjugacy_classes,
            "mass": format_rational(self.mass),
            "grand_total": format_rational(self.grand_total),
        }


def tres_term(field: LocalField) -> Fraction:
    """Mass p * q**((1-p)e) of the top-level stratum (mixed characteristic)."""
    if field.equal_char:
        raise ValueError("no très ramifiées stratum")
    return field.p * rat_pow(field.q, (1 - field.p) * field.e)


def char_contribution(field: LocalField, chi: CharClass) -> Fraction:
    """Exact mass of the extensions mapping to the character class ``chi``.

    Sums ``p(q-1)/(p-1) * q**(i - level_i)`` over the strata ``i``.  In mixed
    characteristic the sum runs over ``i < e`` and the trivial character
    additionally carries the whole top-level stratum.  In equal characteristic
    the infinite sum is evaluated exactly: slots repeat with period ``p - 1``
    in ``i``, so grouping strata by residue class leaves one geometric series
    of ratio ``q**-(p-1)**2`` per class.
    """
    validate_char(field, chi)
    p, q = field.p, field.q
    scale = Fraction(p * (q - 1), p - 1)
    if field.equal_char:
        head = sum(
            rat_pow(q, i - (p * i + stratum_slot(field, chi, i))) for i in range(p - 1)
        )
        return scale * head * geom_infinite(rat_pow(q, -((p - 1) ** 2)))
    total = scale * sum(rat_pow(q, i - stratum_level(field, chi, i)) for i in range(field.e))
    if char_is_trivial(field, chi):
        total += tres_term(field)
    return total


def char_contribution_closed(field: LocalField, chi: CharClass) -> Fraction:
    """Closed-form evaluation of :func:`char_contribution`.

    Splits the stratum sum at the offset ``a = (cyclotomic valuation -
    valuation(chi)) mod (p-1)``: a head of ``a`` strata with slot ``a - i``,
    then full periods of ``p - 1`` strata plus a partial period, obtained by
    Euclidean division of the remaining stratum count.  Must agree exactly
    with the direct sum for every input; any discrepancy implicates this
    closed form, never the direct sum.
    """
    validate_char(field, chi)
    p, q = field.p, field.q
    m = p - 1
    a = (cyclotomic_valuation(field) - chi.valuation) % m
    scale = Fraction(p * (q - 1), m)
    x = rat_pow(q, -(p - 2))  # ratio between consecutive slots within a period
    big = rat_pow(q, -(m * m))  # ratio between full periods
    head_len = a if field.equal_char else min(a, field.e)
    s = rat_pow(q, -a) * geom_finite(x, head_len)
    if field.equal_char or field.e > a:
        lead = rat_pow(q, -m * (a + 1))
        block = geom_finite(x, m)
        if field.equal_char:
            s += lead * block * geom_infinite(big)
        else:
            n_full, rem = divmod(field.e - a - 1, m)
            s += lead * (block * geom_finite(big, n_full) + rat_pow(big, n_full) * geom_finite(x, rem + 1))
    total = scale * s
    if not field.equal_char and char_is_trivial(field, chi):
        total += tres_term(field)
    return total


def char_contribution_truncated(
    field: LocalField, chi: CharClass, max_level: int
) -> Fraction:
    """Direct stratum sum restricted to levels <= max_level.

    The exact partial sum the brute-force oracle must reproduce at the same
    bound; with the bound at or above the top level in mixed characteristic
    it equals :func:`char_contribution`.
    """
    validate_char(field, chi)
    p, q = field.p, field.q
    scale = Fraction(p * (q - 1), p - 1)
    total = Fraction(0)
    i = 0
    while (field.equal_char or i < field.e) and p * i + 1 <= max_level:
        level = p * i + stratum_slot(field, chi, i)
        if level <= max_level:
            total += scale * rat_pow(q, i - level)
        i += 1
    if not field.equal_char and char_is_trivial(field, chi) and p * field.e <= max_level:
        total += tres_term(field)
    return total


def per_character_contributions(
    field: LocalField, omega_coords: tuple[int, int] | None = None
) -> list[tuple[CharClass, Fraction]]:
    """Contribution of each of the (p-1)^2 characters, in coordinate order."""
    return [
        (chi, char_contribution(field, chi))
        for chi in enumerate_characters(field, omega_coords)
    ]


def total_mass(
    field: LocalField, with_counts: bool = False, max_level: int | None = None
) -> MassReport:
    """Full mass report; the ramified total is asserted to be exactly p."""
    p = field.p
    per_vbar = {w: char_contribution(field, generic_char(w)) for w in range(p - 1)}
    if field.equal_char:
        tres = Fraction(0)
    else:
        tres = tres_term(field)
    total = (p - 1) * sum(per_vbar.values()) + tres
    if total != p:
        raise MassInvariantError(f"ramified mass {total} != {p} for {field}")
    counts = count_table(field, max_level) if with_counts else None
    return MassReport(field, per_vbar, tres, total, counts)


def peu_tres_split(field: LocalField) -> tuple[Fraction, Fraction]:
    """Masses of the below-top and top-level strata; they sum to p."""
    if field.equal_char:
        raise ValueError("no très ramifiées stratum")
    tres = tres_term(field)
    return field.p - tres, tres


def count_extensions(field: LocalField, chi: CharClass, stratum) -> LevelCount:
    """Lines, extensions, and conjugacy classes ``chi`` contributes in one stratum.

    ``stratum`` is a stratum index, or the string ``"tres"`` for the
    top-level stratum of the trivial character in mixed characteristic.
    Every line is one conjugacy class; it accounts for one extension when
    ``chi`` is the cyclotomic character and for p conjugates otherwise.
    """
    validate_char(field, chi)
    p, f = field.p, field.f
    mult = 1 if char_is_omega(field, chi) else p
    bonus = 1 if char_is_omega(field, chi) else 0
    if stratum == "tres":
        if field.equal_char:
            raise ValueError("no très ramifiées stratum")
        if not char_is_trivial(field, chi):
            raise ValueError("top stratum exists only for the trivial character")
        prev_dim = field.e * f + bonus
        lines = (p ** (prev_dim + 1) - p**prev_dim) // (p - 1)
        return LevelCount(p * field.e, lines, lines * mult, lines)
    i = stratum
    if not isinstance(i, int) or i < 0:
        raise ValueError(f"invalid stratum {stratum!r}")
    level = stratum_level(field, chi, i)  # also rejects i >= e in mixed char
    lines = (p ** ((i + 1) * f + bonus) - p ** (i * f + bonus)) // (p - 1)
    return LevelCount(level, lines, lines * mult, lines)


def count_table(field: LocalField, max_level: int | None = None) -> dict[int, LevelCount]:
    """Aggregate counts per level, over all character classes.

    Includes the level-0 row for the unramified extension and, in mixed
    characteristic, the top-level row.  In equal characteristic the table is
    infinite, so ``max_level`` is required.  In mixed characteristic (p > 2)
    the cyclotomic character is taken distinct from the trivial one, the
    generic situation.
    """
    p, m = field.p, max(field.p - 1, 1)
    if field.equal_char:
        if max_level is None:
            raise ValueError("max_level required for an equal-characteristic field")
        bound = max_level
    else:
        top = p * field.e
        bound = top if max_level is None else min(max_level, top)

    table = {0: LevelCount(0, 1, 1, 1)}
    w_omega = cyclotomic_valuation(field)
    for level in range(1, bound + 1):
        if level % p == 0 or (not field.equal_char and level >= p * field.e):
            continue
        i = level // p
        w = (w_omega - level) % m
        recs = []
        if w == w_omega:
            if omega_is_trivial(field):
                recs.append(count_extensions(field, trivial_char(), i))
            else:
                recs.append(count_extensions(field, CharClass(w, OMEGA), i))
        n_generic = m - len(recs)
        if n_generic:
            rec_g = count_extensions(field, generic_char(w), i)
            recs.extend([rec_g] * n_generic)
        table[level] = LevelCount(
            level,
            sum(r.lines for r in recs),
            sum(r.extensions for r in recs),
            sum(r.conjugacy_classes for r in recs),
        )
    if not field.equal_char and p * field.e <= bound:
        table[p * field.e] = count_extensions(field, trivial_char(), "tres")
    return table


def mass_from_counts(field: LocalField, table: dict[int, LevelCount]) -> Fraction:
    """Rebuild the ramified mass from a full count table (level-0 row excluded)."""
    return sum(
        rec.extensions * rat_pow(field.q, -level)
        for level, rec in table.items()
        if level > 0
    )


def contribution_checksum(p: int, q: int) -> tuple[Fraction, Fraction]:
    """Both sides of the closed-form identity equivalent to total mass p.

    Summing the closed-form contribution over the ``p - 1`` valuation offsets
    in equal characteristic and equating the total with p reduces to one
    polynomial identity in q; this evaluates both sides exactly and raises if
    they differ (they never should).
    """
    if p < 3 or not is_prime(p):
        raise ValueError("defined for primes p >= 3")
    _require_power(q, p)
    m = p - 1
    lhs = sum(
        Fraction(
            (q ** ((p - 2) * a) - 1) * (q ** (m * m) - 1) + (q ** ((p - 2) * m) - 1),
            q ** (m * a),
        )
        for a in range(p - 1)
    )
    rhs = Fraction((q ** (p - 2) - 1) * (q ** (m * m) - 1), q ** (p - 2) * (q - 1))
    if lhs != rhs:
        raise MassInvariantError("contribution checksum failed")
    return lhs, rhs


# ---------------------------------------------------------------------------
# Galois-closure filters
# ---------------------------------------------------------------------------
#
# The closure group of a non-cyclic extension is the split extension of the
# image of omega*chi^{-1} by a group of order p, so a filter on the closure
# is a filter on the class xi = omega*chi^{-1} in (Z/(p-1))^2.  In mixed
# characteristic the full coordinates of the cyclotomic class depend on the
# field, not just on (p, f, e), so order and subfield filters require them.


def _pair_order(xi: tuple[int, int], m: int) -> int:
    ords = [m // math.gcd(c % m, m) if c % m else 1 for c in xi]
    return ords[0] * ords[1] // math.gcd(ords[0], ords[1])


def _omega_pair(
    field: LocalField, omega_coords: tuple[int, int] | None
) -> tuple[int, int]:
    m = max(field.p - 1, 1)
    if omega_is_trivial(field):
        if omega_coords is not None and (omega_coords[0] % m, omega_coords[1] % m) != (0, 0):
            raise ValueError("cyclotomic character is trivial for this field")
        return (0, 0)
    if omega_coords is None:
        raise ValueError("omega class required")
    om = (omega_coords[0] % m, omega_coords[1] % m)
    if om[0] != cyclotomic_valuation(field):
        raise ValueError("cyclotomic coordinates must have valuation e mod p-1")
    return om


def cyclic_contribution(
    field: LocalField, omega_coords: tuple[int, int] | None = None
) -> Fraction:
    """Mass of the cyclic degree-p extensions (character = cyclotomic)."""
    if omega_is_trivial(field):
        chi = trivial_char()
    elif omega_coords is not None and _omega_pair(field, omega_coords) == (0, 0):
        chi = trivial_char()
    else:
        chi = omega_char(field)
    return char_contribution(field, chi)


def unramified_closure_contribution(field: LocalField) -> Fraction:
    """Mass of the extensions split by some unramified extension.

    These are the characters whose valuation equals the cyclotomic one; there
    are p - 1 of them, the trivial character among them exactly when that
    valuation is 0.
    """
    w0 = cyclotomic_valuation(field)
    m = max(field.p - 1, 1)
    total = (m - (1 if w0 == 0 else 0)) * char_contribution(field, generic_char(w0))
    if w0 == 0:
        total += char_contribution(field, trivial_char())
    return total


def group_order_contribution(
    field: LocalField, n: int, omega_coords: tuple[int, int] | None = None
) -> Fraction:
    """Mass of the extensions whose closure group has tame part of order n.

    ``n`` must divide p - 1; n = 1 gives the cyclic extensions, n = 2 those
    with dihedral closure of order 2p.  Every extension is captured by
    exactly one n, so these contributions partition the total mass p.
    """
    m = max(field.p - 1, 1)
    if n < 1 or m % n != 0:
        raise ValueError("order must divide p - 1")
    om = _omega_pair(field, omega_coords)
    total = Fraction(0)
    for chi in enumerate_characters(field):
        a, b = chi.coords
        xi = ((om[0] - a) % m, (om[1] - b) % m)
        if _pair_order(xi, m) == n:
            total += char_contribution(field, chi)
    return total


def subfield_contribution(
    field: LocalField,
    subgroup_gens: list[tuple[int, int]],
    omega_coords: tuple[int, int] | None = None,
) -> Fraction:
    """Mass of the extensions split by the degree-(p-1)-type subfield of K
    dual to the subgroup generated by ``subgroup_gens`` in (Z/(p-1))^2.
    """
    m = max(field.p - 1, 1)
    om = _omega_pair(field, omega_coords)
    subgroup = {(0, 0)}
    frontier = [(a % m, b % m) for a, b in subgroup_gens]
    while frontier:
        g = frontier.pop()
        for s in list(subgroup):
            t = ((s[0] + g[0]) % m, (s[1] + g[1]) % m)
            if t not in subgroup:
                subgroup.add(t)
                frontier.append(t)
    total = Fraction(0)
    for chi in enumerate_characters(field):
        a, b = chi.coords
        xi = ((om[0] - a) % m, (om[1] - b) % m)
        if xi in subgroup:
            total += char_contribution(field, chi)
    return total


def galois_closure_contribution(
    field: LocalField, filter_spec, omega_coords: tuple[int, int] | None = None
) -> Fraction:
    """Dispatch on a filter spec: "cyclic", "unramified-closure",
    ("group_order", n) / "group-order=N", or ("subfield", gens)."""
    if filter_spec == "cyclic":
        return cyclic_contribution(field, omega_coords)
    if filter_spec in ("unramified_closure", "unramified-closure"):
        return unramified_closure_contribution(field)
    if isinstance(filter_spec, str) and filter_spec.startswith("group-order="):
        return group_order_contribution(field, int(filter_spec.split("=", 1)[1]), omega_coords)
    if isinstance(filter_spec, tuple) and len(filter_spec) == 2:
        kind, arg = filter_spec
        if kind == "group_order":
            return group_order_contribution(field, arg, omega_coords)
        if kind == "subfield":
            return subfield_contribution(field, arg, omega_coords)
    raise ValueError(f"unknown filter {filter_spec!r}")


def _require_power(q: int, p: int) -> None:
    if q < p:
        raise ValueError(f"q = {q} is not a power of {p}")
    while q % p == 0:
        q //= p
    if q != 1:
        raise ValueError("q must be a power of the residue characteristic")


def tame_mass(pprime: int, p: int, q: int) -> TameReport:
    """Mass report for degree-p' extensions, p' a prime different from p.

    The relevant module is two-dimensional, so the structure is decided by
    one divisibility: if p' divides q - 1 the p' ramified extensions are each
    their own conjugacy class; otherwise there is a single class of p'
    conjugates.  Either way every ramified extension is tame (c = 0) and the
    mass is exactly p'.
    """
    if not is_prime(pprime):
        raise ValueError(f"p' = {pprime} is not prime")
    if not is_prime(p):
        raise ValueError(f"p = {p} is not prime")
    if pprime == p:
        raise ValueError("use the wild-case operations")
    _require_power(q, p)
    deg = 1
    acc = q % pprime
    while acc != 1:
        acc = acc * q % pprime
        deg += 1
    trivial = (q - 1) % pprime == 0
    return TameReport(
        pprime=pprime,
        p=p,
        q=q,
        deg_kprime=deg,
        omega_trivial=trivial,
        ramified_count=pprime,
        conjugacy_classes=pprime if trivial else 1,
        mass=Fraction(pprime),
    )
