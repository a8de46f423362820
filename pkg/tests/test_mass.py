"""Contributions, totals, counts, filters, checksum, and the tame case."""

from fractions import Fraction

import pytest

from localmass.mass import (
    MassInvariantError,
    char_contribution,
    char_contribution_closed,
    char_contribution_truncated,
    contribution_checksum,
    count_extensions,
    count_table,
    cyclic_contribution,
    galois_closure_contribution,
    group_order_contribution,
    mass_from_counts,
    per_character_contributions,
    peu_tres_split,
    subfield_contribution,
    tame_mass,
    total_mass,
    tres_term,
    unramified_closure_contribution,
)
from localmass.model import (
    INFINITE_E,
    LocalField,
    generic_char,
    omega_char,
    trivial_char,
)
from localmass.rationals import rat_pow

Q3 = LocalField(3, 1, 1)
F3_SERIES = LocalField(3, 1, INFINITE_E)


def test_equal_char_p3_contributions():
    for chi in (trivial_char(), generic_char(0)):
        assert char_contribution(F3_SERIES, chi) == Fraction(9, 20)
    assert char_contribution(F3_SERIES, generic_char(1)) == Fraction(21, 20)
    assert total_mass(F3_SERIES).total == 3


def test_equal_char_p3_closed_forms():
    # Offset 0 evaluates the displayed closed form to 144/320.
    assert char_contribution_closed(F3_SERIES, generic_char(0)) == Fraction(144, 320)
    assert Fraction(144, 320) == Fraction(9, 20)
    assert char_contribution_closed(F3_SERIES, generic_char(1)) == Fraction(21, 20)


@pytest.mark.parametrize("f", [1, 2])
def test_equal_char_p5_contribution_polynomials(f):
    # Per-class contribution 5(q-1)*C*A_w/4 with the four exponent lists.
    field = LocalField(5, f, INFINITE_E)
    q = field.q
    C = Fraction(q**16, q**16 - 1)
    exponents = {0: (4, 7, 10, 13), 3: (1, 8, 11, 14), 2: (2, 5, 12, 15), 1: (3, 6, 9, 16)}
    for w, exps in exponents.items():
        a_w = sum(rat_pow(q, -k) for k in exps)
        expected = Fraction(5 * (q - 1), 4) * C * a_w
        assert char_contribution(field, generic_char(w)) == expected
        assert char_contribution_closed(field, generic_char(w)) == expected


def test_q3_per_character_values():
    values = [v for _, v in per_character_contributions(Q3)]
    assert values == [Fraction(4, 3), Fraction(1), Fraction(1, 3), Fraction(1, 3)]
    assert sum(values) == 3
    # The cyclotomic class of Q_3 has valuation 1; its contribution is 1/3.
    assert char_contribution(Q3, omega_char(Q3)) == Fraction(1, 3)
    assert char_contribution_closed(Q3, omega_char(Q3)) == Fraction(1, 3)
    assert char_contribution_closed(Q3, trivial_char()) == Fraction(4, 3)


@pytest.mark.parametrize("f", [1, 2])
def test_mixed_char_p5_e5_contributions(f):
    field = LocalField(5, f, 5)
    q = field.q
    scale = Fraction(5 * (q - 1), 4)
    generic0 = scale * sum(rat_pow(q, -k) for k in (1, 8, 11, 14, 17))
    omega = scale * sum(rat_pow(q, -k) for k in (4, 7, 10, 13, 20))
    assert char_contribution(field, generic_char(0)) == generic0
    assert char_contribution(field, omega_char(field)) == omega
    assert char_contribution_closed(field, generic_char(0)) == generic0
    assert char_contribution_closed(field, omega_char(field)) == omega


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("f", [1, 2])
@pytest.mark.parametrize("e", [1, 2, 3, INFINITE_E])
def test_total_mass_grid(p, f, e):
    report = total_mass(LocalField(p, f, e))
    assert report.total == p
    assert report.grand_total == 1 + p


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("f", [1, 2])
@pytest.mark.parametrize("e", [1, 2, 3, INFINITE_E])
def test_two_path_equality_grid(p, f, e):
    field = LocalField(p, f, e)
    chars = [trivial_char()] + [generic_char(w) for w in range(p - 1)]
    if not (field.equal_char or p == 2):
        chars.append(omega_char(field))
    for chi in chars:
        assert char_contribution(field, chi) == char_contribution_closed(field, chi)


def test_per_character_sum_is_total():
    for field in (Q3, F3_SERIES, LocalField(5, 1, 2), LocalField(7, 2, INFINITE_E)):
        assert sum(v for _, v in per_character_contributions(field)) == field.p


def test_peu_tres_split():
    assert peu_tres_split(Q3) == (Fraction(8, 3), Fraction(1, 3))
    field = LocalField(3, 2, 2)
    assert peu_tres_split(field) == (3 * (1 - Fraction(9) ** -4), 3 * Fraction(9) ** -4)
    for p, f, e in [(2, 1, 1), (3, 1, 3), (5, 2, 2), (7, 1, 1)]:
        peu, tres = peu_tres_split(LocalField(p, f, e))
        assert peu + tres == p
    with pytest.raises(ValueError, match="très"):
        peu_tres_split(F3_SERIES)
    with pytest.raises(ValueError, match="très"):
        tres_term(F3_SERIES)


def test_count_extensions_examples():
    rec = count_extensions(Q3, omega_char(Q3), 0)
    assert (rec.level, rec.lines, rec.extensions, rec.conjugacy_classes) == (2, 3, 3, 3)
    rec = count_extensions(Q3, trivial_char(), "tres")
    assert (rec.level, rec.lines, rec.extensions) == (3, 3, 9)
    assert rec.extensions * rat_pow(3, -3) == Fraction(1, 3)
    rec = count_extensions(Q3, generic_char(0), 0)
    assert rec.extensions == rec.lines * 3
    assert rec.conjugacy_classes == rec.lines
    # p = 2: the single class is cyclotomic, multiplicity 1.
    k2 = LocalField(2, 1, 1)
    rec = count_extensions(k2, trivial_char(), 0)
    assert rec.extensions == rec.lines
    with pytest.raises(ValueError):
        count_extensions(Q3, generic_char(0), "tres")
    with pytest.raises(ValueError):
        count_extensions(F3_SERIES, trivial_char(), "tres")
    with pytest.raises(ValueError, match="ramification bound"):
        count_extensions(Q3, generic_char(0), 1)


def test_multiplicity_convention():
    # extensions = lines for the cyclotomic class, lines * p otherwise.
    for field in (Q3, LocalField(5, 1, 2), F3_SERIES, LocalField(7, 1, INFINITE_E)):
        strata = range(3) if field.equal_char else range(field.e)
        for i in strata:
            rec = count_extensions(field, omega_char(field), i)
            assert rec.extensions == rec.lines
            if field.p > 2:
                rec = count_extensions(field, generic_char(0), i)
                assert rec.extensions == rec.lines * field.p


@pytest.mark.parametrize(
    "field", [Q3, LocalField(3, 2, 2), LocalField(5, 1, 1), LocalField(2, 1, 2), LocalField(7, 1, 1)]
)
def test_mass_from_counts_mixed_char(field):
    table = count_table(field)
    assert mass_from_counts(field, table) == field.p
    for rec in table.values():
        assert rec.conjugacy_classes == rec.lines


def test_mass_from_counts_equal_char_truncation():
    bound = 11
    table = count_table(F3_SERIES, bound)
    total = sum(
        (3 - 1) * char_contribution_truncated(F3_SERIES, generic_char(w), bound)
        for w in range(2)
    )
    assert mass_from_counts(F3_SERIES, table) == total
    with pytest.raises(ValueError, match="max_level"):
        count_table(F3_SERIES)


@pytest.mark.parametrize("p", [3, 5, 7])
@pytest.mark.parametrize("power", [1, 2])
def test_contribution_checksum(p, power):
    q = p**power
    lhs, rhs = contribution_checksum(p, q)
    assert lhs == rhs
    with pytest.raises(ValueError):
        contribution_checksum(2, 2)


def test_checksum_value_p3():
    lhs, rhs = contribution_checksum(3, 3)
    assert lhs == Fraction(80, 3)


def test_cyclic_contribution():
    assert cyclic_contribution(F3_SERIES) == Fraction(9, 20)
    assert cyclic_contribution(Q3) == Fraction(1, 3)
    # If the cyclotomic class is the trivial one, cyclic extensions include
    # the top-level stratum.
    k = LocalField(3, 1, 2)
    assert cyclic_contribution(k, omega_coords=(0, 0)) == char_contribution(k, trivial_char())


def test_unramified_closure_contribution():
    assert unramified_closure_contribution(F3_SERIES) == Fraction(9, 10)
    # Displayed closed form: p*q^{p-2}(q-1)(q^{(p-2)(p-1)}-1) / ((q^{p-2}-1)(q^{(p-1)^2}-1)).
    p, q = 3, 3
    closed = Fraction(
        p * q ** (p - 2) * (q - 1) * (q ** ((p - 2) * (p - 1)) - 1),
        (q ** (p - 2) - 1) * (q ** ((p - 1) ** 2) - 1),
    )
    assert unramified_closure_contribution(F3_SERIES) == closed
    assert unramified_closure_contribution(Q3) == 2 * Fraction(1, 3)


def test_group_order_contributions_equal_char():
    # Dihedral slice at p = q = 3: the three order-2 classes.
    assert group_order_contribution(F3_SERIES, 2) == Fraction(51, 20)
    assert group_order_contribution(F3_SERIES, 1) == Fraction(9, 20)
    assert group_order_contribution(F3_SERIES, 1) + group_order_contribution(
        F3_SERIES, 2
    ) == 3
    with pytest.raises(ValueError, match="divide"):
        group_order_contribution(F3_SERIES, 4)


@pytest.mark.parametrize("p,f", [(3, 1), (3, 2), (5, 1), (5, 2)])
def test_group_order_partition_equal_char(p, f):
    field = LocalField(p, f, INFINITE_E)
    divisors = [n for n in range(1, p) if (p - 1) % n == 0]
    assert sum(group_order_contribution(field, n) for n in divisors) == p


def test_group_order_requires_omega_in_mixed_char():
    with pytest.raises(ValueError, match="omega class required"):
        group_order_contribution(Q3, 2)
    # With the class supplied, the partition over divisors is the total mass.
    divisors = [1, 2]
    assert sum(group_order_contribution(Q3, n, omega_coords=(1, 1)) for n in divisors) == 3


def test_subfield_contribution():
    # The full dual group captures everything; the trivial subgroup exactly
    # the cyclic extensions.
    assert subfield_contribution(F3_SERIES, [(1, 0), (0, 1)]) == 3
    assert subfield_contribution(F3_SERIES, []) == cyclic_contribution(F3_SERIES)
    assert subfield_contribution(Q3, [(1, 0), (0, 1)], omega_coords=(1, 0)) == 3


def test_galois_closure_dispatcher():
    assert galois_closure_contribution(F3_SERIES, "cyclic") == Fraction(9, 20)
    assert galois_closure_contribution(F3_SERIES, "unramified-closure") == Fraction(9, 10)
    assert galois_closure_contribution(F3_SERIES, "group-order=2") == Fraction(51, 20)
    assert galois_closure_contribution(F3_SERIES, ("group_order", 2)) == Fraction(51, 20)
    assert galois_closure_contribution(F3_SERIES, ("subfield", [(1, 1)])) == Fraction(
        9, 20
    ) + Fraction(21, 20)
    with pytest.raises(ValueError, match="unknown filter"):
        galois_closure_contribution(F3_SERIES, "everything")


def test_tame_mass_branches():
    rep = tame_mass(2, 3, 3)
    assert rep.omega_trivial and rep.deg_kprime == 1
    assert rep.ramified_count == 2 and rep.conjugacy_classes == 2
    assert rep.mass == 2 and rep.grand_total == 3

    rep = tame_mass(3, 5, 5)
    assert not rep.omega_trivial and rep.deg_kprime == 2
    assert rep.ramified_count == 3 and rep.conjugacy_classes == 1
    assert rep.mass == 3

    rep = tame_mass(5, 3, 81)
    assert rep.omega_trivial and rep.mass == 5

    with pytest.raises(ValueError, match="wild-case"):
        tame_mass(3, 3, 9)
    with pytest.raises(ValueError):
        tame_mass(4, 3, 3)
    with pytest.raises(ValueError):
        tame_mass(2, 3, 10)


def test_mass_report_serialization():
    obj = total_mass(F3_SERIES).to_json_obj()
    assert obj["per_vbar"] == {"0": "9/20", "1": "21/20"}
    assert obj["total_ramified"] == "3"
    assert obj["grand_total"] == "4"
    assert obj["tres_extra"] == "0"
    obj = total_mass(Q3, with_counts=True).to_json_obj()
    assert obj["tres_extra"] == "1/3"
    assert obj["counts"]["3"]["extensions"] == 9


def test_invariant_error_is_detectable():
    with pytest.raises(MassInvariantError):
        raise MassInvariantError("wired through the CLI as exit status 2")
