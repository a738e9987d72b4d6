"""Parser grammar, corpus integrity and variable permutation."""

from fractions import Fraction

import pytest

from primegb.corpus import (
    CORPUS_NAMES,
    builtin,
    corpus_checksums,
    first_appearance_order,
    load_manifest,
    parse_polynomial,
    parse_system,
    permute_vars,
)
from primegb.errors import (
    InvalidPermutation,
    ParseError,
    UnknownSystem,
    UnknownVariable,
)
from primegb.powerprods import VarTable

XYZT = VarTable("xyzt")


class TestParser:
    def test_two_term_line(self):
        terms = parse_polynomial("xyzt - 1", XYZT)
        assert terms == ((Fraction(1), (1, 1, 1, 1)), (Fraction(-1), (0, 0, 0, 0)))

    def test_fraction_coefficients(self):
        vt = VarTable("uvw")
        terms = parse_polynomial("-2/7uw^2 + 10/7vw^2", vt)
        assert terms == (
            (Fraction(-2, 7), (1, 0, 2)),
            (Fraction(10, 7), (0, 1, 2)),
        )

    def test_zero_exponent_is_constant(self):
        terms = parse_polynomial("x^0", XYZT)
        assert terms == ((Fraction(1), (0, 0, 0, 0)),)

    def test_zero_coefficient_term_dropped(self):
        terms = parse_polynomial("tu - 5tv + 0tw", VarTable("tuvw"))
        assert len(terms) == 2

    def test_multi_digit_exponent(self):
        terms = parse_polynomial("x^31 - x^6", XYZT)
        assert terms[0][1] == (31, 0, 0, 0)

    def test_repeated_variable_factors_accumulate(self):
        terms = parse_polynomial("3c^2a^2c", VarTable("cab"))
        assert terms == ((Fraction(3), (3, 2, 0)),)

    def test_whitespace_insignificant(self):
        a = parse_polynomial("2 x ^ 2 y - 1 / 2", VarTable("xy"))
        b = parse_polynomial("2x^2y - 1/2", VarTable("xy"))
        assert a == b

    def test_unknown_variable_with_position(self):
        with pytest.raises(UnknownVariable) as exc:
            parse_polynomial("xq", XYZT)
        assert exc.value.line == 1 and exc.value.column == 2

    def test_parse_errors(self):
        for bad in ["x +", "^2", "x^", "1/0x", "x 2", "* x"]:
            with pytest.raises(ParseError):
                parse_polynomial(bad, XYZT)

    def test_single_sign_per_term(self):
        with pytest.raises(ParseError):
            parse_polynomial("x + - 1", XYZT)

    def test_vanishing_polynomial_rejected(self):
        with pytest.raises(ParseError):
            parse_polynomial("x - x", XYZT)


class TestParseSystem:
    TEXT = """# comment line
x + y

# another comment
xy - 1
"""

    def test_comments_and_blanks_ignored(self):
        system = parse_system(self.TEXT, "xy", name="toy")
        assert len(system.polynomials) == 2
        assert system.name == "toy"

    def test_round_trip(self):
        system = parse_system(self.TEXT, "xy")
        again = parse_system(system.render(), "xy")
        assert again.polynomials == system.polynomials

    def test_empty_input_rejected(self):
        with pytest.raises(ParseError):
            parse_system("# nothing here", "xy")

    def test_first_appearance_order(self):
        assert first_appearance_order(self.TEXT) == "xy"
        assert first_appearance_order("c^4 - 6ac^3\nb^2") == "cab"


# hand-derived from the published polynomial sets: polynomial count and the
# number of stored terms per polynomial (one zero-coefficient term in the
# second gerdt-1 polynomial parses away)
EXPECTED_SHAPE = {
    "example-1": [5, 6, 3, 12, 4],
    "example-2": [5, 6, 3, 12],
    "example-3": [5, 3, 12, 4],
    "cyclic-4": [4, 4, 4, 2],
    "cyclic-5": [5, 5, 5, 5, 2],
    "gerdt-1": [3, 5, 6, 7, 5, 18, 13, 7, 5, 9, 10, 7, 8, 3],
    "gerdt-2": [8, 9],
    "gerdt-3": [8, 16, 14, 10],
    "arnborg-lazard": [7, 7, 7],
    "parametric-curve": [4, 2, 2],
    "katsura-4": [6, 5, 5, 4, 6],
    "arnold-1": [4, 4, 4, 3],
    "arnold-2": [6, 6, 6, 8],
}


class TestBuiltinCorpus:
    def test_names(self):
        assert set(CORPUS_NAMES) == set(EXPECTED_SHAPE)
        assert len(CORPUS_NAMES) == 13

    @pytest.mark.parametrize("name", sorted(EXPECTED_SHAPE))
    def test_shapes(self, name):
        system = builtin(name)
        assert system.term_counts() == EXPECTED_SHAPE[name], name

    def test_unknown_system(self):
        with pytest.raises(UnknownSystem):
            builtin("cyclic-17")

    def test_checksum_manifest(self):
        assert corpus_checksums() == load_manifest()

    def test_corpus_round_trips(self):
        for name in CORPUS_NAMES:
            system = builtin(name)
            again = parse_system(system.render(), system.vartable)
            assert again.polynomials == system.polynomials

    def test_parametric_curve_keeps_x_on_two(self):
        system = builtin("parametric-curve")
        assert system.vartable.names[0] == "x"
        assert system.vartable.primes[0] == 2


class TestPermuteVars:
    def test_identity(self):
        system = builtin("cyclic-4")
        assert permute_vars(system, "xyzt").polynomials == system.polynomials

    def test_round_trip_through_inverse(self):
        system = builtin("example-2")
        once = permute_vars(system, "cab")
        back = permute_vars(once, "abc")
        assert back.polynomials == system.polynomials
        assert back.vartable == system.vartable

    def test_abstract_polynomials_preserved(self):
        system = builtin("gerdt-2")
        shuffled = permute_vars(system, "zyxut")
        assert shuffled.same_polynomials(system)
        assert shuffled.vartable.order_label == "zyxut"

    def test_invalid_permutations(self):
        system = builtin("cyclic-4")
        with pytest.raises(InvalidPermutation):
            permute_vars(system, "xyz")
        with pytest.raises(InvalidPermutation):
            permute_vars(system, "xyzq")
