"""Power products: the three representations agree with the exponent-vector
reference, the orderings are admissible, and the 64-bit image cap bites
exactly where it should."""

import itertools

import pytest

from primegb.errors import ImageOverflow, InvalidPermutation, NotDivisible
from primegb.powerprods import (
    Ordering,
    PowerProduct,
    Rep,
    VarTable,
    compare,
    make_comparator,
    make_ops,
    make_sort_key,
    natural_rep,
    prime_image,
)

XYZ = VarTable("xyz")
ALL_REPS = [Rep.STRING, Rep.VECTOR, Rep.PRIME]
ALL_ORDERINGS = [Ordering.TOTAL_DEGREE, Ordering.PRIME_BASED, Ordering.LEX]


def pp(exps, rep=Rep.VECTOR, vt=XYZ):
    return PowerProduct.from_exponents(vt, exps, rep)


# -- enumeration used for exhaustive properties: 3 variables, exponents <= 3
ENUM = [
    exps for exps in itertools.product(range(4), repeat=3)
]


class TestVarTable:
    def test_primes_assigned_in_order(self):
        vt = VarTable("xyz")
        assert vt.primes == (2, 3, 5)
        assert vt.index("z") == 2

    def test_rejects_duplicates_and_long_names(self):
        with pytest.raises(ValueError):
            VarTable("xx")
        with pytest.raises(ValueError):
            VarTable(["ab"])

    def test_permuted(self):
        vt = VarTable("acb")
        assert vt.permuted("bca").names == ("b", "c", "a")
        with pytest.raises(InvalidPermutation):
            vt.permuted("abq")
        with pytest.raises(InvalidPermutation):
            vt.permuted("ab")

    def test_order_label(self):
        assert VarTable("acb").order_label == "acb"


class TestPrimeImage:
    def test_reference_value(self):
        # x^3 y^2 z on primes 2,3,5 -> 2^3 * 3^2 * 5 = 360
        assert prime_image(pp((3, 2, 1))) == 360
        assert prime_image(pp((3, 2, 1), Rep.STRING)) == 360
        assert pp((3, 2, 1), Rep.PRIME).raw == 360

    def test_empty_product(self):
        assert prime_image(pp((0, 0, 0))) == 1
        assert pp((0, 0, 0), Rep.PRIME).raw == 1

    def test_x31_overflows_on_third_prime(self):
        # 5^31 needs 72 bits and must not silently fit.
        vt = VarTable("yzx")
        with pytest.raises(ImageOverflow):
            PowerProduct.from_exponents(vt, (0, 0, 31), Rep.PRIME)
        with pytest.raises(ImageOverflow):
            prime_image(PowerProduct.from_exponents(vt, (0, 0, 31), Rep.VECTOR))

    def test_x31_fits_on_first_prime(self):
        assert prime_image(pp((31, 0, 0))) == 2**31


class TestMul:
    def test_image_multiplication(self):
        # x^3y^2z * xyz: 360 * 30 = 10800
        a = pp((3, 2, 1), Rep.PRIME)
        b = pp((1, 1, 1), Rep.PRIME)
        assert a.mul(b).raw == 10800

    def test_string_merge(self):
        vt = VarTable("abc")
        a = PowerProduct.from_exponents(vt, (3, 2, 1), Rep.STRING)
        b = PowerProduct.from_exponents(vt, (1, 1, 1), Rep.STRING)
        assert a.raw == "aaabbc"
        assert a.mul(b).raw == "aaaabbbcc"

    def test_identity(self):
        for rep in ALL_REPS:
            t = pp((2, 0, 3), rep)
            one = PowerProduct.identity(XYZ, rep)
            assert t.mul(one) == t

    def test_prime_mul_overflow(self):
        t = pp((62, 0, 0), Rep.PRIME)
        with pytest.raises(ImageOverflow):
            t.mul(pp((2, 0, 0), Rep.PRIME))


class TestDivideOps:
    def test_divides_reference(self):
        # xy | x^2y^3 (6 | 108), x^2 does not divide xy (4 does not divide 6)
        assert pp((1, 1, 0)).divides(pp((2, 3, 0)))
        assert pp((1, 1, 0), Rep.PRIME).divides(pp((2, 3, 0), Rep.PRIME))
        assert not pp((2, 0, 0)).divides(pp((1, 1, 0)))
        assert not pp((2, 0, 0), Rep.PRIME).divides(pp((1, 1, 0), Rep.PRIME))

    def test_one_divides_everything(self):
        for rep in ALL_REPS:
            one = PowerProduct.identity(XYZ, rep)
            assert one.divides(pp((3, 1, 2), rep))

    def test_div(self):
        # x^2y^3 / xy = xy^2 (108 / 6 = 18)
        q = pp((2, 3, 0)).div(pp((1, 1, 0)))
        assert q.exponents() == (1, 2, 0)
        assert pp((2, 3, 0), Rep.PRIME).div(pp((1, 1, 0), Rep.PRIME)).raw == 18

    def test_div_self_is_one(self):
        for rep in ALL_REPS:
            t = pp((2, 1, 2), rep)
            assert t.div(t).is_identity()

    def test_not_divisible(self):
        for rep in ALL_REPS:
            with pytest.raises(NotDivisible):
                pp((1, 1, 0), rep).div(pp((2, 0, 0), rep))


class TestLcmGcd:
    def test_reference_values(self):
        # lcm(x^2y, yz) = x^2yz (lcm(12,15) = 60); gcd = y (gcd(12,15) = 3)
        a, b = pp((2, 1, 0)), pp((0, 1, 1))
        assert a.lcm(b).exponents() == (2, 1, 1)
        assert a.gcd(b).exponents() == (0, 1, 0)
        ap, bp = pp((2, 1, 0), Rep.PRIME), pp((0, 1, 1), Rep.PRIME)
        assert (ap.raw, bp.raw) == (12, 15)
        assert ap.lcm(bp).raw == 60
        assert ap.gcd(bp).raw == 3

    def test_with_identity(self):
        for rep in ALL_REPS:
            t = pp((1, 2, 0), rep)
            one = PowerProduct.identity(XYZ, rep)
            assert t.lcm(one) == t
            assert t.gcd(one).is_identity()

    def test_lcm_overflow_prime_only(self):
        a = pp((62, 0, 0), Rep.PRIME)
        b = pp((0, 40, 0), Rep.PRIME)  # 3^40 still fits; the lcm cannot
        with pytest.raises(ImageOverflow):
            a.lcm(b)
        # same abstract lcm is fine as a vector
        assert pp((62, 0, 0)).lcm(pp((0, 40, 0))).exponents() == (62, 40, 0)


class TestCompare:
    def test_prime_order_witnesses(self):
        # x^3 (8) < y^2 (9) but total degree says x^3 > y^2;
        # x^3 (8) > xy (6) but lex says x^3 < x y only in the other sense.
        x3, y2, xy = pp((3, 0, 0)), pp((0, 2, 0)), pp((1, 1, 0))
        assert compare(x3, y2, Ordering.PRIME_BASED) == -1
        assert compare(x3, y2, Ordering.TOTAL_DEGREE) == 1
        assert compare(x3, xy, Ordering.PRIME_BASED) == 1

    def test_deglex_tie_break_first_name_most_significant(self):
        a, b = pp((2, 1, 0)), pp((1, 2, 0))
        assert compare(a, b, Ordering.TOTAL_DEGREE) == 1

    def test_lex(self):
        assert compare(pp((1, 0, 0)), pp((0, 9, 9)), Ordering.LEX) == 1

    def test_equal(self):
        for rep in ALL_REPS:
            for o in ALL_ORDERINGS:
                assert compare(pp((1, 2, 1), rep), pp((1, 2, 1), rep), o) == 0

    def test_representations_agree_on_order(self):
        cases = [((3, 0, 0), (0, 2, 0)), ((1, 1, 1), (2, 1, 0)), ((0, 0, 2), (1, 1, 0))]
        for ea, eb in cases:
            for o in ALL_ORDERINGS:
                expected = compare(pp(ea), pp(eb), o)
                for rep in (Rep.STRING, Rep.PRIME):
                    assert compare(pp(ea, rep), pp(eb, rep), o) == expected


class TestTotalDegree:
    def test_values(self):
        assert pp((3, 2, 1)).total_degree() == 6
        assert pp((0, 0, 0), Rep.PRIME).total_degree() == 0
        assert pp((3, 2, 1), Rep.STRING).total_degree() == 6

    def test_by_trial_division(self):
        # image 10800 factors as 2^4 3^3 5^2, total degree 9
        t = PowerProduct(make_ops(XYZ, Rep.PRIME), 10800)
        assert t.total_degree() == 9
        assert t.exponents() == (4, 3, 2)


class TestConvert:
    def test_round_trip_reference(self):
        vt = VarTable("abc")
        s = PowerProduct.from_exponents(vt, (3, 2, 1), Rep.STRING)
        assert s.raw == "aaabbc"
        v = s.convert(Rep.VECTOR)
        assert v.raw == (3, 2, 1)
        p = v.convert(Rep.PRIME)
        assert p.raw == 360
        assert p.convert(Rep.STRING) == s

    def test_identity_conversion(self):
        t = pp((1, 2, 0), Rep.PRIME)
        assert t.convert(Rep.PRIME) is t

    def test_conversion_overflow(self):
        vt = VarTable("yzx")
        v = PowerProduct.from_exponents(vt, (0, 0, 31), Rep.VECTOR)
        with pytest.raises(ImageOverflow):
            v.convert(Rep.PRIME)

    def test_round_trip_over_enumeration(self):
        for exps in ENUM:
            for rep in ALL_REPS:
                t = pp(exps, rep)
                assert t.exponents() == exps
                for rep2 in ALL_REPS:
                    assert t.convert(rep2).exponents() == exps


class TestAdmissibility:
    """Exhaustive checks of the two order axioms on the enumeration."""

    @pytest.mark.parametrize("ordering", ALL_ORDERINGS)
    def test_one_is_minimal(self, ordering):
        one = pp((0, 0, 0))
        for exps in ENUM:
            if exps == (0, 0, 0):
                continue
            assert compare(one, pp(exps), ordering) == -1

    @pytest.mark.parametrize("ordering", ALL_ORDERINGS)
    def test_compatible_with_multiplication(self, ordering):
        ops = make_ops(XYZ, Rep.VECTOR)
        cmp = make_comparator(ops, ordering)
        pairs = [(s, t) for s in ENUM for t in ENUM if cmp(s, t) < 0]
        for u in ENUM:
            for s, t in pairs:
                assert cmp(ops.mul(s, u), ops.mul(t, u)) < 0

    @pytest.mark.parametrize("ordering", ALL_ORDERINGS)
    def test_total_order(self, ordering):
        cmp = make_comparator(make_ops(XYZ, Rep.VECTOR), ordering)
        for s in ENUM:
            for t in ENUM:
                d = cmp(s, t)
                assert d == -cmp(t, s)
                assert (d == 0) == (s == t)


class TestRepresentationAgreement:
    """Every operation matches the exponent-vector oracle on the enumeration."""

    @pytest.mark.parametrize("rep", [Rep.STRING, Rep.PRIME])
    def test_against_vector_oracle(self, rep):
        oracle = make_ops(XYZ, Rep.VECTOR)
        ops = make_ops(XYZ, rep)
        enc = ops.from_exponents
        dec = ops.exponents
        for ea in ENUM:
            a, oa = enc(ea), ea
            assert ops.total_degree(a) == oracle.total_degree(oa)
            for eb in ENUM:
                b, ob = enc(eb), eb
                assert dec(ops.mul(a, b)) == oracle.mul(oa, ob)
                assert ops.divides(a, b) == oracle.divides(oa, ob)
                assert dec(ops.lcm(a, b)) == oracle.lcm(oa, ob)
                assert dec(ops.gcd(a, b)) == oracle.gcd(oa, ob)
                assert ops.coprime(a, b) == oracle.coprime(oa, ob)
                if oracle.divides(ob, oa):
                    assert dec(ops.div(a, b)) == oracle.div(oa, ob)

    def test_image_multiplicativity(self):
        ops = make_ops(XYZ, Rep.PRIME)
        for ea in ENUM:
            for eb in ENUM:
                a, b = ops.from_exponents(ea), ops.from_exponents(eb)
                assert ops.mul(a, b) == a * b  # image of product = product of images

    def test_gcd_lcm_duality(self):
        ops = make_ops(XYZ, Rep.PRIME)
        for ea in ENUM:
            for eb in ENUM:
                a, b = ops.from_exponents(ea), ops.from_exponents(eb)
                assert ops.gcd(a, b) * ops.lcm(a, b) == a * b


class TestSortKey:
    @pytest.mark.parametrize("rep", ALL_REPS)
    @pytest.mark.parametrize("ordering", ALL_ORDERINGS)
    def test_key_agrees_with_comparator(self, rep, ordering):
        ops = make_ops(XYZ, rep)
        cmp = make_comparator(ops, ordering)
        key = make_sort_key(ops, ordering)
        values = [ops.from_exponents(e) for e in ENUM]
        by_cmp = sorted(values, key=lambda v: key(v))
        for a, b in zip(by_cmp, by_cmp[1:]):
            assert cmp(a, b) < 0


def test_natural_rep_pairing():
    assert natural_rep(Ordering.PRIME_BASED) is Rep.PRIME
    assert natural_rep(Ordering.TOTAL_DEGREE) is Rep.STRING
    assert natural_rep(Ordering.LEX) is Rep.VECTOR


def test_rendering():
    assert str(pp((1, 0, 31))) == "xz^31"
    assert str(pp((0, 0, 0))) == "1"
    assert str(pp((2, 1, 0), Rep.PRIME)) == "x^2y"
