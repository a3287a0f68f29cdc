import random

import pytest

from fqforge.core.field import (
    FieldElement,
    FieldSpec,
    add,
    default_modulus,
    enumerate_field,
    inv,
    is_irreducible,
    mul,
    power,
    prime_power,
)
from fqforge.errors import (
    CapacityError,
    FieldDivisionError,
    FieldMismatchError,
    FqForgeError,
    InvalidFieldError,
)


class TestFieldArithmetic:
    """有限域算术测试套件"""

    @pytest.fixture(scope="class")
    def f2(self):
        return FieldSpec(2)

    @pytest.fixture(scope="class")
    def f3(self):
        return FieldSpec(3)

    @pytest.fixture(scope="class")
    def f4(self):
        return FieldSpec.of_order(4)

    @pytest.fixture(scope="class")
    def f5(self):
        return FieldSpec(5)

    def test_prime_field_examples(self, f2, f3, f5):
        assert add(f2.one, f2.one) == f2.zero
        assert add(f3.from_int(2), f3.from_int(2)) == f3.one
        assert mul(f2.one, f2.one) == f2.one
        assert mul(f5.from_int(2), f5.from_int(3)) == f5.one
        assert inv(f5.from_int(2)) == f5.from_int(3)
        assert inv(f2.one) == f2.one
        assert power(f3.from_int(2), 2) == f3.one
        assert power(f2.zero, 0) == f2.one

    def test_extension_field_examples(self, f4):
        t = f4.generator
        assert f4.modulus == (1, 1, 1)
        assert t + (t + 1) == f4.one
        assert t * (t + 1) == f4.one
        assert inv(t) == t + 1
        assert power(t, 4) == t

    @pytest.mark.parametrize(
        "q,expected",
        [
            (2, ["0", "1"]),
            (3, ["0", "1", "2"]),
            (4, ["0", "1", "t", "t+1"]),
        ],
    )
    def test_enumeration_order(self, q, expected):
        assert [e.to_text() for e in enumerate_field(FieldSpec.of_order(q))] == expected

    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
    def test_field_axioms(self, q):
        spec = FieldSpec.of_order(q)
        elements = spec.enumerate()
        for a in elements:
            assert a + (-a) == spec.zero
            assert a**q == a
            if not a.is_zero():
                assert a * a.inverse() == spec.one
                assert a ** (q - 1) == spec.one

    @pytest.mark.parametrize("q", [4, 9, 16])
    def test_distributivity_exhaustive(self, q):
        spec = FieldSpec.of_order(q)
        elements = spec.enumerate()
        for a in elements:
            for b in elements:
                assert a * b == b * a
                for c in (spec.one, spec.generator):
                    assert a * (b + c) == a * b + a * c

    def test_negative_power_is_inverse_power(self, f5):
        assert f5.from_int(2) ** -1 == f5.from_int(3)
        assert f5.from_int(2) ** -2 == f5.from_int(3) ** 2

    def test_int_coercion(self, f3):
        assert f3.from_int(2) + 1 == f3.zero
        assert 1 - f3.one == f3.zero
        assert 2 * f3.from_int(2) == f3.one

    def test_division_by_zero(self, f5):
        with pytest.raises(FieldDivisionError):
            f5.zero.inverse()
        with pytest.raises(ZeroDivisionError):
            f5.one / f5.zero

    def test_spec_mismatch(self, f2, f3):
        with pytest.raises(FieldMismatchError):
            f2.one + f3.one

    def test_random_element_is_deterministic(self, f4):
        first = [f4.random_element(random.Random(7)) for _ in range(5)]
        second = [f4.random_element(random.Random(7)) for _ in range(5)]
        assert first == second


class TestFieldSpec:
    """域描述与模多项式测试"""

    @pytest.mark.parametrize(
        "q,p,k",
        [(2, 2, 1), (4, 2, 2), (8, 2, 3), (9, 3, 2), (25, 5, 2), (7, 7, 1)],
    )
    def test_prime_power(self, q, p, k):
        assert prime_power(q) == (p, k)

    @pytest.mark.parametrize("q", [0, 1, 6, 12, 100])
    def test_non_prime_power_rejected(self, q):
        with pytest.raises(InvalidFieldError):
            FieldSpec.of_order(q)

    def test_non_prime_characteristic(self):
        with pytest.raises(InvalidFieldError):
            FieldSpec(4)

    def test_extension_degree_bounds(self):
        with pytest.raises(InvalidFieldError):
            FieldSpec(2, 9)
        with pytest.raises(InvalidFieldError):
            FieldSpec(2, 0)

    def test_order_cap(self):
        with pytest.raises(CapacityError):
            FieldSpec.of_order(1 << 17)

    def test_reducible_modulus_rejected(self):
        with pytest.raises(InvalidFieldError):
            FieldSpec(2, 2, (1, 0, 1))

    def test_non_monic_modulus_rejected(self):
        with pytest.raises(InvalidFieldError):
            FieldSpec(3, 2, (1, 0, 2))

    @pytest.mark.parametrize(
        "p,k,expected",
        [(2, 2, (1, 1, 1)), (2, 3, (1, 0, 1, 1)), (3, 2, (1, 0, 1)), (5, 1, (0, 1))],
    )
    def test_default_modulus(self, p, k, expected):
        assert default_modulus(p, k) == expected
        assert is_irreducible(p, expected)

    def test_descriptor(self):
        assert FieldSpec.of_order(4).descriptor() == "GF(4)"
        assert FieldSpec(2, 3, (1, 1, 0, 1)).descriptor() == "GF(8; modulus=t^3+t+1)"

    def test_errors_are_fqforge_errors(self):
        with pytest.raises(FqForgeError):
            FieldSpec(6)

    def test_element_serialization(self):
        spec = FieldSpec.of_order(9)
        element = spec.from_coeffs([2, 1])
        assert element.to_json() == [2, 1]
        assert element.to_text() == "t+2"
        assert FieldElement(spec, element.code) == element


class TestFieldAgainstGalois:
    """与 galois 库的独立算术交叉检查"""

    @pytest.fixture(scope="class")
    def galois(self):
        return pytest.importorskip("galois")

    @pytest.mark.parametrize("q", [4, 8, 9, 16, 25, 27])
    def test_multiplication_table(self, galois, q):
        spec = FieldSpec.of_order(q)
        prime_field = galois.GF(spec.p)
        modulus = galois.Poly(list(reversed(spec.modulus)), field=prime_field)
        reference = galois.GF(q, irreducible_poly=modulus)
        for a in range(q):
            for b in range(q):
                assert spec.mul_codes(a, b) == int(reference(a) * reference(b))
                assert spec.add_codes(a, b) == int(reference(a) + reference(b))

    @pytest.mark.parametrize("p,k", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (5, 2), (7, 2)])
    def test_default_modulus_irreducible(self, galois, p, k):
        modulus = galois.Poly(list(reversed(default_modulus(p, k))), field=galois.GF(p))
        assert modulus.is_irreducible()
