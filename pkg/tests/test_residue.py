"""Unit tests for integer subrings, modulo reduction, fields and labelling."""

import logging
import random
from fractions import Fraction

import pytest

from cdalgebra import residue as resmod
from cdalgebra.algebra import make_algebra, Convention
from cdalgebra.residue import (UElement, decode_symbols,
                               encode_symbols, four_square_root, is_prime_u,
                               make_w, residue_field, round_coordinates,
                               round_half_away, u_mod)


@pytest.fixture(scope="module")
def golden_gen():
    return make_w(2, (1, 2, 3), (1, 1, 1, 1))


@pytest.fixture(scope="module")
def golden_field(golden_gen):
    return residue_field(golden_gen.element(-1, 2))


class TestRounding:
    def test_half_away_from_zero(self):
        assert round_half_away(Fraction(1, 2)) == 1
        assert round_half_away(Fraction(-1, 2)) == -1
        assert round_half_away(Fraction(3, 2)) == 2
        assert round_half_away(Fraction(2, 5)) == 0
        assert round_half_away(Fraction(-7, 5)) == -1
        assert round_half_away(Fraction(7)) == 7

    def test_elementwise_rounding(self):
        sig = make_algebra(2, (-1, -1), Convention.CONJUGATE_RIGHT)
        x = sig.element([Fraction(1, 2), Fraction(-1, 2), Fraction(2, 3), 1])
        assert round_coordinates(x).coeffs == (1, -1, 1, 1)


class TestMakeW:
    def test_golden_generator(self, golden_gen):
        assert golden_gen.q == 2
        assert golden_gen.m == 4
        w = golden_gen.w
        sig = w.signature
        assert (w * w - 2 * w + 4 * sig.one()).is_zero()

    def test_scalar_generator_still_quadratic(self):
        gen = make_w(2, (1, 2, 3), (1, 0, 0, 0))
        assert gen.q == 2 and gen.m == 1
        assert not gen.is_definite()

    def test_depth_three(self):
        gen = make_w(3, (1, 2, 4), (1, 1, 1, 1))
        assert gen.q == 2 and gen.m == 4

    def test_zero_norm_rejected(self):
        with pytest.raises(ValueError):
            make_w(2, (1, 2, 3), (0, 0, 0, 0))

    def test_bad_basis_choice(self):
        with pytest.raises(ValueError):
            make_w(2, (1, 1, 2), (1, 1, 1, 1))
        with pytest.raises(ValueError):
            make_w(2, (0, 1, 2), (1, 1, 1, 1))
        with pytest.raises(ValueError):
            make_w(2, (1, 2, 5), (1, 1, 1, 1))


class TestUElementArithmetic:
    def test_norm_values(self, golden_gen):
        assert golden_gen.element(-1, 2).norm() == 13
        assert golden_gen.element(-3, 1).norm() == 7
        assert golden_gen.element(1, 0).norm() == 1

    def test_conjugate(self, golden_gen):
        x = golden_gen.element(3, -5)
        conj = x.conjugate()
        assert (conj.a, conj.b) == (3 - 10, 5)
        assert x * conj == x.norm()

    def test_ring_laws(self, golden_gen):
        rng = random.Random(20)
        for _ in range(60):
            x = golden_gen.element(rng.randint(-9, 9), rng.randint(-9, 9))
            y = golden_gen.element(rng.randint(-9, 9), rng.randint(-9, 9))
            z = golden_gen.element(rng.randint(-9, 9), rng.randint(-9, 9))
            assert x * y == y * x
            assert (x * y) * z == x * (y * z)
            assert x * (y + z) == x * y + x * z

    def test_matches_ambient_algebra(self, golden_gen):
        rng = random.Random(21)
        for _ in range(40):
            x = golden_gen.element(rng.randint(-9, 9), rng.randint(-9, 9))
            y = golden_gen.element(rng.randint(-9, 9), rng.randint(-9, 9))
            assert (x * y).to_element() == x.to_element() * y.to_element()
            assert (x + y).to_element() == x.to_element() + y.to_element()
            assert x.norm() == x.to_element().norm()

    def test_mixed_generators_rejected(self, golden_gen):
        other = make_w(2, (1, 2, 3), (0, 1, 0, 0))
        with pytest.raises(ValueError):
            golden_gen.element(1, 0) + other.element(1, 0)

    def test_integer_coordinates_required(self, golden_gen):
        with pytest.raises(TypeError):
            UElement(Fraction(1, 2), 0, golden_gen)


class TestPrimality:
    def test_norm_thirteen_prime(self, golden_gen):
        assert is_prime_u(golden_gen.element(-1, 2))

    def test_norm_seven_prime(self, golden_gen):
        assert is_prime_u(golden_gen.element(1, 1))

    def test_composite_norm(self, golden_gen):
        assert not is_prime_u(golden_gen.element(2, 0))


class TestUMod:
    def test_golden_example_reduction(self, golden_gen):
        pi = golden_gen.element(-1, 2)
        v = u_mod(golden_gen.element(3, 2), pi)
        assert v == golden_gen.element(-3, 1)
        assert v.norm() == 7

    def test_self_reduction_is_zero(self, golden_gen):
        x = golden_gen.element(5, -3)
        assert u_mod(x, x).is_zero()

    def test_zero_modulus(self, golden_gen):
        with pytest.raises(ZeroDivisionError):
            u_mod(golden_gen.element(1, 0), golden_gen.element(0, 0))

    def test_strict_bound_on_euclidean_generators(self):
        rng = random.Random(22)
        gens = [make_w(2, (1, 2, 3), (0, 1, 0, 0)),
                make_w(2, (1, 2, 3), (1, 1, 0, 0)),
                make_w(3, (1, 2, 4), (1, 1, 1, 0))]
        for gen in gens:
            for _ in range(150):
                x = gen.element(rng.randint(-60, 60), rng.randint(-60, 60))
                y = gen.element(rng.randint(-25, 25), rng.randint(-25, 25))
                if y.is_zero():
                    continue
                assert u_mod(x, y).norm() < y.norm()

    def test_strict_bound_for_odd_norm_moduli(self, golden_gen):
        rng = random.Random(23)
        pi = golden_gen.element(-1, 2)
        for _ in range(200):
            x = golden_gen.element(rng.randint(-80, 80), rng.randint(-80, 80))
            assert u_mod(x, pi).norm() < 13

    def test_deep_hole_reaches_class_minimum(self, golden_gen, caplog):
        # The class of 40 - 25w modulo -2 + 3w has minimal norm exactly
        # equal to the modulus norm: the quotient sits on a lattice deep
        # hole, so no strictly smaller remainder exists.
        x = golden_gen.element(40, -25)
        y = golden_gen.element(-2, 3)
        with caplog.at_level(logging.DEBUG, logger="cdalgebra.residue"):
            v = u_mod(x, y)
        assert v.norm() == y.norm() == 28
        assert any("neighbor" in record.message for record in caplog.records)
        best = min((x - y.gen.element(za, zb) * y).norm()
                   for za in range(-10, 10) for zb in range(-10, 10))
        assert best == 28


class TestFourSquareRoot:
    def test_examples(self):
        assert four_square_root(4, (1, 2, 3), 2).coeffs == (0, 0, 0, 2)
        assert four_square_root(7, (1, 2, 3), 2).coeffs == (1, 1, 1, 2)
        z = four_square_root(1, (1, 2, 3), 2)
        assert z.coeffs == (0, 0, 0, 1)
        assert (z * z + z.signature.one()).is_zero()

    def test_roots_satisfy_quadratic(self):
        for t in (2, 3):
            for m in range(1, 51):
                z = four_square_root(m, (1, 2, 3), t)
                trace = 2 * z[0]
                assert (z * z - trace * z + m * z.signature.one()).is_zero()

    def test_custom_indices_at_depth_three(self):
        z = four_square_root(7, (2, 5, 6), 3)
        assert z[2] == 1 and z[5] == 1 and z[6] == 2

    def test_invalid_target(self):
        with pytest.raises(ValueError):
            four_square_root(0, (1, 2, 3), 2)


class TestResidueField:
    def test_golden_field_data(self, golden_field):
        assert golden_field.p == 13
        assert golden_field.s == 7
        expected = [(0, 0), (1, 0), (2, 0), (3, 0), (-3, 1), (-2, 1), (-1, 1),
                    (1, -1), (2, -1), (3, -1), (-3, 0), (-2, 0), (-1, 0)]
        assert [(u.a, u.b) for u in golden_field.reps] == expected

    def test_label_examples(self, golden_field, golden_gen):
        assert golden_field.label(golden_gen.element(-3, 1)) == 4
        assert golden_field.label(golden_gen.element(1, -1)) == 7
        assert golden_field.label(golden_gen.element(0, 0)) == 0
        assert golden_field.unlabel(9) == golden_gen.element(3, -1)
        assert golden_field.unlabel(12) == golden_gen.element(-1, 0)

    def test_unlabel_range(self, golden_field):
        with pytest.raises(ValueError):
            golden_field.unlabel(13)

    def test_labels_are_class_invariants(self, golden_field, golden_gen):
        rng = random.Random(24)
        pi = golden_gen.element(-1, 2)
        for _ in range(100):
            x = golden_gen.element(rng.randint(-40, 40), rng.randint(-40, 40))
            z = golden_gen.element(rng.randint(-10, 10), rng.randint(-10, 10))
            assert golden_field.label(x) == golden_field.label(x + z * pi)

    def test_homomorphism_on_reps(self, golden_field):
        p = golden_field.p
        pi = golden_field.pi
        for i in range(p):
            for j in range(p):
                s = u_mod(golden_field.reps[i] + golden_field.reps[j], pi)
                assert golden_field.label(s) == (i + j) % p
                m = u_mod(golden_field.reps[i] * golden_field.reps[j], pi)
                assert golden_field.label(m) == (i * j) % p

    def test_inverses_exist(self, golden_field):
        for i in range(1, golden_field.p):
            j = pow(i, -1, golden_field.p)
            prod = golden_field.reps[i] * golden_field.reps[j]
            assert golden_field.label(prod) == 1

    def test_norm_seven_field(self, golden_gen):
        field = residue_field(golden_gen.element(1, 1))
        assert field.p == 7
        assert len({(u.a, u.b) for u in field.reps}) == 7

    def test_depth_three_field_matches(self, golden_field):
        gen = make_w(3, (1, 2, 4), (1, 1, 1, 1))
        field = residue_field(gen.element(-1, 2))
        assert ([(u.a, u.b) for u in field.reps]
                == [(u.a, u.b) for u in golden_field.reps])

    def test_composite_modulus_rejected(self, golden_gen):
        with pytest.raises(ValueError):
            residue_field(golden_gen.element(2, 0))

    def test_indefinite_generator_rejected(self):
        gen = make_w(2, (1, 2, 3), (1, 0, 0, 0))
        candidate = gen.element(2, 1)
        with pytest.raises(ValueError):
            residue_field(candidate)

    def test_degenerate_congruence_guard(self, golden_gen, monkeypatch):
        # Unreachable through genuine norm-primes (p | b forces p*p | norm),
        # so force the primality gate open to exercise the guard.
        monkeypatch.setattr(resmod, "is_prime_u", lambda x: True)
        with pytest.raises(ValueError, match="degenerate"):
            residue_field(golden_gen.element(2, 0))

    def test_mismatched_subring_rejected(self, golden_field):
        other = make_w(2, (1, 2, 3), (0, 1, 0, 0))
        with pytest.raises(ValueError):
            golden_field.label(other.element(1, 0))


class TestCodec:
    def test_encode_examples(self, golden_field, golden_gen):
        assert encode_symbols([4, 7], golden_field) == [
            golden_gen.element(-3, 1), golden_gen.element(1, -1)]

    def test_round_trip(self, golden_field):
        rng = random.Random(25)
        ks = [rng.randrange(13) for _ in range(50)]
        assert decode_symbols(encode_symbols(ks, golden_field), golden_field) == ks

    def test_decode_ignores_multiples_of_the_prime(self, golden_field, golden_gen):
        rng = random.Random(26)
        pi = golden_gen.element(-1, 2)
        ks = [rng.randrange(13) for _ in range(50)]
        noisy = [golden_field.unlabel(k)
                 + golden_gen.element(rng.randint(-6, 6), rng.randint(-6, 6)) * pi
                 for k in ks]
        assert decode_symbols(noisy, golden_field) == ks

    def test_symbol_out_of_range(self, golden_field):
        with pytest.raises(ValueError):
            encode_symbols([13], golden_field)
