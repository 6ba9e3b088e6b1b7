from codeword_paradoxes.dyadic import Dyadic, ZERO, ONE, I_UNIT


def test_normalization_strips_common_twos():
    assert Dyadic(2, 0, 1) == Dyadic(1)
    assert Dyadic(4, 8, 2) == Dyadic(1, 2, 0)
    assert Dyadic(0, 0, 5) == ZERO
    # one odd component blocks reduction
    assert Dyadic(1, 2, 3).exp == 3


def test_negative_exponent_means_multiplication():
    assert Dyadic(1, 0, -2) == Dyadic(4)


def test_ring_operations():
    a = Dyadic(1, 0, 2)   # 1/4
    b = Dyadic(3, 0, 2)   # 3/4
    assert a + b == ONE
    assert b - a == Dyadic(1, 0, 1)
    assert a * Dyadic(4) == ONE
    assert -a == Dyadic(-1, 0, 2)
    assert (a + a + a + a) == ONE


def test_complex_arithmetic():
    z = Dyadic(1, 1)          # 1 + i
    assert z * z == Dyadic(0, 2)
    assert z.conj() == Dyadic(1, -1)
    assert z * z.conj() == Dyadic(2)
    assert I_UNIT * I_UNIT == Dyadic(-1)


def test_times_i_power_cycles():
    z = Dyadic(3, -5, 1)
    assert z.times_i_power(0) == z
    assert z.times_i_power(1) == z * I_UNIT
    assert z.times_i_power(2) == -z
    assert z.times_i_power(3) == z.conj().times_i_power(1).conj()
    assert z.times_i_power(4) == z


def test_as_pow2():
    assert Dyadic(1).as_pow2() == 0
    assert Dyadic(4).as_pow2() == 2
    assert Dyadic(1, 0, 3).as_pow2() == -3
    assert Dyadic(3).as_pow2() is None
    assert Dyadic(-4).as_pow2() is None
    assert Dyadic(1, 1).as_pow2() is None


def test_half_power():
    assert Dyadic(1).half_power(2) == Dyadic(1, 0, 2)
    assert Dyadic(1, 0, 2).half_power(-2) == ONE


def test_text_round_trip():
    samples = [
        Dyadic(0),
        Dyadic(1),
        Dyadic(-1, 0, 2),
        Dyadic(0, 1, 2),
        Dyadic(0, -3, 1),
        Dyadic(3, 1, 2),
        Dyadic(1, -1, 4),
        Dyadic(-5, -7, 3),
    ]
    for z in samples:
        assert Dyadic.parse(str(z)) == z, str(z)


def test_text_forms():
    assert str(Dyadic(-1, 0, 2)) == "-1/2^2"
    assert str(Dyadic(1, 1)) == "1 + 1 i"
    assert str(Dyadic(1, -1)) == "1 - 1 i"
    assert str(ZERO) == "0"
    assert Dyadic.parse("1/2^1 + 1/2^1 i") == Dyadic(1, 1, 1)


def test_hash_consistency():
    assert hash(Dyadic(2, 0, 1)) == hash(Dyadic(1))
    assert len({Dyadic(1), Dyadic(2, 0, 1), Dyadic(1, 0, 0)}) == 1
