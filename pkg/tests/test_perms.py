import pytest

from hessflag.perms import (
    EnumerationCapError,
    HessenbergFunction,
    Permutation,
    all_permutations,
    enumerate_flags,
    enumerate_hess,
    flag_in_hess,
    hess_codim,
    hess_dim,
    parse_hessenberg,
    parse_permutation,
)


def P(text):
    return parse_permutation(text)


def H(text):
    return parse_hessenberg(text)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((1, 3))


def test_inverse():
    assert P("32154").inverse() == P("32154")  # an involution
    assert P("312654").inverse() == P("231654")
    w = P("2413")
    assert w.inverse().inverse() == w
    for i in range(1, 5):
        assert w.inverse_value(w(i)) == i


def test_sign():
    assert Permutation.identity(4).sign() == 1
    assert P("21").sign() == -1
    assert P("54321").sign() == 1  # 10 inversions
    assert P("4321").sign() == 1  # 6 inversions
    assert P("321").sign() == -1  # 3 inversions


def test_sign_matches_inversion_parity():
    for w in all_permutations(4):
        inversions = sum(
            1 for a in range(1, 5) for b in range(a + 1, 5) if w(a) > w(b)
        )
        assert w.sign() == (-1) ** inversions


def test_parse_format_roundtrip():
    assert str(P("32154")) == "32154"
    long = ",".join(str(v) for v in range(10, 0, -1))
    assert str(parse_permutation(long)) == long
    assert str(H("3,3,4,5,5")) == "3,3,4,5,5"
    with pytest.raises(ValueError):
        parse_permutation("3a1")


def test_hessenberg_validation():
    with pytest.raises(ValueError):
        HessenbergFunction((2, 1, 3))  # not weakly increasing
    with pytest.raises(ValueError):
        HessenbergFunction((0, 2, 3))  # below i
    with pytest.raises(ValueError):
        HessenbergFunction((2, 3, 5))  # above n
    assert not H("1,2,3").is_strict
    with pytest.raises(ValueError):
        H("1,2,3").require_strict()
    assert H("2,3,3").is_strict


def test_flag_in_hess_examples():
    assert flag_in_hess(P("32154"), H("3,3,4,5,5"))
    assert flag_in_hess(P("564321"), H("3,4,4,5,6,6"))
    assert flag_in_hess(Permutation.identity(5), H("2,3,4,5,5"))
    assert not flag_in_hess(P("45123"), H("2,3,4,5,5"))
    with pytest.raises(ValueError):
        flag_in_hess(P("321"), H("2,3,4,4"))


def test_longest_element_always_in_variety():
    for n in range(2, 8):
        w0 = Permutation.longest(n)
        for h in enumerate_hess(n):
            assert flag_in_hess(w0, h)


def test_dim_codim_examples():
    assert hess_dim(H("3,3,4,5,5")) == 5
    assert hess_codim(H("3,3,4,5,5")) == 5
    assert hess_codim(H("3,4,4,5,6,6")) == 8
    full = H("5,5,5,5,5")
    assert hess_dim(full) == 10 and hess_codim(full) == 0


def test_dim_plus_codim():
    for n in range(2, 8):
        for h in enumerate_hess(n):
            assert hess_dim(h) + hess_codim(h) == n * (n - 1) // 2


def test_enumerate_hess():
    assert [h.values for h in enumerate_hess(2)] == [(2, 2)]
    assert [h.values for h in enumerate_hess(3)] == [(2, 3, 3), (3, 3, 3)]
    got = [h.values for h in enumerate_hess(4)]
    assert set(got) == {
        (2, 3, 4, 4),
        (3, 3, 4, 4),
        (2, 4, 4, 4),
        (3, 4, 4, 4),
        (4, 4, 4, 4),
    }
    assert got == sorted(got)  # lexicographic


def test_enumerate_hess_relaxed():
    relaxed = enumerate_hess(3, relaxed=True)
    assert H("1,2,3").values in [h.values for h in relaxed]
    assert all(h.is_strict for h in enumerate_hess(3))


def test_enumerate_flags():
    n = 4
    full = HessenbergFunction((4, 4, 4, 4))
    assert len(enumerate_flags(full)) == 24
    flags = enumerate_flags(H("3,3,4,5,5"))
    assert P("32154") in flags
    assert P("41325") in flags
    words = [w.word for w in flags]
    assert words == sorted(words)
    for w in flags:
        assert flag_in_hess(w, H("3,3,4,5,5"))
    excluded = set(all_permutations(5)) - set(flags)
    for w in excluded:
        assert not flag_in_hess(w, H("3,3,4,5,5"))


def test_peterson_flag_count():
    # flags of the Peterson variety are the longest parabolic elements
    for n in range(2, 7):
        h = HessenbergFunction(tuple(min(i + 1, n) for i in range(1, n + 1)))
        assert len(enumerate_flags(h)) == 2 ** (n - 1)


def test_enumeration_cap(monkeypatch):
    monkeypatch.setenv("HESSFLAG_MAX_N", "4")
    with pytest.raises(EnumerationCapError):
        enumerate_hess(5)
    with pytest.raises(EnumerationCapError):
        all_permutations(5)
    assert enumerate_hess(4)
    monkeypatch.delenv("HESSFLAG_MAX_N")
    with pytest.raises(EnumerationCapError):
        all_permutations(11)
