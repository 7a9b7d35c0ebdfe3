"""Kernel values by three routes, the write-once cache, persistence."""

import threading
import warnings
from fractions import Fraction

import pytest

from bekernels.kernels import (
    BRUTE_FORCE_SOFT_LIMIT,
    KernelCache,
    KernelKind,
    kernel_compositions,
    kernel_determinant,
    kernel_recursive,
    read_cache_file,
    write_cache_file,
)
import bekernels.kernels as kernels_module

B = KernelKind.BERNOULLI
E = KernelKind.EULER

# Snapshot of the first Bernoulli-kind values; every route must hit these.
KB_TABLE = [
    Fraction(-1, 6),
    Fraction(7, 360),
    Fraction(-31, 15120),
    Fraction(127, 604800),
    Fraction(-73, 3421440),
    Fraction(1414477, 653837184000),
]


def test_weight_denominators():
    assert B.weight_denominator(1) == 6
    assert E.weight_denominator(1) == 2
    assert B.weight(2) == Fraction(1, 120)
    assert E.weight(2) == Fraction(1, 24)
    with pytest.raises(ValueError):
        B.weight_denominator(0)


def test_recursive_known_values():
    assert kernel_recursive(B, 0) == 1
    assert kernel_recursive(B, 2) == Fraction(7, 360)
    assert kernel_recursive(B, 6) == Fraction(1414477, 653837184000)
    assert kernel_recursive(E, 1) == Fraction(-1, 2)
    assert kernel_recursive(E, 2) == Fraction(5, 24)
    assert [kernel_recursive(B, n) for n in range(1, 7)] == KB_TABLE


def test_compositions_known_values():
    assert kernel_compositions(B, 1) == Fraction(-1, 6)
    assert kernel_compositions(B, 3) == Fraction(-31, 15120)
    assert kernel_compositions(E, 3) == Fraction(-61, 720)


def test_determinant_known_values():
    assert kernel_determinant(E, 1) == Fraction(-1, 2)
    assert kernel_determinant(E, 2) == Fraction(5, 24)  # 1/4 - 1/24
    assert kernel_determinant(B, 4) == Fraction(127, 604800)


@pytest.mark.parametrize("kind", [B, E])
def test_three_way_agreement(kind):
    cache = KernelCache(kind)
    for n in range(1, 15):
        recursive = kernel_recursive(kind, n, cache)
        assert recursive == kernel_compositions(kind, n), n
        assert recursive == kernel_determinant(kind, n), n


@pytest.mark.parametrize("kind", [B, E])
def test_recursion_vs_determinant_deep(kind):
    cache = KernelCache(kind)
    for n in range(15, 61):
        assert kernel_recursive(kind, n, cache) == kernel_determinant(kind, n), n


@pytest.mark.parametrize("kind", [B, E])
def test_sign_alternation(kind):
    cache = KernelCache(kind)
    for n in range(1, 31):
        value = kernel_recursive(kind, n, cache)
        assert (value > 0) == (n % 2 == 0), n


def test_reciprocal_identity():
    # Restates the defining recursions as a vanishing convolution.
    cache_b = KernelCache(B)
    cache_e = KernelCache(E)
    from bekernels.exactnum import factorial

    for n in range(1, 31):
        total_e = sum(
            kernel_recursive(E, k, cache_e) / factorial(2 * (n - k)) for k in range(n + 1)
        )
        assert total_e == 0, n
        total_b = kernel_recursive(B, n, cache_b) + sum(
            kernel_recursive(B, k, cache_b) / factorial(2 * (n - k) + 1) for k in range(n)
        )
        assert total_b == 0, n


def _hessenberg_matrix(kind, n):
    # The explicit matrix the determinant route is defined against:
    # unit superdiagonal, weight(i - j + 1) at and below the diagonal.
    return [
        [
            kind.weight(i - j + 1)
            if j <= i
            else (Fraction(1) if j == i + 1 else Fraction(0))
            for j in range(1, n + 1)
        ]
        for i in range(1, n + 1)
    ]


def _det_by_gaussian_elimination(matrix):
    m = [row[:] for row in matrix]
    size = len(m)
    det = Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det *= m[col][col]
        for r in range(col + 1, size):
            factor = m[r][col] / m[col][col]
            if factor:
                m[r] = [a - factor * b for a, b in zip(m[r], m[col])]
    return det


@pytest.mark.parametrize("kind", [B, E])
def test_determinant_matches_explicit_matrix(kind):
    # Independent route: build H_n explicitly and eliminate; the minor
    # recurrence inside kernel_determinant never sees this code.
    for n in range(1, 11):
        det = _det_by_gaussian_elimination(_hessenberg_matrix(kind, n))
        expected = det if n % 2 == 0 else -det
        assert kernel_determinant(kind, n) == expected, n


def test_domain_errors():
    with pytest.raises(ValueError):
        kernel_recursive(B, -1)
    with pytest.raises(ValueError):
        kernel_compositions(B, 0)
    with pytest.raises(ValueError):
        kernel_determinant(E, 0)


def test_brute_force_soft_limit_warns(monkeypatch):
    monkeypatch.setattr(kernels_module, "BRUTE_FORCE_SOFT_LIMIT", 4)
    with pytest.warns(UserWarning, match="2\\*\\*5"):
        value = kernel_compositions(B, 6)
    assert value == Fraction(1414477, 653837184000)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        kernel_compositions(B, 4)  # at the limit: no warning


def test_real_soft_limit_is_22():
    assert BRUTE_FORCE_SOFT_LIMIT == 22


def test_cache_seeded_and_write_once():
    cache = KernelCache(B)
    assert cache.get(0) == 1
    assert 0 in cache and len(cache) == 1
    cache.put(3, Fraction(-31, 15120))
    cache.put(3, Fraction(-31, 15120))  # identical rewrite is a no-op
    with pytest.raises(ValueError, match="write-once"):
        cache.put(3, Fraction(-31, 15121))
    with pytest.raises(ValueError):
        cache.put(-1, Fraction(1))


def test_recursive_rejects_mismatched_cache():
    with pytest.raises(ValueError, match="kind"):
        kernel_recursive(B, 3, KernelCache(E))


def test_recursive_fills_cache_ascending():
    cache = KernelCache(E)
    kernel_recursive(E, 8, cache)
    assert sorted(n for n, _ in cache.items()) == list(range(9))
    # a second call is a pure lookup and must agree
    assert kernel_recursive(E, 5, cache) == kernel_determinant(E, 5)


def test_concurrent_fill_single_write():
    cache = KernelCache(B)
    outcomes = []

    def worker():
        outcomes.append(kernel_recursive(B, 40, cache))

    threads = [threading.Thread(target=worker) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert len(set(outcomes)) == 1
    assert outcomes[0] == kernel_determinant(B, 40)


def test_cache_file_round_trip(tmp_path):
    cache = KernelCache(B)
    kernel_recursive(B, 6, cache)
    path = tmp_path / "kernel_b.txt"
    write_cache_file(cache, path)
    text = path.read_text()
    assert text.splitlines()[0] == "0 1"
    assert "6 1414477/653837184000" in text
    reloaded = read_cache_file(path, B)
    assert list(reloaded.items()) == list(cache.items())


def test_cache_file_rejects_garbage(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("0 1\n1 not-a-number\n")
    with pytest.raises(ValueError, match="bad.txt:2"):
        read_cache_file(path, B)
