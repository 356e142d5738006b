"""Shared fixtures: an independent sieve for choosing primes and composites.

The sieve is implemented here, not imported from the package, so tests that
cross-check the package's trial-division oracle really are independent.
"""

import pytest


def sieve_flags(limit: int) -> bytearray:
    flags = bytearray([1]) * (limit + 1)
    flags[0] = flags[1] = 0
    for i in range(2, int(limit**0.5) + 1):
        if flags[i]:
            flags[i * i :: i] = bytes(len(flags[i * i :: i]))
    return flags


@pytest.fixture(scope="session")
def prime_flags() -> bytearray:
    return sieve_flags(100_000)


@pytest.fixture(scope="session")
def odd_primes_1000(prime_flags) -> list[int]:
    return [n for n in range(3, 1001, 2) if prime_flags[n]]


@pytest.fixture(scope="session")
def odd_primes_500(odd_primes_1000) -> list[int]:
    return [p for p in odd_primes_1000 if p <= 500]


@pytest.fixture(scope="session")
def odd_composites_500(prime_flags) -> list[int]:
    return [n for n in range(3, 501, 2) if not prime_flags[n]]
