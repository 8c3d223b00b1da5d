import pytest

PRIMES = (2, 3, 7)


@pytest.fixture(params=PRIMES)
def p(request):
    return request.param
