import random

import pytest


def pytest_addoption(parser):
    parser.addoption(
        "--seed", type=int, default=20260824,
        help="seed for randomized property-test batches")


@pytest.fixture
def seed(request):
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed):
    return random.Random(seed)
