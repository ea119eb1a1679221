"""Used to setup fixtures to be used through tests."""
import pytest

from nornir_fatpoints.field_linalg import DEFAULT_PRIME
from nornir_fatpoints.ledger.types import Configuration
from nornir_fatpoints.plugins.inventory.fatpoints import FatPointInventory
from nornir_fatpoints.schemes import FatPointSpec, random_scheme

SMALL_PRIME = 32003


@pytest.fixture()
def small_prime():
    """Provide a prime small enough to keep hand checks readable.

    Returns:
        (int): 32003
    """
    return SMALL_PRIME


@pytest.fixture()
def triple_point_scheme():
    """Provide one triple point on a seeded random support.

    Returns:
        (SupportedScheme): The placed (0,0,1) scheme over the default prime.
    """
    return random_scheme(FatPointSpec.from_counts(0, 0, 1), seed=1, prime=DEFAULT_PRIME)


@pytest.fixture()
def mixed_scheme():
    """Provide two simple, two double and one triple point.

    Returns:
        (SupportedScheme): The placed (2,2,1) scheme over the small prime.
    """
    return random_scheme(FatPointSpec.from_counts(2, 2, 1), seed=7, prime=SMALL_PRIME)


@pytest.fixture()
def fatpoint_inventory():
    """Provide an inventory with two specs, two seeds and one ledger degree.

    Returns:
        (FatPointInventory): The inventory plugin object.
    """
    return FatPointInventory(specs=[(0, 1, 0), (0, 0, 1)], seeds=[1, 2], prime=SMALL_PRIME, degrees=[12])


@pytest.fixture()
def x_twelve_triples():
    """Provide X(0, 14, 12): fourteen general triples at degree 12.

    Returns:
        (Configuration): Settled-length configuration.
    """
    return Configuration.doubles_and_triples(0, 14, 12)
