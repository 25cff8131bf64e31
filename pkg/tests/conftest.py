import pytest

from blrings.catalog import default_corpus
from blrings.ideals import all_ideals


@pytest.fixture(scope="session")
def corpus():
    """The default constructor-based corpus (deduplicated)."""
    return default_corpus()


@pytest.fixture(scope="session")
def lattices(corpus):
    """Ideal lattices for every corpus ring, computed once per session."""
    return {entry.name: all_ideals(entry.ring) for entry in corpus}
