from functools import lru_cache

import pytest

from charprod.builders.named import named_group
from charprod.builders.spec import shipped_specs
from charprod.characters.table import character_table


@lru_cache(maxsize=None)
def spec_table(spec_id: str):
    return character_table(shipped_specs()[spec_id].build())


@lru_cache(maxsize=None)
def named_table(name: str):
    return character_table(named_group(name))


@pytest.fixture
def table_of():
    return spec_table


@pytest.fixture
def named():
    return named_table
