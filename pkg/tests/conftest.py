import pytest

from ckltag import load_affix_table, load_registry, load_root_lexicon, load_rules
from ckltag.morphology import seed_affix_path, seed_lexicon_path
from ckltag.suggestion import seed_rules_path


@pytest.fixture(scope="session")
def registry():
    return load_registry()


@pytest.fixture(scope="session")
def seed_lexicon(registry):
    return load_root_lexicon(seed_lexicon_path(), registry)


@pytest.fixture(scope="session")
def seed_affixes(registry):
    return load_affix_table(seed_affix_path(), registry)


@pytest.fixture(scope="session")
def seed_rules(registry):
    return load_rules(seed_rules_path(), registry)


@pytest.fixture(scope="session")
def default_rules(registry):
    return load_rules(None, registry)
