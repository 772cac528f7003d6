from __future__ import annotations

import pytest

from unproj import GF, VERIFICATION_PRIME, base_unprojection, build_family


@pytest.fixture(scope="session")
def fp():
    return GF(VERIFICATION_PRIME)


@pytest.fixture(scope="session")
def base(fp):
    return base_unprojection(fp)


@pytest.fixture(scope="session")
def family_instances(fp):
    """Instances shared across tests; Groebner bases cache on the ideals."""
    cache = {}

    def get(family_id, seed=0, field=None):
        key = (family_id, seed, (field or fp).name)
        if key not in cache:
            cache[key] = build_family(family_id, seed, field or fp)
        return cache[key]

    return get
