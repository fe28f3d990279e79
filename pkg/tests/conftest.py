from __future__ import annotations

import time
from pathlib import Path

import pytest

from facesyz.bc import link_correspondence_check, orbit_space_e2
from facesyz.corpus import enumerate_unit_fans, named_fan_fixtures
from facesyz.stanley import syzygy_order_oracle
from facesyz.syzygy import syzygy_order_faces, syzygy_order_links

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    assert FIXTURES.is_dir(), "run scripts/make_fixtures.py first"
    return FIXTURES


@pytest.fixture(scope="session")
def unit_corpus():
    """Enumerated unit-pool fans plus the named fan fixtures."""
    fans = enumerate_unit_fans(max_rank=3, max_rays=5)
    fans.extend(named_fan_fixtures().values())
    return fans


@pytest.fixture(scope="session")
def corpus_results(unit_corpus):
    """Orders, link correspondence and orbit-space bound for every corpus
    fan, computed once; several acceptance criteria consume this."""
    t0 = time.perf_counter()
    results = []
    for f in unit_corpus:
        faces_rep = syzygy_order_faces(f)
        links_rep = syzygy_order_links(f)
        oracle_rep = syzygy_order_oracle(f)
        link_ok = all(link_correspondence_check(f, s) for s in f.cones())
        e2 = orbit_space_e2(f, faces_rep.order)
        results.append(
            {
                "fan": f,
                "faces": faces_rep.order,
                "links": links_rep.order,
                "oracle": oracle_rep.order,
                "link_correspondence": link_ok,
                "e2": e2,
            }
        )
    elapsed = time.perf_counter() - t0
    return {"results": results, "elapsed": elapsed}
