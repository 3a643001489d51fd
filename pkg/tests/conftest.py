import functools

import pytest

from hopfpi.brace import opposite_brace, trivial_brace
from hopfpi.gallery import gallery_pairs, tag
from hopfpi.hopf import group_algebra

PAIRS = [(g, name) for g, name, _ in gallery_pairs()]
GRADINGS = {(g, name): gr for g, name, gr in gallery_pairs()}


@functools.lru_cache(maxsize=None)
def algebra(g, name):
    return group_algebra(GRADINGS[(g, name)])


@functools.lru_cache(maxsize=None)
def brace(kind, g, name):
    H = algebra(g, name)
    return trivial_brace(H) if kind == "trivial" else opposite_brace(H)


def pair_ids(pairs):
    return [tag(*p) for p in pairs]


@pytest.fixture(params=PAIRS, ids=pair_ids(PAIRS))
def gallery_algebra(request):
    return algebra(*request.param)


@pytest.fixture
def s3_sign():
    return algebra("S3", "sign")


@pytest.fixture
def v4_proj2():
    return algebra("V4", "proj2")
