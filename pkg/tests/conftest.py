from pathlib import Path

import pytest

from dompoly import iter_graph6_records
from dompoly.verify import classify_corpus

CORPUS_DIR = Path(__file__).resolve().parent.parent / "data" / "corpora"

# graphs on n unlabeled vertices; certifies corpus completeness
CORPUS_SIZES = {4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def load_corpus(n: int) -> list[bytes]:
    path = CORPUS_DIR / f"order{n}.g6"
    return list(iter_graph6_records(path.read_bytes().splitlines()))


@pytest.fixture(scope="session")
def corpus():
    return load_corpus


@pytest.fixture(scope="session")
def classified(corpus):
    """Memoized corpus classification, shared by corpus-heavy tests."""
    cache = {}

    def get(n: int, threads: int = 1):
        if n not in cache:
            cache[n] = classify_corpus(corpus(n), threads=threads)
        return cache[n]

    return get
