import random

import pytest

from ginlab.families import derive_seed, random_ideal, twisted_cubic_ideal
from ginlab.groebner import Ideal
from ginlab.hilbert import lex_segment_ideal, parse_hilbert_polynomial
from ginlab.gin import random_linear_change
from ginlab.orders import GrevLex, RingContext
from ginlab.poly import apply_change

MASTER_SEED = 20240809


def build_corpus():
    """Labelled homogeneous ideals covering hypersurfaces, intersections,
    twisted-cubic nets and lex segment ideals."""
    corpus = []
    ctx2 = RingContext(2, GrevLex())
    ctx3 = RingContext(3, GrevLex())
    for i in range(8):
        rng = random.Random(derive_seed(MASTER_SEED, 1, i))
        corpus.append((f"conic-{i}", ctx2, random_ideal(ctx2, [2], rng)))
    for i in range(8):
        rng = random.Random(derive_seed(MASTER_SEED, 2, i))
        corpus.append((f"pencil22-{i}", ctx2, random_ideal(ctx2, [2, 2], rng)))
    for i in range(6):
        rng = random.Random(derive_seed(MASTER_SEED, 3, i))
        corpus.append((f"ci23-{i}", ctx2, random_ideal(ctx2, [2, 3], rng)))
    tc = twisted_cubic_ideal()
    for i in range(4):
        g = random_linear_change(ctx3, derive_seed(MASTER_SEED, 4, i), bound=25)
        moved = Ideal([apply_change(ctx3, g, f) for f in tc.generators])
        corpus.append((f"tcnet-{i}", ctx3, moved))
    lex_cases = [
        ("lex-2m+1", "2*m + 1"),
        ("lex-3m+1", "3*m + 1"),
        ("lex-c1", "1"),
        ("lex-c2", "2"),
        ("lex-c3", "3"),
        ("lex-c4", "4"),
    ]
    for label, text in lex_cases:
        P = parse_hilbert_polynomial(text)
        corpus.append((label, ctx2, lex_segment_ideal(ctx2, P)))
    return corpus


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()
