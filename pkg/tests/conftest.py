from itertools import product

import pytest
from hypothesis import strategies as st

from divcodes.divlen import load_length_tables
from divcodes.replay import register_theorem131


@pytest.fixture
def tables():
    """Fresh shipped length tables (131 not yet registered)."""
    return load_length_tables()


@pytest.fixture
def tables_131(tables):
    register_theorem131(tables)
    return tables


def span(rows):
    """All codewords (as int bitmasks) spanned by the given rows."""
    words = {0}
    for row in rows:
        words |= {w ^ row for w in words}
    return words


def weight_counts(words, n):
    counts = {}
    for w in words:
        wt = bin(w).count("1")
        counts[wt] = counts.get(wt, 0) + 1
    return counts


def dual_words(words, n):
    """Brute-force dual: every vector orthogonal to every codeword."""
    return {
        v for v in range(2**n) if all(bin(v & w).count("1") % 2 == 0 for w in words)
    }


@st.composite
def binary_codes(draw, max_n=20, max_k=8):
    """(n, set of codewords) for a random binary linear code."""
    n = draw(st.integers(1, max_n))
    k = draw(st.integers(0, min(n, max_k)))
    rows = draw(st.lists(st.integers(0, 2**n - 1), min_size=k, max_size=k))
    return n, span(rows)


def poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return out


def kernel_by_expansion(i, n):
    """Coefficients of (1+z)^(n-i) (1-z)^i by repeated multiplication."""
    poly = [1]
    for _ in range(n - i):
        poly = poly_mul(poly, [1, 1])
    for _ in range(i):
        poly = poly_mul(poly, [1, -1])
    return poly


def semigroup_by_enumeration(gens, limit):
    reachable = set()
    ranges = [range(limit // g + 1) for g in gens]
    for coeffs in product(*ranges):
        s = sum(c * g for c, g in zip(coeffs, gens))
        if s <= limit:
            reachable.add(s)
    return reachable
