import json
import random

from hypothesis import given, settings
from hypothesis import strategies as st

from gn3kit import BraidLetter, BraidWord, analyse, find_pairs, parse, theorem42_check
from gn3kit.cancellability import (
    invariant_obstruction,
    obstruction_for,
    parity_count,
    validate,
)
from strategies import braid_words


def _pair(text, n, index=0):
    return find_pairs(parse(text, "braid", n))[index]


def test_find_pairs():
    w = parse("b[1,2] b[1,3] b[1,2]^-1 b[1,2]^-1 b[1,3]^-1", "braid", 3)
    got = [(p.left, p.right, p.i, p.j, str(p.between)) for p in find_pairs(w)]
    assert got == [
        (0, 2, 1, 2, "b[1,3]"),
        (0, 3, 1, 2, "b[1,3] b[1,2]^-1"),
        (1, 4, 1, 3, "b[1,2]^-1 b[1,2]^-1"),
    ]
    assert find_pairs(parse("b[1,2] b[1,2] b[2,3]", "braid", 3)) == []


def test_inverse_first_pair():
    (p,) = find_pairs(parse("b[2,3]^-1 b[1,2] b[2,3]", "braid", 3))
    assert (p.left, p.right, p.i, p.j) == (0, 2, 2, 3)


def test_parity_fires_with_k3():
    pair = _pair("b[1,2] b[1,3] b[1,2]^-1", 3)
    cert = theorem42_check(pair, 3)
    assert cert.kind == "parity" and cert.k == 3
    assert validate(cert, pair, 3)


def test_obstruction_fires():
    pair = _pair("b[1,2] b[1,3] b[1,2]^-1", 3)
    cert = invariant_obstruction(pair, 3)
    assert cert.kind == "invariant-obstruction" and cert.selector.triple == (1, 2, 3)
    assert cert.selector.m == 4
    assert str(cert.reduced) == "(1,0)(1,1)"
    assert validate(cert, pair, 3)


def test_even_count_is_inconclusive_for_parity():
    pair = _pair("b[1,2] b[1,3] b[1,3] b[1,2]^-1", 3)
    assert not theorem42_check(pair, 3).conclusive
    # b12 does not commute with b13^2, and the invariant sees it
    assert invariant_obstruction(pair, 3).kind == "invariant-obstruction"


def test_b_ij_inside_blocks_parity():
    pair = _pair("b[1,2] b[1,3] b[1,2] b[1,2]^-1", 3, 0)
    assert pair.right == 3
    assert not theorem42_check(pair, 3).conclusive


def test_adjacent_pair_inconclusive():
    (r,) = analyse(parse("b[1,2] b[1,2]^-1", "braid", 3))
    assert r.verdict == "inconclusive"
    assert all(not c.conclusive for c in r.certificates)


def test_far_letter_inconclusive():
    (r,) = analyse(parse("b[1,2] b[3,4] b[1,2]^-1", "braid", 4))
    assert r.verdict == "inconclusive"


def test_smallest_k_reported():
    pair = _pair("b[1,2] b[2,4] b[1,3] b[1,2]^-1", 4)
    assert theorem42_check(pair, 4).k == 3
    assert parity_count(pair.between, 1, 2, 4) == 1


def test_report_json_round_trip():
    reps = analyse(parse("b[1,2] b[1,3] b[1,2]^-1", "braid", 3))
    data = json.loads(json.dumps([r.to_json() for r in reps]))
    assert data == [{
        "pair": {"left": 0, "right": 2, "i": 1, "j": 2},
        "certificates": [
            {"kind": "parity", "k": 3},
            {"kind": "invariant-obstruction", "selector": [1, 2, 3], "reduced": ["(1,0)", "(1,1)"]},
        ],
        "verdict": "non-cancellable",
    }]


def test_validate_rejects_forged():
    pair = _pair("b[1,2] b[1,3] b[1,3] b[1,2]^-1", 3)
    forged = theorem42_check(_pair("b[1,2] b[1,3] b[1,2]^-1", 3), 3)
    assert not validate(forged, pair, 3)


def _random_between(rng, n, i, j, length):
    pairs = [(s, t) for s in range(1, n + 1) for t in range(s + 1, n + 1) if (s, t) != (i, j)]
    return [BraidLetter(*rng.choice(pairs), rng.choice([1, -1])) for _ in range(length)]


def test_soundness_coupling():
    """parity certificate implies invariant obstruction for the same k."""
    rng = random.Random(2024)
    fired = 0
    for _ in range(500):
        n = rng.randint(3, 5)
        i, j = sorted(rng.sample(range(1, n + 1), 2))
        mid = _random_between(rng, n, i, j, rng.randint(0, 8))
        w = BraidWord(n, (BraidLetter(i, j), *mid, BraidLetter(i, j, -1)))
        pair = next(p for p in find_pairs(w) if (p.left, p.right) == (0, len(w) - 1))
        cert = theorem42_check(pair, n)
        if cert.conclusive:
            fired += 1
            assert obstruction_for(pair.between, i, j, cert.k, n).letters, w
    assert fired > 100


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_obstruction_stable_under_free_insertion(data):
    n = data.draw(st.integers(3, 5))
    b = data.draw(braid_words(n=n, max_len=6))
    x = data.draw(braid_words(n=n, max_len=3))
    cut = data.draw(st.integers(0, len(b)))
    padded = b[:cut] + x + x.inverse() + b[cut:]
    for k in (3,):
        assert obstruction_for(padded, 1, 2, k, n) == obstruction_for(b, 1, 2, k, n)


@settings(max_examples=60, deadline=None)
@given(braid_words(min_n=3, max_n=5, max_len=8))
def test_every_certificate_validates(w):
    for rep in analyse(w):
        for cert in rep.certificates:
            assert validate(cert, rep.pair, w.n)
