import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracle
from gn3kit import (
    FreeProductWord,
    IndexLetter,
    TriLetter,
    WordError,
    abelian_profile,
    commutator,
    occurrence_index,
    occurrence_indices,
    parse,
    phi,
    pi,
    reduce,
    tilde_phi,
    tilde_w_invariant,
    w_invariant,
)
from gn3kit.invariants import TripleSelector, all_selectors, is_trivial
from gn3kit.presentations import pb_relators, rewrite_steps
from strategies import gn3_words, tilde_words

# the G_4^3 word printed for pi(tilde_phi([b12, b13]))
PRINTED = (
    "a[1,2,4] a[1,2,3] a[1,2,4] a[1,2,3] a[1,2,4] a[1,3,4] a[1,2,3] a[1,3,4] "
    "a[1,2,3] a[1,2,4] a[1,2,3] a[1,2,4] a[1,3,4] a[1,2,3] a[1,3,4] a[1,2,4]"
)


def _rows(w):
    return [tuple(x.values) for x in w]


def _brunnian():
    x, y = parse("b[1,2]", "braid", 3), parse("b[1,3]", "braid", 3)
    return commutator(x, y)


def test_first_occurrence_after_a124():
    g = parse(PRINTED, "gn3", 4)
    assert occurrence_index(g, 1, (1, 2, 3)).values == ((1, 0),)


def test_empty_prefix_is_zero():
    g = parse("a[1,2,3] a[1,2,4]", "gn3", 5)
    assert occurrence_index(g, 0, (1, 2, 3)).values == ((0, 0), (0, 0))


def test_occurrence_index_wrong_letter():
    g = parse("a[1,2,3] a[1,2,4]", "gn3", 4)
    with pytest.raises(WordError):
        occurrence_index(g, 1, (1, 2, 3))
    with pytest.raises(WordError):
        occurrence_index(g, 5, (1, 2, 3))


def test_printed_word_reproduces_listed_indices():
    g = parse(PRINTED, "gn3", 4)
    w = w_invariant(g, (1, 2, 3))
    assert str(w) == "(1,0)(0,0)(1,1)(1,0)(0,0)(1,1)"


def test_commutator_invariant():
    w = tilde_w_invariant(tilde_phi(_brunnian()), TripleSelector(1, 2, 3, 4))
    red = reduce(w)
    assert str(red) == "(1,0)(0,0)(1,1)(1,0)(0,0)(1,1)"
    assert len(red) == 6 and not is_trivial(w)


def test_commutator_invisible_to_plain_w():
    beta = _brunnian()
    assert is_trivial(w_invariant(phi(beta), (1, 2, 3)))
    assert is_trivial(w_invariant(phi(beta.inverse()), (1, 2, 3)))


def test_b24_a247_indices():
    g = pi(tilde_phi(parse("b[2,4]", "braid", 6)))
    occ = occurrence_indices(g, TripleSelector(2, 4, 7, 7))
    assert len(occ) == 2
    assert all(o.index.domain == (1, 3, 5, 6) for o in occ)
    ref = oracle.indices(oracle.project(
        oracle.braid_image([(2, 4, 1)], 6, oracle.tilde_phi_gen), 6), (2, 4, 7), 7)
    assert [o.index.values for o in occ] == ref
    assert ref == [((0, 0), (1, 1), (1, 0), (1, 0)), ((1, 0), (0, 1), (0, 0), (0, 0))]


def test_single_generator_values():
    # w~_ijk(tilde_phi(b)) for b in {b_ij, b_ik, b_jk}, n = 3, bound 4
    sel = TripleSelector(1, 2, 3, 4)
    got = {
        g: _rows(tilde_w_invariant(tilde_phi(parse(g, "braid", 3)), sel))
        for g in ("b[1,2]", "b[1,3]", "b[2,3]")
    }
    assert got == {
        "b[1,2]": [((0, 0),), ((1, 0),)],
        "b[1,3]": [((1, 0),), ((1, 1),), ((1, 0),), ((1, 0),)],
        "b[2,3]": [((1, 1),), ((0, 0),)],
    }


@pytest.mark.parametrize("convention", ["example", "section3"])
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_indices_match_oracle(convention, data):
    n = data.draw(st.integers(3, 6))
    w = data.draw(gn3_words(n=n, max_len=14))
    sel = data.draw(st.sampled_from(all_selectors(n)))
    toks = [frozenset(x.idx) for x in w]
    ref = oracle.indices(toks, sel.triple, n, convention)
    got = [o.index.values for o in occurrence_indices(w, sel, convention)]
    assert got == ref


def test_unordered_selector_uses_given_order():
    g = parse(PRINTED, "gn3", 4)
    a = occurrence_indices(g, (2, 1, 3))
    ref = oracle.indices([frozenset(x.idx) for x in g], (2, 1, 3), 4)
    assert [o.index.values for o in a] == ref


def test_selector_bound_mismatch():
    with pytest.raises(WordError):
        w_invariant(parse("a[1,2,3]", "gn3", 4), TripleSelector(1, 2, 3, 5))
    with pytest.raises(WordError):
        TripleSelector(1, 1, 2, 4)


def test_unknown_convention():
    with pytest.raises(WordError):
        w_invariant(parse("a[1,2,3]", "gn3", 4), (1, 2, 3), "other")


def _fp(*rows):
    return FreeProductWord(tuple(IndexLetter((1, 2, 3), (4,), (r,)) for r in rows))


def test_reduce_examples():
    assert str(reduce(_fp((1, 0), (1, 0)))) == "1"
    assert str(reduce(_fp((1, 0), (0, 1), (0, 1), (1, 0), (1, 1)))) == "(1,1)"
    assert str(reduce(_fp((0, 0), (1, 0), (0, 0)))) == "(0,0)(1,0)(0,0)"
    assert reduce(FreeProductWord()) == FreeProductWord()


_rows4 = st.sampled_from([(0, 0), (0, 1), (1, 0), (1, 1)])


@given(st.lists(_rows4, max_size=30), st.randoms(use_true_random=False))
def test_reduction_confluent(rows, rnd):
    cur = list(rows)
    while True:
        spots = [p for p in range(len(cur) - 1) if cur[p] == cur[p + 1]]
        if not spots:
            break
        p = rnd.choice(spots)
        del cur[p:p + 2]
    assert [x.values[0] for x in reduce(_fp(*rows))] == cur == oracle.reduce_naive(rows)


@given(st.lists(_rows4, max_size=30))
def test_reduction_fixed_point(rows):
    r = reduce(_fp(*rows))
    assert reduce(r) == r and r.is_reduced


def test_reduce_backends_agree(backend):
    rng = random.Random(11)
    for _ in range(200):
        rows = [rng.choice([(0, 0), (1, 0)]) for _ in range(rng.randint(0, 20))]
        assert [x.values[0] for x in reduce(_fp(*rows))] == oracle.reduce_naive(rows)


def _all_reduced(w, selectors):
    return [reduce(w_invariant(w, s)) for s in selectors]


@settings(max_examples=150, deadline=None)
@given(gn3_words(n=4, max_len=10))
def test_gn3_steps_preserve_invariants(w):
    sels = all_selectors(4)
    base = _all_reduced(w, sels)
    for s in rewrite_steps(w, allow_insertions=True):
        assert _all_reduced(s.result, sels) == base


@settings(max_examples=100, deadline=None)
@given(tilde_words(n=4, max_len=10))
def test_tilde_steps_preserve_invariants(w):
    sels = all_selectors(5)
    base = [reduce(tilde_w_invariant(w, s)) for s in sels]
    for s in rewrite_steps(w, allow_insertions=True):
        assert [reduce(tilde_w_invariant(s.result, t)) for t in sels] == base


def _deleted_pair_equal(w, step, sels, image=lambda x: x):
    p = step.position
    g = image(w)
    for sel in sels:
        if g[p] == sel.letter:
            assert occurrence_index(g, p, sel) == occurrence_index(g, p + 1, sel)


@settings(max_examples=150, deadline=None)
@given(tilde_words(n=4, max_len=10))
def test_deleted_letters_share_index(w):
    sels = [TripleSelector(*s.triple, 5) for s in all_selectors(5)]
    for step in rewrite_steps(w):
        if step.rule == "a" and step.direction == "forward":
            _deleted_pair_equal(w, step, sels, pi)


@pytest.mark.parametrize("n", [3, 4, 5])
def test_relator_shadow(n):
    sels = all_selectors(n + 1)
    for rel in pb_relators(n):
        img = tilde_phi(rel.word)
        assert abelian_profile(img).is_trivial
        for sel in sels:
            assert is_trivial(tilde_w_invariant(img, sel)), (rel, sel)


def test_abelian_profile_examples():
    prof = abelian_profile(parse("a[1,2,3] s[1,2] a[1,2,3] s[2,1] s[1,2]^-1", "tilde", 3))
    assert prof.parities == {}
    assert prof.exponents == {(2, 1): 1}
    assert not prof.is_trivial
    assert abelian_profile(parse("", "gn3", 4)).is_trivial


@settings(max_examples=100, deadline=None)
@given(tilde_words(n=4, max_len=10))
def test_abelian_profile_is_step_invariant(w):
    base = abelian_profile(w)
    for s in rewrite_steps(w, allow_insertions=True):
        assert abelian_profile(s.result) == base


def test_occurrence_scan_backends_agree(backend):
    rng = random.Random(5)
    alpha = [TriLetter(*t) for t in ((1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 2, 5), (3, 4, 5))]
    for _ in range(100):
        letters = [str(rng.choice(alpha)) for _ in range(rng.randint(0, 16))]
        w = parse(" ".join(letters), "gn3", 5)
        for sel in all_selectors(5):
            ref = oracle.indices([frozenset(x.idx) for x in w], sel.triple, 5)
            assert [o.index.values for o in occurrence_indices(w, sel)] == ref
