import random

import pytest

from cactusdoodle.words import (CactusWord, Generator, Permutation,
                                apply_relation, bounded_word_equal,
                                find_relations, format_word, parse_word,
                                perm_image, perm_of_generator, word)


def all_generators(n):
    return [Generator(p, q, n) for p in range(1, n) for q in range(p + 1, n + 1)]


def test_generator_validation():
    Generator(1, 3, 3)
    with pytest.raises(ValueError):
        Generator(2, 2, 3)
    with pytest.raises(ValueError):
        Generator(0, 2, 3)
    with pytest.raises(ValueError):
        Generator(1, 4, 3)


def test_generator_permutations_are_involutions():
    for n in range(2, 7):
        for g in all_generators(n):
            p = perm_of_generator(g)
            assert p.then(p) == Permutation.identity(n)


def test_perm_image_composes_left_to_right():
    w = word(3, [(1, 3), (1, 2)])
    g1, g2 = w.letters
    assert perm_image(w) == perm_of_generator(g1).then(perm_of_generator(g2))


def test_relations_preserve_permutation_image():
    rng = random.Random(11)
    for _ in range(300):
        n = rng.randrange(2, 6)
        gens = all_generators(n)
        w = CactusWord(n, tuple(rng.choice(gens) for _ in range(rng.randrange(1, 6))))
        img = perm_image(w)
        for rel in find_relations(w):
            assert perm_image(apply_relation(w, rel)) == img


def test_nested_relation_permutation_identity():
    # s_{p,q} s_{m,r} and s_{p+q-r,p+q-m} s_{p,q} act identically when
    # [m,r] sits inside [p,q]
    for n in range(3, 7):
        for p in range(1, n):
            for q in range(p + 1, n + 1):
                for m in range(p, q):
                    for r in range(m + 1, q + 1):
                        if (m, r) == (p, q):
                            continue
                        lhs = word(n, [(p, q), (m, r)])
                        rhs = word(n, [(p + q - r, p + q - m), (p, q)])
                        assert perm_image(lhs) == perm_image(rhs)


def test_find_relations_kinds():
    w = word(4, [(1, 2), (1, 2)])
    kinds = {rel.kind for rel in find_relations(w)}
    assert "C1" in kinds

    w = word(4, [(1, 2), (3, 4)])
    kinds = {rel.kind for rel in find_relations(w)}
    assert "C2" in kinds

    w = word(4, [(1, 4), (2, 3)])
    kinds = {rel.kind for rel in find_relations(w)}
    assert "C3" in kinds

    # overlapping but not nested intervals admit no relation
    w = word(4, [(1, 3), (2, 4)])
    assert find_relations(w) == []


def test_apply_relation_round_trips():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randrange(2, 6)
        gens = all_generators(n)
        w = CactusWord(n, tuple(rng.choice(gens) for _ in range(rng.randrange(1, 6))))
        for rel in find_relations(w):
            v = apply_relation(w, rel)
            if rel.kind == "C1":
                assert len(v.letters) == len(w.letters) - 2
            elif rel.kind == "C2":
                assert apply_relation(v, rel) == w
            else:
                back = [r for r in find_relations(v)
                        if r.kind == "C3" and r.position == rel.position]
                assert w in [apply_relation(v, r) for r in back]


def test_bounded_word_equal():
    a = word(3, [(1, 3), (1, 3)])
    assert bounded_word_equal(a, word(3, []), 4) == "equal"

    lhs = word(3, [(1, 3), (1, 2)])
    rhs = word(3, [(2, 3), (1, 3)])
    assert bounded_word_equal(lhs, rhs, 4) == "equal"

    # distinct group elements never come back equal
    assert bounded_word_equal(word(2, [(1, 2)]), word(2, []), 6) == "unknown"


def test_parse_and_format_round_trip():
    for text in ["n=3 s(1,3) s(2,3)", "n=2", "n=5 s(1,5) s(2,4) s(1,2)"]:
        w = parse_word(text)
        assert format_word(w) == text
        assert parse_word(format_word(w)) == w


def test_parse_rejects_garbage():
    for text in ["s(1,3)", "n=3 s(3,1)", "n=3 s(1,4)", "n=x s(1,2)", "n=3 t(1,2)"]:
        with pytest.raises(ValueError):
            parse_word(text)


def test_permutation_cycles():
    p = Permutation((2, 1, 3))
    assert p.cycles() == [(1, 2), (3,)]
    assert Permutation.identity(2).cycles() == [(1,), (2,)]
    q = Permutation((3, 1, 2))
    assert q.cycles() == [(1, 3, 2)]
    assert q.then(q.inverse()) == Permutation.identity(3)
