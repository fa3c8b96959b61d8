import random
from itertools import permutations, product

import pytest

from distseq.semigroup import (CapExceeded, PartialBijection, closure,
                               complexity, compose, directed_diameter,
                               group_worst_diameter, identity, is_bijection,
                               restriction_complexity, transformation_order,
                               worst_case_complexity)

SWAP = (1, 0)
ID2 = (0, 1)


def random_map(rng, n):
    return tuple(rng.randrange(n) for _ in range(n))


class TestCompose:
    def test_identity_neutral(self):
        f = (2, 0, 1)
        assert compose(f, identity(3)) == f
        assert compose(identity(3), f) == f

    def test_swap_squares_to_identity(self):
        assert compose(SWAP, SWAP) == ID2

    def test_left_composition_with_constant(self):
        cycle = (1, 2, 0)
        const0 = (0, 0, 0)
        assert compose(cycle, const0) == const0

    def test_associative(self):
        rng = random.Random(2)
        for _ in range(100):
            f, g, h = (random_map(rng, 4) for _ in range(3))
            assert compose(compose(f, g), h) == compose(f, compose(g, h))

    def test_mismatched_ground(self):
        with pytest.raises(ValueError):
            compose((0,), (0, 1))


class TestClosure:
    def test_identity_alone(self):
        res = closure([identity(3)])
        assert res.elements == {identity(3)}
        assert res.level[identity(3)] == 1

    def test_swap_generates_s2(self):
        res = closure([SWAP])
        assert res.level == {SWAP: 1, ID2: 2}

    def test_constant_idempotent(self):
        res = closure([(0, 0)])
        assert res.level == {(0, 0): 1}

    def test_level_one_iff_basis(self):
        rng = random.Random(3)
        basis = [random_map(rng, 4) for _ in range(3)]
        res = closure(basis)
        assert {f for f, d in res.level.items() if d == 1} == set(basis)

    def test_subadditive(self):
        rng = random.Random(4)
        basis = [random_map(rng, 4) for _ in range(2)]
        level = closure(basis).level
        elems = list(level)
        for _ in range(200):
            f, g = rng.choice(elems), rng.choice(elems)
            assert level[compose(f, g)] <= level[f] + level[g]

    def test_monotone_in_basis(self):
        rng = random.Random(5)
        for _ in range(20):
            small = [random_map(rng, 4) for _ in range(2)]
            big = small + [random_map(rng, 4)]
            lo, hi = closure(small).level, closure(big).level
            for f, d in lo.items():
                assert hi[f] <= d


class TestComplexity:
    def test_basis_element_is_one(self):
        assert complexity([SWAP, (0, 0)], SWAP) == 1

    def test_identity_over_swap(self):
        assert complexity([SWAP], ID2) == 2

    def test_absent_outside_closure(self):
        assert complexity([(0, 0)], ID2) is None


class TestRestrictionComplexity:
    def test_fixed_domain(self):
        f = PartialBijection((0, 1), (0, 1))
        assert restriction_complexity([(0, 1, 2)], f) == 1

    def test_unreachable(self):
        f = PartialBijection((0,), (2,))
        assert restriction_complexity([(0, 1, 2)], f) is None

    def test_at_most_full_complexity(self):
        rng = random.Random(6)
        for _ in range(20):
            basis = [random_map(rng, 4) for _ in range(2)]
            level = closure(basis).level
            for g, d in level.items():
                for D in ((0, 1), (1, 2), (0, 3)):
                    images = tuple(g[x] for x in D)
                    if len(set(images)) < len(D):
                        continue
                    rc = restriction_complexity(basis, PartialBijection(D, images))
                    assert rc is not None and rc <= d

    def test_not_injective_rejected(self):
        with pytest.raises(ValueError):
            PartialBijection((0, 1), (2, 2))


def naive_worst(C):
    """Definition-level oracle: every basis, all products enumerated by length."""
    C = sorted(set(C))
    worst = 0
    for mask in range(1, 1 << len(C)):
        basis = [C[i] for i in range(len(C)) if mask >> i & 1]
        seen = {}
        length = 0
        while True:
            length += 1
            new = False
            for factors in product(basis, repeat=length):
                f = factors[0]
                for g in factors[1:]:
                    f = compose(f, g)
                if f not in seen:
                    seen[f] = length
                    new = True
            if not new:
                break
        worst = max(worst, max(seen.values()))
    return worst


class TestWorstCase:
    def test_t1(self):
        assert worst_case_complexity([identity(1)]).value == 1

    def test_s2_matches_oracle(self):
        assert worst_case_complexity([SWAP, ID2]).value == naive_worst([SWAP, ID2])

    def test_t2_matches_oracle(self):
        t2 = list(product(range(2), repeat=2))
        assert worst_case_complexity(t2).value == naive_worst(t2)

    def test_s2_at_most_t2(self):
        t2 = list(product(range(2), repeat=2))
        assert worst_case_complexity([SWAP, ID2]).value <= \
            worst_case_complexity(t2).value

    def test_canonicalization_preserves_value(self):
        t2 = list(product(range(2), repeat=2))
        assert worst_case_complexity(t2, canonicalize=True).value == \
            worst_case_complexity(t2).value
        s3 = [tuple(p) for p in permutations(range(3))]
        assert worst_case_complexity(s3, canonicalize=True).value == \
            worst_case_complexity(s3).value

    def test_cap(self):
        t3 = list(product(range(3), repeat=3))
        with pytest.raises(CapExceeded):
            worst_case_complexity(t3, cap_bases=100)


class TestDiameter:
    def test_trivial_group(self):
        assert group_worst_diameter([identity(3)]) == 1

    def test_s2_group_equals_worst_case(self):
        assert group_worst_diameter([SWAP, ID2]) == \
            worst_case_complexity([SWAP, ID2]).value

    def test_three_cycle(self):
        assert directed_diameter([(1, 2, 0)]) == 3

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            directed_diameter([(0, 0)])

    def test_group_max_diameter_equals_worst_case_s2_s3(self):
        # ell(S_n) should equal the max directed diameter over all subgroups
        for n in (2, 3):
            sn = [tuple(p) for p in permutations(range(n))]
            subgroups = set()
            for mask in range(1, 1 << len(sn)):
                basis = [sn[i] for i in range(len(sn)) if mask >> i & 1]
                subgroups.add(closure(basis).elements)
            best = max(group_worst_diameter(sorted(g)) for g in subgroups)
            assert best == worst_case_complexity(sn).value


def test_transformation_order():
    assert transformation_order(identity(4)) == 1
    assert transformation_order(SWAP) == 2
    assert transformation_order((1, 0, 3, 4, 2)) == 6
    with pytest.raises(ValueError):
        transformation_order((0, 0))


def test_is_bijection():
    assert is_bijection((2, 0, 1))
    assert not is_bijection((0, 0, 1))
