import itertools
import math

import numpy as np
import pytest

from polyshift import (
    Monomial,
    MonomialIdeal,
    NotStronglyStableError,
    ResourceCapError,
    betti_table,
    borel_closure,
    cross_prime_agreement,
    ek_betti,
    hs_oracle,
    lcm_lattice,
    lcm_many,
    minimal_generators,
    reduced_homology_ranks,
    upper_koszul,
)
from polyshift import _kernels
from util import M, gens_set, ideal


class TestLcmLattice:
    def test_two_variables(self):
        I = ideal("[x1, x2]")
        assert gens_set_of_lattice(I) == {"x1", "x2", "x1*x2"}

    def test_trio_matches_subset_enumeration(self, trio_ideal):
        lattice = {m.exponents for m in lcm_lattice(trio_ideal)}
        brute = set()
        gens = trio_ideal.gens
        for r in range(1, len(gens) + 1):
            for subset in itertools.combinations(gens, r):
                brute.add(lcm_many(subset).exponents)
        assert lattice == brute
        # 7 nonempty subsets, but the full triple repeats a pairwise lcm
        assert len(lattice) == 6

    def test_single_generator(self):
        I = ideal("[x1^2*x2] n=2")
        assert [str(m) for m in lcm_lattice(I)] == ["x1^2*x2"]

    def test_cap(self, example_ideal):
        with pytest.raises(ResourceCapError):
            lcm_lattice(example_ideal, cap=5)


def gens_set_of_lattice(I):
    return {str(m) for m in lcm_lattice(I)}


class TestUpperKoszul:
    def test_two_disconnected_vertices(self):
        I = ideal("[x1, x2]")
        frame = upper_koszul(I, M("x1*x2", 2))
        assert sorted(frame.faces()) == [(), (1,), (2,)]
        ranks = reduced_homology_ranks(frame, 32003)
        assert ranks == {0: 1}  # one extra connected component

    def test_generator_gives_irrelevant_complex(self, trio_ideal):
        frame = upper_koszul(trio_ideal, trio_ideal.gens[0])
        assert frame.faces() == [()]
        assert reduced_homology_ranks(frame, 32003) == {-1: 1}

    def test_nonmember_gives_void_complex(self, trio_ideal):
        frame = upper_koszul(trio_ideal, M("x3*x4", 4))
        assert frame.is_void
        assert reduced_homology_ranks(frame, 32003) == {}


class TestBettiTable:
    def test_trio(self, trio_ideal):
        table = betti_table(trio_ideal)
        assert table.pd == 1
        assert table.totals() == {0: 3, 1: 2}
        assert gens_set(table.shift_ideal(1)) == {"x1*x2*x3", "x1*x2*x4"}

    def test_generators_have_rank_one(self, trio_ideal):
        table = betti_table(trio_ideal)
        zero_row = {a: r for (i, a), r in table.entries.items() if i == 0}
        assert zero_row == {g: 1 for g in trio_ideal.gens}

    def test_pd_bounds(self, fuzz_corpus):
        for spec, I in fuzz_corpus[:50]:
            table = betti_table(I)
            assert table.pd <= min(I.num_gens - 1, I.n - 1)

    def test_multidegrees_within_bounding_vector(self, fuzz_corpus):
        from polyshift import bounding_multidegree

        for spec, I in fuzz_corpus[:50]:
            bound = bounding_multidegree(I).exponents
            for (_, a) in betti_table(I).entries:
                assert all(x <= y for x, y in zip(a.exponents, bound))

    def test_principal(self):
        table = betti_table(ideal("[x1^2*x3] n=3"))
        assert table.pd == 0
        assert table.totals() == {0: 1}

    def test_variable_ideal_is_koszul(self):
        for n in range(1, 5):
            I = minimal_generators([Monomial.variable(i, n) for i in range(1, n + 1)])
            table = betti_table(I)
            assert table.totals() == {
                i: math.comb(n, i + 1) for i in range(n)
            }

    def test_maximal_power_totals(self):
        # all degree-d monomials in n variables: known closed-form ranks
        from polyshift import VeroneseSpec, realize

        n, d = 4, 2
        I = realize(VeroneseSpec((d,) * n, d))
        table = betti_table(I)
        expected = {
            i: math.comb(n + d - 1, d + i) * math.comb(d + i - 1, i)
            for i in range(n)
        }
        assert table.totals() == expected

    def test_zero_ideal(self):
        table = betti_table(MonomialIdeal(3))
        assert table.entries == {} and table.pd == -1

    def test_unit_ideal_is_free(self):
        unit = MonomialIdeal(3, [Monomial.unit(3)])
        table = betti_table(unit)
        assert table.totals() == {0: 1}
        assert table.pd == 0
        assert hs_oracle(unit, 0, table) == unit

    def test_linearity_detection(self, example_ideal, trio_ideal):
        assert betti_table(example_ideal).is_linear(2)
        assert betti_table(trio_ideal).is_linear(2)
        mixed = ideal("[x1^3, x2]")
        assert not betti_table(mixed).is_linear(1)

    def test_hs_oracle_edges(self, trio_ideal):
        assert hs_oracle(trio_ideal, 0) == trio_ideal
        assert hs_oracle(trio_ideal, 5).is_zero


def subset_complex_betti(I, prime=32003):
    """Independent Betti oracle for small ideals.

    Tensoring the subset-lcm resolution with the residue field leaves, in
    each multidegree a, the complex spanned by the generator subsets F with
    lcm(F) = a, graded by |F| - 1, whose differential keeps exactly the
    deletions that do not change the lcm.  Its homology ranks are the
    multigraded Betti numbers; nothing here is shared with the upper-Koszul
    route except the rank kernel.
    """
    from collections import defaultdict

    import numpy as np

    from polyshift import _kernels

    gens = [g.exponents for g in I.gens]
    m = len(gens)
    by_degree_lcm = defaultdict(lambda: defaultdict(list))
    for size in range(1, m + 1):
        for F in itertools.combinations(range(m), size):
            exps = tuple(max(col) for col in zip(*(gens[i] for i in F)))
            by_degree_lcm[exps][size].append(F)
    table = {}
    for exps, by_size in by_degree_lcm.items():
        max_size = max(by_size)
        ranks = {}
        for size in range(2, max_size + 1):
            upper = by_size.get(size, [])
            lower = by_size.get(size - 1, [])
            if not upper or not lower:
                ranks[size] = 0
                continue
            row_index = {F: r for r, F in enumerate(lower)}
            B = np.zeros((len(lower), len(upper)), dtype=np.int64)
            for ci, F in enumerate(upper):
                full = tuple(max(col) for col in zip(*(gens[i] for i in F)))
                for pos in range(len(F)):
                    sub = F[:pos] + F[pos + 1 :]
                    reduced = tuple(max(col) for col in zip(*(gens[i] for i in sub)))
                    if reduced == full and sub in row_index:
                        B[row_index[sub], ci] = 1 if pos % 2 == 0 else prime - 1
            ranks[size] = _kernels.rank_mod_p(B, prime)
        ranks[max_size + 1] = 0
        for size in range(1, max_size + 1):
            holes = len(by_size.get(size, ())) - ranks.get(size, 0) - ranks.get(
                size + 1, 0
            )
            if holes:
                table[(size - 1, exps)] = holes
    return table


class TestSubsetComplexAgreement:
    def test_matches_homology_oracle_on_corpus(self, fuzz_corpus):
        checked = 0
        for spec, I in fuzz_corpus:
            if I.num_gens > 11:
                continue
            checked += 1
            if checked > 30:
                break
            table = betti_table(I)
            flat = {(i, a.exponents): r for (i, a), r in table.entries.items()}
            assert flat == subset_complex_betti(I)

    def test_matches_on_arbitrary_ideals(self):
        import random

        from util import all_monomials

        rng = random.Random(0x5EED)
        for _ in range(25):
            n = rng.randint(2, 4)
            pool = [m for d in (1, 2, 3) for m in all_monomials(n, d)]
            picked = rng.sample(pool, rng.randint(2, 7))
            I = minimal_generators(picked, n)
            table = betti_table(I)
            flat = {(i, a.exponents): r for (i, a), r in table.entries.items()}
            assert flat == subset_complex_betti(I)


class TestEulerCharacteristic:
    """The alternating sum of ranks at each multidegree must match the
    signed count of generator subsets with that lcm: a full-pipeline check
    against nothing but inclusion-exclusion."""

    @staticmethod
    def signed_subset_counts(I):
        from collections import Counter

        acc = Counter()
        for r in range(1, I.num_gens + 1):
            sign = 1 if r % 2 == 1 else -1
            for subset in itertools.combinations(I.gens, r):
                acc[lcm_many(subset).exponents] += sign
        return {a: v for a, v in acc.items() if v != 0}

    @staticmethod
    def signed_table_counts(table):
        from collections import Counter

        acc = Counter()
        for (i, a), rank in table.entries.items():
            acc[a.exponents] += rank if i % 2 == 0 else -rank
        return {a: v for a, v in acc.items() if v != 0}

    def test_on_fuzz_corpus(self, fuzz_corpus):
        checked = 0
        for spec, I in fuzz_corpus:
            if I.num_gens > 12:
                continue
            checked += 1
            if checked > 40:
                break
            table = betti_table(I)
            assert self.signed_table_counts(table) == self.signed_subset_counts(I)

    def test_on_arbitrary_ideals(self):
        import random

        from util import all_monomials

        rng = random.Random(20260808)
        for _ in range(30):
            n = rng.randint(2, 4)
            pool = [m for d in (1, 2, 3) for m in all_monomials(n, d)]
            picked = rng.sample(pool, rng.randint(2, 8))
            I = minimal_generators(picked, n)
            table = betti_table(I)
            assert self.signed_table_counts(table) == self.signed_subset_counts(I)
            assert table.pd <= min(I.num_gens - 1, I.n - 1)
            if I.is_squarefree:
                assert all(a.is_squarefree for (_, a) in table.entries)


class TestCrossPrime:
    def test_example_agrees(self, example_ideal):
        assert cross_prime_agreement(example_ideal)

    def test_small_random_instances(self, fuzz_corpus):
        for spec, I in fuzz_corpus[:15]:
            assert cross_prime_agreement(I)


class TestEliahouKervaire:
    def test_variable_ideal(self):
        I = ideal("[x1, x2, x3]")
        totals, pd = ek_betti(I)
        assert totals == {0: 3, 1: 3, 2: 1}
        assert pd == 2
        assert betti_table(I).totals() == totals

    def test_pure_power(self):
        totals, pd = ek_betti(ideal("[x1^4] n=1"))
        assert totals == {0: 1}
        assert pd == 0

    def test_borel_closure_cross_checked(self):
        I = borel_closure([M("x2*x3", 3)])
        totals, pd = ek_betti(I)
        assert pd == 2
        assert max(g.max_var for g in I.gens) == 3
        oracle = betti_table(I)
        assert oracle.totals() == totals
        assert oracle.pd == pd

    def test_rejects_unstable(self):
        with pytest.raises(NotStronglyStableError):
            ek_betti(ideal("[x2] n=2"))


class TestKernels:
    def test_rank_implementations_agree(self):
        rng = np.random.default_rng(3)
        for _ in range(25):
            rows = rng.integers(1, 12)
            cols = rng.integers(1, 12)
            a = rng.integers(-5, 6, size=(rows, cols))
            for p in (2, 101, 32003):
                expected = _kernels._rank_mod_p_numpy(
                    np.array(a, dtype=np.int64) % p, p
                )
                assert _kernels.rank_mod_p(a, p) == expected

    def test_rank_known_values(self):
        identity = np.eye(4, dtype=np.int64)
        assert _kernels.rank_mod_p(identity, 101) == 4
        assert _kernels.rank_mod_p(np.zeros((3, 5), dtype=np.int64), 101) == 0
        # rank collapses mod 2
        assert _kernels.rank_mod_p(2 * identity, 2) == 0

    def test_contains_implementations_agree(self):
        rng = np.random.default_rng(5)
        gens = rng.integers(0, 3, size=(7, 4)).astype(np.int64)
        targets = rng.integers(0, 5, size=(40, 4)).astype(np.int64)
        fast = _kernels.contains_mask(gens, targets)
        slow = _kernels._contains_mask_numpy(gens, targets)
        assert np.array_equal(fast, slow)

    def test_pure_numpy_env_flag(self, tmp_path):
        import subprocess
        import sys

        code = (
            "from polyshift import _kernels; import numpy as np;"
            "assert not _kernels.HAVE_NUMBA;"
            "a = np.eye(3, dtype=np.int64);"
            "assert _kernels.rank_mod_p(a, 101) == 3;"
            "print('ok')"
        )
        out = subprocess.run(
            [sys.executable, "-c", code],
            capture_output=True,
            text=True,
            env={"POLYSHIFT_PURE_NUMPY": "1", "PATH": "/usr/bin:/bin"},
        )
        assert out.returncode == 0, out.stderr
        assert out.stdout.strip() == "ok"
