"""Exhaustive instance families: connected graphs and small formulas.

Graph counts are checked against the classic inclusion-exclusion
recurrence for labeled connected graphs, so no count here is copied from
the enumerator under test.
"""

import itertools

import pytest

import rvckit as rk
from rvckit.errors import SizeLimitError, ValidationError

import helpers


class TestGraphEnumeration:
    def test_counts_match_recurrence(self):
        for n in range(1, 7):
            got = sum(1 for _ in rk.enumerate_connected_graphs(n))
            assert got == helpers.count_connected_graphs(n), n

    def test_all_connected_and_distinct(self):
        for n in range(1, 5):
            seen = set()
            for g in rk.enumerate_connected_graphs(n):
                assert g.n == n
                assert helpers.dfs_connected(g)
                assert g.edges not in seen
                seen.add(g.edges)

    def test_lexicographic_edge_set_order(self):
        graphs = list(rk.enumerate_connected_graphs(4))
        keys = [g.edges for g in graphs]
        assert keys == sorted(keys)

    def test_first_and_last_on_three_vertices(self):
        graphs = list(rk.enumerate_connected_graphs(3))
        assert graphs[0].edges == ((1, 2), (1, 3))
        assert graphs[-1].edges == ((1, 3), (2, 3))

    def test_order_limits(self):
        with pytest.raises(SizeLimitError):
            rk.enumerate_connected_graphs(8)
        with pytest.raises(ValidationError):
            rk.enumerate_connected_graphs(0)


class TestCnfEnumeration:
    def test_single_clause_family(self):
        fs = list(rk.enumerate_small_cnf(3, 1))
        assert len(fs) == 8  # every sign pattern on {x1, x2, x3}
        assert len({f.clauses for f in fs}) == 8
        for f in fs:
            assert f.num_vars == 3
            assert len(f.clauses) == 1
            assert len(f.clauses[0]) == 3

    def test_growth_with_clause_budget(self):
        # 8 single-clause formulas plus C(8,2) two-clause sets
        fs = list(rk.enumerate_small_cnf(3, 2))
        assert len(fs) == 8 + 28

    def test_normalized_filter(self):
        fs = list(rk.enumerate_small_cnf(3, 2, normalized_only=True))
        # two 3-clauses cover both polarities of all three variables only
        # when one is the literal-wise complement of the other
        assert len(fs) == 4
        for f in fs:
            prof = rk.occurrence_profile(f)
            assert set(prof.pos) == {1, 2, 3}
            assert set(prof.neg) == {1, 2, 3}

    def test_normalized_three_clause_count(self):
        fs = list(rk.enumerate_small_cnf(3, 3, normalized_only=True))
        assert len(fs) == 36

    def test_mixed_clause_sizes(self):
        fs = list(rk.enumerate_small_cnf(1, 2, clause_sizes=(1,)))
        assert [f.clauses for f in fs] == [((1,),), ((-1,),), ((1,), (-1,))]

    def test_tiny_normalized_families(self):
        # the strict filter needs every variable up to the limit in both
        # polarities, so the variable counts enumerate separately
        one = list(rk.enumerate_small_cnf(1, 2, normalized_only=True, clause_sizes=(1, 2)))
        assert [f.clauses for f in one] == [((1,), (-1,))]
        two = list(rk.enumerate_small_cnf(2, 2, normalized_only=True, clause_sizes=(1, 2)))
        assert [f.clauses for f in two] == [
            ((1, 2), (-2, -1)),
            ((-1, 2), (-2, 1)),
        ]

    def test_formulas_are_canonical(self):
        for f in rk.enumerate_small_cnf(2, 2, clause_sizes=(1, 2)):
            rebuilt = rk.build_formula(f.num_vars, [list(c) for c in f.clauses])
            assert rebuilt == f

    def test_var_limit(self):
        with pytest.raises(SizeLimitError):
            rk.enumerate_small_cnf(4, 1)

    def test_clause_limit(self):
        with pytest.raises(SizeLimitError):
            rk.enumerate_small_cnf(3, 5)

    def test_bad_clause_size(self):
        with pytest.raises(ValidationError):
            list(rk.enumerate_small_cnf(3, 1, clause_sizes=(4,)))

    def test_bad_counts(self):
        with pytest.raises(ValidationError):
            rk.enumerate_small_cnf(0, 1)
        with pytest.raises(ValidationError):
            rk.enumerate_small_cnf(1, 0)


class TestBlockerFormula:
    def test_eight_full_sign_clauses(self):
        f = rk.unsat_full_sign_formula()
        assert f.num_vars == 3
        assert len(f.clauses) == 8
        assert len(set(f.clauses)) == 8
        for clause in f.clauses:
            assert sorted(abs(l) for l in clause) == [1, 2, 3]

    def test_unsatisfiable_but_normalized(self):
        f = rk.unsat_full_sign_formula()
        assert rk.is_normalized(f)
        assert not rk.brute_force_sat(f).sat

    def test_every_assignment_blocked_by_exactly_one_clause(self):
        f = rk.unsat_full_sign_formula()
        for bits in itertools.product((0, 1), repeat=3):
            a = {j: bits[j - 1] for j in range(1, 4)}
            falsified = [
                c
                for c in f.clauses
                if not any((a[abs(l)] == 1) == (l > 0) for l in c)
            ]
            assert len(falsified) == 1
