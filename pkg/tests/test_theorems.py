import pytest

from vislab.graph_core import VertexSet
from vislab.theorems import (
    CORPUS_SEED,
    SUITES,
    BinaryMatrix,
    CheckReport,
    SuiteConfig,
    block_corpus,
    cross_matrix,
    format_reports,
    format_reports_machine,
    gadget_instances,
    has_constant_2x2,
    is_22_saturated,
    matrix_of_set,
    min_saturated_ones,
    mv_matrix_equivalence,
    named_corpus,
    random_corpus,
    run_suite,
    set_of_matrix,
    tree_corpus,
)


class TestBinaryMatrix:
    def test_validation(self):
        with pytest.raises(ValueError, match="at least one row"):
            BinaryMatrix(())
        with pytest.raises(ValueError, match="ragged"):
            BinaryMatrix(((0, 1), (0,)))
        with pytest.raises(ValueError, match="0 or 1"):
            BinaryMatrix(((0, 2),))

    def test_shape_and_ones(self):
        mat = BinaryMatrix.from_lists([[1, 0, 1], [0, 0, 1]])
        assert (mat.m, mat.n, mat.ones()) == (2, 3, 3)

    def test_bijection_exhaustive(self):
        m, n = 2, 3
        for mask in range(1 << (m * n)):
            x = VertexSet(m * n, mask)
            assert set_of_matrix(matrix_of_set(m, n, x)) == x

    def test_layout_row_major(self):
        x = VertexSet.from_ids(6, [0, 4])
        mat = matrix_of_set(2, 3, x)
        assert mat.rows == ((1, 0, 0), (0, 1, 0))


class TestMatrixPredicates:
    def test_identity_has_no_block(self):
        eye = BinaryMatrix.from_lists([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
        assert not has_constant_2x2(eye)

    def test_all_ones_2x2(self):
        assert has_constant_2x2(BinaryMatrix.from_lists([[1, 1], [1, 1]]))

    def test_cross_is_clean_and_saturated(self):
        for m, n in ((3, 4), (4, 5), (2, 2)):
            mat = cross_matrix(m, n)
            assert mat.ones() == m + n - 1
            assert not has_constant_2x2(mat)
            assert is_22_saturated(mat)

    def test_zero_matrix_not_saturated(self):
        assert not is_22_saturated(BinaryMatrix.from_lists([[0, 0], [0, 0]]))

    def test_saturation_precondition(self):
        with pytest.raises(ValueError, match="already contains"):
            is_22_saturated(BinaryMatrix.from_lists([[1, 1], [1, 1]]))

    def test_single_row_saturated_means_full(self):
        assert is_22_saturated(BinaryMatrix.from_lists([[1, 1, 1]]))
        assert not is_22_saturated(BinaryMatrix.from_lists([[1, 0, 1]]))

    def test_min_saturated_ones(self):
        assert min_saturated_ones(3, 3) == 5
        assert min_saturated_ones(3, 4) == 6
        assert min_saturated_ones(2, 2) == 3

    def test_cell_caps(self):
        with pytest.raises(ValueError, match="capped"):
            min_saturated_ones(5, 4)
        with pytest.raises(ValueError, match="capped"):
            mv_matrix_equivalence(5, 4)

    def test_equivalence_small(self):
        rep = mv_matrix_equivalence(2, 2)
        assert rep.status == "pass"
        assert rep.computed.startswith("0 mismatches")


class TestCorpora:
    def test_random_corpus_shape(self):
        corpus = random_corpus()
        assert len(corpus) == 60
        sizes = {g.n for _, g in corpus}
        assert sizes == set(range(4, 10))

    def test_random_corpus_deterministic(self):
        a = random_corpus(CORPUS_SEED)
        b = random_corpus(CORPUS_SEED)
        assert [(lbl, list(g.edges())) for lbl, g in a] == [
            (lbl, list(g.edges())) for lbl, g in b
        ]

    def test_block_and_tree_corpora(self):
        assert len(block_corpus()) == 20
        assert len(tree_corpus()) == 10
        assert len(block_corpus(count=5)) == 5

    def test_named_corpus(self):
        corpus = named_corpus()
        assert len(corpus) == 20
        labels = [lbl for lbl, _ in corpus]
        assert len(set(labels)) == 20

    def test_gadget_instances_capped_candidates(self):
        from vislab.visibility import tmv_candidates

        for label, g, expected in gadget_instances():
            assert len(tmv_candidates(g)) <= SuiteConfig().solver_cap, label


class TestSuites:
    def test_unknown_suite(self):
        with pytest.raises(ValueError, match="unknown suite"):
            run_suite("everything")

    def test_suite_names_frozen(self):
        assert SUITES == ("closed-forms", "matrix", "characterizations", "all")

    @pytest.mark.parametrize("suite", SUITES)
    def test_no_failures(self, suite):
        reports = run_suite(suite)
        bad = [r for r in reports if r.status == "fail"]
        assert bad == [], format_reports(bad)

    def test_sorted_by_name_then_instance(self):
        reports = run_suite("matrix")
        keys = [(r.name, r.instance) for r in reports]
        assert keys == sorted(keys)

    def test_all_combines_without_duplicates(self):
        all_rows = run_suite("all")
        keys = [(r.name, r.instance) for r in all_rows]
        assert len(keys) == len(set(keys))
        closed = {(r.name, r.instance) for r in run_suite("closed-forms")}
        matrix = {(r.name, r.instance) for r in run_suite("matrix")}
        assert set(keys) == closed | matrix

    def test_every_row_documents_its_claim(self):
        for r in run_suite("all"):
            assert r.claim.strip()
            assert r.expected.strip()

    def test_skip_counts_as_passed(self):
        rep = CheckReport("x", "y", "1", "skipped: capped", "SKIPPED", "c", 0.0)
        assert rep.passed
        rep = CheckReport("x", "y", "1", "2", "fail", "c", 0.0)
        assert not rep.passed


class TestFormatting:
    def runs(self):
        return [
            CheckReport("alpha", "K3", "3", "3", "pass", "c1", 0.1),
            CheckReport("beta-long-name", "P2", "0", "skipped: capped", "SKIPPED", "c2", 0.2),
        ]

    def test_table(self):
        text = format_reports(self.runs())
        lines = text.splitlines()
        assert lines[0].startswith("name")
        assert set(lines[1]) == {"-", " "}
        assert lines[2].startswith("alpha")
        assert text.endswith("\n")
        # no trailing spaces anywhere
        assert all(line == line.rstrip() for line in lines)

    def test_machine(self):
        text = format_reports_machine(self.runs())
        lines = text.splitlines()
        assert lines[0] == "alpha\tK3\t3\t3\tpass"
        assert lines[1].split("\t")[4] == "SKIPPED"

    def test_machine_empty(self):
        assert format_reports_machine([]) == ""
