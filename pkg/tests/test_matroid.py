from itertools import chain, combinations

import numpy as np
import pytest

from core.exceptions import EnumerationCapExceeded, GroundSetMismatchError, SpecError
from exactlin import ExactMatrix
from matroid import (
    GroundSet,
    MatroidPartitioner,
    PartitionCertificate,
    PartitionFailure,
    Provenance,
    column_matroid,
    complete_graph_edges,
    explicit,
    graphic,
    matroid_union,
    partition_certificate,
    self_union,
    uniform,
    union_rank_bruteforce,
    weak_order_leq,
    weak_order_strict,
)


def _all_subsets(n):
    return chain.from_iterable(combinations(range(n), k) for k in range(n + 1))


def _labels(n):
    return [f"z{i}" for i in range(1, n + 1)]


SUMMAND_CASES = [
    lambda: [graphic(complete_graph_edges(4), labels=_labels(6)), uniform(6, 1)],
    lambda: [graphic([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5)])] * 2,
    lambda: [uniform(5, 1), uniform(5, 1), explicit([[0, 1]], _labels(5))],
    lambda: [uniform(7, 2), graphic([(1, 2), (2, 3), (1, 3), (3, 4), (4, 1), (2, 2), (1, 2)], labels=_labels(7))],
]


class TestConstructors:
    def test_uniform(self):
        m = uniform(4, 2)
        assert m.full_rank == 2
        assert len(m.enumerate_bases()) == 6
        assert m.loops_and_coloops() == (frozenset(), frozenset())

    def test_free_matroid_is_all_coloops(self):
        loops, coloops = uniform(3, 3).loops_and_coloops()
        assert loops == frozenset()
        assert coloops == frozenset({0, 1, 2})

    def test_uniform_rejects_bad_rank(self):
        with pytest.raises(SpecError):
            uniform(3, 4)

    @pytest.mark.parametrize("n, bases", [(3, 3), (4, 16), (5, 125)])
    def test_complete_graph_spanning_trees(self, n, bases):
        m = graphic(complete_graph_edges(n))
        assert m.full_rank == n - 1
        assert len(m.enumerate_bases()) == bases
        assert m.provenance == Provenance.GRAPHIC

    def test_graph_self_loop_is_a_loop(self):
        m = graphic([(1, 2), (2, 2), (2, 3)])
        loops, coloops = m.loops_and_coloops()
        assert loops == frozenset({1})
        assert coloops == frozenset({0, 2})

    def test_column_matroid(self):
        m = column_matroid(ExactMatrix.rational([[1, 0, 1, 0], [0, 1, 1, 0]]))
        assert m.full_rank == 2
        assert m.ground.labels == ("z1", "z2", "z3", "z4")
        assert m.loops_and_coloops()[0] == frozenset({3})
        assert m.enumerate_bases() == [(0, 1), (0, 2), (1, 2)]

    def test_explicit(self):
        m = explicit([[0, 1], [0, 2]], ["a", "b", "c"])
        assert m.rank(["b", "c"]) == 1
        assert m.is_independent(["a", "c"])
        assert m.loops_and_coloops()[1] == frozenset({0})

    def test_explicit_rejects_mixed_sizes(self):
        with pytest.raises(SpecError):
            explicit([[0, 1], [2]], ["a", "b", "c"])


class TestRankOracle:
    def test_rank_by_labels_and_indices(self):
        m = uniform(4, 2, labels=["a", "b", "c", "d"])
        assert m.rank(["a", 1, "c"]) == 2
        assert m.rank([]) == 0

    def test_unknown_label(self):
        with pytest.raises(SpecError):
            uniform(2, 1).rank(["nope"])

    def test_out_of_range_index(self):
        with pytest.raises(SpecError):
            uniform(2, 1).rank([5])

    def test_duplicate_labels(self):
        with pytest.raises(SpecError):
            GroundSet(("a", "a"))

    def test_enumeration_cap(self):
        with pytest.raises(EnumerationCapExceeded) as info:
            uniform(4, 2).enumerate_bases(cap=3)
        assert (info.value.size, info.value.cap) == (4, 3)

    def test_bases_are_lexicographic(self):
        bases = uniform(5, 3).enumerate_bases()
        assert bases == sorted(bases)
        assert bases[0] == (0, 1, 2)

    def test_document(self):
        doc = uniform(3, 2).to_document(with_bases=True)
        assert doc.rank == 2
        assert doc.bases == [[0, 1], [0, 2], [1, 2]]
        assert doc.parameters is None

    def test_document_without_bases_keeps_parameters(self):
        doc = uniform(3, 2).to_document()
        assert doc.bases is None
        assert doc.parameters == {"n": 3, "r": 2}


class TestUnion:
    def test_union_of_uniforms(self):
        m = matroid_union([uniform(5, 2), uniform(5, 1)])
        assert m.full_rank == 3
        assert m.provenance == Provenance.UNION
        assert len(m.enumerate_bases()) == 10

    def test_two_spanning_trees_of_k4(self):
        assert self_union(graphic(complete_graph_edges(4)), 2).full_rank == 6

    def test_k5_pairs(self):
        # K5 has 10 edges; two edge-disjoint spanning trees cover 8 of them.
        assert self_union(graphic(complete_graph_edges(5)), 2).full_rank == 8

    @pytest.mark.parametrize("summands", SUMMAND_CASES)
    def test_partitioner_matches_bruteforce(self, summands):
        matroids = summands()
        partitioner = MatroidPartitioner(matroids)
        for subset in _all_subsets(matroids[0].size):
            assert partitioner.union_rank(subset) == union_rank_bruteforce(matroids, subset)

    @pytest.mark.parametrize("summands", SUMMAND_CASES)
    def test_certificate_exactly_on_union_independent_sets(self, summands):
        matroids = summands()
        for subset in _all_subsets(matroids[0].size):
            result = partition_certificate(matroids, subset)
            independent = union_rank_bruteforce(matroids, subset) == len(subset)
            assert isinstance(result, PartitionCertificate) == independent
            if independent:
                assert sorted(e for part in result.parts for e in part) == list(subset)
                assert all(m.is_independent(part) for m, part in zip(matroids, result.parts))
            else:
                assert result.union_rank == union_rank_bruteforce(matroids, subset)

    def test_ground_mismatch(self):
        with pytest.raises(GroundSetMismatchError):
            matroid_union([uniform(3, 1), uniform(4, 1)])

    def test_certificate(self):
        matroids = [graphic(complete_graph_edges(4))] * 2
        cert = partition_certificate(matroids, range(6))
        assert isinstance(cert, PartitionCertificate)
        flattened = sorted(e for part in cert.parts for e in part)
        assert flattened == list(range(6))
        for m, part in zip(matroids, cert.parts):
            assert m.is_independent(part)

    def test_certificate_failure(self):
        result = partition_certificate([uniform(3, 1)] * 2, ["z1", "z2", "z3"])
        assert isinstance(result, PartitionFailure)
        assert result.union_rank == 2
        doc = result.to_document(uniform(3, 1).ground)
        assert doc.independent is False
        assert doc.parts is None


class TestWeakOrder:
    def test_uniform_chain(self):
        assert weak_order_leq(uniform(4, 2), uniform(4, 3))
        assert weak_order_strict(uniform(4, 2), uniform(4, 3))
        assert not weak_order_leq(uniform(4, 3), uniform(4, 2))

    def test_reflexive_not_strict(self):
        m = graphic(complete_graph_edges(4))
        assert weak_order_leq(m, m)
        assert not weak_order_strict(m, m)

    def test_same_rank_fewer_bases(self):
        labels = ["z1", "z2", "z3"]
        smaller = explicit([[0, 1], [0, 2]], labels)
        assert weak_order_strict(smaller, uniform(3, 2, labels=labels))
        assert not weak_order_leq(uniform(3, 2, labels=labels), smaller)

    def test_union_sits_above_summands(self):
        m = graphic(complete_graph_edges(4))
        assert weak_order_leq(m, self_union(m, 2))

    def test_ground_mismatch(self):
        with pytest.raises(GroundSetMismatchError):
            weak_order_leq(uniform(3, 1), uniform(3, 1, labels=["a", "b", "c"]))

    def test_transitive_on_sampled_triples(self):
        rng = np.random.default_rng(5)
        family = [uniform(5, r) for r in range(6)]
        family += [graphic([(1, 2), (2, 3), (1, 3), (3, 4), (4, 4)], labels=_labels(5))]
        family += [explicit([[0, 1], [0, 2], [1, 2]], _labels(5))]
        for _ in range(6):
            rows = rng.integers(-1, 2, size=(int(rng.integers(1, 4)), 5)).tolist()
            family.append(column_matroid(ExactMatrix.rational(rows)))
        for _ in range(300):
            a, b, c = (family[i] for i in rng.integers(0, len(family), size=3))
            if weak_order_leq(a, b) and weak_order_leq(b, c):
                assert weak_order_leq(a, c)


CONSTRUCTED = {
    "uniform": lambda: uniform(6, 3),
    "free": lambda: uniform(4, 4),
    "graphic K4": lambda: graphic(complete_graph_edges(4)),
    "graphic with loop and parallel edge": lambda: graphic([(1, 2), (1, 2), (2, 3), (3, 3), (3, 4), (4, 1)], labels=_labels(6)),
    "column": lambda: column_matroid(ExactMatrix.rational([[1, 0, 1, 2, 0, 1, 0], [0, 1, 1, 2, 0, 0, 1], [0, 0, 0, 0, 0, 1, 1]])),
    "explicit": lambda: explicit([[0, 1], [0, 2], [1, 2], [0, 3], [1, 3]], _labels(4)),
    "union": lambda: matroid_union([graphic(complete_graph_edges(4), labels=_labels(6)), uniform(6, 2)]),
    "self union": lambda: self_union(graphic([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (5, 3), (1, 5), (2, 4)]), 2),
}


class TestRankAxioms:
    @pytest.mark.parametrize("name", sorted(CONSTRUCTED))
    def test_constructed_matroids(self, name, rank_axioms):
        rank_axioms(CONSTRUCTED[name]())
