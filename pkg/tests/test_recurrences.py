import pytest

from cactusids.chains import ChainSpec, Family, LINEAR_FAMILIES, build_chain
from cactusids.graphs import count_boundary_classes, count_ids
from cactusids.recurrences import (
    LinearRecurrence,
    eval_recurrence,
    measured_extendable_seed,
    paper_recurrence,
    paper_transfer_system,
    run_transfer,
    state_trajectory,
)


class TestTransferSystems:
    def test_triangular_transcription(self):
        ts = paper_transfer_system(Family.TRIANGULAR)
        assert ts.update_matrix == ((0, 1), (1, 1))
        assert ts.initial_vector == (1, 2)
        assert ts.output_weights == (1, 1)

    def test_square_ortho_transcription(self):
        ts = paper_transfer_system(Family.SQUARE_ORTHO)
        assert ts.update_matrix == ((0, 1, 1), (1, 1, 0), (0, 1, 1))
        assert ts.initial_vector == (1, 1, 1)  # third seed measured on C4

    def test_hex_ortho_transcription(self):
        ts = paper_transfer_system(Family.HEX_ORTHO)
        assert ts.update_matrix == ((0, 2, 2), (2, 2, 1), (0, 1, 1))
        assert ts.initial_vector == (2, 3, 1)  # third seed measured on C6

    def test_measured_seeds(self):
        for family in LINEAR_FAMILIES:
            if family is Family.TRIANGULAR:
                continue
            assert measured_extendable_seed(family) == 1

    def test_defect_family_rejected(self):
        with pytest.raises(ValueError):
            paper_transfer_system(Family.PARA_CHAIN_ORTHO_DEFECT)


class TestRunTransfer:
    def test_examples(self):
        tri = paper_transfer_system(Family.TRIANGULAR)
        assert run_transfer(tri, 1) == 3
        assert run_transfer(tri, 2) == 5
        assert run_transfer(paper_transfer_system(Family.SQUARE_PARA), 3) == 7

    def test_invalid_length(self):
        with pytest.raises(ValueError):
            run_transfer(paper_transfer_system(Family.TRIANGULAR), 0)

    def test_trajectories(self):
        assert state_trajectory(paper_transfer_system(Family.SQUARE_PARA), 2) == [
            (1, 1, 1),
            (2, 2, 1),
        ]
        assert state_trajectory(paper_transfer_system(Family.TRIANGULAR), 3) == [
            (1, 2),
            (2, 3),
            (3, 5),
        ]
        assert state_trajectory(paper_transfer_system(Family.SQUARE_ORTHO), 2) == [
            (1, 1, 1),
            (2, 2, 2),
        ]

    def test_matrix_power_consistency(self):
        for family in LINEAR_FAMILIES:
            ts = paper_transfer_system(family)
            n = 9
            traj = state_trajectory(ts, n)
            power = _mat_power(ts.update_matrix, n - 1)
            direct = tuple(
                sum(power[i][j] * ts.initial_vector[j] for j in range(len(power)))
                for i in range(len(power))
            )
            assert traj[n - 1] == direct

    def test_output_weights_select_count_states(self):
        for family in LINEAR_FAMILIES:
            ts = paper_transfer_system(family)
            assert ts.output_weights[:2] == (1, 1)
            assert all(w == 0 for w in ts.output_weights[2:])


def _mat_power(matrix, e):
    k = len(matrix)
    result = [[int(i == j) for j in range(k)] for i in range(k)]
    base = [list(r) for r in matrix]
    while e:
        if e & 1:
            result = _mat_mul(result, base)
        base = _mat_mul(base, base)
        e >>= 1
    return result


def _mat_mul(a, b):
    k = len(a)
    return [
        [sum(a[i][t] * b[t][j] for t in range(k)) for j in range(k)] for i in range(k)
    ]


class TestAgainstOracle:
    ORACLE_RANGE = {
        Family.TRIANGULAR: 7,
        Family.SQUARE_PARA: 5,
        Family.SQUARE_ORTHO: 5,
        Family.HEX_ORTHO: 3,
        Family.HEX_META: 3,
        Family.HEX_PARA: 3,
    }

    @pytest.mark.parametrize("family", LINEAR_FAMILIES)
    def test_counts_match(self, family):
        ts = paper_transfer_system(family)
        for n in range(1, self.ORACLE_RANGE[family] + 1):
            chain = build_chain(ChainSpec(family, length=n))
            assert run_transfer(ts, n) == count_ids(chain.graph)

    @pytest.mark.parametrize("family", LINEAR_FAMILIES)
    def test_boundary_classes_match_states(self, family):
        ts = paper_transfer_system(family)
        k = len(ts.state_names)
        traj = state_trajectory(ts, self.ORACLE_RANGE[family])
        for n in range(1, self.ORACLE_RANGE[family] + 1):
            chain = build_chain(ChainSpec(family, length=n))
            observed = count_boundary_classes(chain.graph, chain.terminal_vertex)
            assert tuple(observed)[:k] == traj[n - 1]


class TestPaperRecurrences:
    def test_transcriptions(self):
        hex_ortho = paper_recurrence(Family.HEX_ORTHO)
        assert hex_ortho.coefficients == (3, 3)
        assert dict(hex_ortho.initial_terms) == {1: 5, 2: 19}

        hex_para = paper_recurrence(Family.HEX_PARA)
        assert hex_para.coefficients == (6, -9, 6, -1)
        assert dict(hex_para.initial_terms) == {0: 4, 1: 5, 2: 19, 3: 76}
        assert hex_para.formal_indices == frozenset({0})

        sq_ortho = paper_recurrence(Family.SQUARE_ORTHO)
        assert sq_ortho.coefficients == (2,)
        assert dict(sq_ortho.initial_terms) == {0: 1}
        assert sq_ortho.valid_from == 1

    def test_eval_examples(self):
        assert eval_recurrence(paper_recurrence(Family.TRIANGULAR), 4) == 13
        assert eval_recurrence(paper_recurrence(Family.SQUARE_ORTHO), 5) == 32
        # printed order-4 recurrence continues differently from the true counts
        assert eval_recurrence(paper_recurrence(Family.HEX_PARA), 4) == 311

    def test_initial_lookup_and_errors(self):
        rec = paper_recurrence(Family.TRIANGULAR)
        assert eval_recurrence(rec, 0) == 2
        assert eval_recurrence(rec, 1) == 3
        assert eval_recurrence(rec, 2) == 5  # bridged by the recurrence itself
        with pytest.raises(ValueError):
            eval_recurrence(rec, -1)

    def test_incomplete_initials(self):
        rec = LinearRecurrence((1, 1), ((0, 1),), 2)
        with pytest.raises(ValueError):
            eval_recurrence(rec, 3)

    def test_duplicate_initials_rejected(self):
        with pytest.raises(ValueError):
            LinearRecurrence((1,), ((0, 1), (0, 2)), 1)
