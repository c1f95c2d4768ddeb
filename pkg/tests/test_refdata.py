"""Bundled reference data: integrity and internal consistency."""

from __future__ import annotations

import pytest

from laneflow import size_biased_expectation
from laneflow.errors import RowUnusable
from laneflow.refdata import (
    SAMPLE_LABELS,
    load_dispersion_reference,
    load_metro_registrations,
    load_sample_tables,
    load_token_samples,
)

ROW_1 = (840, 895, 268, 209, 2855, 3014, 551)


class TestTokenSamples:
    def test_shape(self):
        table = load_token_samples()
        assert table.labels == SAMPLE_LABELS
        assert len(table.rows) == 10
        assert [r.name for r in table.rows] == [f"S{i}" for i in range(1, 11)]

    def test_first_row_values(self):
        table = load_token_samples()
        counts = table.usable_counts("S1")
        assert counts.counts == ROW_1
        assert counts.total == 8632

    def test_every_row_is_usable(self):
        table = load_token_samples()
        for i in range(1, 11):
            assert table.usable_counts(i).total > 0


class TestMetroRegistrations:
    def test_shape(self):
        table = load_metro_registrations()
        assert len(table.labels) == 12
        assert len(table.rows) == 23
        assert table.labels[0] == "All Vehicles"

    def test_missing_cells_block_sampling(self):
        table = load_metro_registrations()
        with pytest.raises(RowUnusable):
            table.usable_counts("Calcutta")

    def test_merged_cell_is_annotated(self):
        table = load_metro_registrations()
        delhi = table.row("Delhi")
        jeeps = table.labels.index("Jeeps")
        assert delhi.merged_into_cars == ("Jeeps",)
        assert delhi.counts[jeeps] == 0
        assert delhi.counts[table.labels.index("Cars")] == 633852

    def test_clean_row_round_trips(self):
        table = load_metro_registrations()
        mumbai = table.row("Mumbai")
        assert mumbai.counts[table.labels.index("Three Wheelers Goods")] == 25327
        assert mumbai.counts[table.labels.index("Taxis")] == 44842
        assert mumbai.usable


class TestSampleTables:
    def test_shape(self):
        rows = load_sample_tables()
        assert len(rows) == 50
        assert sorted({r.sample_size for r in rows}) == [20, 25, 30, 40, 50]
        for size in (20, 25, 30, 40, 50):
            assert sum(1 for r in rows if r.sample_size == size) == 10

    def test_labels_everywhere(self):
        for row in load_sample_tables():
            assert row.counts.labels == SAMPLE_LABELS

    def test_expectation_column_is_self_consistent(self):
        # the stored expectation must match recomputation from the stored counts
        for row in load_sample_tables():
            recomputed = size_biased_expectation(row.counts.counts, row.sample_size)
            assert recomputed == pytest.approx(row.expectation, abs=5e-3), (
                row.sample_size,
                row.row,
            )

    def test_reconstruction_flags(self):
        rows = load_sample_tables()
        for row in rows:
            if row.sample_size == 50:
                assert row.reconstructed == {"Cars", "Motor Cycle"}
            else:
                assert row.reconstructed == frozenset()

    def test_transcribed_cells_drop_reconstructed_labels(self):
        rows = load_sample_tables()
        full = next(r for r in rows if r.sample_size == 20)
        assert len(full.transcribed_cells()) == 7
        partial = next(r for r in rows if r.sample_size == 50)
        cells = partial.transcribed_cells()
        assert len(cells) == 5
        assert all(label not in ("Cars", "Motor Cycle") for label, _ in cells)

    def test_known_row(self):
        rows = load_sample_tables()
        target = next(r for r in rows if r.sample_size == 20 and r.row == 1)
        assert target.counts.counts == (2, 2, 1, 0, 7, 7, 1)
        assert target.expectation == pytest.approx(5.4)


class TestDispersionReference:
    def test_shape(self):
        entries = load_dispersion_reference()
        assert len(entries) == 50
        for size in (20, 25, 30, 40, 50):
            assert sum(1 for s, _ in entries if s == size) == 10

    def test_values_positive(self):
        assert all(value > 0 for _, value in load_dispersion_reference())
