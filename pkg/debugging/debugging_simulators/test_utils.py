"""
Tests for simulators/utils.py
"""

import os

import numpy as np

from simulators.initial_data import gaussian_data
from simulators.utils import (
    STATE_HEADER,
    create_folder_structure,
    init_print_override,
    read_final_state,
    restore_print_override,
    set_seed,
    write_final_state,
)
from spectral.grid import Grid


def test_final_state_dump(tmp_path):
    grid = Grid(64, 12.5)
    state = gaussian_data(grid, amp_u=0.3, amp_eta=-0.1, width=2.0, center=1.0)
    path = tmp_path / "final_state.bin"
    write_final_state(state, 7.25, path)

    assert os.path.getsize(path) == STATE_HEADER.size + 2 * 64 * 8
    loaded, t = read_final_state(path)
    assert t == 7.25
    assert loaded.grid == grid
    assert loaded.distance(state) == 0.0


def test_set_seed_is_reproducible():
    first = set_seed(3).normal(size=4)
    second = set_seed(3).normal(size=4)
    assert np.array_equal(first, second)


def test_create_folder_structure(tmp_path):
    target = tmp_path / "a" / "b"
    create_folder_structure({"output_dir": str(target)})
    create_folder_structure({"output_dir": str(target)})
    assert target.is_dir()


def test_print_override_silences_other_ranks(monkeypatch, capsys):
    monkeypatch.setenv("SWEEP_RANK", "2")
    original = init_print_override()
    try:
        print("hidden")
    finally:
        restore_print_override(original)
    monkeypatch.setenv("SWEEP_RANK", "0")
    original = init_print_override()
    try:
        print("shown")
    finally:
        restore_print_override(original)
    out = capsys.readouterr().out
    assert "hidden" not in out
    assert "shown" in out
