"""Utilities for the simulator"""

import os
import struct

import numpy as np
from prettytable import PrettyTable

from simulators.state import FieldPair
from spectral.grid import Grid

# little-endian int64 N, float64 L, float64 t
STATE_HEADER = struct.Struct("<qdd")


def set_seed(seed):
    """Seed the global numpy generator and return a fresh Generator"""
    np.random.seed(seed)
    return np.random.default_rng(seed)


def create_folder_structure(path_config):
    """
    Create the output root.
    """
    if not os.path.exists(path_config["output_dir"]):
        os.makedirs(path_config["output_dir"])


def init_print_override():
    '''
    Overriding the print function is useful when running sweeps.
    This way, only rank 0 prints to the console.
    '''
    import builtins as __builtin__

    original_print = __builtin__.print

    def print(*args, **kwargs):
        if os.getenv('SWEEP_RANK', '0') == '0':
            original_print(*args, **kwargs)

    __builtin__.print = print

    return original_print


def restore_print_override(original_print):
    '''
    Restore the original print function.
    '''
    import builtins as __builtin__
    __builtin__.print = original_print


# Function to print one diagnostics snapshot
def print_diagnostics(step, record):
    table = PrettyTable(["Observable", "Value"])
    for name in ("E", "P", "H", "Q", "SQ", "NQ", "E_loc", "localH1", "lambda_t", "boundary_flag"):
        table.add_row([name, f"{getattr(record, name):.10g}"])
    print(f"Step {step}, t = {record.t:.6g}")
    print(table)


def print_summary(title, rows):
    """Two-column summary table"""
    table = PrettyTable(["Quantity", "Value"])
    for key, value in rows.items():
        table.add_row([key, value])
    print(title)
    print(table)


def write_final_state(state: FieldPair, t, path):
    """
    Binary dump: header (N, L, t) then N float64 of u and N float64 of eta,
    all little-endian.
    """
    with open(path, "wb") as f:
        f.write(STATE_HEADER.pack(state.grid.N, state.grid.L, float(t)))
        f.write(np.asarray(state.u, dtype="<f8").tobytes())
        f.write(np.asarray(state.eta, dtype="<f8").tobytes())


def read_final_state(path):
    """Inverse of write_final_state; returns (FieldPair, t)."""
    with open(path, "rb") as f:
        N, L, t = STATE_HEADER.unpack(f.read(STATE_HEADER.size))
        values = np.frombuffer(f.read(), dtype="<f8")
    if values.size != 2 * N:
        raise ValueError(f"state dump holds {values.size} values, expected {2 * N}")
    grid = Grid(N, L)
    return FieldPair(u=values[:N], eta=values[N:], grid=grid), t
