"""
Runs a list of property checks, serially or over a process pool, and
turns the results into a report and an exit status.
"""

import multiprocessing as mp
import time
from dataclasses import asdict

import pandas as pd
from prettytable import PrettyTable

from properties.load_properties import PROPERTIES_DICT, load_property
from properties.property_interface import FAIL, INCONCLUSIVE, PASS, PropertyResult

# timings are printed only
REPORT_COLUMNS = ["name", "status", "value", "threshold", "detail"]


def _run_one(args):
    name, settings = args
    start = time.time()
    result = load_property(name, settings).run()
    return result, time.time() - start


def run_properties(names, settings, jobs=1):
    """Evaluate each named property; returns [(PropertyResult, seconds)] in input order."""
    names = list(PROPERTIES_DICT) if names is None else list(names)
    for name in names:
        if name not in PROPERTIES_DICT:
            raise NotImplementedError(f"property {name} not implemented.")
    tasks = [(name, settings) for name in names]
    if jobs <= 1:
        return [_run_one(task) for task in tasks]
    with mp.Pool(processes=jobs) as pool:
        return pool.map(_run_one, tasks)


def overall_status(results):
    """fail if any property failed, else inconclusive if any was, else pass."""
    statuses = {result.status for result, _ in results}
    if FAIL in statuses:
        return FAIL
    if INCONCLUSIVE in statuses:
        return INCONCLUSIVE
    return PASS


def results_frame(results):
    return pd.DataFrame([asdict(result) for result, _ in results], columns=REPORT_COLUMNS)


def print_property_results(results):
    table = PrettyTable(["Property", "Status", "Value", "Threshold", "Seconds"])
    for result, seconds in results:
        table.add_row([result.name, result.status, f"{result.value:.4g}", f"{result.threshold:.4g}", f"{seconds:.1f}"])
    print("Property Results")
    print(table)
    for result, _ in results:
        if result.status != PASS and result.detail:
            print(f"{result.name}: {result.detail}")


def failed(results) -> list[PropertyResult]:
    return [result for result, _ in results if result.status == FAIL]
