"""Simulator class stepping the normalized abcd system and recording diagnostics"""

import time
from dataclasses import dataclass, field

import wandb
from omegaconf import OmegaConf

from diagnostics.records import compute_record
from simulators.state import FieldPair
from simulators.utils import print_diagnostics


class SimulationInstabilityError(RuntimeError):
    """The state became non-finite or blew up; carries the records so far."""

    def __init__(self, message, records=None, step=None, t=None, state=None):
        super().__init__(message)
        self.records = list(records or [])
        self.step = step
        self.t = t
        self.state = state


@dataclass
class SimulationResult:
    records: list
    final_state: FieldPair
    t_final: float
    steps: int
    wall_time: float = 0.0
    status: str = "completed"
    notes: dict = field(default_factory=dict)


# pylint: disable invalid-name
class BaseSimulator:
    """Base Simulator Class

    Uses subcomponents: stepper, weight scheduler,
    initial state, parameters and (alpha, beta)"""

    def __init__(
        self,
        sim_cfg,
        initial_state: FieldPair,
        stepper,
        weight_scheduler,
        cfg=None,
        record_callback=None,
    ) -> None:
        self.sim_cfg = sim_cfg
        self.parameters = sim_cfg.parameters
        self.alpha_beta = sim_cfg.alpha_beta
        self.initial_state = initial_state
        self.stepper = stepper
        self.weight_scheduler = weight_scheduler
        self.cfg = cfg
        self.record_callback = record_callback
        self.use_wandb = bool(
            cfg is not None and cfg["general"]["logging"]["wandb_log"]
        )
        self.verbose = bool(cfg is not None and cfg["general"]["logging"]["verbose"])
        if self.use_wandb:
            self._setup_logging()

    def _setup_logging(self):
        # set run name
        run_name = (
            f"{self.cfg['initial_data']['kind']}"
            f"_a{self.parameters.a:.4g}_c{self.parameters.c:.4g}"
            f"_N{self.sim_cfg.N}_L{self.sim_cfg.L:g}"
            f"_{self.sim_cfg.weight_mode}"
        )
        wandb.init(
            project=self.cfg["general"]["logging"]["wandb_project"],
            config=OmegaConf.to_container(self.cfg, resolve=True),
            name=run_name,
        )

    def estimate_diagnostics(self, t, state):
        """Evaluate all observables on a snapshot"""
        return compute_record(
            t=t,
            state=state,
            parameters=self.parameters,
            ab=self.alpha_beta,
            scheduler=self.weight_scheduler,
        )

    def _run_step(self, state):
        """Advance one time step"""
        return self.stepper(
            state,
            self.sim_cfg.dt,
            self.parameters,
            nonlinear=self.sim_cfg.nonlinear,
            dealias=self.sim_cfg.dealias,
        )

    def _check_state(self, state, step, t, threshold, records):
        """Abort on non-finite values or growth beyond the blow-up threshold"""
        if not state.is_finite():
            raise SimulationInstabilityError(
                f"non-finite state at step {step}, t={t:.6g}",
                records=records, step=step, t=t, state=state,
            )
        if state.sup_norm() > threshold:
            raise SimulationInstabilityError(
                f"blow-up at step {step}, t={t:.6g}: sup|u|+sup|eta|={state.sup_norm():.4g} "
                f"exceeds {threshold:.4g}",
                records=records, step=step, t=t, state=state,
            )

    def _record(self, step, t, state, records):
        record = self.estimate_diagnostics(t, state)
        records.append(record)
        if self.record_callback is not None:
            self.record_callback(record, state)
        if self.use_wandb:
            log_dict = {"step": step}
            log_dict.update(record.__dict__)
            wandb.log(log_dict)
        if self.verbose and not (len(records) - 1) % max(
            1, self.sim_cfg.log_interval // self.sim_cfg.diagnostic_interval
        ):
            print_diagnostics(step=step, record=record)
        return record

    def run_simulation_loop(self):
        """Run the time-stepping loop"""
        sim_cfg = self.sim_cfg
        state = self.initial_state
        t = sim_cfg.t_start
        threshold = sim_cfg.blowup_factor * max(state.sup_norm(), 1e-300)
        records = []
        start_time = time.time()

        self._record(0, t, state, records)
        num_steps = sim_cfg.num_steps
        for step in range(1, num_steps + 1):
            state = self._run_step(state)
            t = sim_cfg.t_start + sim_cfg.T * (step / num_steps)
            self._check_state(state, step, t, threshold, records)
            if not step % sim_cfg.diagnostic_interval:
                self._record(step, t, state, records)

        return SimulationResult(
            records=records,
            final_state=state,
            t_final=t,
            steps=num_steps,
            wall_time=time.time() - start_time,
        )

    def run(self):
        """Run the simulation"""
        try:
            return self.run_simulation_loop()
        finally:
            if self.use_wandb:
                wandb.finish()
