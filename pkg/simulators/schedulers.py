"""Weight schedulers: the virial and local-norm windows as functions of time"""

from diagnostics.local_norms import lambda_log_derivative, lambda_of_t
from simulators.config import UnknownComponentError
from spectral.weights import weight_family


class ConstantWeightScheduler:
    """Fixed lambda: phi = lambda tanh(x/lambda), local window sech^2(x/lambda)"""

    time_dependent = False

    def __init__(self, lambda_scale, C0=4.0):
        self.lambda_scale = lambda_scale
        self.C0 = C0

    def get_lambda(self, _):
        """Return constant lambda"""
        return self.lambda_scale

    def get_rate(self, _):
        """lambda'/lambda"""
        return 0.0

    def virial_weight(self, grid, t):
        return weight_family("tanh", self.get_lambda(t), grid)

    def local_weight(self, grid, t):
        return weight_family("sech2", self.get_lambda(t), grid)

    def energy_weight(self, grid):
        """psi = lambda sech^4(x/lambda) at the fixed scale; dEloc_rhs has no psi_t term"""
        return weight_family("sech4", self.lambda_scale, grid)

    def sech4_weight(self, grid, t):
        """sech^4(x/lambda) at the current scale, the window of the pointwise decay observable"""
        return weight_family("sech4", self.get_lambda(t), grid, amplitude=1.0)

    def light_cone_weight(self, grid, t):
        """sech^2(x/lambda(t)) for the time-integrated decay observable, None before t = 2"""
        if t < 2.0:
            return None
        return weight_family("sech2", lambda_of_t(t, self.C0), grid)


class LightConeWeightScheduler(ConstantWeightScheduler):
    """lambda(t) = C0 t/log^2 t, with phi = tanh(x/lambda(t))"""

    time_dependent = True

    def get_lambda(self, t):
        return lambda_of_t(t, self.C0)

    def get_rate(self, t):
        return lambda_log_derivative(t)

    def virial_weight(self, grid, t):
        return weight_family("tanh", self.get_lambda(t), grid, amplitude=1.0)


WEIGHT_SCHEDULER_DICT = {
    "fixed": ConstantWeightScheduler,
    "light_cone": LightConeWeightScheduler,
}


def build_weight_scheduler(weights_cfg):
    """
    Given the weights config, build the weight scheduler.
    """
    kind = weights_cfg["kind"]
    if kind not in WEIGHT_SCHEDULER_DICT:
        raise UnknownComponentError(f"weight scheduler {kind} not implemented.")
    return WEIGHT_SCHEDULER_DICT[kind](
        lambda_scale=weights_cfg["lambda_scale"],
        C0=weights_cfg["C0"],
    )
