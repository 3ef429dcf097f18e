"""Central finite-difference verification of analytic gradients.

The relative error per entry is |g_a - g_n| / max(|g_a|, |g_n|, 1e-12);
a check passes when every parameter's worst entry stays below tolerance.
Only meant for networks small enough to perturb exhaustively.
"""

from dataclasses import dataclass

import numpy as np

from .losses import softmax_cross_entropy


@dataclass(frozen=True)
class GradCheckEntry:
    name: str
    max_rel_error: float
    passed: bool


@dataclass(frozen=True)
class GradCheckReport:
    entries: tuple
    tolerance: float

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def worst(self) -> float:
        return max((e.max_rel_error for e in self.entries), default=0.0)

    def __str__(self):
        lines = [
            f"{'PASS' if e.passed else 'FAIL'}  {e.name}: max rel err {e.max_rel_error:.3e}"
            for e in self.entries
        ]
        verdict = "all gradients ok" if self.passed else "GRADIENT MISMATCH"
        return "\n".join(lines + [f"{verdict} (tolerance {self.tolerance:.1e})"])


def finite_diff_check_fn(loss_fn, params, analytic_grads, names=None,
                         tolerance=1e-5, step=1e-5):
    """Compare analytic gradients against central differences of loss_fn.

    ``loss_fn`` must evaluate the loss at the *current* contents of the
    param arrays; entries are perturbed in place and restored.
    """
    names = names or [f"param{k}" for k in range(len(params))]
    entries = []
    for p, g, name in zip(params, analytic_grads, names):
        worst = 0.0
        flat_p = p.reshape(-1)
        flat_g = np.asarray(g).reshape(-1)
        for idx in range(flat_p.size):
            original = flat_p[idx]
            flat_p[idx] = original + step
            up = loss_fn()
            flat_p[idx] = original - step
            down = loss_fn()
            flat_p[idx] = original
            numeric = (up - down) / (2.0 * step)
            analytic = flat_g[idx]
            denom = max(abs(analytic), abs(numeric), 1e-12)
            worst = max(worst, abs(analytic - numeric) / denom)
        entries.append(GradCheckEntry(name, worst, worst < tolerance))
    return GradCheckReport(entries=tuple(entries), tolerance=tolerance)


def finite_diff_check(network, inputs, targets, tolerance=1e-5, step=1e-5):
    """Gradient-check every parameter of a classification network.

    Uses the mean softmax cross-entropy over the given batch as the loss.
    A network with no parameters yields an empty, passing report.
    """
    loss, dlogits = softmax_cross_entropy(network.forward(inputs, train=True), targets)
    network.backward(dlogits)

    def loss_fn():
        logits = network.forward(inputs, train=False)
        return softmax_cross_entropy(logits, targets)[0]

    return finite_diff_check_fn(
        loss_fn,
        network.params(),
        network.grads(),
        names=network.param_names(),
        tolerance=tolerance,
        step=step,
    )
