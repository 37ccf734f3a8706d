"""
Prometheus metrics recorded by qudit-phase

Read https://prometheus.io/docs/practices/naming/ for naming
conventions for metrics & labels.

Metrics live in a private registry so importing the package never touches
the process-wide default one. Nothing here is written to result files.
"""

from prometheus_client import CollectorRegistry, Counter, Histogram, write_to_textfile

REGISTRY = CollectorRegistry(auto_describe=True)

EIGENSOLVE_DURATION_SECONDS = Histogram(
    'qudit_phase_eigensolve_duration_seconds',
    'duration in seconds of Harper eigensolves',
    ['method'],
    registry=REGISTRY,
)

OPTIMIZER_STARTS_TOTAL = Counter(
    'qudit_phase_optimizer_starts_total',
    'counter for how many certainty optimizer starts were run',
    registry=REGISTRY,
)


def write_metrics(path):
    """Write the registry in the text exposition format."""
    write_to_textfile(str(path), REGISTRY)
