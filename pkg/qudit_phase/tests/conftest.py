pytest_plugins = [
    "qudit_phase.pytest_plugin"
]
