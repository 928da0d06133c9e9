# Store for the reproduction presets
from copy import deepcopy
from typing import Any, Dict

from exceptions import ConfigurationError

EXPERIMENTS = [
    {
        "id": "ex1",
        "name": "Left EK differentiation matrices",
        "description": "Conditioning and first-kind JMF reproduction of the stable and direct left matrices",
        "params": {"alpha": -0.5, "beta": 2.0, "sigma": 0.5, "eta": 0.0, "b": 10.0,
                   "orders": [0.25, 0.5, 0.75], "degree": 10},
        "sweep": [45, 95, 145, 165],
    },
    {
        "id": "ex2",
        "name": "Right EK differentiation matrices",
        "description": "Conditioning and second-kind JMF reproduction of the stable and direct right matrices",
        "params": {"alpha": 0.5, "beta": -0.5, "sigma": 0.5, "eta": 0.5, "b": 10.0,
                   "orders": [0.25, 0.5, 0.75], "degree": 5},
        "sweep": [45, 95, 145, 165],
    },
    {
        "id": "ex3",
        "name": "First-order Cauchy-Euler",
        "description": "D^1 y + lambda y = f with exact solution sqrt(x) sin(sqrt(x))",
        "params": {"alpha": -0.5, "beta": 1.0, "sigma": 0.5, "eta": -1.0, "mu": 1.0, "b": 10.0, "lam": 1.0},
        "sweep": [10, 20, 30, 40, 50],
    },
    {
        "id": "ex4",
        "name": "Second-order Cauchy-Euler",
        "description": "D^mu y + lambda y = x^2 sin(x) for 1 < mu <= 2 and two values of sigma",
        "params": {"alpha": -0.5, "beta": 3.0, "eta": -2.0, "b": 10.0, "lam": 1.0, "N": 40,
                   "orders": [1.25, 1.5, 1.75, 2.0], "sigmas": [0.5, 1.0], "points": 101},
        "sweep": None,
    },
    {
        "id": "riccati",
        "name": "Riccati equation",
        "description": "y' = 1 + 2y - y^2 written with a unit EK derivative, solved by Newton",
        "params": {"alpha": -0.5, "beta": 1.0, "sigma": 1.0, "eta": -1.0, "mu": 1.0, "b": 2.0},
        "sweep": [10, 20, 30, 40, 50],
    },
    {
        "id": "pde",
        "name": "Fractional PDE",
        "description": "u_t = d D^mu u + s with u = x^(sigma nu) sin(t^2)",
        "params": {"alpha": 0.5, "beta": 3.0, "sigma": 0.5, "eta": -1.75, "mu": 1.75, "nu": 5.0,
                   "b": 5.0, "T": 5.0, "N": 10, "times": 11},
        "sweep": None,
    },
    {
        "id": "burgers",
        "name": "Burgers' equation",
        "description": "Manufactured solution on [0, 1] x [0, 10] for two values of sigma",
        "params": {"alpha": 0.5, "beta": 1.0, "eta": 1.0, "b": 1.0, "T": 10.0, "N": 20,
                   "sigmas": [0.5, 1.0], "times": 11},
        "sweep": None,
    },
]


def get_preset(experiment_id: str) -> Dict[str, Any]:
    """Deep copy of a preset, so callers can override values freely."""
    for preset in EXPERIMENTS:
        if preset["id"] == experiment_id:
            return deepcopy(preset)
    available = [preset["id"] for preset in EXPERIMENTS]
    raise ConfigurationError(f"Unknown experiment: {experiment_id}. Available: {available}")
