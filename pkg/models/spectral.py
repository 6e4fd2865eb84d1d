# models/spectral.py
from typing import Dict, Sequence


class SpectralEstimate:
    """
    Certified interval [lower, upper] for ρ(G).

    Both ends are Collatz–Wielandt ratios min/max (A·w)(v)/w(v) of the returned
    positive witness w on the component where the maximum was attained.
    """

    def __init__(self, lower: float, upper: float, witness: Dict[int, float], iterations: int,
                 tolerance: float, component: Sequence[int] = ()):
        self.lower = float(lower)
        self.upper = float(upper)
        self.witness = dict(witness)
        self.iterations = int(iterations)
        self.tolerance = float(tolerance)
        self.component = tuple(component)

    @property
    def width(self) -> float:
        return self.upper - self.lower

    def contains(self, value: float, slack: float = 0.0) -> bool:
        return self.lower - slack <= value <= self.upper + slack

    def to_json(self, include_witness: bool = False) -> dict:
        data = {
            "lower": self.lower,
            "upper": self.upper,
            "width": self.width,
            "iterations": self.iterations,
            "tolerance": self.tolerance,
            "component_size": len(self.component),
        }
        if include_witness:
            data["witness"] = {str(v): x for v, x in sorted(self.witness.items())}
        return data

    def __repr__(self):
        return f"SpectralEstimate([{self.lower:.12g}, {self.upper:.12g}], iterations={self.iterations})"
