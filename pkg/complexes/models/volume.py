from dataclasses import dataclass


@dataclass(frozen=True)
class Volume:
    """``cells`` ideal polytopes of volume ``unit`` each, with the numeric total."""

    cells: int
    unit: str
    value: float

    def display(self, name: str) -> str:
        return f"{name} = {self.cells} × {self.unit} ≈ {self.value:.4f}"
