from dataclasses import dataclass, field
from typing import Tuple

from sympy.combinatorics import Permutation


def permutation_sign(perm) -> int:
    """+1 for even permutations of range(n), -1 for odd ones."""
    return Permutation(list(perm)).signature()


@dataclass(frozen=True)
class SignedPerm:
    """
    Signed coordinate permutation acting by ``image[i] = signs[i] * v[perm[i]]``:
    coordinates are permuted, then signed.
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError(f"{self.perm} is not a permutation")
        if len(self.signs) != len(self.perm) or any(s not in (1, -1) for s in self.signs):
            raise ValueError(f"signs {self.signs} must be +1/-1 for each coordinate")

    @classmethod
    def identity(cls, degree=4):
        return cls(tuple(range(degree)), (1,) * degree, name="id")

    @classmethod
    def reflection(cls, axis, degree=4):
        signs = tuple(-1 if i == axis else 1 for i in range(degree))
        return cls(tuple(range(degree)), signs, name=f"r{axis + 1}")

    @classmethod
    def transposition(cls, i, j, degree=4):
        perm = list(range(degree))
        perm[i], perm[j] = perm[j], perm[i]
        return cls(tuple(perm), (1,) * degree, name=f"t{i + 1}{j + 1}")

    @classmethod
    def from_axis_permutation(cls, permutation: Permutation, degree=4) -> "SignedPerm":
        """Inverse of ``as_axis_permutation``."""
        array = permutation.array_form + list(range(permutation.size, 2 * degree))
        perm = [0] * degree
        signs = [1] * degree
        for j in range(degree):
            target = array[2 * j]
            perm[target // 2] = j
            signs[target // 2] = -1 if target % 2 else 1
        return cls(tuple(perm), tuple(signs))

    def as_axis_permutation(self) -> Permutation:
        """
        The permutation of the ``2 * degree`` signed axes: point ``2j`` is
        ``+e_j`` and point ``2j + 1`` is ``-e_j``.
        """
        array = [0] * (2 * self.degree)
        for i, (p, s) in enumerate(zip(self.perm, self.signs)):
            # e_p lands on s * e_i
            array[2 * p] = 2 * i + (s < 0)
            array[2 * p + 1] = 2 * i + (s > 0)
        return Permutation(array)

    @property
    def degree(self):
        return len(self.perm)

    @property
    def determinant(self) -> int:
        sign = permutation_sign(self.perm)
        for s in self.signs:
            sign *= s
        return sign

    @property
    def sign_changes(self) -> int:
        return sum(1 for s in self.signs if s == -1)

    def __call__(self, v):
        return tuple(s * v[p] for p, s in zip(self.perm, self.signs))

    def compose(self, other: "SignedPerm") -> "SignedPerm":
        """``self.compose(other)(v) == self(other(v))``."""
        perm = tuple(other.perm[p] for p in self.perm)
        signs = tuple(s * other.signs[p] for p, s in zip(self.perm, self.signs))
        return SignedPerm(perm, signs)

    __matmul__ = compose

    def inverse(self) -> "SignedPerm":
        inverse_perm = [0] * self.degree
        for i, p in enumerate(self.perm):
            inverse_perm[p] = i
        signs = tuple(self.signs[inverse_perm[j]] for j in range(self.degree))
        name = f"{self.name}^-1" if self.name else ""
        return SignedPerm(tuple(inverse_perm), signs, name=name)

    def position_map(self) -> Tuple[int, ...]:
        """Position that source coordinate ``j`` occupies in the image."""
        return self.inverse().perm

    def __str__(self):
        variables = "xyzw" if self.degree == 4 else [f"x{i + 1}" for i in range(self.degree)]
        image = ", ".join(
            ("-" if s < 0 else "") + variables[p] for p, s in zip(self.perm, self.signs)
        )
        prefix = self.name or "m"
        return f"{prefix}({', '.join(variables)}) = ({image})"
