"""
Coordinate-role permutations (the S3 action on triples) and digit
relabelings p = p01 o p29.
"""

from dataclasses import dataclass
from typing import List, Tuple

from src.utils.exceptions import InadmissibleRelabelingError

ROLE_LETTERS = ('R', 'S', 'C')


@dataclass(frozen=True)
class RolePermutation:
    """
    Bijection of the coordinate roles {R, S, C}.

    Attributes:
        images: images[i] is the position coordinate i is moved to, so
                apply((x0, x1, x2))[images[i]] == x[i]
    """

    images: Tuple[int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.images) != [0, 1, 2]:
            raise ValueError(f"Role images {self.images} are not a permutation of (0, 1, 2)")

    @classmethod
    def identity(cls) -> 'RolePermutation':
        return cls((0, 1, 2))

    @classmethod
    def from_name(cls, name: str) -> 'RolePermutation':
        """Look up one of the six permutations by cycle name, e.g. '(RC)'."""
        for role in ALL_ROLES:
            if role.name == name:
                return role
        raise ValueError(f"Unknown role permutation '{name}'")

    def apply(self, coords: Tuple[int, int, int]) -> Tuple[int, int, int]:
        out = [0, 0, 0]
        for i, value in enumerate(coords):
            out[self.images[i]] = value
        return (out[0], out[1], out[2])

    def compose(self, other: 'RolePermutation') -> 'RolePermutation':
        """self o other: apply other first."""
        return RolePermutation(tuple(self.images[other.images[i]] for i in range(3)))

    def inverse(self) -> 'RolePermutation':
        inv = [0, 0, 0]
        for i, j in enumerate(self.images):
            inv[j] = i
        return RolePermutation((inv[0], inv[1], inv[2]))

    @property
    def is_identity(self) -> bool:
        return self.images == (0, 1, 2)

    @property
    def name(self) -> str:
        """Cycle notation over R, S, C; 'id' for the identity."""
        seen = set()
        cycles = []
        for start in range(3):
            if start in seen or self.images[start] == start:
                continue
            cycle = []
            i = start
            while i not in seen:
                seen.add(i)
                cycle.append(ROLE_LETTERS[i])
                i = self.images[i]
            cycles.append('(' + ''.join(cycle) + ')')
        return ''.join(cycles) or 'id'

    def __str__(self) -> str:
        return self.name


# Fixed enumeration; conjugate #k always means ALL_ROLES[k].
ALL_ROLES: List[RolePermutation] = [
    RolePermutation((0, 1, 2)),  # id
    RolePermutation((1, 0, 2)),  # (RS)
    RolePermutation((2, 1, 0)),  # (RC)
    RolePermutation((0, 2, 1)),  # (SC)
    RolePermutation((1, 2, 0)),  # (RSC)
    RolePermutation((2, 0, 1)),  # (RCS)
]


@dataclass(frozen=True)
class Relabeling:
    """
    Digit-alphabet permutation.

    Attributes:
        base: Alphabet size
        images: images[d] == p(d)
    """

    base: int
    images: Tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(self.base)):
            raise InadmissibleRelabelingError(
                f"Relabeling {self.images} is not a permutation of 0..{self.base - 1}")

    @classmethod
    def identity(cls, base: int) -> 'Relabeling':
        return cls(base, tuple(range(base)))

    @classmethod
    def from_parts(cls, base: int, p01: str = 'identity', p29: str = 'identity') -> 'Relabeling':
        """
        Build p = p01 o p29 from its two blocks.

        Args:
            base: Alphabet size
            p01: 'identity', '01' or '10' (image of 0 then 1)
            p29: 'identity' or the image string of 2..base-1

        Returns:
            New Relabeling instance
        """
        from src.utils.validators import validate_p01, validate_p29

        is_valid, error = validate_p01(p01)
        if not is_valid:
            raise InadmissibleRelabelingError(error)
        is_valid, error = validate_p29(p29, base)
        if not is_valid:
            raise InadmissibleRelabelingError(error)

        low = (1, 0) if p01 == '10' else (0, 1)
        high = tuple(range(2, base)) if p29 == 'identity' else tuple(int(ch) for ch in p29)
        return cls(base, low + high)

    @property
    def is_admissible(self) -> bool:
        """True iff p keeps {0,1} and {2..base-1} setwise."""
        return set(self.images[:2]) == {0, 1}

    def __call__(self, digit: int) -> int:
        return self.images[digit]

    def compose(self, other: 'Relabeling') -> 'Relabeling':
        """self o other: apply other first."""
        return Relabeling(self.base, tuple(self.images[other.images[d]] for d in range(self.base)))

    def describe(self) -> str:
        """Compact '<p01>|<p29>' form, e.g. '10|23456789'."""
        return ''.join(str(d) for d in self.images[:2]) + '|' + ''.join(str(d) for d in self.images[2:])

    def __str__(self) -> str:
        return self.describe()
