"""
Index sets Λ ⊆ ℕ and M ⊆ ℕ₀ given as unions of arithmetic progressions
{k ≡ a (mod q), k ≥ ℓ} and explicit finite sets.
"""

from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Tuple

from error_handler import PreconditionError

Progression = Tuple[int, int, int]  # (residue a, modulus q, lower bound l)


@dataclass(frozen=True)
class IndexSet:
    progressions: Tuple[Progression, ...] = ()
    explicit: FrozenSet[int] = frozenset()
    contains_all: bool = False

    def __post_init__(self):
        for a, q, low in self.progressions:
            if q <= 0 or not 0 <= a < q or low < 0:
                raise PreconditionError(
                    f"invalid progression (a={a}, q={q}, l={low}): need q > 0, 0 <= a < q, l >= 0"
                )
        if any(k < 0 for k in self.explicit):
            raise PreconditionError("explicit members must be non-negative")

    # ---------- CONSTRUCTORS ----------
    @classmethod
    def everything(cls) -> "IndexSet":
        return cls(contains_all=True)

    @classmethod
    def odd(cls) -> "IndexSet":
        return cls(progressions=((1, 2, 0),))

    @classmethod
    def even(cls) -> "IndexSet":
        return cls(progressions=((0, 2, 0),))

    @classmethod
    def progression(cls, a: int, q: int, lower: int = 0) -> "IndexSet":
        if q <= 0:
            raise PreconditionError("modulus must be positive")
        return cls(progressions=((a % q, q, lower),))

    @classmethod
    def of(cls, members: Iterable[int]) -> "IndexSet":
        return cls(explicit=frozenset(members))

    # ---------- SET SEMANTICS ----------
    def __contains__(self, k: int) -> bool:
        if k < 0:
            return False
        if self.contains_all or k in self.explicit:
            return True
        return any(k >= low and k % q == a for a, q, low in self.progressions)

    def union(self, other: "IndexSet") -> "IndexSet":
        return IndexSet(
            progressions=tuple(dict.fromkeys(self.progressions + other.progressions)),
            explicit=self.explicit | other.explicit,
            contains_all=self.contains_all or other.contains_all,
        )

    __or__ = union

    def members_upto(self, limit: int) -> List[int]:
        """Members k with 0 <= k <= limit, ascending."""
        return [k for k in range(limit + 1) if k in self]

    def shift(self, gamma: int) -> "IndexSet":
        """The set (K − γ) ∩ ℕ₀ = {k − γ : k ∈ K, k ≥ γ}."""
        if gamma < 0:
            raise PreconditionError("shift must be non-negative")
        progressions = tuple(
            ((a - gamma) % q, q, max(low, gamma) - gamma) for a, q, low in self.progressions
        )
        return IndexSet(
            progressions=progressions,
            explicit=frozenset(k - gamma for k in self.explicit if k >= gamma),
            contains_all=self.contains_all,
        )

    # ---------- TEXT FORM ----------
    def __str__(self) -> str:
        if self.contains_all:
            return "all"
        terms = []
        for a, q, low in self.progressions:
            term = f"{a} mod {q}"
            if low > 0:
                term += f" >={low}"
            terms.append(term)
        if self.explicit or not terms:
            terms.append("{" + ",".join(str(k) for k in sorted(self.explicit)) + "}")
        return ", ".join(terms)
