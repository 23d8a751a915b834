"""The three flavours of orbifold Hurwitz numbers."""

from __future__ import annotations

from enum import Enum


class HurwitzKind(Enum):
    """Weight attached to the transposition factors of a factorization.

    MONOTONE: weakly increasing maxima (complete symmetric weights h_b).
    STRICT: strictly increasing maxima, i.e. dessins d'enfants / hypermaps
        (elementary symmetric weights sigma_b).
    USUAL: unconstrained simple branch points (power-sum weights u^b/b!).
    """

    MONOTONE = "monotone"
    STRICT = "strict"
    USUAL = "usual"

    @classmethod
    def parse(cls, name: str) -> "HurwitzKind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown kind {name!r}; expected monotone|strict|usual")


ALL_KINDS = (HurwitzKind.MONOTONE, HurwitzKind.STRICT, HurwitzKind.USUAL)
