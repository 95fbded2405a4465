"""Identifiers for the four diffusion models."""

from __future__ import annotations

from enum import Enum


class Model(str, Enum):
    """The despeckling models this package solves.

    TDM     second-order telegraph diffusion, gradient-driven coefficient.
    TDFM    fourth-order telegraph diffusion with data fidelity.
    MODEL1  weighted blend of second- and fourth-order diffusion (weight A).
    MODEL2  coupled system: a fourth-order and a second-order equation
            solved alternately each iteration.
    """

    TDM = "tdm"
    TDFM = "tdfm"
    MODEL1 = "model1"
    MODEL2 = "model2"

    @classmethod
    def parse(cls, name) -> "Model":
        if isinstance(name, Model):
            return name
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            choices = ", ".join(m.value for m in cls)
            raise ValueError(f"unknown model {name!r}, expected one of: {choices}") from None
