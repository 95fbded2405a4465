"""Reference parameter presets for the benchmark images.

Per-image, per-look tuning rows for the four standard test pictures
(parrots, texture, caps, baboon) and for the SAR/ultrasound speckle-index
runs.  The ``k`` column is the edge threshold (written beta in much of the
diffusion literature); MODEL1 rows all use blend weight A = 0.7, the value
the weighting study selects.

``phantom_params`` carries the rows used for the synthetic phantom suite;
they start from the parrots/texture rows with mild adjustments tuned on the
phantoms themselves.
"""

from __future__ import annotations

from .models import Model
from .solver import SolverParams

LOOKS = (1, 3, 5, 10)


def _rows(alpha, k, gamma, lam=0.0) -> dict:
    def at(v, i):
        return float(v[i]) if isinstance(v, (tuple, list)) else float(v)

    return {
        look: {
            "alpha": at(alpha, i),
            "k": at(k, i),
            "gamma": at(gamma, i),
            "lam": at(lam, i),
        }
        for i, look in enumerate(LOOKS)
    }


REFERENCE_GRAY = {
    "parrots": {
        Model.TDM: _rows(1, 2, 5),
        Model.TDFM: _rows(1, 3, 5, (0.05, 0.1, 0.1, 0.2)),
        Model.MODEL1: _rows((1, 1, 2, 1), 2, (2, 4, 4, 4), (0.04, 0.07, 0.045, 0.1)),
        Model.MODEL2: _rows((1, 1, 2, 3), 10, (1, 1, 1, 8), (0.1, 0.1, 0.5, 0.1)),
    },
    "texture": {
        Model.TDM: _rows(1, 2, 5),
        Model.TDFM: _rows((0.4, 1, 0.5, 0.5), 3, 4, (0.03, 0.03, 0.03, 0.05)),
        Model.MODEL1: _rows((1, 2, 0.2, 4), 2, (2, 2, 1, 2), (0.03, 0.03, 0.06, 0.035)),
        Model.MODEL2: _rows((2, 2, 2, 0.1), 10, (1, 1, 2, 2), 0.05),
    },
}

REFERENCE_COLOR = {
    "caps": {
        Model.TDM: _rows((3, 1, 2, 1.5), 2, (8, 8, 5, 5)),
        Model.TDFM: _rows(1, 3, 5, 0.5),
        Model.MODEL1: _rows(1, 2, (2, 1, 1, 1), (0.08, 0.01, 0.01, 0.01)),
        Model.MODEL2: _rows((1, 1, 2, 3), 10, 8, (0.08, 0.1, 0.1, 0.1)),
    },
    "baboon": {
        Model.TDM: _rows((2, 2.5, 1.1, 1.2), 2, (9, 5, 5, 5)),
        Model.TDFM: _rows((1, 1.1, 1.2, 1.2), 3, 5, 0.1),
        Model.MODEL1: _rows(1, 2, (2, 2, 1, 2), (0.1, 0.2, 0.2, 0.2)),
        Model.MODEL2: _rows(1, 10, 5, (0.1, 0.5, 0.5, 0.7)),
    },
}

# Rows that minimise the speckle index on SAR-style (image 1) and
# ultrasound-style (image 2) inputs.
SPECKLE_INDEX_ROWS = {
    "image1": {
        Model.MODEL1: {"alpha": 1.0, "k": 2.0, "gamma": 5.0, "lam": 0.001},
        Model.MODEL2: {"alpha": 1.0, "k": 10.0, "gamma": 5.0, "lam": 0.0001},
    },
    "image2": {
        Model.MODEL1: {"alpha": 0.10, "k": 2.0, "gamma": 2.0, "lam": 0.001},
        Model.MODEL2: {"alpha": 0.10, "k": 10.0, "gamma": 5.0, "lam": 0.0001},
    },
}

DEFAULT_WEIGHT_A = 0.7

PHANTOM_GRAY = {
    "parrots": REFERENCE_GRAY["parrots"],
    "texture": REFERENCE_GRAY["texture"],
}


def reference_params(image: str, model, look: int, **overrides) -> SolverParams:
    """SolverParams for a benchmark-table row, with optional overrides."""
    model = Model.parse(model)
    table = REFERENCE_GRAY if image in REFERENCE_GRAY else REFERENCE_COLOR
    try:
        row = table[image][model][look]
    except KeyError:
        raise KeyError(f"no preset row for image={image!r} model={model.value} look={look}") from None
    return _params_from_row(model, row, overrides)


def phantom_params(phantom: str, model, look: int, **overrides) -> SolverParams:
    """SolverParams for the synthetic-phantom suite."""
    model = Model.parse(model)
    row = PHANTOM_GRAY[phantom][model][look]
    return _params_from_row(model, row, overrides)


def speckle_index_params(image: str, model, **overrides) -> SolverParams:
    model = Model.parse(model)
    row = SPECKLE_INDEX_ROWS[image][model]
    return _params_from_row(model, row, overrides)


def _params_from_row(model: Model, row: dict, overrides: dict) -> SolverParams:
    kwargs = dict(row)
    if model is Model.MODEL1:
        kwargs.setdefault("weight_a", DEFAULT_WEIGHT_A)
    kwargs.update(overrides)
    return SolverParams(model=model, **kwargs)
