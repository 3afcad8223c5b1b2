#!/usr/bin/env python

"""
Named sweeps reproducing the data behind each coherence figure.
A preset is a list of SweepConfig blocks written to one CSV.
"""

from dataclasses import replace
from enum import Enum
import math
import numpy as np
from unruhcoh.sweeps.config import Grid, Mode, SweepConfig
from unruhcoh.states.families import Family, STAR_CENTRAL, STAR_PERIPHERAL

PI = math.pi


class Preset(Enum):
    fig3a = "fig3a"
    fig3b = "fig3b"
    fig4 = "fig4"
    fig5 = "fig5"
    fig6 = "fig6"
    fig7 = "fig7"
    fig8 = "fig8"
    fig9a = "fig9a"
    fig9b = "fig9b"


# (theta, phi) of the generalized W curves
W_ANGLES = [(PI / 5, PI / 5), (PI / 6, PI / 6), (PI / 3, PI / 6)]


def fig3a():
    "GHZ coherence against r for several theta, party 2 accelerated."
    return [SweepConfig(
        Family.ghz,
        accelerated=(2,),
        thetas=(PI / 4, PI / 5, PI / 6, PI / 8),
        r1=Grid(0.0, 3.0, 60).values,
    )]


def fig3b():
    "GHZ theta profile at fixed r."
    return [SweepConfig(
        Family.ghz,
        accelerated=(2,),
        thetas=Grid(0.0, PI, 49).values,
        r1=(0.5, 1.0, 2.0),
    )]


def fig4():
    "GHZ with two accelerated parties on an (r1, r2) grid."
    grid = Grid(0.0, 3.0, 16).values
    return [SweepConfig(
        Family.ghz,
        accelerated=(1, 2),
        thetas=(PI / 4, PI / 5, PI / 6),
        r1=grid,
        r2=grid,
    )]


def fig5():
    "Symmetric and generalized W states against r, party 2 accelerated."
    r1 = Grid(0.0, 4.0, 41).values
    blocks = [SweepConfig(Family.w_sym, accelerated=(2,), r1=r1)]
    for (theta, phi) in W_ANGLES:
        blocks.append(SweepConfig(
            Family.w, accelerated=(2,), thetas=(theta,), phis=(phi,), r1=r1))
    return blocks


def fig6():
    "Generalized W over (theta, phi) at a small and a large r."
    return [SweepConfig(
        Family.w,
        accelerated=(2,),
        thetas=Grid(0.0, PI, 21).values,
        phis=tuple(float(i) for i in np.linspace(0.0, 2 * PI, 21, endpoint=False)),
        r1=(0.01, 4.0),
    )]


def fig7():
    "W states with parties 1 and 2 accelerated on an (r1, r2) grid."
    grid = Grid(0.0, 3.0, 16).values
    blocks = [SweepConfig(Family.w_sym, accelerated=(1, 2), r1=grid, r2=grid)]
    for (theta, phi) in W_ANGLES:
        blocks.append(SweepConfig(
            Family.w, accelerated=(1, 2), thetas=(theta,), phis=(phi,),
            r1=grid, r2=grid))
    return blocks


def fig8():
    "Total, global and local coherence of WW-bar and star states."
    r1 = Grid(0.0, 3.0, 31).values
    return [
        SweepConfig(Family.wwbar, accelerated=(2,), r1=r1),
        SweepConfig(Family.star, accelerated=(STAR_CENTRAL,), r1=r1),
        SweepConfig(Family.star, accelerated=(STAR_PERIPHERAL[0],), r1=r1),
    ]


def fig9a():
    "Normalized N = 11 GHZ and W coherence against r for n = 1 and 10."
    r1 = Grid(0.0, 3.0, 31).values
    return [
        SweepConfig(
            family, n_parties=11, n_accel=(1, 10), r1=r1, normalized=True)
        for family in (Family.ghz_n, Family.w_n)
    ]


def fig9b():
    "Normalized N = 11 GHZ and W coherence against the number accelerated."
    return [
        SweepConfig(
            family, n_parties=11, n_accel=tuple(range(11)), r1=(1.5, 2.0),
            normalized=True)
        for family in (Family.ghz_n, Family.w_n)
    ]


PRESETS = {
    Preset.fig3a: fig3a,
    Preset.fig3b: fig3b,
    Preset.fig4: fig4,
    Preset.fig5: fig5,
    Preset.fig6: fig6,
    Preset.fig7: fig7,
    Preset.fig8: fig8,
    Preset.fig9a: fig9a,
    Preset.fig9b: fig9b,
}


def preset_blocks(preset: Preset, mode: Mode = Mode.analytic, **overrides):
    """
    The blocks of a preset in the requested mode. Extra keyword
    arguments (tail_tol, n_max, max_terms) replace the block defaults.
    """
    blocks = PRESETS[Preset(preset)]()
    return [_replace(block, mode=Mode(mode), **overrides) for block in blocks]


def _replace(block: SweepConfig, **changes) -> SweepConfig:
    changes = {key: value for (key, value) in changes.items() if value is not None}
    return replace(block, **changes)
