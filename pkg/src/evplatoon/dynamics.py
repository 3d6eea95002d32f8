"""Switched third-order EV longitudinal model.

State chain:

    x' = v,   v' = a,   a' = -gamma(u) * a + beta(u) * u

where the lag coefficients (gamma, beta) take the motoring values for
u > 0 and the regenerative-braking values for u < 0.  Inside a small
deadband around u = 0 the two pairs are averaged, which keeps the
right-hand side single-valued on the switching surface and avoids
chattering of the mode flag.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable

from .errors import ConfigurationError, DomainError

DEFAULT_DEADBAND = 1e-3  # m/s^2

# Mustang Mach-E step-response fit, motoring / regen modes.
GAMMA_MOTORING = 0.6998
GAMMA_REGEN = 0.9009
BETA_MOTORING = 0.7378
BETA_REGEN = 0.9315


class Mode(IntEnum):
    """Drivetrain mode implied by the sign of the control input."""

    REGEN = -1
    BOUNDARY = 0
    MOTORING = 1


def classify_mode(u: float, deadband: float = DEFAULT_DEADBAND) -> Mode:
    if u > deadband:
        return Mode.MOTORING
    if u < -deadband:
        return Mode.REGEN
    return Mode.BOUNDARY


@dataclass(frozen=True)
class VehicleParams:
    """Per-vehicle physical constants.

    gamma_*/beta_* are the experimentally identified first-order lag
    coefficients (1/s) of the acceleration channel, one pair per mode.
    length is the body length (m), standstill the constant minimum gap
    (m), headway the seconds-per-unit-speed term of the desired-gap
    policy L_d = standstill + headway * v.
    """

    gamma_accel: float = GAMMA_MOTORING
    gamma_decel: float = GAMMA_REGEN
    beta_accel: float = BETA_MOTORING
    beta_decel: float = BETA_REGEN
    length: float = 4.7
    standstill: float = 5.0
    headway: float = 0.5
    deadband: float = DEFAULT_DEADBAND

    def __post_init__(self):
        for name in ("gamma_accel", "gamma_decel", "beta_accel", "beta_decel"):
            if not getattr(self, name) > 0.0:
                raise ConfigurationError(f"{name} must be strictly positive")
        if not self.length > 0.0:
            raise ConfigurationError("length must be strictly positive")
        if self.standstill < 0.0:
            raise ConfigurationError("standstill must be non-negative")
        if not self.headway > 0.0:
            raise ConfigurationError("headway must be strictly positive")
        if self.deadband < 0.0:
            raise ConfigurationError("deadband must be non-negative")


@dataclass(frozen=True)
class VehicleState:
    """Longitudinal state.  The filtered control input u is part of the
    state because the controller shapes u' rather than u itself."""

    position: float = 0.0
    velocity: float = 0.0
    acceleration: float = 0.0
    control_input: float = 0.0
    mode: Mode = None  # type: ignore[assignment]  # derived when omitted

    def __post_init__(self):
        if self.mode is None:
            object.__setattr__(self, "mode", classify_mode(self.control_input))


@dataclass(frozen=True)
class StateDerivative:
    d_position: float
    d_velocity: float
    d_acceleration: float


def mode_coefficients(u: float, params: VehicleParams) -> tuple[float, float]:
    """Resolve (gamma, beta) for control input u.

    Three cases: motoring pair for u above the deadband, regen pair
    below, arithmetic mean of each pair inside it (sgn(0) = 0 makes
    both mode weights one half).
    """
    if u > params.deadband:
        return params.gamma_accel, params.beta_accel
    if u < -params.deadband:
        return params.gamma_decel, params.beta_decel
    return (
        0.5 * (params.gamma_accel + params.gamma_decel),
        0.5 * (params.beta_accel + params.beta_decel),
    )


def accel_rate(a: float, u: float, params: VehicleParams) -> float:
    """a' = -gamma(u) * a + beta(u) * u."""
    gamma, beta = mode_coefficients(u, params)
    return -gamma * a + beta * u


def derivative(state: VehicleState, u: float, params: VehicleParams) -> StateDerivative:
    """Right-hand side of the model at the given state and input."""
    if not (
        math.isfinite(state.position)
        and math.isfinite(state.velocity)
        and math.isfinite(state.acceleration)
        and math.isfinite(u)
    ):
        raise DomainError("derivative requires finite state and input")
    return StateDerivative(
        d_position=state.velocity,
        d_velocity=state.acceleration,
        d_acceleration=accel_rate(state.acceleration, u, params),
    )


def integrate_step(
    state: VehicleState,
    u_trajectory: Callable[[float], float],
    dt: float,
    params: VehicleParams,
) -> VehicleState:
    """Advance (x, v, a) one classical fourth-order step.

    u_trajectory maps time relative to the step start (0 .. dt) to the
    control input; it is sampled at the stage times 0, dt/2 and dt, and
    the mode is resolved per stage.  The returned state carries the
    end-of-step input and the mode flag derived from it.
    """
    if dt <= 0.0:
        raise ConfigurationError("dt must be strictly positive")
    u0 = u_trajectory(0.0)
    um = u_trajectory(0.5 * dt)
    u1 = u_trajectory(dt)

    x, v, a = state.position, state.velocity, state.acceleration
    half = 0.5 * dt

    k1v, k1a = a, accel_rate(a, u0, params)
    k2v = a + half * k1a
    k2a = accel_rate(a + half * k1a, um, params)
    k3v = a + half * k2a
    k3a = accel_rate(a + half * k2a, um, params)
    k4v = a + dt * k3a
    k4a = accel_rate(a + dt * k3a, u1, params)

    sixth = dt / 6.0
    # k-position stages are the v stages: v, v + h/2 k1v, v + h/2 k2v, v + h k3v
    new_x = x + sixth * ((v) + 2.0 * (v + half * k1v) + 2.0 * (v + half * k2v) + (v + dt * k3v))
    new_v = v + sixth * (k1v + 2.0 * k2v + 2.0 * k3v + k4v)
    new_a = a + sixth * (k1a + 2.0 * k2a + 2.0 * k3a + k4a)

    if not (math.isfinite(new_x) and math.isfinite(new_v) and math.isfinite(new_a)):
        raise DomainError("integration step produced a non-finite state")
    return VehicleState(
        position=new_x,
        velocity=new_v,
        acceleration=new_a,
        control_input=u1,
        mode=classify_mode(u1, params.deadband),
    )
