"""
descriptor: normalize, certify, boundary and inequality on orbit descriptors.
"""

import click

from orbitlab.cli.deps import EXIT_OK, emit, handle_errors, json_option, root_system_options, split_list
from orbitlab.schemas.descriptor import (
    BoundaryResult,
    CertifyResult,
    DescriptorModel,
    InequalityResult,
    NormalizeResult,
)
from orbitlab.services import DescriptorService, RootSystemService

_service = DescriptorService()

REAL_FORMS = ["sp", "so2odd", "equalLength"]


def descriptor_options(func):
    func = click.option("--theta", default=None, help="Comma-separated simple roots defining P")(func)
    func = click.option("--w", "w", default=None, help="Signed permutation, e.g. \"1,-2\"")(func)
    func = click.option("--gamma", default=None, help="Comma-separated gammas, e.g. \"2e1,2e2\"")(func)
    func = root_system_options(func)
    return func


def _build(family: str, rank: int, gamma: str | None, w: str | None, theta: str | None):
    rs = RootSystemService.build(family, rank)
    return DescriptorService.build(rs, split_list(gamma), w, split_list(theta))


def show(d: DescriptorModel) -> str:
    prefix = f"c[{d.beta_prefix}] " if d.beta_prefix else ""
    label = f"  [{d.label}]" if d.label else ""
    theta = ", ".join(d.theta)
    return f"{prefix}({', '.join(d.gammas)}; w={d.w.text}; Theta={{{theta}}}){label}"


@click.group("descriptor")
def descriptor():
    """Orbit descriptors (gamma_1..gamma_k, w, Theta)."""


@descriptor.command("normalize")
@descriptor_options
@json_option
@handle_errors
def normalize(family, rank, gamma, w, theta, as_json: bool) -> int:
    """Bring gamma_1 outside w Delta_Theta and inside w Delta^+."""
    result, _ = _service.normalize(_build(family, rank, gamma, w, theta))
    emit(result, as_json, lambda r: f"{show(r.source)} -> {show(r.normalized)}")
    return EXIT_OK


def _render_certify(r: CertifyResult) -> str:
    if r.non_closed:
        return f"{show(r.descriptor)}: non-closed, gamma_{r.index} lies outside w Delta_Theta"
    return f"{show(r.descriptor)}: closed"


@descriptor.command("certify")
@descriptor_options
@json_option
@handle_errors
def certify(family, rank, gamma, w, theta, as_json: bool) -> int:
    """Report the first gamma outside w Delta_Theta, if any."""
    result, _ = _service.certify(_build(family, rank, gamma, w, theta))
    emit(result, as_json, _render_certify)
    return EXIT_OK


def _render_boundary(r: BoundaryResult) -> str:
    return "\n".join([
        f"source: {show(r.source)}",
        f"  betas:  {' '.join(r.beta_system.betas)} ({'long' if r.beta_system.gamma1_is_long else 'short'} gamma_1)",
        f"  Delta1: {' '.join(r.split.delta1)}",
        f"  Delta2: {' '.join(r.split.delta2) or '-'}",
        f"S1~: {show(r.s1)}",
        f"S2~: {show(r.s2)}",
        f"distinct: {'yes' if r.distinct else 'no'}",
    ])


@descriptor.command("boundary")
@descriptor_options
@click.option("--real-form", type=click.Choice(REAL_FORMS), default=None, help="Defaults to sp for C, so2odd for B")
@json_option
@handle_errors
def boundary(family, rank, gamma, w, theta, real_form, as_json: bool) -> int:
    """Both boundary orbits of a non-closed orbit."""
    result, _ = _service.boundary(_build(family, rank, gamma, w, theta), real_form)
    emit(result, as_json, _render_boundary)
    return EXIT_OK


def _render_inequality(r: InequalityResult) -> str:
    c = r.certificate
    return "\n".join([
        f"{show(r.descriptor)} vs {show(r.boundary)}",
        f"  Z = ({', '.join(r.z)}), |W_Theta| = {r.w_theta_size}",
        f"  lhs {c.lhs_value}, max rhs {c.max_rhs_value}, gap {c.gap} = closed form {c.closed_form_gap} ({c.kind})",
    ])


@descriptor.command("inequality")
@descriptor_options
@click.option("--z", default=None, help="Element Z defining P, e.g. \"2e1+e2\"")
@click.option("--real-form", type=click.Choice(REAL_FORMS), default=None)
@json_option
@handle_errors
def inequality(family, rank, gamma, w, theta, z, real_form, as_json: bool) -> int:
    """Certify the separation of an orbit from its first boundary orbit."""
    result, _ = _service.inequality(_build(family, rank, gamma, w, theta), z, real_form)
    emit(result, as_json, _render_inequality)
    return EXIT_OK
