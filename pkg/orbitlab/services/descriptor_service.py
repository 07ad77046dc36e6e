"""
Orbit descriptor service: normalization, closedness, boundary orbits and separation.
"""

from typing import Sequence

from orbitlab.algebra.orbit_calculus import (
    OrbitDescriptor,
    boundary_orbit_s1,
    boundary_pair_report,
    certify_nonclosed,
    choose_beta_system,
    make_descriptor,
    normalize_descriptor,
    separation_inequality,
    split_delta12,
)
from orbitlab.algebra.roots import Root, RootSystem, parse_vector, z_for_theta
from orbitlab.algebra.weyl import WeylElement, enumerate_parabolic
from orbitlab.core.logging import get_logger
from orbitlab.schemas.descriptor import (
    BoundaryResult,
    CertifyResult,
    DescriptorModel,
    InequalityResult,
    NormalizeResult,
)
from orbitlab.services.base import BaseService
from orbitlab.sp2.combinatorics import descriptor_label
from orbitlab.wrappers import (
    rational_strings,
    roots_of,
    wrap_boundary_pair,
    wrap_certificate,
    wrap_descriptor,
)

logger = get_logger("services.descriptor")


class DescriptorService(BaseService):
    """Service for the combinatorial orbit calculus."""

    @staticmethod
    def build(
        rs: RootSystem,
        gammas: Sequence[str] = (),
        w: str | None = None,
        theta: Sequence[str] = (),
    ) -> OrbitDescriptor:
        """
        Raises:
            ValidationError: If a root string, w or Theta is malformed
            NotARootError: If a gamma is not a root
        """
        return make_descriptor(
            rs,
            roots_of(rs, gammas),
            WeylElement.parse(w, rs.rank) if w else None,
            roots_of(rs, theta),
        )

    def _label(self, d: OrbitDescriptor) -> str | None:
        """Sp(2) orbit label of a C2 descriptor with empty Theta, else None."""
        rs = d.root_system
        if rs.family != "C" or rs.rank != 2 or d.theta:
            return None
        label = self.safe_execute(descriptor_label, d)
        return str(label) if label is not None else None

    def _wrap(self, d: OrbitDescriptor) -> DescriptorModel:
        return wrap_descriptor(d, self._label(d))

    def normalize(self, d: OrbitDescriptor) -> tuple[NormalizeResult, float]:
        def do_normalize():
            return NormalizeResult.model_validate({
                "source": self._wrap(d).model_dump(by_alias=True),
                "normalized": self._wrap(normalize_descriptor(d)).model_dump(by_alias=True),
            })

        return self.measure_time(do_normalize)

    def certify(self, d: OrbitDescriptor) -> tuple[CertifyResult, float]:
        def do_certify():
            index = certify_nonclosed(d)
            return CertifyResult.model_validate({
                "descriptor": self._wrap(d).model_dump(by_alias=True),
                "index": index,
                "nonClosed": index is not None,
            })

        return self.measure_time(do_certify)

    def boundary(self, d: OrbitDescriptor, real_form: str | None = None) -> tuple[BoundaryResult, float]:
        """
        Raises:
            NotNonClosedError: If d is closed
        """
        rs = d.root_system

        def do_boundary():
            pair = boundary_pair_report(d, real_form)
            beta_system = choose_beta_system(rs, pair.source.gamma, real_form)
            split = split_delta12(rs, beta_system, pair.source.gamma)
            labels = {"source": self._label(pair.source), "s1": self._label(pair.s1), "s2": self._label(pair.s2)}
            return wrap_boundary_pair(pair, beta_system, split, labels)

        return self.measure_time(do_boundary)

    def inequality(
        self,
        d: OrbitDescriptor,
        z: str | None = None,
        real_form: str | None = None,
    ) -> tuple[InequalityResult, float]:
        """
        Certify the separation of d from its first boundary orbit.

        Z defaults to the sum of the fundamental coweights outside Theta.

        Raises:
            NotNonClosedError: If d is closed
            CertificateFailure: If the certificate does not hold
        """
        rs = d.root_system

        def do_inequality():
            z_vector = parse_vector(z, rs.rank) if z else z_for_theta(rs, d.theta)
            w_theta = enumerate_parabolic(rs, d.theta)
            boundary = boundary_orbit_s1(d, real_form)
            cert = separation_inequality(d, boundary, z_vector, w_theta)
            return InequalityResult.model_validate({
                "descriptor": self._wrap(normalize_descriptor(d)).model_dump(by_alias=True),
                "boundary": self._wrap(boundary).model_dump(by_alias=True),
                "z": rational_strings(z_vector),
                "wThetaSize": len(w_theta),
                "certificate": wrap_certificate(cert).model_dump(by_alias=True),
            })

        return self.measure_time(do_inequality)
