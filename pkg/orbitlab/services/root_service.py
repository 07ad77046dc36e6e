"""
Root system and Weyl group service.
"""

from typing import Sequence

from orbitlab.algebra.roots import RootSystem, build_root_system, parse_vector
from orbitlab.algebra.weyl import (
    WeylElement,
    apply_root,
    check_permutes_roots,
    enumerate_parabolic,
    inverse,
    length,
    longest_element,
)
from orbitlab.core.logging import get_logger
from orbitlab.schemas.roots import RootSystemResult, WeylResult
from orbitlab.services.base import BaseService
from orbitlab.wrappers import root_strings, roots_of, wrap_root_system, wrap_weyl_element

logger = get_logger("services.roots")


class RootSystemService(BaseService):
    """Service for building root systems and exploring their Weyl groups."""

    @staticmethod
    def build(family: str, rank: int, z: str | None = None) -> RootSystem:
        """
        Args:
            family: "B" or "C"
            rank: Rank
            z: Optional central element as a vector string such as "e1+e2"
        """
        central = parse_vector(z, rank) if z else None
        return build_root_system(family, rank, central)

    def describe(self, family: str, rank: int, z: str | None = None) -> tuple[RootSystemResult, float]:
        def do_describe():
            return wrap_root_system(self.build(family, rank, z))

        return self.measure_time(do_describe)

    def weyl(
        self,
        family: str,
        rank: int,
        theta: Sequence[str] | None = None,
        w: str | None = None,
        list_elements: bool = False,
    ) -> tuple[WeylResult, float]:
        """
        Enumerate W_Theta and, when w is given, describe that element.

        theta=None means all simple roots (the full group W); an empty
        sequence means the trivial subgroup.

        Raises:
            ValidationError: If Theta is not a set of simple roots or w is malformed
            EnumerationCapError: If W_Theta exceeds settings.max_parabolic_size
        """
        rs = self.build(family, rank)

        def do_weyl():
            theta_roots = rs.simple_roots if theta is None else roots_of(rs, theta)
            w_theta = enumerate_parabolic(rs, theta_roots)
            payload = {
                "family": rs.family,
                "rank": rs.rank,
                "theta": root_strings(w_theta.theta),
                "size": len(w_theta),
                "longest": wrap_weyl_element(longest_element(rs)).model_dump(by_alias=True),
            }
            if list_elements:
                payload["elements"] = [wrap_weyl_element(x).model_dump(by_alias=True) for x in w_theta]
            if w is not None:
                element = WeylElement.parse(w, rs.rank)
                check_permutes_roots(element, rs)
                payload["element"] = wrap_weyl_element(element).model_dump(by_alias=True)
                payload["inverse"] = wrap_weyl_element(inverse(element)).model_dump(by_alias=True)
                payload["length"] = length(element, rs)
                payload["imageOfSimpleRoots"] = [str(apply_root(element, a)) for a in rs.simple_roots]
            return WeylResult.model_validate(payload)

        return self.measure_time(do_weyl)
