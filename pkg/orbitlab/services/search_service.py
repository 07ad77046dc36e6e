"""
Witness search service.
"""

from orbitlab.core.logging import get_logger
from orbitlab.schemas.sp2 import WitnessModel
from orbitlab.services.base import BaseService
from orbitlab.sp2.search import get_claim, search_claim
from orbitlab.wrappers import wrap_witness

logger = get_logger("services.search")


class SearchService(BaseService):
    """Service for the intersection claims of Sp(2,R)."""

    def search(
        self,
        claim: str,
        s2: float = 0.0,
        seed: int | None = None,
        tol: float | None = None,
        budget: int | None = None,
        starts: int | None = None,
        workers: int | None = None,
    ) -> tuple[WitnessModel, float]:
        """
        Search for a witness of a named claim at boundary_point(s2).

        Raises:
            ValidationError: For an unknown claim or s2 out of range
            WitnessNotFoundError: If the search budget is exhausted
        """
        resolved = get_claim(claim)
        logger.info(f"Searching claim {resolved.name}: {resolved}")

        def do_search():
            witness = search_claim(
                claim, s2, seed=seed, tol=tol, budget=budget, starts=starts, workers=workers
            )
            return wrap_witness(witness, mirror=resolved.mirror, s2=s2)

        return self.measure_time(do_search)
