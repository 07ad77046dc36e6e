"""
Services for orbitlab.
"""

from orbitlab.services.base import BaseService
from orbitlab.services.descriptor_service import DescriptorService
from orbitlab.services.root_service import RootSystemService
from orbitlab.services.search_service import SearchService
from orbitlab.services.sp2_service import Sp2Service

__all__ = [
    "BaseService",
    "DescriptorService",
    "RootSystemService",
    "SearchService",
    "Sp2Service",
]
