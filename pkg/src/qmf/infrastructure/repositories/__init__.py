"""
src.qmf.infrastructure.repositories - QMF Infrastructure Repositories module.
"""

from .qmf_output_repository import QMFOutputRepository

__all__ = [
    "QMFOutputRepository",
]
