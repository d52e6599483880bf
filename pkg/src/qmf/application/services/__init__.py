"""
src.qmf.application.services - QMF Application Services module.
"""

from .qmf_service import QMFService

__all__ = [
    "QMFService",
]
