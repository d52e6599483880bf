"""
src.shared.application.services - Shared Kernel Application Services module.
"""

from .base_service import BaseService

__all__ = [
    "BaseService",
]
