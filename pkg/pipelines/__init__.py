from .construction_verification import construction_verification

__all__ = ["construction_verification"]
