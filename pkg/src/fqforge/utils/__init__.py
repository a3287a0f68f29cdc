from .progress_indicator import VerificationProgress

__all__ = ["VerificationProgress"]
