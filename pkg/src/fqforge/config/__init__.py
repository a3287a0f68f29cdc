from .config import FqForgeConfig, VerifySettings

__all__ = ["FqForgeConfig", "VerifySettings"]
