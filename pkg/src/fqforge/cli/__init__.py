"""FqForge CLI 模块"""

from .main import cli, main

__all__ = ["cli", "main"]
