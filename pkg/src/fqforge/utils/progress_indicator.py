import threading
from contextlib import contextmanager
from typing import Iterator

from rich.console import Console
from rich.progress import BarColumn, MofNCompleteColumn, Progress, TextColumn, TimeElapsedColumn


class VerificationProgress:
    """验证网格的进度显示（单例），只写 stderr，不影响 stdout 文档"""

    _instance = None
    _initialized = False
    _lock = threading.RLock()

    def __new__(cls):
        if cls._instance is None:
            with cls._lock:
                if cls._instance is None:
                    cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        if self._initialized:
            return

        with self._lock:
            if not self._initialized:
                self._show_progress = True
                self.console = Console(stderr=True)
                self._progress: Progress | None = None
                self._task = None
                VerificationProgress._initialized = True

    @classmethod
    def get_instance(cls) -> "VerificationProgress":
        """获取单例实例"""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    def set_show_progress(self, show: bool):
        self._show_progress = show

    @property
    def enabled(self) -> bool:
        return self._show_progress and self.console.is_terminal

    @contextmanager
    def track(self, total: int, description: str = "verifying") -> Iterator["VerificationProgress"]:
        """在一次网格运行期间显示进度条，结束后清除"""
        if not self.enabled:
            yield self
            return
        with self._lock:
            self._progress = Progress(
                TextColumn("[cyan]{task.description}"),
                BarColumn(),
                MofNCompleteColumn(),
                TimeElapsedColumn(),
                console=self.console,
                transient=True,
            )
            self._task = self._progress.add_task(description, total=total)
        try:
            with self._progress:
                yield self
        finally:
            with self._lock:
                self._progress = None
                self._task = None

    def advance(self, label: str = ""):
        with self._lock:
            if self._progress is not None:
                if label:
                    self._progress.update(self._task, description=label)
                self._progress.advance(self._task)

    def note(self, message: str):
        if self.enabled:
            self.console.print(f"[dim]{message}[/dim]")
