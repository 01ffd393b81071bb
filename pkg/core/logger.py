"""Run log for verification pipelines.

Entries stay in a bounded in-memory ring and, once `configure` names a file,
are appended there as one line each. Fields bound with `Logger.context`
(typically the graph id and the command) are attached to every entry made
inside the block, including entries from the core algorithms.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from datetime import datetime
from pathlib import Path
from typing import Iterator, List, NamedTuple, Optional, Tuple

from .constants import MAX_LOG_ENTRIES

Fields = Tuple[Tuple[str, str], ...]

_bound: ContextVar[Fields] = ContextVar("log_fields", default=())


class LogEntry(NamedTuple):
    timestamp: datetime
    level: str
    message: str
    fields: Fields = ()

    def render(self, stamp: str) -> str:
        suffix = "".join(f" {key}={value}" for key, value in self.fields)
        return f"{stamp} {self.level}: {self.message}{suffix}"


class Logger:
    """Leveled logger with an in-memory ring and an optional log file."""

    def __init__(self) -> None:
        self.logs: List[LogEntry] = []
        self.max_logs = MAX_LOG_ENTRIES
        self.log_file: Optional[Path] = None
        self.debug_enabled = False

    def configure(self, log_file: Optional[Path], debug: bool = False) -> None:
        """Set the log file (None keeps entries in memory only) and debug mode."""
        self.log_file = log_file
        self.debug_enabled = debug

    @contextmanager
    def context(self, **fields: object) -> Iterator[None]:
        """Attach key=value fields to every entry logged inside the block."""
        token = _bound.set(_bound.get() + tuple((key, str(value)) for key, value in fields.items()))
        try:
            yield
        finally:
            _bound.reset(token)

    def log(self, level: str, message: str) -> None:
        entry = LogEntry(datetime.now(), level, message, _bound.get())
        self.logs.append(entry)
        if len(self.logs) > self.max_logs:
            del self.logs[: len(self.logs) - self.max_logs]
        if self.log_file is not None:
            self._append(entry)

    def info(self, message: str) -> None:
        self.log("INFO", message)

    def error(self, message: str) -> None:
        self.log("ERROR", message)

    def success(self, message: str) -> None:
        self.log("SUCCESS", message)

    def debug(self, message: str) -> None:
        """Log a debug message; dropped unless debug mode is on."""
        if self.debug_enabled:
            self.log("DEBUG", message)

    def warning(self, message: str) -> None:
        self.log("WARNING", message)

    def get_recent_logs(self, count: int = 10) -> List[str]:
        """The last `count` in-memory entries, formatted for display."""
        return [entry.render(f"[{entry.timestamp:%H:%M:%S}]") for entry in self.logs[-count:]]

    def tail(self, count: int = 20) -> List[str]:
        """The last lines of the log file, or of memory if there is no file yet."""
        if self.log_file is None or not self.log_file.exists():
            return self.get_recent_logs(count)
        try:
            lines = self.log_file.read_text(encoding="utf-8").splitlines()
        except OSError:
            return self.get_recent_logs(count)
        return lines[-count:]

    def clear(self) -> None:
        """Drop the in-memory entries; the log file is kept."""
        self.logs.clear()

    def _append(self, entry: LogEntry) -> None:
        assert self.log_file is not None
        try:
            self.log_file.parent.mkdir(parents=True, exist_ok=True)
            with self.log_file.open("a", encoding="utf-8") as f:
                f.write(entry.render(entry.timestamp.isoformat()) + "\n")
        except OSError:
            # A broken log file must not abort a verification run
            pass


# Global logger instance
logger = Logger()
