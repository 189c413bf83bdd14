"""
Shared console for progress messages.

Progress goes to stderr so that tables written to stdout stay byte-clean.
"""

from rich.console import Console

console = Console(stderr=True, highlight=False)

_quiet = False


def set_quiet(quiet: bool) -> None:
    """Silence (or re-enable) progress messages."""
    global _quiet
    _quiet = quiet


def report(message: str) -> None:
    """Print a progress line unless quiet mode is on."""
    if not _quiet:
        console.print(message, markup=False)
