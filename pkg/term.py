from rich.console import Console

import config

# Data goes to stdout untouched; status and diagnostics go to stderr with markup.
out = Console(highlight=False, soft_wrap=True)
err = Console(stderr=True, highlight=False)


def table_console() -> Console:
    """Colourless fixed-width console for aligned tables that must be byte-stable."""
    return Console(width=config.TEXT_TABLE_WIDTH, color_system=None, highlight=False, soft_wrap=True)
