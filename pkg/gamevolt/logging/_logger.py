from __future__ import annotations

import logging
from collections.abc import Mapping

from ._levels import TRACE, VERBOSE


class Logger(logging.Logger):
    """Adds levels below DEBUG: VERBOSE for per-clip work, TRACE for per-batch progress."""

    def verbose(self, msg: object, *args: object, **kwargs: object) -> None:
        self._log_below_debug(VERBOSE, msg, args, kwargs)

    def trace(self, msg: object, *args: object, **kwargs: object) -> None:
        self._log_below_debug(TRACE, msg, args, kwargs)

    def _log_below_debug(self, level: int, msg: object, args: tuple[object, ...], kwargs: Mapping[str, object]) -> None:
        if not self.isEnabledFor(level):
            return
        options = dict(kwargs)
        # +2 skips this helper and the public level method
        stacklevel = int(options.pop("stacklevel", 1))  # type: ignore[call-overload]
        self._log(level, msg, args, stacklevel=stacklevel + 2, **options)  # type: ignore[arg-type]
