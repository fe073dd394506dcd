from __future__ import annotations

import queue
import threading
from collections.abc import Callable, Iterator, Sequence

from training.prepared_sample import PreparedSample
from video.video_clip import VideoClip

_DONE = object()


class BatchPrefetcher:
    """
    Prepares batches on a producer thread through a bounded queue. Batches come out
    in the order given, whatever the depth; depth 0 prepares them inline.
    """

    def __init__(self, prepare: Callable[[VideoClip], PreparedSample], depth: int) -> None:
        self._prepare = prepare
        self._depth = depth

    def _build(self, clips: Sequence[VideoClip], batch: Sequence[int]) -> list[PreparedSample]:
        return [self._prepare(clips[i]) for i in batch]

    def iterate(self, clips: Sequence[VideoClip], batches: Sequence[Sequence[int]]) -> Iterator[list[PreparedSample]]:
        if self._depth == 0:
            for batch in batches:
                yield self._build(clips, batch)
            return

        slots: queue.Queue[object] = queue.Queue(maxsize=self._depth)
        stop = threading.Event()

        def produce() -> None:
            try:
                for batch in batches:
                    if stop.is_set():
                        return
                    slots.put(self._build(clips, batch))
            except BaseException as e:  # handed to the consumer
                slots.put(e)
                return
            slots.put(_DONE)

        worker = threading.Thread(target=produce, name="batch-prefetch", daemon=True)
        worker.start()
        try:
            while True:
                item = slots.get()
                if item is _DONE:
                    return
                if isinstance(item, BaseException):
                    raise item
                yield item  # type: ignore[misc]
        finally:
            stop.set()
            while worker.is_alive():
                try:
                    slots.get_nowait()
                except queue.Empty:
                    worker.join(timeout=0.05)
