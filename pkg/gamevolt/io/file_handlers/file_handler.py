from abc import ABC, abstractmethod
from typing import ClassVar

from gamevolt.io.typing import JsonLike, PathLike


class FileHandler(ABC):
    extensions: ClassVar[tuple[str, ...]] = ()

    def handles(self, path: PathLike) -> bool:
        return str(path).lower().endswith(self.extensions)

    @abstractmethod
    def load(self, path: PathLike) -> JsonLike: ...

    @abstractmethod
    def try_load(self, path: PathLike) -> JsonLike: ...

    @abstractmethod
    def save(self, data: JsonLike, path: PathLike) -> None: ...
