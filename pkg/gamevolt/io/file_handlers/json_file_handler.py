from gamevolt.io.file_handlers.file_handler import FileHandler
from gamevolt.io.typing import JsonLike, PathLike
from gamevolt.io.utils import load_json, save_json, try_load_json


class JsonFileHandler(FileHandler):
    extensions = (".json",)

    def load(self, path: PathLike) -> JsonLike:
        return load_json(path)

    def try_load(self, path: PathLike) -> JsonLike:
        return try_load_json(path)

    def save(self, data: JsonLike, path: PathLike) -> None:
        save_json(data, path)
