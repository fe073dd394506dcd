from gamevolt.io.file_handlers.file_handler import FileHandler
from gamevolt.io.typing import PathLike, YamlLike
from gamevolt.io.utils import load_yaml, save_yaml, try_load_yaml


class YamlFileHandler(FileHandler):
    extensions = (".yml", ".yaml")

    def load(self, path: PathLike) -> YamlLike:
        return load_yaml(path)

    def try_load(self, path: PathLike) -> YamlLike:
        return try_load_yaml(path)

    def save(self, data: YamlLike, path: PathLike) -> None:
        save_yaml(data, path)
