from os import PathLike as OsPathLike
from typing import Any

type PathLike = OsPathLike[str] | str
type JsonLike = dict[str, Any]
type YamlLike = JsonLike
