from dataclasses import dataclass

from autodiff.tensor import Tensor


@dataclass(frozen=True)
class StreamOutput:
    tokens: Tensor  # [L_o×D_o]

    @property
    def token_count(self) -> int:
        return self.tokens.shape[0]

    @property
    def dim(self) -> int:
        return self.tokens.shape[1]
