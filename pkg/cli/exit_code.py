from enum import IntEnum


class ExitCode(IntEnum):
    SUCCESS = 0
    FAILURE = 1  # unexpected error, logged with traceback
    USAGE = 2  # config, usage, input or I/O error
    NUMERIC = 3  # training aborted on a non-finite loss
