"""Settings used by searches, property runs and the command line.

Defaults live here. They can be overridden by the data file
`config/settings.txt` (or any file given to `Settings.load`), see
`markoff.mixins.enhanced.EnhancedWithData` for the format.

"""

from markoff.mixins.enhanced import EnhancedWithData

DEFAULT_SETTINGS_FILE = "config/settings.txt"


class Settings(EnhancedWithData):

    """Tunable parameters, all optional."""

    allow_no_data_file = True
    specifications = {
        "max_window": "int",
        "window_periods": "int",
        "max_period": "int",
        "alphabet_max": "int",
        "trials": "int",
        "seed": "int",
        "workers": "int",
        "refine_bits": "int",
        "decimal_digits": "int",
        "lyndon_batch": "int",
        "word_lengths": "interval",
        "prune_banned": "bool",
    }

    max_window: int = 64
    window_periods: int = 2
    max_period: int = 12
    alphabet_max: int = 4
    trials: int = 1000
    seed: int = 0
    workers: int = 1
    refine_bits: int = 40
    decimal_digits: int = 30
    lyndon_batch: int = 4096
    word_lengths: tuple[int, int] = (8, 16)
    prune_banned: bool = True
