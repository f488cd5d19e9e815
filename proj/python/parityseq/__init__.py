"""Integer sequences whose parity follows the Thue-Morse master sequence m."""

from ._core import *  # noqa: F401,F403
from ._core import __version__, BFileError  # noqa: F401
