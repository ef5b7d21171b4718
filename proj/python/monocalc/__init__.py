from ._monocalc import *  # noqa: F401,F403
from ._monocalc import __doc__  # noqa: F401
