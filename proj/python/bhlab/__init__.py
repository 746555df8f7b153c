try:
    from ._bhlab import *  # noqa: F401,F403
    from ._bhlab import __doc__  # noqa: F401
except ImportError:  # pragma: no cover
    from _bhlab import *  # noqa: F401,F403
