"""Version information for qchev."""

__version__ = '0.1.0'


def get_versions():
    """
    Return version information as a dictionary.

    Returns
    -------
    dict
        Dictionary with a ``version`` key.
    """
    return {
        'version': __version__,
        'full-revisionid': None,
        'dirty': False,
        'error': None,
        'date': None,
    }
