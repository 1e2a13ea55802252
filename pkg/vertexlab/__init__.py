from importlib.metadata import version as _version

try:
    __version__ = _version("vertexlab")
except Exception:
    # Local copy or not installed with setuptools.
    __version__ = "9999"
