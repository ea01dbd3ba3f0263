"""Select the compiled Sturm kernels when built, else the pure-Python ones.

Set ``GENCARINENA_PURE_PYTHON=1`` to force the fallback.
"""
import os

BACKEND = "python"
if not os.environ.get("GENCARINENA_PURE_PYTHON"):
    try:
        from ._sturm import lowest_eigenvalues, sturm_count  # noqa: F401

        BACKEND = "cython"
    except ImportError:
        pass
if BACKEND == "python":
    from ._sturm_py import lowest_eigenvalues, sturm_count  # noqa: F401
