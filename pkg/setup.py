from setuptools import setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        ["src/epslie/_elim_cy.pyx"],
        language_level=3,
    )
except ImportError:
    # Pure-Python fallback kernel is always available; the extension is optional.
    ext_modules = []

setup(ext_modules=ext_modules)
