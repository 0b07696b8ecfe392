# Configuration file for the Sphinx documentation builder.
#
# For the full list of options see
# https://www.sphinx-doc.org/en/master/usage/configuration.html

# -- Path setup --------------------------------------------------------------

import os
import sys

sys.path.insert(0, os.path.abspath(".."))

import qchev  # noqa: E402

# -- Project information -----------------------------------------------------

project = "qchev"
copyright = "2026, the qchev contributors"
author = "qchev contributors"

# The short X.Y version
version = qchev.__version__
# The full version, including alpha/beta/rc tags
release = qchev.__version__

# -- General configuration ---------------------------------------------------

needs_sphinx = "2.0"  # based on setup.cfg requirements

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "myst_parser",
    "numpydoc",
    "sphinxarg.ext",
    "sphinx_copybutton",
]

numpydoc_show_class_members = False
autoclass_content = "class"

templates_path = ["_templates"]

source_suffix = {
    ".rst": "restructuredtext",
    ".md": "markdown",
}

language = "en"

exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "furo"
html_show_sourcelink = False
html_show_sphinx = False
htmlhelp_basename = "qchev"

# -- intersphinx -------------------------------------------------------------
intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "numpy": ("https://numpy.org/doc/stable", None),
}
intersphinx_timeout = 5

# -- autosectionlabels -------------------------------------------------------
autosectionlabel_prefix_document = True

# -- numpydoc ----------------------------------------------------------------
numpydoc_class_members_toctree = False
numpydoc_attributes_as_param_list = False
numpydoc_xref_param_type = True
numpydoc_xref_aliases = {
    "Fraction": "fractions.Fraction",
    "array": "numpy.ndarray",
    "bool": ":class:`python:bool`",
}
numpydoc_xref_ignore = {"of", "optional", "or"}
