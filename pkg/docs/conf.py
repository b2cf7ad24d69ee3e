# Configuration file for the Sphinx documentation builder.
#
# This file only contains a selection of the most common options. For a full
# list see the documentation:
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import datetime
import os

# cyclorank: turn off progress bars
os.environ["CYCLORANK_VERBOSE"] = "false"

# -- Project information -----------------------------------------------------

project = "cyclorank"
year = datetime.date.today().year
copyright = f"{year}, the cyclorank developers"
author = "the cyclorank developers"


# -- General configuration ---------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.napoleon",
    "sphinx.ext.viewcode",
    "sphinx.ext.autosummary",
    "sphinx.ext.intersphinx",
    "sphinx.ext.mathjax",
    "sphinx_copybutton",
    "sphinx_design",
]
source_suffix = {
    ".rst": "restructuredtext",
}
intersphinx_mapping = {
    "numpy": ("https://numpy.org/doc/stable/", None),
    "scipy": ("https://docs.scipy.org/doc/scipy/", None),
    "sympy": ("https://docs.sympy.org/latest/", None),
    "python": ("https://docs.python.org/3/", None),
}

templates_path = ["_templates"]
exclude_patterns = ["_build", "Thumbs.db", ".DS_Store"]

# -- Options for HTML output -------------------------------------------------

html_theme = "pydata_sphinx_theme"
html_title = "cyclorank"
html_theme_options = {
    "logo": {"text": "cyclorank"},
}

# -- Options for autodoc -----------------------------------------------------

autodoc_member_order = "bysource"
napoleon_use_rtype = False
