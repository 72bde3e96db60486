# Sphinx configuration of the iwasawa documentation.
# https://www.sphinx-doc.org/en/master/usage/configuration.html

import sys

from pathlib import Path

# iwasawa itself, for autodoc and the release number
sys.path.insert(0, Path("..").absolute().as_posix())
# The iwasawadoc extension
sys.path.append(Path(Path(__file__).parent, "_ext").absolute().as_posix())

project = "iwasawa"
copyright = "2026, iwasawa contributors"
author = "iwasawa contributors"

version = "0.1"
try:
    from iwasawa import get_version
except ImportError:
    release = version
else:
    release = get_version()

extensions = [
    "iwasawadoc",
    "sphinx.ext.autodoc",
    "sphinx.ext.autosectionlabel",
    "sphinx.ext.mathjax",
    "sphinx.ext.viewcode",
    "sphinx_rtd_theme",
]

source_suffix = ".txt"
master_doc = "contents"
exclude_patterns = ["_build", "requirements.txt"]

add_function_parentheses = True
add_module_names = False
modindex_common_prefix = ["iwasawa."]

# Only top level sections get a label: section titles repeat across pages
autosectionlabel_maxdepth = 1

html_theme = "sphinx_rtd_theme"
