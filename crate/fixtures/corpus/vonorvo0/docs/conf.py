project = "vonorvo"
extensions = ["sphinx.ext.autodoc"]
html_theme = "alabaster"
