project = "miven"
extensions = ["sphinx.ext.autodoc"]
html_theme = "alabaster"
