project = "venra"
extensions = ["sphinx.ext.autodoc"]
html_theme = "alabaster"
