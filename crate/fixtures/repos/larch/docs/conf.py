project = "larch"
extensions = []
html_theme = "alabaster"
