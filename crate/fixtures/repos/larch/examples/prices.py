from larch.stats import summarize

rows = [{"price": "9.5"}, {"price": "12"}]
print(summarize(rows, "price"))
