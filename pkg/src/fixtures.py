"""
Reference Data
Hand-transcribed product table of g(3), used to check the sign algorithm.
"""

G3_ORDER = ("1", "e1", "e2", "e3", "i", "j", "k", "z")

G3_PRODUCT_TABLE = (
    ("1", "e1", "e2", "e3", "i", "j", "k", "z"),
    ("e1", "-1", "i", "j", "-e2", "-e3", "z", "-k"),
    ("e2", "-i", "-1", "k", "e1", "-z", "-e3", "j"),
    ("e3", "-j", "-k", "-1", "z", "e1", "e2", "-i"),
    ("i", "e2", "-e1", "z", "-1", "k", "-j", "-e3"),
    ("j", "e3", "-z", "-e1", "-k", "-1", "i", "e2"),
    ("k", "z", "e3", "-e2", "j", "-i", "-1", "-e1"),
    ("z", "-k", "j", "-i", "-e3", "e2", "-e1", "1"),
)
