from hypothesis import strategies as st

from asmdpp.laurent import LaurentPoly


def polys(n: int = 2, max_terms: int = 4, lo: int = -2, hi: int = 2):
    exps = st.tuples(*[st.integers(lo, hi)] * (n + 3))
    coeffs = st.integers(-5, 5).filter(bool)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: LaurentPoly.from_terms(n, d))


def nonneg_polys(n: int = 2, max_terms: int = 3):
    return polys(n, max_terms, lo=0, hi=2)
