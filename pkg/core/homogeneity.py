# core/homogeneity.py
"""
Two-sample homogeneity tests on next-symbol counts
"""
import numpy as np
from scipy.special import kolmogorov
from scipy.stats import chi2_contingency

from domains.enums import HomogeneityTest


def chi_squared_pvalue(counts_a, counts_b) -> float:
    """Pearson chi-squared test on a 2 x k contingency table; empty columns dropped"""
    table = np.array([counts_a, counts_b], dtype=float)
    table = table[:, table.sum(axis=0) > 0]
    if table.shape[1] < 2 or np.any(table.sum(axis=1) == 0):
        # A single observed symbol on both sides: identical distributions
        return 1.0
    _, pvalue, _, _ = chi2_contingency(table, correction=False)
    return float(pvalue)


def ks_pvalue(counts_a, counts_b) -> float:
    """Kolmogorov-Smirnov two-sample test on the empirical next-symbol CDFs"""
    a = np.asarray(counts_a, dtype=float)
    b = np.asarray(counts_b, dtype=float)
    n_a, n_b = a.sum(), b.sum()
    if n_a == 0 or n_b == 0:
        return 1.0
    d = float(np.max(np.abs(np.cumsum(a) / n_a - np.cumsum(b) / n_b)))
    if d == 0.0:
        return 1.0
    n_eff = np.sqrt(n_a * n_b / (n_a + n_b))
    return float(kolmogorov((n_eff + 0.12 + 0.11 / n_eff) * d))


def homogeneity_pvalue(test: HomogeneityTest, counts_a, counts_b) -> float:
    """p-value that both count vectors come from the same distribution"""
    if HomogeneityTest(test) is HomogeneityTest.KS:
        return ks_pvalue(counts_a, counts_b)
    return chi_squared_pvalue(counts_a, counts_b)
