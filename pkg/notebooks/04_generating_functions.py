# coding: utf-8

# # Generating functions as truncated series
#
# Identities between rational functions are checked as equalities of
# truncated multivariate power series with exact rational coefficients.

# In[1]:

from coinv.series import (
    TruncatedSeries, iota, partition_product, verify_cor_gessel, verify_lemma_tau,
    verify_thm_7_1, verify_thm_7_2, verify_thm_7_3, verify_thm_7_4, verify_trace_claims,
)


# ## Series arithmetic

# In[2]:

one = TruncatedSeries.one(2, 5)
g = TruncatedSeries.geometric((1, 1), 5)
print(g.items())
print(((one - TruncatedSeries.monomial((1, 1), 5)) * g) == one)


# Partitions with at most two parts, as a product of geometric series:

# In[3]:

print(partition_product(2, 4).items())


# iota sends z^lambda to q^(conjugate of lambda):

# In[4]:

z = TruncatedSeries(2, 4, {(2, 0): 1, (1, 1): 1})
print(iota(z, 2).items())


# ## The identities
#
# Each verify_* call returns a report with a status and the number of
# compared terms.

# In[5]:

for report in [verify_thm_7_1(4), verify_thm_7_2(3, 8), verify_thm_7_3(3, 8), verify_thm_7_4(3, 8),
               verify_cor_gessel(4, 5), verify_lemma_tau((3, 1), 6),
               verify_trace_claims(3, 6, "A"), verify_trace_claims(2, 6, "B")]:
    print(report)
