# coding: utf-8

# # Characters and descent representations
#
# The span of basis monomials with a fixed descent set carries a representation.
# Its multiplicities are counts of tableaux with that descent set.

# In[1]:

from coinv.reptheory import (
    character_table_csv, descent_rep_character, format_label, inner_product, multiplicity,
    sn_character,
)
from coinv.shapes import partitions_of


# ## A character table

# In[2]:

print(character_table_csv("A", 4))


# ## Decomposing R_S for n = 4

# In[3]:

n = 4
for S in [(), (1,), (2,), (1, 3), (1, 2, 3)]:
    chi = descent_rep_character("A", n, S)
    parts = {format_label(mu): inner_product(chi, sn_character(mu)) for mu in partitions_of(n)}
    print(S, {k: int(v) for k, v in parts.items() if v})


# Each multiplicity is checked against the tableau count.

# In[4]:

m = multiplicity("A", 4, (2,), (2, 2))
print(m, m.agree)


# ## Type B

# In[5]:

print(character_table_csv("B", 2))
m = multiplicity("B", 2, (1,), ((1,), (1,)), S2=(2,))
print(m, m.agree)
