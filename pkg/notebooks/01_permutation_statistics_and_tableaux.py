# coding: utf-8

# # Permutation statistics and tableaux
#
# Signed permutations, their descent vectors, and standard Young tableaux with
# their descent sets.  Everything is plain tuples; nothing is floating point.

# In[1]:

from collections import Counter

from coinv.groups import SignedPermutation, enumerate_group, perm_stats, signed_stats
from coinv.shapes import BiTableau, StandardTableau, enumerate_SYT, lambda_S1S2


# ## Type A statistics
#
# The descent vector d(pi) counts the descents at or after each position.

# In[2]:

st = perm_stats((2, 6, 1, 3, 5, 4, 7))
print("Des =", st.des_set, " d =", st.d_vector, " maj =", st.maj)


# ## Signed permutations
#
# f_i = 2 d_i + eps_i, and fmaj is the sum of the f-vector.

# In[3]:

sigma = SignedPermutation((-6, -2, 1, 3, -5, 4, 7))
s = signed_stats(sigma)
print("Des =", s.des_set, " Neg =", s.neg_set, " f =", s.f_vector, " fmaj =", s.fmaj)


# The pairs (ndes, nmaj) and (fdes, fmaj) have the same joint distribution.

# In[4]:

for n in range(1, 5):
    lhs = Counter((signed_stats(g).ndes, signed_stats(g).nmaj) for g in enumerate_group("B", n))
    rhs = Counter((signed_stats(g).fdes, signed_stats(g).fmaj) for g in enumerate_group("B", n))
    print(n, lhs == rhs, sum(lhs.values()))


# ## Tableaux

# In[5]:

T = StandardTableau(((1, 3, 4, 6, 9), (2, 7, 8, 11), (5, 10)))
print("Des(T) =", T.des_set, " maj(T) =", T.maj)

bi = BiTableau(((2, 5, 6), (3,)), ((1, 7), (4, 8)))
print("Des =", bi.des_set, " Neg =", bi.neg_set, " fmaj =", bi.fmaj)


# Tableaux of shape (3,2) grouped by descent set:

# In[6]:

print(Counter(t.des_set for t in enumerate_SYT((3, 2))))


# ## The partition attached to descent data
#
# Not every pair (S1, S2) gives a partition, and a partition is not always
# realised by a signed permutation: steps of 3 never occur.

# In[7]:

for S1, S2 in [((1,), ()), ((), (2,)), ((1,), (1,))]:
    lam, ok = lambda_S1S2(S1, S2, 3)
    print(S1, S2, lam, "partition" if ok else "not a partition")
