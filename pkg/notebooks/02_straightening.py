# coding: utf-8

# # Straightening monomials into the descent basis
#
# Every monomial is an integer combination of e_mu times a basis monomial.
# Re-expanding the combination gives back the monomial exactly.

# In[1]:

from coinv.groups import Permutation
from coinv.polyring import IntPolynomial, analyze_A, cmp_B, format_polynomial
from coinv.straighten import basis, graded_trace, normal_form, straighten


# ## The descent basis for n = 3

# In[2]:

for pi, m in basis("A", 3):
    print(pi, m)


# ## A worked expansion

# In[3]:

exp = straighten((2, 1, 1))
for coeff, mu, pi in exp.terms:
    print(f"{coeff:+d} * e_{mu} * a_{pi}")
print("re-expands exactly:", exp.expand() == IntPolynomial.monomial((2, 1, 1)))


# The leading term is read off the monomial itself.

# In[4]:

an = analyze_A((2, 1, 1))
print("index permutation", an.index_perm, " complementary partition", an.complementary)


# ## Type B
#
# Here e_mu is taken in the squares of the variables and the basis monomials
# carry the parity of every exponent.

# In[5]:

exp_b = straighten((0, 1, 5), "B")
for coeff, mu, sigma in exp_b.terms:
    print(f"{coeff:+d} * e_{mu}(x^2) * b_{sigma}")


# Ranking monomials with ties broken by the unsigned index permutation makes
# x2^5 x3 larger than x2 x3^5, although it shows up in the expansion above.
# With the signed index permutation the expansion is triangular.

# In[6]:

print(cmp_B((0, 5, 1), (0, 1, 5)), cmp_B((0, 5, 1), (0, 1, 5), signed=True))


# ## Normal forms and graded traces

# In[7]:

print(dict(normal_form((1, 0)).coeffs))
print(format_polynomial(graded_trace(Permutation((2, 3, 1)))))
