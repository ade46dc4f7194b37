# coding: utf-8

# # The command-line driver
#
# The same checks are reachable through ``python -m coinv``.  Each call prints
# one JSON run report; the exit status is 0 on pass, 1 on fail and 2 on error.

# In[1]:

import json
import subprocess
import sys


def coinv(*args):
    proc = subprocess.run([sys.executable, "-m", "coinv", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout


# In[2]:

code, out = coinv("verify", "thm7.1", "--n", "3")
print(code, json.loads(out)["counts"])


# In[3]:

code, out = coinv("straighten", "--monomial", "2,1,1")
print(json.dumps(json.loads(out)["payload"], indent=1))


# In[4]:

code, out = coinv("table", "characters-a", "--n", "3", "--format", "csv")
print(out)


# A request above the desk bound is refused with exit status 2:

# In[5]:

code, out = coinv("verify", "thm7.1", "--n", "9")
print(code, json.loads(out)["payload"])
