"""Published y-variable formulas for the B2 and G2 fixtures, transcribed by hand.

Entry t is y_{k_t}[t] for the alternating sequence 1, 2, 1, 2, ...
"""

B2_Y = [
    "y1",
    "y2*(1 + alpha*y1 + y1**2)",
    "y1**-1*(1 + y2 + alpha*y1*y2 + y1**2*y2)",
    "y1**-2*y2**-1*(1 + 2*y2 + y2**2 + alpha*y1*y2 + alpha*y1*y2**2 + y1**2*y2**2)",
    "y1**-1*y2**-1*(1 + y2)",
    "y2**-1",
]

G2_Y = [
    "y1",
    "y2*(1 + alpha*y1 + beta*y1**2 + y1**3)",
    "y1**-1*(1 + y2 + alpha*y1*y2 + beta*y1**2*y2 + y1**3*y2)",
    "y1**-3*y2**-1*(1 + 3*y2 + 3*y2**2 + y2**3 + 2*alpha*y1*y2 + 4*alpha*y1*y2**2"
    " + 2*alpha*y1*y2**3 + beta*y1**2*y2 + alpha**2*y1**2*y2**2 + 3*beta*y1**2*y2**2"
    " + alpha**2*y1**2*y2**3 + 2*beta*y1**2*y2**3 + alpha*beta*y1**3*y2**2"
    " + 2*alpha*beta*y1**3*y2**3 + 3*y1**3*y2**2 + 2*y1**3*y2**3 + alpha*y1**4*y2**2"
    " + 2*alpha*y1**4*y2**3 + beta**2*y1**4*y2**3 + 2*beta*y1**5*y2**3 + y1**6*y2**3)",
    "y1**-2*y2**-1*(1 + 2*y2 + y2**2 + alpha*y1*y2 + alpha*y1*y2**2 + beta*y1**2*y2**2"
    " + y1**3*y2**2)",
    "y1**-3*y2**-2*(1 + 3*y2 + 3*y2**2 + y2**3 + alpha*y1*y2 + 2*alpha*y1*y2**2"
    " + alpha*y1*y2**3 + beta*y1**2*y2**2 + beta*y1**2*y2**3 + y1**3*y2**3)",
    "y1**-1*y2**-1*(1 + y2)",
    "y2**-1",
]

B2_SIGNS = (1, 1, -1, -1, -1, -1)
G2_SIGNS = (1, 1, -1, -1, -1, -1, -1, -1)
