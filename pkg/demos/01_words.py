"""Christoffel words in the plane: the starting point of everything else.

Run: python demos/01_words.py
"""

from christoffel import (
    are_conjugate,
    central_factorize,
    christoffel_word,
    is_palindrome,
    line_word,
    make_normal,
    periods_of,
    pirillo_condition,
)

w = christoffel_word(8, 5)
print("lower Christoffel word of (8, 5):", w)

first, m, last = central_factorize(w)
print(f"factorization: {first} . {m} . {last}")
print("central word is a palindrome:", is_palindrome(m))
print("periods of the central word:", periods_of(m))

# Pirillo: amb is Christoffel iff amb and bma are conjugate
print("amb and bma conjugate:", pirillo_condition(w))
print("a non-example, abab:", pirillo_condition("abab"))

# A Christoffel graph in dimension 2 is read along its two axis directions.
nd = make_normal((2, 5))
along_1 = line_word(nd, (0, 0), 1, 7)
along_2 = line_word(nd, (0, 0), 2, 7)
print(f"\ngraph of a={nd.a}: period along e1 = {along_1}, along e2 = {along_2}")
print("both are conjugates of Christoffel words:",
      are_conjugate(along_1, christoffel_word(5, 2)), are_conjugate(along_2, christoffel_word(2, 5)))
