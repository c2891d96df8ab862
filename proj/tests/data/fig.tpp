2
9 7 6 5 2 1
