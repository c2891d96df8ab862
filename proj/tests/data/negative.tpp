2
3 3 3 1 1 1
