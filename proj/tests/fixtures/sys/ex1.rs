# A blank constant that concatenation ignores on either side.
constants: a []
~ [] x1 , x1
~ x1 [] , x1
